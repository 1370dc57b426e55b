#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "matrix.hpp"

namespace gencomm {

// Alternating sum over all orderings of the factors:
//   sum over permutations p of sgn(p) * M[p(1)] * ... * M[p(m)].
// Enumerated with Heap's algorithm, tracking the sign across swaps; the
// factor count is capped at 13 (13! products is the desk-scale ceiling).
template <class T>
Matrix<T> standard_polynomial(std::span<const Matrix<T>> mats) {
  const int m = static_cast<int>(mats.size());
  if (m < 1) throw std::invalid_argument("standard_polynomial: need at least one matrix");
  if (m > 13) throw std::invalid_argument("standard_polynomial: more than 13 factors");
  const int n = mats[0].rows();
  for (const auto& a : mats)
    if (a.rows() != n || a.cols() != n)
      throw std::invalid_argument("standard_polynomial: dimension mismatch");

  const T zero = zero_like(mats[0](0, 0));
  Matrix<T> acc(n, n, zero);
  std::vector<int> idx(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) idx[static_cast<size_t>(i)] = i;
  std::vector<int> c(static_cast<size_t>(m), 0);
  int sign = 1;

  auto accumulate = [&] {
    Matrix<T> prod = mats[static_cast<size_t>(idx[0])];
    for (int i = 1; i < m; ++i) prod = prod * mats[static_cast<size_t>(idx[static_cast<size_t>(i)])];
    if (sign > 0)
      acc += prod;
    else
      acc -= prod;
  };

  accumulate();
  int i = 0;
  while (i < m) {
    if (c[static_cast<size_t>(i)] < i) {
      std::swap(idx[static_cast<size_t>(i % 2 == 0 ? 0 : c[static_cast<size_t>(i)])], idx[static_cast<size_t>(i)]);
      sign = -sign;
      accumulate();
      ++c[static_cast<size_t>(i)];
      i = 0;
    } else {
      c[static_cast<size_t>(i)] = 0;
      ++i;
    }
  }
  return acc;
}

template <class T>
Matrix<T> standard_polynomial(const std::vector<Matrix<T>>& mats) {
  return standard_polynomial(std::span<const Matrix<T>>(mats));
}

// Matrix of X -> [A_1, ..., A_k, X] on n x n matrices, written in the
// elementary-matrix basis E_ab ordered (a, b) lexicographically with a
// outer. Column (a, b) holds the coordinates of the image of E_ab.
template <class T>
struct OperatorMatrix {
  int n;
  Matrix<T> body;  // n^2 x n^2
};

template <class T>
OperatorMatrix<T> operator_matrix(std::span<const Matrix<T>> mats) {
  if (mats.empty()) throw std::invalid_argument("operator_matrix: need at least one matrix");
  const int n = mats[0].rows();
  for (const auto& a : mats)
    if (a.rows() != n || a.cols() != n) throw std::invalid_argument("operator_matrix: dimension mismatch");
  const T zero = zero_like(mats[0](0, 0));
  const T one = one_like(mats[0](0, 0));

  OperatorMatrix<T> op{n, Matrix<T>(n * n, n * n, zero)};
  std::vector<Matrix<T>> tuple(mats.begin(), mats.end());
  tuple.push_back(Matrix<T>(n, n, zero));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      tuple.back()(a, b) = one;
      Matrix<T> img = standard_polynomial(std::span<const Matrix<T>>(tuple));
      tuple.back()(a, b) = zero;
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) op.body(c * n + d, a * n + b) = img(c, d);
    }
  return op;
}

enum class FieldKind { kRational, kPrime };

struct FieldConfig {
  FieldKind kind = FieldKind::kPrime;
  std::uint64_t p = GfElem::kDefaultModulus;
};

// One random-sample experiment around the generic kernel dimension: draws
// trial tuples A_1..A_k with i.i.d. uniform entries and records the
// nullity of the operator matrix. The expected generic value is k for
// even k, k+1 for odd k with n even, and k+2 when both are odd; over a
// prime field the odd cases are recorded without being asserted.
struct ConjectureReport {
  int n = 0, k = 0, trials = 0;
  std::uint64_t seed = 0;
  FieldConfig field;
  int expected_nullity = 0;
  bool asserted = false;          // odd k is report-only
  std::vector<int> nullities;     // per trial, in trial order
  int agreeing = 0;
  bool ok = false;                // >= 95% of trials saw the expected value
};

ConjectureReport conjecture_experiment(int n, int k, FieldConfig field, int trials, std::uint64_t seed);

// Vanishing check for the alternating product with m >= 2n factors.
struct AlCheckReport {
  int n = 0, m = 0, trials = 0;
  std::uint64_t seed = 0;
  FieldConfig field;
  bool all_zero = false;
  std::vector<int> failing_trials;
};

AlCheckReport al_check(int n, int m, FieldConfig field, int trials, std::uint64_t seed);

// Uniform random square matrices used by the experiments: entries uniform
// on [0, p) over a prime field, uniform integers in [-10^6, 10^6] over Q.
Matrix<GfElem> random_gf_matrix(int n, SplitMix64& rng);
Matrix<Int> random_int_matrix(int n, SplitMix64& rng);

int worker_count();  // GENCOMM_WORKERS override, default 1

}  // namespace gencomm
