#pragma once

#include <concepts>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "poly.hpp"
#include "rational.hpp"
#include "rng.hpp"

namespace gencomm {

inline Rational zero_like(const Rational&) { return Rational(); }
inline GfElem zero_like(const GfElem&) { return GfElem(); }
inline Int zero_like(const Int&) { return Int(0); }
template <class F>
MPoly<F> zero_like(const MPoly<F>& p) {
  return MPoly<F>::zero(p.k(), p.n());
}

inline Rational one_like(const Rational&) { return Rational(1); }
inline GfElem one_like(const GfElem&) { return GfElem(1); }
inline Int one_like(const Int&) { return Int(1); }
template <class F>
MPoly<F> one_like(const MPoly<F>& p) {
  return MPoly<F>::constant(p.k(), p.n(), F(1));
}

// Dense row-major matrix over an exact scalar or polynomial ring.
template <class T>
class Matrix {
 public:
  Matrix(int rows, int cols, const T& fill)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
  }

  Matrix(int rows, int cols)
    requires std::default_initializable<T>
      : Matrix(rows, cols, T()) {}

  static Matrix identity(int n)
    requires std::constructible_from<T, int>
  {
    Matrix m(n, n, T(0));
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_zero() const {
    for (const T& x : e_)
      if (!gencomm::is_zero(x)) return false;
    return true;
  }

  Matrix operator-() const {
    Matrix out(*this);
    for (T& x : out.e_) x = -x;
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: product dimension mismatch");
    if (a.rows_ == 0 || b.cols_ == 0 || a.cols_ == 0) throw std::invalid_argument("Matrix: empty product");
    Matrix out(a.rows_, b.cols_, zero_like(a.e_[0]));
    for (int i = 0; i < a.rows_; ++i)
      for (int t = 0; t < a.cols_; ++t) {
        const T& ait = a(i, t);
        if (gencomm::is_zero(ait)) continue;
        for (int j = 0; j < b.cols_; ++j) {
          if (gencomm::is_zero(b(t, j))) continue;
          out(i, j) += ait * b(t, j);
        }
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  // Nonnegative integer power; square matrices only.
  Matrix pow(int e) const
    requires std::constructible_from<T, int>
  {
    if (!square()) throw std::invalid_argument("Matrix: pow of non-square matrix");
    if (e < 0) throw std::invalid_argument("Matrix: negative power");
    Matrix acc = identity(rows_);
    Matrix base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  template <class U, class Fn>
  Matrix<U> map(Fn&& fn, const U& fill) const {
    Matrix<U> out(rows_, cols_, fill);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(i, j) = fn((*this)(i, j));
    return out;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }

  int rows_, cols_;
  std::vector<T> e_;
};

// Exact rank. Integer and rational matrices go through fraction-free
// Bareiss elimination; prime-field matrices use plain division
// elimination. Pivots are the first nonzero entry in column order.
int rank(const Matrix<Int>& m);
int rank(const Matrix<Rational>& m);
int rank(const Matrix<GfElem>& m);

inline int nullity(const Matrix<Int>& m) { return m.cols() - rank(m); }
inline int nullity(const Matrix<Rational>& m) { return m.cols() - rank(m); }
inline int nullity(const Matrix<GfElem>& m) { return m.cols() - rank(m); }

// Exact determinant (Bareiss over Z, denominator-cleared Bareiss over Q).
Int det(const Matrix<Int>& m);
Rational det(const Matrix<Rational>& m);
GfElem det(const Matrix<GfElem>& m);

Matrix<GfElem> reduce_mod(const Matrix<Int>& m);
Matrix<Rational> to_rational(const Matrix<Int>& m);

// Rank of a matrix of multilinear polynomials over the rational function
// field of its variables.
struct PolyRank {
  int value = 0;
  bool lower_bound_only = false;  // true for the randomized strategy
  int trials = 0;
};

// Exact strategy: grows a set of pivot rows/columns whose minor is a
// nonzero polynomial (division-free; desk scale only).
PolyRank rank_poly_exact(const Matrix<PolyQ>& m);

// Randomized strategy: max rank of prime-field evaluations at `trials`
// uniform points, one derived seed per trial. One-sided: never exceeds the
// true rank, and misses it with probability at most deg/p per trial.
PolyRank rank_poly_randomized(const Matrix<PolyQ>& m, int trials, std::uint64_t seed);

nlohmann::json matrix_to_json(const Matrix<Int>& m);
Matrix<Int> matrix_from_json(const nlohmann::json& j);

template <class F>
nlohmann::json poly_matrix_to_json(const Matrix<MPoly<F>>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_json());
    rows.push_back(row);
  }
  return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

}  // namespace gencomm
