#include "commutator.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace gencomm {

Matrix<GfElem> random_gf_matrix(int n, SplitMix64& rng) {
  Matrix<GfElem> m(n, n, GfElem(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = GfElem::from_residue(rng.below(GfElem::modulus()));
  return m;
}

Matrix<Int> random_int_matrix(int n, SplitMix64& rng) {
  Matrix<Int> m(n, n, Int(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Int(static_cast<long>(rng.between(-1000000, 1000000)));
  return m;
}

int worker_count() {
  const char* env = std::getenv("GENCOMM_WORKERS");
  if (!env) return 1;
  int w = std::atoi(env);
  return w < 1 ? 1 : w;
}

namespace {

// Runs fn(trial) for each trial index; results land in a vector indexed by
// trial, so the report is identical however the work is scheduled.
template <class Fn>
std::vector<int> run_trials(int trials, Fn&& fn) {
  std::vector<int> out(static_cast<size_t>(trials), 0);
  int workers = worker_count();
  if (workers <= 1) {
    for (int t = 0; t < trials; ++t) out[static_cast<size_t>(t)] = fn(t);
    return out;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        int t = next.fetch_add(1);
        if (t >= trials) return;
        out[static_cast<size_t>(t)] = fn(t);
      }
    });
  for (auto& th : pool) th.join();
  return out;
}

int expected_generic_nullity(int n, int k) {
  if (k % 2 == 0) return k;
  return n % 2 == 0 ? k + 1 : k + 2;
}

}  // namespace

ConjectureReport conjecture_experiment(int n, int k, FieldConfig field, int trials, std::uint64_t seed) {
  if (k < 2 || k > 2 * n - 2)
    throw std::invalid_argument("conjecture_experiment: need 2 <= k <= 2n-2");
  if (trials < 1) throw std::invalid_argument("conjecture_experiment: trials must be positive");
  if (field.kind == FieldKind::kPrime && k % 2 == 0 && !admissible_characteristic(field.p, k / 2))
    throw std::invalid_argument("conjecture_experiment: characteristic divides 2(2r+1)r!");

  ConjectureReport rep;
  rep.n = n;
  rep.k = k;
  rep.trials = trials;
  rep.seed = seed;
  rep.field = field;
  rep.expected_nullity = expected_generic_nullity(n, k);
  rep.asserted = k % 2 == 0;

  if (field.kind == FieldKind::kPrime) {
    GfScope scope(field.p);
    rep.nullities = run_trials(trials, [&](int t) {
      SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(t));
      std::vector<Matrix<GfElem>> mats;
      mats.reserve(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i) mats.push_back(random_gf_matrix(n, rng));
      return nullity(operator_matrix(std::span<const Matrix<GfElem>>(mats)).body);
    });
  } else {
    rep.nullities = run_trials(trials, [&](int t) {
      SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(t));
      std::vector<Matrix<Int>> mats;
      mats.reserve(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i) mats.push_back(random_int_matrix(n, rng));
      return nullity(operator_matrix(std::span<const Matrix<Int>>(mats)).body);
    });
  }

  for (int v : rep.nullities)
    if (v == rep.expected_nullity) ++rep.agreeing;
  rep.ok = 20 * rep.agreeing >= 19 * rep.trials;
  return rep;
}

AlCheckReport al_check(int n, int m, FieldConfig field, int trials, std::uint64_t seed) {
  if (m < 2 * n)
    throw std::invalid_argument("al_check: need m >= 2n (probe shorter products with standard_polynomial)");
  if (trials < 1) throw std::invalid_argument("al_check: trials must be positive");

  AlCheckReport rep;
  rep.n = n;
  rep.m = m;
  rep.trials = trials;
  rep.seed = seed;
  rep.field = field;

  auto zero_for = [&](int t) -> bool {
    SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(t));
    if (field.kind == FieldKind::kPrime) {
      std::vector<Matrix<GfElem>> mats;
      for (int i = 0; i < m; ++i) mats.push_back(random_gf_matrix(n, rng));
      return standard_polynomial(std::span<const Matrix<GfElem>>(mats)).is_zero();
    }
    std::vector<Matrix<Int>> mats;
    for (int i = 0; i < m; ++i) mats.push_back(random_int_matrix(n, rng));
    return standard_polynomial(std::span<const Matrix<Int>>(mats)).is_zero();
  };

  if (field.kind == FieldKind::kPrime) {
    GfScope scope(field.p);
    for (int t = 0; t < trials; ++t)
      if (!zero_for(t)) rep.failing_trials.push_back(t);
  } else {
    for (int t = 0; t < trials; ++t)
      if (!zero_for(t)) rep.failing_trials.push_back(t);
  }
  rep.all_zero = rep.failing_trials.empty();
  return rep;
}

}  // namespace gencomm
