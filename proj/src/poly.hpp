#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gf.hpp"
#include "rational.hpp"

namespace gencomm {

// Product of variables x_{l,a}, at most one per group index l. A full
// degree-k monomial carries exactly one source per group 1..k; partial
// supports arise in intermediate matrix products, where each factor only
// touches its own group.
class Monomial {
 public:
  Monomial() = default;

  static Monomial unit() { return Monomial(); }
  static Monomial var(int group, int source) {
    Monomial m;
    m.factors_.emplace_back(group, source);
    return m;
  }

  const std::vector<std::pair<int, int>>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  int degree() const { return static_cast<int>(factors_.size()); }

  bool full(int k) const {
    if (degree() != k) return false;
    for (int i = 0; i < k; ++i)
      if (factors_[static_cast<size_t>(i)].first != i + 1) return false;
    return true;
  }

  // Source of the group-l variable; error if absent.
  int source_of(int group) const {
    for (const auto& [g, s] : factors_)
      if (g == group) return s;
    throw std::invalid_argument("Monomial: group " + std::to_string(group) + " absent");
  }

  // Merge of disjoint supports; a shared group is a multilinearity violation.
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    size_t i = 0, j = 0;
    while (i < a.factors_.size() && j < b.factors_.size()) {
      if (a.factors_[i].first == b.factors_[j].first)
        throw std::invalid_argument("Monomial: product would repeat group " + std::to_string(a.factors_[i].first));
      if (a.factors_[i].first < b.factors_[j].first)
        out.factors_.push_back(a.factors_[i++]);
      else
        out.factors_.push_back(b.factors_[j++]);
    }
    while (i < a.factors_.size()) out.factors_.push_back(a.factors_[i++]);
    while (j < b.factors_.size()) out.factors_.push_back(b.factors_[j++]);
    return out;
  }

  auto operator<=>(const Monomial&) const = default;

  std::string str() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& [g, a] : factors_) {
      if (!s.empty()) s += "*";
      s += "x_{" + std::to_string(g) + "," + std::to_string(a) + "}";
    }
    return s;
  }

 private:
  std::vector<std::pair<int, int>> factors_;  // sorted by group, unique groups
};

// Sparse multilinear polynomial over F in the variable grid x_{l,a},
// l in 1..k, a in 0..n-1. Stored coefficients are never zero. Values are
// immutable in practice: every operation returns a fresh polynomial.
template <class F>
class MPoly {
 public:
  MPoly(int k, int n) : k_(k), n_(n) {
    if (k < 0 || n < 1) throw std::invalid_argument("MPoly: bad shape");
  }

  static MPoly zero(int k, int n) { return MPoly(k, n); }
  static MPoly constant(int k, int n, const F& c) {
    MPoly p(k, n);
    if (!gencomm::is_zero(c)) p.terms_.emplace(Monomial::unit(), c);
    return p;
  }
  static MPoly variable(int k, int n, int group, int source) {
    MPoly p(k, n);
    if (group < 1 || group > k || source < 0 || source >= n)
      throw std::invalid_argument("MPoly: variable out of range");
    p.terms_.emplace(Monomial::var(group, source), F(1));
    return p;
  }

  int k() const { return k_; }
  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, F>& terms() const { return terms_; }

  F coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? F(0) : it->second;
  }

  void add_term(const Monomial& m, const F& c) {
    for (const auto& [g, a] : m.factors())
      if (g < 1 || g > k_ || a < 0 || a >= n_) throw std::invalid_argument("MPoly: term outside shape");
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (gencomm::is_zero(it->second)) terms_.erase(it);
    } else if (gencomm::is_zero(it->second)) {
      terms_.erase(it);
    }
  }

  MPoly operator-() const {
    MPoly out(k_, n_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }

  MPoly& operator+=(const MPoly& o) {
    check_shape(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    check_shape(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

  MPoly scaled(const F& c) const {
    MPoly out(k_, n_);
    if (gencomm::is_zero(c)) return out;
    for (const auto& [m, co] : terms_) out.terms_.emplace(m, co * c);
    return out;
  }

  // Product of polynomials with disjoint group supports (the only product
  // the multilinear setting needs; overlapping supports throw).
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_shape(b);
    MPoly out(a.k_, a.n_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  // point[(l-1)*n + a] is the value of x_{l,a}; point covers all k*n variables.
  F eval(std::span<const F> point) const {
    if (point.size() != static_cast<size_t>(k_) * static_cast<size_t>(n_))
      throw std::invalid_argument("MPoly: evaluation point has wrong arity");
    F acc(0);
    for (const auto& [m, c] : terms_) {
      F t = c;
      for (const auto& [g, a] : m.factors()) t *= point[static_cast<size_t>(g - 1) * n_ + a];
      acc += t;
    }
    return acc;
  }

  // Evaluation from an explicit assignment; every variable used by some
  // term must be present.
  F eval(const std::map<std::pair<int, int>, F>& assignment) const {
    F acc(0);
    for (const auto& [m, c] : terms_) {
      F t = c;
      for (const auto& [g, a] : m.factors()) {
        auto it = assignment.find({g, a});
        if (it == assignment.end())
          throw std::invalid_argument("MPoly: assignment misses x_{" + std::to_string(g) + "," +
                                      std::to_string(a) + "}");
        t *= it->second;
      }
      acc += t;
    }
    return acc;
  }

  nlohmann::json to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
      nlohmann::json mono = nlohmann::json::object();
      for (const auto& [g, a] : m.factors()) mono[std::to_string(g)] = a;
      terms.push_back({{"mono", mono}, {"coeff", c.str()}});
    }
    return nlohmann::json{{"terms", terms}};
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += c.str() + "*" + m.str();
    }
    return s;
  }

 private:
  void check_shape(const MPoly& o) const {
    if (k_ != o.k_ || n_ != o.n_) throw std::invalid_argument("MPoly: shape mismatch");
  }

  int k_, n_;
  std::map<Monomial, F> terms_;
};

using PolyQ = MPoly<Rational>;
using PolyGF = MPoly<GfElem>;

template <class F>
bool is_zero(const MPoly<F>& p) {
  return p.is_zero();
}

// Reduce a rational-coefficient polynomial at a prime-field point; the
// active modulus must not divide any coefficient denominator.
inline GfElem eval_mod(const PolyQ& p, std::span<const GfElem> point) {
  if (point.size() != static_cast<size_t>(p.k()) * static_cast<size_t>(p.n()))
    throw std::invalid_argument("eval_mod: evaluation point has wrong arity");
  GfElem acc(0);
  for (const auto& [m, c] : p.terms()) {
    GfElem t = GfElem::from_int(c.num()) / GfElem::from_int(c.den());
    for (const auto& [g, a] : m.factors()) t *= point[static_cast<size_t>(g - 1) * p.n() + a];
    acc += t;
  }
  return acc;
}

}  // namespace gencomm
