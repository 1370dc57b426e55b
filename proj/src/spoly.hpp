#pragma once

#include <map>
#include <vector>

#include "poly.hpp"

namespace gencomm {

template <class T>
class Matrix;

// General sparse multivariate polynomial over Q, with arbitrary exponents.
// Intermediate products in minor computations leave the multilinear world
// (the same variable can recur), so the exact rank path runs on this type.
// Addition and multiplication only; no division is ever needed.
class SPoly {
 public:
  using Mono = std::vector<std::pair<int, int>>;  // (variable id, exponent > 0), sorted by id

  SPoly() = default;

  static SPoly constant(const Rational& c) {
    SPoly p;
    if (!c.is_zero()) p.terms_.emplace(Mono{}, c);
    return p;
  }

  // var id of x_{l,a} on an (k, n) grid is (l-1)*n + a.
  static SPoly from_multilinear(const PolyQ& p) {
    SPoly out;
    for (const auto& [m, c] : p.terms()) {
      Mono mono;
      mono.reserve(m.factors().size());
      for (const auto& [g, a] : m.factors()) mono.emplace_back((g - 1) * p.n() + a, 1);
      out.terms_.emplace(std::move(mono), c);
    }
    return out;
  }

  bool is_zero() const { return terms_.empty(); }

  SPoly& operator+=(const SPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SPoly& operator-=(const SPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend SPoly operator+(SPoly a, const SPoly& b) { return a += b; }
  friend SPoly operator-(SPoly a, const SPoly& b) { return a -= b; }

  friend SPoly operator*(const SPoly& a, const SPoly& b) {
    SPoly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(merge(ma, mb), ca * cb);
    return out;
  }

 private:
  void add_term(const Mono& m, const Rational& c) {
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    } else if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }

  static Mono merge(const Mono& a, const Mono& b) {
    Mono out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i].first == b[j].first) {
        out.emplace_back(a[i].first, a[i].second + b[j].second);
        ++i, ++j;
      } else if (a[i].first < b[j].first) {
        out.push_back(a[i++]);
      } else {
        out.push_back(b[j++]);
      }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
  }

  std::map<Mono, Rational> terms_;
};

// Rank over the rational function field by growing a nonsingular minor:
// whenever the rank exceeds the current pivot set, some single-row,
// single-column extension keeps the bordered minor nonzero, so the greedy
// growth terminates at the exact rank.
int bordered_minor_rank(const Matrix<PolyQ>& m);

}  // namespace gencomm
