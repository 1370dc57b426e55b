#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace gencomm {

bool is_prime_u64(std::uint64_t n);

// Prime residue field element. The modulus is configuration-scoped: one
// modulus is active per run, installed before any arithmetic (experiment
// entry points do this from their field config). Elements are immutable
// values and safe to share across threads once the modulus is set.
class GfElem {
 public:
  static constexpr std::uint64_t kDefaultModulus = (std::uint64_t{1} << 61) - 1;  // Mersenne prime

  static std::uint64_t modulus() { return modulus_; }
  static void set_modulus(std::uint64_t p);

  GfElem() : v_(0) {}
  GfElem(long long n) {  // NOLINT: implicit by design
    long long m = n % static_cast<long long>(modulus_);
    v_ = m < 0 ? static_cast<std::uint64_t>(m + static_cast<long long>(modulus_)) : static_cast<std::uint64_t>(m);
  }
  static GfElem from_residue(std::uint64_t r) {
    GfElem e;
    e.v_ = r % modulus_;
    return e;
  }
  static GfElem from_int(const Int& n);

  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  GfElem operator-() const { return from_residue(v_ == 0 ? 0 : modulus_ - v_); }
  GfElem& operator+=(const GfElem& o) {
    v_ += o.v_;
    if (v_ >= modulus_) v_ -= modulus_;
    return *this;
  }
  GfElem& operator-=(const GfElem& o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + modulus_ - o.v_;
    return *this;
  }
  GfElem& operator*=(const GfElem& o) {
    v_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v_) * o.v_ % modulus_);
    return *this;
  }
  GfElem& operator/=(const GfElem& o) { return *this *= o.inverse(); }

  GfElem inverse() const;
  GfElem pow(std::uint64_t e) const;

  friend GfElem operator+(GfElem a, const GfElem& b) { return a += b; }
  friend GfElem operator-(GfElem a, const GfElem& b) { return a -= b; }
  friend GfElem operator*(GfElem a, const GfElem& b) { return a *= b; }
  friend GfElem operator/(GfElem a, const GfElem& b) { return a /= b; }
  friend bool operator==(const GfElem& a, const GfElem& b) { return a.v_ == b.v_; }
  friend bool operator!=(const GfElem& a, const GfElem& b) { return a.v_ != b.v_; }

  std::string str() const { return std::to_string(v_); }

 private:
  static std::uint64_t modulus_;
  std::uint64_t v_;
};

inline bool is_zero(const GfElem& x) { return x.is_zero(); }

// Temporarily installs a modulus; restores the previous one on scope exit.
class GfScope {
 public:
  explicit GfScope(std::uint64_t p) : saved_(GfElem::modulus()) { GfElem::set_modulus(p); }
  ~GfScope() { GfElem::set_modulus(saved_); }
  GfScope(const GfScope&) = delete;
  GfScope& operator=(const GfScope&) = delete;

 private:
  std::uint64_t saved_;
};

// True when p does not divide 2*(2r+1)*r!, the characteristic restriction
// for the even-degree nullity results.
bool admissible_characteristic(std::uint64_t p, int r);

Int factorial(int n);
long long factorial_ll(int n);  // n <= 20

}  // namespace gencomm
