#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gencomm {

using Int = mpz_class;

// Exact rational scalar. Always canonical: denominator > 0 and coprime to
// the numerator (delegated to GMP's mpq canonicalization).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
  explicit Rational(const Int& n) : v_(n) {}
  Rational(const Int& num, const Int& den) : v_(num, den) {
    if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }

  static Rational parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: bad literal '" + s + "'");
    q.canonicalize();
    Rational r;
    r.v_ = q;
    return r;
  }

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

  // "n" for integers, "n/d" otherwise.
  std::string str() const { return v_.get_str(); }

 private:
  explicit Rational(const mpq_class& q) : v_(q) {}
  mpq_class v_;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Int& x) { return sgn(x) == 0; }

}  // namespace gencomm
