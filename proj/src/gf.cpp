#include "gf.hpp"

namespace gencomm {

std::uint64_t GfElem::modulus_ = GfElem::kDefaultModulus;

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin for 64-bit inputs (Sinclair's 7-base set).
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void GfElem::set_modulus(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 62)) throw std::invalid_argument("GfElem: modulus must be below 2^62");
  if (!is_prime_u64(p)) throw std::invalid_argument("GfElem: modulus " + std::to_string(p) + " is not prime");
  modulus_ = p;
}

GfElem GfElem::from_int(const Int& n) {
  Int p(static_cast<unsigned long>(modulus_));
  Int r = n % p;
  if (sgn(r) < 0) r += p;
  return from_residue(static_cast<std::uint64_t>(r.get_ui()));
}

GfElem GfElem::inverse() const {
  if (v_ == 0) throw std::domain_error("GfElem: inverse of zero");
  return pow(modulus_ - 2);
}

GfElem GfElem::pow(std::uint64_t e) const { return from_residue(powmod(v_, e, modulus_)); }

bool admissible_characteristic(std::uint64_t p, int r) {
  if (p == 0) return true;  // characteristic zero
  Int bound = 2 * (2 * r + 1) * factorial(r);
  return bound % Int(static_cast<unsigned long>(p)) != 0;
}

Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long factorial_ll(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial_ll: argument out of range");
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace gencomm
