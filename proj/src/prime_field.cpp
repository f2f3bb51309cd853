#include "nacx/prime_field.hpp"

namespace nacx {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for the full 64-bit range.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(BigInt p) : p_(std::move(p)) {
  if (p_.is_zero()) return;
  if (p_.is_negative() || !p_.fits_int64())
    throw InputError("prime field characteristic out of range: " + p_.to_string());
  if (!is_prime_u64(static_cast<uint64_t>(p_.to_int64())))
    throw InputError("characteristic is not prime: " + p_.to_string());
}

uint64_t PrimeField::size_u64() const {
  if (!finite()) throw DomainError("prime field is infinite");
  return static_cast<uint64_t>(p_.to_int64());
}

Scalar PrimeField::canon(const Scalar& x) const {
  if (!finite()) return x;
  // x = a/b with gcd(a,b) = 1; b must be invertible mod p.
  BigInt a = x.num() % p_;
  if (a.is_negative()) a = a + p_;
  if (x.den().is_one()) return Scalar(a);
  BigInt b = x.den() % p_;
  if (b.is_zero()) throw DomainError("denominator not invertible mod " + p_.to_string());
  Scalar bi = inv(Scalar(b));
  return mul(Scalar(a), bi);
}

Scalar PrimeField::add(const Scalar& a, const Scalar& b) const {
  if (!finite()) return a + b;
  BigInt s = a.num() + b.num();
  if (s >= p_) s = s - p_;
  return Scalar(s);
}

Scalar PrimeField::sub(const Scalar& a, const Scalar& b) const {
  if (!finite()) return a - b;
  BigInt s = a.num() - b.num();
  if (s.is_negative()) s = s + p_;
  return Scalar(s);
}

Scalar PrimeField::mul(const Scalar& a, const Scalar& b) const {
  if (!finite()) return a * b;
  return Scalar((a.num() * b.num()) % p_);
}

Scalar PrimeField::neg(const Scalar& a) const {
  if (!finite()) return -a;
  if (a.is_zero()) return a;
  return Scalar(p_ - a.num());
}

Scalar PrimeField::inv(const Scalar& a) const {
  if (a.is_zero()) throw DomainError("inverse of zero");
  if (!finite()) return a.inverse();
  // Extended Euclid on (a, p).
  BigInt r0 = a.num(), r1 = p_;
  BigInt s0(1), s1(0);
  while (!r1.is_zero()) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  BigInt inv = s0 % p_;
  if (inv.is_negative()) inv = inv + p_;
  return Scalar(inv);
}

Scalar PrimeField::element_at(uint64_t idx) const {
  return Scalar(BigInt(static_cast<int64_t>(idx)));
}

uint64_t PrimeField::index_of(const Scalar& a) const {
  return static_cast<uint64_t>(a.num().to_int64());
}

}  // namespace nacx
