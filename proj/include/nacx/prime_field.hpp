// The prime field at the bottom of every tower: F_p for a prime p, or Q.
// Elements are exact rationals; for F_p they are kept canonical in [0, p).

#pragma once

#include <cstdint>
#include <vector>

#include "nacx/errors.hpp"
#include "nacx/scalars.hpp"

namespace nacx {

using Scalar = BigRat;
// Coordinates of an algebra element over the prime field.
using Vec = std::vector<Scalar>;

class PrimeField {
 public:
  // p == 0 selects the rationals; otherwise p must be prime (checked).
  explicit PrimeField(BigInt p);

  bool is_rationals() const { return p_.is_zero(); }
  bool finite() const { return !p_.is_zero(); }
  const BigInt& p() const { return p_; }
  // Number of elements; only for finite fields that fit in uint64.
  uint64_t size_u64() const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return !(*this == o); }

  // Reduce an arbitrary rational into canonical form. Over F_p the
  // denominator must be a unit mod p.
  Scalar canon(const Scalar& x) const;

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // throws DomainError on zero
  bool is_zero(const Scalar& a) const { return a.is_zero(); }

  // Canonical element <-> enumeration index (finite fields only).
  Scalar element_at(uint64_t idx) const;
  uint64_t index_of(const Scalar& a) const;

 private:
  BigInt p_;
};

// Adapter so the generic linear algebra can run over a PrimeField.
struct ScalarOps {
  const PrimeField* F;
  using Elem = Scalar;
  Elem zero() const { return F->zero(); }
  Elem one() const { return F->one(); }
  Elem add(const Elem& a, const Elem& b) const { return F->add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return F->sub(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return F->mul(a, b); }
  Elem neg(const Elem& a) const { return F->neg(a); }
  Elem inv(const Elem& a) const { return F->inv(a); }
  bool is_zero(const Elem& a) const { return F->is_zero(a); }
};

// Deterministic primality check (trial division + Miller-Rabin, exact).
bool is_prime_u64(uint64_t n);

}  // namespace nacx
