// Exact arbitrary-precision integers and rationals.
//
// Every field representation in the library sits on top of these two types;
// there is no floating point anywhere, so algebraic identities (norm kernels,
// extension conditions, associator vanishing) are decidable by comparison.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nacx {

// Sign-magnitude integer, little-endian base-2^32 limbs.
// Canonical form: no leading zero limbs, zero has sign 0 and empty magnitude.
class BigInt {
 public:
  BigInt() = default;
  BigInt(int64_t v);  // NOLINT: implicit by design, mirrors int literals
  static BigInt parse(const std::string& s);

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  bool is_one() const;
  int sign() const { return sign_; }

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  // Truncated division (C semantics). Throws std::domain_error when b == 0.
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

  BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
  BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
  BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

  // -1 / 0 / +1 as *this <=> b.
  int cmp(const BigInt& b) const;
  friend bool operator==(const BigInt& a, const BigInt& b) { return a.cmp(b) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return a.cmp(b) != 0; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return a.cmp(b) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return a.cmp(b) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return a.cmp(b) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return a.cmp(b) >= 0; }

  static BigInt gcd(BigInt a, BigInt b);  // always >= 0
  BigInt pow(uint64_t e) const;

  // Value as int64 when it fits; throws std::overflow_error otherwise.
  int64_t to_int64() const;
  bool fits_int64() const;

  std::string to_string() const;  // decimal

 private:
  int sign_ = 0;
  std::vector<uint32_t> mag_;

  void trim();
  static int mag_cmp(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mag_add(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  // Requires a >= b.
  static std::vector<uint32_t> mag_sub(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mag_mul(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static uint32_t mag_divmod_small(std::vector<uint32_t>& a, uint32_t d);
  static void mag_mul_small_add(std::vector<uint32_t>& a, uint32_t mul, uint32_t add);
  size_t bit_length() const;
  bool bit(size_t i) const;
};

// Rational number, always in lowest terms with positive denominator.
// Equal rationals therefore have identical representations.
class BigRat {
 public:
  BigRat() : num_(0), den_(1) {}
  BigRat(int64_t v) : num_(v), den_(1) {}  // NOLINT
  BigRat(BigInt v) : num_(std::move(v)), den_(1) {}  // NOLINT
  BigRat(BigInt num, BigInt den);  // throws std::domain_error if den == 0
  // Accepts "p", "-p" and "p/q".
  static BigRat parse(const std::string& s);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_integer() const { return den_.is_one(); }

  BigRat operator-() const;
  friend BigRat operator+(const BigRat& a, const BigRat& b);
  friend BigRat operator-(const BigRat& a, const BigRat& b);
  friend BigRat operator*(const BigRat& a, const BigRat& b);
  friend BigRat operator/(const BigRat& a, const BigRat& b);  // throws on b == 0
  BigRat inverse() const;                                     // throws on zero

  BigRat& operator+=(const BigRat& b) { return *this = *this + b; }
  BigRat& operator-=(const BigRat& b) { return *this = *this - b; }
  BigRat& operator*=(const BigRat& b) { return *this = *this * b; }

  friend bool operator==(const BigRat& a, const BigRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const BigRat& a, const BigRat& b) { return !(a == b); }
  int cmp(const BigRat& b) const;
  friend bool operator<(const BigRat& a, const BigRat& b) { return a.cmp(b) < 0; }

  std::string to_string() const;  // "p" or "p/q"

 private:
  BigInt num_, den_;
  void normalize();
};

}  // namespace nacx
