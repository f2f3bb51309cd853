#include "nacx/scalars.hpp"

#include <algorithm>
#include <stdexcept>

namespace nacx {

namespace {
constexpr uint64_t kBase = uint64_t{1} << 32;
}

BigInt::BigInt(int64_t v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // Avoid overflow on INT64_MIN.
  uint64_t u = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
  mag_.push_back(static_cast<uint32_t>(u));
  if (u >> 32) mag_.push_back(static_cast<uint32_t>(u >> 32));
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

int BigInt::mag_cmp(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<uint32_t> BigInt::mag_add(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  const auto& lo = a.size() < b.size() ? a : b;
  const auto& hi = a.size() < b.size() ? b : a;
  std::vector<uint32_t> out(hi.size() + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < hi.size(); ++i) {
    uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
    out[i] = static_cast<uint32_t>(s);
    carry = s >> 32;
  }
  out[hi.size()] = static_cast<uint32_t>(carry);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<uint32_t> BigInt::mag_sub(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t s = static_cast<int64_t>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
    borrow = 0;
    if (s < 0) {
      s += static_cast<int64_t>(kBase);
      borrow = 1;
    }
    out[i] = static_cast<uint32_t>(s);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<uint32_t> BigInt::mag_mul(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> out(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t s = static_cast<uint64_t>(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<uint32_t>(s);
      carry = s >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t s = out[k] + carry;
      out[k] = static_cast<uint32_t>(s);
      carry = s >> 32;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

uint32_t BigInt::mag_divmod_small(std::vector<uint32_t>& a, uint32_t d) {
  uint64_t rem = 0;
  for (size_t i = a.size(); i-- > 0;) {
    uint64_t cur = (rem << 32) | a[i];
    a[i] = static_cast<uint32_t>(cur / d);
    rem = cur % d;
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return static_cast<uint32_t>(rem);
}

void BigInt::mag_mul_small_add(std::vector<uint32_t>& a, uint32_t mul, uint32_t add) {
  uint64_t carry = add;
  for (uint32_t& limb : a) {
    uint64_t s = static_cast<uint64_t>(limb) * mul + carry;
    limb = static_cast<uint32_t>(s);
    carry = s >> 32;
  }
  while (carry) {
    a.push_back(static_cast<uint32_t>(carry));
    carry >>= 32;
  }
}

size_t BigInt::bit_length() const {
  if (mag_.empty()) return 0;
  uint32_t top = mag_.back();
  size_t bits = 0;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return (mag_.size() - 1) * 32 + bits;
}

bool BigInt::bit(size_t i) const {
  size_t limb = i / 32;
  if (limb >= mag_.size()) return false;
  return (mag_[limb] >> (i % 32)) & 1;
}

int BigInt::cmp(const BigInt& b) const {
  if (sign_ != b.sign_) return sign_ < b.sign_ ? -1 : 1;
  int mc = mag_cmp(mag_, b.mag_);
  return sign_ >= 0 ? mc : -mc;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  if (out.sign_ < 0) out.sign_ = 1;
  return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt out;
  if (a.sign_ == b.sign_) {
    out.mag_ = BigInt::mag_add(a.mag_, b.mag_);
    out.sign_ = a.sign_;
  } else {
    int mc = BigInt::mag_cmp(a.mag_, b.mag_);
    if (mc == 0) return BigInt();
    if (mc > 0) {
      out.mag_ = BigInt::mag_sub(a.mag_, b.mag_);
      out.sign_ = a.sign_;
    } else {
      out.mag_ = BigInt::mag_sub(b.mag_, a.mag_);
      out.sign_ = b.sign_;
    }
  }
  out.trim();
  return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt out;
  out.mag_ = BigInt::mag_mul(a.mag_, b.mag_);
  out.sign_ = out.mag_.empty() ? 0 : a.sign_ * b.sign_;
  return out;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
  // Binary long division on magnitudes; numbers in this library stay small.
  BigInt qq, rr;
  size_t nbits = a.bit_length();
  qq.mag_.assign((nbits + 31) / 32 + 1, 0);
  for (size_t i = nbits; i-- > 0;) {
    // rr = rr*2 + bit
    uint32_t carry = a.bit(i) ? 1 : 0;
    for (uint32_t& limb : rr.mag_) {
      uint32_t next = limb >> 31;
      limb = (limb << 1) | carry;
      carry = next;
    }
    if (carry) rr.mag_.push_back(carry);
    rr.sign_ = rr.mag_.empty() ? 0 : 1;
    rr.trim();
    if (mag_cmp(rr.mag_, b.mag_) >= 0) {
      rr.mag_ = mag_sub(rr.mag_, b.mag_);
      rr.trim();
      qq.mag_[i / 32] |= uint32_t{1} << (i % 32);
    }
  }
  qq.sign_ = 1;
  qq.trim();
  // Truncated-toward-zero signs.
  if (!qq.mag_.empty()) qq.sign_ = a.sign_ * b.sign_;
  if (!rr.mag_.empty()) rr.sign_ = a.sign_;
  q = std::move(qq);
  r = std::move(rr);
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigInt BigInt::pow(uint64_t e) const {
  BigInt out(1), base = *this;
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

bool BigInt::fits_int64() const {
  if (mag_.size() > 2) return false;
  if (mag_.size() < 2) return true;
  uint64_t u = (static_cast<uint64_t>(mag_[1]) << 32) | mag_[0];
  return sign_ < 0 ? u <= (uint64_t{1} << 63) : u < (uint64_t{1} << 63);
}

int64_t BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("BigInt: value does not fit in int64");
  uint64_t u = 0;
  if (!mag_.empty()) u = mag_[0];
  if (mag_.size() > 1) u |= static_cast<uint64_t>(mag_[1]) << 32;
  return sign_ < 0 ? -static_cast<int64_t>(u) : static_cast<int64_t>(u);
}

BigInt BigInt::parse(const std::string& s) {
  size_t i = 0;
  int sign = 1;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sign = -1;
    ++i;
  }
  if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
  BigInt out;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("BigInt: bad digit in '" + s + "'");
    mag_mul_small_add(out.mag_, 10, static_cast<uint32_t>(s[i] - '0'));
  }
  out.sign_ = out.mag_.empty() ? 0 : sign;
  return out;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<uint32_t> work = mag_;
  std::string digits;
  while (!work.empty()) {
    uint32_t chunk = mag_divmod_small(work, 1000000000u);
    for (int k = 0; k < 9; ++k) {
      digits.push_back(static_cast<char>('0' + chunk % 10));
      chunk /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

// ---------------------------------------------------------------------------

BigRat::BigRat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("BigRat: zero denominator");
  normalize();
}

void BigRat::normalize() {
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

BigRat BigRat::operator-() const {
  BigRat out = *this;
  out.num_ = -out.num_;
  return out;
}

BigRat operator+(const BigRat& a, const BigRat& b) {
  return BigRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

BigRat operator-(const BigRat& a, const BigRat& b) { return a + (-b); }

BigRat operator*(const BigRat& a, const BigRat& b) {
  return BigRat(a.num_ * b.num_, a.den_ * b.den_);
}

BigRat operator/(const BigRat& a, const BigRat& b) {
  if (b.is_zero()) throw std::domain_error("BigRat: division by zero");
  return BigRat(a.num_ * b.den_, a.den_ * b.num_);
}

BigRat BigRat::inverse() const {
  if (is_zero()) throw std::domain_error("BigRat: inverse of zero");
  return BigRat(den_, num_);
}

int BigRat::cmp(const BigRat& b) const { return (num_ * b.den_).cmp(b.num_ * den_); }

BigRat BigRat::parse(const std::string& s) {
  size_t slash = s.find('/');
  if (slash == std::string::npos) return BigRat(BigInt::parse(s));
  return BigRat(BigInt::parse(s.substr(0, slash)), BigInt::parse(s.substr(slash + 1)));
}

std::string BigRat::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace nacx
