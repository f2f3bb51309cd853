// Finite-dimensional associative unital algebra over a prime field.
//
// Fields, cyclic coefficient algebras and (associative) quotient algebras all
// present themselves through this interface: an element is its coordinate
// vector over the prime field, and the concrete class supplies the product.
// Enumeration order is canonical (little-endian digits base p), so witnesses
// found by sweeps are reproducible.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nacx/linalg.hpp"
#include "nacx/prime_field.hpp"

namespace nacx {

enum class DivisionStatus { Division, NotDivision, Unknown };

struct DenseRingTables;

class Ring {
 public:
  virtual ~Ring();

  const PrimeField& prime() const { return prime_; }
  size_t dim() const { return dim_; }
  virtual std::string describe() const = 0;
  virtual Vec mul(const Vec& a, const Vec& b) const = 0;
  virtual DivisionStatus division_status() const { return DivisionStatus::Unknown; }

  Vec zero() const { return Vec(dim_, prime_.zero()); }
  virtual Vec one() const;  // basis element 0 is the unit in every layout here
  Vec basis_element(size_t i) const;
  Vec add(const Vec& a, const Vec& b) const;
  Vec sub(const Vec& a, const Vec& b) const;
  Vec neg(const Vec& a) const;
  Vec smul(const Scalar& s, const Vec& a) const;
  bool is_zero(const Vec& a) const;
  bool eq(const Vec& a, const Vec& b) const;
  void check_elem(const Vec& a) const;  // throws InputError on wrong length

  bool finite() const { return prime_.finite(); }
  // Number of elements; throws when infinite or above 2^62.
  uint64_t size_u64() const;
  Vec element_at(uint64_t idx) const;
  uint64_t index_of(const Vec& a) const;

  // L_x and R_x as matrices over the prime field (columns indexed by basis).
  Matrix<Scalar> left_mul_matrix(const Vec& x) const;
  Matrix<Scalar> right_mul_matrix(const Vec& x) const;

  struct InverseResult {
    std::optional<Vec> inverse;       // two-sided inverse when x is a unit
    std::optional<Vec> zero_divisor;  // nonzero y with x*y = 0 otherwise
  };
  // Two-sided inverse by solving the left-regular-representation system.
  InverseResult inverse_detail(const Vec& x) const;
  std::optional<Vec> inverse(const Vec& x) const { return inverse_detail(x).inverse; }

  // Index-level product; the default round-trips through exact arithmetic.
  // Subclasses override it to cascade through their coefficient tables.
  virtual uint32_t mul_idx(uint32_t i, uint32_t j) const;

  // Lookup tables for everything up to `max_size` elements; built lazily from
  // exact arithmetic and cached. Returns nullptr when too big or infinite.
  const DenseRingTables* tables(uint32_t max_size = 4096) const;

 protected:
  Ring(PrimeField prime, size_t dim);
  PrimeField prime_;
  size_t dim_;

 private:
  mutable std::unique_ptr<DenseRingTables> tables_;
  mutable bool tables_failed_ = false;
};

struct DenseRingTables {
  uint32_t size = 0;
  std::vector<uint32_t> mul;  // [i*size + j]
  std::vector<uint32_t> add;
  std::vector<uint32_t> neg;
  std::vector<int64_t> inv;  // -1 when not a unit

  uint32_t mul_at(uint32_t i, uint32_t j) const { return mul[size_t(i) * size + j]; }
  uint32_t add_at(uint32_t i, uint32_t j) const { return add[size_t(i) * size + j]; }

  static std::unique_ptr<DenseRingTables> build(const Ring& r, uint32_t max_size);
};

// Automorphism index map on a tabled ring.
struct PermMap {
  std::vector<uint32_t> img;
  uint32_t operator()(uint32_t i) const { return img[i]; }
  static PermMap from_matrix(const Ring& r, const Matrix<Scalar>& m);
};

// A verified algebra automorphism: a prime-linear bijection fixing 1 and
// multiplicative on all basis pairs. Verification is always mechanical;
// nothing is trusted from a defining formula.
class RingAut {
 public:
  struct Check {
    bool ok = false;
    std::string failure;  // names the witness on failure
  };
  static Check check(const Ring& r, const Matrix<Scalar>& m);
  static RingAut verified(const Ring& r, Matrix<Scalar> m);  // throws VerifyError
  static std::optional<RingAut> try_verified(const Ring& r, Matrix<Scalar> m);
  static RingAut identity(const Ring& r);

  const Ring& owner() const { return *owner_; }
  const Matrix<Scalar>& matrix() const { return mat_; }
  Vec apply(const Vec& x) const;
  bool is_identity() const;
  bool equals(const RingAut& o) const { return mat_ == o.mat_; }

  RingAut compose(const RingAut& inner) const;  // this after inner
  RingAut power(int64_t k) const;               // k >= 0
  std::optional<RingAut> inverse() const;
  // Multiplicative order, computed by iterated composition; throws
  // BudgetError past `cap` iterations.
  int order(int cap = 1 << 20) const;

  // Restriction to an invariant subspace given by an embedding matrix
  // (ambient.dim x sub_dim); nullopt when the subspace is not stable.
  std::optional<Matrix<Scalar>> restrict_to(const Matrix<Scalar>& emb) const;

 private:
  RingAut(const Ring* owner, Matrix<Scalar> m) : owner_(owner), mat_(std::move(m)) {}
  const Ring* owner_;
  Matrix<Scalar> mat_;
  mutable int order_ = 0;
};

}  // namespace nacx
