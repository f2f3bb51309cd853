// Associative coefficient algebras D for the twisted polynomial ring: either
// a field viewed as an algebra, or a cyclic algebra (K/F, gamma, c) with the
// coefficient-wise lift of an automorphism of K.
//
// Every instance carries a distinguished automorphism sigma whose restriction
// to the center F has finite order m, and the chain F0 = Fix(sigma) ∩ F ⊆ F
// with verified embeddings. The lift is never trusted from its formula: it is
// checked multiplicative on all basis pairs at construction.

#pragma once

#include <memory>
#include <optional>

#include "nacx/fields.hpp"

namespace nacx {

class CoeffAlgebra;
using CoeffPtr = std::shared_ptr<const CoeffAlgebra>;

class CoeffAlgebra final : public Ring, public std::enable_shared_from_this<CoeffAlgebra> {
 public:
  enum class Kind { Field, Cyclic };

  // D = K itself, sigma an automorphism of K.
  static CoeffPtr field_algebra(FieldPtr K, FieldAutomorphism sigma);
  // D = (K/F, gamma, c) with F = Fix(gamma), c in F^x, multiplication
  // e^n = c, e x = gamma(x) e; sigma is the coefficient-wise lift of sigma_K.
  // Requires sigma_K gamma = gamma sigma_K and sigma_K(c) = c.
  static CoeffPtr cyclic_algebra(FieldPtr K, FieldAutomorphism gamma, Vec c,
                                 FieldAutomorphism sigma_K);

  Kind kind() const { return kind_; }
  const FieldPresentation& K() const { return *K_; }
  const FieldPtr& K_ptr() const { return K_; }
  size_t n() const { return n_; }  // degree of D over its center
  int m() const { return m_; }     // order of sigma restricted to the center
  const RingAut& sigma() const { return *sigma_lift_; }
  const FieldAutomorphism& sigma_K() const { return *sigma_K_; }
  const FieldAutomorphism* gamma() const { return gamma_ ? &*gamma_ : nullptr; }
  const Vec* structure_constant() const { return kind_ == Kind::Cyclic ? &c_ : nullptr; }

  const Embedding& center_in_K() const { return *center_in_K_; }  // F ⊆ K
  const Embedding& f0_in_K() const { return *f0_in_K_; }          // F0 ⊆ K
  const FieldAutomorphism& sigma_on_center() const { return *sigma_F_; }
  const TowerPath& center_tower() const { return *center_tower_; }  // F/F0

  // K-coordinate blocks over the basis 1, e, ..., e^{n-1}.
  std::vector<Vec> to_K_chunks(const Vec& x) const;
  Vec from_K_chunks(const std::vector<Vec>& chunks) const;
  Vec from_K(const Vec& x) const;  // K as the e^0 block
  // K-element -> D when it lies in K; pullbacks for F / F0 membership.
  std::optional<Vec> pullback_to_K(const Vec& x) const;

  std::string describe() const override;
  Vec mul(const Vec& a, const Vec& b) const override;
  uint32_t mul_idx(uint32_t i, uint32_t j) const override;
  DivisionStatus division_status() const override;

  // Center computed from scratch by the commutation linear system, as a
  // subspace of D (rows over the prime field), plus agreement with F.
  struct CenterCheck {
    Matrix<Scalar> basis_rows;
    bool equals_declared_center = false;
  };
  CenterCheck center_compute() const;

  enum class DivVerdict { Division, SplitWitness, Asserted };
  struct DivisionResult {
    DivVerdict verdict = DivVerdict::Asserted;
    std::optional<std::pair<Vec, Vec>> zero_divisor;  // x*y = 0, both nonzero
    std::string method;
  };
  // Finite algebras are scanned exhaustively (first witness in canonical
  // order); infinite ones get a seeded randomized search and "asserted".
  DivisionResult division_verdict(uint64_t scan_budget = uint64_t{1} << 16,
                                  uint64_t seed = 1, int random_tries = 4000) const;

 private:
  CoeffAlgebra(Kind kind, FieldPtr K, size_t n);

  Kind kind_;
  FieldPtr K_;
  size_t n_;
  int m_ = 0;
  std::optional<FieldAutomorphism> gamma_;
  Vec c_;
  std::optional<FieldAutomorphism> sigma_K_;
  std::optional<RingAut> sigma_lift_;
  std::optional<Embedding> center_in_K_;
  std::optional<Embedding> f0_in_K_;
  std::optional<FieldAutomorphism> sigma_F_;
  std::optional<TowerPath> center_tower_;

  mutable std::vector<Matrix<Scalar>> gamma_pow_;  // matrices on K, 0..n-1
  mutable std::vector<std::unique_ptr<PermMap>> gamma_perm_;
  mutable std::optional<DivisionResult> division_cache_;

  void finalize(FieldAutomorphism sigma_K);
  const Matrix<Scalar>& gamma_power(size_t i) const;
};

}  // namespace nacx
