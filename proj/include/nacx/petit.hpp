// The quotient S_f = D[t;sigma] / D[t;sigma] f for monic f of degree m:
// polynomials of degree < m under g ∘ h = g h mod_r f. Nonassociative in
// general; associative exactly when f is right-invariant.
//
// Elements are flat coordinate vectors (m blocks of coefficient-ring
// coordinates, ascending powers of t). The commutant field F0, the three
// nuclei (solved over F0), division verdicts by independent strategies, and
// one-sided inverses all live here.

#pragma once

#include <memory>
#include <optional>

#include "nacx/fastskew.hpp"
#include "nacx/fields.hpp"
#include "nacx/skewpoly.hpp"

namespace nacx {

class PetitAlgebra;
using PetitPtr = std::shared_ptr<const PetitAlgebra>;

class PetitAlgebra final : public Ring, public std::enable_shared_from_this<PetitAlgebra> {
 public:
  // f must be monic of degree >= 1. Degree 1 degenerates to D itself.
  static PetitPtr make(SkewRingPtr R, SkewPoly f);

  const SkewPolyRing& skew_ring() const { return *R_; }
  const SkewRingPtr& skew_ring_ptr() const { return R_; }
  const Ring& coeff() const { return R_->coeff(); }
  size_t m() const { return m_; }
  const SkewPoly& f() const { return f_; }
  bool binomial() const { return binomial_; }
  const Vec& d() const;  // throws unless binomial

  std::string describe() const override;
  Vec mul(const Vec& a, const Vec& b) const override;
  uint32_t mul_idx(uint32_t i, uint32_t j) const override;
  DivisionStatus division_status() const override;

  SkewPoly to_poly(const Vec& a) const;
  Vec from_poly(const SkewPoly& g) const;
  Vec from_coeff(const Vec& a, size_t power = 0) const;  // a t^power
  std::vector<Vec> to_coeff_chunks(const Vec& a) const;

  // (x ∘ y) ∘ z - x ∘ (y ∘ z).
  Vec associator(const Vec& x, const Vec& y, const Vec& z) const;
  // All basis-triple associators vanish (equivalent to associativity by
  // trilinearity).
  bool all_associators_vanish() const;

  // F0 = {z in D : z ∘ h = h ∘ z for all h}, presented as a field inside D,
  // cross-checked against Fix(sigma) ∩ C(D).
  struct F0Result {
    FieldInRing field_in_coeff;
    bool matches_fix_sigma_center = false;
  };
  const F0Result& f0_compute() const;

  // F0-module structure of the algebra (for the nucleus systems).
  struct ModuleView {
    FieldInRing f0_in_algebra;
    std::vector<Vec> basis;  // F0-basis of the algebra
    Matrix<Scalar> mix;      // prime-linear iso F0^k -> A, column (u,l)
    Matrix<Scalar> mix_inv;
    std::vector<Vec> f0_coords(const Vec& x) const;  // k coordinates in F0
  };
  const ModuleView& module_view() const;

  enum class NucleusSide { Left, Middle, Right };
  struct NucleusResult {
    Matrix<Scalar> basis_rows;  // canonical rows over the prime field
    size_t dim_over_f0 = 0;
  };
  // Solves the associator-vanishing system over F0.
  NucleusResult nucleus(NucleusSide side) const;
  // Independent characterization of the right nucleus: {g : f g ≡ 0 mod_r f}.
  Matrix<Scalar> right_nucleus_by_remainder() const;
  // Subspace of D commuting with everything (the F0 subspace, unpresented).
  Matrix<Scalar> commutant_subspace() const;

  struct DivisionCheck {
    DivisionStatus verdict = DivisionStatus::Unknown;
    std::string methods;
    std::optional<Vec> criterion_witness;
    std::optional<std::pair<Vec, Vec>> criterion_witness_xy;
    std::optional<std::pair<SkewPoly, SkewPoly>> factorization;
    std::optional<std::pair<Vec, Vec>> zero_divisor;
    std::string note;
  };
  // Strategy ladder: point criterion, exhaustive factor search, zero-divisor
  // scan; every strategy that reaches a verdict must agree (disagreement is
  // an internal error). Cached after the first call.
  const DivisionCheck& is_division(uint64_t criterion_budget = uint64_t{1} << 24,
                                   uint64_t factor_budget = uint64_t{1} << 22,
                                   uint64_t scan_budget = uint64_t{1} << 16) const;

  struct InversePair {
    std::optional<Vec> left;   // a_l with a_l ∘ x = 1
    std::optional<Vec> right;  // a_r with x ∘ a_r = 1
    bool two_sided = false;    // both exist and coincide
    std::optional<Vec> zero_divisor;
  };
  InversePair inverse_pair(const Vec& x) const;

  // Index-level context for sweeps (nullptr when the coefficient ring has no
  // tables).
  const fastskew::Ctx* fast_ctx() const;
  const std::vector<uint32_t>& f_indices() const { return f_idx_; }

 private:
  PetitAlgebra(SkewRingPtr R, SkewPoly f, size_t m);

  SkewRingPtr R_;
  SkewPoly f_;
  size_t m_;
  bool binomial_ = false;
  Vec d_;
  mutable std::optional<F0Result> f0_;
  mutable std::optional<ModuleView> module_;
  mutable std::optional<DivisionCheck> division_;
  mutable std::optional<fastskew::Ctx> fast_;
  mutable bool fast_failed_ = false;
  mutable std::vector<uint32_t> f_idx_;
};

}  // namespace nacx
