// Recognition of twisted-polynomial quotients from raw ring data: given a
// multiplication table over a prime field, a distinguished subring D and an
// element t, decide whether the ring is S_f for some f in D[t;sigma,delta],
// and recover sigma, delta and f in the coordinates of the given D-basis.
//
// Checked conditions (rejections cite the clause index):
//   (1) the powers 1, t, ..., t^{m-1} are a left D-basis,
//   (2) t ∘ a = a1 ∘ t + a2 with a1, a2 in D and a |-> a1 injective,
//   (3) associators [a t^i, b t^j, c t^k] vanish for i+j < m, k < m,
// and for the cyclic specialization additionally
//   (4) delta = 0 and t^m = d in K^x,
//   (5) sigma has order m, with enough roots of unity in the fixed ring.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nacx/linalg.hpp"
#include "nacx/prime_field.hpp"
#include "nacx/ring.hpp"

namespace nacx {

class PetitAlgebra;

// A finite-dimensional algebra given purely by structure constants.
class RingTable final : public Ring {
 public:
  // constants[(i*dim + j)*dim + k] = coefficient of basis k in b_i b_j.
  RingTable(PrimeField prime, size_t dim, std::vector<Scalar> constants,
            Matrix<Scalar> subring_basis, Vec t);

  std::string describe() const override { return "ring table (dim " + std::to_string(dim_) + ")"; }
  Vec mul(const Vec& a, const Vec& b) const override;

  const Matrix<Scalar>& subring_basis() const { return subring_basis_; }
  const Vec& t() const { return t_; }

  // The two-sided identity, solved from the table (throws VerifyError when
  // the table is not unital).
  const Vec& identity_element() const;

  // Export of an existing quotient algebra in its canonical basis: the
  // subring basis is the coefficient block at t^0 and t the class of t.
  static RingTable from_algebra(const PetitAlgebra& A);

 private:
  std::vector<Scalar> constants_;
  Matrix<Scalar> subring_basis_;
  Vec t_;
  mutable std::optional<Vec> identity_;
};

struct SkewRecognition {
  bool accepted = false;
  int failed_condition = 0;  // 1..3, or 0 when accepted
  std::string detail;

  // Hypothesis flag: the subring is a division algebra. Finite split inputs
  // are still recognized structurally when the basis conditions hold; the
  // flag gates the division-dependent conclusions downstream.
  bool subring_division = false;
  std::optional<Vec> subring_non_unit;  // witness in subring coords
  size_t m = 0;
  // All matrices/coordinates are w.r.t. the GIVEN D-basis.
  Matrix<Scalar> sigma;  // a |-> a1
  Matrix<Scalar> delta;  // a |-> a2
  bool delta_zero = false;
  std::vector<std::vector<Scalar>> f_lower;  // d_i with t^m = sum d_i t^i
};
SkewRecognition recognize_skew(const RingTable& S);

enum class CyclicFlavor { Field, Csa };

struct CyclicRecognition {
  SkewRecognition base;
  bool accepted = false;
  int failed_condition = 0;  // 1..5
  std::string detail;

  std::vector<Scalar> d;      // D-coordinates of d = t^m
  int sigma_order = 0;
  size_t fixed_ring_dim = 0;  // {a in D : t a = a t}, dimension over the prime field
  bool associative = false;   // sigma(d) = d, i.e. d lies in the fixed ring
  // Present iff the fixed ring (field flavor) / its center intersection (csa)
  // holds a primitive m-th root of unity; without it the presentation is
  // still emitted but the cyclic-extension conclusion is withheld.
  bool has_primitive_root = false;
  std::optional<Vec> omega;  // in D-coordinates of the table's subring

  // Right-division verdict: every nonzero right multiplication bijective.
  enum class RightDivision { Yes, No, Skipped } right_division = RightDivision::Skipped;
  std::optional<Vec> right_division_witness;  // a with R_a singular
  bool cyclic_extension_claim = false;        // accepted + right division ring
};
CyclicRecognition recognize_cyclic(const RingTable& S, CyclicFlavor flavor,
                                   uint64_t scan_budget = uint64_t{1} << 12);

}  // namespace nacx
