// Automorphisms of S_f = (D, sigma, d): candidate maps H_{tau,k} scaling the
// t^i coefficient by prod_{l<i} sigma^l(k) and applying tau to coefficients,
// extension conditions through the center norm, exhaustive sweeps, inner
// realizations via Hilbert 90, and the cyclic-extension verdict.
//
// Candidates are never trusted from the formula: every map is re-verified
// multiplicative on all basis pairs before it counts.

#pragma once

#include <optional>
#include <vector>

#include "nacx/coeffalg.hpp"
#include "nacx/petit.hpp"

namespace nacx {

// The coefficient ring of A as a CoeffAlgebra; throws InputError otherwise.
const CoeffAlgebra& require_coeff_algebra(const PetitAlgebra& A);

// The matrix of x_i t^i -> tau(x_i) (prod_{l<i} sigma^l(k)) t^i, with k and
// tau living on the coefficient ring. Shared by the automorphism sweep and
// the extension-tower construction.
Matrix<Scalar> h_candidate_matrix(const PetitAlgebra& A, const RingAut& tau_on_coeff,
                                  const Vec& k_in_coeff);

struct AutMap {
  const PetitAlgebra* owner = nullptr;
  RingAut map;   // verified automorphism of A
  RingAut tau;   // restriction to the coefficient ring
  Vec k;         // in K-coordinates (k lies in the center F)
  std::optional<Vec> inner_witness;  // c in K-coordinates, when realized
  int order = 0;
};

struct ExtensionConditionResult {
  bool holds = false;
  Vec tau_d;        // tau(d), in D
  Vec norm_times_d; // N_{F/F0}(k) d, in D
};
// tau(d) = N_{F/F0}(k) d, evaluated exactly. tau must commute with sigma
// (verified, witness named on failure); k must be a nonzero element of F.
ExtensionConditionResult extension_condition(const PetitAlgebra& A, const RingAut& tau,
                                             const Vec& k_in_K);

// Builds H_{tau,k} after checking the extension condition, verifies it
// mechanically, and computes its order.
AutMap make_H(const PetitAlgebra& A, const RingAut& tau, const Vec& k_in_K);
AutMap make_H_id(const PetitAlgebra& A, const Vec& k_in_K);

struct AutGroup {
  const PetitAlgebra* owner = nullptr;
  std::vector<AutMap> elements;
  std::vector<std::vector<int>> table;  // table[i][j] = index of e_i ∘ e_j
  int identity_index = -1;
};
// Builds the composition table; throws InternalError if the set is not closed.
AutGroup close_into_group(const PetitAlgebra& A, std::vector<AutMap> elements);

// One verified H_{id,k} per element of ker N_{F/F0} (finite centers only).
AutGroup enumerate_id_extensions(const PetitAlgebra& A);

struct FullAutSweep {
  AutGroup group;
  std::vector<std::pair<int, Vec>> classification;  // (j, k): H_{sigma^j, k}
  bool hyp_no_nontrivial_root = false;  // F0 has no nontrivial m-th root of 1
  bool hyp_d_not_in_proper_subfield = false;
  bool all_extend_identity = false;  // every verified pair has j = 0
};
// Exhaustive sweep over (sigma^j, k), j < ord(sigma), k in K^x, for
// D = K a finite field with deg f = ord(sigma).
FullAutSweep full_aut_group(const PetitAlgebra& A);

// Hilbert-90 witness c with c^{-1} sigma(c) = k, verified pointwise:
// G_c(x) = (c^{-1} ∘ x) ∘ c must equal H on every basis element. Stores the
// witness in H and returns it (K-coordinates).
Vec inner_realize(const PetitAlgebra& A, AutMap& H);

struct CyclicExtensionResult {
  enum class Verdict { True, False, NotApplicable, Unknown } verdict = Verdict::Unknown;
  DivisionStatus division = DivisionStatus::Unknown;
  bool free_rank_ok = false;
  bool subgroup_ok = false;
  std::optional<AutMap> generator;
  std::string detail;
};
// Is A a cyclic extension of D of degree m: (a) A division, (b) free left
// D-module of rank m, (c) a cyclic subgroup of order m of automorphisms
// restricting to the identity on D. The H_{id,omega} witness is preferred
// when F0 contains a primitive m-th root of unity.
CyclicExtensionResult cyclic_extension_verdict(const PetitAlgebra& A, int m,
                                               uint64_t scan_budget = uint64_t{1} << 16);

}  // namespace nacx
