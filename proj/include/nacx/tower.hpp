// Extension towers over an associative base: given an associative quotient
// A = (D, sigma, a) with a in F0, an automorphism rho of A, b in A and
// k in F0, check the five tower conditions and build
// B = A[t;rho] / (t^m - b) together with its H_{tau,k} of order mq.
//
// Over finite fields no division instance exists (a finite base with
// q n > 1 always splits), so the division-dependent conclusion is labeled
// separately from the structural facts, which are fully verified.

#pragma once

#include <optional>
#include <string>

#include "nacx/autos.hpp"

namespace nacx {

struct TowerSpec {
  PetitPtr A;
  int q = 0;     // order of sigma on the center of D; equals deg f_A
  int m = 0;     // tower degree
  Vec omega_K;   // primitive q-th root of unity in F0 (K-coordinates)
  AutMap tau;    // H_{id,omega} on A, verified of order q
  RingAut rho;   // verified automorphism of A
  Vec b;         // element of A
  Vec k_K;       // element of F0 (K-coordinates)
  Vec k_A;       // the same k embedded into A
};

// Validates the base (A associative with a in F0), locates or verifies omega,
// builds tau = H_{id,omega} and checks its order is q.
TowerSpec make_tower_spec(PetitPtr A, RingAut rho, Vec b, Vec k_K, int m,
                          std::optional<Vec> omega_K = std::nullopt);

struct TowerConditions {
  bool commute = false;                  // (1) tau rho = rho tau
  bool scaling = false;                  // (2) tau(b) = k rho(k) ... rho^{m-1}(k) b
  Vec scaling_lhs, scaling_rhs;
  bool kq_primitive = false;             // (3) k^q is a primitive m-th root of unity
  IrreducibilityResult irreducibility;   // (4) t^m - b over A[t;rho]
  bool finite_dimensional = false;       // (5) over F0 ∩ Fix(rho)
  size_t dim_over_intersection = 0;
  std::string base_division_note;        // the division hypothesis status of A
};
TowerConditions check_conditions(const TowerSpec& spec,
                                 uint64_t factor_budget = uint64_t{1} << 22);

struct TowerBuild {
  PetitPtr B;
  std::optional<RingAut> H;  // verified automorphism H_{tau,k} of B
  int order = 0;
  bool order_is_mq = false;
  bool hq_matches_id_kq = false;  // H^q = H_{id, k^q} pointwise
  TowerConditions conditions;
  std::string conclusion;
};
// Needs conditions (1) and (2); (3) pins the order, (4)/(5) the division
// conclusion. The returned H is mechanically verified on all basis pairs.
TowerBuild build_tower(const TowerSpec& spec, uint64_t factor_budget = uint64_t{1} << 22);

}  // namespace nacx
