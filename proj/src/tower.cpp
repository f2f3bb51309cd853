#include "nacx/tower.hpp"

namespace nacx {

TowerSpec make_tower_spec(PetitPtr A, RingAut rho, Vec b, Vec k_K, int m,
                          std::optional<Vec> omega_K) {
  if (!A) throw InputError("tower: null base algebra");
  const CoeffAlgebra& D = require_coeff_algebra(*A);
  A->check_elem(b);
  D.K().check_elem(k_K);
  if (m < 1) throw InputError("tower: m must be positive");
  if (&rho.owner() != A.get()) throw InputError("tower: rho does not act on A");

  if (!is_right_invariant(A->f()).invariant)
    throw VerifyError("tower: the base algebra is not associative (f is not right-invariant)");
  if (!A->binomial()) throw InputError("tower: the base must be a binomial quotient t^q - a");
  auto a_K = D.pullback_to_K(A->d());
  if (!a_K || !D.f0_in_K().contains(*a_K))
    throw VerifyError("tower: the base constant a does not lie in F0");
  int q = D.m();
  if (A->m() != static_cast<size_t>(q))
    throw InputError("tower: deg f_A must equal the order q of sigma on the center");

  const FieldPtr& F0 = D.f0_in_K().sub_ptr();
  Vec omega;
  if (omega_K) {
    auto w0 = D.f0_in_K().pullback(*omega_K);
    if (!w0 || !verify_root_of_unity(*F0, *w0, q))
      throw VerifyError("tower: supplied omega is not a primitive q-th root of unity in F0");
    omega = *omega_K;
  } else {
    RootOfUnityResult r = primitive_root_of_unity(*F0, q);
    if (r.verdict != RootOfUnityResult::Verdict::Found)
      throw VerifyError("tower: F0 has no primitive q-th root of unity (supply a witness "
                        "over infinite fields)");
    omega = D.f0_in_K().apply(*r.omega);
  }

  AutMap tau = make_H_id(*A, omega);
  if (tau.order != q) throw InternalError("tower: H_{id,omega} does not have order q");
  auto k_F0 = D.f0_in_K().pullback(k_K);
  if (!k_F0) throw InputError("tower: k does not lie in F0");
  if (F0->is_zero(*k_F0)) throw InputError("tower: k must be nonzero");
  Vec k_A = A->from_coeff(D.from_K(k_K));
  return TowerSpec{std::move(A), q,            m,            std::move(omega), std::move(tau),
                   std::move(rho), std::move(b), std::move(k_K), std::move(k_A)};
}

TowerConditions check_conditions(const TowerSpec& spec, uint64_t factor_budget) {
  const PetitAlgebra& A = *spec.A;
  const CoeffAlgebra& D = require_coeff_algebra(A);
  TowerConditions out;

  out.commute = spec.tau.map.compose(spec.rho).equals(spec.rho.compose(spec.tau.map));

  Vec prod = spec.k_A;
  for (int l = 1; l < spec.m; ++l)
    prod = A.mul(prod, spec.rho.power(l).apply(spec.k_A));
  out.scaling_lhs = spec.tau.map.apply(spec.b);
  out.scaling_rhs = A.mul(prod, spec.b);
  out.scaling = A.eq(out.scaling_lhs, out.scaling_rhs);

  const FieldPtr& F0 = D.f0_in_K().sub_ptr();
  Vec k_F0 = *D.f0_in_K().pullback(spec.k_K);
  Vec kq = F0->pow(k_F0, BigInt(spec.q));
  out.kq_primitive = verify_root_of_unity(*F0, kq, spec.m);

  auto RB = std::make_shared<SkewPolyRing>(spec.A, spec.rho);
  out.irreducibility = irreducible_exhaustive(sp_binomial(*RB, spec.m, spec.b), factor_budget);

  // (5) finite-dimensionality over F0 ∩ Fix(rho); the other two alternatives
  // are informational and not evaluated.
  ScalarOps ops{&A.prime()};
  const Matrix<Scalar>& f0m = D.f0_in_K().matrix();
  Matrix<Scalar> constraint(A.dim(), F0->dim(), A.prime().zero());
  for (size_t j = 0; j < F0->dim(); ++j) {
    Vec in_A = A.from_coeff(D.from_K(f0m.col(j)));
    Vec img = spec.rho.apply(in_A);
    for (size_t r = 0; r < A.dim(); ++r) constraint.at(r, j) = ops.sub(img[r], in_A[r]);
  }
  size_t fixed_dim = kernel_basis(ops, constraint).rows();
  out.finite_dimensional = fixed_dim >= 1;
  out.dim_over_intersection = fixed_dim ? (spec.m * A.dim()) / fixed_dim : 0;

  switch (spec.A->is_division().verdict) {
    case DivisionStatus::Division:
      out.base_division_note = "base algebra is division";
      break;
    case DivisionStatus::NotDivision:
      out.base_division_note =
          "base algebra is not division (finite bases with q n > 1 always split); the "
          "division hypothesis of the extension conclusion is not met";
      break;
    case DivisionStatus::Unknown:
      out.base_division_note = "division status of the base is unverified";
      break;
  }
  return out;
}

TowerBuild build_tower(const TowerSpec& spec, uint64_t factor_budget) {
  TowerBuild out;
  out.conditions = check_conditions(spec, factor_budget);
  if (!out.conditions.commute)
    throw VerifyError("tower: condition (1) fails, tau does not commute with rho");
  if (!out.conditions.scaling)
    throw VerifyError("tower: condition (2) fails, tau(b) != k rho(k)...rho^{m-1}(k) b");

  auto RB = std::make_shared<SkewPolyRing>(spec.A, spec.rho);
  out.B = PetitAlgebra::make(RB, sp_binomial(*RB, spec.m, spec.b));

  Matrix<Scalar> cand = h_candidate_matrix(*out.B, spec.tau.map, spec.k_A);
  auto verified = RingAut::try_verified(*out.B, std::move(cand));
  if (!verified)
    throw InternalError("tower: H_{tau,k} failed verification although (1) and (2) hold");
  out.H = std::move(*verified);
  out.order = out.H->order();
  out.order_is_mq = (out.order == spec.m * spec.q);

  // H^q = H_{id, k^q} pointwise.
  const PetitAlgebra& A = *spec.A;
  Vec kq_A = spec.k_A;
  for (int i = 1; i < spec.q; ++i) kq_A = A.mul(kq_A, spec.k_A);
  Matrix<Scalar> idkq =
      h_candidate_matrix(*out.B, RingAut::identity(A), kq_A);
  out.hq_matches_id_kq = (out.H->power(spec.q).matrix() == idkq);

  bool division_route = A.is_division().verdict == DivisionStatus::Division &&
                        out.conditions.irreducibility.verdict == IrredVerdict::Irreducible;
  if (division_route && out.conditions.kq_primitive) {
    out.conclusion = "nonassociative cyclic extension of the coefficient ring of degree " +
                     std::to_string(spec.m * spec.q);
  } else {
    out.conclusion =
        "structural verification only (automorphism order law checked); division "
        "hypotheses not met: " + out.conditions.base_division_note;
  }
  return out;
}

}  // namespace nacx
