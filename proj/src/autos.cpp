#include "nacx/autos.hpp"

namespace nacx {

const CoeffAlgebra& require_coeff_algebra(const PetitAlgebra& A) {
  const auto* D = dynamic_cast<const CoeffAlgebra*>(&A.coeff());
  if (!D)
    throw InputError(A.describe() +
                     ": automorphism machinery needs a field or cyclic coefficient algebra");
  return *D;
}

Matrix<Scalar> h_candidate_matrix(const PetitAlgebra& A, const RingAut& tau_on_coeff,
                                  const Vec& k_in_coeff) {
  const Ring& D = A.coeff();
  D.check_elem(k_in_coeff);
  size_t m = A.m();
  // lambda_i = prod_{l<i} sigma^l(k), computed in D.
  std::vector<Vec> lambda(m);
  lambda[0] = D.one();
  for (size_t i = 1; i < m; ++i)
    lambda[i] = D.mul(lambda[i - 1], A.skew_ring().sigma_power(i - 1).apply(k_in_coeff));
  Matrix<Scalar> out(A.dim(), A.dim(), D.prime().zero());
  size_t cd = D.dim();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < cd; ++j) {
      Vec img_coeff = D.mul(tau_on_coeff.apply(D.basis_element(j)), lambda[i]);
      Vec img = A.from_coeff(img_coeff, i);
      out.set_col(i * cd + j, img);
    }
  return out;
}

ExtensionConditionResult extension_condition(const PetitAlgebra& A, const RingAut& tau,
                                             const Vec& k_in_K) {
  const CoeffAlgebra& D = require_coeff_algebra(A);
  const Vec& d = A.d();  // throws unless binomial
  D.K().check_elem(k_in_K);
  if (D.K().is_zero(k_in_K)) throw InputError("extension_condition: k must be nonzero");
  auto k_in_F = D.center_in_K().pullback(k_in_K);
  if (!k_in_F) throw InputError("extension_condition: k does not lie in the center F");

  // tau must commute with sigma on D.
  const RingAut& sigma = A.skew_ring().sigma();
  if (!tau.compose(sigma).equals(sigma.compose(tau))) {
    for (size_t i = 0; i < D.dim(); ++i) {
      Vec b = D.basis_element(i);
      if (!D.eq(tau.apply(sigma.apply(b)), sigma.apply(tau.apply(b))))
        throw VerifyError("extension_condition: tau does not commute with sigma; "
                          "witness basis element " + std::to_string(i));
    }
  }

  ExtensionConditionResult res;
  Vec norm_in_F = D.center_tower().norm_in_top(*k_in_F);
  Vec norm_in_K = D.center_in_K().apply(norm_in_F);
  res.tau_d = tau.apply(d);
  res.norm_times_d = D.mul(D.from_K(norm_in_K), d);
  res.holds = D.eq(res.tau_d, res.norm_times_d);
  return res;
}

AutMap make_H(const PetitAlgebra& A, const RingAut& tau, const Vec& k_in_K) {
  const CoeffAlgebra& D = require_coeff_algebra(A);
  ExtensionConditionResult cond = extension_condition(A, tau, k_in_K);
  if (!cond.holds)
    throw DomainError("make_H: extension condition tau(d) = N_{F/F0}(k) d fails");
  Matrix<Scalar> m = h_candidate_matrix(A, tau, D.from_K(k_in_K));
  auto verified = RingAut::try_verified(A, std::move(m));
  if (!verified)
    throw InternalError("make_H: candidate failed mechanical verification despite the "
                        "extension condition");
  AutMap out{&A, std::move(*verified), tau, k_in_K, std::nullopt, 0};
  out.order = out.map.order();
  return out;
}

AutMap make_H_id(const PetitAlgebra& A, const Vec& k_in_K) {
  return make_H(A, RingAut::identity(A.coeff()), k_in_K);
}

AutGroup close_into_group(const PetitAlgebra& A, std::vector<AutMap> elements) {
  AutGroup g;
  g.owner = &A;
  g.elements = std::move(elements);
  size_t n = g.elements.size();
  g.table.assign(n, std::vector<int>(n, -1));
  for (size_t i = 0; i < n; ++i) {
    if (g.elements[i].map.is_identity()) g.identity_index = static_cast<int>(i);
    for (size_t j = 0; j < n; ++j) {
      RingAut comp = g.elements[i].map.compose(g.elements[j].map);
      for (size_t t = 0; t < n; ++t)
        if (comp.equals(g.elements[t].map)) {
          g.table[i][j] = static_cast<int>(t);
          break;
        }
      if (g.table[i][j] < 0)
        throw InternalError("automorphism set is not closed under composition");
    }
  }
  return g;
}

AutGroup enumerate_id_extensions(const PetitAlgebra& A) {
  const CoeffAlgebra& D = require_coeff_algebra(A);
  if (!D.K().finite())
    throw DomainError("enumerate_id_extensions is unavailable over infinite centers");
  std::vector<AutMap> elems;
  for (const Vec& k_F : D.center_tower().ker_norm_enumerate()) {
    Vec k_K = D.center_in_K().apply(k_F);
    elems.push_back(make_H_id(A, k_K));
  }
  return close_into_group(A, std::move(elems));
}

FullAutSweep full_aut_group(const PetitAlgebra& A) {
  const CoeffAlgebra& D = require_coeff_algebra(A);
  if (D.kind() != CoeffAlgebra::Kind::Field)
    throw InputError("full_aut_group: the exhaustive sweep is defined for D = K a field");
  if (!D.K().finite()) throw DomainError("full_aut_group requires a finite field");
  int ord = D.sigma_K().order();
  if (static_cast<size_t>(ord) != A.m())
    throw InputError("full_aut_group: deg f must equal the order of sigma");

  FullAutSweep out;
  std::vector<AutMap> elems;
  uint64_t q = D.K().size_u64();
  for (int j = 0; j < ord; ++j) {
    RingAut tau = D.sigma().power(j);
    for (uint64_t idx = 1; idx < q; ++idx) {
      Vec k = D.K().element_at(idx);
      if (!extension_condition(A, tau, k).holds) continue;
      Matrix<Scalar> m = h_candidate_matrix(A, tau, D.from_K(k));
      auto verified = RingAut::try_verified(A, std::move(m));
      if (!verified) continue;
      AutMap am{&A, std::move(*verified), tau, k, std::nullopt, 0};
      am.order = am.map.order();
      elems.push_back(std::move(am));
      out.classification.emplace_back(j, k);
    }
  }
  out.all_extend_identity = true;
  for (const auto& [j, k] : out.classification)
    if (j != 0) out.all_extend_identity = false;
  out.hyp_no_nontrivial_root =
      !has_nontrivial_mth_root(*D.f0_in_K().sub_ptr(), static_cast<int>(A.m()));
  out.hyp_d_not_in_proper_subfield = !in_proper_subfield(D.K(), *D.pullback_to_K(A.d())).in_proper;
  out.group = close_into_group(A, std::move(elems));
  return out;
}

Vec inner_realize(const PetitAlgebra& A, AutMap& H) {
  const CoeffAlgebra& D = require_coeff_algebra(A);
  if (!H.tau.is_identity())
    throw InputError("inner_realize applies to maps extending the identity of D");
  auto k_F = D.center_in_K().pullback(H.k);
  if (!k_F) throw InternalError("inner_realize: stored k escaped the center");
  Vec c_F = D.center_tower().hilbert90_solve(*k_F);
  Vec c_K = D.center_in_K().apply(c_F);
  Vec c_D = D.from_K(c_K);
  auto c_inv = D.inverse(c_D);
  if (!c_inv) throw InternalError("inner_realize: Hilbert-90 witness is not a unit");
  Vec cA = A.from_coeff(c_D);
  Vec cA_inv = A.from_coeff(*c_inv);
  // G_c(x) = (c^{-1} ∘ x) ∘ c, pointwise on every basis element.
  for (size_t i = 0; i < A.dim(); ++i) {
    Vec lhs = A.mul(A.mul(cA_inv, A.basis_element(i)), cA);
    if (!A.eq(lhs, H.map.apply(A.basis_element(i))))
      throw InternalError("inner_realize: G_c disagrees with H_{id,k} on basis element " +
                          std::to_string(i));
  }
  H.inner_witness = c_K;
  return c_K;
}

CyclicExtensionResult cyclic_extension_verdict(const PetitAlgebra& A, int m,
                                               uint64_t scan_budget) {
  const CoeffAlgebra& D = require_coeff_algebra(A);
  CyclicExtensionResult res;
  const auto& div = A.is_division(uint64_t{1} << 24, uint64_t{1} << 22, scan_budget);
  res.division = div.verdict;
  if (div.verdict == DivisionStatus::NotDivision) {
    res.verdict = CyclicExtensionResult::Verdict::NotApplicable;
    res.detail = "not applicable: the algebra is not division";
    return res;
  }
  if (div.verdict == DivisionStatus::Unknown) {
    res.verdict = CyclicExtensionResult::Verdict::Unknown;
    res.detail = "division verdict unknown: " + div.note;
    return res;
  }
  res.free_rank_ok =
      (static_cast<size_t>(m) == A.m()) && (A.dim() == A.m() * D.dim());

  // Preferred generator: H_{id,omega} for a primitive m-th root omega in F0.
  const FieldPtr& F0 = D.f0_in_K().sub_ptr();
  RootOfUnityResult root = primitive_root_of_unity(*F0, m);
  if (root.verdict == RootOfUnityResult::Verdict::Found) {
    Vec omega_K = D.f0_in_K().apply(*root.omega);
    AutMap H = make_H_id(A, omega_K);
    if (H.order == m) {
      res.subgroup_ok = true;
      res.generator = std::move(H);
    }
  }
  if (!res.subgroup_ok) {
    if (!D.K().finite()) {
      res.verdict = CyclicExtensionResult::Verdict::Unknown;
      res.detail = "subgroup search unavailable over infinite centers";
      return res;
    }
    for (const Vec& k_F : D.center_tower().ker_norm_enumerate()) {
      // Multiplicative order of k equals the order of H_{id,k}.
      const FieldPresentation& F = D.center_tower().top();
      Vec pw = k_F;
      int ord = 1;
      while (!F.eq(pw, F.one())) {
        pw = F.mul(pw, k_F);
        ++ord;
      }
      if (ord != m) continue;
      AutMap H = make_H_id(A, D.center_in_K().apply(k_F));
      if (H.order == m) {
        res.subgroup_ok = true;
        res.generator = std::move(H);
        break;
      }
    }
  }
  if (res.free_rank_ok && res.subgroup_ok) {
    res.verdict = CyclicExtensionResult::Verdict::True;
    res.detail = "division, free of rank " + std::to_string(m) +
                 ", cyclic subgroup of order " + std::to_string(m) + " fixing D";
  } else {
    res.verdict = CyclicExtensionResult::Verdict::False;
    res.detail = res.free_rank_ok
                     ? "no cyclic subgroup of order " + std::to_string(m) +
                           " of automorphisms fixing D (kernel of the center norm has none)"
                     : "not a free left module of rank " + std::to_string(m);
  }
  return res;
}

}  // namespace nacx
