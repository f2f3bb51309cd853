#include <doctest.h>

#include "common.hpp"
#include "nacx/tower.hpp"

using namespace nacx;
using namespace nacx::testutil;

namespace {

// The F25 structural instance: A = S_{t^2 - 1} over F25[t;Frob] (associative,
// split), rho = id, b = x u, k = 2.
TowerSpec desk_spec() {
  auto A = petit_over(F25(), 1, 2, 1);
  const CoeffAlgebra& D = require_coeff_algebra(*A);
  Vec b = A->from_coeff(D.from_K(F25()->element_at(5)), 1);
  Vec k = F25()->from_scalar(Scalar(2));
  return make_tower_spec(A, RingAut::identity(*A), b, k, 2);
}

}  // namespace

TEST_CASE("spec validation computes q, omega and tau") {
  TowerSpec spec = desk_spec();
  CHECK(spec.q == 2);
  CHECK(spec.m == 2);
  CHECK(spec.tau.order == 2);
  // omega = -1 = 4 in F5 ⊆ F25
  CHECK(spec.omega_K == F25()->from_scalar(Scalar(4)));
}

TEST_CASE("conditions of the desk instance") {
  TowerSpec spec = desk_spec();
  TowerConditions c = check_conditions(spec);
  CHECK(c.commute);
  CHECK(c.scaling);
  CHECK(c.kq_primitive);
  // b = x u has no monic right factor; over the split base the search cannot
  // conclude irreducibility, so the verdict stays unknown with a note.
  CHECK(c.irreducibility.verdict == IrredVerdict::Unknown);
  CHECK_FALSE(c.irreducibility.complete);
  CHECK(c.finite_dimensional);
  CHECK(c.dim_over_intersection == 8);  // dim_{F5} B
  CHECK(c.base_division_note.find("not division") != std::string::npos);
}

TEST_CASE("built tower has the order-mq automorphism") {
  TowerSpec spec = desk_spec();
  TowerBuild built = build_tower(spec);
  CHECK(built.B->dim() == spec.m * spec.A->dim());
  CHECK(built.order == 4);
  CHECK(built.order_is_mq);
  CHECK(built.hq_matches_id_kq);
  CHECK(built.conclusion.find("structural") != std::string::npos);
  // H restricted to A-constants applies tau
  Vec a = built.B->from_coeff(spec.A->basis_element(1), 0);
  CHECK(built.H->apply(a) == built.B->from_coeff(spec.tau.map.apply(spec.A->basis_element(1)), 0));
}

TEST_CASE("condition 3 fails for k = 1 when m > 1") {
  auto A = petit_over(F25(), 1, 2, 1);
  const CoeffAlgebra& D = require_coeff_algebra(*A);
  Vec b = A->from_coeff(D.from_K(F25()->element_at(5)), 1);
  TowerSpec spec = make_tower_spec(A, RingAut::identity(*A), b, F25()->one(), 2);
  TowerConditions c = check_conditions(spec);
  CHECK_FALSE(c.kq_primitive);
  // conditions (1)-(2): tau(b) = -b but k rho(k) b = b, so (2) fails too
  CHECK_FALSE(c.scaling);
  CHECK_THROWS_AS(build_tower(spec), VerifyError);
}

TEST_CASE("condition 2 failure is detected with b = 1") {
  auto A = petit_over(F25(), 1, 2, 1);
  TowerSpec spec = make_tower_spec(A, RingAut::identity(*A), A->one(),
                                   F25()->from_scalar(Scalar(2)), 2);
  TowerConditions c = check_conditions(spec);
  CHECK(c.commute);
  CHECK_FALSE(c.scaling);  // tau(1) = 1 but k^2 * 1 = -1
  CHECK_THROWS_AS(build_tower(spec), VerifyError);
}

TEST_CASE("degenerate m = 1 tower reproduces the base") {
  auto A = petit_over(F25(), 1, 2, 1);
  // b central (in F0), k = 1, m = 1
  Vec b = A->from_coeff(A->coeff().one(), 0);
  TowerSpec spec = make_tower_spec(A, RingAut::identity(*A), b, F25()->one(), 1);
  TowerBuild built = build_tower(spec);
  CHECK(built.B->dim() == A->dim());
  // H = tau on the degenerate tower
  CHECK(built.H->matrix() == spec.tau.map.matrix());
  CHECK(built.order == 2);
  CHECK(built.conditions.kq_primitive);  // 1 is the primitive first root
}

TEST_CASE("nonassociative bases are rejected") {
  auto A = petit_over(F25(), 1, 2, 5);  // d = x not in F5: nonassociative
  CHECK_THROWS_AS(
      make_tower_spec(A, RingAut::identity(*A), A->one(), F25()->from_scalar(Scalar(2)), 2),
      VerifyError);
}

TEST_CASE("base constants outside F0 are rejected") {
  // a = x is not even right-invariant, caught as nonassociative first; use a
  // nontrivial rho mismatch instead: rho acting on the wrong algebra.
  auto A = petit_over(F25(), 1, 2, 1);
  auto B = petit_over(F25(), 1, 2, 2);
  CHECK_THROWS_AS(
      make_tower_spec(A, RingAut::identity(*B), A->one(), F25()->from_scalar(Scalar(2)), 2),
      InputError);
}

TEST_CASE("rho = H_{id,k'} as a nontrivial base automorphism") {
  // rho = tau itself commutes with tau; pick b fixed appropriately: b = 1
  // fails (2), but b = x u with k = 2 still satisfies tau(b) = k rho(k) b
  // because rho(k) = k for k in F0.
  auto A = petit_over(F25(), 1, 2, 1);
  const CoeffAlgebra& D = require_coeff_algebra(*A);
  Vec om = F25()->from_scalar(Scalar(4));
  RingAut rho = make_H_id(*A, om).map;
  Vec b = A->from_coeff(D.from_K(F25()->element_at(5)), 1);
  TowerSpec spec = make_tower_spec(A, rho, b, F25()->from_scalar(Scalar(2)), 2);
  TowerConditions c = check_conditions(spec);
  CHECK(c.commute);
  // tau(b) = -b, k rho(k) b = 4 b = -b
  CHECK(c.scaling);
  TowerBuild built = build_tower(spec);
  CHECK(built.order == 4);
}
