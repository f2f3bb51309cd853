#include <doctest.h>

#include "common.hpp"
#include "nacx/petit.hpp"

using namespace nacx;
using namespace nacx::testutil;

TEST_CASE("products reduce modulo f") {
  auto A = petit_over(F4(), 1, 2, 2);  // S_{t^2 - alpha}
  auto K = F4();
  const CoeffAlgebra& D = dynamic_cast<const CoeffAlgebra&>(A->coeff());
  // (1 + alpha t) ∘ (alpha + t) = 1
  Vec g = A->add(A->from_coeff(D.one(), 0), A->from_coeff(D.from_K(K->element_at(2)), 1));
  Vec h = A->add(A->from_coeff(D.from_K(K->element_at(2)), 0), A->from_coeff(D.one(), 1));
  CHECK(A->mul(g, h) == A->one());

  // low-degree products agree with the ring product
  Vec a = A->from_coeff(D.from_K(K->element_at(3)), 0);
  Vec b = A->from_coeff(D.from_K(K->element_at(2)), 1);
  SkewPoly ring_prod = sp_mul(A->to_poly(a), A->to_poly(b));
  CHECK(A->mul(a, b) == A->from_poly(ring_prod));

  // unital
  for (size_t i = 0; i < A->dim(); ++i) {
    CHECK(A->mul(A->one(), A->basis_element(i)) == A->basis_element(i));
    CHECK(A->mul(A->basis_element(i), A->one()) == A->basis_element(i));
  }
}

TEST_CASE("associators certify nonassociativity exactly where expected") {
  auto A = petit_over(F4(), 1, 2, 2);
  // [t, t, t] != 0
  Vec t = A->from_coeff(A->coeff().one(), 1);
  CHECK_FALSE(A->is_zero(A->associator(t, t, t)));
  // [x, y, z] = 0 whenever x, y lie in D
  const Ring& D = A->coeff();
  for (size_t i = 0; i < D.dim(); ++i)
    for (size_t j = 0; j < D.dim(); ++j)
      for (size_t k = 0; k < A->dim(); ++k)
        CHECK(A->is_zero(A->associator(A->from_coeff(D.basis_element(i)),
                                       A->from_coeff(D.basis_element(j)),
                                       A->basis_element(k))));
  // d in F0: everything associates
  auto Aassoc = petit_over(F4(), 1, 2, 1);
  CHECK(Aassoc->all_associators_vanish());
  CHECK_FALSE(A->all_associators_vanish());
}

TEST_CASE("bilinearity of the product") {
  auto A = petit_over(F9(), 1, 2, 3);
  Rng rng{17};
  for (int trial = 0; trial < 50; ++trial) {
    Vec a = A->element_at(rng.next() % A->size_u64());
    Vec b = A->element_at(rng.next() % A->size_u64());
    Vec c = A->element_at(rng.next() % A->size_u64());
    CHECK(A->mul(A->add(a, b), c) == A->add(A->mul(a, c), A->mul(b, c)));
    CHECK(A->mul(a, A->add(b, c)) == A->add(A->mul(a, b), A->mul(a, c)));
  }
}

TEST_CASE("F0 computation matches Fix(sigma) ∩ C(D)") {
  auto A = petit_over(F4(), 1, 2, 2);
  const auto& f0 = A->f0_compute();
  CHECK(f0.field_in_coeff.field->dim() == 1);
  CHECK(f0.field_in_coeff.field->name() == "F2");
  CHECK(f0.matches_fix_sigma_center);

  auto A9 = petit_over(F9(), 1, 2, 4);
  CHECK(A9->f0_compute().field_in_coeff.field->name() == "F3");

  // associative split case d = 1: F0 is still F2
  auto As = petit_over(F4(), 1, 2, 1);
  CHECK(As->f0_compute().field_in_coeff.field->dim() == 1);
}

TEST_CASE("dimension over F0 is m^2 n^2 on matched instances") {
  auto A = petit_over(F4(), 1, 2, 2);
  CHECK(A->module_view().basis.size() == 4);  // m^2 n^2 = 4 over F2
  auto A8 = petit_over(F8(), 1, 3, 2);
  CHECK(A8->module_view().basis.size() == 9);  // m = 3, n = 1
}

TEST_CASE("nuclei of the nonassociative quotient") {
  auto A = petit_over(F4(), 1, 2, 2);
  auto l = A->nucleus(PetitAlgebra::NucleusSide::Left);
  auto m = A->nucleus(PetitAlgebra::NucleusSide::Middle);
  auto r = A->nucleus(PetitAlgebra::NucleusSide::Right);
  CHECK(l.basis_rows.rows() == 2);
  CHECK(m.basis_rows.rows() == 2);
  CHECK(r.basis_rows.rows() == 2);
  CHECK(l.dim_over_f0 == 2);
  // the independent right-nucleus characterization agrees
  CHECK(A->right_nucleus_by_remainder() == r.basis_rows);
  // left/middle nuclei are exactly the coefficient ring
  ScalarOps ops{&A->prime()};
  Matrix<Scalar> demb(A->coeff().dim(), A->dim(), A->prime().zero());
  for (size_t i = 0; i < A->coeff().dim(); ++i)
    demb.set_row(i, A->from_coeff(A->coeff().basis_element(i)));
  CHECK(l.basis_rows == canonical_rowspace(ops, demb));
  CHECK(m.basis_rows == canonical_rowspace(ops, demb));

  // associative case: all three nuclei are the whole algebra
  auto As = petit_over(F4(), 1, 2, 1);
  CHECK(As->nucleus(PetitAlgebra::NucleusSide::Left).basis_rows.rows() == 4);
  CHECK(As->nucleus(PetitAlgebra::NucleusSide::Middle).basis_rows.rows() == 4);
  CHECK(As->nucleus(PetitAlgebra::NucleusSide::Right).basis_rows.rows() == 4);
}

TEST_CASE("division strategy ladder with agreeing methods") {
  auto A = petit_over(F4(), 1, 2, 2);
  const auto& dc = A->is_division();
  CHECK(dc.verdict == DivisionStatus::Division);
  CHECK(dc.methods.find("degree2_criterion") != std::string::npos);
  CHECK(dc.methods.find("exhaustive_monic_right_factor_search") != std::string::npos);
  CHECK(dc.methods.find("exhaustive_zero_divisor_scan") != std::string::npos);

  auto As = petit_over(F4(), 1, 2, 1);
  const auto& dcs = As->is_division();
  CHECK(dcs.verdict == DivisionStatus::NotDivision);
  REQUIRE(dcs.zero_divisor.has_value());
  CHECK(As->is_zero(As->mul(dcs.zero_divisor->first, dcs.zero_divisor->second)));
  REQUIRE(dcs.factorization.has_value());

  auto A9 = petit_over(F9(), 1, 2, 5);
  CHECK(A9->is_division().verdict == DivisionStatus::Division);
}

TEST_CASE("one-sided inverses") {
  auto A = petit_over(F4(), 1, 2, 2);
  auto K = F4();
  const CoeffAlgebra& D = dynamic_cast<const CoeffAlgebra&>(A->coeff());
  Vec g = A->add(A->from_coeff(D.one(), 0), A->from_coeff(D.from_K(K->element_at(2)), 1));
  Vec h = A->add(A->from_coeff(D.from_K(K->element_at(2)), 0), A->from_coeff(D.one(), 1));
  auto inv = A->inverse_pair(h);
  REQUIRE(inv.left.has_value());
  CHECK(*inv.left == g);  // g ∘ h = 1
  CHECK(A->mul(*inv.left, h) == A->one());
  REQUIRE(inv.right.has_value());
  CHECK(A->mul(h, *inv.right) == A->one());

  CHECK(A->inverse_pair(A->one()).two_sided);
  // an element of D^x inverts inside D
  Vec xd = A->from_coeff(D.from_K(K->element_at(3)));
  auto invd = A->inverse_pair(xd);
  CHECK(invd.two_sided);
  CHECK(*invd.left == A->from_coeff(D.from_K(K->inv(K->element_at(3)))));

  // singular elements come with zero-divisor witnesses
  auto As = petit_over(F4(), 1, 2, 1);
  Vec t = As->from_coeff(As->coeff().one(), 1);
  Vec bad = As->add(t, As->one());  // (t+1)(t+1) = t^2 + 1 = 0 in S_{t^2-1}, char 2
  auto res = As->inverse_pair(bad);
  CHECK_FALSE(res.left.has_value());
  REQUIRE(res.zero_divisor.has_value());
  CHECK(As->inverse_pair(As->zero()).zero_divisor.has_value());
}

TEST_CASE("multiplication is F0-bilinear") {
  // lambda in F0 pulls out of both slots of the product on every basis pair.
  for (auto& A : {petit_over(F4(), 1, 2, 2), petit_over(F9(), 1, 3, 2)}) {
    const auto& f0 = A->f0_compute().field_in_coeff;
    for (size_t l = 0; l < f0.field->dim(); ++l) {
      Vec lam = A->from_coeff(f0.into_ring.col(l));
      for (size_t i = 0; i < A->dim(); ++i)
        for (size_t j = 0; j < A->dim(); ++j) {
          Vec x = A->basis_element(i), y = A->basis_element(j);
          Vec lx = A->mul(lam, x);
          CHECK(A->mul(lx, y) == A->mul(lam, A->mul(x, y)));
          CHECK(A->mul(x, A->mul(lam, y)) == A->mul(lam, A->mul(x, y)));
        }
    }
  }
}

TEST_CASE("division strategies stay in agreement over F25") {
  auto K = F25();
  CoeffPtr D = CoeffAlgebra::field_algebra(K, FieldAutomorphism::frobenius(K, 1));
  auto R = std::make_shared<SkewPolyRing>(D, D->sigma());
  for (size_t m : {2, 3}) {
    for (uint64_t d = 0; d < 25; ++d) {
      SkewPoly f = sp_binomial(*R, m, D->from_K(K->element_at(d)));
      auto crit = irreducible_criterion(f);
      auto exh = irreducible_exhaustive(f);
      CHECK(crit.verdict == exh.verdict);
      if (m == 2) {
        // the |A| = 625 case also gets the full zero-divisor scan
        auto A = PetitAlgebra::make(R, f);
        const auto& dc = A->is_division();
        CHECK((dc.verdict == DivisionStatus::Division) ==
              (crit.verdict == IrredVerdict::Irreducible));
        CHECK(dc.methods.find("scan") != std::string::npos);
      }
    }
  }
}

TEST_CASE("index products agree with exact products") {
  auto A = petit_over(F9(), 1, 3, 2);
  Rng rng{23};
  for (int trial = 0; trial < 200; ++trial) {
    uint32_t i = static_cast<uint32_t>(rng.next() % A->size_u64());
    uint32_t j = static_cast<uint32_t>(rng.next() % A->size_u64());
    CHECK(A->mul_idx(i, j) == A->index_of(A->mul(A->element_at(i), A->element_at(j))));
  }
}

TEST_CASE("general monic f beyond binomials is accepted by construction") {
  auto K = F4();
  CoeffPtr D = CoeffAlgebra::field_algebra(K, FieldAutomorphism::frobenius(K, 1));
  auto R = std::make_shared<SkewPolyRing>(D, D->sigma());
  // f = t^2 + t + alpha
  SkewPoly f = sp_make(*R, {D->from_K(K->element_at(2)), D->one(), D->one()});
  auto A = PetitAlgebra::make(R, f);
  CHECK_FALSE(A->binomial());
  CHECK_THROWS_AS(A->d(), InputError);
  CHECK(A->dim() == 4);
  // the quotient is still unital and bilinear
  CHECK(A->mul(A->one(), A->basis_element(3)) == A->basis_element(3));
}

TEST_CASE("m = 1 degenerates to the coefficient ring") {
  auto A = petit_over(F4(), 1, 1, 2);
  CHECK(A->dim() == 2);
  CHECK(A->is_division().verdict == DivisionStatus::Division);
  CHECK(A->all_associators_vanish());
}
