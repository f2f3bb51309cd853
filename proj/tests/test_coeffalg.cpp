#include <doctest.h>

#include "common.hpp"
#include "nacx/coeffalg.hpp"

using namespace nacx;
using namespace nacx::testutil;

TEST_CASE("field kind reduces to field arithmetic") {
  auto K = F4();
  auto D = CoeffAlgebra::field_algebra(K, FieldAutomorphism::frobenius(K, 1));
  CHECK(D->n() == 1);
  CHECK(D->m() == 2);
  CHECK(D->dim() == 2);
  Vec a = D->from_K(K->element_at(2)), b = D->from_K(K->element_at(3));
  CHECK(D->mul(a, b) == D->from_K(K->mul(K->element_at(2), K->element_at(3))));
  CHECK(D->division_status() == DivisionStatus::Division);
  CHECK(D->f0_in_K().sub().name() == "F2");
  CHECK(D->center_tower().degree() == 2);
}

namespace {

// (F16/F4, gamma = x -> x^4, c) with the coefficient-wise lift of Frobenius.
CoeffPtr split_csa(uint64_t c_index) {
  auto K = F16();
  auto gamma = FieldAutomorphism::frobenius(K, 2);  // order 2, fixes F4
  auto sigma = FieldAutomorphism::frobenius(K, 1);  // order 4 on K
  return CoeffAlgebra::cyclic_algebra(K, gamma, K->element_at(c_index), sigma);
}

}  // namespace

TEST_CASE("cyclic algebra structure relations") {
  auto D = split_csa(1);  // c = 1
  auto K = D->K_ptr();
  CHECK(D->n() == 2);
  CHECK(D->dim() == 8);
  CHECK(D->m() == 2);  // frobenius restricted to F4 has order 2
  CHECK(D->center_in_K().sub().dim() == 2);  // F4
  CHECK(D->f0_in_K().sub().dim() == 1);      // F2

  // e x = gamma(x) e for x in K
  Vec e = D->from_K_chunks({K->zero(), K->one()});
  Vec x = D->from_K(K->element_at(2));
  Vec gx = D->from_K_chunks({K->zero(), D->gamma()->apply(K->element_at(2))});
  CHECK(D->mul(e, x) == gx);
  // e^{n-1} e = e^2 = c
  CHECK(D->mul(e, e) == D->from_K(K->one()));

  // the lift fixes e and acts coefficient-wise
  CHECK(D->sigma().apply(e) == e);
}

TEST_CASE("full associativity scan through index tables") {
  // |D| = 256 here, within the all-triples budget.
  auto D = split_csa(1);
  const DenseRingTables* t = D->tables();
  REQUIRE(t != nullptr);
  uint64_t n = t->size;
  size_t bad = 0;
  for (uint64_t i = 0; i < n; ++i)
    for (uint64_t j = 0; j < n; ++j) {
      uint32_t ij = t->mul_at(static_cast<uint32_t>(i), static_cast<uint32_t>(j));
      for (uint64_t k = 0; k < n; ++k)
        if (t->mul_at(ij, static_cast<uint32_t>(k)) !=
            t->mul_at(static_cast<uint32_t>(i),
                      t->mul_at(static_cast<uint32_t>(j), static_cast<uint32_t>(k))))
          ++bad;
    }
  CHECK(bad == 0);
}

TEST_CASE("index-level products match exact products") {
  auto D = split_csa(1);
  Rng rng{11};
  for (int trial = 0; trial < 200; ++trial) {
    uint32_t i = static_cast<uint32_t>(rng.next() % D->size_u64());
    uint32_t j = static_cast<uint32_t>(rng.next() % D->size_u64());
    CHECK(D->mul_idx(i, j) ==
          D->index_of(D->mul(D->element_at(i), D->element_at(j))));
  }
}

TEST_CASE("lift preconditions carry witnesses") {
  auto K = F16();
  auto gamma = FieldAutomorphism::frobenius(K, 2);
  auto sigma = FieldAutomorphism::frobenius(K, 1);
  // c in F4 \ F2 is fixed by gamma but moved by sigma.
  auto fix = fixed_field(gamma);
  Vec cand = fix.apply(fix.sub().generator());
  REQUIRE(K->eq(gamma.apply(cand), cand));
  REQUIRE_FALSE(K->eq(sigma.apply(cand), cand));
  try {
    CoeffAlgebra::cyclic_algebra(K, gamma, cand, sigma);
    FAIL("lift accepted although sigma(c) != c");
  } catch (const VerifyError& e) {
    CHECK(std::string(e.what()).find("e^{n-1}, e") != std::string::npos);
  }
  // c outside the center is rejected too
  CHECK_THROWS_AS(CoeffAlgebra::cyclic_algebra(K, gamma, K->generator(), sigma), VerifyError);
  CHECK_THROWS_AS(CoeffAlgebra::cyclic_algebra(K, gamma, K->zero(), sigma), InputError);
}

TEST_CASE("center is computed, not assumed") {
  auto D = split_csa(1);
  auto cc = D->center_compute();
  CHECK(cc.equals_declared_center);
  CHECK(cc.basis_rows.rows() == 2);  // F4

  auto K = F4();
  auto Df = CoeffAlgebra::field_algebra(K, FieldAutomorphism::frobenius(K, 1));
  auto ccf = Df->center_compute();
  CHECK(ccf.equals_declared_center);
  CHECK(ccf.basis_rows.rows() == 2);  // the whole field
}

TEST_CASE("division verdicts") {
  auto K = F4();
  auto Df = CoeffAlgebra::field_algebra(K, FieldAutomorphism::frobenius(K, 1));
  CHECK(Df->division_verdict().verdict == CoeffAlgebra::DivVerdict::Division);

  // split cyclic algebra: a zero divisor is found by the scan
  auto D = split_csa(1);
  auto dv = D->division_verdict();
  CHECK(dv.verdict == CoeffAlgebra::DivVerdict::SplitWitness);
  REQUIRE(dv.zero_divisor.has_value());
  CHECK(D->is_zero(D->mul(dv.zero_divisor->first, dv.zero_divisor->second)));
  CHECK_FALSE(D->is_zero(dv.zero_divisor->first));
  CHECK_FALSE(D->is_zero(dv.zero_divisor->second));

  // Hamilton-type presentation over Q(i): no witness found, "asserted"
  auto Qi = FieldPresentation::from_prime_modulus(BigInt(0), {Scalar(1), Scalar(0), Scalar(1)},
                                                  "Qi");
  auto conj = FieldAutomorphism::from_generator_image(Qi, Vec{Scalar(0), Scalar(-1)});
  auto H = CoeffAlgebra::cyclic_algebra(Qi, conj, Qi->neg(Qi->one()),
                                        FieldAutomorphism::identity(Qi));
  auto hv = H->division_verdict(uint64_t{1} << 16, /*seed=*/1, /*random_tries=*/500);
  CHECK(hv.verdict == CoeffAlgebra::DivVerdict::Asserted);
  CHECK_FALSE(hv.zero_divisor.has_value());
}

TEST_CASE("inverses via the regular representation") {
  auto D = split_csa(1);
  CHECK(*D->inverse(D->one()) == D->one());
  // a field element inverts to its field inverse
  auto K = D->K_ptr();
  Vec x = D->from_K(K->element_at(7));
  CHECK(*D->inverse(x) == D->from_K(K->inv(K->element_at(7))));
  // inverse(x) * x = x * inverse(x) = 1 whenever an inverse comes back
  Rng rng{5};
  for (int trial = 0; trial < 100; ++trial) {
    Vec v = D->element_at(rng.next() % D->size_u64());
    auto res = D->inverse_detail(v);
    if (res.inverse) {
      CHECK(D->mul(v, *res.inverse) == D->one());
      CHECK(D->mul(*res.inverse, v) == D->one());
    } else {
      REQUIRE(res.zero_divisor.has_value());
      CHECK(D->is_zero(D->mul(v, *res.zero_divisor)));
    }
  }
  // the split algebra has non-units with zero-divisor partners
  Vec e = D->from_K_chunks({K->zero(), K->one()});
  Vec bad = D->sub(e, D->one());  // (e - 1)(e + 1) = e^2 - 1 = 0
  auto res = D->inverse_detail(bad);
  CHECK_FALSE(res.inverse.has_value());
  REQUIRE(res.zero_divisor.has_value());
  CHECK(D->is_zero(D->mul(bad, *res.zero_divisor)));
}

TEST_CASE("lift multiplicativity and order") {
  auto D = split_csa(1);
  CHECK(D->sigma().order() == 4);           // order of frobenius on K = F16
  CHECK(D->sigma_on_center().order() == 2);  // = m
}
