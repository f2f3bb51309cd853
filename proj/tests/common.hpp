// Shared fixtures for the unit suites.
#pragma once

#include "nacx/autos.hpp"

namespace nacx::testutil {

inline FieldPtr mk_field(int64_t p, std::vector<int64_t> mod, const char* name) {
  std::vector<Scalar> m;
  for (int64_t c : mod) m.emplace_back(c);
  return FieldPresentation::make_finite_field(BigInt(p), m, name);
}

inline FieldPtr F4() { return mk_field(2, {1, 1, 1}, "F4"); }
inline FieldPtr F8() { return mk_field(2, {1, 1, 0, 1}, "F8"); }
inline FieldPtr F9() { return mk_field(3, {1, 0, 1}, "F9"); }
inline FieldPtr F16() { return mk_field(2, {1, 1, 0, 0, 1}, "F16"); }
inline FieldPtr F25() { return mk_field(5, {2, 0, 1}, "F25"); }
inline FieldPtr F64() { return mk_field(2, {1, 1, 0, 0, 0, 0, 1}, "F64"); }

// S_{t^m - d} over K[t; frobenius^e], with D = K as a coefficient algebra.
inline PetitPtr petit_over(FieldPtr K, unsigned e, size_t m, uint64_t d_index) {
  CoeffPtr D = CoeffAlgebra::field_algebra(K, FieldAutomorphism::frobenius(K, e));
  auto R = std::make_shared<SkewPolyRing>(D, D->sigma());
  return PetitAlgebra::make(R, sp_binomial(*R, m, D->from_K(K->element_at(d_index))));
}

struct Rng {
  uint64_t state;
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

}  // namespace nacx::testutil
