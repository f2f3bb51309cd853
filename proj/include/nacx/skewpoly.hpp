// The twisted polynomial ring R = D[t; sigma] with t a = sigma(a) t:
// arithmetic, the right division algorithm, right-invariance, and the
// irreducibility criteria for monic binomials t^m - d.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nacx/ring.hpp"

namespace nacx {

class SkewPolyRing {
 public:
  SkewPolyRing(std::shared_ptr<const Ring> coeff, RingAut sigma);

  const Ring& coeff() const { return *coeff_; }
  const std::shared_ptr<const Ring>& coeff_ptr() const { return coeff_; }
  const RingAut& sigma() const { return sigma_; }
  const RingAut& sigma_power(size_t i) const;
  std::string describe() const;

 private:
  std::shared_ptr<const Ring> coeff_;
  RingAut sigma_;
  mutable std::vector<RingAut> pow_;
};

using SkewRingPtr = std::shared_ptr<const SkewPolyRing>;

struct SkewPoly {
  const SkewPolyRing* ring = nullptr;
  std::vector<Vec> coeffs;  // ascending, stripped; empty = zero

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  const Vec& leading() const { return coeffs.back(); }
};

SkewPoly sp_make(const SkewPolyRing& R, std::vector<Vec> coeffs);
SkewPoly sp_zero(const SkewPolyRing& R);
SkewPoly sp_one(const SkewPolyRing& R);
SkewPoly sp_t(const SkewPolyRing& R);
SkewPoly sp_coeff(const SkewPolyRing& R, Vec a);            // degree-0 polynomial
SkewPoly sp_monomial(const SkewPolyRing& R, Vec a, size_t i);  // a t^i
SkewPoly sp_binomial(const SkewPolyRing& R, size_t m, const Vec& d);  // t^m - d

bool sp_eq(const SkewPoly& g, const SkewPoly& h);
SkewPoly sp_add(const SkewPoly& g, const SkewPoly& h);
SkewPoly sp_sub(const SkewPoly& g, const SkewPoly& h);
SkewPoly sp_neg(const SkewPoly& g);
// Product under t^n a = sigma^n(a) t^n.
SkewPoly sp_mul(const SkewPoly& g, const SkewPoly& h);

struct DivModResult {
  SkewPoly q, r;
};
// Unique q, r with g = q f + r and deg r < deg f. The (twisted) leading
// coefficient of f must be a unit; throws DomainError with witness otherwise.
DivModResult right_divmod(const SkewPoly& g, const SkewPoly& f);
SkewPoly mod_r(const SkewPoly& g, const SkewPoly& f);

struct RightInvarianceResult {
  bool invariant = false;
  // A product f*x (x a coefficient basis element or t) with nonzero
  // remainder mod_r f, when not invariant.
  std::optional<SkewPoly> violation;
};
RightInvarianceResult is_right_invariant(const SkewPoly& f);

enum class IrredVerdict { Irreducible, Reducible, Inapplicable, Unknown };

struct IrreducibilityResult {
  IrredVerdict verdict = IrredVerdict::Unknown;
  std::string method;
  std::optional<Vec> witness_z;                         // point-criterion witness
  std::optional<std::pair<Vec, Vec>> witness_xy;        // degree-4 witness
  std::optional<std::pair<SkewPoly, SkewPoly>> factors;  // f = g*h
  // False when the coefficient ring is not a verified division ring, in which
  // case only monic right factors were excluded.
  bool complete = true;
  std::string note;
};

// The point criteria for monic binomials: degree 2 and 3 unconditionally,
// degree 4 by the two-variable condition, prime degrees gated on a primitive
// m-th root of unity in F0 = Fix(sigma) ∩ C(D). Enumerates the finite
// coefficient ring; other shapes report Inapplicable.
IrreducibilityResult irreducible_criterion(const SkewPoly& f,
                                           uint64_t budget = uint64_t{1} << 24);
// Monic right-factor search of degrees 1..m-1 (complete over division rings).
IrreducibilityResult irreducible_exhaustive(const SkewPoly& f,
                                            uint64_t budget = uint64_t{1} << 22);

// Subspace F0 = Fix(sigma) ∩ C(D) of the coefficient ring, rows over the
// prime field.
Matrix<Scalar> f0_subspace(const SkewPolyRing& R);
// Center of an arbitrary ring as a subspace (commutation kernel).
Matrix<Scalar> center_subspace(const Ring& D);

}  // namespace nacx
