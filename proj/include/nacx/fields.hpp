// Explicit field presentations: prime fields, finite extension towers, and
// small number fields, together with automorphisms, subfield embeddings,
// norms along cyclic towers, kernels of norms, and a Hilbert-90 solver.
//
// A presentation is either a prime field (F_p or Q) or an extension of
// another presentation by a monic irreducible modulus; irreducibility is
// verified at construction. Elements are coordinate vectors over the prime
// field, blocked by powers of the extension generator.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nacx/ring.hpp"

namespace nacx {

class FieldPresentation;
using FieldPtr = std::shared_ptr<const FieldPresentation>;

class FieldPresentation final : public Ring,
                                public std::enable_shared_from_this<FieldPresentation> {
 public:
  enum class Kind { Prime, Extension };

  static FieldPtr rationals(std::string name = "Q");
  static FieldPtr prime_field(BigInt p, std::string name = "");
  // Extension of an arbitrary base presentation; modulus coefficients are
  // base elements (ascending, monic). Irreducibility over the base is
  // verified exhaustively for finite bases; a factor is reported on failure.
  static FieldPtr extension(FieldPtr base, std::vector<Vec> modulus, std::string name);
  // Convenience: extension of F_p by a modulus with scalar coefficients.
  static FieldPtr make_finite_field(BigInt p, const std::vector<Scalar>& modulus,
                                    std::string name);
  // Same but accepts p = 0 for an extension of Q.
  static FieldPtr from_prime_modulus(BigInt p, const std::vector<Scalar>& modulus,
                                     std::string name);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const FieldPtr& base() const { return base_; }
  size_t rel_degree() const { return rel_degree_; }
  const std::vector<Vec>& modulus() const { return modulus_; }
  BigInt characteristic() const { return prime().p(); }
  BigInt order() const;  // number of elements, finite fields only

  std::string describe() const override;
  Vec mul(const Vec& a, const Vec& b) const override;
  DivisionStatus division_status() const override { return DivisionStatus::Division; }

  Vec inv(const Vec& a) const;  // throws DomainError on zero
  Vec pow(const Vec& a, BigInt e) const;
  Vec generator() const;  // class of the extension variable; 1 for prime fields
  Vec from_scalar(const Scalar& s) const;

  // Element <-> coefficient vector over the immediate base.
  std::vector<Vec> to_base_chunks(const Vec& a) const;
  Vec from_base_chunks(const std::vector<Vec>& chunks) const;
  Vec from_base(const Vec& base_elem) const;

 private:
  FieldPresentation(Kind kind, PrimeField pf, FieldPtr base, std::vector<Vec> modulus,
                    std::string name, size_t dim);

  Kind kind_;
  std::string name_;
  FieldPtr base_;             // null for prime kind
  std::vector<Vec> modulus_;  // over base, ascending, monic
  size_t rel_degree_;
};

// Adapter so the generic linear algebra can run over any presentation.
struct FieldOps {
  const FieldPresentation* K;
  using Elem = Vec;
  Elem zero() const { return K->zero(); }
  Elem one() const { return K->one(); }
  Elem add(const Elem& a, const Elem& b) const { return K->add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return K->sub(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return K->mul(a, b); }
  Elem neg(const Elem& a) const { return K->neg(a); }
  Elem inv(const Elem& a) const { return K->inv(a); }
  bool is_zero(const Elem& a) const { return K->is_zero(a); }
};

// A verified automorphism of a presentation (fixes the prime field by
// linearity; ring-hom property checked mechanically on all basis pairs).
class FieldAutomorphism {
 public:
  static FieldAutomorphism identity(FieldPtr K);
  // x -> x^(p^e) on a finite presentation.
  static FieldAutomorphism frobenius(FieldPtr K, unsigned e);
  // Determined by the image of the presentation generator; only for single
  // extensions of the prime field. Verifies modulus(image) = 0 first.
  static FieldAutomorphism from_generator_image(FieldPtr K, const Vec& image);
  static FieldAutomorphism from_matrix(FieldPtr K, Matrix<Scalar> m);  // verified

  const FieldPresentation& owner() const { return *owner_; }
  const FieldPtr& owner_ptr() const { return owner_; }
  const Matrix<Scalar>& matrix() const { return aut_.matrix(); }
  const RingAut& ring_aut() const { return aut_; }

  Vec apply(const Vec& x) const { return aut_.apply(x); }
  bool is_identity() const { return aut_.is_identity(); }
  bool equals(const FieldAutomorphism& o) const { return aut_.equals(o.aut_); }
  int order() const { return aut_.order(); }
  FieldAutomorphism compose(const FieldAutomorphism& inner) const;
  FieldAutomorphism power(int64_t k) const;

 private:
  FieldAutomorphism(FieldPtr owner, RingAut aut)
      : owner_(std::move(owner)), aut_(std::move(aut)) {}
  FieldPtr owner_;
  RingAut aut_;
};

// A verified unital ring embedding between presentations over one prime field.
class Embedding {
 public:
  static Embedding verified(FieldPtr sub, FieldPtr sup, Matrix<Scalar> map);
  static Embedding identity(FieldPtr K);

  const FieldPresentation& sub() const { return *sub_; }
  const FieldPresentation& sup() const { return *sup_; }
  const FieldPtr& sub_ptr() const { return sub_; }
  const FieldPtr& sup_ptr() const { return sup_; }
  const Matrix<Scalar>& matrix() const { return map_; }

  Vec apply(const Vec& x) const;
  std::optional<Vec> pullback(const Vec& y) const;
  bool contains(const Vec& y) const { return pullback(y).has_value(); }
  // this ∘ inner : inner.sub -> this.sup (requires inner.sup == this->sub).
  Embedding compose(const Embedding& inner) const;

 private:
  Embedding(FieldPtr sub, FieldPtr sup, Matrix<Scalar> map)
      : sub_(std::move(sub)), sup_(std::move(sup)), map_(std::move(map)) {}
  FieldPtr sub_;
  FieldPtr sup_;
  Matrix<Scalar> map_;
};

// Monic minimal polynomial of x over the prime field (ascending scalars).
std::vector<Scalar> minimal_polynomial(const Ring& K, const Vec& x);

// A field presentation sitting inside an arbitrary algebra via a verified
// unital multiplicative embedding (the commutant computations land here).
struct FieldInRing {
  FieldPtr field;
  Matrix<Scalar> into_ring;  // ambient.dim x field.dim
  Vec apply(const Vec& x) const;
  std::optional<Vec> pullback(const Vec& y) const;
  bool contains(const Vec& y) const { return pullback(y).has_value(); }
};

// Present a multiplicatively closed subspace (rows over the prime field) of an
// algebra as a field of its own. The subspace must be a commutative field
// under the ambient product; a generator with full-degree minimal polynomial
// is located by enumeration. Finite subfields are named canonically ("F9").
FieldInRing present_subfield_in_ring(const Ring& ambient, const Matrix<Scalar>& subspace_rows,
                                     std::string name = "");

// Specialization when the ambient algebra is itself a field.
Embedding present_subfield(FieldPtr K, const Matrix<Scalar>& subspace_rows,
                           std::string name = "");

// Fix(sigma) as a presentation plus its embedding, via the kernel of
// (sigma - id) over the prime field.
Embedding fixed_field(const FieldAutomorphism& sigma, std::string name = "");

struct ProperSubfieldResult {
  bool in_proper = false;
  std::optional<Embedding> witness;  // the minimal subfield containing d
};
// Whether d lies in a proper subfield of finite K (by minimal-polynomial degree).
ProperSubfieldResult in_proper_subfield(const FieldPresentation& K, const Vec& d);

struct RootOfUnityResult {
  enum class Verdict { Found, Absent, Unknown } verdict = Verdict::Unknown;
  std::optional<Vec> omega;
};
// Exhaustive over finite fields. Over infinite fields m <= 2 is decided
// exactly; beyond that the search is unavailable and callers may verify a
// supplied witness instead.
RootOfUnityResult primitive_root_of_unity(const FieldPresentation& F, int m);
bool verify_root_of_unity(const FieldPresentation& F, const Vec& omega, int m);
// Exists x != 1 with x^m = 1 (finite fields only).
bool has_nontrivial_mth_root(const FieldPresentation& F, int m);

// A cyclic Galois tower K/F with Gal(K/F) = <sigma>, m = [K:F] = ord(sigma).
// F is always exactly Fix(sigma); the constructor verifies this.
class TowerPath {
 public:
  static TowerPath from_sigma(const FieldAutomorphism& sigma, std::string fixed_name = "");
  // Same, but with a caller-supplied presentation of F; its image must equal
  // Fix(sigma) exactly.
  static TowerPath with_bottom(const FieldAutomorphism& sigma, Embedding bottom);

  const FieldPresentation& top() const { return *top_; }
  const FieldPtr& top_ptr() const { return top_; }
  const Embedding& bottom() const { return bottom_; }
  const FieldAutomorphism& sigma() const { return sigma_; }
  int degree() const { return m_; }

  // x sigma(x) ... sigma^{m-1}(x), as an element of K.
  Vec norm_in_top(const Vec& x) const;
  // Same, pulled back to coordinates over F.
  Vec norm(const Vec& x) const;

  // All k in K^x with N(k) = 1, canonical element order (finite only).
  std::vector<Vec> ker_norm_enumerate(uint64_t budget = uint64_t{1} << 20) const;
  // c in K^x with c^{-1} sigma(c) = k; requires N(k) = 1 (finite only).
  Vec hilbert90_solve(const Vec& k, uint64_t budget = uint64_t{1} << 20) const;
  bool verify_kernel_witness(const Vec& k) const;
  bool verify_hilbert90_witness(const Vec& k, const Vec& c) const;

 private:
  TowerPath(FieldPtr top, Embedding bottom, FieldAutomorphism sigma, int m)
      : top_(std::move(top)), bottom_(std::move(bottom)), sigma_(std::move(sigma)), m_(m) {}
  FieldPtr top_;
  Embedding bottom_;
  FieldAutomorphism sigma_;
  int m_;
};

}  // namespace nacx
