#include "nacx/fields.hpp"

#include <algorithm>

namespace nacx {

namespace {

// --- dense polynomials over a presentation (commutative, for moduli) -------

using BPoly = std::vector<Vec>;  // ascending coefficients, stripped

void bp_strip(const FieldPresentation& B, BPoly& g) {
  while (!g.empty() && B.is_zero(g.back())) g.pop_back();
}

// g mod f for monic f.
BPoly bp_mod(const FieldPresentation& B, BPoly g, const BPoly& f) {
  bp_strip(B, g);
  size_t df = f.size() - 1;
  while (g.size() > df) {
    Vec lead = g.back();
    size_t shift = g.size() - 1 - df;
    if (!B.is_zero(lead)) {
      for (size_t j = 0; j < f.size(); ++j)
        g[shift + j] = B.sub(g[shift + j], B.mul(lead, f[j]));
    }
    g.pop_back();
    bp_strip(B, g);
    if (g.size() <= df) break;
  }
  return g;
}

std::string bp_to_string(const BPoly& g) {
  std::string out = "[";
  for (size_t i = 0; i < g.size(); ++i) {
    if (i) out += ", ";
    out += "(";
    for (size_t j = 0; j < g[i].size(); ++j) {
      if (j) out += ",";
      out += g[i][j].to_string();
    }
    out += ")";
  }
  return out + "]";
}

BigInt isqrt(const BigInt& n) {
  if (n.is_negative()) throw DomainError("isqrt of negative");
  if (n.is_zero() || n.is_one()) return n;
  BigInt x = n, y = (n + BigInt(1)) / BigInt(2);
  while (y < x) {
    x = y;
    y = (x + n / x) / BigInt(2);
  }
  return x;
}

// All positive divisors of |b| (b must fit in int64 and be nonzero).
std::vector<BigInt> divisors_of(const BigInt& b) {
  if (!b.fits_int64())
    throw BudgetError("constant term too large for divisor enumeration: " + b.to_string());
  int64_t v = b.to_int64();
  if (v < 0) v = -v;
  std::vector<int64_t> lo, hi;
  for (int64_t i = 1; i * i <= v; ++i) {
    if (v % i == 0) {
      lo.push_back(i);
      if (i != v / i) hi.push_back(v / i);
    }
  }
  std::vector<BigInt> out;
  for (int64_t d : lo) out.push_back(BigInt(d));
  for (size_t i = hi.size(); i-- > 0;) out.push_back(BigInt(hi[i]));
  return out;
}

// Irreducibility of a monic modulus over a finite base presentation, by
// exhaustive monic trial division up to half the degree. Returns a factor as
// witness when reducible.
std::optional<BPoly> find_factor_finite(const FieldPresentation& B, const BPoly& modulus) {
  size_t deg = modulus.size() - 1;
  uint64_t q = B.size_u64();
  for (size_t k = 1; 2 * k <= deg; ++k) {
    uint64_t count = 1;
    for (size_t i = 0; i < k; ++i) {
      if (count > (uint64_t{1} << 40) / q)
        throw BudgetError("modulus irreducibility search too large");
      count *= q;
    }
    for (uint64_t idx = 0; idx < count; ++idx) {
      BPoly cand(k + 1, B.zero());
      uint64_t rem = idx;
      for (size_t i = 0; i < k; ++i) {
        cand[i] = B.element_at(rem % q);
        rem /= q;
      }
      cand[k] = B.one();
      if (bp_mod(B, modulus, cand).empty()) return cand;
    }
  }
  return std::nullopt;
}

// Rational-root and (degree 4) quadratic-factor reducibility test over Q.
std::optional<BPoly> find_factor_rationals(const FieldPresentation& B, const BPoly& modulus) {
  size_t deg = modulus.size() - 1;
  if (deg <= 1) return std::nullopt;
  if (deg > 4)
    throw InputError("irreducibility over Q is only decided up to degree 4");
  // Clear denominators: integer coefficients c_0..c_deg.
  BigInt lcm(1);
  for (const Vec& c : modulus) {
    BigInt d = c[0].den();
    lcm = lcm / BigInt::gcd(lcm, d) * d;
  }
  std::vector<BigInt> c(deg + 1);
  for (size_t i = 0; i <= deg; ++i) c[i] = (modulus[i][0] * Scalar(lcm)).num();
  if (c[0].is_zero()) return BPoly{B.zero(), B.one()};  // x divides
  // Rational roots p/q with p | c_0, q | c_deg.
  for (const BigInt& p : divisors_of(c[0])) {
    for (const BigInt& q : divisors_of(c[deg])) {
      for (int s : {1, -1}) {
        Scalar root(s < 0 ? -p : p, q);
        Scalar val(0);
        for (size_t i = deg + 1; i-- > 0;) val = val * root + Scalar(c[i]);
        if (val.is_zero()) return BPoly{Vec{-root}, B.one()};  // x - root
      }
    }
  }
  if (deg < 4) return std::nullopt;
  // Monic integer quartic via y = c4 x, then monic quadratic factors over Z.
  BigInt b3 = c[3], b2 = c[2] * c[4], b1 = c[1] * c[4] * c[4],
         b0 = c[0] * c[4] * c[4] * c[4];
  std::vector<BigInt> divs = divisors_of(b0);
  for (const BigInt& dpos : divs) {
    for (int s : {1, -1}) {
      BigInt d0 = s < 0 ? -dpos : dpos;
      BigInt e0 = b0 / d0;
      // a^2 - b3 a + (b2 - d0 - e0) = 0
      BigInt disc = b3 * b3 - BigInt(4) * (b2 - d0 - e0);
      if (disc.is_negative()) continue;
      BigInt r = isqrt(disc);
      if (r * r != disc) continue;
      for (int t : {1, -1}) {
        BigInt num = b3 + (t < 0 ? -r : r);
        if (!(num % BigInt(2)).is_zero()) continue;
        BigInt a = num / BigInt(2);
        BigInt cc = b3 - a;
        if (a * e0 + cc * d0 != b1) continue;
        // y^2 + a y + d0 with y = c4 x  ->  x^2 + (a/c4) x + d0/c4^2.
        return BPoly{Vec{Scalar(d0, c[4] * c[4])}, Vec{Scalar(a, c[4])}, B.one()};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

// --- FieldPresentation ------------------------------------------------------

FieldPresentation::FieldPresentation(Kind kind, PrimeField pf, FieldPtr base,
                                     std::vector<Vec> modulus, std::string name, size_t dim)
    : Ring(std::move(pf), dim),
      kind_(kind),
      name_(std::move(name)),
      base_(std::move(base)),
      modulus_(std::move(modulus)),
      rel_degree_(kind == Kind::Prime ? 1 : modulus_.size() - 1) {}

FieldPtr FieldPresentation::rationals(std::string name) {
  return FieldPtr(new FieldPresentation(Kind::Prime, PrimeField(BigInt(0)), nullptr, {},
                                        std::move(name), 1));
}

FieldPtr FieldPresentation::prime_field(BigInt p, std::string name) {
  if (p.is_zero()) return rationals(name.empty() ? "Q" : std::move(name));
  PrimeField pf(p);
  if (name.empty()) name = "F" + p.to_string();
  return FieldPtr(
      new FieldPresentation(Kind::Prime, std::move(pf), nullptr, {}, std::move(name), 1));
}

FieldPtr FieldPresentation::extension(FieldPtr base, std::vector<Vec> modulus,
                                      std::string name) {
  if (!base) throw InputError("extension: null base");
  if (modulus.size() < 2) throw InputError("extension: modulus must have degree >= 1");
  for (Vec& c : modulus) {
    base->check_elem(c);
    for (Scalar& s : c) s = base->prime().canon(s);
  }
  if (!base->eq(modulus.back(), base->one()))
    throw InputError("extension: modulus must be monic");

  std::optional<BPoly> factor;
  if (base->finite()) {
    factor = find_factor_finite(*base, modulus);
  } else if (base->kind() == Kind::Prime) {
    factor = find_factor_rationals(*base, modulus);
  } else {
    throw InputError("extension towers over number fields are not supported");
  }
  if (factor)
    throw VerifyError("modulus is reducible over " + base->name() +
                      "; factor witness: " + bp_to_string(*factor));

  size_t dim = (modulus.size() - 1) * base->dim();
  if (name.empty()) {
    if (base->finite())
      name = "F" + base->characteristic().pow(dim).to_string();
    else
      name = base->name() + "_ext" + std::to_string(modulus.size() - 1);
  }
  return FieldPtr(new FieldPresentation(Kind::Extension, base->prime(), std::move(base),
                                        std::move(modulus), std::move(name), dim));
}

FieldPtr FieldPresentation::make_finite_field(BigInt p, const std::vector<Scalar>& modulus,
                                              std::string name) {
  if (p.is_zero()) throw InputError("make_finite_field: characteristic must be prime");
  return from_prime_modulus(std::move(p), modulus, std::move(name));
}

FieldPtr FieldPresentation::from_prime_modulus(BigInt p, const std::vector<Scalar>& modulus,
                                               std::string name) {
  FieldPtr base = prime_field(std::move(p));
  std::vector<Vec> mod;
  mod.reserve(modulus.size());
  for (const Scalar& s : modulus) mod.push_back(Vec{s});
  return extension(std::move(base), std::move(mod), std::move(name));
}

BigInt FieldPresentation::order() const {
  if (!finite()) throw DomainError(name_ + " is infinite");
  return characteristic().pow(dim_);
}

std::string FieldPresentation::describe() const { return name_; }

std::vector<Vec> FieldPresentation::to_base_chunks(const Vec& a) const {
  size_t bd = base_->dim();
  std::vector<Vec> out(rel_degree_);
  for (size_t i = 0; i < rel_degree_; ++i)
    out[i] = Vec(a.begin() + i * bd, a.begin() + (i + 1) * bd);
  return out;
}

Vec FieldPresentation::from_base_chunks(const std::vector<Vec>& chunks) const {
  Vec out;
  out.reserve(dim_);
  for (const Vec& c : chunks) out.insert(out.end(), c.begin(), c.end());
  return out;
}

Vec FieldPresentation::from_base(const Vec& base_elem) const {
  base_->check_elem(base_elem);
  Vec out = zero();
  std::copy(base_elem.begin(), base_elem.end(), out.begin());
  return out;
}

Vec FieldPresentation::from_scalar(const Scalar& s) const {
  Vec out = zero();
  out[0] = prime_.canon(s);
  return out;
}

Vec FieldPresentation::mul(const Vec& a, const Vec& b) const {
  check_elem(a);
  check_elem(b);
  if (kind_ == Kind::Prime) return Vec{prime_.mul(a[0], b[0])};
  const FieldPresentation& B = *base_;
  std::vector<Vec> ca = to_base_chunks(a), cb = to_base_chunks(b);
  std::vector<Vec> prod(2 * rel_degree_ - 1, B.zero());
  for (size_t i = 0; i < rel_degree_; ++i) {
    if (B.is_zero(ca[i])) continue;
    for (size_t j = 0; j < rel_degree_; ++j)
      prod[i + j] = B.add(prod[i + j], B.mul(ca[i], cb[j]));
  }
  // Reduce by the monic modulus.
  for (size_t k = prod.size(); k-- > rel_degree_;) {
    Vec lead = prod[k];
    if (B.is_zero(lead)) continue;
    for (size_t j = 0; j < rel_degree_; ++j)
      prod[k - rel_degree_ + j] = B.sub(prod[k - rel_degree_ + j], B.mul(lead, modulus_[j]));
  }
  prod.resize(rel_degree_);
  return from_base_chunks(prod);
}

Vec FieldPresentation::inv(const Vec& a) const {
  auto res = inverse_detail(a);
  if (!res.inverse) throw DomainError(name_ + ": inverse of zero");
  return std::move(*res.inverse);
}

Vec FieldPresentation::pow(const Vec& a, BigInt e) const {
  if (e.is_negative()) return pow(inv(a), -e);
  Vec out = one(), base = a;
  while (!e.is_zero()) {
    if (!(e % BigInt(2)).is_zero()) out = mul(out, base);
    base = mul(base, base);
    e = e / BigInt(2);
  }
  return out;
}

Vec FieldPresentation::generator() const {
  if (kind_ == Kind::Prime) return one();
  if (rel_degree_ >= 2) return basis_element(base_->dim());
  return from_base(base_->neg(modulus_[0]));  // root of the linear modulus
}

// --- FieldAutomorphism ------------------------------------------------------

FieldAutomorphism FieldAutomorphism::identity(FieldPtr K) {
  RingAut aut = RingAut::identity(*K);
  return FieldAutomorphism(std::move(K), std::move(aut));
}

FieldAutomorphism FieldAutomorphism::frobenius(FieldPtr K, unsigned e) {
  if (!K->finite()) throw InputError("frobenius: " + K->name() + " is not finite");
  BigInt pe = K->characteristic().pow(e);
  Matrix<Scalar> m(K->dim(), K->dim(), K->prime().zero());
  for (size_t j = 0; j < K->dim(); ++j) m.set_col(j, K->pow(K->basis_element(j), pe));
  RingAut aut = RingAut::verified(*K, std::move(m));
  return FieldAutomorphism(std::move(K), std::move(aut));
}

FieldAutomorphism FieldAutomorphism::from_generator_image(FieldPtr K, const Vec& image) {
  if (K->kind() != FieldPresentation::Kind::Extension ||
      K->base()->kind() != FieldPresentation::Kind::Prime)
    throw InputError("generator-image automorphisms require a single extension of the prime field");
  K->check_elem(image);
  // modulus(image) must vanish.
  Vec val = K->zero();
  Vec p = K->one();
  for (size_t i = 0; i < K->modulus().size(); ++i) {
    val = K->add(val, K->smul(K->modulus()[i][0], p));
    p = K->mul(p, image);
  }
  if (!K->is_zero(val))
    throw VerifyError(K->name() + ": generator image is not a root of the modulus");
  Matrix<Scalar> m(K->dim(), K->dim(), K->prime().zero());
  Vec pw = K->one();
  for (size_t j = 0; j < K->dim(); ++j) {
    m.set_col(j, pw);
    pw = K->mul(pw, image);
  }
  RingAut aut = RingAut::verified(*K, std::move(m));
  return FieldAutomorphism(std::move(K), std::move(aut));
}

FieldAutomorphism FieldAutomorphism::from_matrix(FieldPtr K, Matrix<Scalar> m) {
  RingAut aut = RingAut::verified(*K, std::move(m));
  return FieldAutomorphism(std::move(K), std::move(aut));
}

FieldAutomorphism FieldAutomorphism::compose(const FieldAutomorphism& inner) const {
  return FieldAutomorphism(owner_, aut_.compose(inner.aut_));
}

FieldAutomorphism FieldAutomorphism::power(int64_t k) const {
  return FieldAutomorphism(owner_, aut_.power(k));
}

// --- Embedding ---------------------------------------------------------------

Embedding Embedding::verified(FieldPtr sub, FieldPtr sup, Matrix<Scalar> map) {
  if (sub->prime() != sup->prime())
    throw InputError("embedding: presentations have different prime fields");
  if (map.rows() != sup->dim() || map.cols() != sub->dim())
    throw InputError("embedding: matrix shape mismatch");
  ScalarOps ops{&sub->prime()};
  if (rank(ops, map) != sub->dim()) throw VerifyError("embedding: map is not injective");
  if (mat_vec(ops, map, sub->one()) != sup->one())
    throw VerifyError("embedding: map does not send 1 to 1");
  for (size_t i = 0; i < sub->dim(); ++i)
    for (size_t j = 0; j < sub->dim(); ++j) {
      Vec lhs = mat_vec(ops, map, sub->mul(sub->basis_element(i), sub->basis_element(j)));
      Vec rhs = sup->mul(map.col(i), map.col(j));
      if (lhs != rhs)
        throw VerifyError("embedding: not a ring homomorphism on basis pair (" +
                          std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return Embedding(std::move(sub), std::move(sup), std::move(map));
}

Embedding Embedding::identity(FieldPtr K) {
  ScalarOps ops{&K->prime()};
  Matrix<Scalar> m = identity_matrix(ops, K->dim());
  return Embedding(K, K, std::move(m));
}

Vec Embedding::apply(const Vec& x) const {
  sub_->check_elem(x);
  ScalarOps ops{&sub_->prime()};
  return mat_vec(ops, map_, x);
}

std::optional<Vec> Embedding::pullback(const Vec& y) const {
  sup_->check_elem(y);
  ScalarOps ops{&sub_->prime()};
  return solve(ops, map_, y);
}

Embedding Embedding::compose(const Embedding& inner) const {
  if (inner.sup_.get() != sub_.get())
    throw InputError("embedding composition: middle presentations differ");
  ScalarOps ops{&sub_->prime()};
  return Embedding(inner.sub_, sup_, mat_mul(ops, map_, inner.map_));
}

// --- subfield machinery -------------------------------------------------------

std::vector<Scalar> minimal_polynomial(const Ring& K, const Vec& x) {
  K.check_elem(x);
  ScalarOps ops{&K.prime()};
  std::vector<Vec> powers{K.one()};
  Vec cur = K.one();
  for (size_t j = 1; j <= K.dim(); ++j) {
    cur = K.mul(cur, x);
    // Is cur in the span of the previous powers?
    Matrix<Scalar> m(K.dim(), powers.size(), ops.zero());
    for (size_t c = 0; c < powers.size(); ++c) m.set_col(c, powers[c]);
    auto sol = solve(ops, m, cur);
    if (sol) {
      std::vector<Scalar> out(j + 1, ops.zero());
      for (size_t i = 0; i < j; ++i) out[i] = ops.neg((*sol)[i]);
      out[j] = ops.one();
      return out;
    }
    powers.push_back(cur);
  }
  throw InternalError(K.describe() + ": element has no linear dependence among its powers");
}

Vec FieldInRing::apply(const Vec& x) const {
  field->check_elem(x);
  ScalarOps ops{&field->prime()};
  return mat_vec(ops, into_ring, x);
}

std::optional<Vec> FieldInRing::pullback(const Vec& y) const {
  ScalarOps ops{&field->prime()};
  return solve(ops, into_ring, y);
}

FieldInRing present_subfield_in_ring(const Ring& ambient, const Matrix<Scalar>& subspace_rows,
                                     std::string name) {
  ScalarOps ops{&ambient.prime()};
  Matrix<Scalar> rows = canonical_rowspace(ops, subspace_rows);
  size_t k = rows.rows();
  if (k == 0) throw InputError("present_subfield: empty subspace");

  // The subspace must contain 1 and be closed under multiplication.
  Matrix<Scalar> span_cols(ambient.dim(), k, ops.zero());
  for (size_t i = 0; i < k; ++i) span_cols.set_col(i, rows.row(i));
  if (!solve(ops, span_cols, ambient.one()))
    throw VerifyError("present_subfield: subspace does not contain 1");
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      if (!solve(ops, span_cols, ambient.mul(rows.row(i), rows.row(j))))
        throw VerifyError("present_subfield: subspace is not multiplicatively closed");

  // Find a generator: an element whose minimal polynomial has degree k.
  std::optional<Vec> gen;
  if (ambient.finite()) {
    uint64_t p = ambient.prime().size_u64();
    uint64_t count = 1;
    for (size_t i = 0; i < k; ++i) count *= p;
    for (uint64_t idx = 0; idx < count && !gen; ++idx) {
      Vec cand = ambient.zero();
      uint64_t rem = idx;
      for (size_t i = 0; i < k; ++i) {
        cand = ambient.add(cand, ambient.smul(ambient.prime().element_at(rem % p), rows.row(i)));
        rem /= p;
      }
      if (!ambient.is_zero(cand) && minimal_polynomial(ambient, cand).size() == k + 1)
        gen = cand;
    }
  } else {
    for (uint64_t idx = 0; idx < (uint64_t{1} << (2 * k)) && !gen; ++idx) {
      Vec cand = ambient.zero();
      uint64_t rem = idx;
      for (size_t i = 0; i < k; ++i) {
        cand = ambient.add(cand, ambient.smul(Scalar(static_cast<int64_t>(rem % 4)), rows.row(i)));
        rem /= 4;
      }
      if (!ambient.is_zero(cand) && minimal_polynomial(ambient, cand).size() == k + 1)
        gen = cand;
    }
  }
  if (!gen) throw BudgetError("present_subfield: generator search exhausted");

  std::vector<Scalar> mu = minimal_polynomial(ambient, *gen);
  if (name.empty()) {
    if (ambient.finite())
      name = "F" + ambient.prime().p().pow(k).to_string();
    else
      name = ambient.describe() + "_sub" + std::to_string(k);
  }
  FieldPtr sub =
      FieldPresentation::from_prime_modulus(ambient.prime().p(), mu, std::move(name));

  Matrix<Scalar> emb(ambient.dim(), k, ops.zero());
  Vec pw = ambient.one();
  for (size_t j = 0; j < k; ++j) {
    emb.set_col(j, pw);
    pw = ambient.mul(pw, *gen);
  }
  // The generator lives in the subspace and has full degree, so its powers
  // span exactly the subspace; confirm.
  Matrix<Scalar> img(k, ambient.dim(), ops.zero());
  for (size_t j = 0; j < k; ++j) img.set_row(j, emb.col(j));
  if (canonical_rowspace(ops, img) != rows)
    throw InternalError("present_subfield: generator powers do not span the subspace");
  return FieldInRing{std::move(sub), std::move(emb)};
}

Embedding present_subfield(FieldPtr K, const Matrix<Scalar>& subspace_rows, std::string name) {
  FieldInRing fir = present_subfield_in_ring(*K, subspace_rows, std::move(name));
  return Embedding::verified(std::move(fir.field), std::move(K), std::move(fir.into_ring));
}

Embedding fixed_field(const FieldAutomorphism& sigma, std::string name) {
  const FieldPresentation& K = sigma.owner();
  ScalarOps ops{&K.prime()};
  Matrix<Scalar> m = sigma.matrix();
  for (size_t i = 0; i < K.dim(); ++i) m.at(i, i) = ops.sub(m.at(i, i), ops.one());
  Matrix<Scalar> ker = kernel_basis(ops, m);
  return present_subfield(sigma.owner_ptr(), ker, std::move(name));
}

ProperSubfieldResult in_proper_subfield(const FieldPresentation& K, const Vec& d) {
  if (!K.finite()) throw DomainError("in_proper_subfield requires a finite field");
  ProperSubfieldResult out;
  std::vector<Scalar> mu = minimal_polynomial(K, d);
  size_t k = mu.size() - 1;
  if (k == K.dim()) return out;
  out.in_proper = true;
  ScalarOps ops{&K.prime()};
  Matrix<Scalar> rows(k, K.dim(), ops.zero());
  Vec pw = K.one();
  for (size_t i = 0; i < k; ++i) {
    rows.set_row(i, pw);
    pw = K.mul(pw, d);
  }
  auto K_ptr = K.shared_from_this();
  out.witness = present_subfield(FieldPtr(K_ptr), rows);
  return out;
}

RootOfUnityResult primitive_root_of_unity(const FieldPresentation& F, int m) {
  RootOfUnityResult out;
  if (m < 1) throw InputError("primitive_root_of_unity: m must be positive");
  if (F.finite()) {
    uint64_t q = F.size_u64();
    for (uint64_t idx = 1; idx < q; ++idx) {
      Vec x = F.element_at(idx);
      if (verify_root_of_unity(F, x, m)) {
        out.verdict = RootOfUnityResult::Verdict::Found;
        out.omega = x;
        return out;
      }
    }
    out.verdict = RootOfUnityResult::Verdict::Absent;
    return out;
  }
  if (m == 1) {
    out.verdict = RootOfUnityResult::Verdict::Found;
    out.omega = F.one();
    return out;
  }
  if (m == 2) {
    out.verdict = RootOfUnityResult::Verdict::Found;
    out.omega = F.neg(F.one());
    return out;
  }
  out.verdict = RootOfUnityResult::Verdict::Unknown;  // supply a witness instead
  return out;
}

bool verify_root_of_unity(const FieldPresentation& F, const Vec& omega, int m) {
  F.check_elem(omega);
  Vec pw = F.one();
  for (int j = 1; j < m; ++j) {
    pw = F.mul(pw, omega);
    if (F.eq(pw, F.one())) return false;
  }
  pw = F.mul(pw, omega);
  return F.eq(pw, F.one());
}

bool has_nontrivial_mth_root(const FieldPresentation& F, int m) {
  if (!F.finite()) throw DomainError("has_nontrivial_mth_root requires a finite field");
  uint64_t q = F.size_u64();
  for (uint64_t idx = 1; idx < q; ++idx) {
    Vec x = F.element_at(idx);
    if (F.eq(x, F.one())) continue;
    if (F.eq(F.pow(x, BigInt(m)), F.one())) return true;
  }
  return false;
}

// --- TowerPath ----------------------------------------------------------------

TowerPath TowerPath::from_sigma(const FieldAutomorphism& sigma, std::string fixed_name) {
  Embedding bottom = fixed_field(sigma, std::move(fixed_name));
  int m = sigma.order();
  if (sigma.owner().dim() != static_cast<size_t>(m) * bottom.sub().dim())
    throw InternalError("tower: [K : Fix(sigma)] != ord(sigma)");
  return TowerPath(sigma.owner_ptr(), std::move(bottom), sigma, m);
}

TowerPath TowerPath::with_bottom(const FieldAutomorphism& sigma, Embedding bottom) {
  if (bottom.sup_ptr().get() != sigma.owner_ptr().get())
    throw InputError("tower: embedding target is not the automorphism's field");
  ScalarOps ops{&sigma.owner().prime()};
  Matrix<Scalar> m = sigma.matrix();
  for (size_t i = 0; i < sigma.owner().dim(); ++i) m.at(i, i) = ops.sub(m.at(i, i), ops.one());
  Matrix<Scalar> ker = kernel_basis(ops, m);
  Matrix<Scalar> img(bottom.sub().dim(), sigma.owner().dim(), ops.zero());
  for (size_t j = 0; j < bottom.sub().dim(); ++j) img.set_row(j, bottom.matrix().col(j));
  if (canonical_rowspace(ops, img) != canonical_rowspace(ops, ker))
    throw VerifyError("tower: supplied bottom field is not Fix(sigma)");
  int mm = sigma.order();
  return TowerPath(sigma.owner_ptr(), std::move(bottom), sigma, mm);
}

Vec TowerPath::norm_in_top(const Vec& x) const {
  top_->check_elem(x);
  Vec acc = x, conj = x;
  for (int l = 1; l < m_; ++l) {
    conj = sigma_.apply(conj);
    acc = top_->mul(acc, conj);
  }
  return acc;
}

Vec TowerPath::norm(const Vec& x) const {
  Vec n = norm_in_top(x);
  auto pulled = bottom_.pullback(n);
  if (!pulled) throw InternalError("tower: norm value escaped the bottom field");
  return *pulled;
}

std::vector<Vec> TowerPath::ker_norm_enumerate(uint64_t budget) const {
  if (!top_->finite())
    throw DomainError("ker_norm_enumerate is unavailable over infinite fields; "
                      "use verify_kernel_witness");
  uint64_t q = top_->size_u64();
  if (q > budget) throw BudgetError("ker_norm_enumerate: field too large");
  std::vector<Vec> out;
  for (uint64_t idx = 1; idx < q; ++idx) {
    Vec x = top_->element_at(idx);
    if (top_->eq(norm_in_top(x), top_->one())) out.push_back(x);
  }
  return out;
}

Vec TowerPath::hilbert90_solve(const Vec& k, uint64_t budget) const {
  top_->check_elem(k);
  if (!top_->eq(norm_in_top(k), top_->one()))
    throw DomainError("hilbert90_solve: N(k) != 1");
  if (!top_->finite())
    throw DomainError("hilbert90_solve is unavailable over infinite fields; "
                      "use verify_hilbert90_witness");
  uint64_t q = top_->size_u64();
  if (q > budget) throw BudgetError("hilbert90_solve: field too large");
  for (uint64_t idx = 1; idx < q; ++idx) {
    Vec c = top_->element_at(idx);
    if (top_->eq(top_->mul(top_->inv(c), sigma_.apply(c)), k)) return c;
  }
  throw InternalError("hilbert90_solve: no witness found for a norm-1 element");
}

bool TowerPath::verify_kernel_witness(const Vec& k) const {
  top_->check_elem(k);
  return !top_->is_zero(k) && top_->eq(norm_in_top(k), top_->one());
}

bool TowerPath::verify_hilbert90_witness(const Vec& k, const Vec& c) const {
  top_->check_elem(k);
  top_->check_elem(c);
  if (top_->is_zero(c)) return false;
  return top_->eq(top_->mul(top_->inv(c), sigma_.apply(c)), k);
}

}  // namespace nacx
