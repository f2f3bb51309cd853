#include "nacx/petit.hpp"

namespace nacx {

PetitAlgebra::PetitAlgebra(SkewRingPtr R, SkewPoly f, size_t m)
    : Ring(R->coeff().prime(), m * R->coeff().dim()), R_(std::move(R)), f_(std::move(f)), m_(m) {}

PetitPtr PetitAlgebra::make(SkewRingPtr R, SkewPoly f) {
  if (!R) throw InputError("petit: null skew ring");
  if (f.ring != R.get()) throw InputError("petit: f does not belong to the given skew ring");
  const Ring& D = R->coeff();
  if (f.is_zero() || f.degree() < 1 || !D.eq(f.leading(), D.one()))
    throw InputError("petit: f must be monic of degree >= 1");
  size_t m = static_cast<size_t>(f.degree());
  std::shared_ptr<PetitAlgebra> A(new PetitAlgebra(std::move(R), std::move(f), m));
  A->binomial_ = true;
  for (size_t i = 1; i < m; ++i)
    if (!D.is_zero(A->f_.coeffs[i])) A->binomial_ = false;
  if (A->binomial_) A->d_ = D.neg(A->f_.coeffs[0]);
  return A;
}

const Vec& PetitAlgebra::d() const {
  if (!binomial_) throw InputError("petit: f is not a binomial t^m - d");
  return d_;
}

std::string PetitAlgebra::describe() const {
  return "S_f over " + R_->describe() + " (deg " + std::to_string(m_) + ")";
}

std::vector<Vec> PetitAlgebra::to_coeff_chunks(const Vec& a) const {
  size_t cd = coeff().dim();
  std::vector<Vec> out(m_);
  for (size_t i = 0; i < m_; ++i)
    out[i] = Vec(a.begin() + i * cd, a.begin() + (i + 1) * cd);
  return out;
}

SkewPoly PetitAlgebra::to_poly(const Vec& a) const {
  check_elem(a);
  return sp_make(*R_, to_coeff_chunks(a));
}

Vec PetitAlgebra::from_poly(const SkewPoly& g) const {
  if (g.ring != R_.get()) throw InputError("petit: polynomial from a different ring");
  if (g.degree() >= static_cast<int>(m_))
    throw InputError("petit: polynomial degree exceeds m - 1");
  Vec out = zero();
  size_t cd = coeff().dim();
  for (size_t i = 0; i < g.coeffs.size(); ++i)
    std::copy(g.coeffs[i].begin(), g.coeffs[i].end(), out.begin() + i * cd);
  return out;
}

Vec PetitAlgebra::from_coeff(const Vec& a, size_t power) const {
  coeff().check_elem(a);
  if (power >= m_) throw InputError("petit: power exceeds m - 1");
  Vec out = zero();
  size_t cd = coeff().dim();
  std::copy(a.begin(), a.end(), out.begin() + power * cd);
  return out;
}

Vec PetitAlgebra::mul(const Vec& a, const Vec& b) const {
  check_elem(a);
  check_elem(b);
  SkewPoly prod = sp_mul(to_poly(a), to_poly(b));
  return from_poly(mod_r(prod, f_));
}

const fastskew::Ctx* PetitAlgebra::fast_ctx() const {
  if (fast_) return &*fast_;
  if (fast_failed_) return nullptr;
  if (!coeff().tables()) {
    fast_failed_ = true;
    return nullptr;
  }
  fast_ = fastskew::make_ctx(coeff(), R_->sigma(), 2 * m_ + 2);
  f_idx_.resize(f_.coeffs.size());
  for (size_t i = 0; i < f_.coeffs.size(); ++i)
    f_idx_[i] = static_cast<uint32_t>(coeff().index_of(f_.coeffs[i]));
  return &*fast_;
}

uint32_t PetitAlgebra::mul_idx(uint32_t i, uint32_t j) const {
  const fastskew::Ctx* ctx = fast_ctx();
  if (!ctx) return Ring::mul_idx(i, j);
  uint64_t q = ctx->D->size;
  std::vector<uint32_t> a(m_), b(m_);
  uint64_t ri = i, rj = j;
  for (size_t x = 0; x < m_; ++x) {
    a[x] = static_cast<uint32_t>(ri % q);
    ri /= q;
    b[x] = static_cast<uint32_t>(rj % q);
    rj /= q;
  }
  std::vector<uint32_t> out = fastskew::petit_mul(*ctx, f_idx_, a, b);
  uint64_t idx = 0;
  for (size_t x = m_; x-- > 0;) idx = idx * q + out[x];
  return static_cast<uint32_t>(idx);
}

Vec PetitAlgebra::associator(const Vec& x, const Vec& y, const Vec& z) const {
  return sub(mul(mul(x, y), z), mul(x, mul(y, z)));
}

bool PetitAlgebra::all_associators_vanish() const {
  const fastskew::Ctx* ctx = fast_ctx();
  if (ctx && finite() && size_u64() <= (uint64_t{1} << 32)) {
    uint64_t p = prime_.size_u64();
    std::vector<uint32_t> bidx(dim_);
    for (size_t i = 0; i < dim_; ++i) {
      uint64_t v = 1;
      for (size_t k = 0; k < i; ++k) v *= p;
      bidx[i] = static_cast<uint32_t>(v);
    }
    for (uint32_t bi : bidx)
      for (uint32_t bj : bidx) {
        uint32_t ij = mul_idx(bi, bj);
        for (uint32_t bk : bidx)
          if (mul_idx(ij, bk) != mul_idx(bi, mul_idx(bj, bk))) return false;
      }
    return true;
  }
  for (size_t i = 0; i < dim_; ++i)
    for (size_t j = 0; j < dim_; ++j) {
      Vec ij = mul(basis_element(i), basis_element(j));
      for (size_t k = 0; k < dim_; ++k) {
        Vec lhs = mul(ij, basis_element(k));
        Vec rhs = mul(basis_element(i), mul(basis_element(j), basis_element(k)));
        if (lhs != rhs) return false;
      }
    }
  return true;
}

Matrix<Scalar> PetitAlgebra::commutant_subspace() const {
  // z in D with z ∘ b = b ∘ z for every basis element b of the algebra.
  ScalarOps ops{&prime_};
  const Ring& D = coeff();
  Matrix<Scalar> sys(dim_ * dim_, D.dim(), prime_.zero());
  for (size_t col = 0; col < D.dim(); ++col) {
    Vec z = from_coeff(D.basis_element(col));
    for (size_t b = 0; b < dim_; ++b) {
      Vec diff = sub(mul(z, basis_element(b)), mul(basis_element(b), z));
      for (size_t r = 0; r < dim_; ++r) sys.at(b * dim_ + r, col) = diff[r];
    }
  }
  return canonical_rowspace(ops, kernel_basis(ops, sys));
}

const PetitAlgebra::F0Result& PetitAlgebra::f0_compute() const {
  if (f0_) return *f0_;
  Matrix<Scalar> commutant = commutant_subspace();
  F0Result res;
  res.field_in_coeff = present_subfield_in_ring(coeff(), commutant);
  // Cross-check against Fix(sigma) ∩ C(D); for m = 1 there is no t to
  // constrain, so the commutant is just the center of D.
  Matrix<Scalar> expected;
  if (m_ >= 2) {
    expected = f0_subspace(*R_);
  } else {
    expected = center_subspace(coeff());
  }
  res.matches_fix_sigma_center = (commutant == expected);
  if (!res.matches_fix_sigma_center)
    throw VerifyError(describe() + ": commutant differs from Fix(sigma) ∩ C(D); "
                      "inconsistent input presentation");
  f0_ = std::move(res);
  return *f0_;
}

const PetitAlgebra::ModuleView& PetitAlgebra::module_view() const {
  if (module_) return *module_;
  const F0Result& f0 = f0_compute();
  ScalarOps ops{&prime_};
  ModuleView mv;
  size_t deg0 = f0.field_in_coeff.field->dim();
  // Embed F0 into the algebra through the coefficient block at t^0.
  Matrix<Scalar> into_a(dim_, deg0, prime_.zero());
  for (size_t j = 0; j < deg0; ++j)
    into_a.set_col(j, from_coeff(f0.field_in_coeff.into_ring.col(j)));
  mv.f0_in_algebra = FieldInRing{f0.field_in_coeff.field, std::move(into_a)};

  // Greedy F0-basis of the algebra.
  size_t k = dim_ / deg0;
  std::vector<Vec> span_cols;
  auto in_span = [&](const Vec& v) {
    if (span_cols.empty()) return false;
    Matrix<Scalar> m(dim_, span_cols.size(), prime_.zero());
    for (size_t c = 0; c < span_cols.size(); ++c) m.set_col(c, span_cols[c]);
    return solve(ops, m, v).has_value();
  };
  for (size_t cand = 0; cand < dim_ && mv.basis.size() < k; ++cand) {
    Vec w = basis_element(cand);
    if (in_span(w)) continue;
    mv.basis.push_back(w);
    for (size_t l = 0; l < deg0; ++l)
      span_cols.push_back(mul(mv.f0_in_algebra.apply(f0.field_in_coeff.field->basis_element(l)), w));
  }
  if (mv.basis.size() != k)
    throw InternalError(describe() + ": F0-basis extraction failed");

  mv.mix = Matrix<Scalar>(dim_, dim_, prime_.zero());
  for (size_t u = 0; u < k; ++u)
    for (size_t l = 0; l < deg0; ++l)
      mv.mix.set_col(u * deg0 + l,
                     mul(mv.f0_in_algebra.apply(f0.field_in_coeff.field->basis_element(l)),
                         mv.basis[u]));
  auto inv = inverse_matrix(ops, mv.mix);
  if (!inv) throw InternalError(describe() + ": F0-module change of basis is singular");
  mv.mix_inv = std::move(*inv);
  module_ = std::move(mv);
  return *module_;
}

std::vector<Vec> PetitAlgebra::ModuleView::f0_coords(const Vec& x) const {
  ScalarOps ops{&f0_in_algebra.field->prime()};
  Vec mixed = mat_vec(ops, mix_inv, x);
  size_t deg0 = f0_in_algebra.field->dim();
  size_t k = basis.size();
  std::vector<Vec> out(k);
  for (size_t u = 0; u < k; ++u)
    out[u] = Vec(mixed.begin() + u * deg0, mixed.begin() + (u + 1) * deg0);
  return out;
}

PetitAlgebra::NucleusResult PetitAlgebra::nucleus(NucleusSide side) const {
  const ModuleView& mv = module_view();
  const FieldPresentation& F0 = *mv.f0_in_algebra.field;
  FieldOps fops{&F0};
  size_t k = mv.basis.size();
  // Unknown x = sum_v lambda_v w_v; constraints from associators against
  // basis pairs, expressed in F0 coordinates.
  Matrix<Vec> sys(k * k * k, k, F0.zero());
  for (size_t v = 0; v < k; ++v) {
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) {
        Vec assoc;
        switch (side) {
          case NucleusSide::Left:
            assoc = associator(mv.basis[v], mv.basis[i], mv.basis[j]);
            break;
          case NucleusSide::Middle:
            assoc = associator(mv.basis[i], mv.basis[v], mv.basis[j]);
            break;
          case NucleusSide::Right:
            assoc = associator(mv.basis[i], mv.basis[j], mv.basis[v]);
            break;
        }
        std::vector<Vec> coords = mv.f0_coords(assoc);
        for (size_t u = 0; u < k; ++u) sys.at(((i * k) + j) * k + u, v) = coords[u];
      }
  }
  Matrix<Vec> ker = kernel_basis(fops, sys);
  NucleusResult out;
  out.dim_over_f0 = ker.rows();
  Matrix<Scalar> rows(ker.rows(), dim_, prime_.zero());
  for (size_t r = 0; r < ker.rows(); ++r) {
    Vec elem = zero();
    for (size_t v = 0; v < k; ++v)
      elem = add(elem, mul(mv.f0_in_algebra.apply(ker.at(r, v)), mv.basis[v]));
    rows.set_row(r, elem);
  }
  ScalarOps ops{&prime_};
  out.basis_rows = canonical_rowspace(ops, rows);
  return out;
}

Matrix<Scalar> PetitAlgebra::right_nucleus_by_remainder() const {
  ScalarOps ops{&prime_};
  Matrix<Scalar> m(dim_, dim_, prime_.zero());
  for (size_t j = 0; j < dim_; ++j) {
    SkewPoly prod = sp_mul(f_, to_poly(basis_element(j)));
    SkewPoly rem = mod_r(prod, f_);
    m.set_col(j, from_poly(rem));
  }
  return canonical_rowspace(ops, kernel_basis(ops, m));
}

DivisionStatus PetitAlgebra::division_status() const {
  return division_ ? division_->verdict : DivisionStatus::Unknown;
}

const PetitAlgebra::DivisionCheck& PetitAlgebra::is_division(uint64_t criterion_budget,
                                                             uint64_t factor_budget,
                                                             uint64_t scan_budget) const {
  if (division_) return *division_;
  DivisionCheck dc;
  std::vector<DivisionStatus> verdicts;
  auto note_method = [&](const std::string& name) {
    if (!dc.methods.empty()) dc.methods += "+";
    dc.methods += name;
  };

  DivisionStatus coeff_status = coeff().division_status();
  if (m_ == 1) {
    dc.verdict = coeff_status;
    dc.methods = "degenerate_m1_coefficient_ring";
    division_ = std::move(dc);
    return *division_;
  }
  if (coeff_status == DivisionStatus::NotDivision) {
    note_method("coefficient_ring_zero_divisors");
    verdicts.push_back(DivisionStatus::NotDivision);
  }
  if (binomial_ && coeff_status == DivisionStatus::Division) {
    IrreducibilityResult crit = irreducible_criterion(f_, criterion_budget);
    if (crit.verdict == IrredVerdict::Irreducible || crit.verdict == IrredVerdict::Reducible) {
      note_method(crit.method);
      verdicts.push_back(crit.verdict == IrredVerdict::Irreducible ? DivisionStatus::Division
                                                                   : DivisionStatus::NotDivision);
      dc.criterion_witness = crit.witness_z;
      dc.criterion_witness_xy = crit.witness_xy;
    }
  }
  {
    IrreducibilityResult exh = irreducible_exhaustive(f_, factor_budget);
    if (exh.verdict == IrredVerdict::Reducible) {
      note_method(exh.method);
      verdicts.push_back(DivisionStatus::NotDivision);
      dc.factorization = exh.factors;
      if (!dc.zero_divisor && exh.factors)
        dc.zero_divisor =
            std::make_pair(from_poly(exh.factors->first), from_poly(exh.factors->second));
    } else if (exh.verdict == IrredVerdict::Irreducible && exh.complete) {
      note_method(exh.method);
      verdicts.push_back(DivisionStatus::Division);
    } else if (!exh.note.empty()) {
      dc.note = exh.note;
    }
  }
  if (finite() && size_u64() <= scan_budget) {
    note_method("exhaustive_zero_divisor_scan");
    uint64_t sz = size_u64();
    bool found = false;
    for (uint64_t i = 1; i < sz && !found; ++i)
      for (uint64_t j = 1; j < sz; ++j) {
        if (mul_idx(static_cast<uint32_t>(i), static_cast<uint32_t>(j)) == 0) {
          found = true;
          if (!dc.zero_divisor) dc.zero_divisor = std::make_pair(element_at(i), element_at(j));
          break;
        }
      }
    verdicts.push_back(found ? DivisionStatus::NotDivision : DivisionStatus::Division);
  }

  for (DivisionStatus v : verdicts)
    if (v != verdicts.front())
      throw InternalError(describe() + ": division strategies disagree (" + dc.methods + ")");
  dc.verdict = verdicts.empty() ? DivisionStatus::Unknown : verdicts.front();
  if (verdicts.empty() && dc.note.empty())
    dc.note = "all strategies inapplicable (infinite coefficients or budget)";
  division_ = std::move(dc);
  return *division_;
}

PetitAlgebra::InversePair PetitAlgebra::inverse_pair(const Vec& x) const {
  check_elem(x);
  InversePair out;
  if (is_zero(x)) {
    out.zero_divisor = one();
    return out;
  }
  ScalarOps ops{&prime_};
  Matrix<Scalar> rx = right_mul_matrix(x);  // a_l ∘ x = R_x(a_l)
  auto l = solve(ops, rx, one());
  Matrix<Scalar> lx = left_mul_matrix(x);
  auto r = solve(ops, lx, one());
  if (l) out.left = *l;
  if (r) out.right = *r;
  if (!l) {
    Matrix<Scalar> ker = kernel_basis(ops, rx);
    if (ker.rows() > 0) out.zero_divisor = ker.row(0);  // w with w ∘ x = 0... (w from R_x kernel)
  } else if (!r) {
    Matrix<Scalar> ker = kernel_basis(ops, lx);
    if (ker.rows() > 0) out.zero_divisor = ker.row(0);
  }
  out.two_sided = out.left && out.right && eq(*out.left, *out.right);
  return out;
}

}  // namespace nacx
