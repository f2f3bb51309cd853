#include "nacx/coeffalg.hpp"

namespace nacx {

namespace {

// Deterministic generator for the randomized zero-divisor hunt.
struct SplitMix {
  uint64_t state;
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

}  // namespace

CoeffAlgebra::CoeffAlgebra(Kind kind, FieldPtr K, size_t n)
    : Ring(K->prime(), n * K->dim()), kind_(kind), K_(std::move(K)), n_(n) {}

CoeffPtr CoeffAlgebra::field_algebra(FieldPtr K, FieldAutomorphism sigma) {
  if (sigma.owner_ptr().get() != K.get())
    throw InputError("field_algebra: sigma does not act on the given field");
  std::shared_ptr<CoeffAlgebra> D(new CoeffAlgebra(Kind::Field, K, 1));
  D->finalize(std::move(sigma));
  return D;
}

CoeffPtr CoeffAlgebra::cyclic_algebra(FieldPtr K, FieldAutomorphism gamma, Vec c,
                                      FieldAutomorphism sigma_K) {
  if (gamma.owner_ptr().get() != K.get() || sigma_K.owner_ptr().get() != K.get())
    throw InputError("cyclic_algebra: automorphisms must act on K");
  K->check_elem(c);
  if (K->is_zero(c)) throw InputError("cyclic_algebra: structure constant c must be nonzero");
  size_t n = gamma.order();
  if (n < 1) throw InputError("cyclic_algebra: gamma must have positive order");
  std::shared_ptr<CoeffAlgebra> D(new CoeffAlgebra(Kind::Cyclic, K, n));
  D->gamma_ = std::move(gamma);
  D->c_ = std::move(c);

  // c must be central: gamma(c) = c, i.e. c in F = Fix(gamma).
  if (!K->eq(D->gamma_->apply(D->c_), D->c_))
    throw VerifyError("cyclic_algebra: c is not fixed by gamma (c not in the center)");
  // Lift preconditions, each with its witness.
  if (!sigma_K.compose(*D->gamma_).equals(D->gamma_->compose(sigma_K))) {
    for (size_t i = 0; i < K->dim(); ++i) {
      Vec b = K->basis_element(i);
      if (!K->eq(sigma_K.apply(D->gamma_->apply(b)), D->gamma_->apply(sigma_K.apply(b))))
        throw VerifyError("cyclic_algebra: sigma and gamma do not commute; witness basis element " +
                          std::to_string(i));
    }
  }
  if (!K->eq(sigma_K.apply(D->c_), D->c_))
    throw VerifyError(
        "cyclic_algebra: sigma(c) != c; the pair (e^{n-1}, e) violates multiplicativity of the lift");

  D->finalize(std::move(sigma_K));
  return D;
}

void CoeffAlgebra::finalize(FieldAutomorphism sigma_K) {
  sigma_K_ = std::move(sigma_K);

  // Coefficient-wise lift of sigma_K, then mechanical verification.
  Matrix<Scalar> lift(dim_, dim_, prime_.zero());
  for (size_t blk = 0; blk < n_; ++blk)
    for (size_t j = 0; j < K_->dim(); ++j) {
      Vec img = sigma_K_->apply(K_->basis_element(j));
      for (size_t i = 0; i < K_->dim(); ++i)
        lift.at(blk * K_->dim() + i, blk * K_->dim() + j) = img[i];
    }
  sigma_lift_ = RingAut::verified(*this, std::move(lift));

  // Center F: all of K for the field kind, Fix(gamma) for cyclic.
  if (kind_ == Kind::Field) {
    center_in_K_ = Embedding::identity(K_);
    sigma_F_ = *sigma_K_;
  } else {
    center_in_K_ = fixed_field(*gamma_);
    auto restricted = sigma_K_->ring_aut().restrict_to(center_in_K_->matrix());
    if (!restricted) throw InternalError("cyclic_algebra: sigma does not stabilize Fix(gamma)");
    sigma_F_ = FieldAutomorphism::from_matrix(center_in_K_->sub_ptr(), std::move(*restricted));
  }
  m_ = sigma_F_->order();
  Embedding f0_in_F = fixed_field(*sigma_F_);
  f0_in_K_ = center_in_K_->compose(f0_in_F);
  center_tower_ = TowerPath::with_bottom(*sigma_F_, std::move(f0_in_F));
}

std::string CoeffAlgebra::describe() const {
  if (kind_ == Kind::Field) return K_->name();
  return "(" + K_->name() + "/" + center_in_K_->sub().name() + ", gamma, c)";
}

std::vector<Vec> CoeffAlgebra::to_K_chunks(const Vec& x) const {
  size_t kd = K_->dim();
  std::vector<Vec> out(n_);
  for (size_t i = 0; i < n_; ++i)
    out[i] = Vec(x.begin() + i * kd, x.begin() + (i + 1) * kd);
  return out;
}

Vec CoeffAlgebra::from_K_chunks(const std::vector<Vec>& chunks) const {
  Vec out;
  out.reserve(dim_);
  for (const Vec& c : chunks) out.insert(out.end(), c.begin(), c.end());
  return out;
}

Vec CoeffAlgebra::from_K(const Vec& x) const {
  K_->check_elem(x);
  Vec out = zero();
  std::copy(x.begin(), x.end(), out.begin());
  return out;
}

std::optional<Vec> CoeffAlgebra::pullback_to_K(const Vec& x) const {
  check_elem(x);
  for (size_t i = K_->dim(); i < dim_; ++i)
    if (!x[i].is_zero()) return std::nullopt;
  return Vec(x.begin(), x.begin() + K_->dim());
}

const Matrix<Scalar>& CoeffAlgebra::gamma_power(size_t i) const {
  if (gamma_pow_.empty()) {
    ScalarOps ops{&prime_};
    gamma_pow_.push_back(identity_matrix(ops, K_->dim()));
    for (size_t j = 1; j < n_; ++j)
      gamma_pow_.push_back(mat_mul(ops, gamma_->matrix(), gamma_pow_.back()));
  }
  return gamma_pow_[i];
}

Vec CoeffAlgebra::mul(const Vec& a, const Vec& b) const {
  check_elem(a);
  check_elem(b);
  if (kind_ == Kind::Field) return K_->mul(a, b);
  ScalarOps ops{&prime_};
  std::vector<Vec> ca = to_K_chunks(a), cb = to_K_chunks(b);
  std::vector<Vec> out(n_, K_->zero());
  for (size_t i = 0; i < n_; ++i) {
    if (K_->is_zero(ca[i])) continue;
    for (size_t j = 0; j < n_; ++j) {
      if (K_->is_zero(cb[j])) continue;
      Vec term = K_->mul(ca[i], mat_vec(ops, gamma_power(i), cb[j]));
      size_t pos = i + j;
      if (pos >= n_) {
        pos -= n_;
        term = K_->mul(term, c_);
      }
      out[pos] = K_->add(out[pos], term);
    }
  }
  return from_K_chunks(out);
}

uint32_t CoeffAlgebra::mul_idx(uint32_t i, uint32_t j) const {
  if (kind_ == Kind::Field) return Ring::mul_idx(i, j);
  const DenseRingTables* kt = K_->tables();
  if (!kt) return Ring::mul_idx(i, j);
  if (gamma_perm_.empty()) {
    for (size_t g = 0; g < n_; ++g)
      gamma_perm_.push_back(std::make_unique<PermMap>(PermMap::from_matrix(*K_, gamma_power(g))));
  }
  uint64_t q = kt->size;
  uint32_t c_idx = static_cast<uint32_t>(K_->index_of(c_));
  // Decompose indices into K-digit blocks.
  std::vector<uint32_t> xa(n_), xb(n_), out(n_, 0);
  uint64_t ri = i, rj = j;
  for (size_t b = 0; b < n_; ++b) {
    xa[b] = static_cast<uint32_t>(ri % q);
    ri /= q;
    xb[b] = static_cast<uint32_t>(rj % q);
    rj /= q;
  }
  for (size_t bi = 0; bi < n_; ++bi) {
    if (!xa[bi]) continue;
    for (size_t bj = 0; bj < n_; ++bj) {
      if (!xb[bj]) continue;
      uint32_t term = kt->mul_at(xa[bi], (*gamma_perm_[bi])(xb[bj]));
      size_t pos = bi + bj;
      if (pos >= n_) {
        pos -= n_;
        term = kt->mul_at(term, c_idx);
      }
      out[pos] = kt->add_at(out[pos], term);
    }
  }
  uint64_t idx = 0;
  for (size_t b = n_; b-- > 0;) idx = idx * q + out[b];
  return static_cast<uint32_t>(idx);
}

CoeffAlgebra::CenterCheck CoeffAlgebra::center_compute() const {
  ScalarOps ops{&prime_};
  // x with x b_j - b_j x = 0 for every basis element.
  Matrix<Scalar> sys(dim_ * dim_, dim_, prime_.zero());
  for (size_t j = 0; j < dim_; ++j) {
    Vec bj = basis_element(j);
    Matrix<Scalar> diff = left_mul_matrix(bj);  // rows of constraints for b_j x
    Matrix<Scalar> rmat = right_mul_matrix(bj);
    for (size_t r = 0; r < dim_; ++r)
      for (size_t c2 = 0; c2 < dim_; ++c2)
        sys.at(j * dim_ + r, c2) = ops.sub(rmat.at(r, c2), diff.at(r, c2));
  }
  CenterCheck out;
  out.basis_rows = canonical_rowspace(ops, kernel_basis(ops, sys));
  // Compare with the declared center F (embedded K-block image).
  Matrix<Scalar> femb(center_in_K_->sub().dim(), dim_, prime_.zero());
  for (size_t j = 0; j < center_in_K_->sub().dim(); ++j) {
    Vec in_d = from_K(center_in_K_->matrix().col(j));
    femb.set_row(j, in_d);
  }
  out.equals_declared_center = (out.basis_rows == canonical_rowspace(ops, femb));
  return out;
}

DivisionStatus CoeffAlgebra::division_status() const {
  if (kind_ == Kind::Field) return DivisionStatus::Division;
  if (!division_cache_) {
    if (!finite()) return DivisionStatus::Unknown;
    division_verdict();
  }
  switch (division_cache_->verdict) {
    case DivVerdict::Division: return DivisionStatus::Division;
    case DivVerdict::SplitWitness: return DivisionStatus::NotDivision;
    case DivVerdict::Asserted: return DivisionStatus::Unknown;
  }
  return DivisionStatus::Unknown;
}

CoeffAlgebra::DivisionResult CoeffAlgebra::division_verdict(uint64_t scan_budget, uint64_t seed,
                                                            int random_tries) const {
  if (division_cache_) return *division_cache_;
  DivisionResult res;
  if (kind_ == Kind::Field) {
    res.verdict = DivVerdict::Division;
    res.method = "field";
  } else if (finite()) {
    uint64_t sz = size_u64();
    if (sz > scan_budget) throw BudgetError(describe() + ": zero-divisor scan over budget");
    res.verdict = DivVerdict::Division;
    res.method = "exhaustive_zero_divisor_scan";
    const DenseRingTables* t = tables(static_cast<uint32_t>(scan_budget));
    for (uint64_t i = 1; i < sz && !res.zero_divisor; ++i) {
      for (uint64_t j = 1; j < sz; ++j) {
        uint32_t prod = t ? t->mul_at(static_cast<uint32_t>(i), static_cast<uint32_t>(j))
                          : mul_idx(static_cast<uint32_t>(i), static_cast<uint32_t>(j));
        if (prod == 0) {
          res.verdict = DivVerdict::SplitWitness;
          res.zero_divisor = std::make_pair(element_at(i), element_at(j));
          break;
        }
      }
    }
  } else {
    // Number-field coefficients: randomized non-witness search only.
    res.verdict = DivVerdict::Asserted;
    res.method = "randomized_search(seed=" + std::to_string(seed) + ")";
    SplitMix rng{seed};
    for (int tries = 0; tries < random_tries; ++tries) {
      Vec x = zero(), y = zero();
      for (size_t i = 0; i < dim_; ++i) {
        x[i] = Scalar(static_cast<int64_t>(rng.next() % 7) - 3);
        y[i] = Scalar(static_cast<int64_t>(rng.next() % 7) - 3);
      }
      if (is_zero(x) || is_zero(y)) continue;
      if (is_zero(mul(x, y))) {
        res.verdict = DivVerdict::SplitWitness;
        res.zero_divisor = std::make_pair(x, y);
        break;
      }
    }
  }
  division_cache_ = res;
  return res;
}

}  // namespace nacx
