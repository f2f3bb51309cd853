#include "nacx/ring.hpp"

#include <limits>

namespace nacx {

Ring::Ring(PrimeField prime, size_t dim) : prime_(std::move(prime)), dim_(dim) {}
Ring::~Ring() = default;

Vec Ring::one() const { return basis_element(0); }

Vec Ring::basis_element(size_t i) const {
  Vec v = zero();
  v[i] = prime_.one();
  return v;
}

Vec Ring::add(const Vec& a, const Vec& b) const {
  Vec out(dim_);
  for (size_t i = 0; i < dim_; ++i) out[i] = prime_.add(a[i], b[i]);
  return out;
}

Vec Ring::sub(const Vec& a, const Vec& b) const {
  Vec out(dim_);
  for (size_t i = 0; i < dim_; ++i) out[i] = prime_.sub(a[i], b[i]);
  return out;
}

Vec Ring::neg(const Vec& a) const {
  Vec out(dim_);
  for (size_t i = 0; i < dim_; ++i) out[i] = prime_.neg(a[i]);
  return out;
}

Vec Ring::smul(const Scalar& s, const Vec& a) const {
  Vec out(dim_);
  for (size_t i = 0; i < dim_; ++i) out[i] = prime_.mul(s, a[i]);
  return out;
}

bool Ring::is_zero(const Vec& a) const {
  for (const Scalar& c : a)
    if (!c.is_zero()) return false;
  return true;
}

bool Ring::eq(const Vec& a, const Vec& b) const { return a == b; }

void Ring::check_elem(const Vec& a) const {
  if (a.size() != dim_)
    throw InputError(describe() + ": element has " + std::to_string(a.size()) +
                     " coordinates, expected " + std::to_string(dim_));
}

uint64_t Ring::size_u64() const {
  if (!finite()) throw DomainError(describe() + " is infinite");
  uint64_t p = prime_.size_u64();
  uint64_t out = 1;
  for (size_t i = 0; i < dim_; ++i) {
    if (out > (uint64_t{1} << 62) / p) throw BudgetError(describe() + ": too many elements to enumerate");
    out *= p;
  }
  return out;
}

Vec Ring::element_at(uint64_t idx) const {
  uint64_t p = prime_.size_u64();
  Vec out(dim_);
  for (size_t i = 0; i < dim_; ++i) {
    out[i] = prime_.element_at(idx % p);
    idx /= p;
  }
  return out;
}

uint64_t Ring::index_of(const Vec& a) const {
  uint64_t p = prime_.size_u64();
  uint64_t idx = 0;
  for (size_t i = dim_; i-- > 0;) idx = idx * p + prime_.index_of(a[i]);
  return idx;
}

Matrix<Scalar> Ring::left_mul_matrix(const Vec& x) const {
  Matrix<Scalar> out(dim_, dim_, prime_.zero());
  for (size_t j = 0; j < dim_; ++j) out.set_col(j, mul(x, basis_element(j)));
  return out;
}

Matrix<Scalar> Ring::right_mul_matrix(const Vec& x) const {
  Matrix<Scalar> out(dim_, dim_, prime_.zero());
  for (size_t j = 0; j < dim_; ++j) out.set_col(j, mul(basis_element(j), x));
  return out;
}

Ring::InverseResult Ring::inverse_detail(const Vec& x) const {
  check_elem(x);
  InverseResult res;
  if (is_zero(x)) {
    res.zero_divisor = one();
    return res;
  }
  ScalarOps ops{&prime_};
  Matrix<Scalar> lx = left_mul_matrix(x);
  auto sol = solve(ops, lx, one());
  if (!sol) {
    // L_x is singular; a kernel vector is a right zero-divisor partner.
    Matrix<Scalar> ker = kernel_basis(ops, lx);
    res.zero_divisor = ker.row(0);
    return res;
  }
  // In a finite-dimensional associative algebra a one-sided inverse is
  // two-sided; check both products anyway.
  if (!eq(mul(x, *sol), one()) || !eq(mul(*sol, x), one()))
    throw InternalError(describe() + ": one-sided inverse failed two-sided check");
  res.inverse = std::move(*sol);
  return res;
}

uint32_t Ring::mul_idx(uint32_t i, uint32_t j) const {
  return static_cast<uint32_t>(index_of(mul(element_at(i), element_at(j))));
}

const DenseRingTables* Ring::tables(uint32_t max_size) const {
  if (tables_) return tables_.get();
  if (tables_failed_) return nullptr;
  if (!finite()) {
    tables_failed_ = true;
    return nullptr;
  }
  uint64_t p = prime_.size_u64();
  uint64_t n = 1;
  for (size_t i = 0; i < dim_ && n <= max_size; ++i) n *= p;
  if (n > max_size) {
    tables_failed_ = true;
    return nullptr;
  }
  tables_ = DenseRingTables::build(*this, max_size);
  return tables_.get();
}

std::unique_ptr<DenseRingTables> DenseRingTables::build(const Ring& r, uint32_t max_size) {
  auto t = std::make_unique<DenseRingTables>();
  uint64_t n = r.size_u64();
  (void)max_size;
  t->size = static_cast<uint32_t>(n);
  t->mul.resize(n * n);
  t->add.resize(n * n);
  t->neg.resize(n);
  t->inv.assign(n, -1);
  for (uint64_t i = 0; i < n; ++i) {
    Vec a = r.element_at(i);
    t->neg[i] = static_cast<uint32_t>(r.index_of(r.neg(a)));
    for (uint64_t j = 0; j < n; ++j) {
      t->mul[i * n + j] = r.mul_idx(static_cast<uint32_t>(i), static_cast<uint32_t>(j));
      t->add[i * n + j] = static_cast<uint32_t>(r.index_of(r.add(a, r.element_at(j))));
    }
  }
  uint32_t one_idx = static_cast<uint32_t>(r.index_of(r.one()));
  for (uint64_t i = 1; i < n; ++i) {
    if (t->inv[i] >= 0) continue;
    for (uint64_t j = 1; j < n; ++j) {
      if (t->mul[i * n + j] == one_idx && t->mul[j * n + i] == one_idx) {
        t->inv[i] = static_cast<int64_t>(j);
        t->inv[j] = static_cast<int64_t>(i);
        break;
      }
    }
  }
  return t;
}

PermMap PermMap::from_matrix(const Ring& r, const Matrix<Scalar>& m) {
  PermMap out;
  uint64_t n = r.size_u64();
  out.img.resize(n);
  ScalarOps ops{&r.prime()};
  for (uint64_t i = 0; i < n; ++i)
    out.img[i] = static_cast<uint32_t>(r.index_of(mat_vec(ops, m, r.element_at(i))));
  return out;
}

// ---------------------------------------------------------------------------

RingAut::Check RingAut::check(const Ring& r, const Matrix<Scalar>& m) {
  Check c;
  if (m.rows() != r.dim() || m.cols() != r.dim()) {
    c.failure = "matrix shape does not match algebra dimension";
    return c;
  }
  ScalarOps ops{&r.prime()};
  if (rank(ops, m) != r.dim()) {
    c.failure = "map is not bijective";
    return c;
  }
  if (mat_vec(ops, m, r.one()) != r.one()) {
    c.failure = "map does not fix 1";
    return c;
  }
  for (size_t i = 0; i < r.dim(); ++i) {
    Vec bi = r.basis_element(i);
    Vec mbi = mat_vec(ops, m, bi);
    for (size_t j = 0; j < r.dim(); ++j) {
      Vec bj = r.basis_element(j);
      Vec lhs = mat_vec(ops, m, r.mul(bi, bj));
      Vec rhs = r.mul(mbi, mat_vec(ops, m, bj));
      if (lhs != rhs) {
        c.failure = "not multiplicative on basis pair (" + std::to_string(i) + "," +
                    std::to_string(j) + ")";
        return c;
      }
    }
  }
  c.ok = true;
  return c;
}

RingAut RingAut::verified(const Ring& r, Matrix<Scalar> m) {
  Check c = check(r, m);
  if (!c.ok) throw VerifyError(r.describe() + ": automorphism verification failed: " + c.failure);
  return RingAut(&r, std::move(m));
}

std::optional<RingAut> RingAut::try_verified(const Ring& r, Matrix<Scalar> m) {
  if (!check(r, m).ok) return std::nullopt;
  return RingAut(&r, std::move(m));
}

RingAut RingAut::identity(const Ring& r) {
  ScalarOps ops{&r.prime()};
  return RingAut(&r, identity_matrix(ops, r.dim()));
}

Vec RingAut::apply(const Vec& x) const {
  ScalarOps ops{&owner_->prime()};
  return mat_vec(ops, mat_, x);
}

bool RingAut::is_identity() const {
  ScalarOps ops{&owner_->prime()};
  return mat_ == identity_matrix(ops, owner_->dim());
}

RingAut RingAut::compose(const RingAut& inner) const {
  ScalarOps ops{&owner_->prime()};
  return RingAut(owner_, mat_mul(ops, mat_, inner.mat_));
}

RingAut RingAut::power(int64_t k) const {
  RingAut out = identity(*owner_);
  RingAut base = *this;
  while (k) {
    if (k & 1) out = out.compose(base);
    base = base.compose(base);
    k >>= 1;
  }
  return out;
}

std::optional<RingAut> RingAut::inverse() const {
  ScalarOps ops{&owner_->prime()};
  auto inv = inverse_matrix(ops, mat_);
  if (!inv) return std::nullopt;
  return RingAut(owner_, std::move(*inv));
}

int RingAut::order(int cap) const {
  if (order_ > 0) return order_;
  RingAut cur = *this;
  int o = 1;
  while (!cur.is_identity()) {
    cur = cur.compose(*this);
    ++o;
    if (o > cap) throw BudgetError("automorphism order exceeds cap");
  }
  order_ = o;
  return o;
}

std::optional<Matrix<Scalar>> RingAut::restrict_to(const Matrix<Scalar>& emb) const {
  ScalarOps ops{&owner_->prime()};
  size_t sub_dim = emb.cols();
  Matrix<Scalar> out(sub_dim, sub_dim, ops.zero());
  for (size_t j = 0; j < sub_dim; ++j) {
    Vec img = mat_vec(ops, mat_, emb.col(j));
    auto coords = solve(ops, emb, img);
    if (!coords) return std::nullopt;  // image leaves the subspace
    out.set_col(j, *coords);
  }
  return out;
}

}  // namespace nacx
