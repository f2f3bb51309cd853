#include "nacx/recognize.hpp"

#include "nacx/petit.hpp"

namespace nacx {

RingTable::RingTable(PrimeField prime, size_t dim, std::vector<Scalar> constants,
                     Matrix<Scalar> subring_basis, Vec t)
    : Ring(std::move(prime), dim),
      constants_(std::move(constants)),
      subring_basis_(std::move(subring_basis)),
      t_(std::move(t)) {
  if (constants_.size() != dim * dim * dim)
    throw InputError("ring table: expected dim^3 structure constants");
  for (Scalar& s : constants_) s = prime_.canon(s);
  if (subring_basis_.cols() != dim) throw InputError("ring table: subring basis width mismatch");
  if (t_.size() != dim) throw InputError("ring table: t has wrong length");
  for (Scalar& s : t_) s = prime_.canon(s);
}

Vec RingTable::mul(const Vec& a, const Vec& b) const {
  check_elem(a);
  check_elem(b);
  Vec out = zero();
  for (size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = prime_.mul(a[i], b[j]);
      const Scalar* row = &constants_[(i * dim_ + j) * dim_];
      for (size_t k = 0; k < dim_; ++k) {
        if (row[k].is_zero()) continue;
        out[k] = prime_.add(out[k], prime_.mul(c, row[k]));
      }
    }
  }
  return out;
}

const Vec& RingTable::identity_element() const {
  if (identity_) return *identity_;
  ScalarOps ops{&prime_};
  // e with e b_i = b_i and b_i e = b_i for all i.
  Matrix<Scalar> sys(2 * dim_ * dim_, dim_, prime_.zero());
  Vec rhs(2 * dim_ * dim_, prime_.zero());
  for (size_t i = 0; i < dim_; ++i) {
    // (e b_i)_k = sum_j e_j C[j][i][k]
    for (size_t k = 0; k < dim_; ++k) {
      for (size_t j = 0; j < dim_; ++j) {
        sys.at(i * dim_ + k, j) = constants_[(j * dim_ + i) * dim_ + k];
        sys.at(dim_ * dim_ + i * dim_ + k, j) = constants_[(i * dim_ + j) * dim_ + k];
      }
      rhs[i * dim_ + k] = (k == i) ? prime_.one() : prime_.zero();
      rhs[dim_ * dim_ + i * dim_ + k] = (k == i) ? prime_.one() : prime_.zero();
    }
  }
  auto e = solve(ops, sys, rhs);
  if (!e) throw VerifyError("ring table: no two-sided identity");
  identity_ = std::move(*e);
  return *identity_;
}

RingTable RingTable::from_algebra(const PetitAlgebra& A) {
  size_t n = A.dim();
  std::vector<Scalar> constants;
  constants.reserve(n * n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec prod = A.mul(A.basis_element(i), A.basis_element(j));
      for (size_t k = 0; k < n; ++k) constants.push_back(prod[k]);
    }
  size_t dcoeff = A.coeff().dim();
  Matrix<Scalar> sub(dcoeff, n, A.prime().zero());
  for (size_t i = 0; i < dcoeff; ++i) sub.set_row(i, A.from_coeff(A.coeff().basis_element(i)));
  Vec t = A.m() >= 2 ? A.from_coeff(A.coeff().one(), 1) : A.from_coeff(A.coeff().one(), 0);
  return RingTable(A.prime(), n, std::move(constants), std::move(sub), std::move(t));
}

namespace {

Vec ops_add(const ScalarOps& ops, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = ops.add(a[i], b[i]);
  return out;
}

Vec ops_sub(const ScalarOps& ops, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = ops.sub(a[i], b[i]);
  return out;
}

// D-internal helpers: the subring in its own coordinates.
struct SubringView {
  const RingTable* S;
  Matrix<Scalar> basis_cols;  // S.dim x d
  size_t d;

  std::optional<Vec> coords(const Vec& x) const {
    ScalarOps ops{&S->prime()};
    return solve(ops, basis_cols, x);
  }
  Vec lift(const Vec& c) const {
    ScalarOps ops{&S->prime()};
    return mat_vec(ops, basis_cols, c);
  }
  // Product in D-coordinates.
  std::optional<Vec> mul(const Vec& a, const Vec& b) const {
    return coords(S->mul(lift(a), lift(b)));
  }
};

}  // namespace

SkewRecognition recognize_skew(const RingTable& S) {
  SkewRecognition out;
  ScalarOps ops{&S.prime()};
  const size_t N = S.dim();

  Vec e = S.identity_element();

  SubringView D{&S, {}, S.subring_basis().rows()};
  D.basis_cols = Matrix<Scalar>(N, D.d, S.prime().zero());
  for (size_t i = 0; i < D.d; ++i) D.basis_cols.set_col(i, S.subring_basis().row(i));
  if (rank(ops, D.basis_cols) != D.d) {
    out.failed_condition = 1;
    out.detail = "subring basis is linearly dependent";
    return out;
  }
  // D closed under multiplication, contains 1.
  if (!D.coords(e)) {
    out.failed_condition = 1;
    out.detail = "the identity does not lie in the subring";
    return out;
  }
  for (size_t i = 0; i < D.d; ++i)
    for (size_t j = 0; j < D.d; ++j)
      if (!D.coords(S.mul(S.subring_basis().row(i), S.subring_basis().row(j)))) {
        out.failed_condition = 1;
        out.detail = "subring is not closed under multiplication (basis pair " +
                     std::to_string(i) + "," + std::to_string(j) + ")";
        return out;
      }
  // Division hypothesis on D: left multiplications restricted to D must be
  // bijective. A violation is recorded as a witness, not a rejection; the
  // structural recovery below stands on the verified basis conditions alone.
  out.subring_division = true;
  if (S.finite()) {
    uint64_t p = S.prime().size_u64();
    uint64_t count = 1;
    for (size_t i = 0; i < D.d; ++i) count *= p;
    for (uint64_t idx = 1; idx < count && out.subring_division; ++idx) {
      Vec c(D.d, S.prime().zero());
      uint64_t rem = idx;
      for (size_t i = 0; i < D.d; ++i) {
        c[i] = S.prime().element_at(rem % p);
        rem /= p;
      }
      Matrix<Scalar> lm(D.d, D.d, S.prime().zero());
      for (size_t j = 0; j < D.d; ++j) {
        Vec bj(D.d, S.prime().zero());
        bj[j] = S.prime().one();
        auto prod = D.mul(c, bj);
        if (!prod) throw InternalError("recognize: closure lost");
        lm.set_col(j, *prod);
      }
      if (rank(ops, lm) != D.d) {
        out.subring_division = false;
        out.subring_non_unit = c;
      }
    }
  } else {
    out.subring_division = false;  // not decidable by enumeration
  }

  if (N % D.d != 0) {
    out.failed_condition = 1;
    out.detail = "dim S is not a multiple of dim D";
    return out;
  }
  const size_t m = N / D.d;
  out.m = m;

  // Powers t^0 = 1, t^{i+1} = t ∘ t^i.
  std::vector<Vec> tpow{e};
  for (size_t i = 1; i <= m; ++i) tpow.push_back(S.mul(S.t(), tpow.back()));

  // Condition (1): {d_u ∘ t^i} is a basis of S.
  Matrix<Scalar> W(N, N, S.prime().zero());
  for (size_t i = 0; i < m; ++i)
    for (size_t u = 0; u < D.d; ++u)
      W.set_col(i * D.d + u, S.mul(S.subring_basis().row(u), tpow[i]));
  auto Winv = inverse_matrix(ops, W);
  if (!Winv) {
    out.failed_condition = 1;
    out.detail = "the powers of t do not form a left D-basis";
    return out;
  }
  auto decompose = [&](const Vec& x) {
    Vec coords = mat_vec(ops, *Winv, x);
    std::vector<Vec> chunks(m);
    for (size_t i = 0; i < m; ++i)
      chunks[i] = Vec(coords.begin() + i * D.d, coords.begin() + (i + 1) * D.d);
    return chunks;
  };

  // Condition (2): t ∘ a = sigma(a) ∘ t + delta(a) with sigma injective.
  out.sigma = Matrix<Scalar>(D.d, D.d, S.prime().zero());
  out.delta = Matrix<Scalar>(D.d, D.d, S.prime().zero());
  for (size_t u = 0; u < D.d; ++u) {
    std::vector<Vec> chunks = decompose(S.mul(S.t(), S.subring_basis().row(u)));
    for (size_t i = 2; i < m; ++i)
      if (!std::all_of(chunks[i].begin(), chunks[i].end(),
                       [](const Scalar& s) { return s.is_zero(); })) {
        out.failed_condition = 2;
        out.detail = "t ∘ a has a t^" + std::to_string(i) + " component";
        return out;
      }
    out.delta.set_col(u, chunks[0]);
    if (m >= 2) out.sigma.set_col(u, chunks[1]);
  }
  if (m >= 2 && rank(ops, out.sigma) != D.d) {
    out.failed_condition = 2;
    out.detail = "a |-> a1 is not injective";
    return out;
  }
  // sigma must be a ring endomorphism fixing 1, delta a sigma-derivation.
  Vec oneD = *D.coords(e);
  auto applyD = [&](const Matrix<Scalar>& M, const Vec& c) { return mat_vec(ops, M, c); };
  if (m >= 2) {
    if (applyD(out.sigma, oneD) != oneD) {
      out.failed_condition = 2;
      out.detail = "sigma(1) != 1";
      return out;
    }
    for (size_t u = 0; u < D.d; ++u)
      for (size_t v = 0; v < D.d; ++v) {
        Vec bu(D.d, S.prime().zero()), bv(D.d, S.prime().zero());
        bu[u] = S.prime().one();
        bv[v] = S.prime().one();
        Vec uv = *D.mul(bu, bv);
        if (applyD(out.sigma, uv) != *D.mul(applyD(out.sigma, bu), applyD(out.sigma, bv))) {
          out.failed_condition = 2;
          out.detail = "sigma is not multiplicative on basis pair (" + std::to_string(u) + "," +
                       std::to_string(v) + ")";
          return out;
        }
        Vec lhs = applyD(out.delta, uv);
        Vec rhs = ops_add(ops, *D.mul(applyD(out.sigma, bu), applyD(out.delta, bv)),
                          *D.mul(applyD(out.delta, bu), bv));
        if (lhs != rhs) {
          out.failed_condition = 2;
          out.detail = "delta is not a sigma-derivation on basis pair (" + std::to_string(u) +
                       "," + std::to_string(v) + ")";
          return out;
        }
      }
  }
  out.delta_zero = true;
  for (size_t u = 0; u < D.d && out.delta_zero; ++u)
    for (size_t v = 0; v < D.d; ++v)
      if (!out.delta.at(u, v).is_zero()) {
        out.delta_zero = false;
        break;
      }

  // Condition (3): associators on D-basis triples with i + j < m, k < m.
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; i + j < m; ++j)
      for (size_t k = 0; k < m; ++k)
        for (size_t a = 0; a < D.d; ++a)
          for (size_t b = 0; b < D.d; ++b)
            for (size_t c = 0; c < D.d; ++c) {
              Vec x = S.mul(S.subring_basis().row(a), tpow[i]);
              Vec y = S.mul(S.subring_basis().row(b), tpow[j]);
              Vec z = S.mul(S.subring_basis().row(c), tpow[k]);
              Vec lhs = S.mul(S.mul(x, y), z);
              Vec rhs = S.mul(x, S.mul(y, z));
              if (lhs != rhs) {
                out.failed_condition = 3;
                out.detail = "associator [a t^" + std::to_string(i) + ", b t^" +
                             std::to_string(j) + ", c t^" + std::to_string(k) +
                             "] != 0 on basis triple (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")";
                return out;
              }
            }

  // f: t^m = sum d_i t^i.
  std::vector<Vec> fm = decompose(tpow[m]);
  out.f_lower.resize(m);
  for (size_t i = 0; i < m; ++i) out.f_lower[i] = fm[i];
  out.accepted = true;
  return out;
}

CyclicRecognition recognize_cyclic(const RingTable& S, CyclicFlavor flavor,
                                   uint64_t scan_budget) {
  CyclicRecognition out;
  out.base = recognize_skew(S);
  if (!out.base.accepted) {
    out.failed_condition = out.base.failed_condition;
    out.detail = out.base.detail;
    return out;
  }
  ScalarOps ops{&S.prime()};
  const size_t m = out.base.m;
  const size_t dd = S.subring_basis().rows();

  // Condition (4): delta = 0 and t^m = d with d in D nonzero.
  if (!out.base.delta_zero) {
    out.failed_condition = 4;
    out.detail = "delta != 0";
    return out;
  }
  for (size_t i = 1; i < m; ++i)
    for (const Scalar& s : out.base.f_lower[i])
      if (!s.is_zero()) {
        out.failed_condition = 4;
        out.detail = "t^m has a t^" + std::to_string(i) + " component (f is not a binomial)";
        return out;
      }
  out.d = out.base.f_lower[0];
  bool dzero = std::all_of(out.d.begin(), out.d.end(),
                           [](const Scalar& s) { return s.is_zero(); });
  if (dzero) {
    out.failed_condition = 4;
    out.detail = "t^m = 0";
    return out;
  }

  // Condition (5): sigma has order m; fixed ring; primitive root of unity.
  Matrix<Scalar> pw = identity_matrix(ops, dd);
  int order = 0;
  for (int o = 1; o <= static_cast<int>(dd) * 64; ++o) {
    pw = mat_mul(ops, out.base.sigma, pw);
    if (pw == identity_matrix(ops, dd)) {
      order = o;
      break;
    }
  }
  out.sigma_order = order;
  if (order != static_cast<int>(m)) {
    out.failed_condition = 5;
    out.detail = "sigma has order " + std::to_string(order) + ", expected " + std::to_string(m);
    return out;
  }
  // Fixed ring {a : sigma(a) = a} (equivalently t ∘ a = a ∘ t when delta = 0).
  Matrix<Scalar> fixmat = out.base.sigma;
  for (size_t i = 0; i < dd; ++i) fixmat.at(i, i) = ops.sub(fixmat.at(i, i), ops.one());
  Matrix<Scalar> fix = kernel_basis(ops, fixmat);
  out.fixed_ring_dim = fix.rows();
  {
    Vec dvec(out.d.begin(), out.d.end());
    out.associative = (mat_vec(ops, out.base.sigma, dvec) == dvec);
  }

  // Root-of-unity side of (5): in the fixed ring for the field flavor, in
  // fixed ∩ center(D) for the csa flavor.
  SubringView D{&S, Matrix<Scalar>(S.dim(), dd, S.prime().zero()), dd};
  for (size_t i = 0; i < dd; ++i) D.basis_cols.set_col(i, S.subring_basis().row(i));
  Matrix<Scalar> search_space = fix;
  if (flavor == CyclicFlavor::Csa) {
    // Intersect the fixed space with the center of D: parametrize candidates
    // over the fixed basis and solve the commutation constraints.
    Matrix<Scalar> constraint(dd * dd, fix.rows(), S.prime().zero());
    for (size_t c = 0; c < fix.rows(); ++c) {
      Vec cand = fix.row(c);
      for (size_t u = 0; u < dd; ++u) {
        Vec bu(dd, S.prime().zero());
        bu[u] = S.prime().one();
        Vec diff = ops_sub(ops, *D.mul(cand, bu), *D.mul(bu, cand));
        for (size_t rr = 0; rr < dd; ++rr) constraint.at(u * dd + rr, c) = diff[rr];
      }
    }
    Matrix<Scalar> ker = kernel_basis(ops, constraint);
    Matrix<Scalar> inter(ker.rows(), dd, S.prime().zero());
    for (size_t r = 0; r < ker.rows(); ++r) {
      Vec v(dd, S.prime().zero());
      for (size_t c = 0; c < fix.rows(); ++c)
        for (size_t x = 0; x < dd; ++x)
          v[x] = ops.add(v[x], ops.mul(ker.at(r, c), fix.at(c, x)));
      inter.set_row(r, v);
    }
    search_space = std::move(inter);
  }
  if (S.finite()) {
    uint64_t p = S.prime().size_u64();
    uint64_t count = 1;
    for (size_t i = 0; i < search_space.rows(); ++i) count *= p;
    Vec oneD = *D.coords(S.identity_element());
    for (uint64_t idx = 1; idx < count && !out.has_primitive_root; ++idx) {
      Vec cand(dd, S.prime().zero());
      uint64_t rem = idx;
      for (size_t i = 0; i < search_space.rows(); ++i) {
        Scalar coef = S.prime().element_at(rem % p);
        rem /= p;
        for (size_t x = 0; x < dd; ++x)
          cand[x] = ops.add(cand[x], ops.mul(coef, search_space.at(i, x)));
      }
      Vec acc = cand;
      bool primitive = true;
      for (size_t j = 1; j < m; ++j) {
        if (acc == oneD) {
          primitive = false;
          break;
        }
        acc = *D.mul(acc, cand);
      }
      if (primitive && acc == oneD) {
        out.has_primitive_root = true;
        out.omega = cand;
      }
    }
  }
  // A missing root of unity does not invalidate the recovered presentation;
  // it only removes the cyclic-extension conclusion below.
  out.accepted = true;

  // Right-division scan (budgeted): every nonzero right multiplication
  // bijective.
  if (S.finite()) {
    uint64_t total = 1;
    bool over = false;
    uint64_t p = S.prime().size_u64();
    for (size_t i = 0; i < S.dim(); ++i) {
      total *= p;
      if (total > scan_budget) {
        over = true;
        break;
      }
    }
    if (!over) {
      out.right_division = CyclicRecognition::RightDivision::Yes;
      for (uint64_t idx = 1; idx < total; ++idx) {
        Vec a = S.element_at(idx);
        Matrix<Scalar> ra = S.right_mul_matrix(a);
        if (rank(ops, ra) != S.dim()) {
          out.right_division = CyclicRecognition::RightDivision::No;
          out.right_division_witness = a;
          break;
        }
      }
    }
  }
  out.cyclic_extension_claim = out.accepted && out.base.subring_division &&
                               out.has_primitive_root &&
                               out.right_division == CyclicRecognition::RightDivision::Yes;
  return out;
}

}  // namespace nacx
