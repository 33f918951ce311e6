#include "ncc/algebra.hpp"

#include <algorithm>

#include "ncc/factor.hpp"

namespace ncc {

StructAlgebra::StructAlgebra(const Field& k, int dim, std::vector<Scalar> mult, ScalarVec unit)
    : k_(k), d_(dim), mult_(std::move(mult)), unit_(std::move(unit)) {
  require(d_ >= 1, Err::BadParameters, "algebra dimension must be positive");
  require(mult_.size() == static_cast<std::size_t>(d_) * d_ * d_, Err::BadParameters,
          "structure constant tensor size mismatch");
  require(unit_.size() == static_cast<std::size_t>(d_), Err::BadParameters, "unit vector size mismatch");
}

ScalarVec StructAlgebra::mul(const ScalarVec& u, const ScalarVec& v) const {
  ScalarVec w(static_cast<std::size_t>(d_), Scalar::zero(k_));
  for (int i = 0; i < d_; ++i) {
    if (u[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < d_; ++j) {
      if (v[static_cast<std::size_t>(j)].is_zero()) continue;
      const Scalar uv = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
      for (int l = 0; l < d_; ++l) {
        const Scalar& cl = c(i, j, l);
        if (!cl.is_zero()) w[static_cast<std::size_t>(l)] += uv * cl;
      }
    }
  }
  return w;
}

ScalarMat StructAlgebra::left_mult(const ScalarVec& u) const {
  ScalarMat m(d_, d_, Scalar::zero(k_));
  for (int i = 0; i < d_; ++i) {
    if (u[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < d_; ++j)
      for (int l = 0; l < d_; ++l) {
        const Scalar& cl = c(i, j, l);
        if (!cl.is_zero()) m(l, j) += u[static_cast<std::size_t>(i)] * cl;
      }
  }
  return m;
}

ScalarMat StructAlgebra::right_mult(const ScalarVec& u) const {
  ScalarMat m(d_, d_, Scalar::zero(k_));
  for (int j = 0; j < d_; ++j) {
    if (u[static_cast<std::size_t>(j)].is_zero()) continue;
    for (int i = 0; i < d_; ++i)
      for (int l = 0; l < d_; ++l) {
        const Scalar& cl = c(i, j, l);
        if (!cl.is_zero()) m(l, i) += u[static_cast<std::size_t>(j)] * cl;
      }
  }
  return m;
}

ScalarVec StructAlgebra::power(const ScalarVec& u, int e) const {
  ScalarVec r = unit_;
  ScalarVec b = u;
  require(e >= 0, Err::BadParameters, "negative algebra power");
  while (e) {
    if (e & 1) r = mul(r, b);
    if (e >>= 1) b = mul(b, b);
  }
  return r;
}

void StructAlgebra::verify(bool deep) const {
  for (int i = 0; i < d_; ++i) {
    ScalarVec ei(static_cast<std::size_t>(d_), Scalar::zero(k_));
    ei[static_cast<std::size_t>(i)] = Scalar::one(k_);
    require(mul(unit_, ei) == ei && mul(ei, unit_) == ei, Err::BadParameters,
            "unit does not act as a two-sided identity");
  }
  if (!deep) return;
  for (int i = 0; i < d_; ++i) {
    ScalarVec ei(static_cast<std::size_t>(d_), Scalar::zero(k_));
    ei[static_cast<std::size_t>(i)] = Scalar::one(k_);
    const ScalarMat li = left_mult(ei);
    for (int j = 0; j < d_; ++j) {
      ScalarVec ej(static_cast<std::size_t>(d_), Scalar::zero(k_));
      ej[static_cast<std::size_t>(j)] = Scalar::one(k_);
      const ScalarMat prod = scalar_mul(li, left_mult(ej));
      const ScalarMat lij = left_mult(mul(ei, ej));
      require(prod == lij, Err::BadParameters, "associativity fails on a basis triple");
    }
  }
}

namespace {

ScalarMat rows_of(const std::vector<ScalarVec>& vs, int width, const Field& k) {
  ScalarMat m(static_cast<int>(vs.size()), width, Scalar::zero(k));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (int j = 0; j < width; ++j) m(static_cast<int>(i), j) = vs[i][static_cast<std::size_t>(j)];
  return m;
}

std::vector<ScalarVec> rows_to_vecs(const ScalarMat& m) {
  std::vector<ScalarVec> out;
  out.reserve(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
  return out;
}

// Product span of two families (two-sided products use both orders).
std::vector<ScalarVec> span_products(const StructAlgebra& A, const std::vector<ScalarVec>& u,
                                     const std::vector<ScalarVec>& v) {
  std::vector<ScalarVec> prods;
  for (const auto& a : u)
    for (const auto& b : v) prods.push_back(A.mul(a, b));
  return rows_to_vecs(row_space(rows_of(prods, A.dim(), A.field())));
}

}  // namespace

StructAlgebra StructAlgebra::quotient_by_ideal(const std::vector<ScalarVec>& ideal, AlgQuotient* maps) const {
  ScalarMat w = row_space(rows_of(ideal, d_, k_));
  std::vector<int> pivot_of_row(static_cast<std::size_t>(w.rows()), -1);
  std::vector<bool> is_pivot(static_cast<std::size_t>(d_), false);
  for (int i = 0; i < w.rows(); ++i)
    for (int j = 0; j < d_; ++j)
      if (!w(i, j).is_zero()) {
        pivot_of_row[static_cast<std::size_t>(i)] = j;
        is_pivot[static_cast<std::size_t>(j)] = true;
        break;
      }
  std::vector<int> free_cols;
  for (int j = 0; j < d_; ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) free_cols.push_back(j);
  const int q = static_cast<int>(free_cols.size());
  require(q >= 1, Err::BadParameters, "quotient by the whole algebra");

  // Reduce an ambient vector mod the ideal, then read free coordinates.
  auto project = [&](ScalarVec v) {
    for (int i = 0; i < w.rows(); ++i) {
      const int p = pivot_of_row[static_cast<std::size_t>(i)];
      const Scalar& cv = v[static_cast<std::size_t>(p)];
      if (cv.is_zero()) continue;
      const Scalar cc = cv;
      for (int j = 0; j < d_; ++j) v[static_cast<std::size_t>(j)] -= cc * w(i, j);
    }
    ScalarVec out(static_cast<std::size_t>(q), Scalar::zero(k_));
    for (int j = 0; j < q; ++j) out[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(free_cols[static_cast<std::size_t>(j)])];
    return out;
  };

  std::vector<Scalar> mult;
  mult.reserve(static_cast<std::size_t>(q) * q * q);
  std::vector<ScalarVec> lifts;
  for (int j = 0; j < q; ++j) {
    ScalarVec e(static_cast<std::size_t>(d_), Scalar::zero(k_));
    e[static_cast<std::size_t>(free_cols[static_cast<std::size_t>(j)])] = Scalar::one(k_);
    lifts.push_back(std::move(e));
  }
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      const ScalarVec pr = project(mul(lifts[static_cast<std::size_t>(i)], lifts[static_cast<std::size_t>(j)]));
      for (int l = 0; l < q; ++l) mult.push_back(pr[static_cast<std::size_t>(l)]);
    }

  StructAlgebra out(k_, q, std::move(mult), project(unit_));
  if (maps) {
    maps->proj = ScalarMat(q, d_, Scalar::zero(k_));
    for (int j = 0; j < d_; ++j) {
      ScalarVec e(static_cast<std::size_t>(d_), Scalar::zero(k_));
      e[static_cast<std::size_t>(j)] = Scalar::one(k_);
      const ScalarVec pr = project(std::move(e));
      for (int i = 0; i < q; ++i) maps->proj(i, j) = pr[static_cast<std::size_t>(i)];
    }
    maps->section = ScalarMat(d_, q, Scalar::zero(k_));
    for (int j = 0; j < q; ++j)
      maps->section(free_cols[static_cast<std::size_t>(j)], j) = Scalar::one(k_);
  }
  return out;
}

StructAlgebra StructAlgebra::corner(const ScalarVec& e, ScalarMat* embed) const {
  // Basis of e*A*e.
  std::vector<ScalarVec> gens;
  for (int i = 0; i < d_; ++i) {
    ScalarVec b(static_cast<std::size_t>(d_), Scalar::zero(k_));
    b[static_cast<std::size_t>(i)] = Scalar::one(k_);
    gens.push_back(mul(mul(e, b), e));
  }
  ScalarMat basis = row_space(rows_of(gens, d_, k_));
  const int cd = basis.rows();
  require(cd >= 1, Err::Internal, "empty corner");
  // Coordinates over the rref basis by pivot reading.
  std::vector<int> pivots(static_cast<std::size_t>(cd));
  for (int i = 0; i < cd; ++i)
    for (int j = 0; j < d_; ++j)
      if (!basis(i, j).is_zero()) {
        pivots[static_cast<std::size_t>(i)] = j;
        break;
      }
  auto coords = [&](const ScalarVec& v) {
    ScalarVec out(static_cast<std::size_t>(cd), Scalar::zero(k_));
    ScalarVec rem = v;
    for (int i = 0; i < cd; ++i) {
      const Scalar c0 = rem[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])];
      out[static_cast<std::size_t>(i)] = c0;
      if (c0.is_zero()) continue;
      for (int j = 0; j < d_; ++j) rem[static_cast<std::size_t>(j)] -= c0 * basis(i, j);
    }
    require(scalar_vec_is_zero(rem), Err::Internal, "corner coordinate failure");
    return out;
  };

  std::vector<Scalar> mult;
  mult.reserve(static_cast<std::size_t>(cd) * cd * cd);
  for (int i = 0; i < cd; ++i)
    for (int j = 0; j < cd; ++j) {
      const ScalarVec pr = coords(mul(basis.row(i), basis.row(j)));
      for (int l = 0; l < cd; ++l) mult.push_back(pr[static_cast<std::size_t>(l)]);
    }
  StructAlgebra out(k_, cd, std::move(mult), coords(mul(mul(e, unit_), e)));
  if (embed) {
    *embed = ScalarMat(d_, cd, Scalar::zero(k_));
    for (int i = 0; i < cd; ++i)
      for (int j = 0; j < d_; ++j) (*embed)(j, i) = basis(i, j);
  }
  return out;
}

Poly StructAlgebra::min_poly(const ScalarVec& u) const {
  // Incrementally row reduce 1, u, u^2, ... until dependence.
  ScalarMat rows(d_ + 1, d_, Scalar::zero(k_));
  std::vector<ScalarVec> pows;
  ScalarVec cur = unit_;
  for (int step = 0; step <= d_; ++step) {
    pows.push_back(cur);
    ScalarMat m(static_cast<int>(pows.size()), d_, Scalar::zero(k_));
    for (std::size_t i = 0; i < pows.size(); ++i)
      for (int j = 0; j < d_; ++j) m(static_cast<int>(i), j) = pows[i][static_cast<std::size_t>(j)];
    if (rank(m) < static_cast<int>(pows.size())) {
      // Solve sum_i c_i u^i = 0 with c_step = 1.
      ScalarMat a(d_, step, Scalar::zero(k_));
      for (int i = 0; i < step; ++i)
        for (int j = 0; j < d_; ++j) a(j, i) = pows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      ScalarVec rhs(static_cast<std::size_t>(d_), Scalar::zero(k_));
      for (int j = 0; j < d_; ++j) rhs[static_cast<std::size_t>(j)] = -cur[static_cast<std::size_t>(j)];
      auto sol = solve(a, rhs);
      require(sol.has_value(), Err::Internal, "minimal polynomial solve failed");
      std::vector<Scalar> cs = *sol;
      cs.push_back(Scalar::one(k_));
      return Poly(k_, cs);
    }
    cur = mul(cur, u);
  }
  fail(Err::Internal, "minimal polynomial not found within dimension bound");
}

std::vector<ScalarVec> center_basis(const StructAlgebra& A) {
  const int d = A.dim();
  const Field& k = A.field();
  ScalarMat cond(d * d, d, Scalar::zero(k));
  for (int i = 0; i < d; ++i) {
    ScalarVec ei(static_cast<std::size_t>(d), Scalar::zero(k));
    ei[static_cast<std::size_t>(i)] = Scalar::one(k);
    const ScalarMat li = A.left_mult(ei);
    const ScalarMat ri = A.right_mult(ei);
    for (int r = 0; r < d; ++r)
      for (int cidx = 0; cidx < d; ++cidx) cond(i * d + r, cidx) = li(r, cidx) - ri(r, cidx);
  }
  const ScalarMat ker = kernel_basis(cond);
  std::vector<ScalarVec> out;
  for (int j = 0; j < ker.cols(); ++j) out.push_back(ker.col(j));
  return rows_to_vecs(row_space(rows_of(out, d, k)));
}

namespace {

// Coefficient c_m of the characteristic polynomial (coefficient of
// lambda^{n-m}) of the left multiplication by z.
Scalar charpoly_coeff(const StructAlgebra& A, const ScalarVec& z, int m) {
  const ScalarVec cp = char_poly(A.left_mult(z));
  return cp[static_cast<std::size_t>(A.dim() - m)];
}

std::vector<ScalarVec> radical_char0(const StructAlgebra& A) {
  const int d = A.dim();
  const Field& k = A.field();
  std::vector<ScalarMat> lm;
  lm.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    ScalarVec ei(static_cast<std::size_t>(d), Scalar::zero(k));
    ei[static_cast<std::size_t>(i)] = Scalar::one(k);
    lm.push_back(A.left_mult(ei));
  }
  ScalarMat gram(d, d, Scalar::zero(k));
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Scalar t = Scalar::zero(k);
      for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s)
          if (!lm[static_cast<std::size_t>(i)](r, s).is_zero())
            t += lm[static_cast<std::size_t>(i)](r, s) * lm[static_cast<std::size_t>(j)](s, r);
      gram(i, j) = t;
      gram(j, i) = t;
    }
  const ScalarMat ker = kernel_basis(gram);
  std::vector<ScalarVec> out;
  for (int j = 0; j < ker.cols(); ++j) out.push_back(ker.col(j));
  return rows_to_vecs(row_space(rows_of(out, d, k)));
}

std::vector<ScalarVec> radical_charp(const StructAlgebra& A) {
  // Friedl-Ronyai / Cohen-Ivanyos-Wales chain over the prime field: descend
  // through ideals cut out by characteristic polynomial coefficients c_{p^i};
  // on each stage the functional is additive on the previous ideal and
  // F_p-homogeneous, hence the conditions are linear.
  const int d = A.dim();
  const Field& k = A.field();
  const std::uint64_t p = k.characteristic();

  std::vector<ScalarVec> basis;
  for (int i = 0; i < d; ++i) {
    ScalarVec e(static_cast<std::size_t>(d), Scalar::zero(k));
    e[static_cast<std::size_t>(i)] = Scalar::one(k);
    basis.push_back(std::move(e));
  }

  long pi = 1;
  for (int stage = 0; pi <= d; ++stage, pi *= static_cast<long>(p)) {
    if (basis.empty()) break;
    const int r = static_cast<int>(basis.size());
    ScalarMat cond(r, r, Scalar::zero(k));
    if (stage == 0) {
      std::vector<ScalarMat> lm;
      for (const auto& b : basis) lm.push_back(A.left_mult(b));
      for (int s = 0; s < r; ++s)
        for (int y = 0; y < r; ++y) {
          Scalar t = Scalar::zero(k);
          for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
              if (!lm[static_cast<std::size_t>(s)](a, b).is_zero())
                t += lm[static_cast<std::size_t>(s)](a, b) * lm[static_cast<std::size_t>(y)](b, a);
          cond(y, s) = t;
        }
    } else {
      for (int s = 0; s < r; ++s)
        for (int y = 0; y < r; ++y)
          cond(y, s) = charpoly_coeff(A, A.mul(basis[static_cast<std::size_t>(s)], basis[static_cast<std::size_t>(y)]),
                                      static_cast<int>(pi));
    }
    const ScalarMat ker = kernel_basis(cond);
    std::vector<ScalarVec> next;
    for (int j = 0; j < ker.cols(); ++j) {
      ScalarVec v(static_cast<std::size_t>(d), Scalar::zero(k));
      for (int s = 0; s < r; ++s) {
        const Scalar& cs = ker(s, j);
        if (cs.is_zero()) continue;
        for (int t2 = 0; t2 < d; ++t2) v[static_cast<std::size_t>(t2)] += cs * basis[static_cast<std::size_t>(s)][static_cast<std::size_t>(t2)];
      }
      next.push_back(std::move(v));
    }
    basis = rows_to_vecs(row_space(rows_of(next, d, k)));
  }
  return basis;
}

}  // namespace

std::vector<ScalarVec> jacobson_radical(const StructAlgebra& A, bool verify_result) {
  std::vector<ScalarVec> rad = A.field().is_q() ? radical_char0(A) : radical_charp(A);
  if (verify_result && !rad.empty()) {
    const int d = A.dim();
    ScalarMat span = row_space(rows_of(rad, d, A.field()));
    for (int i = 0; i < d; ++i) {
      ScalarVec ei(static_cast<std::size_t>(d), Scalar::zero(A.field()));
      ei[static_cast<std::size_t>(i)] = Scalar::one(A.field());
      for (const auto& w : rad) {
        require(in_row_space(span, A.mul(ei, w)) && in_row_space(span, A.mul(w, ei)),
                Err::Internal, "computed radical is not a two-sided ideal");
      }
    }
    std::vector<ScalarVec> pw = rad;
    int steps = 0;
    while (!pw.empty()) {
      require(++steps <= d + 1, Err::Internal, "computed radical is not nilpotent");
      pw = span_products(A, pw, rad);
    }
  }
  if (verify_result) {
    const StructAlgebra q = rad.empty() ? A : A.quotient_by_ideal(rad);
    require(jacobson_radical(q, false).empty(), Err::Internal,
            "quotient by the computed radical still has a radical");
  }
  return rad;
}

namespace {

// Newton idempotent refinement: e <- 3e^2 - 2e^3 converges when e^2 - e is
// nilpotent; the fixed point is the unique idempotent congruent to e.
ScalarVec lift_idempotent(const StructAlgebra& A, ScalarVec e, int max_iter) {
  const Scalar three = Scalar::of_int(A.field(), 3);
  const Scalar two = Scalar::of_int(A.field(), 2);
  for (int it = 0; it < max_iter; ++it) {
    const ScalarVec e2 = A.mul(e, e);
    ScalarVec diff = e2;
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= e[i];
    if (scalar_vec_is_zero(diff)) return e;
    const ScalarVec e3 = A.mul(e2, e);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = three * e2[i] - two * e3[i];
  }
  fail(Err::Internal, "idempotent lifting did not converge");
}

Poly eval_poly_at_element(const StructAlgebra& A, const Poly& p, const ScalarVec& z, ScalarVec& out) {
  ScalarVec r(static_cast<std::size_t>(A.dim()), Scalar::zero(A.field()));
  for (int i = p.degree(); i >= 0; --i) {
    r = A.mul(r, z);
    const Scalar ci = p.coeff(i);
    if (!ci.is_zero())
      for (std::size_t t = 0; t < r.size(); ++t) r[t] += ci * A.unit()[t];
  }
  out = r;
  return p;
}

// Orthogonal idempotent decomposition refinement inside an algebra whose
// elements' minimal polynomials may be factored: splits `e` when some element
// of e*A*e has a minimal polynomial with at least two coprime parts.
// Deterministic candidate sweep; returns false when no candidate splits.
bool split_once(const StructAlgebra& A, const ScalarVec& e, std::vector<ScalarVec>& parts) {
  ScalarMat embed;
  const StructAlgebra B = A.corner(e, &embed);
  const int cd = B.dim();
  if (cd == 1) return false;
  std::vector<ScalarVec> candidates;
  for (int i = 0; i < cd; ++i) {
    ScalarVec ei(static_cast<std::size_t>(cd), Scalar::zero(B.field()));
    ei[static_cast<std::size_t>(i)] = Scalar::one(B.field());
    candidates.push_back(std::move(ei));
  }
  const std::size_t nb = candidates.size();
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j) candidates.push_back(scalar_add(candidates[i], candidates[j]));
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      if (i != j) candidates.push_back(B.mul(candidates[i], candidates[j]));

  for (const auto& z : candidates) {
    if (scalar_vec_is_zero(z)) continue;
    const Poly m = B.min_poly(z);
    if (m.degree() < 1) continue;
    auto fs = factor_poly(m);
    if (fs.size() < 2) continue;
    // Chinese-remainder idempotents of k[z].
    for (const auto& [g, mult] : fs) {
      const Poly gi = g.pow(mult);
      const Poly rest = m / gi;
      const auto x = poly_xgcd(gi, rest);
      require(x.g.is_one(), Err::Internal, "CRT factors not coprime");
      // h = v * rest is 1 mod gi and 0 mod rest.
      const Poly h = x.v * rest;
      ScalarVec idem_corner;
      eval_poly_at_element(B, h, z, idem_corner);
      idem_corner = lift_idempotent(B, idem_corner, 3 + cd);
      ScalarVec idem = scalar_mat_vec(embed, idem_corner);
      if (scalar_vec_is_zero(idem)) continue;
      parts.push_back(std::move(idem));
    }
    if (parts.size() >= 2) return true;
    parts.clear();
  }
  return false;
}

// Is a stuck corner certifiably a (commutative) field? Looks for a primitive
// element with irreducible minimal polynomial of full degree.
bool corner_is_field(const StructAlgebra& A, const ScalarVec& e) {
  const StructAlgebra B = A.corner(e);
  const int cd = B.dim();
  if (cd == 1) return true;
  std::vector<ScalarVec> candidates;
  for (int i = 0; i < cd; ++i) {
    ScalarVec ei(static_cast<std::size_t>(cd), Scalar::zero(B.field()));
    ei[static_cast<std::size_t>(i)] = Scalar::one(B.field());
    candidates.push_back(std::move(ei));
  }
  const std::size_t nb = candidates.size();
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j) candidates.push_back(scalar_add(candidates[i], candidates[j]));
  for (const auto& z : candidates) {
    const Poly m = B.min_poly(z);
    if (m.degree() == cd && is_irreducible(m)) return true;
  }
  return false;
}

}  // namespace

namespace {

// Subalgebra on a multiplicatively closed span with its own unit.
StructAlgebra subalgebra_on_span(const StructAlgebra& A, const std::vector<ScalarVec>& gens,
                                 const ScalarVec& unit) {
  ScalarMat basis = row_space(rows_of(gens, A.dim(), A.field()));
  const int sd = basis.rows();
  require(sd >= 1, Err::Internal, "empty subalgebra span");
  std::vector<int> pivots(static_cast<std::size_t>(sd));
  for (int i = 0; i < sd; ++i)
    for (int j = 0; j < A.dim(); ++j)
      if (!basis(i, j).is_zero()) {
        pivots[static_cast<std::size_t>(i)] = j;
        break;
      }
  auto coords = [&](const ScalarVec& v) {
    ScalarVec out(static_cast<std::size_t>(sd), Scalar::zero(A.field()));
    ScalarVec rem = v;
    for (int i = 0; i < sd; ++i) {
      const Scalar c0 = rem[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])];
      out[static_cast<std::size_t>(i)] = c0;
      if (c0.is_zero()) continue;
      for (int j = 0; j < A.dim(); ++j) rem[static_cast<std::size_t>(j)] -= c0 * basis(i, j);
    }
    require(scalar_vec_is_zero(rem), Err::Internal, "span is not multiplicatively closed");
    return out;
  };
  std::vector<Scalar> mult;
  mult.reserve(static_cast<std::size_t>(sd) * sd * sd);
  for (int i = 0; i < sd; ++i)
    for (int j = 0; j < sd; ++j) {
      const ScalarVec pr = coords(A.mul(basis.row(i), basis.row(j)));
      for (int l = 0; l < sd; ++l) mult.push_back(pr[static_cast<std::size_t>(l)]);
    }
  return StructAlgebra(A.field(), sd, std::move(mult), coords(unit));
}

// Minimal polynomial of z relative to a local identity e (z = e*z*e assumed).
Poly relative_min_poly(const StructAlgebra& A, const ScalarVec& e, const ScalarVec& z) {
  std::vector<ScalarVec> pows{e};
  ScalarVec cur = e;
  for (int step = 0; step <= A.dim(); ++step) {
    cur = A.mul(cur, z);
    {
      std::vector<ScalarVec> test = pows;
      test.push_back(cur);
      if (rank(rows_of(test, A.dim(), A.field())) == static_cast<int>(pows.size())) {
        const int deg = static_cast<int>(pows.size());
        ScalarMat a(A.dim(), deg, Scalar::zero(A.field()));
        for (int i2 = 0; i2 < deg; ++i2)
          for (int j2 = 0; j2 < A.dim(); ++j2)
            a(j2, i2) = pows[static_cast<std::size_t>(i2)][static_cast<std::size_t>(j2)];
        ScalarVec rhs(static_cast<std::size_t>(A.dim()), Scalar::zero(A.field()));
        for (int j2 = 0; j2 < A.dim(); ++j2) rhs[static_cast<std::size_t>(j2)] = -cur[static_cast<std::size_t>(j2)];
        auto sol = solve(a, rhs);
        require(sol.has_value(), Err::Internal, "relative minimal polynomial solve failed");
        std::vector<Scalar> cs = *sol;
        cs.push_back(Scalar::one(A.field()));
        return Poly(A.field(), cs);
      }
    }
    pows.push_back(cur);
  }
  fail(Err::Internal, "relative minimal polynomial not found");
}

// Evaluate h at z using e as the identity.
ScalarVec eval_relative(const StructAlgebra& A, const Poly& h, const ScalarVec& e, const ScalarVec& z) {
  ScalarVec r(static_cast<std::size_t>(A.dim()), Scalar::zero(A.field()));
  for (int i = h.degree(); i >= 0; --i) {
    r = A.mul(r, z);
    const Scalar ci = h.coeff(i);
    if (!ci.is_zero())
      for (std::size_t t = 0; t < r.size(); ++t) r[t] += ci * e[t];
  }
  return r;
}

}  // namespace

std::vector<ScalarVec> block_decompose(const StructAlgebra& A) {
  // Idempotents live in the center; refine the unit along minimal polynomials
  // of central elements.
  const std::vector<ScalarVec> zb = center_basis(A);
  require(!zb.empty(), Err::Internal, "center cannot be empty");

  std::vector<ScalarVec> done;
  std::vector<ScalarVec> work{A.unit()};
  while (!work.empty()) {
    ScalarVec e = work.back();
    work.pop_back();
    std::vector<ScalarVec> parts;
    bool split = false;
    std::vector<ScalarVec> cands;
    for (const auto& z : zb) cands.push_back(A.mul(e, z));
    for (std::size_t i = 0; i < zb.size(); ++i)
      for (std::size_t j = i + 1; j < zb.size(); ++j)
        cands.push_back(A.mul(e, scalar_add(zb[i], zb[j])));
    for (std::size_t i = 0; i < zb.size(); ++i)
      for (std::size_t j = i + 1; j < zb.size(); ++j)
        cands.push_back(A.mul(e, A.mul(zb[i], zb[j])));
    for (const auto& z : cands) {
      if (scalar_vec_is_zero(z)) continue;
      const Poly m = relative_min_poly(A, e, z);
      if (m.degree() < 1) continue;
      auto fs = factor_poly(m);
      if (fs.size() < 2) continue;
      for (const auto& [g, multip] : fs) {
        const Poly gi = g.pow(multip);
        const Poly rest = m / gi;
        const auto x = poly_xgcd(gi, rest);
        const Poly h = x.v * rest;
        ScalarVec r = eval_relative(A, h, e, z);
        r = lift_idempotent(A, r, 3 + A.dim());
        if (!scalar_vec_is_zero(r)) parts.push_back(std::move(r));
      }
      if (parts.size() >= 2) {
        split = true;
        break;
      }
      parts.clear();
    }
    if (split) {
      for (auto& p : parts) work.push_back(std::move(p));
      continue;
    }
    // Terminal factor: certify it is local, i.e. its central corner modulo
    // its radical is a field. Report, never guess.
    std::vector<ScalarVec> ez{e};
    for (const auto& z : zb) ez.push_back(A.mul(e, z));
    const StructAlgebra S = subalgebra_on_span(A, ez, e);
    const auto n_rad = jacobson_radical(S, false);
    const StructAlgebra* res = &S;
    std::optional<StructAlgebra> q;
    if (!n_rad.empty()) {
      q = S.quotient_by_ideal(n_rad);
      res = &*q;
    }
    if (res->dim() > 1) {
      bool field_ok = false;
      std::vector<ScalarVec> rc;
      for (int i = 0; i < res->dim(); ++i) {
        ScalarVec ei(static_cast<std::size_t>(res->dim()), Scalar::zero(A.field()));
        ei[static_cast<std::size_t>(i)] = Scalar::one(A.field());
        rc.push_back(std::move(ei));
      }
      const std::size_t nb = rc.size();
      for (std::size_t i = 0; i < nb && !field_ok; ++i) {
        if (res->min_poly(rc[i]).degree() == res->dim() && is_irreducible(res->min_poly(rc[i])))
          field_ok = true;
      }
      for (std::size_t i = 0; i < nb && !field_ok; ++i)
        for (std::size_t j = i + 1; j < nb && !field_ok; ++j) {
          const ScalarVec s2 = scalar_add(rc[i], rc[j]);
          const Poly mp = res->min_poly(s2);
          if (mp.degree() == res->dim() && is_irreducible(mp)) field_ok = true;
        }
      require(field_ok, Err::SplitFailure,
              "central factor is neither splittable nor certified to be a field");
    }
    done.push_back(e);
  }
  std::sort(done.begin(), done.end(), [](const ScalarVec& a, const ScalarVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const int c = a[i].cmp(b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  // Consistency: orthogonal, central, summing to the unit.
  ScalarVec s(static_cast<std::size_t>(A.dim()), Scalar::zero(A.field()));
  for (const auto& e : done) {
    require(A.mul(e, e) == e, Err::Internal, "non-idempotent block element");
    for (std::size_t t = 0; t < s.size(); ++t) s[t] += e[t];
  }
  require(s == A.unit(), Err::Internal, "block idempotents do not sum to the unit");
  for (std::size_t i = 0; i < done.size(); ++i)
    for (std::size_t j = 0; j < done.size(); ++j)
      if (i != j)
        require(scalar_vec_is_zero(A.mul(done[i], done[j])), Err::Internal,
                "block idempotents are not orthogonal");
  return done;
}

std::vector<BlockInfo> semisimple_blocks(const StructAlgebra& A) {
  require(jacobson_radical(A, false).empty(), Err::NotSemisimple, "algebra has a nonzero radical");
  std::vector<BlockInfo> out;
  for (const auto& e : block_decompose(A)) {
    // Decompose e into orthogonal primitive idempotents.
    std::vector<ScalarVec> prim;
    std::vector<ScalarVec> work{e};
    while (!work.empty()) {
      ScalarVec f = work.back();
      work.pop_back();
      std::vector<ScalarVec> parts;
      if (split_once(A, f, parts)) {
        for (auto& p : parts) work.push_back(std::move(p));
      } else {
        require(corner_is_field(A, f), Err::NotSplit,
                "primitive corner is not a certified field (division-algebra block?)");
        prim.push_back(f);
      }
    }
    std::sort(prim.begin(), prim.end(), [](const ScalarVec& a, const ScalarVec& b) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        const int c = a[i].cmp(b[i]);
        if (c != 0) return c < 0;
      }
      return false;
    });
    BlockInfo info;
    info.idempotent = e;
    info.size = static_cast<int>(prim.size());
    info.corner_idem = prim.front();
    info.corner_dim = A.corner(prim.front()).dim();
    // dim of the block must be size^2 * corner_dim.
    const int bd = A.corner(e).dim();
    require(bd == info.size * info.size * info.corner_dim, Err::NotSplit,
            "block dimension inconsistent with a split/corner-field decomposition");
    out.push_back(std::move(info));
  }
  return out;
}

DimensionVector wedderburn_sizes(const StructAlgebra& A) {
  const auto blocks = semisimple_blocks(A);
  DimensionVector sizes;
  long sq = 0;
  for (const auto& b : blocks) {
    require(b.corner_dim == 1, Err::NotSplit, "block is a matrix algebra over a proper extension field");
    sizes.push_back(b.size);
    sq += static_cast<long>(b.size) * b.size;
  }
  require(sq == A.dim(), Err::Internal, "Wedderburn dimension bookkeeping failed");
  return sizes;
}

namespace {
int subspace_dim(const StructAlgebra& A, const std::vector<ScalarVec>& gens) {
  if (gens.empty()) return 0;
  return row_space(rows_of(gens, A.dim(), A.field())).rows();
}
}  // namespace

Mat<long> ext1_matrix_with_radical(const StructAlgebra& A, const std::vector<ScalarVec>& radical) {
  AlgQuotient maps;
  const StructAlgebra bar = radical.empty() ? A : A.quotient_by_ideal(radical, &maps);
  const auto blocks = semisimple_blocks(bar);
  const int t = static_cast<int>(blocks.size());

  // Lift one rank-one idempotent per block to A, pairwise orthogonally.
  std::vector<ScalarVec> f(static_cast<std::size_t>(t));
  ScalarVec used(static_cast<std::size_t>(A.dim()), Scalar::zero(A.field()));  // sum of lifted idempotents
  for (int i = 0; i < t; ++i) {
    ScalarVec lift = radical.empty() ? blocks[static_cast<std::size_t>(i)].corner_idem
                                     : scalar_mat_vec(maps.section, blocks[static_cast<std::size_t>(i)].corner_idem);
    // Push into the corner orthogonal to the previously lifted idempotents.
    ScalarVec one_minus = A.unit();
    for (std::size_t s2 = 0; s2 < one_minus.size(); ++s2) one_minus[s2] -= used[s2];
    lift = A.mul(A.mul(one_minus, lift), one_minus);
    lift = lift_idempotent(A, lift, 6 + A.dim());
    f[static_cast<std::size_t>(i)] = lift;
    for (std::size_t s2 = 0; s2 < used.size(); ++s2) used[s2] += lift[s2];
  }

  // rad P_i / rad^2 P_i measured through the corners f_j * J * f_i.
  std::vector<ScalarVec> j2;
  for (const auto& a : radical)
    for (const auto& b : radical) j2.push_back(A.mul(a, b));

  Mat<long> ext(t, t, 0);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      std::vector<ScalarVec> num, den;
      for (const auto& w : radical)
        num.push_back(A.mul(A.mul(f[static_cast<std::size_t>(j)], w), f[static_cast<std::size_t>(i)]));
      for (const auto& w : j2)
        den.push_back(A.mul(A.mul(f[static_cast<std::size_t>(j)], w), f[static_cast<std::size_t>(i)]));
      const int dnum = subspace_dim(A, num);
      const int dden = subspace_dim(A, den);
      const int dend = blocks[static_cast<std::size_t>(j)].corner_dim;
      require((dnum - dden) % dend == 0, Err::Internal, "Ext multiplicity is not End-divisible");
      ext(i, j) = (dnum - dden) / dend;
    }
  return ext;
}

Mat<long> ext1_matrix(const StructAlgebra& A) {
  return ext1_matrix_with_radical(A, jacobson_radical(A, false));
}

bool semisimple_bimodule_equal(const DimensionVector& p, const DimensionVector& q) {
  require(p.size() == q.size(), Err::LengthMismatch,
          "dimension vectors indexed by different block lists");
  return p == q;
}

std::vector<std::pair<int, int>> fiber_blocks(const StructAlgebra& A) {
  const auto rad = jacobson_radical(A, false);
  const StructAlgebra bar = rad.empty() ? A : A.quotient_by_ideal(rad);
  const auto blocks = semisimple_blocks(bar);
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    out.emplace_back(static_cast<int>(i), blocks[i].size);
  return out;
}

}  // namespace ncc
