#include "ncc/linalg.hpp"

namespace ncc {

ScalarMat scalar_identity(const Field& f, int n) {
  ScalarMat m(n, n, Scalar::zero(f));
  for (int i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

ScalarMat scalar_mul(const ScalarMat& a, const ScalarMat& b) {
  require(a.cols() == b.rows(), Err::BadParameters, "matrix product shape mismatch");
  require(a.rows() > 0 && b.cols() > 0, Err::BadParameters, "empty matrix product");
  const Field f = a(0, 0).field();
  ScalarMat m(a.rows(), b.cols(), Scalar::zero(f));
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

ScalarVec scalar_mat_vec(const ScalarMat& a, const ScalarVec& v) {
  require(a.cols() == static_cast<int>(v.size()), Err::BadParameters, "mat-vec shape mismatch");
  const Field f = v.empty() ? Field() : v[0].field();
  ScalarVec r(static_cast<std::size_t>(a.rows()), Scalar::zero(f));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) r[static_cast<std::size_t>(i)] += a(i, j) * v[static_cast<std::size_t>(j)];
  return r;
}

ScalarVec scalar_add(const ScalarVec& a, const ScalarVec& b) {
  ScalarVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

ScalarVec scalar_scale(const ScalarVec& a, const Scalar& c) {
  ScalarVec r = a;
  for (auto& x : r) x *= c;
  return r;
}

bool scalar_vec_is_zero(const ScalarVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<int> rref(ScalarMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Scalar inv = m(row, col).inv();
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Scalar c = m(i, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) -= c * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(ScalarMat m) { return static_cast<int>(rref(m).size()); }

ScalarMat kernel_basis(const ScalarMat& m) {
  require(m.cols() > 0, Err::BadParameters, "kernel of empty matrix");
  ScalarMat a = m;
  const std::vector<int> piv = rref(a);
  const Field f = m(0, 0).field();
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : piv) is_pivot[static_cast<std::size_t>(c)] = true;
  const int k = m.cols() - static_cast<int>(piv.size());
  ScalarMat ker(m.cols(), k, Scalar::zero(f));
  int kc = 0;
  for (int freec = 0; freec < m.cols(); ++freec) {
    if (is_pivot[static_cast<std::size_t>(freec)]) continue;
    ker(freec, kc) = Scalar::one(f);
    for (std::size_t r = 0; r < piv.size(); ++r)
      ker(piv[r], kc) = -a(static_cast<int>(r), freec);
    ++kc;
  }
  return ker;
}

std::optional<ScalarVec> solve(const ScalarMat& a, const ScalarVec& b) {
  require(a.rows() == static_cast<int>(b.size()), Err::BadParameters, "solve shape mismatch");
  const Field f = b.empty() ? Field() : b[0].field();
  ScalarMat aug(a.rows(), a.cols() + 1, Scalar::zero(f));
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[static_cast<std::size_t>(i)];
  }
  const std::vector<int> piv = rref(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  ScalarVec x(static_cast<std::size_t>(a.cols()), Scalar::zero(f));
  for (std::size_t r = 0; r < piv.size(); ++r) x[static_cast<std::size_t>(piv[r])] = aug(static_cast<int>(r), a.cols());
  return x;
}

std::optional<ScalarMat> inverse(const ScalarMat& a) {
  require(a.rows() == a.cols(), Err::BadParameters, "inverse of non-square matrix");
  const int n = a.rows();
  if (n == 0) return a;
  const Field f = a(0, 0).field();
  ScalarMat aug = Mat<Scalar>::hcat(a, scalar_identity(f, n));
  const std::vector<int> piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || piv[static_cast<std::size_t>(n - 1)] != n - 1) return std::nullopt;
  ScalarMat inv(n, n, Scalar::zero(f));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Scalar det(ScalarMat a) {
  require(a.rows() == a.cols(), Err::BadParameters, "determinant of non-square matrix");
  const int n = a.rows();
  require(n > 0, Err::BadParameters, "determinant of empty matrix");
  const Field f = a(0, 0).field();
  Scalar d = Scalar::one(f);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (!a(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Scalar::zero(f);
    if (p != col) {
      for (int j = 0; j < n; ++j) std::swap(a(p, j), a(col, j));
      d = -d;
    }
    d *= a(col, col);
    const Scalar inv = a(col, col).inv();
    for (int i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      const Scalar c = a(i, col) * inv;
      for (int j = col; j < n; ++j) a(i, j) -= c * a(col, j);
    }
  }
  return d;
}

ScalarMat row_space(ScalarMat m) {
  const std::vector<int> piv = rref(m);
  const int r = static_cast<int>(piv.size());
  ScalarMat out(r, m.cols(), Scalar::zero(m.cols() > 0 && r > 0 ? m(0, 0).field() : Field()));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

ScalarVec char_poly(ScalarMat a) {
  require(a.rows() == a.cols() && a.rows() > 0, Err::BadParameters, "char_poly needs a square matrix");
  const int n = a.rows();
  const Field f = a(0, 0).field();
  // Reduce to Hessenberg form by similarity.
  for (int c = 0; c < n - 2; ++c) {
    int p = -1;
    for (int i = c + 1; i < n; ++i)
      if (!a(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != c + 1) {
      for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c + 1, j));
      for (int i = 0; i < n; ++i) std::swap(a(i, p), a(i, c + 1));
    }
    const Scalar inv = a(c + 1, c).inv();
    for (int i = c + 2; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Scalar m = a(i, c) * inv;
      for (int j = 0; j < n; ++j) a(i, j) -= m * a(c + 1, j);
      for (int r = 0; r < n; ++r) a(r, c + 1) += m * a(r, i);
    }
  }
  // Recurrence on leading principal minors of (xI - H).
  std::vector<ScalarVec> p(static_cast<std::size_t>(n) + 1);
  p[0] = {Scalar::one(f)};
  for (int k = 1; k <= n; ++k) {
    // p_k = (x - H[k-1][k-1]) * p_{k-1} - sum_{i=1..k-1} H[k-1-i][k-1] * (prod subdiag) * p_{k-1-i}
    ScalarVec cur(static_cast<std::size_t>(k) + 1, Scalar::zero(f));
    const ScalarVec& prev = p[static_cast<std::size_t>(k - 1)];
    for (std::size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] += prev[i];
      cur[i] -= a(k - 1, k - 1) * prev[i];
    }
    Scalar sub = Scalar::one(f);
    for (int i = 1; i < k; ++i) {
      sub *= a(k - i, k - i - 1);
      if (sub.is_zero()) break;
      const Scalar coef = sub * a(k - 1 - i, k - 1);
      if (coef.is_zero()) continue;
      const ScalarVec& q = p[static_cast<std::size_t>(k - 1 - i)];
      for (std::size_t j = 0; j < q.size(); ++j) cur[j] -= coef * q[j];
    }
    p[static_cast<std::size_t>(k)] = std::move(cur);
  }
  return p[static_cast<std::size_t>(n)];
}

Scalar trace(const ScalarMat& a) {
  require(a.rows() == a.cols() && a.rows() > 0, Err::BadParameters, "trace of non-square matrix");
  Scalar t = Scalar::zero(a(0, 0).field());
  for (int i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

bool in_row_space(const ScalarMat& rref_basis, const ScalarVec& v) {
  ScalarVec w = v;
  for (int r = 0; r < rref_basis.rows(); ++r) {
    int lead = -1;
    for (int j = 0; j < rref_basis.cols(); ++j)
      if (!rref_basis(r, j).is_zero()) {
        lead = j;
        break;
      }
    if (lead < 0) continue;
    if (!w[static_cast<std::size_t>(lead)].is_zero()) {
      const Scalar c = w[static_cast<std::size_t>(lead)];
      for (int j = 0; j < rref_basis.cols(); ++j) w[static_cast<std::size_t>(j)] -= c * rref_basis(r, j);
    }
  }
  return scalar_vec_is_zero(w);
}

}  // namespace ncc
