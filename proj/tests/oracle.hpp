#pragma once

// Test-only independent oracles. These deliberately avoid the library's
// canonical-form elimination paths: membership is decided by bounded-degree
// k-linear solves and quotient lengths by graded dimension counting.

#include "ncc/dvr.hpp"
#include "ncc/hnf.hpp"
#include "ncc/linalg.hpp"

namespace ncc::oracle {

// Does v lie in the k[x]-column span of cols? Solves for polynomial
// coordinates of degree <= bound coefficient-by-coefficient over k.
inline bool in_poly_span(const PolyMat& cols, const std::vector<Poly>& v, int bound) {
  const Field k = v.at(0).field();
  const int n = cols.rows(), m = cols.cols();
  int maxdeg = 0;
  for (const auto& p : v) maxdeg = std::max(maxdeg, p.degree());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) maxdeg = std::max(maxdeg, cols(i, j).degree());
  const int rows_deg = maxdeg + bound + 1;
  ScalarMat a(n * rows_deg, m * (bound + 1), Scalar::zero(k));
  ScalarVec b(static_cast<std::size_t>(n) * rows_deg, Scalar::zero(k));
  for (int i = 0; i < n; ++i)
    for (int d = 0; d < rows_deg; ++d) b[static_cast<std::size_t>(i * rows_deg + d)] = v[static_cast<std::size_t>(i)].coeff(d);
  for (int j = 0; j < m; ++j)
    for (int s = 0; s <= bound; ++s)
      for (int i = 0; i < n; ++i) {
        const Poly shifted = cols(i, j).shift(s);
        for (int d = 0; d < rows_deg; ++d) a(i * rows_deg + d, j * (bound + 1) + s) = shifted.coeff(d);
      }
  return solve(a, b).has_value();
}

// Coordinate degree bound from Cramer's rule: deg(coord) <= deg(v) + n*max.
inline int cramer_bound(const PolyMat& cols, const std::vector<Poly>& v) {
  int maxdeg = 1;
  for (int i = 0; i < cols.rows(); ++i)
    for (int j = 0; j < cols.cols(); ++j) maxdeg = std::max(maxdeg, cols(i, j).degree());
  int vdeg = 0;
  for (const auto& p : v) vdeg = std::max(vdeg, p.degree());
  return vdeg + cols.rows() * maxdeg + 2;
}

// Mutual containment of integral column spans.
inline bool same_poly_span(const PolyMat& a, const PolyMat& b) {
  for (int j = 0; j < b.cols(); ++j) {
    std::vector<Poly> v = b.col(j);
    if (!in_poly_span(a, v, cramer_bound(a, v))) return false;
  }
  for (int j = 0; j < a.cols(); ++j) {
    std::vector<Poly> v = a.col(j);
    if (!in_poly_span(b, v, cramer_bound(b, v))) return false;
  }
  return true;
}

// dim_k of { v in span(cols) : deg of every entry <= D } by brute k-linear
// span of all column shifts.
inline int graded_dim(const PolyMat& cols, int D) {
  const Field k = cols(0, 0).field();
  const int n = cols.rows();
  std::vector<ScalarVec> vecs;
  for (int j = 0; j < cols.cols(); ++j) {
    int cdeg = 0;
    for (int i = 0; i < n; ++i) cdeg = std::max(cdeg, cols(i, j).degree());
    for (int s = 0; s + cdeg <= D; ++s) {
      ScalarVec v(static_cast<std::size_t>(n) * (D + 1), Scalar::zero(k));
      for (int i = 0; i < n; ++i) {
        const Poly p = cols(i, j).shift(s);
        for (int d = 0; d <= D; ++d) v[static_cast<std::size_t>(i * (D + 1) + d)] = p.coeff(d);
      }
      vecs.push_back(std::move(v));
    }
  }
  if (vecs.empty()) return 0;
  ScalarMat m(static_cast<int>(vecs.size()), n * (D + 1), Scalar::zero(k));
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (int j = 0; j < n * (D + 1); ++j) m(static_cast<int>(i), j) = vecs[i][static_cast<std::size_t>(j)];
  return rank(m);
}

// Quotient length dim_k(outer/inner) for integral lattices via stabilized
// graded dimension differences.
inline int quotient_length(const PolyMat& outer, const PolyMat& inner, int D) {
  return graded_dim(outer, D) - graded_dim(inner, D);
}

// DVR membership by bounded digit-window linear solve: v in span_T(cols)
// with coordinate digits in [0, width).
inline bool in_dvr_span(const LaurentMat& cols, const LaurentVec& v, int lo, int hi, int width) {
  const Field k = v.at(0).field();
  const Poly g = v.at(0).modulus();
  const int d = g.degree();
  const int n = cols.rows(), m = cols.cols();
  const int rows_window = hi - lo;
  ScalarMat a(n * rows_window * d, m * width * d, Scalar::zero(k));
  ScalarVec b(static_cast<std::size_t>(n) * rows_window * d, Scalar::zero(k));
  auto put_digits = [&](const Laurent& x, int row_base, ScalarVec* vb, ScalarMat* va, int col) {
    for (int e = std::max(lo, x.floor()); e < std::min(hi, x.prec()); ++e) {
      const Poly dig = x.digit(e);
      for (int s = 0; s < d; ++s) {
        const Scalar c = dig.coeff(s);
        if (vb) (*vb)[static_cast<std::size_t>(row_base + (e - lo) * d + s)] = c;
        if (va) (*va)(row_base + (e - lo) * d + s, col) = c;
      }
    }
  };
  for (int i = 0; i < n; ++i) put_digits(v[static_cast<std::size_t>(i)], i * rows_window * d, &b, nullptr, 0);
  for (int j = 0; j < m; ++j)
    for (int w = 0; w < width; ++w)
      for (int s = 0; s < d; ++s) {
        const int col = (j * width + w) * d + s;
        const Poly xs = Poly::monomial(k, s, Scalar::one(k));
        for (int i = 0; i < n; ++i) {
          const Laurent term = cols(i, j) * Laurent(g, w, hi + 1, xs);
          put_digits(term, i * rows_window * d, nullptr, &a, col);
        }
      }
  return solve(a, b).has_value();
}

}  // namespace ncc::oracle
