#include "ncc/hnf.hpp"

#include <sstream>

namespace ncc {

PolyMat poly_identity(const Field& f, int n) {
  PolyMat m(n, n, Poly::zero(f));
  for (int i = 0; i < n; ++i) m(i, i) = Poly::of_int(f, 1);
  return m;
}

PolyMat poly_mat_mul(const PolyMat& a, const PolyMat& b) {
  require(a.cols() == b.rows(), Err::BadParameters, "poly matrix product shape mismatch");
  const Field f = a.rows() && a.cols() ? a(0, 0).field() : Field();
  PolyMat m(a.rows(), b.cols(), Poly::zero(f));
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) m(i, j) += a(i, k) * b(k, j);
    }
  return m;
}

namespace {

// Column elimination to upper triangular form. When `transform` is non-null
// it accumulates the applied unimodular column operations.
void hnf_core(PolyMat& c, int n, PolyMat* transform) {
  const int m = c.cols();
  require(c.rows() == n, Err::BadParameters, "hnf row count mismatch");
  require(m >= n, Err::RankDeficient, "fewer columns than the requested rank");

  auto col_axpy = [&](int dst, int src, const Poly& q) {
    // col_dst -= q * col_src
    for (int i = 0; i < c.rows(); ++i) c(i, dst) -= q * c(i, src);
    if (transform)
      for (int i = 0; i < transform->rows(); ++i) (*transform)(i, dst) -= q * (*transform)(i, src);
  };
  auto col_swap = [&](int a, int b) {
    if (a == b) return;
    for (int i = 0; i < c.rows(); ++i) std::swap(c(i, a), c(i, b));
    if (transform)
      for (int i = 0; i < transform->rows(); ++i) std::swap((*transform)(i, a), (*transform)(i, b));
  };
  auto col_scale = [&](int j, const Scalar& s) {
    for (int i = 0; i < c.rows(); ++i) c(i, j) = c(i, j) * s;
    if (transform)
      for (int i = 0; i < transform->rows(); ++i) (*transform)(i, j) = (*transform)(i, j) * s;
  };

  // Pivot for row i ends up in column (m - n + i); active columns are those
  // to its left, so leftover (kernel) columns collect at the far left.
  for (int i = n - 1; i >= 0; --i) {
    const int target = m - n + i;
    int active_end = target;  // inclusive
    while (true) {
      int best = -1;
      for (int j = 0; j <= active_end; ++j) {
        if (c(i, j).is_zero()) continue;
        if (best < 0 || c(i, j).degree() < c(i, best).degree()) best = j;
      }
      require(best >= 0, Err::RankDeficient, "columns span rank below requested");
      bool reduced_all = true;
      for (int j = 0; j <= active_end; ++j) {
        if (j == best || c(i, j).is_zero()) continue;
        auto [q, r] = c(i, j).divrem(c(i, best));
        col_axpy(j, best, q);
        if (!c(i, j).is_zero()) reduced_all = false;
      }
      if (reduced_all) {
        col_swap(best, target);
        break;
      }
    }
  }

  // Normalize pivots monic and reduce entries right of each pivot, bottom row
  // first so earlier reductions are not disturbed.
  const int off = m - n;
  for (int i = 0; i < n; ++i) col_scale(off + i, c(i, off + i).lc().inv());
  for (int i = n - 1; i >= 0; --i)
    for (int j = i + 1; j < n; ++j) {
      if (c(i, off + j).is_zero()) continue;
      auto [q, r] = c(i, off + j).divrem(c(i, off + i));
      if (!q.is_zero()) col_axpy(off + j, off + i, q);
    }
}

}  // namespace

PolyMat poly_hnf(const PolyMat& columns, int n) {
  PolyMat c = columns;
  hnf_core(c, n, nullptr);
  const Field f = c(0, 0).field();
  PolyMat h(n, n, Poly::zero(f));
  const int off = c.cols() - n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = c(i, off + j);
  return h;
}

PolyMat poly_kernel(const PolyMat& columns) {
  // Eliminate with a transform; columns that end identically zero give the
  // syzygies. Rank may be below the row count, so eliminate greedily.
  PolyMat c = columns;
  const int m = c.cols();
  const Field f = m && c.rows() ? c(0, 0).field() : Field();
  PolyMat u = poly_identity(f, m);

  int active_end = m - 1;
  for (int i = c.rows() - 1; i >= 0 && active_end >= 0; --i) {
    // Reduce row i across active columns to at most one nonzero entry.
    while (true) {
      int best = -1;
      for (int j = 0; j <= active_end; ++j) {
        if (c(i, j).is_zero()) continue;
        if (best < 0 || c(i, j).degree() < c(i, best).degree()) best = j;
      }
      if (best < 0) break;
      bool reduced_all = true;
      for (int j = 0; j <= active_end; ++j) {
        if (j == best || c(i, j).is_zero()) continue;
        auto [q, r] = c(i, j).divrem(c(i, best));
        for (int r2 = 0; r2 < c.rows(); ++r2) c(r2, j) -= q * c(r2, best);
        for (int r2 = 0; r2 < m; ++r2) u(r2, j) -= q * u(r2, best);
        if (!c(i, j).is_zero()) reduced_all = false;
      }
      if (reduced_all) {
        for (int r2 = 0; r2 < c.rows(); ++r2) std::swap(c(r2, best), c(r2, active_end));
        for (int r2 = 0; r2 < m; ++r2) std::swap(u(r2, best), u(r2, active_end));
        --active_end;
        break;
      }
    }
  }
  std::vector<int> zero_cols;
  for (int j = 0; j <= active_end; ++j) {
    bool z = true;
    for (int i = 0; i < c.rows() && z; ++i) z = c(i, j).is_zero();
    if (z) zero_cols.push_back(j);
  }
  PolyMat ker(m, static_cast<int>(zero_cols.size()), Poly::zero(f));
  for (std::size_t t = 0; t < zero_cols.size(); ++t)
    for (int i = 0; i < m; ++i) ker(i, static_cast<int>(t)) = u(i, zero_cols[t]);
  return ker;
}

GlobalLattice GlobalLattice::from_columns(int n, const PolyMat& cols, const Poly& den) {
  require(!den.is_zero(), Err::BadParameters, "lattice with zero denominator");
  GlobalLattice l;
  l.n_ = n;
  l.basis_ = poly_hnf(cols, n);
  l.den_ = den.monic();
  // Reduce the presentation: content of the basis vs the denominator.
  Poly content = Poly::zero(den.field());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) content = poly_gcd(content, l.basis_(i, j));
  Poly g = poly_gcd(content, l.den_);
  if (g.degree() > 0) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) l.basis_(i, j) = l.basis_(i, j) / g;
    l.den_ = l.den_ / g;
    // Re-normalize pivots (division by g preserves triangularity and monicity
    // because g is monic, but keep the canonical form honest).
    l.basis_ = poly_hnf(l.basis_, n);
  }
  return l;
}

GlobalLattice GlobalLattice::standard(const Field& f, int n) {
  return from_columns(n, poly_identity(f, n), Poly::of_int(f, 1));
}

std::vector<RatFunc> GlobalLattice::column(int j) const {
  std::vector<RatFunc> v;
  v.reserve(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) v.emplace_back(basis_(i, j), den_);
  return v;
}

std::optional<std::vector<Poly>> GlobalLattice::coords_int(const std::vector<RatFunc>& v) const {
  require(static_cast<int>(v.size()) == n_, Err::BadParameters, "vector length mismatch");
  // Solve basis * c = den * v by back substitution over K, then test
  // integrality of every coordinate.
  std::vector<RatFunc> w;
  w.reserve(v.size());
  const RatFunc d{den_};
  for (const auto& x : v) w.push_back(x * d);
  std::vector<Poly> out(static_cast<std::size_t>(n_), Poly::zero(den_.field()));
  for (int i = n_ - 1; i >= 0; --i) {
    RatFunc rhs = w[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n_; ++j)
      rhs = rhs - RatFunc(basis_(i, j)) * RatFunc(out[static_cast<std::size_t>(j)]);
    RatFunc ci = rhs / RatFunc(basis_(i, i));
    if (!ci.is_poly()) return std::nullopt;
    out[static_cast<std::size_t>(i)] = ci.num();
  }
  return out;
}

bool GlobalLattice::contains(const std::vector<RatFunc>& v) const {
  return coords_int(v).has_value();
}

GlobalLattice GlobalLattice::sum(const GlobalLattice& o) const {
  require(n_ == o.n_, Err::BadParameters, "lattice sum rank mismatch");
  const Poly d = poly_lcm(den_, o.den_);
  const Poly a = d / den_, b = d / o.den_;
  PolyMat cols(n_, 2 * n_, Poly::zero(den_.field()));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      cols(i, j) = basis_(i, j) * a;
      cols(i, n_ + j) = o.basis_(i, j) * b;
    }
  return from_columns(n_, cols, d);
}

GlobalLattice GlobalLattice::intersect(const GlobalLattice& o) const {
  require(n_ == o.n_, Err::BadParameters, "lattice intersection rank mismatch");
  const Poly d = poly_lcm(den_, o.den_);
  const Poly a = d / den_, b = d / o.den_;
  PolyMat stacked(n_, 2 * n_, Poly::zero(den_.field()));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      stacked(i, j) = basis_(i, j) * a;
      stacked(i, n_ + j) = -(o.basis_(i, j) * b);
    }
  PolyMat ker = poly_kernel(stacked);
  require(ker.cols() >= n_, Err::Internal, "intersection kernel rank too small");
  // First half of each kernel column gives coordinates over this lattice.
  PolyMat cols(n_, ker.cols(), Poly::zero(den_.field()));
  for (int j = 0; j < ker.cols(); ++j)
    for (int i = 0; i < n_; ++i) {
      Poly acc = Poly::zero(den_.field());
      for (int k = 0; k < n_; ++k) acc += basis_(i, k) * a * ker(k, j);
      cols(i, j) = acc;
    }
  return from_columns(n_, cols, d);
}

GlobalLattice GlobalLattice::scale(const RatFunc& c) const {
  require(!c.is_zero(), Err::BadParameters, "scaling a lattice by zero");
  PolyMat cols = basis_;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) cols(i, j) = cols(i, j) * c.num();
  return from_columns(n_, cols, den_ * c.den());
}

std::string GlobalLattice::to_string() const {
  std::ostringstream os;
  os << "(1/(" << den_.to_string() << ")) * cols[";
  for (int j = 0; j < n_; ++j) {
    os << (j ? "; " : "");
    for (int i = 0; i < n_; ++i) os << (i ? ", " : "(") << basis_(i, j).to_string();
    os << ")";
  }
  os << "]";
  return os.str();
}

long lattice_index_length(const GlobalLattice& outer, const GlobalLattice& inner) {
  require(outer.n() == inner.n(), Err::BadParameters, "index length rank mismatch");
  for (int j = 0; j < inner.n(); ++j)
    require(outer.contains(inner.column(j)), Err::NotContained,
            "inner lattice is not contained in the outer lattice");
  long deg_outer = 0, deg_inner = 0;
  for (int i = 0; i < outer.n(); ++i) {
    deg_outer += outer.basis()(i, i).degree();
    deg_inner += inner.basis()(i, i).degree();
  }
  const long n = outer.n();
  return (deg_inner - n * inner.den().degree()) - (deg_outer - n * outer.den().degree());
}

}  // namespace ncc
