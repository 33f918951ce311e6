#include "ncc/dvr.hpp"

#include <algorithm>
#include <sstream>

namespace ncc {

DvrLattice DvrLattice::unit(const Poly& g, int rows, int prec) {
  LaurentMat m(rows, rows, Laurent::zero(g, prec));
  for (int i = 0; i < rows; ++i) m(i, i) = Laurent::one(g, prec);
  return from_columns(g, m, rows);
}

DvrLattice DvrLattice::from_columns(const Poly& g, const LaurentMat& cols, int required_rank) {
  DvrLattice L;
  L.g_ = g;
  L.rows_ = cols.rows();
  LaurentMat c = cols;
  const int m = c.cols();

  std::vector<int> pivot_cols;  // column index in c per pivot, in row order
  std::vector<bool> taken(static_cast<std::size_t>(m), false);
  std::vector<int> pivot_rows, pivot_vals;

  for (int r = 0; r < c.rows(); ++r) {
    int best = -1, best_val = 0;
    for (int j = 0; j < m; ++j) {
      if (taken[static_cast<std::size_t>(j)] || c(r, j).is_zero()) continue;
      const int v = c(r, j).valuation();
      if (best < 0 || v < best_val) {
        best = j;
        best_val = v;
      }
    }
    if (best < 0) continue;
    // Normalize the pivot entry to exactly g^e by a unit column scaling.
    const Laurent unit_inv = c(r, best).shifted(-best_val).inv();
    for (int i = 0; i < c.rows(); ++i) c(i, best) = c(i, best) * unit_inv;
    c(r, best) = Laurent::uniformizer_pow(g, best_val, c(r, best).prec());
    // Eliminate the pivot row from every other untaken column (the pivot has
    // minimal valuation, so the multipliers are integral and the row zeroes
    // out exactly).
    for (int j = 0; j < m; ++j) {
      if (j == best || taken[static_cast<std::size_t>(j)] || c(r, j).is_zero()) continue;
      const Laurent q = c(r, j).shifted(-best_val);
      for (int i = 0; i < c.rows(); ++i) c(i, j) = c(i, j) - q * c(i, best);
      c(r, j) = Laurent::zero(g, c(r, j).prec());
    }
    taken[static_cast<std::size_t>(best)] = true;
    pivot_cols.push_back(best);
    pivot_rows.push_back(r);
    pivot_vals.push_back(best_val);
  }

  const int rank = static_cast<int>(pivot_cols.size());
  if (required_rank >= 0)
    require(rank >= required_rank, Err::RankDeficient,
            "columns span rank " + std::to_string(rank) + " below required " +
                std::to_string(required_rank));

  LaurentMat b(c.rows(), rank, Laurent::zero(g, 1));
  for (int t = 0; t < rank; ++t)
    for (int i = 0; i < c.rows(); ++i) b(i, t) = c(i, pivot_cols[static_cast<std::size_t>(t)]);

  // Reduce entries below earlier pivots modulo later pivot columns.
  for (int t = 0; t < rank; ++t) {
    const int r = pivot_rows[static_cast<std::size_t>(t)];
    const int e = pivot_vals[static_cast<std::size_t>(t)];
    for (int j = 0; j < t; ++j) {
      const Laurent& entry = b(r, j);
      if (entry.is_zero()) continue;
      const Laurent q = entry.high_part(e).shifted(-e);
      if (q.is_zero()) continue;
      for (int i = 0; i < b.rows(); ++i) b(i, j) = b(i, j) - q * b(i, t);
    }
  }

  int pout = std::numeric_limits<int>::max();
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < rank; ++j) pout = std::min(pout, b(i, j).prec());
  if (rank == 0) pout = 1;
  for (int e : pivot_vals)
    require(e < pout, Err::PrecisionExhausted,
            "pivot valuation " + std::to_string(e) + " cannot be certified at precision " +
                std::to_string(pout));
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < rank; ++j) b(i, j) = b(i, j).truncated(pout);

  L.prec_ = pout;
  L.basis_ = b;
  L.pivot_rows_ = std::move(pivot_rows);
  L.pivot_vals_ = std::move(pivot_vals);
  return L;
}

DvrLattice::Membership DvrLattice::membership(const LaurentVec& v) const {
  require(static_cast<int>(v.size()) == rows_, Err::BadParameters, "membership vector length mismatch");
  LaurentVec w = v;
  LaurentVec coords;
  coords.reserve(pivot_rows_.size());
  for (std::size_t t = 0; t < pivot_rows_.size(); ++t) {
    const int r = pivot_rows_[t];
    const int e = pivot_vals_[t];
    const Laurent& res = w[static_cast<std::size_t>(r)];
    Laurent ci = res.shifted(-e);
    if (ci.is_zero()) {
      require(ci.prec() > 0, Err::PrecisionExhausted,
              "membership coordinate indistinguishable from zero at working precision");
      coords.push_back(Laurent::zero(g_, ci.prec()));
      continue;
    }
    if (ci.valuation() < 0) return {false, {}};
    coords.push_back(ci);
    for (int i = 0; i < rows_; ++i)
      w[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] - ci * basis_(i, static_cast<int>(t));
  }
  for (int i = 0; i < rows_; ++i)
    if (!w[static_cast<std::size_t>(i)].is_zero()) return {false, {}};
  return {true, coords};
}

bool DvrLattice::contains(const DvrLattice& o) const {
  require(rows_ == o.rows_, Err::BadParameters, "containment shape mismatch");
  for (int j = 0; j < o.rank(); ++j) {
    if (!contains(o.basis_.col(j))) return false;
  }
  return true;
}

DvrLattice DvrLattice::sum(const DvrLattice& o) const {
  require(rows_ == o.rows_ && g_ == o.g_, Err::BadParameters, "lattice sum shape mismatch");
  return from_columns(g_, Mat<Laurent>::hcat(basis_, o.basis_), -1);
}

DvrLattice DvrLattice::scaled(int e) const {
  LaurentMat b = basis_;
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) b(i, j) = b(i, j).shifted(e);
  return from_columns(g_, b, rank());
}

DvrLattice DvrLattice::truncated(int new_prec) const {
  LaurentMat b = basis_;
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) b(i, j) = b(i, j).truncated(new_prec);
  return from_columns(g_, b, rank());
}

bool DvrLattice::equals(const DvrLattice& o) const { return equals_at(o, std::min(prec_, o.prec_)); }

bool DvrLattice::equals_at(const DvrLattice& o, int P) const {
  if (rows_ != o.rows_ || rank() != o.rank() || !(g_ == o.g_)) return false;
  if (pivot_rows_ != o.pivot_rows_ || pivot_vals_ != o.pivot_vals_) return false;
  require(P <= prec_ && P <= o.prec_, Err::PrecisionExhausted,
          "lattice comparison beyond certified precision");
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < rank(); ++j)
      if (!basis_(i, j).truncated(P).same_value(o.basis_(i, j).truncated(P))) return false;
  return true;
}

std::string DvrLattice::to_string() const {
  std::ostringstream os;
  os << "DvrLattice rank " << rank() << " prec " << prec_ << "\n";
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < rank(); ++j) os << basis_(i, j).to_string() << (j + 1 < rank() ? "  " : "");
    os << "\n";
  }
  return os.str();
}

DvrLattice dvr_condition_sublattice(
    const Poly& g, int rows, int a, int width, int prec,
    const std::function<ScalarVec(int r, int j)>& condition_column) {
  require(width >= 1, Err::BadParameters, "empty quotient window");
  const Field& k = g.field();
  // Ambient quotient basis: g^j * e_r for j in [-a, width - a); residue
  // digits of degree-d points are handled by the caller inside the condition
  // columns (conditions are k-linear on each digit coefficient).
  std::vector<std::pair<int, int>> elems;  // (row, exponent)
  for (int r = 0; r < rows; ++r)
    for (int j = -a; j < width - a; ++j) elems.emplace_back(r, j);

  ScalarVec first = condition_column(elems[0].first, elems[0].second);
  const int ncond = static_cast<int>(first.size());
  ScalarMat cond(ncond, static_cast<int>(elems.size()), Scalar::zero(k));
  for (std::size_t c = 0; c < elems.size(); ++c) {
    ScalarVec col = c == 0 ? first : condition_column(elems[c].first, elems[c].second);
    require(static_cast<int>(col.size()) == ncond, Err::Internal, "ragged condition matrix");
    for (int i = 0; i < ncond; ++i) cond(i, static_cast<int>(c)) = col[static_cast<std::size_t>(i)];
  }
  ScalarMat ker = ncond == 0 ? scalar_identity(k, static_cast<int>(elems.size())) : kernel_basis(cond);

  LaurentMat cols(rows, ker.cols() + rows, Laurent::zero(g, prec));
  for (int j = 0; j < ker.cols(); ++j)
    for (std::size_t c = 0; c < elems.size(); ++c) {
      const Scalar& s = ker(static_cast<int>(c), j);
      if (s.is_zero()) continue;
      const auto& [r, e] = elems[c];
      cols(r, j) = cols(r, j) + Laurent::uniformizer_pow(g, e, prec) * s;
    }
  for (int r = 0; r < rows; ++r) cols(r, ker.cols() + r) = Laurent::uniformizer_pow(g, width - a, prec);
  return DvrLattice::from_columns(g, cols, rows);
}

}  // namespace ncc
