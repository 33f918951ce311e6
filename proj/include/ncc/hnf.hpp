#pragma once

#include <optional>

#include "ncc/matrix.hpp"
#include "ncc/poly.hpp"

namespace ncc {

using PolyMat = Mat<Poly>;

PolyMat poly_identity(const Field& f, int n);
PolyMat poly_mat_mul(const PolyMat& a, const PolyMat& b);

// Canonical column Hermite normal form of a full-rank k[x]-lattice given by
// generating columns: upper triangular, monic diagonal pivots, entries right
// of a pivot of degree strictly below the pivot's. Throws RankDeficient when
// the columns span rank < n.
PolyMat poly_hnf(const PolyMat& columns, int n);

// Columns spanning the k[x]-syzygy module {u : columns * u = 0}.
PolyMat poly_kernel(const PolyMat& columns);

// Full-rank k[x]-lattice in K^n presented as (1/den) * column span of a
// canonical HNF basis, with gcd(den, content(basis)) = 1.
class GlobalLattice {
 public:
  GlobalLattice() = default;
  static GlobalLattice from_columns(int n, const PolyMat& cols, const Poly& den);
  static GlobalLattice standard(const Field& f, int n);

  int n() const { return n_; }
  const Field& field() const { return den_.field(); }
  const PolyMat& basis() const { return basis_; }
  const Poly& den() const { return den_; }

  // Column j of the basis as a vector of rational functions.
  std::vector<RatFunc> column(int j) const;

  bool contains(const std::vector<RatFunc>& v) const;
  // Coordinates over the basis when contained.
  std::optional<std::vector<Poly>> coords_int(const std::vector<RatFunc>& v) const;

  GlobalLattice sum(const GlobalLattice& o) const;
  GlobalLattice intersect(const GlobalLattice& o) const;
  GlobalLattice scale(const RatFunc& c) const;

  bool operator==(const GlobalLattice& o) const {
    return n_ == o.n_ && den_ == o.den_ && basis_ == o.basis_;
  }
  bool operator!=(const GlobalLattice& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  int n_{0};
  PolyMat basis_;
  Poly den_;
};

// dim_k(outer/inner); throws NotContained when inner is not inside outer.
long lattice_index_length(const GlobalLattice& outer, const GlobalLattice& inner);

}  // namespace ncc
