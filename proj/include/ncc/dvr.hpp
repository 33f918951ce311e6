#pragma once

#include <functional>
#include <optional>

#include "ncc/laurent.hpp"
#include "ncc/linalg.hpp"
#include "ncc/matrix.hpp"

namespace ncc {

using LaurentMat = Mat<Laurent>;
using LaurentVec = std::vector<Laurent>;

// Lattice over the completed local ring k[[g]] inside K^rows, held by its
// canonical echelon basis: columns ordered by strictly increasing pivot row,
// pivot entries exactly g^{e_i}, entries at a pivot row vanish in later
// columns and are reduced mod g^{e_i} in earlier ones.
class DvrLattice {
 public:
  DvrLattice() = default;

  // Canonicalize generating columns. required_rank < 0 accepts any rank;
  // otherwise a smaller span raises RankDeficient. Pivot valuations at or
  // beyond the certified precision raise PrecisionExhausted.
  static DvrLattice from_columns(const Poly& g, const LaurentMat& cols, int required_rank = -1);

  // Unit lattice k[[g]]^rows at the given precision.
  static DvrLattice unit(const Poly& g, int rows, int prec);

  const Poly& modulus() const { return g_; }
  const Field& field() const { return g_.field(); }
  int rows() const { return rows_; }
  int rank() const { return basis_.cols(); }
  int prec() const { return prec_; }
  const LaurentMat& basis() const { return basis_; }
  const std::vector<int>& pivot_rows() const { return pivot_rows_; }
  const std::vector<int>& pivot_vals() const { return pivot_vals_; }

  // Coordinates of v over the basis when v lies in the lattice, certified at
  // the stated precision. false = certified non-member.
  struct Membership {
    bool member;
    LaurentVec coords;  // meaningful when member
  };
  Membership membership(const LaurentVec& v) const;
  bool contains(const LaurentVec& v) const { return membership(v).member; }
  bool contains(const DvrLattice& o) const;

  DvrLattice sum(const DvrLattice& o) const;
  DvrLattice scaled(int e) const;  // multiply by g^e
  DvrLattice truncated(int new_prec) const;

  // Lattice equality at the shared stated precision (pivot data plus
  // digitwise basis comparison); differing precisions are a usage error.
  bool equals(const DvrLattice& o) const;
  // Equality of the truncations at precision P.
  bool equals_at(const DvrLattice& o, int P) const;

  std::string to_string() const;

 private:
  Poly g_;
  int rows_{0};
  int prec_{0};
  LaurentMat basis_;
  std::vector<int> pivot_rows_, pivot_vals_;
};

// Sublattice of (1/g^a) * k[[g]]^rows cut out by k-linear digit conditions:
// for each ambient basis vector g^j * e_r (j in [-a, width-a)) the functor
// receives its image digits and fills one column of the condition matrix.
// Returns the kernel sublattice plus g^{width-a} * unit; used for stabilizer
// and endomorphism lattices.
DvrLattice dvr_condition_sublattice(
    const Poly& g, int rows, int a, int width, int prec,
    const std::function<ScalarVec(int r, int j)>& condition_column);

}  // namespace ncc
