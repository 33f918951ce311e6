#pragma once

#include <vector>

#include "ncc/linalg.hpp"
#include "ncc/poly.hpp"

namespace ncc {

using DimensionVector = std::vector<int>;

class StructAlgebra;

// Algebra on a quotient by a two-sided ideal; `proj` maps ambient coordinate
// vectors to quotient coordinates, `section` is a right inverse.
struct AlgQuotient {
  ScalarMat proj;     // (quot dim) x dim
  ScalarMat section;  // dim x (quot dim)
};

// Finite-dimensional associative unital algebra over Q or F_p, presented by
// structure constants: b_i * b_j = sum_l mult[i][j][l] b_l.
class StructAlgebra {
 public:
  StructAlgebra() = default;
  StructAlgebra(const Field& k, int dim, std::vector<Scalar> mult, ScalarVec unit);

  const Field& field() const { return k_; }
  int dim() const { return d_; }
  const ScalarVec& unit() const { return unit_; }
  const Scalar& c(int i, int j, int l) const {
    return mult_[(static_cast<std::size_t>(i) * d_ + j) * d_ + l];
  }

  ScalarVec mul(const ScalarVec& u, const ScalarVec& v) const;
  ScalarMat left_mult(const ScalarVec& u) const;
  ScalarMat right_mult(const ScalarVec& u) const;
  ScalarVec power(const ScalarVec& u, int e) const;

  // Unit axiom always; associativity on all basis triples when deep is set
  // (cubic in the dimension, meant for external inputs).
  void verify(bool deep) const;

  // Algebra on the quotient by a two-sided ideal; maps returned through
  // `maps` when non-null.
  StructAlgebra quotient_by_ideal(const std::vector<ScalarVec>& ideal, AlgQuotient* maps = nullptr) const;

  // Corner algebra e*A*e for an idempotent e; `embed` (dim x corner-dim) maps
  // corner coordinates to ambient ones when non-null.
  StructAlgebra corner(const ScalarVec& e, ScalarMat* embed = nullptr) const;

  // Monic minimal polynomial of an element.
  Poly min_poly(const ScalarVec& u) const;

 private:
  Field k_;
  int d_{0};
  std::vector<Scalar> mult_;
  ScalarVec unit_;
};

// k-basis of the center, echelonized. (Lemma-level contract: the center of
// the algebra equals the endomorphisms of the identity bimodule.)
std::vector<ScalarVec> center_basis(const StructAlgebra& A);

// Basis of the Jacobson radical. Characteristic zero uses the kernel of the
// regular trace form; characteristic p uses the characteristic-polynomial
// coefficient chain over the prime field. With `verify_result` the routine
// re-checks that the ideal is two-sided and nilpotent and that the quotient
// has zero radical.
std::vector<ScalarVec> jacobson_radical(const StructAlgebra& A, bool verify_result = true);

// Complete list of primitive idempotents of the center, ordered
// lexicographically by coordinate vector. SplitFailure when an etale center
// factor can neither be split further nor certified to be a field.
std::vector<ScalarVec> block_decompose(const StructAlgebra& A);

struct BlockInfo {
  ScalarVec idempotent;   // central primitive idempotent
  int size;               // number of orthogonal primitive idempotents (matrix size over the corner field)
  int corner_dim;         // k-dimension of a primitive corner (1 iff split over k as Mat_size(k))
  ScalarVec corner_idem;  // one primitive (rank-one) idempotent of the block
};

// Per-block fine structure of a semisimple algebra (radical must vanish).
std::vector<BlockInfo> semisimple_blocks(const StructAlgebra& A);

// Matrix sizes (m_1, ..., m_t) of a split semisimple algebra; NotSemisimple /
// NotSplit otherwise. sum m_i^2 = dim is verified.
DimensionVector wedderburn_sizes(const StructAlgebra& A);

// ext1(i, j) = multiplicity of the simple S_j in rad P_i / rad^2 P_i, i.e.
// dim_k Ext^1(S_i, S_j) / dim_k End(S_j); rows are extension sources. The
// radical may be supplied when already known.
Mat<long> ext1_matrix(const StructAlgebra& A);
Mat<long> ext1_matrix_with_radical(const StructAlgebra& A, const std::vector<ScalarVec>& radical);

bool semisimple_bimodule_equal(const DimensionVector& p, const DimensionVector& q);

// Blocks of (A/rad) with sizes, for the fiber of Spec over a point: the
// maximal ideals of a localization in bijection with these blocks.
std::vector<std::pair<int, int>> fiber_blocks(const StructAlgebra& A);

}  // namespace ncc
