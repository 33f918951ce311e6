#pragma once

#include <optional>
#include <vector>

#include "ncc/matrix.hpp"
#include "ncc/field.hpp"

namespace ncc {

using ScalarMat = Mat<Scalar>;
using ScalarVec = std::vector<Scalar>;

ScalarMat scalar_identity(const Field& f, int n);
ScalarMat scalar_mul(const ScalarMat& a, const ScalarMat& b);
ScalarVec scalar_mat_vec(const ScalarMat& a, const ScalarVec& v);
ScalarVec scalar_add(const ScalarVec& a, const ScalarVec& b);
ScalarVec scalar_scale(const ScalarVec& a, const Scalar& c);
bool scalar_vec_is_zero(const ScalarVec& v);

// In-place reduced row echelon form with deterministic (first nonzero)
// pivoting; returns the pivot columns in order.
std::vector<int> rref(ScalarMat& m);

int rank(ScalarMat m);

// Echelonized basis of the right kernel (columns of the result).
ScalarMat kernel_basis(const ScalarMat& m);

// Solve a*x = b; nullopt when inconsistent.
std::optional<ScalarVec> solve(const ScalarMat& a, const ScalarVec& b);

std::optional<ScalarMat> inverse(const ScalarMat& a);

Scalar det(ScalarMat a);

// Row space of m as a matrix in reduced row echelon form with zero rows
// dropped; the canonical representation of a subspace.
ScalarMat row_space(ScalarMat m);

// Is the row span of v contained in the row span of basis (basis in rref)?
bool in_row_space(const ScalarMat& rref_basis, const ScalarVec& v);

// Characteristic polynomial of a square matrix (monic, degree n) computed
// via Hessenberg reduction; returned low degree first.
ScalarVec char_poly(ScalarMat a);

Scalar trace(const ScalarMat& a);

}  // namespace ncc
