#pragma once

#include <cstddef>
#include <vector>

#include "isoendo/integer.hpp"

namespace isoendo {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;  // row-major
using ZVec = std::vector<Integer>;
using ZMat = std::vector<ZVec>;

// Symmetric matrix of a bilinear form on a lattice basis.
using GramMatrix = QMat;

QMat transpose(const QMat& m);
QMat multiply(const QMat& a, const QMat& b);
QMat to_rational(const ZMat& m);
Rational determinant(QMat m);
int rank(QMat m);
// Throws RankDeficient on a singular matrix.
QMat inverse(const QMat& m);
// Solves x * m = v for a square invertible m (row vector convention).
QVec solve_row(const QMat& m, const QVec& v);

// Hermite normal form of the lattice spanned by the rows: upper triangular,
// positive pivots, entries above each pivot reduced into [0, pivot). Zero
// rows are dropped.
ZMat hnf(ZMat rows);
// Canonical basis (HNF after clearing denominators) of the Z-span of rational rows.
QMat lattice_basis(const QMat& generators);

struct LllResult {
  GramMatrix gram;  // reduced Gram matrix
  ZMat transform;   // rows: reduced basis vectors in the input coordinates
};
// Exact LLL (delta = 3/4) on a positive definite Gram matrix.
LllResult lll_reduce(const GramMatrix& gram);

// All nonzero integer vectors x with x G x^T == norm, with G positive
// definite. Throws Budget when the search box exceeds `budget` points.
std::vector<std::vector<long>> vectors_of_norm(const GramMatrix& gram, const Rational& norm, std::size_t budget);

// Whether some U in GL_n(Z) has U g1 U^T == g2. Throws Budget when the
// short-vector search exceeds `budget`.
bool is_isometric(const GramMatrix& g1, const GramMatrix& g2, std::size_t budget = 2'000'000);

}  // namespace isoendo
