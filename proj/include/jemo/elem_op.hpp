#pragma once

#include <utility>
#include <vector>

#include "jemo/cmatrix.hpp"

namespace jemo {

using TermList = std::vector<std::pair<CMatrix, CMatrix>>;

// x |-> sum_i a_i x b_i acting on n-by-n matrices. Also doubles as the plain
// tensor sum_i a_i (x) b_i when only the coefficient list matters.
struct ElemOp {
  int dim = 0;
  TermList terms;

  ElemOp() = default;
  ElemOp(int n, TermList t);
};

// T(x). Throws DimMismatch when x has the wrong size.
CMatrix apply(const ElemOp& op, const CMatrix& x);

// a x b + b x a.
ElemOp jordan_op(const CMatrix& a, const CMatrix& b);

// T (x) id_k: coefficients become I_k (x) a_i, acting on nk-by-nk matrices.
ElemOp amplify(const ElemOp& op, int k);

// x |-> T(x^T)^T, i.e. coefficients (b_i^T, a_i^T).
ElemOp transposed(const ElemOp& op);

// sum_i kron(a_i, b_i), the n^2-by-n^2 flattening of the coefficient tensor.
CMatrix tensor_matrix(const TermList& terms);

// Stacks vec(a_i) of the left (side 0) or right (side 1) coefficients as the
// columns of an n^2-by-k matrix-like column list.
std::vector<CVector> side_vectors(const TermList& terms, int side);

}  // namespace jemo
