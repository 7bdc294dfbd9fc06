#pragma once

#include <vector>

#include "jemo/cmatrix.hpp"

namespace jemo {

struct EigResult {
  std::vector<double> values;  // descending
  CMatrix vectors;             // columns; m = vectors * diag(values) * vectors^*
};

struct SvdResult {
  CMatrix u;
  std::vector<double> s;  // descending, nonnegative
  CMatrix v;              // m = u * diag(s) * v^*
};

struct TakagiFactors {
  CMatrix u;                  // unitary
  std::vector<double> delta;  // descending, nonnegative; m = u diag(delta) u^T
};

// Eigenvalues of a Hermitian matrix, descending. Throws NotHermitian when the
// input fails the symmetry residual check.
std::vector<double> hermitian_eigs(const CMatrix& m);
EigResult hermitian_eig_full(const CMatrix& m);

SvdResult svd(const CMatrix& m);

// Autonne-Takagi factorization of a complex symmetric matrix. Throws
// NotSymmetric on asymmetric input, ConvergenceFailure if the residual check
// fails after phase-retry (not observed in practice).
TakagiFactors takagi(const CMatrix& m);

// Largest singular value. 0 iff m = 0.
double op_norm(const CMatrix& m);
// Sum of singular values.
double trace_norm(const CMatrix& m);

// Eigenvalues of the Hermitian 2x2 [[a11, a12], [conj(a12), a22]] without
// cancellation; used by the closed-form hot paths.
struct Herm2Eigs {
  double lo, hi;
};
Herm2Eigs herm2_eigs(double a11, double a22, cplx a12);

// max(|eig|) of a Hermitian matrix; equals op_norm but cheaper for 2x2.
double hermitian_op_norm(const CMatrix& m);

}  // namespace jemo
