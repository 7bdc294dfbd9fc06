#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "jemo/errors.hpp"

namespace jemo {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

// Dense square complex matrix, row-major, value semantics. Everything in the
// library works with small n (2 and 4 in the hot paths), so no attempt at
// blocking or expression templates.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(int n);
  CMatrix(int n, std::initializer_list<cplx> entries);

  static CMatrix zero(int n) { return CMatrix(n); }
  static CMatrix identity(int n);
  static CMatrix diag(const CVector& d);

  int dim() const { return n_; }
  bool empty() const { return n_ == 0; }

  cplx& operator()(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const cplx& operator()(int i, int j) const {
    return e_[static_cast<size_t>(i) * n_ + j];
  }

  const std::vector<cplx>& entries() const { return e_; }
  std::vector<cplx>& entries() { return e_; }

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx s);

 private:
  int n_ = 0;
  std::vector<cplx> e_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx s, CMatrix m);
CMatrix operator*(double s, CMatrix m);

CMatrix adjoint(const CMatrix& m);
CMatrix transpose(const CMatrix& m);
CMatrix conjugate(const CMatrix& m);
cplx trace(const CMatrix& m);
cplx det2(const CMatrix& m);  // 2x2 only

// Hilbert-Schmidt (Frobenius) norm, sqrt(trace(m* m)).
double hs_norm(const CMatrix& m);
double max_abs(const CMatrix& m);
double max_abs_diff(const CMatrix& a, const CMatrix& b);
bool is_finite(const CMatrix& m);

// Kronecker product, (a ⊗ b)(ip+k, jq+l) = a(i,j) b(k,l) with b p-by-q.
CMatrix kron(const CMatrix& a, const CMatrix& b);

CVector mat_vec(const CMatrix& m, const CVector& v);
// u w* as a matrix: out(i,j) = u[i] conj(w[j]).
CMatrix outer(const CVector& u, const CVector& w);
// Row-major flattening of m as a vector of length n^2.
CVector vec_rows(const CMatrix& m);

double vnorm(const CVector& v);
// Conjugate-linear in the first argument: sum_i conj(x[i]) y[i].
cplx vdot(const CVector& x, const CVector& y);
void vnormalize(CVector& v);

void require_same_dim(const CMatrix& a, const CMatrix& b, const char* where);

}  // namespace jemo
