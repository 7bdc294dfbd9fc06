#include "jemo/cmatrix.hpp"

#include <cmath>
#include <string>

namespace jemo {

CMatrix::CMatrix(int n) : n_(n) {
  if (n < 1) throw DimMismatch("matrix dimension must be >= 1");
  e_.assign(static_cast<size_t>(n) * n, cplx(0.0, 0.0));
}

CMatrix::CMatrix(int n, std::initializer_list<cplx> entries) : CMatrix(n) {
  if (entries.size() != e_.size())
    throw DimMismatch("initializer size does not match dimension");
  size_t i = 0;
  for (cplx v : entries) e_[i++] = v;
}

CMatrix CMatrix::identity(int n) {
  CMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diag(const CVector& d) {
  CMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = d[i];
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  require_same_dim(*this, o, "operator+=");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  require_same_dim(*this, o, "operator-=");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& v : e_) v *= s;
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "operator*");
  const int n = a.dim();
  CMatrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

CMatrix operator*(cplx s, CMatrix m) { return m *= s; }
CMatrix operator*(double s, CMatrix m) { return m *= cplx(s, 0.0); }

CMatrix adjoint(const CMatrix& m) {
  const int n = m.dim();
  CMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = std::conj(m(j, i));
  return r;
}

CMatrix transpose(const CMatrix& m) {
  const int n = m.dim();
  CMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = m(j, i);
  return r;
}

CMatrix conjugate(const CMatrix& m) {
  CMatrix r = m;
  for (auto& v : r.entries()) v = std::conj(v);
  return r;
}

cplx trace(const CMatrix& m) {
  cplx t(0.0, 0.0);
  for (int i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

cplx det2(const CMatrix& m) {
  if (m.dim() != 2) throw DimMismatch("det2 requires a 2x2 matrix");
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

double hs_norm(const CMatrix& m) {
  double s = 0.0;
  for (const auto& v : m.entries()) s += std::norm(v);
  return std::sqrt(s);
}

double max_abs(const CMatrix& m) {
  double s = 0.0;
  for (const auto& v : m.entries()) s = std::max(s, std::abs(v));
  return s;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double s = 0.0;
  for (size_t i = 0; i < a.entries().size(); ++i)
    s = std::max(s, std::abs(a.entries()[i] - b.entries()[i]));
  return s;
}

bool is_finite(const CMatrix& m) {
  for (const auto& v : m.entries())
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const int p = a.dim(), q = b.dim();
  CMatrix c(p * q);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx(0.0, 0.0)) continue;
      for (int k = 0; k < q; ++k)
        for (int l = 0; l < q; ++l) c(i * q + k, j * q + l) = aij * b(k, l);
    }
  return c;
}

CVector mat_vec(const CMatrix& m, const CVector& v) {
  const int n = m.dim();
  if (static_cast<int>(v.size()) != n)
    throw DimMismatch("mat_vec dimension mismatch");
  CVector r(static_cast<size_t>(n), cplx(0.0, 0.0));
  for (int i = 0; i < n; ++i) {
    cplx s(0.0, 0.0);
    for (int j = 0; j < n; ++j) s += m(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

CMatrix outer(const CVector& u, const CVector& w) {
  if (u.size() != w.size()) throw DimMismatch("outer dimension mismatch");
  const int n = static_cast<int>(u.size());
  CMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = u[i] * std::conj(w[j]);
  return m;
}

CVector vec_rows(const CMatrix& m) { return m.entries(); }

double vnorm(const CVector& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

cplx vdot(const CVector& x, const CVector& y) {
  if (x.size() != y.size()) throw DimMismatch("vdot dimension mismatch");
  cplx s(0.0, 0.0);
  for (size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

void vnormalize(CVector& v) {
  const double n = vnorm(v);
  if (n == 0.0) throw ZeroMatrix("cannot normalize a zero vector");
  for (auto& x : v) x /= n;
}

void require_same_dim(const CMatrix& a, const CMatrix& b, const char* where) {
  if (a.dim() != b.dim())
    throw DimMismatch(std::string(where) + ": dimensions " +
                      std::to_string(a.dim()) + " vs " +
                      std::to_string(b.dim()));
}

}  // namespace jemo
