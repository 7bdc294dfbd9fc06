#include "jemo/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace jemo {

namespace {

// One cyclic complex Jacobi pass: A <- G* A G with G the rotation zeroing
// A(p,q). Returns the off-diagonal Frobenius mass after the sweep.
double jacobi_sweep(CMatrix& a, CMatrix& v, double skip_below) {
  const int n = a.dim();
  for (int p = 0; p < n - 1; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const cplx apq = a(p, q);
      const double r = std::abs(apq);
      if (r <= skip_below) continue;
      const cplx phase = apq / r;
      const double app = a(p, p).real();
      const double aqq = a(q, q).real();
      const double tau = (app - aqq) / (2.0 * r);
      double t;
      if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
      else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const double s = t * c;
      const cplx gpq = -s * phase;             // G(p,q)
      const cplx gqp = s * std::conj(phase);   // G(q,p)
      // Column update A <- A G.
      for (int i = 0; i < n; ++i) {
        const cplx aip = a(i, p), aiq = a(i, q);
        a(i, p) = c * aip + gqp * aiq;
        a(i, q) = gpq * aip + c * aiq;
      }
      // Row update A <- G* A.
      for (int j = 0; j < n; ++j) {
        const cplx apj = a(p, j), aqj = a(q, j);
        a(p, j) = c * apj + std::conj(gqp) * aqj;
        a(q, j) = std::conj(gpq) * apj + c * aqj;
      }
      // Kill the rounding drift the update leaves behind.
      a(p, q) = 0.0;
      a(q, p) = 0.0;
      a(p, p) = a(p, p).real();
      a(q, q) = a(q, q).real();
      for (int i = 0; i < n; ++i) {
        const cplx vip = v(i, p), viq = v(i, q);
        v(i, p) = c * vip + gqp * viq;
        v(i, q) = gpq * vip + c * viq;
      }
    }
  }
  double off = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) off += std::norm(a(i, j));
  return std::sqrt(off);
}

// Diagonalizes Hermitian a in place, accumulating the unitary in v.
void hermitian_jacobi(CMatrix& a, CMatrix& v) {
  const int n = a.dim();
  v = CMatrix::identity(n);
  double scale = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
  const double stop = 1e-15 * scale;
  const double skip = 1e-18 * scale;
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (jacobi_sweep(a, v, skip) <= stop) break;
  }
}

void check_hermitian(const CMatrix& m, const char* where) {
  const double tol = 1e-12 * std::max(1.0, max_abs(m));
  if (max_abs_diff(m, adjoint(m)) > tol)
    throw NotHermitian(std::string(where) + ": input is not Hermitian");
}

std::vector<int> descending_order(const std::vector<double>& vals) {
  std::vector<int> idx(vals.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int i, int j) { return vals[i] > vals[j]; });
  return idx;
}

// Orthonormalizes the candidate columns in order (twice-projected MGS), then
// greedily completes to a full unitary with standard basis vectors. Candidates
// that are near zero or near the span of earlier ones are dropped; callers
// rely on the convention that dropped directions carry (near) zero weight.
CMatrix mgs_complete(const std::vector<CVector>& candidates, int n) {
  std::vector<CVector> cols;
  auto project_out = [&](CVector& x) {
    for (const auto& c : cols) {
      const cplx ip = vdot(c, x);
      for (int i = 0; i < n; ++i) x[i] -= ip * c[i];
    }
  };
  for (const auto& cand : candidates) {
    if (static_cast<int>(cols.size()) == n) break;
    CVector x = cand;
    const double n0 = vnorm(x);
    if (n0 < 1e-8) continue;
    for (auto& e : x) e /= n0;
    project_out(x);
    if (vnorm(x) < 1e-6) continue;
    vnormalize(x);
    project_out(x);
    vnormalize(x);
    cols.push_back(x);
  }
  while (static_cast<int>(cols.size()) < n) {
    CVector best;
    double best_norm = -1.0;
    for (int j = 0; j < n; ++j) {
      CVector e(static_cast<size_t>(n), cplx(0.0, 0.0));
      e[j] = 1.0;
      project_out(e);
      const double r = vnorm(e);
      if (r > best_norm) {
        best_norm = r;
        best = e;
      }
    }
    vnormalize(best);
    project_out(best);
    vnormalize(best);
    cols.push_back(best);
  }
  CMatrix u(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) u(i, j) = cols[j][i];
  return u;
}

CVector column(const CMatrix& m, int j) {
  CVector c(static_cast<size_t>(m.dim()));
  for (int i = 0; i < m.dim(); ++i) c[i] = m(i, j);
  return c;
}

TakagiFactors takagi_attempt(const CMatrix& m) {
  const int n = m.dim();
  // Real symmetric embedding: with m = x + i y (x, y real symmetric),
  // eigenpairs R (p;q) = sigma (p;q) of R = [[x, y], [y, -x]] give conjugate
  // eigenvectors m conj(u) = sigma u for u = p + i q. The +/- symmetry of the
  // spectrum means the top half carries one copy of each Takagi direction.
  CMatrix r(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double x = m(i, j).real();
      const double y = m(i, j).imag();
      r(i, j) = x;
      r(i, n + j) = y;
      r(n + i, j) = y;
      r(n + i, n + j) = -x;
    }
  EigResult eig = hermitian_eig_full(r);
  std::vector<CVector> cand;
  for (int k = 0; k < n; ++k) {
    CVector u(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      u[i] = cplx(eig.vectors(i, k).real(), eig.vectors(n + i, k).real());
    cand.push_back(u);
  }
  CMatrix u = mgs_complete(cand, n);
  // delta_i = u_i^* m conj(u_i); rotate each column so it lands on [0, inf).
  std::vector<double> delta(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    CVector uj = column(u, j);
    CVector cuj = uj;
    for (auto& e : cuj) e = std::conj(e);
    const cplx d = vdot(uj, mat_vec(m, cuj));
    const double ad = std::abs(d);
    if (ad > 0.0) {
      const cplx half_phase = std::exp(cplx(0.0, std::arg(d) / 2.0));
      for (int i = 0; i < n; ++i) u(i, j) *= half_phase;
    }
    delta[j] = ad;
  }
  const std::vector<int> order = descending_order(delta);
  CMatrix us(n);
  std::vector<double> ds(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    ds[k] = delta[order[k]];
    for (int i = 0; i < n; ++i) us(i, k) = u(i, order[k]);
  }
  return TakagiFactors{us, ds};
}

CMatrix takagi_reconstruct(const TakagiFactors& f) {
  const int n = f.u.dim();
  CMatrix d(n);
  for (int i = 0; i < n; ++i) d(i, i) = f.delta[i];
  return f.u * d * transpose(f.u);
}

}  // namespace

std::vector<double> hermitian_eigs(const CMatrix& m) {
  return hermitian_eig_full(m).values;
}

EigResult hermitian_eig_full(const CMatrix& m) {
  check_hermitian(m, "hermitian_eigs");
  CMatrix a = m, v;
  hermitian_jacobi(a, v);
  const int n = m.dim();
  std::vector<double> vals(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) vals[i] = a(i, i).real();
  const std::vector<int> order = descending_order(vals);
  EigResult out;
  out.values.resize(static_cast<size_t>(n));
  out.vectors = CMatrix(n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = vals[order[k]];
    for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

namespace {

// Closed-form 2x2 SVD. U and V are exactly unitary by construction (second
// column is the phase-fixed orthogonal complement); falls back to the
// dilation path when the Gram eigenvalues nearly coincide, where the
// closed-form eigenvector loses accuracy.
bool svd2_closed(const CMatrix& m, SvdResult& out) {
  const double h11 = std::norm(m(0, 0)) + std::norm(m(1, 0));
  const double h22 = std::norm(m(0, 1)) + std::norm(m(1, 1));
  const cplx h12 = std::conj(m(0, 0)) * m(0, 1) + std::conj(m(1, 0)) * m(1, 1);
  const Herm2Eigs e = herm2_eigs(h11, h22, h12);
  const double scale = std::max(h11, h22) + std::abs(h12);
  if (scale == 0.0) {
    out.u = CMatrix::identity(2);
    out.v = CMatrix::identity(2);
    out.s = {0.0, 0.0};
    return true;
  }
  const bool exact_scalar = std::abs(h12) == 0.0 && h11 == h22;
  if (!exact_scalar && e.hi - e.lo < 1e-6 * scale) return false;
  CVector v1(2);
  const CVector c1 = {h12, cplx(e.hi - h11, 0.0)};
  const CVector c2 = {cplx(e.hi - h22, 0.0), std::conj(h12)};
  if (exact_scalar) {
    v1 = {cplx(1.0, 0.0), cplx(0.0, 0.0)};
  } else {
    v1 = vnorm(c1) >= vnorm(c2) ? c1 : c2;
    vnormalize(v1);
  }
  const CVector v2 = {-std::conj(v1[1]), std::conj(v1[0])};
  CVector u1 = mat_vec(m, v1);
  const double s1 = vnorm(u1);
  if (s1 > 0.0) {
    for (auto& x : u1) x /= s1;
  } else {
    u1 = {cplx(1.0, 0.0), cplx(0.0, 0.0)};
  }
  CVector u2 = {-std::conj(u1[1]), std::conj(u1[0])};
  const cplx d2 = vdot(u2, mat_vec(m, v2));
  const double s2 = std::abs(d2);
  if (s2 > 0.0)
    for (auto& x : u2) x *= d2 / s2;
  out.u = CMatrix(2);
  out.v = CMatrix(2);
  for (int i = 0; i < 2; ++i) {
    out.u(i, 0) = u1[i];
    out.u(i, 1) = u2[i];
    out.v(i, 0) = v1[i];
    out.v(i, 1) = v2[i];
  }
  out.s = {s1, s2};
  if (s2 > s1) {
    // Defensive; the Gram ordering should prevent this.
    std::swap(out.s[0], out.s[1]);
    for (int i = 0; i < 2; ++i) {
      std::swap(out.u(i, 0), out.u(i, 1));
      std::swap(out.v(i, 0), out.v(i, 1));
    }
  }
  return true;
}

}  // namespace

SvdResult svd(const CMatrix& m) {
  const int n = m.dim();
  if (n == 2) {
    SvdResult fast;
    if (svd2_closed(m, fast)) return fast;
  }
  // Hermitian dilation [[0, m], [m*, 0]]; eigenpairs come as +/- sigma with
  // vectors (u; +/- v)/sqrt(2). Jacobi on the dilation keeps u and v unitary
  // to machine precision even when sigmas nearly coincide.
  CMatrix d(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      d(i, n + j) = m(i, j);
      d(n + j, i) = std::conj(m(i, j));
    }
  EigResult eig = hermitian_eig_full(d);
  std::vector<CVector> ucand, vcand;
  for (int k = 0; k < n; ++k) {
    CVector u(static_cast<size_t>(n)), v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      u[i] = eig.vectors(i, k);
      v[i] = eig.vectors(n + i, k);
    }
    ucand.push_back(u);
    vcand.push_back(v);
  }
  CMatrix u = mgs_complete(ucand, n);
  CMatrix v = mgs_complete(vcand, n);
  std::vector<double> s(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    const cplx dj = vdot(column(u, j), mat_vec(m, column(v, j)));
    const double adj = std::abs(dj);
    if (adj > 0.0) {
      const cplx phase = dj / adj;
      for (int i = 0; i < n; ++i) u(i, j) *= phase;
    }
    s[j] = adj;
  }
  const std::vector<int> order = descending_order(s);
  SvdResult out;
  out.u = CMatrix(n);
  out.v = CMatrix(n);
  out.s.resize(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    out.s[k] = s[order[k]];
    for (int i = 0; i < n; ++i) {
      out.u(i, k) = u(i, order[k]);
      out.v(i, k) = v(i, order[k]);
    }
  }
  return out;
}

TakagiFactors takagi(const CMatrix& m) {
  const double scale = std::max(1.0, max_abs(m));
  if (max_abs_diff(m, transpose(m)) > 1e-12 * scale)
    throw NotSymmetric("takagi: input is not complex symmetric");
  TakagiFactors f = takagi_attempt(m);
  double resid = max_abs_diff(takagi_reconstruct(f), m);
  if (resid <= 1e-11 * scale) return f;
  // Residual retry with a deterministic global phase; shifts any unlucky
  // branch alignment in the embedded eigenproblem.
  std::mt19937_64 gen(0x7461676bu);
  for (int attempt = 0; attempt < 5; ++attempt) {
    const double rho =
        2.0 * M_PI * (static_cast<double>(gen() >> 11) * 0x1.0p-53);
    const cplx ph = std::exp(cplx(0.0, rho));
    TakagiFactors g = takagi_attempt(ph * m);
    const cplx back = std::exp(cplx(0.0, -rho / 2.0));
    for (auto& e : g.u.entries()) e *= back;
    const double r2 = max_abs_diff(takagi_reconstruct(g), m);
    if (r2 < resid) {
      f = g;
      resid = r2;
    }
    if (resid <= 1e-11 * scale) return f;
  }
  throw ConvergenceFailure("takagi: residual check failed after retries");
}

double op_norm(const CMatrix& m) {
  const int n = m.dim();
  if (n == 1) return std::abs(m(0, 0));
  if (n == 2) {
    const double h11 = std::norm(m(0, 0)) + std::norm(m(1, 0));
    const double h22 = std::norm(m(0, 1)) + std::norm(m(1, 1));
    const cplx h12 = std::conj(m(0, 0)) * m(0, 1) + std::conj(m(1, 0)) * m(1, 1);
    return std::sqrt(std::max(0.0, herm2_eigs(h11, h22, h12).hi));
  }
  return svd(m).s[0];
}

double trace_norm(const CMatrix& m) {
  const int n = m.dim();
  if (n == 2) {
    const double h11 = std::norm(m(0, 0)) + std::norm(m(1, 0));
    const double h22 = std::norm(m(0, 1)) + std::norm(m(1, 1));
    const cplx h12 = std::conj(m(0, 0)) * m(0, 1) + std::conj(m(1, 0)) * m(1, 1);
    const Herm2Eigs e = herm2_eigs(h11, h22, h12);
    return std::sqrt(std::max(0.0, e.hi)) + std::sqrt(std::max(0.0, e.lo));
  }
  const SvdResult f = svd(m);
  double t = 0.0;
  for (double x : f.s) t += x;
  return t;
}

Herm2Eigs herm2_eigs(double a11, double a22, cplx a12) {
  const double mean = 0.5 * (a11 + a22);
  const double hd = 0.5 * (a11 - a22);
  const double r = std::hypot(hd, std::abs(a12));
  return Herm2Eigs{mean - r, mean + r};
}

double hermitian_op_norm(const CMatrix& m) {
  if (m.dim() == 2) {
    const Herm2Eigs e =
        herm2_eigs(m(0, 0).real(), m(1, 1).real(), m(0, 1));
    return std::max(std::abs(e.lo), std::abs(e.hi));
  }
  double best = 0.0;
  for (double v : hermitian_eigs(m)) best = std::max(best, std::abs(v));
  return best;
}

}  // namespace jemo
