#include "jemo/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "jemo/decomp.hpp"
#include "jemo/ensemble.hpp"

namespace jemo {

namespace {

CVector column(const CMatrix& m, int j) {
  CVector c(static_cast<size_t>(m.dim()));
  for (int i = 0; i < m.dim(); ++i) c[i] = m(i, j);
  return c;
}

// M with tr(x M) = <T(x) eta, xi>; its trace norm is the sharpest bound the
// pair (xi, eta) can witness, attained at the unitary x = V U^*.
CMatrix dual_matrix(const ElemOp& op, const CVector& xi, const CVector& eta) {
  CMatrix m(op.dim);
  for (const auto& [a, b] : op.terms)
    m += outer(mat_vec(b, eta), mat_vec(adjoint(a), xi));
  return m;
}

struct Ascent {
  double value;
  CMatrix w;
};

Ascent ascend(const ElemOp& op, CVector xi, CVector eta, int max_iter) {
  Ascent cur{-1.0, CMatrix::identity(op.dim)};
  for (int it = 0; it < max_iter; ++it) {
    const CMatrix m = dual_matrix(op, xi, eta);
    if (max_abs(m) < 1e-300) break;
    const SvdResult sm = svd(m);
    const CMatrix wn = sm.v * adjoint(sm.u);
    const SvdResult st = svd(apply(op, wn));
    const double vn = st.s[0];
    xi = column(st.u, 0);
    eta = column(st.v, 0);
    if (vn > cur.value) {
      cur.value = vn;
      cur.w = wn;
    }
    if (vn <= cur.value + 1e-14 * std::max(1.0, vn) && it > 0) break;
  }
  return cur;
}

}  // namespace

NormEstimate op_norm_estimate(const ElemOp& op, int budget,
                              std::uint64_t seed) {
  const int n = op.dim;
  Ascent best{-1.0, CMatrix::identity(n)};
  auto consider = [&](const Ascent& a) {
    if (a.value > best.value) best = a;
  };
  constexpr int kMaxIter = 500;
  // Matrix-unit functionals make the start set complete: if every one of them
  // yields a zero dual matrix the map is zero.
  const int basis = std::min(n, 8);
  for (int i = 0; i < basis; ++i) {
    for (int j = 0; j < basis; ++j) {
      CVector xi(static_cast<size_t>(n), cplx(0.0, 0.0));
      CVector eta(static_cast<size_t>(n), cplx(0.0, 0.0));
      xi[i] = 1.0;
      eta[j] = 1.0;
      consider(ascend(op, xi, eta, kMaxIter));
    }
  }
  for (int s = 0; s < budget; ++s) {
    Rng rng(mix_seed(seed, 0x5153u + static_cast<std::uint64_t>(s)));
    consider(ascend(op, random_unit_vector(rng, n), random_unit_vector(rng, n),
                    kMaxIter));
  }
  if (best.value < 0.0) best.value = op_norm(apply(op, best.w));
  return NormEstimate{best.value, best.w};
}

NormEstimate cb_norm_oracle(const ElemOp& op, int budget, std::uint64_t seed,
                            bool stability_check) {
  const NormEstimate est =
      op_norm_estimate(amplify(op, op.dim), budget, seed);
  if (stability_check) {
    const NormEstimate next =
        op_norm_estimate(amplify(op, op.dim + 1), budget, seed);
    if (std::abs(next.value - est.value) >
        1e-6 * std::max(1.0, est.value))
      throw ConvergenceFailure(
          "cb_norm_oracle: amplification k = n and k = n + 1 disagree");
  }
  return est;
}

}  // namespace jemo
