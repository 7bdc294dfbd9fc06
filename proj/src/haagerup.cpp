#include "jemo/haagerup.hpp"

#include <cmath>

#include "jemo/decomp.hpp"
#include "jemo/ensemble.hpp"
#include "jemo/minimize.hpp"

namespace jemo {

namespace {

// One elimination pass over the given side (0 = left, 1 = right). Returns
// true if anything changed. A dependent coefficient v = sum_j c_j v_j over
// the kept ones moves its partner into the kept partners: for side 0,
// a (x) b = sum_j c_j (a_j (x) b), so b_j += c_j b.
bool eliminate_side(TermList& terms, int side, double tol) {
  std::vector<CVector> basis;  // orthonormalized kept side-vectors
  TermList kept;
  bool changed = false;
  for (const auto& term : terms) {
    const CMatrix& v = side == 0 ? term.first : term.second;
    const CMatrix& partner = side == 0 ? term.second : term.first;
    if (max_abs(v) == 0.0 || max_abs(partner) == 0.0) {
      changed = true;
      continue;
    }
    CVector x = vec_rows(v);
    const double scale = vnorm(x);
    std::vector<cplx> coef;
    for (const auto& q : basis) {
      const cplx ip = vdot(q, x);
      coef.push_back(ip);
      for (size_t i = 0; i < x.size(); ++i) x[i] -= ip * q[i];
    }
    if (vnorm(x) > tol * scale) {
      vnormalize(x);
      basis.push_back(x);
      kept.push_back(term);
      continue;
    }
    changed = true;
    // Solve v = sum_j c_j v_j through the stored Gram-Schmidt data: the
    // kept v_j relate to the basis by an upper-triangular system.
    const size_t m = kept.size();
    std::vector<cplx> c(m, cplx(0.0, 0.0));
    // Build R with R(k, j) = <q_k, vec(v_j)>; by construction R is upper
    // triangular with positive diagonal.
    for (size_t j = m; j-- > 0;) {
      const CVector vj =
          vec_rows(side == 0 ? kept[j].first : kept[j].second);
      // coefficient of q_j in v minus contributions of later kept terms.
      cplx acc = coef.size() > j ? coef[j] : cplx(0.0, 0.0);
      for (size_t l = j + 1; l < m; ++l) {
        const CVector vl =
            vec_rows(side == 0 ? kept[l].first : kept[l].second);
        acc -= c[l] * vdot(basis[j], vl);
      }
      c[j] = acc / vdot(basis[j], vj);
    }
    for (size_t j = 0; j < m; ++j) {
      if (side == 0)
        kept[j].second += c[j] * partner;
      else
        kept[j].first += c[j] * partner;
    }
  }
  terms = std::move(kept);
  return changed;
}

struct AlphaEval {
  double value = 0.0;
  TermList rep;
  bool usable = false;
};

AlphaEval apply_alpha(const TermList& terms,
                      const std::vector<double>& params, bool build_rep) {
  const int k = static_cast<int>(terms.size());
  const int n = terms[0].first.dim();
  CMatrix alpha(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const size_t p = 2 * (static_cast<size_t>(i) * k + j);
      alpha(i, j) = cplx(params[p], params[p + 1]);
    }
  AlphaEval out;
  const SvdResult sa = svd(alpha);
  const double smin = sa.s[static_cast<size_t>(k) - 1];
  if (smin <= 1e-12 * std::max(1.0, sa.s[0])) {
    out.value = 1e12 * (1.0 + sa.s[0]);
    return out;
  }
  CMatrix inv(k);  // alpha^{-1} = v diag(1/s) u^*
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      cplx acc(0.0, 0.0);
      for (int l = 0; l < k; ++l)
        acc += sa.v(i, l) * std::conj(sa.u(j, l)) / sa.s[l];
      inv(i, j) = acc;
    }
  TermList rep;
  CMatrix asum(n), bsum(n);
  for (int j = 0; j < k; ++j) {
    CMatrix aj(n), bj(n);
    for (int i = 0; i < k; ++i) {
      aj += alpha(i, j) * terms[i].first;
      bj += inv(j, i) * terms[i].second;
    }
    asum += aj * adjoint(aj);
    bsum += adjoint(bj) * bj;
    if (build_rep) rep.emplace_back(std::move(aj), std::move(bj));
  }
  const double na = hermitian_op_norm(asum);
  const double nb = hermitian_op_norm(bsum);
  out.value = 0.5 * (na + nb);
  const double cond = sa.s[0] / smin;
  if (cond > 1e6) {
    const double over = cond / 1e6 - 1.0;
    out.value += over * over * (1.0 + out.value);
  }
  out.rep = std::move(rep);
  out.usable = true;
  return out;
}

}  // namespace

TermList reduce_representation(TermList terms, double tol) {
  for (int pass = 0; pass < 64; ++pass) {
    const bool c0 = eliminate_side(terms, 0, tol);
    const bool c1 = eliminate_side(terms, 1, tol);
    if (!c0 && !c1) break;
  }
  return terms;
}

HaagerupResult haagerup_norm(const ElemOp& w, int budget, std::uint64_t seed) {
  if (w.terms.empty()) throw EmptyTensor("haagerup_norm: no terms");
  TermList terms = reduce_representation(w.terms);
  if (terms.empty()) return HaagerupResult{0.0, {}};
  const int k = static_cast<int>(terms.size());
  const size_t np = 2 * static_cast<size_t>(k) * k;

  auto objective = [&](const std::vector<double>& p) {
    return apply_alpha(terms, p, false).value;
  };

  std::vector<double> identity_params(np, 0.0);
  for (int i = 0; i < k; ++i)
    identity_params[2 * (static_cast<size_t>(i) * k + i)] = 1.0;

  std::vector<double> best = identity_params;
  double best_f = objective(best);
  const int starts = std::max(1, budget);
  for (int s = 0; s < starts; ++s) {
    std::vector<double> x0 = identity_params;
    if (s > 0) {
      Rng rng(mix_seed(seed, 0xa1fau + static_cast<std::uint64_t>(s)));
      const double t = std::exp(0.7 * rng.gauss());
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          const cplx g = 0.5 * rng.cgauss();
          const size_t p = 2 * (static_cast<size_t>(i) * k + j);
          x0[p] = t * ((i == j ? 1.0 : 0.0) + g.real());
          x0[p + 1] = t * g.imag();
        }
    }
    NelderMeadOptions opt;
    opt.max_evals = 500 * static_cast<int>(np);
    NmResult r = nelder_mead(objective, x0, 0.25, opt);
    // One restart from the found point tightens the last digits.
    r = nelder_mead(objective, r.x, 0.02, opt);
    if (r.f < best_f) {
      best_f = r.f;
      best = r.x;
    }
  }

  AlphaEval fin = apply_alpha(terms, best, true);
  if (!fin.usable)
    throw ConvergenceFailure("haagerup_norm: optimizer left singular alpha");
  // Rebalance the two factor norms exactly; the bound is their geometric
  // mean and is invariant under this scaling.
  const int n = terms[0].first.dim();
  CMatrix asum(n), bsum(n);
  for (const auto& [aj, bj] : fin.rep) {
    asum += aj * adjoint(aj);
    bsum += adjoint(bj) * bj;
  }
  const double na = hermitian_op_norm(asum);
  const double nb = hermitian_op_norm(bsum);
  HaagerupResult out;
  out.rep = std::move(fin.rep);
  if (na == 0.0 || nb == 0.0) {
    out.value = 0.0;
    return out;
  }
  const double t = std::pow(nb / na, 0.25);
  for (auto& [aj, bj] : out.rep) {
    aj *= cplx(t, 0.0);
    bj *= cplx(1.0 / t, 0.0);
  }
  out.value = std::sqrt(na * nb);
  return out;
}

}  // namespace jemo
