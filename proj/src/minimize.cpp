#include "jemo/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace jemo {

ScalarMin golden_section(const std::function<double(double)>& f, double lo,
                         double hi, double xtol, int max_iter) {
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - gr * (hi - lo);
  double d = lo + gr * (hi - lo);
  double fc = f(c), fd = f(d);
  ScalarMin best = fc < fd ? ScalarMin{c, fc} : ScalarMin{d, fd};
  for (int it = 0; it < max_iter && (hi - lo) > xtol; ++it) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = f(c);
      if (fc < best.f) best = {c, fc};
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = f(d);
      if (fd < best.f) best = {d, fd};
    }
  }
  return best;
}

ScalarMin log_grid_min(const std::function<double(double)>& f, double lo,
                       double hi, int grid_points, double xtol) {
  const int g = std::max(3, grid_points);
  const double llo = std::log(lo), lhi = std::log(hi);
  int best_i = 0;
  double best_f = 0.0;
  std::vector<double> xs(static_cast<size_t>(g));
  for (int i = 0; i < g; ++i) {
    xs[i] = std::exp(llo + (lhi - llo) * i / (g - 1));
    const double fi = f(xs[i]);
    if (i == 0 || fi < best_f) {
      best_f = fi;
      best_i = i;
    }
  }
  const double blo = std::log(xs[std::max(0, best_i - 1)]);
  const double bhi = std::log(xs[std::min(g - 1, best_i + 1)]);
  ScalarMin refined = golden_section(
      [&](double t) { return f(std::exp(t)); }, blo, bhi, xtol);
  if (refined.f <= best_f) return {std::exp(refined.x), refined.f};
  return {xs[best_i], best_f};
}

NmResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                     std::vector<double> x0, double step,
                     NelderMeadOptions opt) {
  const int d = static_cast<int>(x0.size());
  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };
  std::vector<std::vector<double>> pts(static_cast<size_t>(d + 1), x0);
  std::vector<double> fv(static_cast<size_t>(d + 1));
  for (int i = 1; i <= d; ++i) pts[i][i - 1] += step;
  for (int i = 0; i <= d; ++i) fv[i] = eval(pts[i]);

  std::vector<int> order(static_cast<size_t>(d + 1));
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return fv[i] < fv[j]; });
  };

  while (evals < opt.max_evals) {
    sort_simplex();
    const int ibest = order[0], iworst = order[d], isecond = order[d - 1];
    // Convergence: function spread and simplex extent both small.
    double fspread = fv[iworst] - fv[ibest];
    double xspread = 0.0;
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j < d; ++j)
        xspread = std::max(xspread, std::abs(pts[i][j] - pts[ibest][j]));
    if (fspread <= opt.ftol * (1.0 + std::abs(fv[ibest])) &&
        xspread <= opt.xtol * (1.0 + std::abs(pts[ibest][0])))
      break;

    std::vector<double> centroid(static_cast<size_t>(d), 0.0);
    for (int i = 0; i <= d; ++i) {
      if (i == iworst) continue;
      for (int j = 0; j < d; ++j) centroid[j] += pts[i][j];
    }
    for (double& c : centroid) c /= d;

    auto blend = [&](double t) {
      std::vector<double> x(static_cast<size_t>(d));
      for (int j = 0; j < d; ++j)
        x[j] = centroid[j] + t * (pts[iworst][j] - centroid[j]);
      return x;
    };

    const std::vector<double> xr = blend(-1.0);
    const double fr = eval(xr);
    if (fr < fv[ibest]) {
      const std::vector<double> xe = blend(-2.0);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[iworst] = xe;
        fv[iworst] = fe;
      } else {
        pts[iworst] = xr;
        fv[iworst] = fr;
      }
    } else if (fr < fv[isecond]) {
      pts[iworst] = xr;
      fv[iworst] = fr;
    } else {
      const bool outside = fr < fv[iworst];
      const std::vector<double> xc = blend(outside ? -0.5 : 0.5);
      const double fc = eval(xc);
      if (fc < std::min(fr, fv[iworst])) {
        pts[iworst] = xc;
        fv[iworst] = fc;
      } else {
        // Shrink toward the best vertex.
        for (int i = 0; i <= d; ++i) {
          if (i == ibest) continue;
          for (int j = 0; j < d; ++j)
            pts[i][j] = pts[ibest][j] + 0.5 * (pts[i][j] - pts[ibest][j]);
          fv[i] = eval(pts[i]);
        }
      }
    }
  }
  sort_simplex();
  return NmResult{pts[order[0]], fv[order[0]], evals};
}

}  // namespace jemo
