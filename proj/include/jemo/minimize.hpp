#pragma once

#include <functional>
#include <vector>

namespace jemo {

struct ScalarMin {
  double x;
  double f;
};

// Golden-section minimization on [lo, hi]; assumes a unimodal-ish objective
// and returns the best point actually evaluated.
ScalarMin golden_section(const std::function<double(double)>& f, double lo,
                         double hi, double xtol, int max_iter = 200);

// Multiplicative grid scan over [lo, hi] followed by golden-section
// refinement (in log coordinates) on the bracketing interval of the best
// grid point. Intended for scale-free objectives like t -> |t a| + |b/t|.
ScalarMin log_grid_min(const std::function<double(double)>& f, double lo,
                       double hi, int grid_points, double xtol = 1e-12);

struct NelderMeadOptions {
  int max_evals = 4000;
  double ftol = 1e-13;
  double xtol = 1e-11;
};

struct NmResult {
  std::vector<double> x;
  double f;
  int evals;
};

// Standard downhill simplex with deterministic tie handling.
NmResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                     std::vector<double> x0, double step,
                     NelderMeadOptions opt = {});

}  // namespace jemo
