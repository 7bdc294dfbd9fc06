#include "jemo/ensemble.hpp"

#include <cmath>
#include <string>

namespace jemo {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

CVector random_cvector(Rng& rng, int n) {
  CVector v(static_cast<size_t>(n));
  for (auto& e : v) e = rng.cgauss();
  return v;
}

CMatrix polynomial_in(const CMatrix& m, cplx c0, cplx c1, cplx c2) {
  const int n = m.dim();
  CMatrix r = c0 * CMatrix::identity(n);
  r += c1 * m;
  r += c2 * (m * m);
  return r;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(a) ^ b);
}

double Rng::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::gauss() {
  if (have_cached_) {
    have_cached_ = false;
    return cached_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * M_PI * u2;
  cached_ = r * std::sin(t);
  have_cached_ = true;
  return r * std::cos(t);
}

cplx Rng::cgauss() {
  const double re = gauss();
  const double im = gauss();
  return cplx(re * M_SQRT1_2, im * M_SQRT1_2);
}

CMatrix random_ginibre(Rng& rng, int n) {
  CMatrix m(n);
  for (auto& e : m.entries()) e = rng.cgauss();
  return m;
}

CMatrix random_haar_unitary(Rng& rng, int n) {
  // Gram-Schmidt with positive diagonal R gives the Haar measure.
  const CMatrix g = random_ginibre(rng, n);
  std::vector<CVector> cols;
  for (int j = 0; j < n; ++j) {
    CVector c(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) c[i] = g(i, j);
    for (const auto& prev : cols) {
      const cplx ip = vdot(prev, c);
      for (int i = 0; i < n; ++i) c[i] -= ip * prev[i];
    }
    vnormalize(c);
    for (const auto& prev : cols) {
      const cplx ip = vdot(prev, c);
      for (int i = 0; i < n; ++i) c[i] -= ip * prev[i];
    }
    vnormalize(c);
    cols.push_back(c);
  }
  CMatrix u(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) u(i, j) = cols[j][i];
  return u;
}

CVector random_unit_vector(Rng& rng, int n) {
  CVector v = random_cvector(rng, n);
  vnormalize(v);
  return v;
}

Ensemble parse_ensemble(std::string_view name) {
  if (name == "ginibre") return Ensemble::ginibre;
  if (name == "unitary") return Ensemble::unitary;
  if (name == "diagonal") return Ensemble::diagonal;
  if (name == "complex-symmetric") return Ensemble::complex_symmetric;
  if (name == "hermitian") return Ensemble::hermitian;
  if (name == "commuting-pair") return Ensemble::commuting_pair;
  if (name == "commuting-normal-pair") return Ensemble::commuting_normal_pair;
  if (name == "selfadjoint-jordan-pair")
    return Ensemble::selfadjoint_jordan_pair;
  throw UnknownEnsemble("unknown ensemble: " + std::string(name));
}

const char* ensemble_name(Ensemble kind) {
  switch (kind) {
    case Ensemble::ginibre:
      return "ginibre";
    case Ensemble::unitary:
      return "unitary";
    case Ensemble::diagonal:
      return "diagonal";
    case Ensemble::complex_symmetric:
      return "complex-symmetric";
    case Ensemble::hermitian:
      return "hermitian";
    case Ensemble::commuting_pair:
      return "commuting-pair";
    case Ensemble::commuting_normal_pair:
      return "commuting-normal-pair";
    case Ensemble::selfadjoint_jordan_pair:
      return "selfadjoint-jordan-pair";
  }
  throw UnknownEnsemble("unknown ensemble enum value");
}

bool ensemble_is_pair(Ensemble kind) {
  switch (kind) {
    case Ensemble::commuting_pair:
    case Ensemble::commuting_normal_pair:
    case Ensemble::selfadjoint_jordan_pair:
      return true;
    default:
      return false;
  }
}

Sample random_matrix(Ensemble kind, int n, std::uint64_t seed) {
  if (n < 1) throw DimMismatch("random_matrix: dimension must be >= 1");
  Rng rng(mix_seed(mix_seed(seed, 0x6a656d6full + static_cast<int>(kind)),
                   static_cast<std::uint64_t>(n)));
  switch (kind) {
    case Ensemble::ginibre:
      return Sample{random_ginibre(rng, n), std::nullopt};
    case Ensemble::unitary:
      return Sample{random_haar_unitary(rng, n), std::nullopt};
    case Ensemble::diagonal:
      return Sample{CMatrix::diag(random_cvector(rng, n)), std::nullopt};
    case Ensemble::complex_symmetric: {
      const CMatrix g = random_ginibre(rng, n);
      return Sample{0.5 * (g + transpose(g)), std::nullopt};
    }
    case Ensemble::hermitian: {
      const CMatrix g = random_ginibre(rng, n);
      return Sample{0.5 * (g + adjoint(g)), std::nullopt};
    }
    case Ensemble::commuting_pair: {
      // Low-degree polynomials in a shared matrix commute exactly; the
      // coefficients keep the pair away from the normal/diagonal special
      // cases.
      const CMatrix m = random_ginibre(rng, n);
      const CMatrix a =
          polynomial_in(m, rng.cgauss(), rng.cgauss(), rng.cgauss());
      const CMatrix b =
          polynomial_in(m, rng.cgauss(), rng.cgauss(), rng.cgauss());
      return Sample{a, b};
    }
    case Ensemble::commuting_normal_pair: {
      const CMatrix u = random_haar_unitary(rng, n);
      const CMatrix da = CMatrix::diag(random_cvector(rng, n));
      const CMatrix db = CMatrix::diag(random_cvector(rng, n));
      return Sample{u * da * adjoint(u), u * db * adjoint(u)};
    }
    case Ensemble::selfadjoint_jordan_pair: {
      const CMatrix a = random_ginibre(rng, n);
      const CMatrix b = random_ginibre(rng, n);
      return Sample{a, b};
    }
  }
  throw UnknownEnsemble("unknown ensemble enum value");
}

CMatrix random_single(Ensemble kind, int n, std::uint64_t seed) {
  if (ensemble_is_pair(kind))
    throw UnknownEnsemble(std::string("ensemble ") + ensemble_name(kind) +
                          " produces a pair, not a single matrix");
  return random_matrix(kind, n, seed).first;
}

std::pair<CMatrix, CMatrix> random_pair(Ensemble kind, int n,
                                        std::uint64_t seed) {
  if (!ensemble_is_pair(kind))
    throw UnknownEnsemble(std::string("ensemble ") + ensemble_name(kind) +
                          " produces a single matrix, not a pair");
  Sample s = random_matrix(kind, n, seed);
  return {s.first, *s.second};
}

}  // namespace jemo
