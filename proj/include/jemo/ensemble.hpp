#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <utility>

#include "jemo/cmatrix.hpp"

namespace jemo {

enum class Ensemble {
  ginibre,
  unitary,
  diagonal,
  complex_symmetric,
  hermitian,
  commuting_pair,
  commuting_normal_pair,
  selfadjoint_jordan_pair,
};

// Accepts the hyphenated external names ("complex-symmetric", ...). Throws
// UnknownEnsemble otherwise.
Ensemble parse_ensemble(std::string_view name);
const char* ensemble_name(Ensemble kind);
bool ensemble_is_pair(Ensemble kind);

struct Sample {
  CMatrix first;
  std::optional<CMatrix> second;  // set for pair ensembles
};

// Deterministic across platforms for a fixed (kind, n, seed): the generator
// is mt19937_64 plus a hand-rolled Box-Muller, so no libstdc++-specific
// distribution state leaks into the stream.
Sample random_matrix(Ensemble kind, int n, std::uint64_t seed);
CMatrix random_single(Ensemble kind, int n, std::uint64_t seed);
std::pair<CMatrix, CMatrix> random_pair(Ensemble kind, int n,
                                        std::uint64_t seed);

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform();  // [0, 1)
  double gauss();    // standard normal
  cplx cgauss();     // E|z|^2 = 1
  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

CMatrix random_ginibre(Rng& rng, int n);
CMatrix random_haar_unitary(Rng& rng, int n);
CVector random_unit_vector(Rng& rng, int n);

}  // namespace jemo
