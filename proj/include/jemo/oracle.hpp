#pragma once

#include <cstdint>

#include "jemo/elem_op.hpp"

namespace jemo {

inline constexpr std::uint64_t kOracleSeed = 0x6a656d6fu;

struct NormEstimate {
  double value;     // certified lower bound, attained by the witness
  CMatrix witness;  // unit operator norm
};

// Lower bound on sup{ |T(x)| : |x| <= 1 } by alternating ascent between a
// unitary argument and a rank-one functional. The returned value is always
// op_norm(apply(T, witness)), so it is a true bound regardless of how far the
// ascent got; budget counts random restarts and only ever improves the bound.
NormEstimate op_norm_estimate(const ElemOp& op, int budget,
                              std::uint64_t seed = kOracleSeed);

// Completely bounded norm via amplification by the matrix dimension, which is
// where the supremum over amplifications is attained for maps into M_n. With
// stability_check the (n+1)-fold amplification is computed too and a
// disagreement beyond 1e-6 throws ConvergenceFailure.
NormEstimate cb_norm_oracle(const ElemOp& op, int budget,
                            std::uint64_t seed = kOracleSeed,
                            bool stability_check = false);

}  // namespace jemo
