#pragma once

#include <cstdint>

#include "jemo/elem_op.hpp"
#include "jemo/oracle.hpp"

namespace jemo {

struct HaagerupResult {
  double value;  // upper bound on the cb norm, achieved by rep
  TermList rep;  // balanced representation of the same tensor
};

// Removes linearly dependent coefficients: a dependent left coefficient is
// expanded over the kept ones and folded into their right partners, then the
// same on the right side, iterated until both sides are independent. Terms
// with a vanishing side are dropped; an annihilated tensor reduces to an
// empty list.
TermList reduce_representation(TermList terms, double tol = 1e-10);

// Haagerup tensor norm of sum_i a_i (x) b_i: minimizes the balanced value
// sqrt(|sum a'_i a'_i^*| * |sum b'_i^* b'_i|) over invertible changes of
// representation [a']=[a] alpha, [b'] = alpha^{-1} [b]. Multi-start
// Nelder-Mead over the 2k^2 real parameters of alpha with a conditioning
// barrier; the returned rep is rebalanced so both factor norms agree. Always
// a true upper bound: the value is the bound provided by an explicit rep.
// Throws EmptyTensor when the input has no terms.
HaagerupResult haagerup_norm(const ElemOp& w, int budget,
                             std::uint64_t seed = kOracleSeed);

}  // namespace jemo
