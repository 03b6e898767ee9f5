#pragma once

#include "mzv/big_real.hpp"
#include "mzv/index.hpp"

namespace mzv {

/// Independent low-precision oracle for ζ(k): direct summation of the
/// nested series to a cutoff, with the remainder supplied by an
/// Euler–Maclaurin expansion of the partial sums calibrated against the
/// directly summed values. Supports digits <= 12; shares no code with the
/// Hölder-convolution path it cross-checks.
BigReal eval_mzv_direct(const Index& k, int digits);

namespace oracle_detail {

/// Engine entry point used by tests: ζ(k) with the direct sums cut at m0.
long double zeta_em(const Index& k, long m0);

}  // namespace oracle_detail

}  // namespace mzv
