#pragma once

namespace distort3 {

/// Number of threads parallel kernels may use: the OpenMP maximum, capped by
/// the DISTORT3_THREADS environment variable when set. Always >= 1; returns 1
/// when compiled without OpenMP. Results of every kernel are independent of
/// this value by construction.
int effective_threads();

}  // namespace distort3
