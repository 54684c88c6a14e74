#pragma once

// Reference values computed offline with mpmath at 30 significant digits
// and scipy (exact sine-basis matrices), then frozen here.

#include <complex>

namespace oracle {

using C = std::complex<double>;

inline bool close(C a, C b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace oracle
