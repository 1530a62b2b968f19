#ifndef TAUCOV_QUADFLOAT_HPP
#define TAUCOV_QUADFLOAT_HPP

#include <cmath>

namespace taucov {

/// Extended-precision scalar for the coefficient pipeline.
///
/// Degree-15 collocation on equidistant nodes produces expansion
/// coefficients up to ~1e24 for the bundled data; binary64 storage alone
/// rounds them into node residuals around 1e-4..1e-2 relative, far above
/// the 1e-6 contract. 113-bit mantissas keep the representability floor
/// near 1e-20, so fits, basis conversions and cosine computations run on
/// this type end to end. I/O values stay `double`.
using quad = __float128;

inline quad qabs(quad x) { return x < 0 ? -x : x; }

inline bool qfinite(quad x) { return x - x == quad(0); }

/// Newton refinement from a long-double seed; two steps reach full
/// quad precision, avoiding a libquadmath dependency.
inline quad qsqrt(quad x) {
    if (x < 0) return quad(0) / quad(0);
    if (x == 0) return x;
    quad r = static_cast<quad>(std::sqrt(static_cast<long double>(x)));
    r = (r + x / r) / 2;
    r = (r + x / r) / 2;
    return r;
}

inline double to_double(quad x) { return static_cast<double>(x); }

} // namespace taucov

#endif
