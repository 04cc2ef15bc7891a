#pragma once

#include "hypdet/numerics/ext_complex.hpp"
#include "hypdet/zetas/geodesics.hpp"

namespace hypdet {

/// A truncated series value with an estimate of the neglected part.
struct SeriesValue {
  ExtComplex value;
  ExtReal tail_bound;
};

/// log Z(s) from the Euler product over classes with N(P0) <= norm_cutoff.
///
/// The tail estimate 2 h X^{1-sigma} / ((sigma - 1) log X) follows the prime
/// geodesic theorem with a safety factor of two; powers of each class are
/// summed until the geometric remainder drops below 2^{-P} and that remainder
/// is added to the estimate.  Throws ConvergenceError for Re s <= 1.
SeriesValue selberg_log_z(const GeodesicSource& source, const ExtComplex& s, const ExtReal& norm_cutoff);

/// Same sum over an explicit class list (no cutoff filtering).
SeriesValue selberg_log_z(const std::vector<GeodesicClass>& classes, int dim, const ExtComplex& s,
                          const ExtReal& norm_cutoff);

}  // namespace hypdet
