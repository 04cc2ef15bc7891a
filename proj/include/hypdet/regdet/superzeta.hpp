#pragma once

#include <functional>
#include <vector>

#include "hypdet/gfuncs/gfuncs.hpp"
#include "hypdet/zetas/selberg.hpp"

namespace hypdet {

/// Growth of the zero counting function, n(r) <= constant * r^order.
struct ZeroGrowth {
  ExtReal constant;
  int order = 1;
};

/// Data of an entire function f of order at most two for the Voros engine.
struct SuperzetaInput {
  /// Zeros y_k with multiplicity.  Must contain every zero within the
  /// cutoff radius passed to superzeta_direct.
  std::vector<ExtComplex> zeros;
  ZeroGrowth growth;
  ExpansionCoefficients coeffs;
  /// log Delta_f(z), the Hadamard-normalized value of f.
  std::function<ExtComplex(const ExtComplex&)> log_delta;
};

/// sum over |z - y_k| <= radius of (z - y_k)^{-s}, principal branch, with the
/// integral estimate  constant * Re s / (Re s - order) * radius^{order - Re s}
/// for the rest.  ConvergenceError for Re s <= 2, CutError if z - y_k <= 0.
SeriesValue superzeta_direct(const SuperzetaInput& input, const ExtComplex& s, const ExtComplex& z,
                             const ExtReal& radius);

/// e^{-(b2 z^2 + b1 z + b0)} Delta_f(z).
ExtComplex voros_product(const SuperzetaInput& input, const ExtComplex& z);

}  // namespace hypdet
