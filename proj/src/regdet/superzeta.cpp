#include "hypdet/regdet/superzeta.hpp"

#include "hypdet/errors.hpp"

namespace hypdet {

SeriesValue superzeta_direct(const SuperzetaInput& input, const ExtComplex& s, const ExtComplex& z,
                             const ExtReal& radius) {
  if (s.re() <= ExtReal(2)) throw ConvergenceError("superzeta series needs Re(s) > 2");
  ExtComplex sum(0);
  for (const auto& y : input.zeros) {
    ExtComplex w = z - y;
    if (w.on_nonpositive_axis()) throw CutError("z - y_k lies on (-inf, 0]");
    if (abs(w) > radius) continue;
    sum += exp(-(s * log(w)));
  }
  ExtReal p(input.growth.order);
  ExtReal sigma = s.re();
  ExtReal tail(0);
  if (sigma > p) tail = input.growth.constant * sigma / (sigma - p) * pow(radius, p - sigma);
  return {sum, tail};
}

ExtComplex voros_product(const SuperzetaInput& input, const ExtComplex& z) {
  const auto& c = input.coeffs;
  ExtComplex poly = (z * c.b2 + ExtComplex(c.b1)) * z + ExtComplex(c.b0);
  if (!input.log_delta) throw ValidationError("voros_product needs a log Delta_f evaluator");
  return exp(input.log_delta(z) - poly);
}

}  // namespace hypdet
