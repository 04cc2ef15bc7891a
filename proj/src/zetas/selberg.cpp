#include "hypdet/zetas/selberg.hpp"

#include <algorithm>
#include <cmath>

#include "hypdet/errors.hpp"

namespace hypdet {

namespace {

void require_convergent(const ExtComplex& s) {
  if (s.re() <= ExtReal(1)) throw ConvergenceError("Euler product needs Re(s) > 1");
}

// Number of powers l needed so that h N^{-(l+1) sigma} / (1 - N^{-sigma})
// falls below 2^{-bits}.
long powers_needed(double log_norm, double sigma, int h, long bits) {
  double per = sigma * log_norm / std::log(2.0);
  double denom = -std::log2(-std::expm1(-sigma * log_norm));
  double need = (static_cast<double>(bits) + std::log2(static_cast<double>(h)) + denom) / per;
  return std::max(1L, static_cast<long>(std::ceil(need)));
}

}  // namespace

SeriesValue selberg_log_z(const std::vector<GeodesicClass>& classes, int dim, const ExtComplex& s,
                          const ExtReal& norm_cutoff) {
  require_convergent(s);
  long bits = working_precision();
  ExtComplex total(0);
  ExtReal remainder(0);
  ExtReal one(1);
  double sigma = s.re().to_double();

  std::size_t i = 0;
  while (i < classes.size()) {
    std::size_t j = i;
    while (j < classes.size() && classes[j].trace == classes[i].trace) ++j;
    const GeodesicClass& first = classes[i];
    ExtReal ln = first.log_norm();
    long lmax = powers_needed(ln.to_double(), sigma, dim, bits);

    // sum of tr chi(P0^l) over the classes sharing this trace
    std::vector<ExtComplex> traces(static_cast<std::size_t>(lmax), ExtComplex(0));
    for (std::size_t k = i; k < j; ++k) {
      std::vector<ExtComplex> t = classes[k].chi_traces(lmax);
      for (long l = 0; l < lmax; ++l) traces[l] += t[l];
    }

    ExtComplex x = real_base_pow(ln, s);  // N^{-s}
    ExtComplex xl = x;
    ExtReal inv_norm = exp(-ln);
    ExtReal inv_norm_l = inv_norm;
    for (long l = 1; l <= lmax; ++l) {
      total -= traces[l - 1] * xl / (ExtReal(l) * (one - inv_norm_l));
      xl *= x;
      inv_norm_l *= inv_norm;
    }
    ExtReal decay = exp(-(s.re() * ln));
    ExtReal count(static_cast<long>(j - i) * dim);
    remainder += count * pow(decay, lmax + 1) / ((one - decay) * (one - inv_norm));
    i = j;
  }

  ExtReal sig = s.re();
  ExtReal log_x = log(norm_cutoff);
  ExtReal tail = ExtReal(2 * dim) * exp((one - sig) * log_x) / ((sig - one) * log_x);
  return {total, tail + remainder};
}

SeriesValue selberg_log_z(const GeodesicSource& source, const ExtComplex& s, const ExtReal& norm_cutoff) {
  require_convergent(s);
  return selberg_log_z(source.classes(norm_cutoff), source.dim(), s, norm_cutoff);
}

}  // namespace hypdet
