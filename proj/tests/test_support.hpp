#pragma once

#include <random>
#include <vector>

#include "hypdet/numerics/ext_complex.hpp"
#include "hypdet/orbifold/orbifold.hpp"

namespace hypdet::testing {

// 2^e at working precision.
inline ExtReal pow2(long e) { return ldexp(ExtReal(1), e); }

// Deterministic grid of `count` points with Re z in [re_lo, re_hi] and
// |Im z| <= im_max.
inline std::vector<ExtComplex> complex_grid(int count, double re_lo, double re_hi, double im_max, unsigned seed = 7) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(re_lo, re_hi);
  std::uniform_real_distribution<double> im(-im_max, im_max);
  std::vector<ExtComplex> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.emplace_back(re(rng), im(rng));
  return out;
}

inline ExtReal mpfr_oracle(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), const ExtReal& x) {
  ExtReal r;
  fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

// Random orbifold with g <= max_genus, 1 <= c <= max_cusps, up to
// max_classes elliptic classes of order <= max_order, h <= max_dim and random
// exponents and cusp data.
template <typename Rng>
OrbifoldData random_orbifold(Rng& rng, int max_genus = 5, int max_cusps = 4, int max_classes = 4, int max_order = 12,
                             int max_dim = 3) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (;;) {
    Signature sig;
    sig.genus = pick(0, max_genus);
    sig.cusps = pick(1, max_cusps);
    int e = pick(0, max_classes);
    for (int i = 0; i < e; ++i) sig.elliptic_orders.push_back(pick(2, max_order));
    if (volume_over_2pi(sig) <= 0) continue;
    RepresentationData rep;
    rep.dim = pick(1, max_dim);
    for (int d : sig.elliptic_orders) {
      std::vector<int> ex;
      for (int j = 0; j < rep.dim; ++j) ex.push_back(pick(0, d - 1));
      rep.elliptic_exponents.push_back(ex);
    }
    for (int j = 0; j < sig.cusps; ++j) {
      CuspData c;
      c.fixed_dim = pick(0, rep.dim);
      for (int p = c.fixed_dim; p < rep.dim; ++p) {
        int den = pick(2, 12);
        c.angles.emplace_back(pick(1, den - 1), den);
        c.angles.back().canonicalize();
      }
      rep.cusps.push_back(c);
    }
    return {sig, rep};
  }
}

}  // namespace hypdet::testing
