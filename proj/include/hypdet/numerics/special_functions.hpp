#pragma once

#include "hypdet/numerics/ext_complex.hpp"

namespace hypdet {

/// Extra bits carried internally by the special functions before rounding
/// back to the caller's working precision.
inline constexpr long kGuardBits = 32;

/// Argument above which the asymptotic series are used directly:
/// max(20, bits/3).
long asymptotic_threshold(long bits);

/// log Gamma(z), the branch analytic on C \ (-inf, 0] that is real on the
/// positive axis.  Computed by Stirling's series after shifting Re z past
/// asymptotic_threshold().  Throws PoleError at z in {0, -1, -2, ...}.
ExtComplex log_gamma(const ExtComplex& z);

/// log G(z) for the Barnes G function, G(1) = 1, G(z+1) = Gamma(z) G(z),
/// on the same branch convention as log_gamma.  Throws ZeroError (with the
/// order of vanishing) at z in {0, -1, -2, ...}.
ExtComplex log_barnes_g(const ExtComplex& z);

/// Hurwitz zeta sum_{k>=0} (a+k)^{-s}, continued to s != 1 by
/// Euler-Maclaurin summation.  a must avoid (-inf, 0].
ExtComplex hurwitz_zeta(const ExtComplex& s, const ExtComplex& a);

/// d/ds of hurwitz_zeta(s, a).
ExtComplex hurwitz_zeta_ds(const ExtComplex& s, const ExtComplex& a);

/// d/ds hurwitz_zeta(s, a) at s = 0; equals log Gamma(a) - log(2 pi)/2.
ExtComplex hurwitz_zeta_ds0(const ExtComplex& a);

/// Riemann zeta on C \ {1}: Borwein's accelerated alternating series for
/// Re s >= 1/2, the functional equation to the left of that line.
ExtComplex riemann_zeta(const ExtComplex& s);

/// zeta'(-1), cached per working precision.
ExtReal zeta_prime_minus_one();

/// Engineering model of an asymptotic-series remainder,
/// |R(s)| <~ bound_constant * |s|^decay_exponent.  Not a certified bound.
struct RemainderBound {
  int order = 0;
  ExtReal bound_constant;
  int decay_exponent = 0;

  /// Bound at |s| = modulus (> 0); decreasing in modulus.
  ExtReal at(const ExtReal& modulus) const;
};

/// Remainder g_m of Stirling's series truncated before the m-th term.
RemainderBound log_gamma_remainder(int m);
/// Remainder h_{n+1} of the Barnes asymptotic series after n correction terms.
RemainderBound log_barnes_remainder(int n);

}  // namespace hypdet
