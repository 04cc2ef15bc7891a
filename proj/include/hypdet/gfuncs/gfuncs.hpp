#pragma once

#include <gmpxx.h>

#include "hypdet/numerics/ext_complex.hpp"
#include "hypdet/orbifold/orbifold.hpp"

namespace hypdet {

/// Coefficients of the large-|z| template
///   a2t z^2 (log z - 3/2) + b2 z^2 + a1t z (log z - 1) + b1 z + a0t log z + b0.
struct ExpansionCoefficients {
  ExtReal a2t;
  ExtReal b2;
  ExtReal a1t;
  ExtReal b1;
  ExtReal a0t;
  ExtReal b0;

  /// Evaluates the template at z (principal log).
  ExtComplex evaluate(const ExtComplex& z) const;
};

/// The rational parts of the G1 expansion, kept exact.
struct G1RationalCoefficients {
  mpq_class a2t;  // h vol / 2 pi
  mpq_class a1t;
  mpq_class a0t;
};

G1RationalCoefficients g1_rational_coefficients(const OrbifoldData& orb);

/// Expansion coefficients of log G1.
ExpansionCoefficients g1_coefficients(const OrbifoldData& orb);

/// Competing closed forms for the constant and log coefficients, kept so the
/// test suites can reject the ones that fail the numerical fit.
struct G1CoefficientCandidates {
  ExtReal a0t_adopted;
  ExtReal a0t_alternative;  // +h (d-1)/d (1/2 - (d-2)/6) with beta weights (m/d - 1/2)/d
  ExtReal b0_plus;          // +(1/2d) log 2 pi in the elliptic sum (adopted)
  ExtReal b0_minus;         // -(1/2d) log 2 pi
};

G1CoefficientCandidates g1_coefficient_candidates(const OrbifoldData& orb);

/// log G1(s) assembled from log Gamma and log G (analytic branch).
/// Throws SingularityError within 2^{-P/4} of a zero or pole of G1 and
/// BranchError for real s <= 0.
ExtComplex log_g1(const OrbifoldData& orb, const ExtComplex& s);

/// Asymptotic expansion of log G1 through the constant term.
ExtComplex log_g1_asymptotic(const OrbifoldData& orb, const ExtComplex& s);

/// Order of G1 at s = -n, from the divisors of its Gamma and G factors.
long order_at(const OrbifoldData& orb, long n);

/// log G_{q,d}(s) = sum_m log G((s-q+m)/d + 1) + log G((s-(d-q)+m)/d + 1).
ExtComplex log_g_qd(const ExtComplex& s, int q, int d);
/// log G_E(s): sum of log G_{q,d} over elliptic classes and exponents.
ExtComplex log_g_e(const ExtComplex& s, const OrbifoldData& orb);
/// log of the alternative gamma factor with the same divisor as G1.
ExtComplex log_tilde_g1(const ExtComplex& s, const OrbifoldData& orb);

/// Order of G_{q,d} at s = -n.
long order_g_qd(long n, int q, int d);
/// Order of G_{q,d} at an arbitrary point (zero away from -N).
long order_g_qd(const ExtComplex& s, int q, int d);
long order_g_e(const OrbifoldData& orb, long n);
long order_tilde_g1(const OrbifoldData& orb, long n);

}  // namespace hypdet
