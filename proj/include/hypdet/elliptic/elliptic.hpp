#pragma once

#include <vector>

#include "hypdet/numerics/ext_complex.hpp"
#include "hypdet/orbifold/orbifold.hpp"

namespace hypdet {

/// Residues of m + q and m - q modulo d together with the shifts that bring
/// them into [0, d):  q_m = m + q + d k_shift,  qt_m = m - q + d kt_shift.
struct ResidueQuad {
  long q_m = 0;
  long qt_m = 0;
  long k_shift = 0;
  long kt_shift = 0;

  /// k(R, m, j) = k_shift + kt_shift, always in {-1, 0, 1} for m in [0, d).
  long k_total() const { return k_shift + kt_shift; }
};

ResidueQuad residues(long m, int q, int d);

/// Order and the h exponents of one elliptic class.
struct EllipticClass {
  int order = 2;
  std::vector<int> exponents;
};

/// All elliptic classes of an orbifold, in signature order.
std::vector<EllipticClass> elliptic_classes(const OrbifoldData& orb);

/// alpha(R, m) = sum_j (qt_j + q_j).
long alpha(const EllipticClass& cls, long m);
/// beta(R, m) = sum_j k(R, m, j).
long beta_coeff(const EllipticClass& cls, long m);

/// d - 1 - (q(n) + qt(n)), the closed form of the finite trigonometric sum.
long trig_sum_closed(long n, int q, int d);
/// sum_{k=1}^{d-1} w^k sin(k pi (2n+1)/d) / sin(k pi / d) with w = e^{2 pi i q/d}.
ExtComplex trig_sum_brute(long n, int q, int d);

/// Trivial-zero multiplicity from the spectral (trigonometric) formula.
/// Throws NonIntegerError if the value is not within 10 * 2^{-P/2} of an integer.
ExtReal m_n_spectral(const OrbifoldData& orb, long n);
/// Trivial-zero multiplicity from the floor formula; exact.
long m_n_floor(const OrbifoldData& orb, long n);

/// #{t in Z : t d in [-n+q, n+q]}, by direct iteration.
long count_multiples(long n, int q, int d);
/// floor((n+q)/d) + floor((n+d-q)/d).
long g_count(long n, int q, int d);

/// Floor division for possibly negative numerators, d > 0.
long floor_div(long a, long d);
/// Residue of a modulo d in [0, d), d > 0.
long mod_pos(long a, long d);

}  // namespace hypdet
