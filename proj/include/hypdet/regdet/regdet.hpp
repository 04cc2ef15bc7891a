#pragma once

#include <gmpxx.h>

#include <memory>

#include "hypdet/gfuncs/gfuncs.hpp"
#include "hypdet/orbifold/orbifold.hpp"
#include "hypdet/zetas/geodesics.hpp"
#include "hypdet/zetas/scattering.hpp"
#include "hypdet/zetas/selberg.hpp"

namespace hypdet {

/// Everything the determinant formulas consume for one surface and one
/// representation.  Immutable after construction; the constructor checks that
/// the scattering model's k equals the degree of singularity and that the
/// geodesic source reports traces of the right dimension.
class SurfaceContext {
 public:
  SurfaceContext(OrbifoldData orb, std::shared_ptr<const GeodesicSource> source, ScatteringModel scattering,
                 ExtReal norm_cutoff);

  /// PSL(2, Z) with trivial chi, the built-in enumerator and the closed-form phi.
  static SurfaceContext modular(const ExtReal& norm_cutoff);

  const OrbifoldData& orbifold() const { return orb_; }
  const GeodesicSource& source() const { return *source_; }
  const ScatteringModel& scattering() const { return scattering_; }
  const ExpansionCoefficients& coefficients() const { return coeffs_; }
  const ScatteringConstants& constants() const { return constants_; }
  const ExtReal& norm_cutoff() const { return cutoff_; }
  int k() const { return constants_.k; }

 private:
  OrbifoldData orb_;
  std::shared_ptr<const GeodesicSource> source_;
  ScatteringModel scattering_;
  ExpansionCoefficients coeffs_;
  ScatteringConstants constants_;
  ExtReal cutoff_;
};

/// log Z(z) from the Euler product; ConvergenceError unless Re z > 1.
SeriesValue log_selberg(const SurfaceContext& ctx, const ExtComplex& z);

/// log Z_+(z) = log Z(z) - log G1(z) - k log Gamma(z - 1/2).
ExtComplex log_z_plus(const SurfaceContext& ctx, const ExtComplex& z);
/// log Z_-(z) = log Z_+(z) + log phi(z).
ExtComplex log_z_minus(const SurfaceContext& ctx, const ExtComplex& z);
ExtComplex z_plus(const SurfaceContext& ctx, const ExtComplex& z);
ExtComplex z_minus(const SurfaceContext& ctx, const ExtComplex& z);

/// D_+(z) = exp(b1 z + b0 + (k/2) log 2 pi) Z_+(z).
ExtComplex d_plus(const SurfaceContext& ctx, const ExtComplex& z);
/// D_-(z) = exp((b1 - c1) z + b0 + (k/2) log 2 - c2) Z_-(z).
ExtComplex d_minus(const SurfaceContext& ctx, const ExtComplex& z);

/// det^2(Delta - z(1-z)) = exp((2 b1 - c1) z + 2 b0 + (k/2) log 4 pi - c2) phi(z) Z_+(z)^2,
/// evaluated with phi taken directly from the scattering model.
ExtComplex det_squared(const SurfaceContext& ctx, const ExtComplex& z);

/// pi^{k/2} e^{c1 z + c2} D_-(z) / D_+(z); reproduces phi(z).
ExtComplex phi_from_superzeta(const SurfaceContext& ctx, const ExtComplex& z);

/// Exact quadratic c2 z^2 + c1 z + c0.
struct QuadraticPolynomial {
  mpq_class c2;
  mpq_class c1;
  mpq_class c0;
  ExtComplex operator()(const ExtComplex& z) const;
  friend bool operator==(const QuadraticPolynomial&, const QuadraticPolynomial&) = default;
};

enum class Completion { plus, minus };

/// Value at s = 0 of the superzeta function of Z_+ or Z_-, as a polynomial in z:
///   plus:  -(h vol/2 pi) z^2 - (a1t + k) z + k - a0t
///   minus: -(h vol/2 pi) z^2 - (a1t + k) z - a0t + k/2
QuadraticPolynomial superzeta_at_zero(const OrbifoldData& orb, int k, Completion which);
/// The same polynomial evaluated at z.  Meaningful for z in the admissible set
/// of the completion, which is not checked.
ExtComplex superzeta_at_zero(const SurfaceContext& ctx, const ExtComplex& z, Completion which);

}  // namespace hypdet
