#include "hypdet/regdet/regdet.hpp"

#include <utility>

#include "hypdet/errors.hpp"
#include "hypdet/numerics/bernoulli.hpp"
#include "hypdet/numerics/special_functions.hpp"

namespace hypdet {

namespace {

ExtReal log_of(long v) { return log(ExtReal(v)); }

ExtReal half_k(int k) { return ExtReal(k) / ExtReal(2); }

ExtComplex minus_half(const ExtComplex& z) { return z - ExtComplex(ratio(1, 2)); }

// b1 z + b0 + (k/2) log 2 pi: the exponent taking Z_+ to D_+
ExtComplex plus_exponent(const SurfaceContext& ctx, const ExtComplex& z) {
  const auto& c = ctx.coefficients();
  return z * c.b1 + ExtComplex(c.b0 + half_k(ctx.k()) * log(ExtReal(2) * const_pi()));
}

ExtComplex minus_exponent(const SurfaceContext& ctx, const ExtComplex& z) {
  const auto& c = ctx.coefficients();
  const auto& k = ctx.constants();
  return z * (c.b1 - k.c1) + ExtComplex(c.b0 + half_k(ctx.k()) * log_of(2) - k.c2);
}

}  // namespace

SurfaceContext::SurfaceContext(OrbifoldData orb, std::shared_ptr<const GeodesicSource> source,
                               ScatteringModel scattering, ExtReal norm_cutoff)
    : orb_(std::move(orb)),
      source_(std::move(source)),
      scattering_(std::move(scattering)),
      coeffs_(g1_coefficients(orb_)),
      constants_(scattering_constants(scattering_)),
      cutoff_(std::move(norm_cutoff)) {
  if (!source_) throw ValidationError("surface context needs a geodesic source");
  if (const auto* g = std::get_if<GenericScattering>(&scattering_)) validate(*g);
  if (std::holds_alternative<ModularScattering>(scattering_) && !orb_.is_modular_trivial()) {
    throw ValidationError("the modular scattering closed form needs the modular signature with trivial chi");
  }
  int k = degree_of_singularity(orb_.rep());
  if (constants_.k != k) {
    throw ValidationError("scattering model has k = " + std::to_string(constants_.k) +
                          " but the representation has degree of singularity " + std::to_string(k));
  }
  if (source_->dim() != orb_.dim()) throw ValidationError("geodesic source dimension differs from the representation");
  if (!(cutoff_ > ExtReal(1))) throw CutoffError("norm cutoff must exceed 1");
}

SurfaceContext SurfaceContext::modular(const ExtReal& norm_cutoff) {
  return {OrbifoldData::modular(), std::make_shared<ModularGeodesicSource>(), ModularScattering{}, norm_cutoff};
}

SeriesValue log_selberg(const SurfaceContext& ctx, const ExtComplex& z) {
  if (z.re() <= ExtReal(1)) throw ConvergenceError("Euler-product domain requires Re(z)>1");
  return selberg_log_z(ctx.source(), z, ctx.norm_cutoff());
}

ExtComplex log_z_plus(const SurfaceContext& ctx, const ExtComplex& z) {
  ExtComplex v = log_selberg(ctx, z).value - log_g1(ctx.orbifold(), z);
  if (ctx.k() != 0) v -= log_gamma(minus_half(z)) * ExtReal(ctx.k());
  return v;
}

ExtComplex log_z_minus(const SurfaceContext& ctx, const ExtComplex& z) {
  return log_z_plus(ctx, z) + scattering_log_phi(ctx.scattering(), z);
}

ExtComplex z_plus(const SurfaceContext& ctx, const ExtComplex& z) { return exp(log_z_plus(ctx, z)); }

ExtComplex z_minus(const SurfaceContext& ctx, const ExtComplex& z) { return exp(log_z_minus(ctx, z)); }

ExtComplex d_plus(const SurfaceContext& ctx, const ExtComplex& z) {
  return exp(plus_exponent(ctx, z) + log_z_plus(ctx, z));
}

ExtComplex d_minus(const SurfaceContext& ctx, const ExtComplex& z) {
  return exp(minus_exponent(ctx, z) + log_z_minus(ctx, z));
}

ExtComplex det_squared(const SurfaceContext& ctx, const ExtComplex& z) {
  const auto& c = ctx.coefficients();
  const auto& k = ctx.constants();
  ExtComplex zp = z_plus(ctx, z);
  ExtComplex phi = scattering_phi(ctx.scattering(), z).value;
  ExtComplex e = z * (ExtReal(2) * c.b1 - k.c1) +
                 ExtComplex(ExtReal(2) * c.b0 + half_k(ctx.k()) * log(ExtReal(4) * const_pi()) - k.c2);
  return exp(e) * phi * zp * zp;
}

ExtComplex phi_from_superzeta(const SurfaceContext& ctx, const ExtComplex& z) {
  const auto& k = ctx.constants();
  ExtComplex pre = exp(ExtComplex(half_k(ctx.k()) * log(const_pi())) + z * k.c1 + ExtComplex(k.c2));
  return pre * d_minus(ctx, z) / d_plus(ctx, z);
}

ExtComplex QuadraticPolynomial::operator()(const ExtComplex& z) const {
  return (z * to_ext(c2) + ExtComplex(to_ext(c1))) * z + ExtComplex(to_ext(c0));
}

QuadraticPolynomial superzeta_at_zero(const OrbifoldData& orb, int k, Completion which) {
  G1RationalCoefficients r = g1_rational_coefficients(orb);
  QuadraticPolynomial p;
  p.c2 = -r.a2t;
  p.c1 = -(r.a1t + k);
  p.c0 = which == Completion::plus ? mpq_class(k) - r.a0t : mpq_class(k, 2) - r.a0t;
  p.c0.canonicalize();
  return p;
}

ExtComplex superzeta_at_zero(const SurfaceContext& ctx, const ExtComplex& z, Completion which) {
  return superzeta_at_zero(ctx.orbifold(), ctx.k(), which)(z);
}

}  // namespace hypdet
