#include "hypdet/regdet/symmetry.hpp"

#include <istream>
#include <sstream>
#include <string>

#include "hypdet/errors.hpp"
#include "hypdet/numerics/special_functions.hpp"

namespace hypdet {

namespace {

void require_euler_domain(const ExtComplex& z) {
  if (z.re() <= ExtReal(1)) {
    throw ProviderDomainError("Euler-product provider has no value at Re(z) = " + z.re().to_string(6) +
                              "; continuation data is required");
  }
}

ExtComplex library_log_g1(const SurfaceContext& ctx, const ExtComplex& z) {
  try {
    return log_g1(ctx.orbifold(), z);
  } catch (const DomainError& e) {
    throw ProviderDomainError(std::string("G1 factor unavailable: ") + e.what());
  }
}

ExtComplex library_gamma_factor(const SurfaceContext& ctx, const ExtComplex& z) {
  if (ctx.k() == 0) return ExtComplex(0);
  try {
    return log_gamma(z - ExtComplex(ratio(1, 2))) * ExtReal(ctx.k());
  } catch (const DomainError& e) {
    throw ProviderDomainError(std::string("Gamma factor unavailable: ") + e.what());
  }
}

// log of D_+(w) D_-(w) through the main formula
ExtComplex log_det_squared(const SurfaceContext& ctx, const ExtComplex& w, const ContinuationProvider& p) {
  const auto& c = ctx.coefficients();
  const auto& k = ctx.constants();
  ExtComplex zp = p.log_z(w) - p.log_g1(w) - p.log_gamma_factor(w);
  ExtComplex e = w * (ExtReal(2) * c.b1 - k.c1) +
                 ExtComplex(ExtReal(2) * c.b0 + ExtReal(ctx.k()) / ExtReal(2) * log(ExtReal(4) * const_pi()) - k.c2);
  return e + p.log_phi(w) + zp * ExtReal(2);
}

}  // namespace

ExtComplex EulerProductProvider::log_z(const ExtComplex& z) const {
  require_euler_domain(z);
  return log_selberg(ctx_, z).value;
}

ExtComplex EulerProductProvider::log_phi(const ExtComplex& z) const {
  require_euler_domain(z);
  return scattering_log_phi(ctx_.scattering(), z);
}

ExtComplex EulerProductProvider::log_g1(const ExtComplex& z) const { return library_log_g1(ctx_, z); }

ExtComplex EulerProductProvider::log_gamma_factor(const ExtComplex& z) const { return library_gamma_factor(ctx_, z); }

TabulatedProvider::TabulatedProvider(const SurfaceContext& ctx, std::vector<Row> rows, ExtReal match_tolerance)
    : ctx_(ctx), rows_(std::move(rows)), tolerance_(std::move(match_tolerance)) {}

const TabulatedProvider::Row& TabulatedProvider::find(const ExtComplex& z) const {
  for (const auto& r : rows_) {
    if (abs(r.z - z) <= tolerance_) return r;
  }
  throw ProviderDomainError("no tabulated continuation value at z = " + z.to_string(12));
}

ExtComplex TabulatedProvider::log_z(const ExtComplex& z) const { return find(z).log_z; }

ExtComplex TabulatedProvider::log_phi(const ExtComplex& z) const { return find(z).log_phi; }

ExtComplex TabulatedProvider::log_g1(const ExtComplex& z) const { return library_log_g1(ctx_, z); }

ExtComplex TabulatedProvider::log_gamma_factor(const ExtComplex& z) const { return library_gamma_factor(ctx_, z); }

std::vector<TabulatedProvider::Row> read_continuation_table(std::istream& in) {
  std::vector<TabulatedProvider::Row> rows;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string f[6], extra;
    for (auto& x : f) {
      if (!(ss >> x)) throw ValidationError("continuation table line " + std::to_string(lineno) + ": expected 6 fields");
    }
    if (ss >> extra) throw ValidationError("continuation table line " + std::to_string(lineno) + ": expected 6 fields");
    try {
      rows.push_back({ExtComplex(ExtReal(f[0]), ExtReal(f[1])), ExtComplex(ExtReal(f[2]), ExtReal(f[3])),
                      ExtComplex(ExtReal(f[4]), ExtReal(f[5]))});
    } catch (const ValidationError&) {
      throw ValidationError("continuation table line " + std::to_string(lineno) + ": malformed number");
    }
  }
  return rows;
}

FunctionProvider::FunctionProvider(Fn log_z, Fn log_phi, Fn log_g1, Fn log_gamma_factor)
    : log_z_(std::move(log_z)),
      log_phi_(std::move(log_phi)),
      log_g1_(std::move(log_g1)),
      log_gamma_factor_(std::move(log_gamma_factor)) {}

ExtComplex functional_symmetry_residual(const SurfaceContext& ctx, const ExtComplex& z,
                                        const ContinuationProvider& provider) {
  const auto& c = ctx.coefficients();
  ExtReal big_k = ExtReal(2) * c.b1 - ctx.constants().c1 +
                  ExtReal(2) * log(a_chi(ctx.orbifold().rep(), ctx.orbifold().signature().cusps));
  ExtComplex w = ExtComplex(1) - z;
  ExtComplex left = log_det_squared(ctx, z, provider) - z * big_k;
  ExtComplex right = log_det_squared(ctx, w, provider) - w * big_k;
  return exp(left) - exp(right);
}

}  // namespace hypdet
