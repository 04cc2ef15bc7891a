#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "hypdet/regdet/regdet.hpp"

namespace hypdet {

/// Values of the constituents of D_+ D_- at arbitrary points.  Each method
/// throws ProviderDomainError where it has no value.
class ContinuationProvider {
 public:
  virtual ~ContinuationProvider() = default;
  virtual ExtComplex log_z(const ExtComplex& z) const = 0;
  virtual ExtComplex log_phi(const ExtComplex& z) const = 0;
  virtual ExtComplex log_g1(const ExtComplex& z) const = 0;
  /// k log Gamma(z - 1/2)
  virtual ExtComplex log_gamma_factor(const ExtComplex& z) const = 0;
};

/// The library's own evaluators: Euler product and scattering model, hence
/// usable only for Re z > 1.
class EulerProductProvider : public ContinuationProvider {
 public:
  explicit EulerProductProvider(const SurfaceContext& ctx) : ctx_(ctx) {}
  ExtComplex log_z(const ExtComplex& z) const override;
  ExtComplex log_phi(const ExtComplex& z) const override;
  ExtComplex log_g1(const ExtComplex& z) const override;
  ExtComplex log_gamma_factor(const ExtComplex& z) const override;

 private:
  const SurfaceContext& ctx_;
};

/// Externally continued values of log Z and log phi at listed points; the
/// Gamma-type factors come from the library.
class TabulatedProvider : public ContinuationProvider {
 public:
  struct Row {
    ExtComplex z;
    ExtComplex log_z;
    ExtComplex log_phi;
  };
  TabulatedProvider(const SurfaceContext& ctx, std::vector<Row> rows, ExtReal match_tolerance);
  ExtComplex log_z(const ExtComplex& z) const override;
  ExtComplex log_phi(const ExtComplex& z) const override;
  ExtComplex log_g1(const ExtComplex& z) const override;
  ExtComplex log_gamma_factor(const ExtComplex& z) const override;

 private:
  const Row& find(const ExtComplex& z) const;
  const SurfaceContext& ctx_;
  std::vector<Row> rows_;
  ExtReal tolerance_;
};

/// Reads lines "Re(z) Im(z) Re(logZ) Im(logZ) Re(logphi) Im(logphi)".
std::vector<TabulatedProvider::Row> read_continuation_table(std::istream& in);

/// Every constituent supplied by a callable.
class FunctionProvider : public ContinuationProvider {
 public:
  using Fn = std::function<ExtComplex(const ExtComplex&)>;
  FunctionProvider(Fn log_z, Fn log_phi, Fn log_g1, Fn log_gamma_factor);
  ExtComplex log_z(const ExtComplex& z) const override { return log_z_(z); }
  ExtComplex log_phi(const ExtComplex& z) const override { return log_phi_(z); }
  ExtComplex log_g1(const ExtComplex& z) const override { return log_g1_(z); }
  ExtComplex log_gamma_factor(const ExtComplex& z) const override { return log_gamma_factor_(z); }

 private:
  Fn log_z_, log_phi_, log_g1_, log_gamma_factor_;
};

/// e^{-K z} D_+(z) D_-(z) - e^{-K (1-z)} D_+(1-z) D_-(1-z) with
/// K = 2 b1 - c1 + 2 log a(chi), both products assembled from the provider.
ExtComplex functional_symmetry_residual(const SurfaceContext& ctx, const ExtComplex& z,
                                        const ContinuationProvider& provider);

}  // namespace hypdet
