#pragma once

#include <iosfwd>
#include <variant>
#include <vector>

#include "hypdet/numerics/ext_complex.hpp"
#include "hypdet/zetas/selberg.hpp"

namespace hypdet {

/// One term a u^{-2s} of the normalized Dirichlet series H(s).
struct DirichletTerm {
  ExtReal u;
  ExtComplex a;
};

/// phi(s) = (sqrt(pi) Gamma(s - 1/2) / Gamma(s))^k e^{c1 s + c2} H(s) with
/// H(s) = 1 + sum a_n u_n^{-2s}, u_n > 1 strictly increasing.  The supplied
/// terms are taken to be the whole series.
struct GenericScattering {
  int k = 0;
  ExtReal c1;
  ExtReal c2;
  std::vector<DirichletTerm> terms;
};

/// PSL(2, Z): phi(s) = sqrt(pi) Gamma(s - 1/2) zeta(2s - 1) / (Gamma(s) zeta(2s)).
struct ModularScattering {};

using ScatteringModel = std::variant<GenericScattering, ModularScattering>;

struct ScatteringConstants {
  int k = 0;
  ExtReal c1;
  ExtReal c2;
};

/// Validates the Generic invariants (u_n > 1, strictly increasing, k >= 0).
void validate(const GenericScattering& model);

/// (k, c1, c2) of the model.
ScatteringConstants scattering_constants(const ScatteringModel& model);

/// phi(s).  Generic needs Re s > 1 (ConvergenceError otherwise); the modular
/// closed form is meromorphic on C.  PoleError at poles of phi.
SeriesValue scattering_phi(const ScatteringModel& model, const ExtComplex& s);

/// A logarithm of phi(s), assembled from the logarithms of its factors.
/// Exponentiates to scattering_phi; the branch is not continuous in s.
ExtComplex scattering_log_phi(const ScatteringModel& model, const ExtComplex& s);

/// Reads "k c1 c2" followed by lines "u Re(a) Im(a)".
GenericScattering read_generic_scattering(std::istream& in);

}  // namespace hypdet
