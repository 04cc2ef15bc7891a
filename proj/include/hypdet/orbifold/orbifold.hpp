#pragma once

#include <gmpxx.h>

#include <vector>

#include "hypdet/numerics/ext_real.hpp"

namespace hypdet {

/// Signature of a cofinite Fuchsian group: genus, number of cusps and the
/// orders of the inequivalent elliptic classes.
struct Signature {
  int genus = 0;
  int cusps = 1;
  std::vector<int> elliptic_orders;

  /// Number of elliptic classes.
  int elliptic_count() const { return static_cast<int>(elliptic_orders.size()); }

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Spectral data of the representation at one cusp: dimension of the fixed
/// subspace and the angles of the remaining eigenvalues e^{2 pi i beta}.
struct CuspData {
  int fixed_dim = 0;
  std::vector<mpq_class> angles;

  friend bool operator==(const CuspData&, const CuspData&) = default;
};

/// Local spectral data of a unitary representation.
///
/// `elliptic_exponents[r][j]` is q(R)_j for elliptic class r: the
/// eigenvalues of chi(R) are exp(2 pi i q / d_R).  `cusps[j]` supplies k_j
/// and the h - k_j angles beta_{jp} in (0, 1).
struct RepresentationData {
  int dim = 1;
  std::vector<std::vector<int>> elliptic_exponents;
  std::vector<CuspData> cusps;

  /// Trivial representation (h = 1) for a given signature.
  static RepresentationData trivial(const Signature& sig);

  friend bool operator==(const RepresentationData&, const RepresentationData&) = default;
};

/// Signature together with matching representation data.  The constructor
/// validates every invariant and throws ValidationError or SignatureError.
class OrbifoldData {
 public:
  OrbifoldData(Signature sig, RepresentationData rep);

  /// PSL(2, Z): genus 0, one cusp, elliptic orders 2 and 3, trivial chi.
  static OrbifoldData modular();

  const Signature& signature() const { return sig_; }
  const RepresentationData& rep() const { return rep_; }
  int dim() const { return rep_.dim; }

  /// True for the modular signature with the trivial representation.
  bool is_modular_trivial() const;

  friend bool operator==(const OrbifoldData&, const OrbifoldData&) = default;

 private:
  Signature sig_;
  RepresentationData rep_;
};

/// vol(M) / (2 pi) = 2g - 2 + c + sum (1 - 1/d_R), exact.
mpq_class volume_over_2pi(const Signature& sig);

/// Hyperbolic area by the Gauss-Bonnet formula.
/// Throws SignatureError when it is not positive.
ExtReal volume(const Signature& sig);

/// Total dimension of the cusp-fixed subspaces, k = sum k_j.
int degree_of_singularity(const RepresentationData& rep);

/// a(chi) = (2^{h c} prod_j prod_{p > k_j} sin(pi beta_{jp}))^{-1}.
ExtReal a_chi(const RepresentationData& rep, int cusps);

}  // namespace hypdet
