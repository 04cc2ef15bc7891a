#include "hypdet/orbifold/orbifold.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hypdet/errors.hpp"

namespace hypdet {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw ValidationError(msg);
}

}  // namespace

RepresentationData RepresentationData::trivial(const Signature& sig) {
  RepresentationData rep;
  rep.dim = 1;
  rep.elliptic_exponents.assign(sig.elliptic_orders.size(), std::vector<int>{0});
  rep.cusps.assign(static_cast<std::size_t>(std::max(sig.cusps, 0)), CuspData{1, {}});
  return rep;
}

OrbifoldData::OrbifoldData(Signature sig, RepresentationData rep) : sig_(std::move(sig)), rep_(std::move(rep)) {
  require(sig_.genus >= 0, "genus must be non-negative");
  require(sig_.cusps >= 1, "at least one cusp is required");
  for (int d : sig_.elliptic_orders) require(d >= 2, "elliptic orders must be at least 2");
  require(rep_.dim >= 1, "representation dimension must be positive");
  require(rep_.elliptic_exponents.size() == sig_.elliptic_orders.size(),
          "one exponent list per elliptic class is required");
  for (std::size_t r = 0; r < sig_.elliptic_orders.size(); ++r) {
    const auto& ex = rep_.elliptic_exponents[r];
    require(static_cast<int>(ex.size()) == rep_.dim,
            "elliptic class " + std::to_string(r) + ": expected " + std::to_string(rep_.dim) + " exponents");
    for (int q : ex) {
      require(q >= 0 && q < sig_.elliptic_orders[r],
              "elliptic class " + std::to_string(r) + ": exponent " + std::to_string(q) + " outside [0, d)");
    }
  }
  require(static_cast<int>(rep_.cusps.size()) == sig_.cusps, "one cusp record per cusp is required");
  for (std::size_t j = 0; j < rep_.cusps.size(); ++j) {
    const auto& c = rep_.cusps[j];
    require(c.fixed_dim >= 0 && c.fixed_dim <= rep_.dim, "cusp " + std::to_string(j) + ": fixed_dim outside [0, h]");
    require(static_cast<int>(c.angles.size()) == rep_.dim - c.fixed_dim,
            "cusp " + std::to_string(j) + ": expected h - fixed_dim angles");
    for (const auto& b : c.angles) require(b > 0 && b < 1, "cusp " + std::to_string(j) + ": angles must lie in (0, 1)");
  }
  if (volume_over_2pi(sig_) <= 0) throw SignatureError("signature has non-positive hyperbolic area");
}

OrbifoldData OrbifoldData::modular() {
  Signature sig{0, 1, {2, 3}};
  return {sig, RepresentationData::trivial(sig)};
}

bool OrbifoldData::is_modular_trivial() const {
  Signature m{0, 1, {2, 3}};
  return sig_ == m && rep_ == RepresentationData::trivial(m);
}

mpq_class volume_over_2pi(const Signature& sig) {
  mpq_class v(2 * sig.genus - 2 + sig.cusps);
  for (int d : sig.elliptic_orders) v += mpq_class(d - 1, d);
  v.canonicalize();
  return v;
}

ExtReal volume(const Signature& sig) {
  mpq_class v = volume_over_2pi(sig);
  if (v <= 0) throw SignatureError("signature has non-positive hyperbolic area");
  ExtReal r;
  mpfr_set_q(r.get(), v.get_mpq_t(), MPFR_RNDN);
  return ExtReal(2) * const_pi() * r;
}

int degree_of_singularity(const RepresentationData& rep) {
  int k = 0;
  for (const auto& c : rep.cusps) k += c.fixed_dim;
  return k;
}

ExtReal a_chi(const RepresentationData& rep, int cusps) {
  ExtReal prod = ldexp(ExtReal(1), static_cast<long>(rep.dim) * cusps);
  for (const auto& c : rep.cusps) {
    for (const auto& b : c.angles) {
      ExtReal br;
      mpfr_set_q(br.get(), b.get_mpq_t(), MPFR_RNDN);
      prod *= sin(const_pi() * br);
    }
  }
  return ExtReal(1) / prod;
}

}  // namespace hypdet
