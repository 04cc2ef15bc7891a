#include "hypdet/cli/verify.hpp"

#include <functional>
#include <random>

#include "hypdet/elliptic/elliptic.hpp"
#include "hypdet/errors.hpp"
#include "hypdet/numerics/bernoulli.hpp"
#include "hypdet/numerics/special_functions.hpp"
#include "hypdet/regdet/regdet.hpp"
#include "hypdet/regdet/symmetry.hpp"
#include "hypdet/zetas/scattering.hpp"

namespace hypdet::cli {

namespace {

using Checks = std::vector<CheckResult>;

ExtReal pow2(long e) { return ldexp(ExtReal(1), e); }

CheckResult measured(std::string suite, std::string name, ExtReal value, ExtReal tol) {
  bool ok = value.is_finite() && value <= tol;
  return {std::move(suite), std::move(name), std::move(value), std::move(tol), ok, ""};
}

// Runs `body`; an exception is reported as a failed check rather than aborting the suite.
void guarded(Checks& out, const std::string& suite, const std::string& name, const std::function<CheckResult()>& body) {
  try {
    out.push_back(body());
  } catch (const std::exception& e) {
    out.push_back({suite, name, ExtReal(0), ExtReal(0), false, e.what()});
  }
}

OrbifoldData sample_orbifold(std::mt19937_64& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (;;) {
    Signature sig;
    sig.genus = pick(0, 4);
    sig.cusps = pick(1, 3);
    int e = pick(0, 4);
    for (int i = 0; i < e; ++i) sig.elliptic_orders.push_back(pick(2, 12));
    if (volume_over_2pi(sig) <= 0) continue;
    RepresentationData rep;
    rep.dim = pick(1, 3);
    for (int d : sig.elliptic_orders) {
      std::vector<int> ex;
      for (int j = 0; j < rep.dim; ++j) ex.push_back(pick(0, d - 1));
      rep.elliptic_exponents.push_back(ex);
    }
    for (int j = 0; j < sig.cusps; ++j) {
      CuspData c;
      c.fixed_dim = pick(0, rep.dim);
      for (int p = c.fixed_dim; p < rep.dim; ++p) {
        int den = pick(2, 12);
        c.angles.emplace_back(pick(1, den - 1), den);
        c.angles.back().canonicalize();
      }
      rep.cusps.push_back(c);
    }
    return {sig, rep};
  }
}

ExtReal max_multiplicity_gap(const OrbifoldData& orb, long n_max) {
  ExtReal worst(0);
  for (long n = 0; n <= n_max; ++n) {
    ExtReal gap = abs(m_n_spectral(orb, n) - ExtReal(m_n_floor(orb, n)));
    worst = max(worst, gap);
  }
  return worst;
}

long totient(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

std::vector<ExtComplex> grid(int count, double re_lo, double re_hi, double im_max, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(re_lo, re_hi), im(-im_max, im_max);
  std::vector<ExtComplex> pts;
  for (int i = 0; i < count; ++i) pts.emplace_back(re(rng), im(rng));
  return pts;
}

Checks elliptic_suite() {
  const std::string s = "elliptic";
  Checks out;
  ExtReal tol = ExtReal(10) * pow2(-working_precision() / 2);
  guarded(out, s, "multiplicities, modular signature, all exponents, n <= 200", [&] {
    ExtReal worst(0);
    for (int q2 = 0; q2 < 2; ++q2) {
      for (int q3 = 0; q3 < 3; ++q3) {
        Signature sig{0, 1, {2, 3}};
        RepresentationData rep = RepresentationData::trivial(sig);
        rep.elliptic_exponents = {{q2}, {q3}};
        worst = max(worst, max_multiplicity_gap(OrbifoldData(sig, rep), 200));
      }
    }
    return measured(s, "multiplicities, modular signature, all exponents, n <= 200", worst, tol);
  });
  guarded(out, s, "multiplicities, 40 sampled orbifolds, n <= 60", [&] {
    std::mt19937_64 rng(1009);
    ExtReal worst(0);
    for (int i = 0; i < 40; ++i) worst = max(worst, max_multiplicity_gap(sample_orbifold(rng), 60));
    return measured(s, "multiplicities, 40 sampled orbifolds, n <= 60", worst, tol);
  });
  guarded(out, s, "finite trigonometric sum, d <= 16, n <= 60", [&] {
    ExtReal worst(0);
    for (int d = 2; d <= 16; ++d) {
      for (int q = 0; q < d; ++q) {
        for (long n = 0; n <= 60; ++n) worst = max(worst, abs(trig_sum_brute(n, q, d) - ExtComplex(trig_sum_closed(n, q, d))));
      }
    }
    return measured(s, "finite trigonometric sum, d <= 16, n <= 60", worst, pow2(16 - working_precision()));
  });
  guarded(out, s, "counting multiples, d <= 16, n <= 200", [&] {
    long bad = 0;
    for (int d = 2; d <= 16; ++d) {
      for (int q = 0; q < d; ++q) {
        for (long n = 0; n <= 200; ++n) bad += count_multiples(n, q, d) != g_count(n, q, d);
      }
    }
    return measured(s, "counting multiples, d <= 16, n <= 200", ExtReal(bad), ExtReal(0));
  });
  return out;
}

Checks special_suite() {
  const std::string s = "special";
  Checks out;
  const long bits = working_precision();
  guarded(out, s, "Bernoulli recursion", [&] {
    auto& table = BernoulliTable::instance();
    table.get(120);
    long bad = table.first_recursion_failure();
    CheckResult r = measured(s, "Bernoulli recursion", ExtReal(bad < 0 ? 0 : 1), ExtReal(0));
    if (bad >= 0) r.detail = "first failing index " + std::to_string(bad);
    return r;
  });
  guarded(out, s, "Bernoulli numbers against zeta(2n)", [&] {
    ExtReal worst(0);
    ExtReal two_pi = ExtReal(2) * const_pi();
    ExtReal fact(1);
    for (unsigned long n = 1; n <= 50; ++n) {
      fact *= ExtReal(static_cast<long>(2 * n - 1)) * ExtReal(static_cast<long>(2 * n));
      ExtReal z;
      mpfr_zeta_ui(z.get(), 2 * n, MPFR_RNDN);
      ExtReal b = ExtReal(2) * fact * z / pow(two_pi, static_cast<long>(2 * n));
      if (n % 2 == 0) b = -b;
      worst = max(worst, abs(to_ext(bernoulli(2 * n)) / b - ExtReal(1)));
    }
    return measured(s, "Bernoulli numbers against zeta(2n)", worst, pow2(16 - bits));
  });
  auto pts = grid(40, 0.1, 50.0, 50.0, 7);
  ExtReal tol = pow2(20 - bits);
  guarded(out, s, "log Gamma recursion", [&] {
    ExtReal worst(0);
    for (const auto& z : pts) worst = max(worst, abs(log_gamma(z + ExtComplex(1)) - log(z) - log_gamma(z)));
    return measured(s, "log Gamma recursion", worst, tol);
  });
  guarded(out, s, "log Barnes G recursion", [&] {
    ExtReal worst(0);
    for (const auto& z : pts) worst = max(worst, abs(log_barnes_g(z + ExtComplex(1)) - log_gamma(z) - log_barnes_g(z)));
    return measured(s, "log Barnes G recursion", worst, tol);
  });
  guarded(out, s, "Legendre duplication", [&] {
    ExtReal worst(0);
    ExtReal two_pi = ExtReal(2) * const_pi();
    for (const auto& z : pts) {
      ExtComplex lhs = log_gamma(z) + log_gamma(z + ExtComplex(ratio(1, 2)));
      ExtComplex rhs = (ExtComplex(1) - ExtReal(2) * z) * const_log2() + ExtComplex(log(const_pi()) / ExtReal(2)) +
                       log_gamma(ExtReal(2) * z);
      ExtComplex d = lhs - rhs;
      ExtReal k = round(d.im() / two_pi);
      worst = max(worst, abs(d - ExtComplex(ExtReal(0), k * two_pi)));
    }
    return measured(s, "Legendre duplication", worst, tol);
  });
  guarded(out, s, "log Gamma against MPFR on the real axis", [&] {
    ExtReal worst(0);
    for (double x : {0.25, 1.5, 3.75, 11.0, 47.5}) {
      ExtReal ref;
      ExtReal xx(x);
      mpfr_lngamma(ref.get(), xx.get(), MPFR_RNDN);
      worst = max(worst, abs(log_gamma(ExtComplex(xx)).re() - ref));
    }
    return measured(s, "log Gamma against MPFR on the real axis", worst, tol);
  });
  guarded(out, s, "Hurwitz zeta at a = 1 against MPFR zeta", [&] {
    ExtReal worst(0);
    for (double x : {2.5, 3.0, 7.25}) {
      ExtReal ref;
      ExtReal xx(x);
      mpfr_zeta(ref.get(), xx.get(), MPFR_RNDN);
      worst = max(worst, abs(hurwitz_zeta(ExtComplex(xx), ExtComplex(1)).re() - ref) / ref);
    }
    return measured(s, "Hurwitz zeta at a = 1 against MPFR zeta", worst, tol);
  });
  return out;
}

ExtReal scattering_tolerance() { return max(ExtReal("1e-25"), pow2(40 - working_precision())); }

Checks scattering_suite() {
  const std::string s = "scattering";
  Checks out;
  ScatteringModel mod = ModularScattering{};
  guarded(out, s, "modular phi(s) phi(1-s) = 1 on 20 points", [&] {
    ExtReal worst(0);
    for (const auto& p : grid(20, -1.0, 2.0, 12.0, 41)) {
      worst = max(worst, abs(scattering_phi(mod, p).value * scattering_phi(mod, ExtComplex(1) - p).value - ExtComplex(1)));
    }
    return measured(s, "modular phi(s) phi(1-s) = 1 on 20 points", worst, scattering_tolerance());
  });
  guarded(out, s, "modular phi(2) = 45 zeta(3) / pi^3", [&] {
    ExtReal z3;
    mpfr_zeta_ui(z3.get(), 3, MPFR_RNDN);
    ExtReal pi = const_pi();
    ExtReal ref = ExtReal(45) * z3 / (pi * pi * pi);
    return measured(s, "modular phi(2) = 45 zeta(3) / pi^3", abs(scattering_phi(mod, ExtComplex(2)).value - ExtComplex(ref)),
                    scattering_tolerance());
  });
  guarded(out, s, "modular phi(1/2) = -1", [&] {
    return measured(s, "modular phi(1/2) = -1", abs(scattering_phi(mod, ExtComplex(ratio(1, 2))).value + ExtComplex(1)),
                    ExtReal(0));
  });
  guarded(out, s, "generic phi equals its Dirichlet product", [&] {
    GenericScattering g{1, ExtReal(0), ExtReal(0), {}};
    for (long n = 2; n <= 400; ++n) g.terms.push_back({ExtReal(n), ExtComplex(totient(n))});
    ExtComplex p(6.0, 1.0);
    ExtReal d = relative_difference(scattering_phi(g, p).value, scattering_phi(mod, p).value);
    return measured(s, "generic phi equals its Dirichlet product", d, ExtReal("1e-12"));
  });
  return out;
}

Checks regdet_suite() {
  const std::string s = "regdet";
  Checks out;
  SurfaceContext mod = SurfaceContext::modular(ExtReal(1e4));
  ExtReal tol = pow2(-working_precision() / 2);
  auto pts = grid(6, 1.51, 5.99, 5.0, 71);
  guarded(out, s, "det^2 = D+ D- on 6 points", [&] {
    ExtReal worst(0);
    for (const auto& z : pts) worst = max(worst, relative_difference(det_squared(mod, z), d_plus(mod, z) * d_minus(mod, z)));
    return measured(s, "det^2 = D+ D- on 6 points", worst, tol);
  });
  guarded(out, s, "phi recovered from D+ and D- on 6 points", [&] {
    ExtReal worst(0);
    for (const auto& z : pts) {
      worst = max(worst, relative_difference(phi_from_superzeta(mod, z), scattering_phi(mod.scattering(), z).value));
    }
    return measured(s, "phi recovered from D+ and D- on 6 points", worst, tol);
  });
  guarded(out, s, "superzeta values at 0 differ by k/2", [&] {
    std::mt19937_64 rng(2003);
    long bad = 0;
    std::vector<OrbifoldData> orbs = {OrbifoldData::modular()};
    for (int i = 0; i < 20; ++i) orbs.push_back(sample_orbifold(rng));
    for (const auto& orb : orbs) {
      int k = degree_of_singularity(orb.rep());
      QuadraticPolynomial a = superzeta_at_zero(orb, k, Completion::plus);
      QuadraticPolynomial b = superzeta_at_zero(orb, k, Completion::minus);
      bad += !(a.c2 == b.c2 && a.c1 == b.c1 && a.c0 - b.c0 == mpq_class(k) / 2);
    }
    return measured(s, "superzeta values at 0 differ by k/2", ExtReal(bad), ExtReal(0));
  });
  guarded(out, s, "symmetry checker on a symmetric provider", [&] {
    RepresentationData rep;
    rep.dim = 1;
    rep.cusps = {CuspData{0, {mpq_class(1, 6)}}};
    OrbifoldData orb(Signature{1, 1, {}}, rep);
    SurfaceContext ctx(orb, std::make_shared<ModularGeodesicSource>(), GenericScattering{0, ExtReal(0), ExtReal(0), {}},
                       ExtReal(1e3));
    auto zero = [](const ExtComplex&) { return ExtComplex(0); };
    FunctionProvider synthetic(
        [](const ExtComplex& w) {
          ExtComplex u = w - ExtComplex(ratio(1, 2));
          return u * u;
        },
        zero, zero, zero);
    ExtReal worst(0);
    for (const auto& z : {ExtComplex(0.75, 0.25), ExtComplex(2.0, -1.5), ExtComplex(-3.25, 0.5)}) {
      ExtComplex u = z - ExtComplex(ratio(1, 2));
      worst = max(worst, abs(functional_symmetry_residual(ctx, z, synthetic)) / abs(exp(ExtComplex(2) * u * u)));
    }
    return measured(s, "symmetry checker on a symmetric provider", worst, pow2(16 - working_precision()));
  });
  guarded(out, s, "symmetry checker refuses the Euler product", [&] {
    EulerProductProvider euler(mod);
    try {
      functional_symmetry_residual(mod, ExtComplex(3), euler);
    } catch (const ProviderDomainError&) {
      return measured(s, "symmetry checker refuses the Euler product", ExtReal(0), ExtReal(0));
    }
    CheckResult r = measured(s, "symmetry checker refuses the Euler product", ExtReal(1), ExtReal(0));
    r.detail = "no ProviderDomainError raised";
    return r;
  });
  return out;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"elliptic", "special", "scattering", "regdet"};
  return names;
}

std::vector<CheckResult> run_verify_suite(std::string_view suite) {
  if (suite == "all") {
    std::vector<CheckResult> all;
    for (const auto& name : verify_suite_names()) {
      auto part = run_verify_suite(name);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  if (suite == "elliptic") return elliptic_suite();
  if (suite == "special") return special_suite();
  if (suite == "scattering") return scattering_suite();
  if (suite == "regdet") return regdet_suite();
  throw ValidationError("unknown verification suite '" + std::string(suite) + "'");
}

}  // namespace hypdet::cli
