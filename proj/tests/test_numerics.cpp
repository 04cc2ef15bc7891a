#include <doctest.h>

#include "hypdet/errors.hpp"
#include "hypdet/numerics/bernoulli.hpp"
#include "hypdet/numerics/special_functions.hpp"
#include "test_support.hpp"

using namespace hypdet;
using hypdet::testing::complex_grid;
using hypdet::testing::mpfr_oracle;
using hypdet::testing::pow2;

namespace {

ExtReal two_pi() { return ExtReal(2) * const_pi(); }

}  // namespace

TEST_CASE("working precision scopes") {
  CHECK(working_precision() == kDefaultPrecisionBits);
  {
    WorkingPrecision wp(128);
    CHECK(ExtReal(1).precision() == 128);
    {
      GuardBits g(10);
      CHECK(working_precision() == 138);
    }
    CHECK(working_precision() == 128);
  }
  CHECK(working_precision() == 256);
  CHECK_THROWS_AS(WorkingPrecision(32), PrecisionError);
  CHECK_THROWS_AS(ExtReal("abc"), ValidationError);
  CHECK(ExtReal("0.25") == ratio(1, 4));
}

TEST_CASE("complex elementary functions stay on the principal branch") {
  ExtComplex m1(-1.0);
  CHECK(abs(log(m1) - i_pi()) < pow2(-250));
  ExtComplex below(ExtReal(-1), ExtReal(-1e-300));
  CHECK(log(below).im() < ExtReal(0));
  CHECK(abs(sqrt(m1) - ExtComplex(0.0, 1.0)) < pow2(-250));
  ExtComplex z(0.3, -1.7);
  CHECK(abs(exp(log(z)) - z) < pow2(-240));
  CHECK(abs(pow(z, 5L) - exp(ExtReal(5) * log(z))) < pow2(-240));
  CHECK_THROWS_AS(log(ExtComplex(0)), PoleError);
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == mpq_class(-1, 2));
  CHECK(bernoulli(2) == mpq_class(1, 6));
  CHECK(bernoulli(4) == mpq_class(-1, 30));
  CHECK(bernoulli(12) == mpq_class(-691, 2730));
  CHECK(bernoulli(7) == 0);
  auto snap = BernoulliTable::instance().snapshot(120);
  CHECK(snap.size() >= 121);
  CHECK(BernoulliTable::instance().first_recursion_failure() == -1);

  // independent oracle: zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!)
  for (int k = 1; k <= 10; ++k) {
    ExtReal fact(1);
    for (int i = 2; i <= 2 * k; ++i) fact *= ExtReal(i);
    ExtReal b = to_ext(bernoulli(static_cast<std::size_t>(2 * k)));
    ExtReal z = abs(b) * pow(two_pi(), static_cast<long>(2 * k)) / (ExtReal(2) * fact);
    ExtReal oracle;
    mpfr_zeta_ui(oracle.get(), static_cast<unsigned long>(2 * k), MPFR_RNDN);
    CHECK(abs(z - oracle) < pow2(-240));
  }
}

TEST_CASE("log_gamma basic values and oracle") {
  CHECK(abs(log_gamma(ExtComplex(1))) < pow2(-250));
  CHECK(abs(log_gamma(ExtComplex(5)) - ExtComplex(log(ExtReal(24)))) < pow2(-245));
  CHECK(abs(log_gamma(ExtComplex(0.5)) - ExtComplex(log(const_pi()) / ExtReal(2))) < pow2(-245));
  CHECK_THROWS_AS(log_gamma(ExtComplex(0)), PoleError);
  CHECK_THROWS_AS(log_gamma(ExtComplex(-3)), PoleError);

  for (double x : {0.01, 0.7, 3.25, 17.5, 99.9, 1234.5}) {
    ExtReal xr(x);
    ExtReal oracle = mpfr_oracle(mpfr_lngamma, xr);
    CHECK(abs(log_gamma(ExtComplex(xr)).re() - oracle) < pow2(-240) * max(ExtReal(1), abs(oracle)));
  }
  // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
  for (const auto& z : complex_grid(10, -3.0, 3.0, 4.0, 11)) {
    ExtComplex lhs = exp(log_gamma(z) + log_gamma(ExtComplex(1) - z));
    ExtComplex rhs = ExtComplex(const_pi()) / sin(z * const_pi());
    CHECK(relative_difference(lhs, rhs) < pow2(-230));
  }
}

TEST_CASE("Gamma and Barnes recursion and duplication on the standard grid") {
  const ExtReal tol = pow2(20 - working_precision());
  for (const auto& z : complex_grid(100, 0.1, 50.0, 50.0)) {
    ExtComplex lg = log_gamma(z);
    ExtComplex r1 = log_gamma(z + ExtComplex(1)) - log(z) - lg;
    CHECK(abs(r1) < tol);
    ExtComplex r2 = log_barnes_g(z + ExtComplex(1)) - lg - log_barnes_g(z);
    CHECK(abs(r2) < tol);
    // log Gamma(z) + log Gamma(z+1/2) = (1-2z) log 2 + log(pi)/2 + log Gamma(2z), up to 2 pi i k
    ExtComplex lhs = lg + log_gamma(z + ExtComplex(0.5));
    ExtComplex rhs = (ExtComplex(1) - ExtReal(2) * z) * const_log2() + ExtComplex(log(const_pi()) / ExtReal(2)) +
                     log_gamma(ExtReal(2) * z);
    ExtComplex d = lhs - rhs;
    ExtReal k = round(d.im() / two_pi());
    CHECK(abs(d - ExtComplex(ExtReal(0), k * two_pi())) < tol);
  }
}

TEST_CASE("Barnes G special values") {
  CHECK(abs(log_barnes_g(ExtComplex(1))) < pow2(-245));
  CHECK(abs(log_barnes_g(ExtComplex(2))) < pow2(-245));
  CHECK(abs(log_barnes_g(ExtComplex(4)) - ExtComplex(const_log2())) < pow2(-245));
  // G(1/2) = 2^{1/24} e^{1/8} pi^{-1/4} A^{-3/2}, log A = 1/12 - zeta'(-1)
  ExtReal log_a = ratio(1, 12) - zeta_prime_minus_one();
  ExtReal expected = const_log2() / ExtReal(24) + ratio(1, 8) - log(const_pi()) / ExtReal(4) - ratio(3, 2) * log_a;
  CHECK(abs(log_barnes_g(ExtComplex(0.5)) - ExtComplex(expected)) < pow2(-240));
  try {
    log_barnes_g(ExtComplex(-2));
    CHECK(false);
  } catch (const ZeroError& e) {
    CHECK(e.order() == 3);
  }
  try {
    log_barnes_g(ExtComplex(0));
    CHECK(false);
  } catch (const ZeroError& e) {
    CHECK(e.order() == 1);
  }
  // two independent shift paths: evaluate G(3.5) directly and via G(2.5) Gamma(2.5)
  ExtComplex a = log_barnes_g(ExtComplex(3.5));
  ExtComplex b = log_barnes_g(ExtComplex(2.5)) + log_gamma(ExtComplex(2.5));
  CHECK(abs(a - b) < pow2(-240));
}

TEST_CASE("zeta'(-1)") {
  ExtReal ref("-0.165421143700450929213919660242780642764036380335201783666522");
  CHECK(abs(zeta_prime_minus_one() - ref) < ExtReal(1e-46));
  // oracle: central difference of riemann_zeta with Richardson extrapolation
  ExtReal fd;
  {
    GuardBits g(200);
    ExtReal h = pow2(-working_precision() / 6);
    auto cd = [](const ExtReal& hh) {
      ExtComplex up = riemann_zeta(ExtComplex(ExtReal(-1) + hh));
      ExtComplex dn = riemann_zeta(ExtComplex(ExtReal(-1) - hh));
      return (up.re() - dn.re()) / (ExtReal(2) * hh);
    };
    ExtReal d1 = cd(h);
    ExtReal d2 = cd(h / ExtReal(2));
    fd = (ExtReal(4) * d2 - d1) / ExtReal(3);
  }
  CHECK(abs(fd - zeta_prime_minus_one()) < pow2(-200));
}

TEST_CASE("Hurwitz zeta") {
  ExtReal pi2 = const_pi() * const_pi() / ExtReal(6);
  CHECK(abs(hurwitz_zeta(ExtComplex(2), ExtComplex(1)) - ExtComplex(pi2)) < pow2(-245));
  ExtComplex s(3), z(1.7);
  CHECK(abs(hurwitz_zeta(s, z) - hurwitz_zeta(s, z + ExtComplex(1)) - pow(z, -3L)) < pow2(-245));
  CHECK_THROWS_AS(hurwitz_zeta(ExtComplex(1), ExtComplex(2)), PoleError);
  CHECK_THROWS_AS(hurwitz_zeta(ExtComplex(2), ExtComplex(-1.5)), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(ExtComplex(2), ExtComplex(0)), DomainError);

  // telescoping at complex arguments
  for (const auto& p : complex_grid(8, 0.3, 4.0, 3.0, 3)) {
    ExtComplex sv = ExtComplex(ExtReal(-1.5), ExtReal(0)) + p;
    ExtComplex a = p;
    for (int n : {1, 7, 20}) {
      ExtComplex direct;
      for (int k = 0; k < n; ++k) direct += exp(-(sv * log(a + ExtComplex(ExtReal(k)))));
      ExtComplex diff = hurwitz_zeta(sv, a) - hurwitz_zeta(sv, a + ExtComplex(ExtReal(n)));
      CHECK(relative_difference(diff, direct) < pow2(-230));
    }
  }

  // derivative at 0: Lerch formula, and a numerical derivative of the sum itself
  CHECK(abs(hurwitz_zeta_ds0(ExtComplex(2)) + ExtComplex(log(two_pi()) / ExtReal(2))) < pow2(-240));
  for (const auto& a : complex_grid(10, 0.5, 5.0, 2.0, 5)) {
    ExtComplex lerch = log_gamma(a) - ExtComplex(log(two_pi()) / ExtReal(2));
    CHECK(abs(hurwitz_zeta_ds0(a) - lerch) < pow2(-235));
    ExtComplex h(1e-8);
    ExtComplex fd = (hurwitz_zeta(h, a) - hurwitz_zeta(-h, a)) / ExtReal(2e-8);
    CHECK(abs(fd - lerch) < ExtReal(1e-14));
  }
  // derivative against mpfr_zeta for the Riemann case
  ExtComplex ds = hurwitz_zeta_ds(ExtComplex(3), ExtComplex(1));
  ExtReal h = pow2(-60);
  ExtReal up, dn;
  mpfr_zeta(up.get(), (ExtReal(3) + h).get(), MPFR_RNDN);
  mpfr_zeta(dn.get(), (ExtReal(3) - h).get(), MPFR_RNDN);
  CHECK(abs(ds.re() - (up - dn) / (ExtReal(2) * h)) < pow2(-110));
}

TEST_CASE("Riemann zeta") {
  ExtReal pi2 = const_pi() * const_pi() / ExtReal(6);
  CHECK(abs(riemann_zeta(ExtComplex(2)) - ExtComplex(pi2)) < pow2(-245));
  CHECK(abs(riemann_zeta(ExtComplex(0)) + ExtComplex(0.5)) < pow2(-245));
  CHECK(abs(riemann_zeta(ExtComplex(-1)) + ExtComplex(ratio(1, 12))) < pow2(-245));
  CHECK(riemann_zeta(ExtComplex(-4)) == ExtComplex(0));
  CHECK_THROWS_AS(riemann_zeta(ExtComplex(1)), PoleError);

  for (double x : {-7.5, -2.3, -0.9, 0.1, 0.6, 1.5, 3.0, 10.5, 40.0}) {
    ExtReal xr(x);
    ExtReal oracle = mpfr_oracle(mpfr_zeta, xr);
    CHECK(abs(riemann_zeta(ExtComplex(xr)).re() - oracle) < pow2(-235) * max(ExtReal(1), abs(oracle)));
  }
  // complex arguments: Borwein/functional equation against Euler-Maclaurin on zeta(s, 1)
  for (const auto& s : complex_grid(20, -4.0, 5.0, 30.0, 9)) {
    if (abs(s - ExtComplex(1)) < ExtReal(0.1)) continue;
    CHECK(relative_difference(riemann_zeta(s), hurwitz_zeta(s, ExtComplex(1))) < pow2(-220));
  }
  // first nontrivial zero
  ExtComplex rho(ExtReal(0.5), ExtReal("14.134725141734693790457251983562470270784257115699"));
  CHECK(abs(riemann_zeta(rho)) < ExtReal(1e-45));
}

TEST_CASE("precision doubling stability") {
  std::vector<ExtComplex> pts = {ExtComplex(2.5, 1.0), ExtComplex(0.3, -7.0), ExtComplex(13.0, 22.0)};
  for (const auto& p : pts) {
    ExtComplex lg, lb, hz, rz;
    {
      WorkingPrecision wp(128);
      ExtComplex q(ExtReal(p.re()), ExtReal(p.im()));
      lg = log_gamma(q);
      lb = log_barnes_g(q);
      hz = hurwitz_zeta(ExtComplex(2.5, 0.5), q);
      rz = riemann_zeta(q);
    }
    ExtReal tol128 = pow2(16 - 128);
    CHECK(relative_difference(lg, log_gamma(p)) < tol128);
    CHECK(relative_difference(lb, log_barnes_g(p)) < tol128);
    CHECK(relative_difference(hz, hurwitz_zeta(ExtComplex(2.5, 0.5), p)) < tol128);
    CHECK(relative_difference(rz, riemann_zeta(p)) < tol128);
  }
}

TEST_CASE("remainder bounds") {
  RemainderBound g = log_gamma_remainder(5);
  CHECK(g.decay_exponent == -9);
  CHECK(g.at(ExtReal(10)) > g.at(ExtReal(20)));
  // actual Stirling remainder after four terms at s = 10 is below the first omitted term
  ExtReal s(10);
  ExtReal series = ratio(1, 2) * log(two_pi()) + (s - ExtReal(0.5)) * log(s) - s;
  for (int j = 1; j <= 4; ++j) {
    series += to_ext(bernoulli(static_cast<std::size_t>(2 * j))) / ExtReal((2 * j - 1) * 2 * j) /
              pow(s, static_cast<long>(2 * j - 1));
  }
  ExtReal rem = abs(log_gamma(ExtComplex(s)).re() - series);
  CHECK(rem < g.at(s));
  CHECK(rem > g.at(s) / ExtReal(100));

  RemainderBound h = log_barnes_remainder(3);
  CHECK(h.order == 4);
  CHECK(h.decay_exponent == -8);
  CHECK(h.at(ExtReal(5)) > h.at(ExtReal(6)));
}
