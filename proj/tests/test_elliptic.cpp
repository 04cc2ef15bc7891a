#include <doctest.h>

#include "hypdet/elliptic/elliptic.hpp"
#include "hypdet/errors.hpp"
#include "test_support.hpp"

using namespace hypdet;
using hypdet::testing::pow2;

namespace {

OrbifoldData modular_with(int q2, int q3) {
  Signature sig{0, 1, {2, 3}};
  RepresentationData rep = RepresentationData::trivial(sig);
  rep.elliptic_exponents = {{q2}, {q3}};
  return {sig, rep};
}

long case_table(long m, int q, int d) {
  if (m < q && m + q < d) return 1;
  if (m >= q && m + q >= d) return -1;
  return 0;
}

}  // namespace

TEST_CASE("residue systems") {
  ResidueQuad a = residues(0, 1, 3);
  CHECK(a.q_m == 1);
  CHECK(a.qt_m == 2);
  CHECK(a.k_total() == 1);
  ResidueQuad b = residues(0, 0, 5);
  CHECK(b.q_m == 0);
  CHECK(b.qt_m == 0);
  CHECK(b.k_total() == 0);
  ResidueQuad c = residues(4, 3, 5);
  CHECK(c.q_m == 2);
  CHECK(c.k_shift == -1);
  CHECK(c.qt_m == 1);
  CHECK(c.kt_shift == 0);
  CHECK(c.k_total() == -1);
  CHECK_THROWS_AS(residues(0, 5, 5), DomainError);
  CHECK_THROWS_AS(residues(0, -1, 5), DomainError);

  for (int d = 2; d <= 20; ++d) {
    for (int q = 0; q < d; ++q) {
      for (long m = 0; m < d; ++m) {
        ResidueQuad r = residues(m, q, d);
        CHECK(r.q_m == m + q + d * r.k_shift);
        CHECK(r.qt_m == m - q + d * r.kt_shift);
        CHECK((r.q_m >= 0 && r.q_m < d && r.qt_m >= 0 && r.qt_m < d));
        CHECK(r.k_total() == case_table(m, q, d));
      }
    }
  }
}

TEST_CASE("alpha and beta") {
  EllipticClass triv{3, {0}};
  CHECK(alpha(triv, 1) == 2);
  CHECK(beta_coeff(triv, 1) == 0);
  EllipticClass one{3, {1}};
  CHECK(alpha(one, 0) == 3);
  CHECK(beta_coeff(one, 0) == 1);

  for (int d = 2; d <= 12; ++d) {
    EllipticClass t{d, {0, 0}};
    for (long m = 0; m < d; ++m) CHECK(beta_coeff(t, m) == 0);
    // beyond one period the trivial exponents wrap: beta = -2h floor(m/d) per exponent pair
    for (long m = d; m < 3 * d; ++m) CHECK(beta_coeff(t, m) == -2 * 2 * (m / d));
  }
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    int d = std::uniform_int_distribution<int>(2, 15)(rng);
    int h = std::uniform_int_distribution<int>(1, 4)(rng);
    EllipticClass cls{d, {}};
    for (int j = 0; j < h; ++j) cls.exponents.push_back(std::uniform_int_distribution<int>(0, d - 1)(rng));
    for (long m = 0; m < 3 * d; ++m) CHECK(alpha(cls, m) == 2 * m * h + beta_coeff(cls, m) * d);
  }
}

TEST_CASE("finite trigonometric sum") {
  CHECK(trig_sum_closed(0, 0, 2) == 1);
  CHECK(trig_sum_closed(0, 1, 3) == -1);
  CHECK(trig_sum_closed(1, 0, 3) == 0);
  CHECK(abs(trig_sum_brute(0, 0, 2) - ExtComplex(1)) < pow2(-240));
  CHECK(abs(trig_sum_brute(0, 1, 3) - ExtComplex(-1)) < pow2(-240));
  CHECK(abs(trig_sum_brute(1, 0, 3)) < pow2(-240));
  for (int d = 2; d <= 12; ++d) {
    for (int q = 0; q < d; ++q) {
      for (long n = 0; n <= 30; ++n) {
        ExtComplex b = trig_sum_brute(n, q, d);
        CHECK(abs(b.re() - ExtReal(trig_sum_closed(n, q, d))) < pow2(-200));
        CHECK(abs(b.im()) < pow2(-200));
      }
    }
  }
}

TEST_CASE("multiplicities") {
  OrbifoldData mod = OrbifoldData::modular();
  CHECK(m_n_floor(mod, 0) == -1);
  CHECK(m_n_floor(mod, 1) == 1);
  CHECK(m_n_floor(mod, 2) == 1);
  CHECK(m_n_floor(mod, 3) == 1);
  CHECK(abs(m_n_spectral(mod, 1) - ExtReal(1)) < pow2(-200));
  CHECK(abs(m_n_spectral(mod, 0) + ExtReal(1)) < pow2(-200));
  // m_n = 2n - 1 - 2 floor(n/2) - 2 floor(n/3) for the modular group with trivial chi
  for (long n = 0; n <= 60; ++n) CHECK(m_n_floor(mod, n) == 2 * n - 1 - 2 * (n / 2) - 2 * (n / 3));

  Signature torus{1, 1, {}};
  OrbifoldData t(torus, RepresentationData::trivial(torus));
  CHECK(m_n_floor(t, 2) == 5);
  CHECK(m_n_floor(t, 0) == 1);

  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    OrbifoldData orb = hypdet::testing::random_orbifold(rng);
    for (long n = 0; n <= 40; n += 3) CHECK(abs(m_n_spectral(orb, n) - ExtReal(m_n_floor(orb, n))) < pow2(-200));
  }
  for (int q2 = 0; q2 < 2; ++q2) {
    for (int q3 = 0; q3 < 3; ++q3) {
      OrbifoldData orb = modular_with(q2, q3);
      for (long n = 0; n <= 50; ++n) CHECK(abs(m_n_spectral(orb, n) - ExtReal(m_n_floor(orb, n))) < pow2(-200));
    }
  }
}

TEST_CASE("counting multiples") {
  CHECK(count_multiples(4, 3, 5) == 2);
  CHECK(g_count(4, 3, 5) == 2);
  CHECK(count_multiples(0, 0, 7) == 1);
  CHECK(g_count(0, 0, 7) == 1);
  CHECK(count_multiples(0, 2, 5) == 0);
  CHECK(g_count(0, 2, 5) == 0);
  for (int d = 2; d <= 10; ++d) {
    for (int q = 0; q < d; ++q) {
      for (long n = 0; n <= 60; ++n) CHECK(count_multiples(n, q, d) == g_count(n, q, d));
    }
  }
}
