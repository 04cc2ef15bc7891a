#include "hypdet/gfuncs/gfuncs.hpp"

#include <string>

#include "hypdet/elliptic/elliptic.hpp"
#include "hypdet/errors.hpp"
#include "hypdet/numerics/special_functions.hpp"

namespace hypdet {

namespace {

ExtReal to_real(const mpq_class& q) {
  ExtReal r;
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

ExtReal log_2pi() { return log(ExtReal(2) * const_pi()); }

mpq_class g1_leading(const OrbifoldData& orb) {
  mpq_class a = volume_over_2pi(orb.signature()) * orb.dim();
  a.canonicalize();
  return a;
}

// sum_R sum_m beta(R,m) / d_R
mpq_class beta_over_d(const OrbifoldData& orb) {
  mpq_class acc = 0;
  for (const auto& cls : elliptic_classes(orb)) {
    for (long m = 0; m < cls.order; ++m) acc += mpq_class(beta_coeff(cls, m), cls.order);
  }
  acc.canonicalize();
  return acc;
}

ExtReal b0_candidate(const OrbifoldData& orb, int sign_of_2pi_term) {
  const long h = orb.dim();
  ExtReal l2p = log_2pi();
  ExtReal acc = to_real(g1_leading(orb)) * (ExtReal(2) * zeta_prime_minus_one() - l2p / ExtReal(2));
  for (const auto& cls : elliptic_classes(orb)) {
    const long d = cls.order;
    ExtReal ld = log(ExtReal(d));
    ExtReal l2pd = l2p + ld;
    ExtReal inner = ExtReal(sign_of_2pi_term) * l2p / ExtReal(2 * d) - l2pd / ExtReal(2) +
                    ExtReal(2 * d - 1) / ExtReal(3 * d) * ld;
    acc += ExtReal(h * (d - 1)) * inner;
    for (long m = 0; m < d; ++m) {
      long b = beta_coeff(cls, m);
      if (b == 0) continue;
      acc -= ExtReal(b) * (l2pd / ExtReal(2) - ExtReal(m) / ExtReal(d) * ld);
    }
  }
  return acc;
}

mpq_class a0t_printed(const OrbifoldData& orb) {
  const long h = orb.dim();
  mpq_class acc = g1_leading(orb) / 3;
  for (const auto& cls : elliptic_classes(orb)) {
    const long d = cls.order;
    acc += mpq_class(h * (d - 1), d) * (mpq_class(1, 2) - mpq_class(d - 2, 6));
    for (long m = 0; m < d; ++m) acc -= mpq_class(beta_coeff(cls, m), d) * (mpq_class(m, d) - mpq_class(1, 2));
  }
  acc.canonicalize();
  return acc;
}

void check_g1_argument(const OrbifoldData& orb, const ExtComplex& s) {
  ExtReal n_real = round(-s.re());
  long n = n_real.to_long();
  if (n >= 0) {
    ExtReal dist = abs(s + ExtComplex(n_real));
    if (dist < ldexp(ExtReal(1), -working_precision() / 4)) {
      long ord = order_at(orb, n);
      if (ord != 0) {
        throw SingularityError("G1 has a " + std::string(ord > 0 ? "zero" : "pole") + " of order " +
                               std::to_string(ord > 0 ? ord : -ord) + " at s = -" + std::to_string(n));
      }
      throw BranchError("G1 constituents are singular at s = -" + std::to_string(n));
    }
  }
  if (s.is_real() && s.re().sign() <= 0) throw BranchError("G1 constituent arguments lie on the cut (-inf, 0]");
}

}  // namespace

ExtComplex ExpansionCoefficients::evaluate(const ExtComplex& z) const {
  ExtComplex lz = log(z);
  ExtComplex z2 = z * z;
  return z2 * (lz - ExtReal(1.5)) * a2t + z2 * b2 + z * (lz - ExtReal(1)) * a1t + z * b1 + lz * a0t + ExtComplex(b0);
}

G1RationalCoefficients g1_rational_coefficients(const OrbifoldData& orb) {
  const long h = orb.dim();
  G1RationalCoefficients c;
  c.a2t = g1_leading(orb);
  c.a1t = -c.a2t - beta_over_d(orb);
  mpq_class a0 = c.a2t / 3;
  for (const auto& cls : elliptic_classes(orb)) {
    const long d = cls.order;
    a0 -= mpq_class(h * (d * d - 1), 6 * d);
    for (long m = 0; m < d; ++m) a0 -= mpq_class(beta_coeff(cls, m)) * (mpq_class(m, d) - mpq_class(1, 2));
  }
  a0.canonicalize();
  c.a1t.canonicalize();
  c.a0t = a0;
  return c;
}

ExpansionCoefficients g1_coefficients(const OrbifoldData& orb) {
  G1RationalCoefficients r = g1_rational_coefficients(orb);
  ExpansionCoefficients c;
  c.a2t = to_real(r.a2t);
  c.b2 = ExtReal(0);
  c.a1t = to_real(r.a1t);
  c.a0t = to_real(r.a0t);
  ExtReal b1;
  for (const auto& cls : elliptic_classes(orb)) {
    ExtReal ld = log(ExtReal(cls.order));
    for (long m = 0; m < cls.order; ++m) {
      long b = beta_coeff(cls, m);
      if (b != 0) b1 += ExtReal(b) / ExtReal(cls.order) * ld;
    }
  }
  c.b1 = b1;
  c.b0 = b0_candidate(orb, +1);
  return c;
}

G1CoefficientCandidates g1_coefficient_candidates(const OrbifoldData& orb) {
  G1CoefficientCandidates c;
  c.a0t_adopted = to_real(g1_rational_coefficients(orb).a0t);
  c.a0t_alternative = to_real(a0t_printed(orb));
  c.b0_plus = b0_candidate(orb, +1);
  c.b0_minus = b0_candidate(orb, -1);
  return c;
}

ExtComplex log_g1(const OrbifoldData& orb, const ExtComplex& s) {
  check_g1_argument(orb, s);
  const long outer = working_precision();
  ExtComplex acc;
  {
    GuardBits guard(16);
    const long h = orb.dim();
    ExtComplex lg = log_gamma(s);
    ExtReal a = to_real(g1_leading(orb));
    acc = (ExtReal(-1) * s * log_2pi() + ExtReal(2) * log_barnes_g(s + ExtComplex(1)) - lg) * a;
    for (const auto& cls : elliptic_classes(orb)) {
      const long d = cls.order;
      ExtReal w = ExtReal(h * (d - 1)) / ExtReal(d);
      acc += (lg - s * log(ExtReal(d))) * w;
      for (long m = 0; m < d; ++m) {
        long al = alpha(cls, m);
        if (al == 0) continue;
        acc -= log_gamma((s + ExtComplex(m)) / ExtReal(d)) * (ExtReal(al) / ExtReal(d));
      }
    }
  }
  acc.re().round_to(outer);
  acc.im().round_to(outer);
  return acc;
}

ExtComplex log_g1_asymptotic(const OrbifoldData& orb, const ExtComplex& s) { return g1_coefficients(orb).evaluate(s); }

long order_at(const OrbifoldData& orb, long n) {
  if (n < 0) throw DomainError("order_at: n must be non-negative");
  const long h = orb.dim();
  mpq_class ord = g1_leading(orb) * (2 * n + 1);
  for (const auto& cls : elliptic_classes(orb)) {
    const long d = cls.order;
    ord -= mpq_class(h * (d - 1), d);
    ord += mpq_class(alpha(cls, mod_pos(n, d)), d);
  }
  ord.canonicalize();
  if (ord.get_den() != 1) throw NonIntegerError("order of G1 is not an integer");
  return ord.get_num().get_si();
}

ExtComplex log_g_qd(const ExtComplex& s, int q, int d) {
  if (q < 0 || q >= d || d < 2) throw DomainError("log_g_qd: need 0 <= q < d, d >= 2");
  ExtComplex acc;
  for (int m = 0; m < d; ++m) {
    acc += log_barnes_g((s - ExtComplex(q) + ExtComplex(m)) / ExtReal(d) + ExtComplex(1));
    acc += log_barnes_g((s - ExtComplex(d - q) + ExtComplex(m)) / ExtReal(d) + ExtComplex(1));
  }
  return acc;
}

ExtComplex log_g_e(const ExtComplex& s, const OrbifoldData& orb) {
  ExtComplex acc;
  for (const auto& cls : elliptic_classes(orb)) {
    for (int q : cls.exponents) acc += log_g_qd(s, q, cls.order);
  }
  return acc;
}

ExtComplex log_tilde_g1(const ExtComplex& s, const OrbifoldData& orb) {
  check_g1_argument(orb, s);
  const auto& sig = orb.signature();
  long e = static_cast<long>(orb.dim()) * (2L * sig.genus - 2 + sig.cusps + sig.elliptic_count());
  ExtComplex base = ExtReal(-1) * s * log_2pi() + ExtReal(2) * log_barnes_g(s + ExtComplex(1)) - log_gamma(s);
  return base * ExtReal(e) - log_g_e(s, orb);
}

long order_g_qd(long n, int q, int d) {
  if (q < 0 || q >= d || d < 2) throw DomainError("order_g_qd: need 0 <= q < d, d >= 2");
  if (n < 0) return 0;
  long ord = 0;
  for (long m = 0; m < d; ++m) {
    for (long shift : {static_cast<long>(q), static_cast<long>(d - q)}) {
      long num = -n - shift + m;
      if (mod_pos(num, d) != 0) continue;
      long w = num / d;
      if (w <= -1) ord += -w;
    }
  }
  return ord;
}

long order_g_qd(const ExtComplex& s, int q, int d) {
  if (!s.is_real() || !s.re().is_integer() || s.re().sign() > 0) return 0;
  return order_g_qd(-s.re().to_long(), q, d);
}

long order_g_e(const OrbifoldData& orb, long n) {
  long ord = 0;
  for (const auto& cls : elliptic_classes(orb)) {
    for (int q : cls.exponents) ord += order_g_qd(n, q, cls.order);
  }
  return ord;
}

long order_tilde_g1(const OrbifoldData& orb, long n) {
  const auto& sig = orb.signature();
  long e = static_cast<long>(orb.dim()) * (2L * sig.genus - 2 + sig.cusps + sig.elliptic_count());
  // (G(s+1)^2 / Gamma(s)) has order 2n + 1 at s = -n
  return e * (2 * n + 1) - order_g_e(orb, n);
}

}  // namespace hypdet
