#include "hypdet/numerics/special_functions.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "hypdet/errors.hpp"
#include "hypdet/numerics/bernoulli.hpp"

namespace hypdet {

namespace {

ExtComplex rounded(ExtComplex z, long bits) {
  z.re().round_to(bits);
  z.im().round_to(bits);
  return z;
}

bool is_nonpositive_integer(const ExtComplex& z) {
  return z.im().is_zero() && z.re().sign() <= 0 && z.re().is_integer();
}

// Number of unit shifts needed so that Re(z + n) >= target.
long shift_count(const ExtComplex& z, long target) {
  double re = z.re().to_double();
  if (re >= static_cast<double>(target)) return 0;
  return static_cast<long>(std::ceil(static_cast<double>(target) - re));
}

long series_term_cap(long bits) { return std::max<long>(64, 2 * bits); }

// Stirling's series for log Gamma(w), Re w large.
ExtComplex stirling_log_gamma(const ExtComplex& w) {
  const long bits = working_precision();
  ExtComplex lw = log(w);
  ExtComplex acc = (w - ExtReal(0.5)) * lw - w + log(ExtReal(2) * const_pi()) / ExtReal(2);
  ExtComplex inv = ExtComplex(1) / w;
  ExtComplex inv2 = inv * inv;
  ExtComplex p = inv;  // w^{-(2j-1)}
  ExtReal prev_mag;
  const long cap = series_term_cap(bits);
  for (long j = 1;; ++j) {
    if (j > cap) throw PrecisionError("log_gamma: Stirling series did not reach working precision");
    ExtReal c = to_ext(bernoulli(static_cast<std::size_t>(2 * j))) / ExtReal((2 * j - 1) * (2 * j));
    ExtComplex term = p * c;
    ExtReal mag = abs(term);
    if (j > 1 && mag > prev_mag) throw PrecisionError("log_gamma: asymptotic terms stopped decreasing");
    acc += term;
    if (mag.is_zero() || log2_abs(mag) < log2_abs(max(abs(acc), ExtReal(1))) - static_cast<double>(bits)) break;
    prev_mag = mag;
    p *= inv2;
  }
  return acc;
}

// Asymptotic expansion of log G(s+1); zp1 = zeta'(-1).
ExtComplex barnes_asymptotic(const ExtComplex& s, const ExtReal& zp1) {
  const long bits = working_precision();
  ExtComplex ls = log(s);
  ExtComplex s2 = s * s;
  ExtComplex acc = s2 / ExtReal(2) * (ls - ExtReal(1.5)) - ls / ExtReal(12) +
                   s * log(ExtReal(2) * const_pi()) / ExtReal(2) + ExtComplex(zp1);
  ExtComplex inv2 = ExtComplex(1) / s2;
  ExtComplex p = inv2;  // s^{-2k}
  ExtReal prev_mag;
  const long cap = series_term_cap(bits);
  for (long k = 1;; ++k) {
    if (k > cap) throw PrecisionError("log_barnes_g: asymptotic series did not reach working precision");
    ExtReal c = to_ext(bernoulli(static_cast<std::size_t>(2 * k + 2))) / ExtReal(4 * k * (k + 1));
    ExtComplex term = p * c;
    ExtReal mag = abs(term);
    if (k > 1 && mag > prev_mag) throw PrecisionError("log_barnes_g: asymptotic terms stopped decreasing");
    acc += term;
    if (mag.is_zero() || log2_abs(mag) < log2_abs(max(abs(acc), ExtReal(1))) - static_cast<double>(bits)) break;
    prev_mag = mag;
    p *= inv2;
  }
  return acc;
}

struct HurwitzPair {
  ExtComplex value;
  ExtComplex derivative;
};

void check_hurwitz_parameter(const ExtComplex& a) {
  if (a.on_nonpositive_axis()) throw DomainError("hurwitz_zeta: parameter lies on (-inf, 0]");
}

// Euler-Maclaurin evaluation of zeta(s, a) and optionally its s-derivative.
HurwitzPair hurwitz_em(const ExtComplex& s, const ExtComplex& a, bool with_derivative) {
  const long bits = working_precision();
  double s_mag = abs(s).to_double();
  long target = asymptotic_threshold(bits) + static_cast<long>(std::ceil(s_mag));
  long n = shift_count(a, target);

  HurwitzPair out;
  // finite part
  for (long k = 0; k < n; ++k) {
    ExtComplex base = a + ExtComplex(ExtReal(k));
    ExtComplex lb = log(base);
    ExtComplex t = exp(-(s * lb));
    out.value += t;
    if (with_derivative) out.derivative -= lb * t;
  }

  ExtComplex w = a + ExtComplex(ExtReal(n));
  ExtComplex lw = log(w);
  ExtComplex w_s = exp(-(s * lw));  // w^{-s}
  ExtComplex sm1 = s - ExtComplex(1);
  ExtComplex head = w * w_s / sm1 + w_s / ExtReal(2);
  out.value += head;
  if (with_derivative) {
    ExtComplex inv_sm1 = ExtComplex(1) / sm1;
    out.derivative += w * w_s * (-(lw * inv_sm1) - inv_sm1 * inv_sm1) - lw * w_s / ExtReal(2);
  }

  ExtComplex inv_w = ExtComplex(1) / w;
  ExtComplex inv_w2 = inv_w * inv_w;
  ExtComplex pw = w_s * inv_w;  // w^{-s-2j+1}
  ExtComplex poly = s;          // s (s+1) ... (s+2j-2)
  ExtComplex dpoly(1);
  ExtReal fact(2);  // (2j)!
  const long cap = series_term_cap(bits);
  for (long j = 1;; ++j) {
    if (j > cap) throw PrecisionError("hurwitz_zeta: Euler-Maclaurin tail did not converge");
    ExtReal coef = to_ext(bernoulli(static_cast<std::size_t>(2 * j))) / fact;
    ExtComplex term = pw * poly * coef;
    out.value += term;
    ExtReal mag = abs(term);
    bool done = mag.is_zero() || log2_abs(mag) < log2_abs(max(abs(out.value), ExtReal(1))) - static_cast<double>(bits);
    if (with_derivative) {
      ExtComplex dterm = pw * (dpoly - poly * lw) * coef;
      out.derivative += dterm;
      ExtReal dmag = abs(dterm);
      done = done && (dmag.is_zero() || log2_abs(dmag) < log2_abs(max(abs(out.derivative), ExtReal(1))) -
                                                             static_cast<double>(bits));
    }
    if (done) break;
    ExtComplex q1 = s + ExtComplex(ExtReal(2 * j - 1));
    ExtComplex q2 = s + ExtComplex(ExtReal(2 * j));
    ExtComplex q = q1 * q2;
    if (with_derivative) dpoly = dpoly * q + poly * (q1 + q2);
    poly *= q;
    pw *= inv_w2;
    fact *= ExtReal((2 * j + 1) * (2 * j + 2));
  }
  return out;
}

// Borwein's algorithm 2; valid away from the zeros of 1 - 2^{1-s}.
ExtComplex borwein_zeta(const ExtComplex& s) {
  const long bits = working_precision();
  double t = std::fabs(s.im().to_double());
  double need = static_cast<double>(bits) + 20.0 + M_PI * t / std::log(2.0) + std::log2(1.0 + 2.0 * t);
  long n = static_cast<long>(std::ceil(need / std::log2(3.0 + std::sqrt(8.0)))) + 2;
  GuardBits guard(static_cast<long>(std::ceil(std::log2(static_cast<double>(n)) + M_PI * t / (4 * std::log(2.0)))) + 16);

  // d_k = sum_{i<=k} e_i, e_i = n (n+i-1)! 4^i / ((n-i)! (2i)!)
  std::vector<mpz_class> d(static_cast<std::size_t>(n) + 1);
  mpz_class e = 1;
  mpz_class run = 0;
  for (long i = 0; i <= n; ++i) {
    run += e;
    d[static_cast<std::size_t>(i)] = run;
    if (i == n) break;
    mpz_class num = e * 4 * (n + i) * (n - i);
    mpz_class den = mpz_class(2 * i + 1) * (2 * i + 2);
    mpz_divexact(e.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  const mpz_class& dn = d[static_cast<std::size_t>(n)];

  ExtComplex sum;
  for (long k = 0; k < n; ++k) {
    mpz_class c = d[static_cast<std::size_t>(k)] - dn;
    if (k % 2 == 1) c = -c;
    ExtReal cr;
    mpfr_set_z(cr.get(), c.get_mpz_t(), MPFR_RNDN);
    sum += real_base_pow(log(ExtReal(k + 1)), s) * cr;
  }
  ExtReal dnr;
  mpfr_set_z(dnr.get(), dn.get_mpz_t(), MPFR_RNDN);
  ExtComplex factor = ExtComplex(1) - exp((ExtComplex(1) - s) * const_log2());
  return -sum / (factor * dnr);
}

bool near_eta_zero(const ExtComplex& s) {
  ExtComplex factor = ExtComplex(1) - exp((ExtComplex(1) - s) * const_log2());
  return abs(factor).to_double() < 1.0 / 1024.0;
}

}  // namespace

long asymptotic_threshold(long bits) { return std::max<long>(20, bits / 3); }

ExtComplex log_gamma(const ExtComplex& z) {
  if (is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at a non-positive integer");
  const long outer = working_precision();
  GuardBits guard(kGuardBits);
  long n = shift_count(z, asymptotic_threshold(working_precision()));
  ExtComplex w = z + ExtComplex(ExtReal(n));
  ExtComplex acc = stirling_log_gamma(w);
  for (long k = 0; k < n; ++k) acc -= log(z + ExtComplex(ExtReal(k)));
  return rounded(std::move(acc), outer);
}

ExtComplex log_barnes_g(const ExtComplex& z) {
  if (is_nonpositive_integer(z)) {
    long order = 1 - z.re().to_long();
    throw ZeroError("log_barnes_g: zero of G", static_cast<int>(order));
  }
  const long outer = working_precision();
  GuardBits guard(kGuardBits);
  ExtReal zp1 = zeta_prime_minus_one();
  long n = shift_count(z, asymptotic_threshold(working_precision()) + 1);
  ExtComplex w = z + ExtComplex(ExtReal(n));
  ExtComplex acc = barnes_asymptotic(w - ExtComplex(1), zp1);
  if (n > 0) {
    // log G(z) = log G(z+n) - sum_{k<n} log Gamma(z+k)
    //          = log G(w) - n * Stirling(w) + sum_{i<n} (i+1) log(z+i)
    acc -= stirling_log_gamma(w) * ExtReal(n);
    for (long i = 0; i < n; ++i) acc += log(z + ExtComplex(ExtReal(i))) * ExtReal(i + 1);
  }
  return rounded(std::move(acc), outer);
}

ExtComplex hurwitz_zeta(const ExtComplex& s, const ExtComplex& a) {
  check_hurwitz_parameter(a);
  if (s == ExtComplex(1)) throw PoleError("hurwitz_zeta: pole at s = 1");
  const long outer = working_precision();
  GuardBits guard(kGuardBits);
  return rounded(hurwitz_em(s, a, false).value, outer);
}

ExtComplex hurwitz_zeta_ds(const ExtComplex& s, const ExtComplex& a) {
  check_hurwitz_parameter(a);
  if (s == ExtComplex(1)) throw PoleError("hurwitz_zeta_ds: pole at s = 1");
  const long outer = working_precision();
  GuardBits guard(kGuardBits);
  return rounded(hurwitz_em(s, a, true).derivative, outer);
}

ExtComplex hurwitz_zeta_ds0(const ExtComplex& a) { return hurwitz_zeta_ds(ExtComplex(0), a); }

ExtComplex riemann_zeta(const ExtComplex& s) {
  if (s == ExtComplex(1)) throw PoleError("riemann_zeta: pole at s = 1");
  if (s.is_real() && s.re().sign() < 0 && s.re().is_integer()) {
    long k = s.re().to_long();
    if (k % 2 == 0) return ExtComplex(0);
  }
  const long outer = working_precision();
  GuardBits guard(kGuardBits);
  ExtComplex result;
  if (abs(s).to_double() < 0.25) {
    result = hurwitz_em(s, ExtComplex(1), false).value;
  } else if (s.re().to_double() >= 0.5) {
    result = near_eta_zero(s) ? hurwitz_em(s, ExtComplex(1), false).value : borwein_zeta(s);
  } else {
    // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s)
    ExtComplex one_minus = ExtComplex(1) - s;
    ExtComplex lf = s * const_log2() + (s - ExtComplex(1)) * log(const_pi()) + log_gamma(one_minus);
    ExtComplex zr = near_eta_zero(one_minus) ? hurwitz_em(one_minus, ExtComplex(1), false).value
                                             : borwein_zeta(one_minus);
    result = exp(lf) * sin(s * const_pi() / ExtReal(2)) * zr;
  }
  return rounded(std::move(result), outer);
}

ExtReal zeta_prime_minus_one() {
  static std::mutex mutex;
  static std::map<long, ExtReal> cache;
  const long outer = working_precision();
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(outer);
    if (it != cache.end()) return it->second;
  }
  ExtReal value;
  {
    GuardBits guard(kGuardBits);
    value = hurwitz_em(ExtComplex(-1), ExtComplex(1), true).derivative.re();
  }
  value.round_to(outer);
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(outer, value);
  return value;
}

ExtReal RemainderBound::at(const ExtReal& modulus) const { return bound_constant * pow(modulus, static_cast<long>(decay_exponent)); }

RemainderBound log_gamma_remainder(int m) {
  if (m < 1) throw DomainError("log_gamma_remainder: order must be positive");
  RemainderBound r;
  r.order = m;
  r.bound_constant = abs(to_ext(bernoulli(static_cast<std::size_t>(2 * m)))) / ExtReal((2 * m - 1) * (2 * m));
  r.decay_exponent = -(2 * m - 1);
  return r;
}

RemainderBound log_barnes_remainder(int n) {
  if (n < 0) throw DomainError("log_barnes_remainder: order must be non-negative");
  RemainderBound r;
  r.order = n + 1;
  r.bound_constant = abs(to_ext(bernoulli(static_cast<std::size_t>(2 * n + 4)))) / ExtReal(4 * (n + 1) * (n + 2));
  r.decay_exponent = -(2 * n + 2);
  return r;
}

}  // namespace hypdet
