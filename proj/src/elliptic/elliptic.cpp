#include "hypdet/elliptic/elliptic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "hypdet/errors.hpp"

namespace hypdet {

namespace {

// sin(j pi / d), cos(j pi / d) for j in [0, 2d) at one precision.
struct TrigTable {
  std::vector<ExtReal> sin;
  std::vector<ExtReal> cos;
};

std::shared_ptr<const TrigTable> trig_table(int d) {
  static std::mutex mutex;
  static std::map<std::pair<int, long>, std::shared_ptr<const TrigTable>> cache;
  const long bits = working_precision();
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(d, bits);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto t = std::make_shared<TrigTable>();
  t->sin.reserve(static_cast<std::size_t>(2 * d));
  t->cos.reserve(static_cast<std::size_t>(2 * d));
  ExtReal step = const_pi() / ExtReal(d);
  for (int j = 0; j < 2 * d; ++j) {
    ExtReal s;
    ExtReal c;
    sin_cos(step * ExtReal(j), s, c);
    t->sin.push_back(s);
    t->cos.push_back(c);
  }
  cache.emplace(key, t);
  return t;
}

void check_exponent(int q, int d) {
  if (d < 2) throw DomainError("elliptic order must be at least 2");
  if (q < 0 || q >= d) throw DomainError("exponent must lie in [0, d)");
}

}  // namespace

long floor_div(long a, long d) {
  long q = a / d;
  if ((a % d != 0) && ((a < 0) != (d < 0))) --q;
  return q;
}

long mod_pos(long a, long d) { return a - d * floor_div(a, d); }

ResidueQuad residues(long m, int q, int d) {
  check_exponent(q, d);
  if (m < 0) throw DomainError("residues: m must be non-negative");
  ResidueQuad r;
  r.k_shift = -floor_div(m + q, d);
  r.q_m = m + q + d * r.k_shift;
  r.kt_shift = -floor_div(m - q, d);
  r.qt_m = m - q + d * r.kt_shift;
  return r;
}

std::vector<EllipticClass> elliptic_classes(const OrbifoldData& orb) {
  std::vector<EllipticClass> out;
  const auto& orders = orb.signature().elliptic_orders;
  for (std::size_t r = 0; r < orders.size(); ++r) out.push_back({orders[r], orb.rep().elliptic_exponents[r]});
  return out;
}

long alpha(const EllipticClass& cls, long m) {
  long a = 0;
  for (int q : cls.exponents) {
    ResidueQuad r = residues(m, q, cls.order);
    a += r.q_m + r.qt_m;
  }
  return a;
}

long beta_coeff(const EllipticClass& cls, long m) {
  long b = 0;
  for (int q : cls.exponents) b += residues(m, q, cls.order).k_total();
  return b;
}

long trig_sum_closed(long n, int q, int d) {
  check_exponent(q, d);
  return d - 1 - (mod_pos(n + q, d) + mod_pos(n - q, d));
}

ExtComplex trig_sum_brute(long n, int q, int d) {
  check_exponent(q, d);
  auto t = trig_table(d);
  const long period = 2L * d;
  ExtReal re;
  ExtReal im;
  for (long k = 1; k < d; ++k) {
    std::size_t w = static_cast<std::size_t>(mod_pos(2L * q * k, period));
    std::size_t num = static_cast<std::size_t>(mod_pos(k * (2 * n + 1), period));
    ExtReal ratio = t->sin[num] / t->sin[static_cast<std::size_t>(k)];
    re += t->cos[w] * ratio;
    im += t->sin[w] * ratio;
  }
  return {re, im};
}

ExtReal m_n_spectral(const OrbifoldData& orb, long n) {
  const long outer = working_precision();
  ExtReal value;
  {
    GuardBits guard(16);
    mpq_class a = volume_over_2pi(orb.signature()) * orb.dim();
    ExtReal ar;
    mpfr_set_q(ar.get(), a.get_mpq_t(), MPFR_RNDN);
    value = ar * ExtReal(2 * n + 1);
    for (const auto& cls : elliptic_classes(orb)) {
      ExtReal s;
      for (int q : cls.exponents) s += trig_sum_brute(n, q, cls.order).re();
      value -= s / ExtReal(cls.order);
    }
  }
  value.round_to(outer);
  ExtReal nearest = round(value);
  ExtReal tol = ExtReal(10) * ldexp(ExtReal(1), -outer / 2);
  if (abs(value - nearest) > tol) throw NonIntegerError("spectral multiplicity is not an integer: " + value.to_string(30));
  return value;
}

long m_n_floor(const OrbifoldData& orb, long n) {
  if (n < 0) throw DomainError("m_n: n must be non-negative");
  const auto& sig = orb.signature();
  long base = static_cast<long>(orb.dim()) * (2L * sig.genus - 2 + sig.cusps + sig.elliptic_count()) * (2 * n + 1);
  for (const auto& cls : elliptic_classes(orb)) {
    for (int q : cls.exponents) base -= g_count(n, q, cls.order);
  }
  return base;
}

long count_multiples(long n, int q, int d) {
  check_exponent(q, d);
  long c = 0;
  for (long x = -n + q; x <= n + q; ++x) {
    if (mod_pos(x, d) == 0) ++c;
  }
  return c;
}

long g_count(long n, int q, int d) {
  check_exponent(q, d);
  return floor_div(n + q, d) + floor_div(n + d - q, d);
}

}  // namespace hypdet
