#include "hypdet/numerics/ext_real.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hypdet/errors.hpp"

namespace hypdet {

namespace {

thread_local long t_working_bits = kDefaultPrecisionBits;

struct ExponentRange {
  ExponentRange() {
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
  }
};

void ensure_exponent_range() {
  thread_local ExponentRange range;
  (void)range;
}

mpfr_prec_t current_prec() {
  ensure_exponent_range();
  return static_cast<mpfr_prec_t>(t_working_bits);
}

}  // namespace

long working_precision() { return t_working_bits; }

WorkingPrecision::WorkingPrecision(long bits) : saved_(t_working_bits) {
  if (bits < kMinPrecisionBits) {
    throw PrecisionError("working precision must be at least " + std::to_string(kMinPrecisionBits) + " bits, got " +
                         std::to_string(bits));
  }
  if (bits > static_cast<long>(MPFR_PREC_MAX)) throw PrecisionError("working precision exceeds MPFR limits");
  t_working_bits = bits;
}

WorkingPrecision::~WorkingPrecision() { t_working_bits = saved_; }

GuardBits::GuardBits(long extra) : saved_(t_working_bits) { t_working_bits += extra; }

GuardBits::~GuardBits() { t_working_bits = saved_; }

ExtReal::ExtReal() {
  mpfr_init2(value_, current_prec());
  mpfr_set_zero(value_, 1);
}

ExtReal::ExtReal(int v) : ExtReal(static_cast<long>(v)) {}

ExtReal::ExtReal(long v) {
  mpfr_init2(value_, current_prec());
  mpfr_set_si(value_, v, MPFR_RNDN);
}

ExtReal::ExtReal(double v) {
  mpfr_init2(value_, current_prec());
  mpfr_set_d(value_, v, MPFR_RNDN);
}

ExtReal::ExtReal(std::string_view decimal) {
  mpfr_init2(value_, current_prec());
  std::string s(decimal);
  if (mpfr_set_str(value_, s.c_str(), 10, MPFR_RNDN) != 0) {
    // mpfr_set_str returns nonzero for inexact conversion as well as parse
    // failures; only the latter has a NaN result or leftover characters.
    char* end = nullptr;
    mpfr_strtofr(value_, s.c_str(), &end, 10, MPFR_RNDN);
    if (end == s.c_str() || *end != '\0') {
      mpfr_clear(value_);
      throw ValidationError("not a decimal number: '" + s + "'");
    }
  }
}

ExtReal::ExtReal(mpfr_srcptr src) {
  mpfr_init2(value_, current_prec());
  mpfr_set(value_, src, MPFR_RNDN);
}

ExtReal::ExtReal(const ExtReal& o) {
  mpfr_init2(value_, mpfr_get_prec(o.value_));
  mpfr_set(value_, o.value_, MPFR_RNDN);
}

ExtReal::ExtReal(ExtReal&& o) noexcept {
  value_[0] = o.value_[0];
  o.value_[0]._mpfr_d = nullptr;
}

ExtReal& ExtReal::operator=(const ExtReal& o) {
  if (this != &o) {
    if (value_[0]._mpfr_d == nullptr) {
      mpfr_init2(value_, mpfr_get_prec(o.value_));
    } else {
      mpfr_set_prec(value_, mpfr_get_prec(o.value_));
    }
    mpfr_set(value_, o.value_, MPFR_RNDN);
  }
  return *this;
}

ExtReal& ExtReal::operator=(ExtReal&& o) noexcept {
  if (this != &o) {
    if (value_[0]._mpfr_d != nullptr) mpfr_clear(value_);
    value_[0] = o.value_[0];
    o.value_[0]._mpfr_d = nullptr;
  }
  return *this;
}

ExtReal::~ExtReal() {
  if (value_[0]._mpfr_d != nullptr) mpfr_clear(value_);
}

void ExtReal::round_to(long bits) { mpfr_prec_round(value_, static_cast<mpfr_prec_t>(bits), MPFR_RNDN); }

namespace {

// In-place arithmetic must honour the working precision, not the left
// operand's, so results go through a fresh temporary.
template <typename Op>
ExtReal& apply_inplace(ExtReal& self, const ExtReal& o, Op op) {
  ExtReal r;
  op(r.get(), self.get(), o.get(), MPFR_RNDN);
  self = std::move(r);
  return self;
}

}  // namespace

ExtReal& ExtReal::operator+=(const ExtReal& o) { return apply_inplace(*this, o, mpfr_add); }
ExtReal& ExtReal::operator-=(const ExtReal& o) { return apply_inplace(*this, o, mpfr_sub); }
ExtReal& ExtReal::operator*=(const ExtReal& o) { return apply_inplace(*this, o, mpfr_mul); }
ExtReal& ExtReal::operator/=(const ExtReal& o) { return apply_inplace(*this, o, mpfr_div); }

ExtReal ExtReal::operator-() const {
  ExtReal r;
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

std::string ExtReal::to_string(int digits) const {
  if (digits < 1) digits = 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::partial_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

ExtReal operator+(const ExtReal& a, const ExtReal& b) {
  ExtReal r;
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

ExtReal operator-(const ExtReal& a, const ExtReal& b) {
  ExtReal r;
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

ExtReal operator*(const ExtReal& a, const ExtReal& b) {
  ExtReal r;
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

ExtReal operator/(const ExtReal& a, const ExtReal& b) {
  ExtReal r;
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

#define HYPDET_UNARY(name, fn)           \
  ExtReal name(const ExtReal& x) {       \
    ExtReal r;                           \
    fn(r.get(), x.get(), MPFR_RNDN);     \
    return r;                            \
  }

HYPDET_UNARY(abs, mpfr_abs)
HYPDET_UNARY(sqrt, mpfr_sqrt)
HYPDET_UNARY(exp, mpfr_exp)
HYPDET_UNARY(log, mpfr_log)
HYPDET_UNARY(log1p, mpfr_log1p)
HYPDET_UNARY(sin, mpfr_sin)
HYPDET_UNARY(cos, mpfr_cos)

#undef HYPDET_UNARY

void sin_cos(const ExtReal& x, ExtReal& s, ExtReal& c) {
  ExtReal ss;
  ExtReal cc;
  mpfr_sin_cos(ss.get(), cc.get(), x.get(), MPFR_RNDN);
  s = std::move(ss);
  c = std::move(cc);
}

ExtReal atan2(const ExtReal& y, const ExtReal& x) {
  ExtReal r;
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

ExtReal pow(const ExtReal& base, const ExtReal& e) {
  ExtReal r;
  mpfr_pow(r.get(), base.get(), e.get(), MPFR_RNDN);
  return r;
}

ExtReal pow(const ExtReal& base, long e) {
  ExtReal r;
  mpfr_pow_si(r.get(), base.get(), e, MPFR_RNDN);
  return r;
}

ExtReal floor(const ExtReal& x) {
  ExtReal r;
  mpfr_floor(r.get(), x.get());
  return r;
}

ExtReal round(const ExtReal& x) {
  ExtReal r;
  mpfr_round(r.get(), x.get());
  return r;
}

ExtReal ldexp(const ExtReal& x, long e) {
  ExtReal r;
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

ExtReal min(const ExtReal& a, const ExtReal& b) { return b < a ? b : a; }
ExtReal max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }

ExtReal ratio(long p, long q) {
  ExtReal r(p);
  mpfr_div_si(r.get(), r.get(), q, MPFR_RNDN);
  return r;
}

ExtReal const_pi() {
  ExtReal r;
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

ExtReal const_euler() {
  ExtReal r;
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

ExtReal const_log2() {
  ExtReal r;
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

double log2_abs(const ExtReal& x) {
  if (x.is_zero()) return -std::numeric_limits<double>::infinity();
  long e = 0;
  double m = mpfr_get_d_2exp(&e, x.get(), MPFR_RNDN);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

}  // namespace hypdet
