#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace hypdet {

/// Smallest working precision the library accepts, in bits.
inline constexpr long kMinPrecisionBits = 64;
/// Working precision used when nothing else has been requested.
inline constexpr long kDefaultPrecisionBits = 256;

/// Current working precision (bits) of the calling thread.
long working_precision();

/// RAII scope that sets the calling thread's working precision.
/// Throws PrecisionError for requests below kMinPrecisionBits.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(long bits);
  ~WorkingPrecision();
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

 private:
  long saved_;
};

/// Raises the working precision by `extra` bits for the lifetime of the scope.
class GuardBits {
 public:
  explicit GuardBits(long extra);
  ~GuardBits();
  GuardBits(const GuardBits&) = delete;
  GuardBits& operator=(const GuardBits&) = delete;

 private:
  long saved_;
};

/// Arbitrary-precision binary floating-point real backed by MPFR.
///
/// New values and the results of arithmetic are created at the thread's
/// working precision; copies keep the precision of their source.  All
/// operations round to nearest.
class ExtReal {
 public:
  ExtReal();
  ExtReal(int v);     // NOLINT(google-explicit-constructor)
  ExtReal(long v);    // NOLINT(google-explicit-constructor)
  ExtReal(double v);  // NOLINT(google-explicit-constructor)
  explicit ExtReal(std::string_view decimal);
  explicit ExtReal(mpfr_srcptr src);

  ExtReal(const ExtReal& o);
  ExtReal(ExtReal&& o) noexcept;
  ExtReal& operator=(const ExtReal& o);
  ExtReal& operator=(ExtReal&& o) noexcept;
  ~ExtReal();

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }
  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }

  /// Re-rounds this value to `bits` of precision in place.
  void round_to(long bits);

  ExtReal& operator+=(const ExtReal& o);
  ExtReal& operator-=(const ExtReal& o);
  ExtReal& operator*=(const ExtReal& o);
  ExtReal& operator/=(const ExtReal& o);
  ExtReal operator-() const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(value_, MPFR_RNDN); }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_integer() const { return mpfr_integer_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  /// Scientific notation with `digits` significant digits, e.g. "1.5000e+00".
  std::string to_string(int digits) const;

  friend bool operator==(const ExtReal& a, const ExtReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const ExtReal& a, const ExtReal& b);

 private:
  mpfr_t value_;
};

ExtReal operator+(const ExtReal& a, const ExtReal& b);
ExtReal operator-(const ExtReal& a, const ExtReal& b);
ExtReal operator*(const ExtReal& a, const ExtReal& b);
ExtReal operator/(const ExtReal& a, const ExtReal& b);

ExtReal abs(const ExtReal& x);
ExtReal sqrt(const ExtReal& x);
ExtReal exp(const ExtReal& x);
ExtReal log(const ExtReal& x);
ExtReal log1p(const ExtReal& x);
ExtReal sin(const ExtReal& x);
ExtReal cos(const ExtReal& x);
void sin_cos(const ExtReal& x, ExtReal& s, ExtReal& c);
ExtReal atan2(const ExtReal& y, const ExtReal& x);
ExtReal pow(const ExtReal& base, const ExtReal& e);
ExtReal pow(const ExtReal& base, long e);
ExtReal floor(const ExtReal& x);
ExtReal round(const ExtReal& x);
ExtReal ldexp(const ExtReal& x, long e);
ExtReal min(const ExtReal& a, const ExtReal& b);
ExtReal max(const ExtReal& a, const ExtReal& b);

/// Exact rational p/q rounded to working precision.
ExtReal ratio(long p, long q);

ExtReal const_pi();
ExtReal const_euler();
ExtReal const_log2();

/// log2 |x|, as a double; -inf for zero.
double log2_abs(const ExtReal& x);

}  // namespace hypdet
