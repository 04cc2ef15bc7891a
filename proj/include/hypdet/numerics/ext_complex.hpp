#pragma once

#include <string>

#include "hypdet/numerics/ext_real.hpp"

namespace hypdet {

/// Extended-precision complex number, Cartesian form.
///
/// Multivalued functions (log, pow, sqrt) use the principal branch, with the
/// argument in (-pi, pi].
class ExtComplex {
 public:
  ExtComplex() = default;
  ExtComplex(ExtReal re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  ExtComplex(ExtReal re, ExtReal im) : re_(std::move(re)), im_(std::move(im)) {}
  ExtComplex(int re) : re_(re) {}     // NOLINT(google-explicit-constructor)
  ExtComplex(long re) : re_(re) {}    // NOLINT(google-explicit-constructor)
  ExtComplex(double re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  ExtComplex(double re, double im) : re_(re), im_(im) {}

  const ExtReal& re() const { return re_; }
  const ExtReal& im() const { return im_; }
  ExtReal& re() { return re_; }
  ExtReal& im() { return im_; }

  bool is_real() const { return im_.is_zero(); }
  /// True when the value is an exact real number <= 0.
  bool on_nonpositive_axis() const { return im_.is_zero() && re_.sign() <= 0; }

  ExtComplex& operator+=(const ExtComplex& o);
  ExtComplex& operator-=(const ExtComplex& o);
  ExtComplex& operator*=(const ExtComplex& o);
  ExtComplex& operator/=(const ExtComplex& o);
  ExtComplex operator-() const { return {-re_, -im_}; }

  std::string to_string(int digits) const;

  friend bool operator==(const ExtComplex& a, const ExtComplex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  ExtReal re_;
  ExtReal im_;
};

ExtComplex operator+(const ExtComplex& a, const ExtComplex& b);
ExtComplex operator-(const ExtComplex& a, const ExtComplex& b);
ExtComplex operator*(const ExtComplex& a, const ExtComplex& b);
ExtComplex operator/(const ExtComplex& a, const ExtComplex& b);
ExtComplex operator*(const ExtComplex& a, const ExtReal& b);
ExtComplex operator*(const ExtReal& a, const ExtComplex& b);
ExtComplex operator/(const ExtComplex& a, const ExtReal& b);

ExtComplex conj(const ExtComplex& z);
/// |z|^2
ExtReal norm(const ExtComplex& z);
ExtReal abs(const ExtComplex& z);
ExtReal arg(const ExtComplex& z);
ExtComplex exp(const ExtComplex& z);
ExtComplex log(const ExtComplex& z);
ExtComplex pow(const ExtComplex& base, const ExtComplex& e);
ExtComplex pow(const ExtComplex& base, long e);
ExtComplex sqrt(const ExtComplex& z);
ExtComplex sin(const ExtComplex& z);
ExtComplex cos(const ExtComplex& z);
/// e^{i theta}
ExtComplex expi(const ExtReal& theta);

/// i * pi
ExtComplex i_pi();

/// exp(-s log w) for real w > 0 (no branch issue, faster than pow).
ExtComplex real_base_pow(const ExtReal& log_w, const ExtComplex& s);

/// Relative distance |a - b| / max(|b|, tiny); used throughout the test suites.
ExtReal relative_difference(const ExtComplex& a, const ExtComplex& b);

}  // namespace hypdet
