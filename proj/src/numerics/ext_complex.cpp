#include "hypdet/numerics/ext_complex.hpp"

#include "hypdet/errors.hpp"

namespace hypdet {

ExtComplex& ExtComplex::operator+=(const ExtComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ExtComplex& ExtComplex::operator-=(const ExtComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ExtComplex& ExtComplex::operator*=(const ExtComplex& o) {
  *this = *this * o;
  return *this;
}

ExtComplex& ExtComplex::operator/=(const ExtComplex& o) {
  *this = *this / o;
  return *this;
}

std::string ExtComplex::to_string(int digits) const {
  std::string s = re_.to_string(digits);
  s += im_.sign() < 0 ? " - " : " + ";
  s += abs(im_).to_string(digits);
  s += "i";
  return s;
}

ExtComplex operator+(const ExtComplex& a, const ExtComplex& b) { return {a.re() + b.re(), a.im() + b.im()}; }

ExtComplex operator-(const ExtComplex& a, const ExtComplex& b) { return {a.re() - b.re(), a.im() - b.im()}; }

ExtComplex operator*(const ExtComplex& a, const ExtComplex& b) {
  if (a.im().is_zero()) return {a.re() * b.re(), a.re() * b.im()};
  if (b.im().is_zero()) return {a.re() * b.re(), a.im() * b.re()};
  return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
}

ExtComplex operator/(const ExtComplex& a, const ExtComplex& b) {
  if (b.im().is_zero()) return {a.re() / b.re(), a.im() / b.re()};
  ExtReal d = b.re() * b.re() + b.im() * b.im();
  return {(a.re() * b.re() + a.im() * b.im()) / d, (a.im() * b.re() - a.re() * b.im()) / d};
}

ExtComplex operator*(const ExtComplex& a, const ExtReal& b) { return {a.re() * b, a.im() * b}; }
ExtComplex operator*(const ExtReal& a, const ExtComplex& b) { return {a * b.re(), a * b.im()}; }
ExtComplex operator/(const ExtComplex& a, const ExtReal& b) { return {a.re() / b, a.im() / b}; }

ExtComplex conj(const ExtComplex& z) { return {z.re(), -z.im()}; }

ExtReal norm(const ExtComplex& z) { return z.re() * z.re() + z.im() * z.im(); }

ExtReal abs(const ExtComplex& z) {
  ExtReal r;
  mpfr_hypot(r.get(), z.re().get(), z.im().get(), MPFR_RNDN);
  return r;
}

ExtReal arg(const ExtComplex& z) {
  if (z.im().is_zero() && z.re().sign() < 0) return const_pi();
  return atan2(z.im(), z.re());
}

ExtComplex exp(const ExtComplex& z) {
  ExtReal m = exp(z.re());
  if (z.im().is_zero()) return {m, ExtReal(0)};
  ExtReal s;
  ExtReal c;
  sin_cos(z.im(), s, c);
  return {m * c, m * s};
}

ExtComplex log(const ExtComplex& z) {
  if (z.re().is_zero() && z.im().is_zero()) throw PoleError("log(0)");
  if (z.im().is_zero() && z.re().sign() > 0) return {log(z.re()), ExtReal(0)};
  return {log(abs(z)), arg(z)};
}

ExtComplex pow(const ExtComplex& base, const ExtComplex& e) {
  if (base.re().is_zero() && base.im().is_zero()) {
    if (e.re().sign() > 0) return {};
    throw PoleError("0 raised to a power with non-positive real part");
  }
  return exp(e * log(base));
}

ExtComplex pow(const ExtComplex& base, long e) {
  if (e < 0) return ExtComplex(1) / pow(base, -e);
  ExtComplex result(1);
  ExtComplex b = base;
  while (e > 0) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

ExtComplex sqrt(const ExtComplex& z) {
  if (z.im().is_zero() && z.re().sign() >= 0) return {sqrt(z.re()), ExtReal(0)};
  ExtReal r = abs(z);
  ExtReal a = sqrt((r + abs(z.re())) / ExtReal(2));
  // principal root: non-negative real part, imaginary part carries sign of Im z
  // (Im z = 0, Re z < 0 maps to +i sqrt|z|).
  if (z.re().sign() >= 0) return {a, z.im() / (a * ExtReal(2))};
  ExtReal b = abs(z.im()) / (a * ExtReal(2));
  bool neg = z.im().sign() < 0;
  return {b, neg ? -a : a};
}

ExtComplex sin(const ExtComplex& z) {
  ExtReal s;
  ExtReal c;
  sin_cos(z.re(), s, c);
  ExtReal sh;
  ExtReal ch;
  mpfr_sinh_cosh(sh.get(), ch.get(), z.im().get(), MPFR_RNDN);
  return {s * ch, c * sh};
}

ExtComplex cos(const ExtComplex& z) {
  ExtReal s;
  ExtReal c;
  sin_cos(z.re(), s, c);
  ExtReal sh;
  ExtReal ch;
  mpfr_sinh_cosh(sh.get(), ch.get(), z.im().get(), MPFR_RNDN);
  return {c * ch, -(s * sh)};
}

ExtComplex expi(const ExtReal& theta) {
  ExtReal s;
  ExtReal c;
  sin_cos(theta, s, c);
  return {c, s};
}

ExtComplex i_pi() { return {ExtReal(0), const_pi()}; }

ExtComplex real_base_pow(const ExtReal& log_w, const ExtComplex& s) { return exp(-(s * log_w)); }

ExtReal relative_difference(const ExtComplex& a, const ExtComplex& b) {
  ExtReal d = abs(a - b);
  ExtReal scale = abs(b);
  if (scale.is_zero()) return d;
  return d / scale;
}

}  // namespace hypdet
