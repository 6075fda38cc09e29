#include "smod/bigcomplex.hpp"

namespace smod {

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}
BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}
BigComplex& BigComplex::operator*=(const BigComplex& o) {
  *this = *this * o;
  return *this;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
BigComplex operator*(const BigComplex& a, const BigReal& s) { return {a.re * s, a.im * s}; }
BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigReal d = norm(b);
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }

BigReal norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
BigReal abs(const BigComplex& z) { return sqrt(norm(z)); }
BigReal arg(const BigComplex& z) { return atan2(z.im, z.re); }
BigComplex exp(const BigComplex& z) {
  BigReal m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}
BigComplex pow(const BigComplex& z, long n) {
  bool inv = n < 0;
  unsigned long e = inv ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  BigComplex r(BigReal(1L, z.precision()), BigReal(0L, z.precision()));
  BigComplex b = z;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  if (inv) r = BigComplex(BigReal(1L, z.precision()), BigReal(0L, z.precision())) / r;
  return r;
}
BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

}  // namespace smod
