#pragma once

#include <mpfr.h>

#include <concepts>
#include <string>

#include "smod/types.hpp"

namespace smod {

using Bits = mpfr_prec_t;

// Decimal digits to a binary precision, with a small guard.
Bits digits_to_bits(int digits);

// Owning wrapper around mpfr_t.  Every value carries its own precision; a
// binary operation produces a result at the larger of the two precisions.
class BigReal {
 public:
  explicit BigReal(Bits prec = 128);
  BigReal(long v, Bits prec);
  BigReal(double v, Bits prec);
  BigReal(const Int& v, Bits prec);
  BigReal(const Rat& v, Bits prec);
  BigReal(const char* decimal, Bits prec);

  BigReal(const BigReal& o);
  BigReal(BigReal&& o) noexcept;
  BigReal& operator=(const BigReal& o);
  BigReal& operator=(BigReal&& o) noexcept;
  ~BigReal();

  Bits precision() const { return mpfr_get_prec(v_); }
  // Same value rounded (or extended) to another precision.
  BigReal with_precision(Bits prec) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long exponent2() const;  // floor(log2|x|)+1, or a large negative for zero
  Int round_to_int() const;
  Int floor_to_int() const;
  Rat to_rat() const;  // exact binary value

  // Significant-digit rendering, e.g. "5.6048370571462947213e+00".
  std::string sci(int digits) const;
  // Fixed notation with the given number of digits after the point.
  std::string fixed(int decimals) const;

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal operator-() const;

  static BigReal pi(Bits prec);
  static BigReal euler_gamma(Bits prec);
  static BigReal ln2(Bits prec);

 private:
  mpfr_t v_;
};

BigReal operator+(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a, const BigReal& b);
BigReal operator*(const BigReal& a, const BigReal& b);
BigReal operator/(const BigReal& a, const BigReal& b);

template <std::integral I>
BigReal operator+(const BigReal& a, I b) { return a + BigReal(static_cast<long>(b), a.precision()); }
template <std::integral I>
BigReal operator-(const BigReal& a, I b) { return a - BigReal(static_cast<long>(b), a.precision()); }
template <std::integral I>
BigReal operator*(const BigReal& a, I b) { return a * BigReal(static_cast<long>(b), a.precision()); }
template <std::integral I>
BigReal operator/(const BigReal& a, I b) { return a / BigReal(static_cast<long>(b), a.precision()); }
template <std::integral I>
BigReal operator+(I a, const BigReal& b) { return BigReal(static_cast<long>(a), b.precision()) + b; }
template <std::integral I>
BigReal operator-(I a, const BigReal& b) { return BigReal(static_cast<long>(a), b.precision()) - b; }
template <std::integral I>
BigReal operator*(I a, const BigReal& b) { return BigReal(static_cast<long>(a), b.precision()) * b; }
template <std::integral I>
BigReal operator/(I a, const BigReal& b) { return BigReal(static_cast<long>(a), b.precision()) / b; }

bool operator<(const BigReal& a, const BigReal& b);
bool operator>(const BigReal& a, const BigReal& b);
bool operator<=(const BigReal& a, const BigReal& b);
bool operator>=(const BigReal& a, const BigReal& b);
bool operator==(const BigReal& a, const BigReal& b);

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& x, long n);
BigReal root(const BigReal& x, unsigned long n);
BigReal gamma(const BigReal& x);
BigReal max(const BigReal& a, const BigReal& b);
// 2^e at the given precision.
BigReal pow2(long e, Bits prec);

// log10 |x|, a rough magnitude used for error reporting (double accuracy).
double log10_abs(const BigReal& x);

}  // namespace smod
