#include "smod/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace smod {

Bits digits_to_bits(int digits) {
  if (digits < 1) digits = 1;
  return static_cast<Bits>(std::ceil(digits * 3.3219280948873623)) + 16;
}

BigReal::BigReal(Bits prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}
BigReal::BigReal(long v, Bits prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}
BigReal::BigReal(double v, Bits prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, v, MPFR_RNDN);
}
BigReal::BigReal(const Int& v, Bits prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}
BigReal::BigReal(const Rat& v, Bits prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}
BigReal::BigReal(const char* decimal, Bits prec) {
  mpfr_init2(v_, prec);
  if (mpfr_set_str(v_, decimal, 10, MPFR_RNDN) != 0)
    throw std::invalid_argument(std::string("not a decimal number: ") + decimal);
}

BigReal::BigReal(const BigReal& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}
BigReal::BigReal(BigReal&& o) noexcept {
  // Steal the limbs and leave the source as a valid tiny zero.
  *v_ = *o.v_;
  mpfr_init2(o.v_, MPFR_PREC_MIN);
}
BigReal& BigReal::operator=(const BigReal& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}
BigReal& BigReal::operator=(BigReal&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}
BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::with_precision(Bits prec) const {
  BigReal r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

long BigReal::exponent2() const {
  if (!mpfr_regular_p(v_)) return -(1L << 40);
  return mpfr_get_exp(v_);
}

Int BigReal::round_to_int() const {
  Int z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
  return z;
}
Int BigReal::floor_to_int() const {
  Int z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
  return z;
}
Rat BigReal::to_rat() const {
  Rat q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

std::string BigReal::sci(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}
std::string BigReal::fixed(int decimals) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", std::max(decimals, 0), v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

BigReal& BigReal::operator+=(const BigReal& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(const BigReal& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(const BigReal& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(const BigReal& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigReal BigReal::operator-() const {
  BigReal r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::pi(Bits prec) {
  BigReal r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}
BigReal BigReal::euler_gamma(Bits prec) {
  BigReal r(prec);
  mpfr_const_euler(r.v_, MPFR_RNDN);
  return r;
}
BigReal BigReal::ln2(Bits prec) {
  BigReal r(prec);
  mpfr_const_log2(r.v_, MPFR_RNDN);
  return r;
}

namespace {
using Binary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
using Unary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

BigReal apply2(Binary f, const BigReal& a, const BigReal& b) {
  BigReal r(std::max(a.precision(), b.precision()));
  f(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
BigReal apply1(Unary f, const BigReal& a) {
  BigReal r(a.precision());
  f(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
}  // namespace

BigReal operator+(const BigReal& a, const BigReal& b) { return apply2(mpfr_add, a, b); }
BigReal operator-(const BigReal& a, const BigReal& b) { return apply2(mpfr_sub, a, b); }
BigReal operator*(const BigReal& a, const BigReal& b) { return apply2(mpfr_mul, a, b); }
BigReal operator/(const BigReal& a, const BigReal& b) { return apply2(mpfr_div, a, b); }

bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }

BigReal abs(const BigReal& x) { return apply1(mpfr_abs, x); }
BigReal sqrt(const BigReal& x) { return apply1(mpfr_sqrt, x); }
BigReal exp(const BigReal& x) { return apply1(mpfr_exp, x); }
BigReal log(const BigReal& x) { return apply1(mpfr_log, x); }
BigReal sin(const BigReal& x) { return apply1(mpfr_sin, x); }
BigReal cos(const BigReal& x) { return apply1(mpfr_cos, x); }
BigReal gamma(const BigReal& x) { return apply1(mpfr_gamma, x); }
BigReal atan2(const BigReal& y, const BigReal& x) { return apply2(mpfr_atan2, y, x); }
BigReal pow(const BigReal& x, const BigReal& y) { return apply2(mpfr_pow, x, y); }
BigReal pow(const BigReal& x, long n) {
  BigReal r(x.precision());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}
BigReal root(const BigReal& x, unsigned long n) {
  BigReal r(x.precision());
#if MPFR_VERSION >= MPFR_VERSION_NUM(4, 0, 0)
  mpfr_rootn_ui(r.raw(), x.raw(), n, MPFR_RNDN);
#else
  mpfr_root(r.raw(), x.raw(), n, MPFR_RNDN);
#endif
  return r;
}
BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }
BigReal pow2(long e, Bits prec) {
  BigReal r(1L, prec);
  mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
  return r;
}

double log10_abs(const BigReal& x) {
  if (x.is_zero()) return -1e300;
  long e = 0;
  double m = mpfr_get_d_2exp(&e, x.raw(), MPFR_RNDN);
  return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
}

}  // namespace smod
