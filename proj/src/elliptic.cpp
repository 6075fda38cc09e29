#include <stdexcept>

#include "smod/errors.hpp"
#include "smod/highprec.hpp"

namespace smod::highprec {

BigReal agm(const BigReal& a0, const BigReal& b0) {
  if (a0.sign() < 0 || b0.sign() < 0) throw DomainError("agm: negative argument");
  const Bits prec = std::max(a0.precision(), b0.precision());
  BigReal a = a0.with_precision(prec), b = b0.with_precision(prec);
  if (a.is_zero() || b.is_zero()) return BigReal(prec);
  const BigReal eps = pow2(-static_cast<long>(prec) + 4, prec);
  for (int i = 0; i < 10000; ++i) {
    BigReal an = (a + b) / 2L;
    BigReal bn = sqrt(a * b);
    bool done = abs(an - bn) <= eps * an;
    a = std::move(an);
    b = std::move(bn);
    if (done) break;
  }
  return (a + b) / 2L;
}

BigReal ell_K(const BigReal& k) {
  const Bits prec = k.precision();
  if (abs(k) >= BigReal(1L, prec)) throw DomainError("ell_K: |k| must be < 1");
  BigReal kp = sqrt(BigReal(1L, prec) - k * k);
  return BigReal::pi(prec) / (2L * agm(BigReal(1L, prec), kp));
}

BigReal F_agm(const BigReal& alpha) {
  const Bits prec = alpha.precision();
  if (alpha.sign() < 0 || alpha >= BigReal(1L, prec)) throw DomainError("F: alpha must lie in [0, 1)");
  return BigReal(1L, prec) / agm(BigReal(1L, prec), sqrt(BigReal(1L, prec) - alpha));
}

SeriesValue F_series(const BigReal& alpha, long terms) {
  const Bits prec = alpha.precision();
  if (alpha.sign() < 0 || alpha >= BigReal(1L, prec)) throw DomainError("F_series: alpha must lie in [0, 1)");
  if (terms < 1) terms = 1;
  terms = std::min(terms, 1000000L);
  BigReal sum(1L, prec), c(1L, prec), p(1L, prec);
  for (long n = 1; n < terms; ++n) {
    // ((2n-1)/(2n))^2 ratio between successive coefficients
    c *= BigReal(2 * n - 1, prec) * BigReal(2 * n - 1, prec) / (BigReal(2 * n, prec) * BigReal(2 * n, prec));
    p *= alpha;
    sum += c * p;
  }
  // Coefficients decrease, so the tail is below c_N alpha^N / (1 - alpha).
  BigReal cN = c * BigReal(2 * terms - 1, prec) * BigReal(2 * terms - 1, prec) /
               (BigReal(2 * terms, prec) * BigReal(2 * terms, prec));
  BigReal tail = cN * p * alpha / (BigReal(1L, prec) - alpha);
  return {sum, tail, terms};
}

}  // namespace smod::highprec
