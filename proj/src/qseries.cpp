#include "smod/arith.hpp"
#include "smod/errors.hpp"
#include "smod/highprec.hpp"

namespace smod::highprec {

namespace {

Bits working(int digits) { return digits_to_bits(digits) + 32; }

// prod_{n>=1} (1 - q^n) for |q| < 1, stopping once |q^n| < 2^-(prec+8).
BigComplex euler_product(const BigComplex& q) {
  const Bits prec = q.precision();
  const BigReal stop = pow2(-static_cast<long>(prec) - 8, prec);
  BigComplex one(BigReal(1L, prec), BigReal(prec));
  BigComplex prod = one, qn = q;
  for (long n = 1; n < 1000000; ++n) {
    prod = prod * (one - qn);
    if (abs(qn) < stop) break;
    qn = qn * q;
  }
  return prod;
}

}  // namespace

BigReal gn_numeric(const Rat& n, int digits) {
  if (n <= 0) throw DomainError("gn_numeric: n must be positive");
  const Bits prec = working(digits);
  const BigReal pi = BigReal::pi(prec);
  BigReal rn = sqrt(BigReal(n, prec));
  BigReal x = exp(-pi * rn);  // e^{-pi sqrt n}
  BigReal x2 = x * x;
  const BigReal stop = pow2(-static_cast<long>(prec) - 8, prec);
  BigReal prod(1L, prec), t = x;
  for (long k = 0; k < 1000000 && t > stop; ++k) {
    prod *= BigReal(1L, prec) - t;
    t *= x2;
  }
  BigReal pre = exp(pi * rn / 24L) / root(BigReal(2L, prec), 4);
  return (pre * prod).with_precision(digits_to_bits(digits));
}

BigComplex eta(const BigComplex& omega, int digits) {
  if (omega.im.sign() <= 0) throw DomainError("eta: Im(omega) must be positive");
  const Bits prec = std::max(working(digits), omega.precision());
  BigComplex w(omega.re.with_precision(prec), omega.im.with_precision(prec));
  const BigReal pi = BigReal::pi(prec);
  BigComplex i_pi(BigReal(prec), pi);
  BigComplex lead = exp(i_pi * w * (BigReal(1L, prec) / BigReal(12L, prec)));
  BigComplex q = exp(i_pi * w * BigReal(2L, prec));
  return lead * euler_product(q);
}

BigComplex j_invariant(const BigComplex& tau, int digits) {
  if (tau.im.sign() <= 0) throw DomainError("j_invariant: Im(tau) must be positive");
  const Bits prec = std::max(working(digits) + 64, tau.precision());
  BigComplex t(tau.re.with_precision(prec), tau.im.with_precision(prec));
  const BigReal pi = BigReal::pi(prec);
  BigComplex q = exp(BigComplex(BigReal(prec), pi * 2L) * t);
  const BigReal stop = pow2(-static_cast<long>(prec) - 8, prec);
  BigComplex e4(BigReal(1L, prec), BigReal(prec));
  BigComplex qn = q;
  for (long n = 1; n < 1000000; ++n) {
    Int s3 = 0;
    for (const Int& d : arith::divisors(Int(n))) s3 += d * d * d;
    e4 += qn * BigReal(Int(240 * s3), prec);
    if (abs(qn) * BigReal(s3, prec) < stop) break;
    qn = qn * q;
  }
  BigComplex p = euler_product(q);
  BigComplex p2 = p * p, p4 = p2 * p2, p8 = p4 * p4, p16 = p8 * p8;
  BigComplex delta = q * p16 * p8;
  return e4 * e4 * e4 / delta;
}

BigComplex form_root(const qforms::QuadForm& f, Bits prec) {
  if (!f.positive_definite()) throw DomainError("form_root: form must be positive definite");
  BigReal two_a(Int(2 * f.a), prec);
  return {BigReal(Int(-f.b), prec) / two_a, sqrt(BigReal(Int(-f.discriminant()), prec)) / two_a};
}

}  // namespace smod::highprec
