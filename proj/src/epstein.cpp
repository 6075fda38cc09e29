// Epstein zeta of a positive definite binary form, continued through the
// theta-function split at t = lambda:
//
//   pi^-s Gamma(s) Z(s) = sum' (pi Q)^-s Gamma(s, pi lambda Q)
//                       + m^-1/2 sum' (pi Q*)^(s-1) Gamma(1-s, pi Q*/lambda)
//                       + lambda^(s-1) / (sqrt(m) (s-1)) - lambda^s / s
//
// with Q* the adjoint form divided by m.

#include <cmath>
#include <map>

#include "smod/errors.hpp"
#include "smod/highprec.hpp"

namespace smod::highprec {

namespace {

bool is_integer(const BigReal& a) { return a == BigReal(a.round_to_int(), a.precision()); }

// E1(x) = Gamma(0, x) for 0 < x, by the convergent power series.
BigReal e1_series(const BigReal& x) {
  const Bits prec = x.precision();
  const BigReal eps = pow2(-static_cast<long>(prec) - 4, prec);
  BigReal sum(prec), term(1L, prec);
  for (long k = 1; k < 100000; ++k) {
    term *= -x / BigReal(k, prec);  // (-x)^k / k!
    BigReal t = term / BigReal(k, prec);
    sum -= t;
    if (abs(t) < eps * (abs(sum) + 1L)) break;
  }
  return -BigReal::euler_gamma(prec) - log(x) + sum;
}

// Lower series gamma(a, x) = x^a e^-x sum x^n / (a (a+1) ... (a+n)).
BigReal lower_gamma_series(const BigReal& a, const BigReal& x) {
  const Bits prec = x.precision();
  const BigReal eps = pow2(-static_cast<long>(prec) - 4, prec);
  BigReal term = BigReal(1L, prec) / a, sum = term;
  for (long n = 1; n < 100000; ++n) {
    term *= x / (a + n);
    sum += term;
    if (abs(term) < eps * abs(sum)) break;
  }
  return pow(x, a) * exp(-x) * sum;
}

// Legendre continued fraction, modified Lentz.  Good for x > |a| + 1.
BigReal upper_gamma_cf(const BigReal& a, const BigReal& x) {
  const Bits prec = x.precision();
  const BigReal eps = pow2(-static_cast<long>(prec) + 2, prec);
  const BigReal tiny = pow2(-4 * static_cast<long>(prec), prec);
  BigReal b = x + 1L - a;
  BigReal c = BigReal(1L, prec) / tiny;
  BigReal d = BigReal(1L, prec) / b;
  BigReal h = d;
  for (long i = 1; i < 200000; ++i) {
    BigReal an = -BigReal(i, prec) * (BigReal(i, prec) - a);
    b += BigReal(2L, prec);
    d = an * d + b;
    if (abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (abs(c) < tiny) c = tiny;
    d = BigReal(1L, prec) / d;
    BigReal del = d * c;
    h *= del;
    if (abs(del - 1L) < eps) break;
  }
  return exp(-x) * pow(x, a) * h;
}

}  // namespace

// Upper incomplete gamma Gamma(a, x), x > 0, any real a.
BigReal upper_gamma(const BigReal& a_in, const BigReal& x_in) {
  if (x_in.sign() <= 0) throw DomainError("upper_gamma: x must be positive");
  // The series cancels like e^x; carry that many guard bits.
  const Bits base = std::max(a_in.precision(), x_in.precision());
  const double xd = x_in.to_double();
  const double ad = a_in.to_double();
  if (xd > std::fabs(ad) + 1.0) {
    BigReal a = a_in.with_precision(base + 16), x = x_in.with_precision(base + 16);
    return upper_gamma_cf(a, x).with_precision(base);
  }
  // Near a = 0, -1, ... both Gamma(a) and the lower series blow up like
  // 1 / dist and cancel; carry those bits as well.
  Bits near_pole = 0;
  if (ad < 0.5) {
    double dist = std::fabs(ad - std::nearbyint(ad));
    if (dist > 0) near_pole = static_cast<Bits>(std::max(0.0, -std::log2(dist)));
  }
  const Bits prec = base + static_cast<Bits>(xd * 1.45) + near_pole + 32;
  BigReal a = a_in.with_precision(prec), x = x_in.with_precision(prec);
  if (is_integer(a)) {
    long n = a.round_to_int().get_si();
    if (n >= 1) {
      // (n-1)! e^-x sum_{k<n} x^k/k!
      BigReal s(prec), t(1L, prec), fact(1L, prec);
      for (long k = 0; k < n; ++k) {
        if (k > 0) t *= x / BigReal(k, prec);
        s += t;
        if (k > 0) fact *= BigReal(k, prec);
      }
      return (fact * exp(-x) * s).with_precision(base);
    }
    // Gamma(a, x) = (Gamma(a+1, x) - x^a e^-x) / a, downward from E1.
    BigReal g = e1_series(x);
    for (long k = 0; k > n; --k) {  // from a = k to a = k-1
      BigReal am1(k - 1, prec);
      g = (g - pow(x, am1) * exp(-x)) / am1;
    }
    return g.with_precision(base);
  }
  return (gamma(a) - lower_gamma_series(a, x)).with_precision(base);
}

namespace {

struct Shells {
  // value of the integer form -> number of nonzero lattice points
  std::map<Int, long> counts;
};

// Nonzero (x, y) with A x^2 + 2B xy + C y^2 <= bound.
Shells enumerate(const Int& A, const Int& B, const Int& C, double bound) {
  Shells s;
  const double a = A.get_d(), b = B.get_d(), c = C.get_d();
  const double m = a * c - b * b;
  long ymax = static_cast<long>(std::floor(std::sqrt(bound * a / m))) + 1;
  for (long y = -ymax; y <= ymax; ++y) {
    double disc = b * b * y * y - a * (c * y * y - bound);
    if (disc < 0) continue;
    double r = std::sqrt(disc);
    long x0 = static_cast<long>(std::floor((-b * y - r) / a)) - 1;
    long x1 = static_cast<long>(std::ceil((-b * y + r) / a)) + 1;
    for (long x = x0; x <= x1; ++x) {
      if (x == 0 && y == 0) continue;
      Int X(x), Y(y);
      Int q = A * X * X + 2 * B * X * Y + C * Y * Y;
      if (q.get_d() <= bound) ++s.counts[q];
    }
  }
  return s;
}

struct Setup {
  Bits prec;
  BigReal pi, m, sqrt_m, lambda;
  Shells direct, dual;  // dual holds m * Q*
};

Setup prepare(const GaussForm& q, int digits) {
  if (q.A <= 0 || q.det() <= 0) throw DomainError("epstein: form must be positive definite");
  Setup st{digits_to_bits(digits) + 48, BigReal(), BigReal(), BigReal(), BigReal(), {}, {}};
  st.pi = BigReal::pi(st.prec);
  st.m = BigReal(q.det(), st.prec);
  st.sqrt_m = sqrt(st.m);
  st.lambda = BigReal(1L, st.prec) / st.sqrt_m;
  // Terms decay like e^{-x}; stop past x = cut.
  const double cut = static_cast<double>(st.prec) * 0.6931471805599453 + 40.0;
  const double md = q.det().get_d();
  const double lam = 1.0 / std::sqrt(md);
  st.direct = enumerate(q.A, q.B, q.C, cut / (M_PI * lam));
  st.dual = enumerate(q.C, -q.B, q.A, cut * lam / M_PI * md);
  return st;
}

}  // namespace

BigReal epstein_zeta(const GaussForm& q, const BigReal& s_in, int digits) {
  Setup st = prepare(q, digits);
  const Bits prec = st.prec;
  BigReal s = s_in.with_precision(prec);
  if (s == BigReal(1L, prec)) throw DomainError("epstein_zeta: pole at s = 1");
  BigReal one(1L, prec);
  BigReal sum(prec);
  for (const auto& [v, n] : st.direct.counts) {
    BigReal pq = st.pi * BigReal(v, prec);
    sum += BigReal(n, prec) * pow(pq, -s) * upper_gamma(s, pq * st.lambda);
  }
  BigReal dual(prec);
  for (const auto& [v, n] : st.dual.counts) {
    BigReal pq = st.pi * BigReal(v, prec) / st.m;
    dual += BigReal(n, prec) * pow(pq, s - one) * upper_gamma(one - s, pq / st.lambda);
  }
  BigReal lam = sum + dual / st.sqrt_m + pow(st.lambda, s - one) / (st.sqrt_m * (s - one)) - pow(st.lambda, s) / s;
  BigReal z = pow(st.pi, s) * lam / gamma(s);
  return z.with_precision(digits_to_bits(digits));
}

BigReal epstein_constant(const GaussForm& q, int digits) {
  Setup st = prepare(q, digits);
  const Bits prec = st.prec;
  BigReal f1(prec);
  for (const auto& [v, n] : st.direct.counts) {
    BigReal pq = st.pi * BigReal(v, prec);
    f1 += BigReal(n, prec) * exp(-pq * st.lambda) / pq;
  }
  BigReal dual(prec);
  const BigReal zero(0L, prec);
  for (const auto& [v, n] : st.dual.counts) {
    BigReal pq = st.pi * BigReal(v, prec) / st.m;
    dual += BigReal(n, prec) * upper_gamma(zero, pq / st.lambda);
  }
  f1 += dual / st.sqrt_m;
  BigReal c0 = f1 + log(st.lambda) / st.sqrt_m - st.lambda;
  BigReal a0 = st.pi * c0 + st.pi * (log(st.pi) + BigReal::euler_gamma(prec)) / st.sqrt_m;
  return a0.with_precision(digits_to_bits(digits));
}

std::pair<BigComplex, BigComplex> gauss_roots(const GaussForm& q, Bits prec) {
  BigReal A(q.A, prec), B(q.B, prec);
  BigReal im = sqrt(BigReal(q.det(), prec)) / A;
  return {BigComplex(B / A, im), BigComplex(-B / A, im)};
}

namespace {

// ln |eta(w1) eta(w2)| for the roots of q.
BigReal log_eta_pair(const GaussForm& q, int digits, Bits prec) {
  auto [w1, w2] = gauss_roots(q, prec);
  return log(abs(eta(w1, digits + 10))) + log(abs(eta(w2, digits + 10)));
}

}  // namespace

BigReal verify_grenzformel(const GaussForm& q, int digits) {
  const Bits prec = digits_to_bits(digits) + 48;
  BigReal lhs = epstein_constant(q, digits + 10).with_precision(prec);
  BigReal pi = BigReal::pi(prec);
  BigReal m(q.det(), prec);
  BigReal rm = sqrt(m);
  BigReal rhs = 2L * pi * BigReal::euler_gamma(prec) / rm + pi / rm * log(BigReal(q.A, prec) / (4L * m)) -
                2L * pi / rm * log_eta_pair(q, digits, prec);
  return (lhs - rhs).with_precision(digits_to_bits(digits));
}

BigReal verify_fundamental_lemma(const GaussForm& q, const GaussForm& q1, int digits) {
  if (q.det() != q1.det()) throw DomainError("fundamental lemma: forms must share the determinant");
  const Bits prec = digits_to_bits(digits) + 48;
  BigReal lhs = (epstein_constant(q, digits + 10) - epstein_constant(q1, digits + 10)).with_precision(prec);
  BigReal pi = BigReal::pi(prec);
  BigReal rm = sqrt(BigReal(q.det(), prec));
  BigReal inner = log(BigReal(q.A, prec) / BigReal(q1.A, prec)) / 2L + log_eta_pair(q1, digits, prec) -
                  log_eta_pair(q, digits, prec);
  BigReal rhs = 2L * pi / rm * inner;
  return (lhs - rhs).with_precision(digits_to_bits(digits));
}

BigReal verify_formula_G(const Int& A, const Int& C, int digits) {
  if (A <= 0 || C <= 0) throw DomainError("formula G: A and C must be positive");
  const Bits prec = digits_to_bits(digits) + 48;
  Int m = 2 * A * C;
  BigReal lhs = (epstein_constant({A, 0, 2 * C}, digits + 10) - epstein_constant({2 * A, 0, C}, digits + 10))
                    .with_precision(prec);
  BigReal pi = BigReal::pi(prec);
  BigReal rm = sqrt(BigReal(m, prec));
  BigReal g = gn_numeric(make_rat(m, A * A), digits + 10).with_precision(prec);
  BigReal rhs = 4L * pi / rm * log(g);
  return (lhs - rhs).with_precision(digits_to_bits(digits));
}

}  // namespace smod::highprec
