#include "smod/pell.hpp"

#include "smod/arith.hpp"
#include "smod/errors.hpp"

namespace smod::pell {

namespace {

void check_delta(const Int& delta) {
  if (delta < 2 || arith::is_square(delta)) throw DomainError("Pell: delta must be a nonsquare >= 2");
}

// Walks the convergents p/q of sqrt(delta) and returns the first (T, U) with
// T^2 - delta U^2 in `targets`, scaling by 2 whenever the hit is on +-1 so that
// the result always solves a "4" equation.  Any solution with gcd(T,U) = 1 of
// |T^2 - delta U^2| = 4 has T/U a convergent once delta > 16; smaller delta is
// handled by direct search.
struct Hit {
  Int T, U;
  int norm;  // +4 or -4
};

Hit least_solution(const Int& delta, bool allow_negative) {
  if (delta <= 16) {
    for (Int U = 1;; ++U) {
      for (int sg : {-4, 4}) {  // same U: the norm -1 unit is the smaller
        if (sg < 0 && !allow_negative) continue;
        Int t2 = delta * U * U + sg;
        if (t2 > 0 && arith::is_square(t2)) return {arith::isqrt(t2), U, sg};
      }
    }
  }
  Int a0 = arith::isqrt(delta);
  // Continued fraction of sqrt(delta): P, Q recurrences.
  Int P = 0, Q = 1, a = a0;
  Int p_prev = 1, p = a0, q_prev = 0, q = 1;
  bool have_best = false;
  Hit best;
  for (int iter = 0; iter < 100000; ++iter) {
    Int n = p * p - delta * q * q;
    auto consider = [&](const Int& T, const Int& U, int norm) {
      if (!have_best || U < best.U) {
        best = {T, U, norm};
        have_best = true;
      }
    };
    if (n == 4) consider(p, q, 4);
    if (n == -4 && allow_negative) consider(p, q, -4);
    if (n == 1) consider(2 * p, 2 * q, 4);
    if (n == -1 && allow_negative) consider(2 * p, 2 * q, -4);
    if (have_best && q >= best.U) return best;
    P = a * Q - P;
    Q = (delta - P * P) / Q;
    a = (a0 + P) / Q;
    Int pn = a * p + p_prev, qn = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = pn;
    q = qn;
  }
  throw PrecisionError("Pell: continued fraction did not terminate");
}

}  // namespace

PellSolution solve_even_pell(const Int& delta) {
  check_delta(delta);
  Hit h = least_solution(delta, false);
  return {delta, h.T, h.U};
}

surd::SurdElement unit_value(const PellSolution& p) {
  return surd::SurdElement(make_rat(p.T, 2)) + surd::SurdElement::sqrt_of(p.delta) * make_rat(p.U, 2);
}

surd::SurdElement fundamental_unit(const Int& m) {
  check_delta(m);
  Hit h = least_solution(m, true);
  return surd::SurdElement(make_rat(h.T, 2)) + surd::SurdElement::sqrt_of(m) * make_rat(h.U, 2);
}

}  // namespace smod::pell
