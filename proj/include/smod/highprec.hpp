#pragma once

#include <vector>

#include "smod/bigcomplex.hpp"
#include "smod/bigreal.hpp"
#include "smod/qforms.hpp"
#include "smod/types.hpp"

namespace smod::highprec {

// ---- elliptic integrals -------------------------------------------------
BigReal agm(const BigReal& a, const BigReal& b);
// Complete elliptic integral of the first kind, K(k) = pi / (2 agm(1, k')).
BigReal ell_K(const BigReal& k);

struct SeriesValue {
  BigReal value;
  BigReal tail_bound;
  long terms;
};
// 1 + (1/2)^2 a + (1*3/(2*4))^2 a^2 + ... truncated after `terms` terms.
SeriesValue F_series(const BigReal& alpha, long terms);
// F(alpha) = (2/pi) K(sqrt(alpha)) via the AGM.
BigReal F_agm(const BigReal& alpha);

// ---- q-series -------------------------------------------------------------
// Ramanujan's class invariant g_n, n > 0 rational.
BigReal gn_numeric(const Rat& n, int digits);
BigComplex eta(const BigComplex& omega, int digits);
BigComplex j_invariant(const BigComplex& tau, int digits);
// Upper half-plane root (-b + sqrt(disc)) / (2a) of a positive definite form.
BigComplex form_root(const qforms::QuadForm& f, Bits prec);

// ---- class polynomial -----------------------------------------------------
struct ClassPolynomial {
  std::vector<Int> coefficients;  // leading coefficient first
  BigReal residual;               // worst distance to the rounded integers
};
ClassPolynomial class_polynomial(const Int& disc, int digits = 300);

// ---- Epstein zeta ---------------------------------------------------------
// Gauss form A X^2 + 2B XY + C Y^2, determinant m = AC - B^2 > 0.
struct GaussForm {
  Int A, B, C;
  Int det() const { return A * C - B * B; }
};

// Upper incomplete gamma Gamma(a, x) for x > 0 and any real a.
BigReal upper_gamma(const BigReal& a, const BigReal& x);

// Analytically continued sum' 1/Q(x,y)^s for real s != 1.
BigReal epstein_zeta(const GaussForm& q, const BigReal& s, int digits);
// Constant term at s = 1: lim (S(s) - (pi/sqrt m)/(s-1)).
BigReal epstein_constant(const GaussForm& q, int digits);

// LHS - RHS of lim {S_(A,0,2C) - S_(2A,0,C)} = 4 pi / sqrt(m) ln g_{m/A^2}.
BigReal verify_formula_G(const Int& A, const Int& C, int digits);
// Constant term minus 2 pi gamma/sqrt(m) + (pi/sqrt m) ln(A/4m)
//   - (2 pi/sqrt m) ln |eta(w1) eta(w2)|.
BigReal verify_grenzformel(const GaussForm& q, int digits);
// Difference of two constant terms against the eta-quotient expression.
BigReal verify_fundamental_lemma(const GaussForm& q, const GaussForm& q1, int digits);

// Roots w1, w2 of A + 2B w + C w^2... as used by the limit formula.
std::pair<BigComplex, BigComplex> gauss_roots(const GaussForm& q, Bits prec);

}  // namespace smod::highprec
