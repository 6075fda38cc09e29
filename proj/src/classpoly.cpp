#include "smod/errors.hpp"
#include "smod/highprec.hpp"

namespace smod::highprec {

ClassPolynomial class_polynomial(const Int& disc, int digits) {
  const Bits prec = digits_to_bits(digits) + 64;
  auto set = qforms::reduced_forms(disc);
  // Polynomial with complex coefficients, constant term first while building.
  std::vector<BigComplex> poly{BigComplex(BigReal(1L, prec), BigReal(prec))};
  for (const auto& f : set.forms) {
    BigComplex j = j_invariant(form_root(f, prec), digits + 20);
    std::vector<BigComplex> next(poly.size() + 1, BigComplex(prec));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * j;
    }
    poly = std::move(next);
  }
  ClassPolynomial out{{}, BigReal(prec)};
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    Int c = it->re.round_to_int();
    BigReal r = max(abs(it->re - BigReal(c, prec)), abs(it->im));
    out.residual = max(out.residual, r);
    out.coefficients.push_back(c);
  }
  if (out.residual > BigReal("1e-10", prec))
    throw PrecisionError("class_polynomial: rounding residual " + out.residual.sci(5) + " at " +
                         std::to_string(digits) + " digits");
  return out;
}

}  // namespace smod::highprec
