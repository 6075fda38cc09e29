#include "commands.hpp"

#include <string>

#include "smod/arith.hpp"
#include "smod/errors.hpp"
#include "smod/highprec.hpp"
#include "smod/modulus.hpp"
#include "smod/pell.hpp"
#include "smod/qforms.hpp"
#include "smod/weber.hpp"

namespace smod::cli {

using nlohmann::json;
using surd::SurdElement;
using surd::UnitProduct;

namespace {

std::string str(const Int& v) { return v.get_str(); }
std::string str(const Rat& v) { return v.get_str(); }

BigReal ten_to(int e, Bits prec) {
  BigReal ten(10L, prec);
  return pow(ten, static_cast<long>(e));
}

// Fills residual / tolerance / pass fields and returns the exit code.
int judge(json& j, const BigReal& residual, int tol_exp) {
  BigReal r = abs(residual);
  j["residual"] = r.sci(6);
  j["tolerance"] = "1e" + std::to_string(tol_exp);
  bool ok = r < ten_to(tol_exp, r.precision());
  j["pass"] = ok;
  return ok ? kOk : kResidual;
}

json form_json(const qforms::QuadForm& f) {
  return {{"a", str(f.a)}, {"b", str(f.b)}, {"c", str(f.c)}, {"text", qforms::render(f)}};
}

json product_json(const UnitProduct& u) {
  json factors = json::array();
  for (const auto& f : u.factors())
    factors.push_back({{"base", f.base.to_string()}, {"exponent", str(f.exponent)}, {"pretty", f.base.pretty()}});
  return {{"pretty", u.pretty()}, {"ascii", u.to_string()}, {"factors", factors}, {"coefficient", str(u.coefficient())}};
}

std::vector<Int> primes_of(const Int& n) {
  std::vector<Int> out;
  for (const auto& [p, e] : arith::factor(n)) out.push_back(p);
  return out;
}

}  // namespace

Outcome forms(const Int& disc) {
  qforms::FormClassSet set = qforms::reduced_forms(disc);
  Outcome out;
  out.data["command"] = "forms";
  out.data["discriminant"] = str(disc);
  out.data["class_number"] = str(Int(set.forms.size()));
  json rows = json::array();
  for (const auto& f : set.forms) rows.push_back(form_json(f));
  out.data["forms"] = rows;
  return out;
}

Outcome g2n(const Int& n, int digits, std::optional<int> tol) {
  weber::G2n g = weber::g2n(n, digits);
  Outcome out;
  json& j = out.data;
  j["command"] = "g2n";
  j["n"] = str(n);
  j["index"] = str(Int(2 * n));
  j["h"] = str(g.h);
  j["product"] = product_json(g.product);
  j["simplified"] = product_json(g.simplified);
  j["value"] = g.value.sci(digits);
  BigReal q = highprec::gn_numeric(Rat(2 * n), digits + 10);
  j["qseries"] = q.sci(digits);
  Int L = g.simplified.exponent_lcm();
  if (6 % L.get_si() == 0) j["sixth_power"] = g.simplified.power(6).expand().pretty();
  out.exit_code = judge(j, g.value - q, tol.value_or(-(digits - 10)));
  return out;
}

Outcome kn(const Int& n, int digits, std::optional<int> tol) {
  modulus::SingularModulus s = modulus::singular_modulus(n, digits);
  Outcome out;
  json& j = out.data;
  j["command"] = "kn";
  j["n"] = str(n);
  const Bits prec = digits_to_bits(digits) + 32;
  BigReal alpha = s.alpha_numeric;
  if (s.k_exact) {
    j["k_exact"] = product_json(*s.k_exact);
    j["alpha_exact"] = product_json(s.k_exact->power(2));
    BigReal k = s.k_exact->value_bits(prec);
    alpha = k * k;
    j["source"] = "exact";
  } else {
    j["source"] = "q-series";
  }
  if (s.k_avcal) j["k_avcal"] = product_json(*s.k_avcal);
  if (s.witness) {
    const auto& w = *s.witness;
    j["witness"] = {{"S1", w.S1.to_string()},       {"S2", w.S2.to_string()},
                    {"alpha", w.alpha.to_string()}, {"beta", w.beta.to_string()},
                    {"sqrt_alpha", w.sqrt_alpha.to_string()}, {"sqrt_beta", w.sqrt_beta.to_string()},
                    {"a", w.a.to_string()},         {"b", w.b.to_string()},
                    {"c", w.c.to_string()},         {"d", w.d.to_string()}};
  }
  j["k"] = s.k_numeric.sci(digits);
  j["alpha"] = s.alpha_numeric.sci(digits);
  out.exit_code = judge(j, modulus::verify_ratio(alpha, n, digits), tol.value_or(-(digits - 20)));
  return out;
}

Outcome tables(const Int& m) {
  weber::WeightedSumTable t = weber::weighted_sum_table(m);
  Outcome out;
  json& j = out.data;
  j["command"] = "tables";
  j["m"] = str(m);
  json deltas = json::array();
  for (const Int& d : t.deltas) deltas.push_back(str(d));
  j["deltas"] = deltas;
  json rows = json::array();
  for (std::size_t i = 0; i < t.forms.size(); ++i)
    rows.push_back({{"form", form_json(t.forms[i])}, {"modulus", str(t.row_moduli[i])}, {"chi", t.jacobi[i]}});
  j["jacobi"] = rows;
  json pairs = json::array();
  for (const auto& [q, p] : t.pairs) pairs.push_back({{"first", form_json(q)}, {"second", form_json(p)}});
  j["pairs"] = pairs;
  j["differences"] = t.differences;
  json surv = json::array();
  for (const auto& s : t.survivors) {
    json Aidx = json::array();
    for (const Int& A : s.pair_A) Aidx.push_back(str(A));
    surv.push_back({{"delta", str(s.delta)},
                    {"delta_prime", str(s.delta_prime)},
                    {"coefficients", s.coefficients},
                    {"pair_A", Aidx},
                    {"K_delta", str(s.K_delta)},
                    {"K_delta_prime", str(s.K_delta_prime)},
                    {"unit", pell::unit_value(s.unit).pretty()},
                    {"pell", {{"delta", str(s.unit.delta)}, {"T", str(s.unit.T)}, {"U", str(s.unit.U)}}}});
  }
  j["survivors"] = surv;
  return out;
}

Outcome jpoly(const Int& disc, int digits) {
  Outcome out;
  json& j = out.data;
  j["command"] = "jpoly";
  j["discriminant"] = str(disc);
  j["digits"] = digits;
  try {
    highprec::ClassPolynomial p = highprec::class_polynomial(disc, digits);
    json coeffs = json::array();
    for (const Int& c : p.coefficients) coeffs.push_back(str(c));
    j["coefficients"] = coeffs;
    out.exit_code = judge(j, p.residual, -10);
  } catch (const PrecisionError& e) {
    j["error"] = e.what();
    j["pass"] = false;
    out.exit_code = kResidual;
  }
  return out;
}

Outcome verify_ratio(const Int& n, int digits, std::optional<int> tol) {
  modulus::SingularModulus s = modulus::singular_modulus(n, digits);
  Outcome out;
  json& j = out.data;
  j["command"] = "verify";
  j["check"] = "ratio";
  j["n"] = str(n);
  BigReal alpha = s.alpha_numeric;
  j["source"] = "q-series";
  if (s.k_exact) {
    BigReal k = s.k_exact->value_bits(digits_to_bits(digits) + 32);
    alpha = k * k;
    j["source"] = "exact";
  }
  j["alpha"] = alpha.sci(digits);
  out.exit_code = judge(j, modulus::verify_ratio(alpha, n, digits), tol.value_or(-(digits - 20)));
  return out;
}

Outcome verify_formula_g(const Int& A, const Int& C, int digits, std::optional<int> tol) {
  Outcome out;
  json& j = out.data;
  j["command"] = "verify";
  j["check"] = "formula-g";
  j["A"] = str(A);
  j["C"] = str(C);
  j["m"] = str(Int(2 * A * C));
  out.exit_code = judge(j, highprec::verify_formula_G(A, C, digits), tol.value_or(-8));
  return out;
}

Outcome verify_grenzformel(const Int& A, const Int& B, const Int& C, int digits, std::optional<int> tol) {
  highprec::GaussForm q{A, B, C};
  Outcome out;
  json& j = out.data;
  j["command"] = "verify";
  j["check"] = "grenzformel";
  j["form"] = {{"A", str(A)}, {"B", str(B)}, {"C", str(C)}};
  j["m"] = str(q.det());
  j["constant"] = highprec::epstein_constant(q, digits).sci(digits);
  out.exit_code = judge(j, highprec::verify_grenzformel(q, digits), tol.value_or(-8));
  return out;
}

Outcome verify_dirichlet(const Int& delta, int digits, std::optional<int> tol) {
  const Bits prec = digits_to_bits(digits) + 32;
  BigReal sum = weber::l_value(delta, digits);
  BigReal pi = BigReal::pi(prec);
  BigReal closed(prec);
  std::string text;
  Int ad = abs(delta);
  std::string root = "√" + str(ad);
  if (delta < 0) {
    Rat K = qforms::weighted_class_number(delta);
    closed = pi * BigReal(K, prec) / sqrt(BigReal(ad, prec));
    std::string num = K.get_num() == 1 ? "π" : str(K.get_num()) + "π";
    text = K.get_den() == 1 ? num + "/" + root : num + "/(" + str(K.get_den()) + root + ")";
  } else {
    Int h = qforms::narrow_class_number(delta);
    pell::PellSolution p = pell::solve_even_pell(delta);
    SurdElement eps = pell::unit_value(p);
    closed = BigReal(h, prec) * log(surd::embed_bits(eps, surd::Embedding::identity({}), prec)) /
             sqrt(BigReal(delta, prec));
    std::optional<SurdElement> half = surd::try_sqrt_in_field(eps, primes_of(delta));
    if (half)
      text = "(" + str(Int(2 * h)) + "/" + root + ") ln(" + half->pretty() + ")";
    else
      text = "(" + str(h) + "/" + root + ") ln(" + eps.pretty() + ")";
  }
  Outcome out;
  json& j = out.data;
  j["command"] = "verify";
  j["check"] = "dirichlet";
  j["delta"] = str(delta);
  j["sum"] = sum.sci(digits);
  j["closed_form"] = text;
  j["closed_value"] = closed.sci(digits);
  out.exit_code = judge(j, sum - closed, tol.value_or(-(digits - 15)));
  return out;
}

}  // namespace smod::cli
