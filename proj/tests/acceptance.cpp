// One PASS/FAIL line per acceptance criterion.  Exit status is 0 exactly when
// the set of failing criteria equals the set given with --expect-fail.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "commands.hpp"
#include "smod/arith.hpp"
#include "smod/highprec.hpp"
#include "smod/modulus.hpp"
#include "smod/pell.hpp"
#include "smod/qforms.hpp"
#include "smod/weber.hpp"
#include "support.hpp"

using namespace smod;
using surd::SurdElement;
using surd::UnitProduct;

namespace {

SurdElement P(const char* s) { return SurdElement::parse(s); }

// Collects the first failed check of a criterion as its diagnostic.
class Check {
 public:
  void operator()(bool ok, const std::string& what) {
    if (!ok && note_.empty()) note_ = what;
    ok_ = ok_ && ok;
  }
  bool ok() const { return ok_; }
  const std::string& note() const { return note_; }

 private:
  bool ok_ = true;
  std::string note_;
};

BigReal tol(long e, Bits prec = 128) { return pow(BigReal(10L, prec), e); }

std::vector<std::pair<std::string, std::string>> multiset(const UnitProduct& u) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& f : u.factors()) out.push_back({f.base.to_string(), f.exponent.get_str()});
  std::sort(out.begin(), out.end());
  return out;
}

const UnitProduct& boxed_k210() {
  static const UnitProduct k({{P("4 - sqrt(15)"), 2},
                              {P("8 - 3*sqrt(7)"), 1},
                              {P("6 - sqrt(35)"), 1},
                              {P("2 - sqrt(3)"), 1},
                              {P("sqrt(7) - sqrt(6)"), 2},
                              {P("sqrt(10) - 3"), 2},
                              {P("sqrt(2) - 1"), 2},
                              {P("sqrt(15) - sqrt(14)"), 1}});
  return k;
}

std::vector<Int> primes_of(long n) {
  std::vector<Int> out;
  for (const auto& f : arith::factor(n)) out.push_back(f.first);
  return out;
}

void reduced_forms_840(Check& c) {
  cli::Outcome o = cli::forms(-840);
  const long want[8][2] = {{1, 210}, {2, 105}, {3, 70}, {5, 42}, {6, 35}, {7, 30}, {10, 21}, {14, 15}};
  c(o.exit_code == 0, "forms exit code");
  c(o.data["class_number"] == "8", "h(-840) != 8");
  c(o.data["forms"].size() == 8, "form count");
  for (std::size_t i = 0; i < 8 && i < o.data["forms"].size(); ++i) {
    const auto& f = o.data["forms"][i];
    c(f["a"] == std::to_string(want[i][0]) && f["b"] == "0" && f["c"] == std::to_string(want[i][1]),
      "form " + std::to_string(i + 1) + " differs");
  }
}

void reduction(Check& c) {
  qforms::QuadForm f{5266, -8424, 3369};
  auto [G, w] = qforms::reduce(f);
  c(G == qforms::QuadForm{1, 0, 210}, "reduced form is " + qforms::render(G));
  c(w.det() == 1, "witness not unimodular");
  c(qforms::apply(w, f) == G, "witness does not map the form");
  c(qforms::apply(qforms::GLMatrix{4, -5, -3, 4}, {1, 0, 210}) == f, "forward example");
}

void representations(Check& c) {
  std::set<std::pair<long, long>> sols;
  for (long x = -50; x <= 50; ++x)
    for (long y = -50; y <= 50; ++y)
      if (6 * x * x + 35 * y * y == 1769) sols.insert({x, y});
  std::set<std::pair<long, long>> want;
  for (long sx : {1, -1})
    for (long sy : {1, -1}) {
      want.insert({3 * sx, 7 * sy});
      want.insert({17 * sx, sy});
    }
  c(sols == want, "solution set of 6X² + 35Y² = 1769");
  c(qforms::representation_count({6, 0, 35}, 1769) == 8, "representation_count");
  c(qforms::total_representations(210, 1769) == 8, "total_representations");
}

void pell_table(Check& c) {
  const long rows[4][3] = {{280, 502, 30}, {5, 3, 1}, {21, 5, 1}, {24, 10, 2}};
  for (const auto& r : rows) {
    auto p = pell::solve_even_pell(r[0]);
    c(p.T == r[1] && p.U == r[2], "Pell row " + std::to_string(r[0]));
  }
}

void dirichlet(Check& c) {
  const Bits prec = digits_to_bits(40);
  BigReal pi = BigReal::pi(prec);
  BigReal l3 = weber::l_value(-3, 40);
  c(abs(l3 - pi / (3L * sqrt(BigReal(3L, prec)))) < tol(-25), "L(1, χ_-3)");
  BigReal u = surd::embed_bits(P("5*sqrt(5) + 3*sqrt(14)"), surd::Embedding::identity({}), prec);
  BigReal l280 = weber::l_value(280, 40);
  c(abs(l280 - 8L * log(u) / sqrt(BigReal(280L, prec))) < tol(-25), "L(1, χ_280)");
}

void g210(Check& c) {
  weber::G2n g = weber::g2n(105, 60);
  BigReal q = highprec::gn_numeric(Rat(210), 60);
  c(abs(g.value - q) < tol(-40), "g2n vs q-series");
  UnitProduct boxed({{P("sqrt(2) + sqrt(3)"), make_rat(1, 2)},
                     {P("5*sqrt(5) + 3*sqrt(14)"), make_rat(1, 6)},
                     {P("1/2*sqrt(3) + 1/2*sqrt(7)"), make_rat(1, 2)},
                     {P("1/2*sqrt(5) + 1/2"), make_rat(1, 2)}});
  c(abs(g.value - boxed.value(60)) < tol(-40), "g2n vs closed form");
  c(g.simplified.same_value(boxed), "simplified g_210 differs from the closed form");
  weber::G2n g30 = weber::g2n(15, 40);
  SurdElement six = g30.simplified.power(6).expand();
  c(six == P("3 + sqrt(10)") * P("2 + sqrt(5)"), "g_30^6 = " + six.to_string());
}

void two_step(Check& c) {
  cli::Outcome o = cli::kn(210, 50, std::nullopt);
  c(o.exit_code == 0 && o.data["pass"] == true, "kn --n 210 did not pass");
  c(o.data["source"] == "exact", "k_210 not recognized exactly");
  modulus::SingularModulus s = modulus::singular_modulus(210, 50);
  c(s.k_exact.has_value(), "no exact k_210");
  if (s.k_exact) {
    c(multiset(*s.k_exact) == multiset(boxed_k210()), "factors of k_210: " + s.k_exact->to_string());
    c(s.k_exact->same_value(boxed_k210()), "k_210 value");
    BigReal k = s.k_exact->value(50);
    c(abs(modulus::verify_ratio(k * k, 210, 50)) < tol(-30), "F(1-α)/F(α) - √210");
  }
  modulus::SingularModulus s30 = modulus::singular_modulus(30, 50);
  UnitProduct k30({{P("5 - 2*sqrt(6)"), 1}, {P("4 - sqrt(15)"), 1}, {P("sqrt(6) - sqrt(5)"), 1}, {P("2 - sqrt(3)"), 1}});
  c(s30.k_exact && s30.k_exact->same_value(k30), "k_30");
  c(s30.k_exact && s30.k_exact->power(2).expand() == k30.power(2).expand(), "k_30² exact");
  c(modulus::small_modulus(2, 50).k_exact->expand() == P("sqrt(2) - 1"), "k_2");
  SurdElement k3 = modulus::small_modulus(3, 50).k_exact->expand();
  c(k3 * k3 == P("1/2 - 1/4*sqrt(3)"), "α_3");
  SurdElement k7 = modulus::small_modulus(7, 50).k_exact->expand();
  c(k7 * k7 == P("1/2 - 3/16*sqrt(7)"), "α_7");
}

void avcal_intermediates(Check& c) {
  modulus::SingularModulus s = modulus::singular_modulus(210, 50);
  c(s.witness.has_value(), "no AVCAL witness");
  if (s.witness) {
    c(s.witness->a == P("121983 + 11904*sqrt(105)"), "a = " + s.witness->a.to_string());
    c(s.witness->b == P("249 + 24*sqrt(105)"), "b = " + s.witness->b.to_string());
    c(s.witness->c == P("121489 + 11856*sqrt(105)"), "c = " + s.witness->c.to_string());
    c(s.witness->d == P("247 + 24*sqrt(105)"), "d = " + s.witness->d.to_string());
  }
  for (long n : {30L, 210L}) {
    weber::G2n g = weber::g2n(n / 2, 50);
    modulus::VcalSplit v = modulus::vcal_from_g(g.simplified, primes_of(n));
    modulus::SingularModulus sn = modulus::singular_modulus(n, 50);
    BigReal avcal = sn.k_avcal->value(50);
    BigReal vcal = v.alpha.value(50);
    c(abs(vcal - avcal * avcal) < tol(-30) * avcal * avcal, "VCAL vs AVCAL at n = " + std::to_string(n));
  }
}

void class_polynomial(Check& c) {
  // As printed, 101 digits.
  const std::string a8_printed =
      "75871693802713797386369191426742800771304395043277"
      "326055125100897851220991378671072700656000000000000";
  auto t0 = std::chrono::steady_clock::now();
  cli::Outcome o = cli::jpoly(-840, 300);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c(o.exit_code == 0, "jpoly residual");
  c(secs < 60, "runtime " + std::to_string(secs) + " s");
  const auto& co = o.data["coefficients"];
  c(co.size() == 9, "degree");
  if (co.size() != 9) return;
  c(co[1] == "-3494487845306481075093315600749304691200", "a_1 = " + co[1].get<std::string>());
  std::string a8 = co[8].get<std::string>();
  c(a8 == a8_printed, "a_8 = " + a8 + " (" + std::to_string(a8.size()) + " digits), printed value has " +
                          std::to_string(a8_printed.size()));
}

void j_cross_check(Check& c) {
  const Bits prec = digits_to_bits(60) + 64;
  auto v = [&](const char* s) { return surd::embed_bits(P(s), surd::Embedding::identity({}), prec); };
  BigReal X = pow(v("sqrt(3) + sqrt(2)"), 12L) * pow(v("3*sqrt(14) + 5*sqrt(5)"), 4L) *
              pow(v("1/2*sqrt(7) + 1/2*sqrt(3)"), 12L) * pow(v("1/2*sqrt(5) + 1/2"), 12L);
  BigReal Y = pow(v("sqrt(3) - sqrt(2)"), 12L) * pow(v("3*sqrt(14) - 5*sqrt(5)"), 4L) *
              pow(v("1/2*sqrt(7) - 1/2*sqrt(3)"), 12L) * pow(v("1/2*sqrt(5) - 1/2"), 12L);
  BigReal inner = 4L * X + 1L;
  BigReal closed = 64L * inner * inner * inner * Y;
  BigComplex j = highprec::j_invariant(BigComplex(BigReal(prec), sqrt(BigReal(210L, prec))), 60);
  c(abs(j.re - closed) < tol(-30, prec) * abs(closed), "j(√-210) relative error");
}

void kronecker_formulas(Check& c) {
  for (long A : {1L, 3L, 5L, 7L}) {
    BigReal r = highprec::verify_formula_G(A, 105 / A, 30);
    c(abs(r) < tol(-8), "formula G at A = " + std::to_string(A));
  }
  c(abs(highprec::verify_grenzformel({1, 0, 210}, 30)) < tol(-8), "Grenzformel (1, 0, 210)");
}

void cancellation(Check& c) {
  auto set = qforms::reduced_forms(-840);
  auto ds = arith::fundamental_discriminants_dividing(-840);
  for (const auto& f : set.forms) {
    int s = 0;
    for (const auto& d : ds) s += qforms::chi(d.value, f);
    c(s == (f.a == 1 ? 8 : 0), "character sum at " + qforms::render(f));
  }
  std::vector<int> total(4, 0);
  for (const auto& r : weber::surviving_sums(210))
    for (std::size_t i = 0; i < 4; ++i) total[i] += r.coefficients[i] / 2;
  c(total == std::vector<int>({4, 0, 0, 0}), "surviving sign vectors do not sum to 4 in the g_210 slot");
}

void properties(Check& c) {
  std::vector<UnitProduct> emitted;
  for (long n : {30L, 210L}) {
    modulus::SingularModulus s = modulus::singular_modulus(n, 40);
    emitted.push_back(*s.k_exact);
    emitted.push_back(*s.k_avcal);
    emitted.push_back(weber::g2n(n / 2, 40).product);
    emitted.push_back(weber::g2n(n / 2, 40).simplified);
  }
  // k_3 and k_7 are not algebraic integers, so only k_2 joins the unit products
  emitted.push_back(*modulus::small_modulus(2, 40).k_exact);
  for (const auto& u : emitted)
    for (const auto& f : u.factors()) {
      Rat nm = surd::field_norm(f.base);
      c(nm == 1 || nm == -1, "non-unit factor " + f.base.to_string());
    }
  for (long n : {30L, 210L}) {
    SurdElement g12 = weber::g2n(n / 2, 40).product.power(12).expand();
    auto r = modulus::avcal_from_g12(g12, primes_of(n));
    SurdElement x1 = r.x1.expand();
    c(surd::inverse(x1) - x1 == g12 * Rat(2), "1/x1 - x1 at n = " + std::to_string(n));
    c(x1 * r.x2.expand() == SurdElement(-1L), "x1 x2 at n = " + std::to_string(n));
  }
  const Bits prec = 200;
  for (double t : {0.4, 1.1, 2.3}) {
    BigReal q = exp(-BigReal::pi(prec) * BigReal(t, prec));
    auto [k, kp] = oracle::modulus_from_nome(q);
    auto [l2, l2p] = oracle::modulus_from_nome(q * q);
    auto [l3, l3p] = oracle::modulus_from_nome(pow(q, 3L));
    auto [l7, l7p] = oracle::modulus_from_nome(pow(q, 7L));
    BigReal one(1L, prec);
    c(abs(l2 - (one - kp) / (one + kp)) < tol(-25), "degree 2 modular equation");
    c(abs(sqrt(k * l3) + sqrt(kp * l3p) - one) < tol(-25), "degree 3 modular equation");
    c(abs(root(k * l7, 4) + root(kp * l7p, 4) - one) < tol(-25), "degree 7 modular equation");
  }
  std::mt19937_64 rng(210);
  std::uniform_real_distribution<double> u(0.001, 0.999);
  for (int i = 0; i < 25; ++i) {
    BigReal k(u(rng), prec);
    BigReal one(1L, prec);
    BigReal kp = sqrt(one - k * k);
    BigReal k1 = (one - kp) / (one + kp);
    BigReal lhs = highprec::ell_K(k), rhs = (one + k1) * highprec::ell_K(k1);
    c(abs(lhs - rhs) < tol(-25) * lhs, "Landen identity");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> expect_fail;
  app.add_option("--expect-fail", expect_fail, "criteria expected to fail")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"reduced forms of discriminant -840", reduced_forms_840},
      {"reduction of 5266X² − 8424XY + 3369Y²", reduction},
      {"representations of 1769", representations},
      {"even Pell table", pell_table},
      {"Dirichlet L-values", dirichlet},
      {"g_210 and g_30", g210},
      {"two-step pipeline for k_210", two_step},
      {"AVCAL intermediates and VCAL agreement", avcal_intermediates},
      {"class polynomial of discriminant -840", class_polynomial},
      {"j(√-210) closed form", j_cross_check},
      {"formula (G) and the limit formula", kronecker_formulas},
      {"cancellation properties", cancellation},
      {"property suites", properties},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << (c.ok() ? "PASS" : "FAIL") << " " << id << " " << criteria[i].first;
    line.precision(2);
    line << std::fixed << " [" << secs << " s]";
    if (!c.ok()) line << ": " << c.note();
    std::cout << line.str() << std::endl;
    if (!c.ok()) failed.insert(id);
  }
  std::set<int> expected(expect_fail.begin(), expect_fail.end());
  std::cout << failed.size() << " of " << criteria.size() << " criteria failed";
  if (!expected.empty()) std::cout << (failed == expected ? " (as expected)" : " (expected set differs)");
  std::cout << std::endl;
  return failed == expected ? 0 : 1;
}
