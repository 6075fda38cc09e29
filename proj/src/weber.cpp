#include "smod/weber.hpp"

#include "smod/arith.hpp"
#include "smod/errors.hpp"
#include "smod/pell.hpp"

namespace smod::weber {

BigReal l_value(const Int& delta, int digits) {
  if (delta == 1) throw DomainError("l_value: delta = 1 gives the divergent zeta series");
  if (!arith::is_fundamental_discriminant(delta)) throw DomainError("l_value: not a fundamental discriminant");
  const Bits prec = digits_to_bits(digits) + 32;
  const BigReal pi = BigReal::pi(prec);
  if (delta < 0) {
    Int D = -delta;
    Int s = 0;
    for (Int a = 1; a < D; ++a) s += arith::kronecker(delta, a) * a;
    BigReal Dr(D, prec);
    return -pi * BigReal(s, prec) / (Dr * sqrt(Dr));
  }
  BigReal acc(prec);
  BigReal Dr(delta, prec);
  for (Int a = 1; a < delta; ++a) {
    int k = arith::kronecker(delta, a);
    if (k == 0) continue;
    BigReal t = log(sin(pi * BigReal(a, prec) / Dr));
    if (k > 0)
      acc += t;
    else
      acc -= t;
  }
  return -acc / sqrt(Dr);
}

namespace {

void check_m(const Int& m) {
  if (!arith::is_twice_odd_squarefree(m)) throw DomainError("m must be twice an odd squarefree number");
}

std::vector<SurvivingSum> rows(const Int& m, bool survivors_only) {
  check_m(m);
  const Int D = -4 * m;
  auto pairs = qforms::homologue_pairs(qforms::reduced_forms(D));
  std::vector<SurvivingSum> out;
  for (const auto& fd : arith::fundamental_discriminants_dividing(D)) {
    const Int& d = fd.value;
    bool survives = arith::kronecker(2, d) == -1;
    if (survivors_only && !survives) continue;
    SurvivingSum s;
    s.delta = d;
    s.delta_prime = D / d;
    for (const auto& [q, p] : pairs) {
      s.coefficients.push_back(qforms::chi(d, q) - qforms::chi(d, p));
      s.pair_A.push_back(mpz_odd_p(q.a.get_mpz_t()) ? q.a : q.c);
    }
    if (survives) {
      s.K_delta = qforms::weighted_class_number(s.delta);
      s.K_delta_prime = qforms::weighted_class_number(s.delta_prime);
      s.unit = pell::solve_even_pell(s.delta > 0 ? s.delta : s.delta_prime);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<DiscPair> disc_pairs(const Int& m) {
  check_m(m);
  std::vector<DiscPair> out;
  for (const auto& fd : arith::fundamental_discriminants_dividing(-4 * m)) out.push_back({fd.value, -4 * m / fd.value});
  return out;
}

std::vector<SurvivingSum> surviving_sums(const Int& m) { return rows(m, true); }
std::vector<SurvivingSum> coefficient_rows(const Int& m) { return rows(m, false); }

surd::UnitProduct take_exact_roots(const surd::UnitProduct& u, const std::vector<Int>& primes) {
  std::vector<surd::UnitFactor> out;
  for (auto f : u.factors()) {
    while (f.exponent.get_den() % 2 == 0) {
      auto r = surd::try_sqrt_in_field(f.base, primes);
      if (!r) break;
      f.base = *r;
      f.exponent *= 2;
    }
    out.push_back(f);
  }
  return surd::UnitProduct(out, u.coefficient());
}

G2n g2n(const Int& n, int digits) {
  const Int m = 2 * n;
  check_m(m);
  auto forms = qforms::reduced_forms(-4 * m);
  for (const auto& q : forms.forms)
    if (!q.diagonal()) throw NotConvenient("g2n: " + qforms::render(q) + " is not diagonal; m is not convenient");
  G2n out{n, Int(static_cast<unsigned long>(forms.forms.size())), {}, {}, BigReal(digits_to_bits(digits))};
  const Bits prec = digits_to_bits(digits) + 32;
  BigReal lg(prec);
  for (const auto& s : surviving_sums(m)) {
    Rat e = s.K_delta * s.K_delta_prime / Rat(2 * out.h);
    surd::SurdElement eps = pell::unit_value(s.unit);
    out.product.push(eps, e);
    lg += BigReal(e, prec) * log(surd::embed_bits(eps, surd::Embedding::identity({}), prec));
  }
  std::vector<Int> primes;
  for (const auto& f : arith::factor(m)) primes.push_back(f.first);
  out.simplified = take_exact_roots(out.product, primes);
  out.value = exp(lg);
  return out;
}

WeightedSumTable weighted_sum_table(const Int& m) {
  check_m(m);
  WeightedSumTable t;
  t.m = m;
  for (const auto& fd : arith::fundamental_discriminants_dividing(-4 * m)) t.deltas.push_back(fd.value);
  t.forms = qforms::reduced_forms(-4 * m).forms;
  for (const auto& q : t.forms) {
    if (!q.diagonal()) throw NotConvenient("weighted_sum_table: non-diagonal reduced form");
    t.row_moduli.push_back(q.a == 1 ? Int(1) : Int(q.a + q.c));
    std::vector<int> row;
    for (const Int& d : t.deltas) row.push_back(qforms::chi(d, q));
    t.jacobi.push_back(row);
  }
  t.pairs = qforms::homologue_pairs(qforms::reduced_forms(-4 * m));
  for (const auto& r : coefficient_rows(m)) t.differences.push_back(r.coefficients);
  t.survivors = surviving_sums(m);
  return t;
}

}  // namespace smod::weber
