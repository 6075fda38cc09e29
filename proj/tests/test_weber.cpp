#include <gtest/gtest.h>

#include "smod/errors.hpp"
#include "smod/highprec.hpp"
#include "smod/weber.hpp"
#include "support.hpp"

using namespace smod;
using namespace smod::weber;
using surd::SurdElement;
using surd::UnitProduct;

namespace {

SurdElement P(const char* s) { return SurdElement::parse(s); }

std::vector<long> survivor_deltas(const Int& m) {
  std::vector<long> out;
  for (const auto& s : surviving_sums(m)) out.push_back(s.delta.get_si());
  return out;
}

}  // namespace

TEST(LValue, ClosedForms) {
  const Bits prec = 200;
  BigReal pi = BigReal::pi(prec);
  EXPECT_TRUE(oracle::close(l_value(-3, 50), pi / (3L * sqrt(BigReal(3L, prec))), -48));
  EXPECT_TRUE(oracle::close(l_value(-4, 50), pi / 4L, -48));
  BigReal phi = (1L + sqrt(BigReal(5L, prec))) / 2L;
  EXPECT_TRUE(oracle::close(l_value(5, 50), 2L * log(phi) / sqrt(BigReal(5L, prec)), -48));
  BigReal eps = surd::embed_bits(P("5*sqrt(5) + 3*sqrt(14)"), surd::Embedding::identity({}), prec);
  EXPECT_TRUE(oracle::close(l_value(280, 50), 8L * log(eps) / sqrt(BigReal(280L, prec)), -48));
  EXPECT_THROW(l_value(1, 20), DomainError);
  EXPECT_THROW(l_value(12 * 9, 20), DomainError);
}

TEST(LValue, DirichletClassNumberFormula) {
  // h = w sqrt|δ| L / (2π) for δ < 0
  const Bits prec = 128;
  BigReal pi = BigReal::pi(prec);
  for (long d : {-3L, -4L, -7L, -8L, -15L, -20L, -23L, -35L, -84L, -420L, -840L}) {
    BigReal h = l_value(d, 30) * sqrt(BigReal(-d, prec)) / pi;
    EXPECT_TRUE(oracle::close(h, BigReal(qforms::weighted_class_number(d), prec), -25)) << d;
    if (d < -4) EXPECT_TRUE(oracle::close(h, BigReal(qforms::class_number(d), prec), -25)) << d;
  }
}

TEST(DiscPairs, Examples) {
  auto p = disc_pairs(210);
  ASSERT_EQ(p.size(), 8u);
  for (const auto& d : p) EXPECT_EQ(d.delta * d.delta_prime, -840);
  EXPECT_EQ(p[1].delta, -3);
  EXPECT_EQ(p[1].delta_prime, 280);
  EXPECT_EQ(p[1].positive(), 280);
  auto p2 = disc_pairs(2);
  ASSERT_EQ(p2.size(), 1u);
  EXPECT_EQ(p2[0].delta_prime, -8);
  EXPECT_EQ(disc_pairs(30).size(), 4u);
  EXPECT_THROW(disc_pairs(105), DomainError);
  EXPECT_THROW(disc_pairs(90), DomainError);
}

TEST(SurvivingSums, Survivors) {
  EXPECT_EQ(survivor_deltas(210), (std::vector<long>{-3, 5, 21, -35}));
  EXPECT_EQ(survivor_deltas(30), (std::vector<long>{-3, 5}));
  EXPECT_TRUE(survivor_deltas(2).empty());
  for (const auto& s : surviving_sums(210)) {
    for (int c : s.coefficients) EXPECT_TRUE(c == 2 || c == -2) << s.delta;
    EXPECT_EQ(qforms::weighted_class_number(s.delta) * qforms::weighted_class_number(s.delta_prime),
              s.K_delta * s.K_delta_prime);
  }
}

TEST(SurvivingSums, CoefficientRowsAddUp) {
  // Summing over all δ, every non-principal pair cancels and the first pair
  // collects 2 from each survivor.
  auto rows = coefficient_rows(210);
  ASSERT_EQ(rows.size(), 8u);
  std::vector<int> total(4, 0);
  for (const auto& r : rows)
    for (std::size_t j = 0; j < 4; ++j) total[j] += r.coefficients[j];
  EXPECT_EQ(total, (std::vector<int>{8, 0, 0, 0}));
  for (const auto& r : rows)
    if (arith::kronecker(2, r.delta) == 1)
      EXPECT_EQ(r.coefficients, (std::vector<int>{0, 0, 0, 0})) << r.delta;
  EXPECT_EQ(rows[0].pair_A, (std::vector<Int>{1, 3, 5, 7}));
}

TEST(G2n, Value210AgainstClosedForm) {
  G2n g = g2n(105, 60);
  EXPECT_EQ(g.h, 8);
  UnitProduct boxed({{P("5*sqrt(5) + 3*sqrt(14)"), make_rat(1, 6)},
                     {P("1/2 + 1/2*sqrt(5)"), make_rat(1, 2)},
                     {P("1/2*sqrt(3) + 1/2*sqrt(7)"), make_rat(1, 2)},
                     {P("sqrt(2) + sqrt(3)"), make_rat(1, 2)}});
  EXPECT_TRUE(oracle::rel_close(g.value.with_precision(240), boxed.value(70), -40));
  EXPECT_TRUE(g.simplified.same_value(boxed));
  EXPECT_TRUE(g.product.same_value(boxed));
  EXPECT_EQ(g.product.factors().size(), 4u);
  EXPECT_EQ(g.product.factors()[0].exponent, make_rat(1, 12));
  EXPECT_EQ(g.product.factors()[0].base, P("251 + 30*sqrt(70)"));
}

TEST(G2n, ThirtySixthPowerIsExact) {
  G2n g = g2n(15, 40);
  UnitProduct want({{P("3 + sqrt(10)"), make_rat(1, 6)}, {P("2 + sqrt(5)"), make_rat(1, 6)}});
  EXPECT_TRUE(g.simplified.same_value(want));
  EXPECT_EQ(want.power(6).expand(), P("6 + 5*sqrt(2) + 3*sqrt(5) + 2*sqrt(10)"));
}

TEST(G2n, AgreesWithQSeries) {
  for (long n : {1L, 3L, 5L, 15L, 105L}) {
    G2n g = g2n(n, 50);
    BigReal q = highprec::gn_numeric(Rat(2 * n), 50);
    EXPECT_TRUE(oracle::rel_close(g.value.with_precision(q.precision()), q, -45)) << n;
    EXPECT_TRUE(g.simplified.same_value(g.product)) << n;
    EXPECT_TRUE(g.product.all_units()) << n;
  }
  EXPECT_EQ(g2n(1, 20).product.factors().size(), 0u);
}

TEST(G2n, RejectsInconvenientAndMalformedM) {
  EXPECT_THROW(g2n(13, 20), NotConvenient);
  EXPECT_THROW(g2n(2, 20), DomainError);
}

TEST(Table, Cells210) {
  auto t = weighted_sum_table(210);
  ASSERT_EQ(t.forms.size(), 8u);
  ASSERT_EQ(t.deltas.size(), 8u);
  std::size_t col3 = 1, row105 = 1;
  EXPECT_EQ(t.deltas[col3], -3);
  EXPECT_EQ(t.forms[row105], (qforms::QuadForm{2, 0, 105}));
  EXPECT_EQ(t.row_moduli[row105], 107);
  EXPECT_EQ(t.row_moduli[0], 1);
  EXPECT_EQ(t.jacobi[row105][col3], -1);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(t.jacobi[i][0], 1);
  // δ = -7 is the fourth column; its difference row vanishes
  EXPECT_EQ(t.deltas[3], -7);
  EXPECT_EQ(t.differences[3], (std::vector<int>{0, 0, 0, 0}));
  EXPECT_EQ(t.survivors.size(), 4u);
}

TEST(Table, Shape30) {
  auto t = weighted_sum_table(30);
  EXPECT_EQ(t.forms.size(), 4u);
  EXPECT_EQ(t.deltas.size(), 4u);
  EXPECT_EQ(t.jacobi.size(), 4u);
  for (const auto& r : t.jacobi) EXPECT_EQ(r.size(), 4u);
  EXPECT_EQ(t.pairs.size(), 2u);
}

TEST(TakeExactRoots, Examples) {
  UnitProduct u({{P("5 + 2*sqrt(6)"), make_rat(1, 4)}, {P("251 + 30*sqrt(70)"), make_rat(1, 12)}});
  UnitProduct r = take_exact_roots(u, {2, 3, 5, 7});
  ASSERT_EQ(r.factors().size(), 2u);
  EXPECT_EQ(r.factors()[0].base, P("sqrt(2) + sqrt(3)"));
  EXPECT_EQ(r.factors()[0].exponent, make_rat(1, 2));
  EXPECT_EQ(r.factors()[1].base, P("5*sqrt(5) + 3*sqrt(14)"));
  EXPECT_EQ(r.factors()[1].exponent, make_rat(1, 6));
  EXPECT_TRUE(r.same_value(u));
}
