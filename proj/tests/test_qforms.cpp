#include <gtest/gtest.h>

#include <random>
#include <set>

#include "smod/errors.hpp"
#include "smod/qforms.hpp"

using namespace smod;
using namespace smod::qforms;

namespace {

const std::vector<QuadForm> kForms840 = {{1, 0, 210}, {2, 0, 105}, {3, 0, 70}, {5, 0, 42},
                                          {6, 0, 35}, {7, 0, 30},  {10, 0, 21}, {14, 0, 15}};

// Reduced forms by the scan a <= sqrt(|D|/3), |b| <= a, with the boundary rules.
std::vector<QuadForm> scan(long D) {
  std::vector<QuadForm> out;
  for (long a = 1; 3 * a * a <= -D; ++a)
    for (long b = -a + 1; b <= a; ++b) {
      if ((b * b - D) % (4 * a) != 0) continue;
      long c = (b * b - D) / (4 * a);
      if (c < a || (c == a && b < 0)) continue;
      if (std::gcd(std::gcd(a, std::labs(b)), c) != 1) continue;
      out.push_back({a, b, c});
    }
  return out;
}

GLMatrix random_sl2(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> step(0, 3), k(-3, 3);
  GLMatrix g = GLMatrix::identity();
  for (int i = 0; i < 6; ++i) {
    int kk = k(rng);
    GLMatrix t = step(rng) % 2 ? GLMatrix{1, 0, kk, 1} : GLMatrix{1, kk, 0, 1};
    if (step(rng) == 0) t = GLMatrix{0, -1, 1, 0};
    g = g * t;
  }
  return g;
}

}  // namespace

TEST(Apply, PaperExample) {
  GLMatrix g{4, -5, -3, 4};
  EXPECT_EQ(g.det(), 1);
  EXPECT_EQ(apply(g, {1, 0, 210}), (QuadForm{5266, -8424, 3369}));
}

TEST(Apply, IdentityAndInverse) {
  QuadForm f{5266, -8424, 3369};
  EXPECT_EQ(apply(GLMatrix::identity(), f), f);
  GLMatrix g{4, -5, -3, 4};
  EXPECT_EQ(apply(inverse(g), apply(g, f)), f);
  EXPECT_THROW(apply(GLMatrix{2, 0, 0, 1}, f), DomainError);
}

TEST(Reduce, PaperExample) {
  QuadForm f{5266, -8424, 3369};
  auto [G, w] = reduce(f);
  EXPECT_EQ(G, (QuadForm{1, 0, 210}));
  EXPECT_EQ(w.det(), 1);
  EXPECT_EQ(apply(w, f), G);
}

TEST(Reduce, FixedPoints) {
  for (const auto& f : kForms840) {
    auto [G, w] = reduce(f);
    EXPECT_EQ(G, f);
    EXPECT_EQ(w, GLMatrix::identity());
  }
  EXPECT_THROW(reduce({1, 0, -3}), DomainError);
}

TEST(Reduce, EquivalenceSoundUnderRandomUnimodular) {
  std::mt19937_64 rng(2024);
  for (const auto& f : kForms840) {
    for (int i = 0; i < 200; ++i) {
      GLMatrix g = random_sl2(rng);
      ASSERT_EQ(g.det(), 1);
      QuadForm h = apply(g, f);
      EXPECT_EQ(h.discriminant(), f.discriminant());
      auto [G, w] = reduce(h);
      EXPECT_EQ(G, f);
      EXPECT_EQ(apply(w, h), G);
      EXPECT_EQ(w.det(), 1);
      EXPECT_EQ(reduce(G).first, G);
    }
  }
}

TEST(ReducedForms, PaperTable) {
  auto set = reduced_forms(-840);
  EXPECT_EQ(set.forms, kForms840);
  EXPECT_EQ(class_number(-840), 8);
  EXPECT_EQ(render(set.forms.back()), "14X² + 15Y²");
  EXPECT_EQ(render(set.forms.front()), "X² + 210Y²");
}

TEST(ReducedForms, SmallDiscriminants) {
  EXPECT_EQ(reduced_forms(-4).forms, (std::vector<QuadForm>{{1, 0, 1}}));
  EXPECT_EQ(reduced_forms(-23).forms.size(), 3u);
  EXPECT_EQ(class_number(-160), 4);
  EXPECT_EQ(class_number(-3), 1);
  EXPECT_EQ(render({2, -1, 3}), "2X² − XY + 3Y²");
  EXPECT_THROW(reduced_forms(5), DomainError);
  EXPECT_THROW(reduced_forms(-6), DomainError);
}

TEST(ReducedForms, MatchScanOracle) {
  for (long D = -3; D >= -1500; --D) {
    long r = ((D % 4) + 4) % 4;
    if (r != 0 && r != 1) continue;
    auto got = reduced_forms(D).forms;
    auto want = scan(D);
    std::sort(want.begin(), want.end(), [](const QuadForm& x, const QuadForm& y) {
      if (x.a != y.a) return x.a < y.a;
      if (x.c != y.c) return x.c < y.c;
      return x.b < y.b;
    });
    EXPECT_EQ(got, want) << D;
    for (const auto& f : got) EXPECT_TRUE(f.is_reduced());
  }
}

TEST(Representations, PaperExample1769) {
  QuadForm f{6, 0, 35};
  EXPECT_EQ(representation_count(f, 1769), 8);
  std::set<std::pair<long, long>> sols;
  for (long x = -20; x <= 20; ++x)
    for (long y = -10; y <= 10; ++y)
      if (6 * x * x + 35 * y * y == 1769) sols.insert({x, y});
  std::set<std::pair<long, long>> want;
  for (long sx : {1, -1})
    for (long sy : {1, -1}) {
      want.insert({3 * sx, 7 * sy});
      want.insert({17 * sx, 1 * sy});
    }
  EXPECT_EQ(sols, want);
  EXPECT_EQ(total_representations(210, 1769), 8);
}

TEST(Representations, SmallCases) {
  EXPECT_EQ(representation_count({1, 0, 210}, 211), 4);
  EXPECT_EQ(representation_count({1, 0, 210}, 0), 1);
  EXPECT_EQ(total_representations(210, 1), 2);
  EXPECT_EQ(total_representations(210, 11), 0);
  Int s = 0;
  for (const auto& f : kForms840) s += representation_count(f, 11);
  EXPECT_EQ(s, 0);
}

TEST(Representations, DirichletFormulaAgreesWithBruteForce) {
  for (long n = 1; n < 3000; ++n) {
    if (std::gcd(n, 420L) != 1) continue;
    Int s = 0;
    for (const auto& f : kForms840) s += representation_count(f, n);
    EXPECT_EQ(s, total_representations(210, n)) << n;
  }
}

TEST(Homologues, Pairs840) {
  auto pairs = homologue_pairs(reduced_forms(-840));
  ASSERT_EQ(pairs.size(), 4u);
  std::vector<std::pair<long, long>> first, second;
  for (const auto& [p, q] : pairs) {
    first.push_back({p.a.get_si(), p.c.get_si()});
    second.push_back({q.a.get_si(), q.c.get_si()});
  }
  EXPECT_EQ(first, (std::vector<std::pair<long, long>>{{1, 210}, {3, 70}, {5, 42}, {7, 30}}));
  EXPECT_EQ(second, (std::vector<std::pair<long, long>>{{2, 105}, {6, 35}, {10, 21}, {14, 15}}));
}

TEST(Homologues, SmallDiscriminants) {
  auto p8 = homologue_pairs(reduced_forms(-8));
  ASSERT_EQ(p8.size(), 1u);
  EXPECT_EQ(p8[0].first, (QuadForm{1, 0, 2}));
  // 2X² + Y² reduces to X² + 2Y², so the form is its own homologue
  EXPECT_EQ(p8[0].second, (QuadForm{1, 0, 2}));
  auto p40 = homologue_pairs(reduced_forms(-40));
  ASSERT_EQ(p40.size(), 1u);
  EXPECT_EQ(p40[0].first, (QuadForm{1, 0, 10}));
  EXPECT_EQ(p40[0].second, (QuadForm{2, 0, 5}));
  // -4 * 26: 26 = 2 * 13 has the non-diagonal reduced form 3X² + 2XY + 9Y²
  EXPECT_THROW(homologue_pairs(reduced_forms(-104)), NotConvenient);
}

TEST(Chi, TableEntries) {
  EXPECT_EQ(chi(-3, {2, 0, 105}), -1);
  EXPECT_EQ(chi(105, {14, 0, 15}), -1);
  for (const auto& f : kForms840) EXPECT_EQ(chi(1, f), 1);
  EXPECT_THROW(chi(5, {2, 1, 3}), DomainError);
}

TEST(Chi, CharacterSumsSeparateThePrincipalClass) {
  auto ds = arith::fundamental_discriminants_dividing(-840);
  for (const auto& f : kForms840) {
    int s = 0;
    for (const auto& d : ds) s += chi(d.value, f);
    EXPECT_EQ(s, f.a == 1 ? 8 : 0) << render(f);
  }
}

TEST(ClassNumbers, WeightedValues) {
  EXPECT_EQ(weighted_class_number(-3), make_rat(1, 3));
  EXPECT_EQ(weighted_class_number(-4), make_rat(1, 2));
  EXPECT_EQ(weighted_class_number(280), 4);
  EXPECT_EQ(weighted_class_number(5), 1);
  EXPECT_EQ(weighted_class_number(-840), 8);
  EXPECT_THROW(weighted_class_number(12 * 9), DomainError);
}

TEST(ClassNumbers, PositiveDeltaMatchesCycleCount) {
  // The L-value route and the cycles of reduced indefinite forms agree.
  for (long d = 5; d < 700; ++d) {
    if (!arith::is_fundamental_discriminant(d)) continue;
    EXPECT_EQ(weighted_class_number(d), Rat(narrow_class_number(d))) << d;
  }
}
