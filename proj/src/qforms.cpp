#include "smod/qforms.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "smod/errors.hpp"
#include "smod/pell.hpp"
#include "smod/weber.hpp"

namespace smod::qforms {

bool QuadForm::is_reduced() const {
  if (!(abs(b) <= a && a <= c)) return false;
  if (abs(b) == a && b != a) return false;
  if (a == c && b < 0) return false;
  return true;
}

GLMatrix operator*(const GLMatrix& x, const GLMatrix& y) {
  return {x.r * y.r + x.s * y.t, x.r * y.s + x.s * y.u, x.t * y.r + x.u * y.t, x.t * y.s + x.u * y.u};
}

GLMatrix inverse(const GLMatrix& g) {
  Int d = g.det();
  if (d != 1 && d != -1) throw DomainError("matrix is not unimodular");
  return {g.u * d, -g.s * d, -g.t * d, g.r * d};
}

QuadForm apply(const GLMatrix& g, const QuadForm& f) {
  Int d = g.det();
  if (d != 1 && d != -1) throw DomainError("apply: determinant must be +-1");
  return {f.a * g.r * g.r + f.b * g.r * g.s + f.c * g.s * g.s,
          2 * f.a * g.r * g.t + f.b * (g.r * g.u + g.s * g.t) + 2 * f.c * g.s * g.u,
          f.a * g.t * g.t + f.b * g.t * g.u + f.c * g.u * g.u};
}

std::pair<QuadForm, GLMatrix> reduce(const QuadForm& f) {
  if (!f.positive_definite()) throw DomainError("reduce: form must be positive definite");
  QuadForm g = f;
  GLMatrix w = GLMatrix::identity();
  // apply(h, apply(w, f)) == apply(h * w, f)
  auto step = [&](const GLMatrix& h) {
    g = apply(h, g);
    w = h * w;
  };
  const GLMatrix swap{0, -1, 1, 0};
  for (;;) {
    // translate b into (-a, a]
    Int twoa = 2 * g.a;
    Int k;
    mpz_fdiv_q(k.get_mpz_t(), Int(g.a - g.b).get_mpz_t(), twoa.get_mpz_t());
    if (k != 0) step({1, 0, k, 1});
    if (g.a > g.c) {
      step(swap);
      continue;
    }
    if (g.a == g.c && g.b < 0) step(swap);
    break;
  }
  return {g, w};
}

FormClassSet reduced_forms(const Int& disc) {
  if (disc >= 0) throw DomainError("reduced_forms: discriminant must be negative");
  unsigned long r = mpz_fdiv_ui(disc.get_mpz_t(), 4);
  if (r != 0 && r != 1) throw DomainError("reduced_forms: discriminant must be 0 or 1 mod 4");
  FormClassSet out{disc, {}};
  Int amax = arith::isqrt(-disc / 3);
  for (Int a = 1; a <= amax; ++a) {
    for (Int b = -a + 1; b <= a; ++b) {
      Int num = b * b - disc;
      if (!mpz_divisible_p(num.get_mpz_t(), Int(4 * a).get_mpz_t())) continue;
      QuadForm q{a, b, num / (4 * a)};
      if (!q.is_reduced()) continue;
      if (arith::gcd(arith::gcd(q.a, q.b), q.c) != 1) continue;
      out.forms.push_back(q);
    }
  }
  std::sort(out.forms.begin(), out.forms.end(), [](const QuadForm& x, const QuadForm& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.c != y.c) return x.c < y.c;
    return x.b < y.b;
  });
  return out;
}

Int class_number(const Int& disc) { return Int(static_cast<unsigned long>(reduced_forms(disc).forms.size())); }

Int narrow_class_number(const Int& disc) {
  if (disc <= 0 || arith::is_square(disc) || (disc % 4 != 0 && disc % 4 != 1))
    throw DomainError("narrow_class_number: need a positive nonsquare discriminant");
  const Int r = arith::isqrt(disc);  // floor(sqrt D), never equal to sqrt D
  // Reduced: 0 < b < sqrt D and sqrt D - b < 2|a| < sqrt D + b.
  std::vector<QuadForm> reduced;
  for (Int b = 1; b <= r; ++b) {
    if ((b * b - disc) % 4 != 0) continue;
    Int ac = (b * b - disc) / 4;  // negative
    for (Int a = 1; a * a <= -ac; ++a) {
      if (ac % a != 0) continue;
      Int c = ac / a;
      for (const Int& aa : {Int(a), Int(c)}) {
        Int two_a = 2 * abs(aa);
        if (two_a <= r - b || two_a > r + b) continue;
        for (int sg : {1, -1}) {
          QuadForm f{aa * sg, b, ac / aa * sg};
          if (arith::gcd(arith::gcd(f.a, f.b), f.c) != 1) continue;
          if (std::find(reduced.begin(), reduced.end(), f) == reduced.end()) reduced.push_back(f);
        }
      }
    }
  }
  // rho(a, b, c) = (c, b', a') with b' = -b mod 2|c| and sqrt D - 2|c| < b' < sqrt D.
  auto rho = [&](const QuadForm& f) {
    Int m = 2 * abs(f.c);
    Int b = -f.b;
    Int k = r - b;
    if (k >= 0)
      b += (k / m) * m;
    else
      b -= ((-k + m - 1) / m) * m;
    QuadForm g{f.c, b, (b * b - disc) / (4 * f.c)};
    return g;
  };
  std::vector<bool> seen(reduced.size(), false);
  Int cycles = 0;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    QuadForm f = reduced[i];
    for (;;) {
      auto it = std::find(reduced.begin(), reduced.end(), f);
      if (it == reduced.end()) throw PrecisionError("narrow_class_number: cycle left the reduced set");
      std::size_t j = static_cast<std::size_t>(it - reduced.begin());
      if (seen[j]) break;
      seen[j] = true;
      f = rho(f);
    }
  }
  return cycles;
}

Rat weighted_class_number(const Int& delta) {
  if (!arith::is_fundamental_discriminant(delta) || delta == 1)
    throw DomainError("weighted_class_number: not a fundamental discriminant");
  if (delta < 0) {
    Rat h(class_number(delta));
    if (delta == -3) return h / 3;
    if (delta == -4) return h / 2;
    return h;
  }
  const Bits prec = 192;
  BigReal l = weber::l_value(delta, 50);
  pell::PellSolution p = pell::solve_even_pell(delta);
  BigReal eps = (BigReal(p.T, prec) + BigReal(p.U, prec) * sqrt(BigReal(delta, prec))) / 2L;
  BigReal k = l * sqrt(BigReal(delta, prec)) / log(eps);
  Int kr = k.round_to_int();
  if (abs(k - BigReal(kr, prec)).to_double() > 1e-20)
    throw PrecisionError("weighted_class_number: non-integral class number");
  return Rat(kr);
}

Int representation_count(const QuadForm& f, const Int& n) {
  if (!f.positive_definite()) throw DomainError("representation_count: form must be positive definite");
  if (n < 0) return 0;
  if (n == 0) return 1;
  Int D = -f.discriminant();
  // From 4a f = (2aX + bY)^2 + D Y^2 and the symmetric identity.
  Int ymax = arith::isqrt(4 * f.a * n / D) + 1;
  Int count = 0;
  for (Int y = -ymax; y <= ymax; ++y) {
    // a X^2 + b y X + (c y^2 - n) = 0
    Int disc = f.b * f.b * y * y - 4 * f.a * (f.c * y * y - n);
    if (disc < 0 || !arith::is_square(disc)) continue;
    Int s = arith::isqrt(disc);
    for (int sg : {1, -1}) {
      if (sg == -1 && s == 0) break;
      Int num = -f.b * y + sg * s;
      if (mpz_divisible_p(num.get_mpz_t(), Int(2 * f.a).get_mpz_t())) ++count;
    }
  }
  return count;
}

Int total_representations(const Int& m, const Int& n) {
  if (n < 1) throw DomainError("total_representations: n must be positive");
  Int s = 0;
  for (const Int& d : arith::divisors(n)) s += arith::kronecker(-m, d);
  return 2 * s;
}

std::vector<std::pair<QuadForm, QuadForm>> homologue_pairs(const FormClassSet& set) {
  for (const auto& q : set.forms)
    if (!q.diagonal()) throw NotConvenient("homologue_pairs: reduced form " + render(q) + " is not diagonal");
  if (mpz_fdiv_ui(set.discriminant.get_mpz_t(), 4) != 0 || !arith::is_twice_odd_squarefree(-set.discriminant / 4))
    throw DomainError("homologue_pairs: discriminant must be -4m with m twice odd squarefree");
  auto odd_coeff = [](const QuadForm& q) { return mpz_odd_p(q.a.get_mpz_t()) ? q.a : q.c; };
  auto partner = [&](const QuadForm& q) {
    // (A, 0, 2C) <-> (2A, 0, C), A the odd coefficient
    Int A = odd_coeff(q);
    Int C = (q.a * q.c) / A / 2;
    QuadForm p{2 * A, 0, C};
    return reduce(p).first;
  };
  std::map<Int, std::pair<QuadForm, QuadForm>> pairs;
  std::vector<bool> used(set.forms.size(), false);
  for (std::size_t i = 0; i < set.forms.size(); ++i) {
    if (used[i]) continue;
    const QuadForm& q = set.forms[i];
    QuadForm p = partner(q);
    used[i] = true;
    for (std::size_t j = 0; j < set.forms.size(); ++j)
      if (set.forms[j] == p) used[j] = true;
    Int aq = odd_coeff(q), ap = odd_coeff(p);
    if (ap < aq)
      pairs.emplace(ap, std::make_pair(p, q));
    else
      pairs.emplace(aq, std::make_pair(q, p));
  }
  std::vector<std::pair<QuadForm, QuadForm>> out;
  for (auto& kv : pairs) out.push_back(kv.second);
  return out;
}

int chi(const Int& delta, const QuadForm& f) {
  if (!f.diagonal()) throw DomainError("chi: form must be diagonal");
  return arith::jacobi(delta, f.a + f.c);
}

namespace {
std::string term(const Int& coef, const char* var) {
  std::string s = coef == 1 ? std::string() : coef.get_str();
  return s + var;
}
}  // namespace

std::string render(const QuadForm& f) {
  std::string s = term(f.a, "X²");
  if (f.b != 0) s += (f.b > 0 ? " + " : " − ") + term(abs(f.b), "XY");
  s += (f.c > 0 ? " + " : " − ") + term(abs(f.c), "Y²");
  return s;
}

}  // namespace smod::qforms
