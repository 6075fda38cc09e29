#include "smod/modulus.hpp"

#include <algorithm>
#include <cmath>

#include "smod/arith.hpp"
#include "smod/errors.hpp"
#include "smod/highprec.hpp"
#include "smod/pell.hpp"
#include "smod/weber.hpp"

namespace smod::modulus {

using surd::Embedding;
using surd::UnitFactor;

namespace {

BigReal value(const SurdElement& x, Bits prec = 256) { return surd::embed_bits(x, Embedding::identity({}), prec); }

SurdElement root(const SurdElement& x, const std::vector<Int>& primes) { return surd::sqrt_in_field(x, primes); }

std::vector<Int> primes_of(const Int& n) {
  std::vector<Int> ps;
  for (const auto& f : arith::factor(n)) ps.push_back(f.first);
  return ps;
}

// sqrt(x) - sqrt(x - 1), exact.
SurdElement gap(const SurdElement& x, const std::vector<Int>& primes) {
  return root(x, primes) - root(x - SurdElement(1L), primes);
}
SurdElement gap_sum(const SurdElement& x, const std::vector<Int>& primes) {
  return root(x, primes) + root(x - SurdElement(1L), primes);
}

}  // namespace

BigReal k_from_g_numeric(const BigReal& g, int digits) {
  if (g.sign() <= 0) throw DomainError("k_from_g: g must be positive");
  const Bits prec = std::max(g.precision(), digits_to_bits(digits) + 32);
  BigReal x = g.with_precision(prec);
  BigReal g6 = pow(x, 6), g12 = g6 * g6;
  BigReal s = sqrt(g12 + BigReal(1L, prec) / g12);
  return (BigReal(1L, prec) / (g6 * (s + g6))).with_precision(digits_to_bits(digits));
}

std::pair<SurdElement, SurdElement> split_even_odd(const SurdElement& g12) {
  SurdElement odd, even;
  for (const auto& [r, c] : g12.terms()) {
    SurdElement t = SurdElement::sqrt_of(r) * c;
    if (mpz_odd_p(r.get_mpz_t()))
      odd += t;
    else
      even += t;
  }
  return {odd, even};
}

std::pair<SurdElement, SurdElement> solve_pair_product(const SurdElement& p, const SurdElement& q,
                                                       const std::vector<Int>& primes) {
  // u - v = p - q - 1 and u (u - d) = p
  SurdElement d = p - q - SurdElement(1L);
  SurdElement u = (d + root(d * d + p * Rat(4), primes)) / Rat(2);
  SurdElement v = u - d;
  if (u * v != p || (u + SurdElement(1L)) * (v - SurdElement(1L)) != q)
    throw NotASquare("solve_pair_product: verification failed");
  return {u, v};
}

std::pair<SurdElement, SurdElement> solve_pair_product_minus(const SurdElement& p, const SurdElement& q,
                                                             const std::vector<Int>& primes) {
  // c + d = p - q + 1 and c d = p
  SurdElement s = p - q + SurdElement(1L);
  SurdElement c = (s + root(s * s - p * Rat(4), primes)) / Rat(2);
  SurdElement d = s - c;
  if (c * d != p || (c - SurdElement(1L)) * (d - SurdElement(1L)) != q)
    throw NotASquare("solve_pair_product_minus: verification failed");
  return {c, d};
}

namespace {

// Bipartitions of x's terms by a character chi_S(r) = (-1)^{#(primes of r in S)},
// parity character first, then the rest by subset mask, then the trivial split.
// Each partition yields (larger half, smaller half) first and then the swap.
std::vector<std::pair<SurdElement, SurdElement>> bipartitions(const SurdElement& x, bool both_orientations) {
  std::vector<Int> ps = x.primes();
  std::vector<unsigned> masks;
  unsigned two = 0;
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (ps[i] == 2) two = 1u << i;
  if (two) masks.push_back(two);
  for (unsigned s = 1; s < (1u << ps.size()); ++s)
    if (s != two) masks.push_back(s);
  masks.push_back(0);
  std::vector<std::pair<SurdElement, SurdElement>> out;
  std::vector<std::pair<std::map<Int, bool>, int>> seen;
  for (unsigned s : masks) {
    SurdElement plus, minus;
    for (const auto& [r, c] : x.terms()) {
      int sign = 1;
      for (std::size_t i = 0; i < ps.size(); ++i)
        if ((s >> i & 1) && mpz_divisible_p(r.get_mpz_t(), ps[i].get_mpz_t())) sign = -sign;
      (sign > 0 ? plus : minus) += SurdElement::sqrt_of(r) * c;
    }
    bool dup = false;
    for (const auto& pr : out)
      if ((pr.first == plus && pr.second == minus) || (pr.first == minus && pr.second == plus)) dup = true;
    if (dup) continue;
    if (value(plus) < value(minus)) std::swap(plus, minus);
    out.emplace_back(plus, minus);
    if (both_orientations && !minus.is_zero()) out.emplace_back(minus, plus);
  }
  return out;
}

// Tries every split of a root r = sqrt(product) + sqrt(cross) and the given
// solver; returns the first where each needed square root exists. Splits are
// tried by decreasing gap between the halves, the trivial split last.
template <class Solver>
std::pair<SurdElement, SurdElement> split_root(const SurdElement& r, const std::vector<Int>& primes, Solver solve,
                                               bool minus_variant) {
  auto splits = bipartitions(r, true);
  auto spread = [](const std::pair<SurdElement, SurdElement>& pr) {
    if (pr.first.is_zero() || pr.second.is_zero()) return BigReal(-1L, 128);
    return abs(value(pr.first) - value(pr.second));
  };
  std::stable_sort(splits.begin(), splits.end(),
                   [&](const auto& x, const auto& y) { return spread(y) < spread(x); });
  for (const auto& [t1, t2] : splits) {
    if (t1.is_zero()) continue;
    try {
      auto uv = solve(t1 * t1, t2 * t2, primes);
      const SurdElement& u = uv.first;
      const SurdElement& v = uv.second;
      // Factors are sqrt(u+1)-sqrt(u), sqrt(v)-sqrt(v-1) (plus variant) or
      // sqrt(u)-sqrt(u-1), sqrt(v)-sqrt(v-1) (minus variant).
      if (minus_variant) {
        gap(u, primes);
      } else {
        gap(u + SurdElement(1L), primes);
      }
      gap(v, primes);
      return uv;
    } catch (const NotASquare&) {
    }
  }
  throw NotASquare("no admissible split of " + r.to_string());
}

}  // namespace

AvcalResult avcal_roots(const SurdElement& S1, const SurdElement& S2, const std::vector<Int>& primes) {
  AvcalResult res;
  AvcalWitness& w = res.witness;
  w.S1 = S1;
  w.S2 = S2;
  std::tie(w.alpha, w.beta) = solve_pair_product(S1 * S1, S2 * S2, primes);
  w.sqrt_alpha = root(w.alpha, primes);
  w.sqrt_beta = root(w.beta, primes);
  std::tie(w.a, w.b) = split_root(w.sqrt_alpha, primes, solve_pair_product, false);
  std::tie(w.c, w.d) = split_root(w.sqrt_beta, primes, solve_pair_product_minus, true);

  const SurdElement one(1L);
  std::vector<SurdElement> lows = {gap(w.a + one, primes), gap(w.b, primes), gap(w.c, primes), gap(w.d, primes)};
  std::vector<SurdElement> highs = {gap_sum(w.a + one, primes), gap_sum(w.b, primes), gap_sum(w.c, primes),
                                    gap_sum(w.d, primes)};
  for (std::size_t i = 0; i < 4; ++i) {
    if (lows[i] != one) res.x1.push(lows[i], 1);
    if (highs[i] != one) res.x2.push(highs[i], 1);
  }
  res.x2 = UnitProduct(res.x2.factors(), Rat(-1));

  SurdElement x1 = res.x1.expand();
  if (x1 * res.x2.expand() != SurdElement(-1L)) throw NotASquare("avcal_roots: x1 x2 != -1");
  if (surd::inverse(x1) - x1 != (S1 + S2) * Rat(2)) throw NotASquare("avcal_roots: root check failed");
  return res;
}

std::vector<std::pair<SurdElement, SurdElement>> candidate_splits(const SurdElement& g12) {
  return bipartitions(g12, true);
}

AvcalResult avcal_from_g12(const SurdElement& g12, const std::vector<Int>& primes) {
  for (const auto& [s1, s2] : candidate_splits(g12)) {
    try {
      AvcalResult r = avcal_roots(s1, s2, primes);
      BigReal k = r.x1.value_bits(128);
      if (k.sign() > 0 && k < BigReal(1L, 128)) return r;
    } catch (const NotASquare&) {
    }
  }
  throw NotASquare("avcal: no split of g^12 = " + g12.to_string() + " completes");
}

UnitProduct vcal(const SurdElement& u, const SurdElement& v, const std::vector<Int>& primes) {
  const SurdElement one(1L);
  SurdElement u2 = u * u, v2 = v * v;
  SurdElement U = (u2 + surd::inverse(u2)) / Rat(2);
  SurdElement V = (v2 + surd::inverse(v2)) / Rat(2);
  SurdElement W = root(U * U + V * V - one, primes);
  SurdElement S = (U + V + W + one) / Rat(2);
  UnitProduct alpha;
  for (const SurdElement& X : {S, S - U, S - V, S - W}) {
    SurdElement f = gap(X, primes);
    if (f != one) alpha.push(f, 2);
  }
  return alpha;
}

BigReal vcal_numeric(const BigReal& u, const BigReal& v) {
  const Bits prec = std::max(u.precision(), v.precision());
  BigReal one(1L, prec);
  BigReal U = (u * u + one / (u * u)) / 2L;
  BigReal V = (v * v + one / (v * v)) / 2L;
  BigReal W = sqrt(U * U + V * V - one);
  BigReal S = (U + V + W + one) / 2L;
  BigReal alpha = one;
  for (const BigReal& X : {S, S - U, S - V, S - W}) {
    BigReal d = X - one;
    // sqrt(X) - sqrt(X-1) = 1 / (sqrt(X) + sqrt(X-1)), no cancellation
    BigReal f = one / (sqrt(X) + sqrt(max(d, BigReal(prec))));
    alpha *= f * f;
  }
  return alpha;
}

VcalSplit vcal_from_g(const UnitProduct& g, const std::vector<Int>& primes) {
  UnitProduct g6 = g.power(6);
  std::vector<SurdElement> parts;
  for (const auto& f : g6.factors()) parts.push_back(UnitProduct({f}).expand());
  const unsigned full = (1u << parts.size()) - 1;
  std::vector<unsigned> masks;
  for (unsigned m = 1; m < full; ++m) masks.push_back(m);
  masks.push_back(full);
  for (unsigned m : masks) {
    SurdElement u(g6.coefficient()), v(1L);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (m >> i & 1)
        u = u * parts[i];
      else
        v = v * parts[i];
    }
    try {
      return {u, v, vcal(u, v, primes)};
    } catch (const NotASquare&) {
    }
  }
  throw NotASquare("vcal: no split of g^6 goes through");
}

namespace {

struct Component {
  Int m;
  Rat exponent;  // of the fundamental unit eps_m > 1
};

// Logarithmic coordinates of a unit against the quadratic subfield units.
std::optional<std::vector<Component>> decompose(const SurdElement& B, const std::vector<Int>& primes) {
  std::set<Int> ps(primes.begin(), primes.end());
  for (const Int& p : B.primes()) ps.insert(p);
  std::vector<Int> P(ps.begin(), ps.end());
  const Bits prec = 256;
  auto embs = surd::all_embeddings(P);
  std::vector<BigReal> logs;
  for (const auto& e : embs) {
    BigReal v = abs(surd::embed_bits(B, e, prec));
    if (v.is_zero()) return std::nullopt;
    logs.push_back(log(v));
  }
  std::vector<Component> out;
  const BigReal N(static_cast<long>(embs.size()), prec);
  for (const Int& m : surd::radicand_group(ps)) {
    if (m == 1) continue;
    BigReal acc(prec);
    for (std::size_t i = 0; i < embs.size(); ++i) {
      if (embs[i].sign_of(m) < 0)
        acc -= logs[i];
      else
        acc += logs[i];
    }
    BigReal le = log(value(pell::fundamental_unit(m), prec));
    BigReal x = acc / (N * le);
    bool found = false;
    for (long den = 1; den <= 64 && !found; den *= 2) {
      BigReal t = x * den;
      Int r = t.round_to_int();
      if (abs(t - BigReal(r, prec)) < BigReal("1e-30", prec)) {
        if (r != 0) out.push_back({m, make_rat(r, Int(den))});
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return out;
}

// sqrt(A) - sqrt(A - 1) with integral A and both A, A - 1 nonsquare.
bool integral_gap_shape(const SurdElement& s) {
  if (s.terms().size() != 2 || s.coeff(1) != 0) return false;
  auto it = s.terms().begin();
  Rat c1 = it->second;
  Int r1 = it->first;
  ++it;
  Rat c2 = it->second;
  Int r2 = it->first;
  Rat A1 = c1 * c1 * Rat(r1), A2 = c2 * c2 * Rat(r2);
  if (A1.get_den() != 1 || A2.get_den() != 1) return false;
  Rat diff = A1 - A2;
  return diff == 1 || diff == -1;
}

}  // namespace

WatsonResult watson_simplify(const UnitProduct& k, const std::vector<Int>& primes) {
  WatsonResult res;
  std::vector<UnitFactor> out;
  auto add = [&](const SurdElement& base, const Rat& e) {
    for (auto& f : out)
      if (f.base == base) {
        f.exponent += e;
        return;
      }
    out.push_back({base, e});
  };
  for (const auto& f : k.factors()) {
    Rat n = surd::field_norm(f.base);
    auto comps = (n == 1 || n == -1) ? decompose(f.base, primes) : std::nullopt;
    if (comps) {
      UnitProduct candidate;
      for (const auto& c : *comps) {
        SurdElement eps = pell::fundamental_unit(c.m);
        candidate.push(eps, c.exponent);
      }
      if (!candidate.same_value(UnitProduct({{f.base, 1}}))) comps.reset();
    }
    if (!comps) {
      add(f.base, f.exponent);
      res.unrecognized.push_back(f.base);
      continue;
    }
    std::sort(comps->begin(), comps->end(), [](const Component& a, const Component& b) { return a.m > b.m; });
    for (const auto& c : *comps) {
      SurdElement eps = pell::fundamental_unit(c.m);
      Rat e = c.exponent * f.exponent;
      SurdElement base = eps;
      if (e < 0) {
        base = surd::inverse(eps);
        e = -e;
      }
      // Lift to a square root when the exponent is fractional or the root
      // has the shape sqrt(A) - sqrt(A-1).
      for (;;) {
        auto s = surd::try_sqrt_in_field(base, primes);
        if (!s) break;
        if (e.get_den() % 2 == 0 || integral_gap_shape(*s)) {
          base = *s;
          e *= 2;
        } else {
          break;
        }
      }
      add(base, e);
    }
  }
  std::vector<UnitFactor> kept;
  for (auto& f : out)
    if (f.exponent != 0 && f.base != SurdElement(1L)) kept.push_back(f);
  res.product = UnitProduct(kept, k.coefficient());
  if (!res.product.same_value(k)) throw PrecisionError("watson_simplify: rewritten product differs");
  return res;
}

BigReal verify_ratio(const BigReal& alpha_in, const Int& n, int digits) {
  const Bits prec = std::max(alpha_in.precision(), digits_to_bits(digits) + 32);
  BigReal alpha = alpha_in.with_precision(prec);
  BigReal one(1L, prec);
  if (alpha.sign() <= 0 || alpha >= one) throw DomainError("verify_ratio: alpha must lie in (0, 1)");
  // F(1 - alpha) / F(alpha) = agm(1, sqrt(1 - alpha)) / agm(1, sqrt(alpha))
  BigReal r = highprec::agm(one, sqrt(one - alpha)) / highprec::agm(one, sqrt(alpha));
  return (r - sqrt(BigReal(n, prec))).with_precision(digits_to_bits(digits));
}

namespace {

void fill_numeric(SingularModulus& s, const BigReal& k, int digits) {
  s.k_numeric = k;
  s.alpha_numeric = k * k;
  s.ratio_residual = verify_ratio(s.alpha_numeric, s.n, digits);
}

}  // namespace

SingularModulus small_modulus(int n, int digits) {
  if (n != 2 && n != 3 && n != 7) throw DomainError("small_modulus: n must be 2, 3 or 7");
  const Bits prec = digits_to_bits(digits) + 32;
  SingularModulus out{Int(n), std::nullopt, std::nullopt, std::nullopt, BigReal(prec), BigReal(prec), BigReal(prec)};
  // Both roots of the quadratic for alpha (or k when n = 2), written
  // center +- half * sqrt(r).
  Rat center, half;
  Int rad;
  bool in_k = false;
  if (n == 2) {  // (1 - k^2)(1 + k)^2 = 4k  =>  k^2 + 2k - 1 = 0
    center = -1, half = 1, rad = 2, in_k = true;
  } else if (n == 3) {  // sqrt(k k') + sqrt(k' k) = 1  =>  alpha^2 - alpha + 1/16 = 0
    center = Rat(1, 2), half = Rat(1, 4), rad = 3;
  } else {  // 2 (k k')^(1/4) = 1  =>  alpha^2 - alpha + 1/256 = 0
    center = Rat(1, 2), half = Rat(3, 16), rad = 7;
  }
  std::optional<SurdElement> best;
  BigReal best_res(prec);
  for (int sg : {1, -1}) {
    SurdElement cand = SurdElement(center) + SurdElement::sqrt_of(rad) * Rat(half * sg);
    BigReal v = value(cand, prec);
    BigReal alpha = in_k ? v * v : v;
    if (v.sign() <= 0 || alpha >= BigReal(1L, prec)) continue;
    BigReal r = abs(verify_ratio(alpha, Int(n), digits));
    if (!best || r < best_res) {
      best = cand;
      best_res = r;
    }
  }
  SurdElement k = in_k ? *best : surd::sqrt_in_field(*best, {Int(2), rad});
  out.k_exact = UnitProduct({{k, 1}});
  fill_numeric(out, value(k, prec), digits);
  return out;
}

SingularModulus singular_modulus(const Int& n, int digits) {
  if (n == 3 || n == 7) return small_modulus(static_cast<int>(n.get_si()), digits);
  if (n < 1) throw DomainError("singular_modulus: n must be positive");
  const Bits prec = digits_to_bits(digits) + 32;
  SingularModulus out{n, std::nullopt, std::nullopt, std::nullopt, BigReal(prec), BigReal(prec), BigReal(prec)};
  BigReal k_num = k_from_g_numeric(highprec::gn_numeric(Rat(n), digits + 20), digits + 20);
  std::optional<weber::G2n> g;
  if (arith::is_twice_odd_squarefree(n)) {
    try {
      g = weber::g2n(n / 2, digits);
    } catch (const NotConvenient&) {
      // some reduced form is not diagonal: numeric value only
    }
  }
  if (g) {
    Int L = g->product.exponent_lcm();
    if (12 % L.get_si() == 0) {
      SurdElement g12 = g->product.power(12).expand();
      std::vector<Int> primes = primes_of(n);
      AvcalResult r = avcal_from_g12(g12, primes);
      out.k_avcal = r.x1;
      out.witness = r.witness;
      out.k_exact = watson_simplify(r.x1, primes).product;
      BigReal diff = abs(out.k_exact->value_bits(prec) - k_num.with_precision(prec));
      if (diff > k_num * pow2(-static_cast<long>(digits_to_bits(digits)), prec))
        throw PrecisionError("singular_modulus: exact and q-series values disagree");
    }
  }
  fill_numeric(out, k_num.with_precision(prec), digits);
  return out;
}

}  // namespace smod::modulus
