#pragma once

// Independent reference implementations used as oracles by the tests.

#include <optional>
#include <random>
#include <vector>

#include "smod/arith.hpp"
#include "smod/bigreal.hpp"
#include "smod/surd.hpp"

namespace oracle {

using smod::BigReal;
using smod::Bits;
using smod::Int;
using smod::Rat;
using smod::surd::SurdElement;

inline bool close(const BigReal& a, const BigReal& b, int exp10) {
  BigReal tol = smod::pow(BigReal(10L, a.precision()), static_cast<long>(exp10));
  return smod::abs(a - b) < tol;
}

inline bool rel_close(const BigReal& a, const BigReal& b, int exp10) {
  BigReal tol = smod::pow(BigReal(10L, a.precision()), static_cast<long>(exp10));
  return smod::abs(a - b) < tol * smod::abs(b);
}

// Square root by descent through the tower Q ⊂ Q(√p1) ⊂ ... : write
// x = A + B√p over the smaller field, take N = √(A² − pB²) there, and
// u = √((A ± N)/2), v = B/(2u).
inline std::optional<SurdElement> tower_sqrt(const SurdElement& x, std::vector<Int> primes) {
  if (x.is_zero()) return SurdElement(0L);
  if (primes.empty()) {
    if (!x.is_rational()) return std::nullopt;
    Rat q = x.rational_part();
    if (q < 0) return std::nullopt;
    Int n = q.get_num(), d = q.get_den();
    if (!smod::arith::is_square(n) || !smod::arith::is_square(d)) return std::nullopt;
    return SurdElement(smod::make_rat(smod::arith::isqrt(n), smod::arith::isqrt(d)));
  }
  Int p = primes.back();
  primes.pop_back();
  SurdElement A, B;
  for (const auto& [r, c] : x.terms()) {
    if (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t()))
      B += SurdElement::sqrt_of(Int(r / p)) * c;
    else
      A += SurdElement::sqrt_of(r) * c;
  }
  if (B.is_zero()) {
    if (auto s = tower_sqrt(A, primes)) return s;
    if (auto s = tower_sqrt(A / Rat(p), primes)) return *s * SurdElement::sqrt_of(p);
    return std::nullopt;
  }
  auto n = tower_sqrt(A * A - B * B * Rat(p), primes);
  if (!n) return std::nullopt;
  for (int sg : {1, -1}) {
    auto u = tower_sqrt((A + *n * Rat(sg)) / Rat(2), primes);
    if (!u || u->is_zero()) continue;
    SurdElement v = B * smod::surd::inverse(*u) / Rat(2);
    SurdElement y = *u + v * SurdElement::sqrt_of(p);
    if (y * y == x) return y;
  }
  return std::nullopt;
}

// Jacobi theta constants at real nome 0 < q < 1.
inline BigReal theta2(const BigReal& q) {
  const Bits prec = q.precision();
  BigReal s(prec), half(0.5, prec);
  for (long n = 0;; ++n) {
    BigReal e = BigReal(n, prec) + half;
    BigReal t = smod::pow(q, e * e);
    s += t;
    if (t < smod::pow2(-static_cast<long>(prec) - 8, prec) * s) break;
  }
  return s * 2L;
}

inline BigReal theta3(const BigReal& q, int sign = 1) {
  const Bits prec = q.precision();
  BigReal s(1L, prec);
  for (long n = 1;; ++n) {
    BigReal t = smod::pow(q, n * n) * 2L;
    if (sign < 0 && (n & 1)) s -= t; else s += t;
    if (t < smod::pow2(-static_cast<long>(prec) - 8, prec)) break;
  }
  return s;
}

// Modulus k and complement k' with nome q.
inline std::pair<BigReal, BigReal> modulus_from_nome(const BigReal& q) {
  BigReal t3 = theta3(q);
  BigReal t2 = theta2(q);
  BigReal t4 = theta3(q, -1);
  return {t2 * t2 / (t3 * t3), t4 * t4 / (t3 * t3)};
}

// Random element of Q(√p : p in primes) with small integer coefficients.
inline SurdElement random_element(std::mt19937_64& rng, const std::vector<Int>& primes, int bound) {
  std::uniform_int_distribution<int> coef(-bound, bound);
  SurdElement x;
  for (unsigned mask = 0; mask < (1u << primes.size()); ++mask) {
    Int r = 1;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask >> i & 1) r *= primes[i];
    x += SurdElement::sqrt_of(r) * Rat(coef(rng));
  }
  return x;
}

}  // namespace oracle
