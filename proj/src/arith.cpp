#include "smod/arith.hpp"

#include <algorithm>

#include "smod/errors.hpp"

namespace smod::arith {

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

int jacobi(const Int& a_in, const Int& n_in) {
  if (n_in <= 0 || mpz_even_p(n_in.get_mpz_t()))
    throw DomainError("jacobi: modulus must be odd and positive");
  Int n = n_in;
  Int a = a_in % n;
  if (a < 0) a += n;
  int t = 1;
  while (a != 0) {
    while (mpz_even_p(a.get_mpz_t())) {
      a /= 2;
      unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

int kronecker(const Int& a, const Int& n_in) {
  if (n_in == 0) return (a == 1 || a == -1) ? 1 : 0;
  Int n = n_in;
  int t = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) t = -t;
  }
  while (mpz_even_p(n.get_mpz_t())) {
    n /= 2;
    if (mpz_even_p(a.get_mpz_t())) return 0;
    unsigned long r = mpz_fdiv_ui(a.get_mpz_t(), 8);
    if (r == 3 || r == 5) t = -t;
  }
  return t * jacobi(a, n);
}

std::vector<std::pair<Int, unsigned>> factor(const Int& n_in) {
  if (n_in == 0) throw DomainError("factor: zero");
  Int n = abs(n_in);
  std::vector<std::pair<Int, unsigned>> out;
  auto pull = [&](const Int& p) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  pull(2);
  for (Int p = 3; p * p <= n; p += 2) pull(p);
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<Int> divisors(const Int& n) {
  if (n < 1) throw DomainError("divisors: n must be positive");
  std::vector<Int> ds{1};
  for (const auto& [p, e] : factor(n)) {
    std::size_t base = ds.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

bool is_squarefree(const Int& n) {
  if (n == 0) return false;
  for (const auto& f : factor(n))
    if (f.second > 1) return false;
  return true;
}

bool is_square(const Int& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

Int isqrt(const Int& n) {
  if (n < 0) throw DomainError("isqrt: negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

SquarefreeSplit squarefree_split(const Int& n) {
  if (n == 0) return {0, 0};
  Int s = 1, k = n < 0 ? -1 : 1;
  for (const auto& [p, e] : factor(n)) {
    for (unsigned i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) k *= p;
  }
  return {s, k};
}

bool is_fundamental_discriminant(const Int& d) {
  if (d == 0 || d == 1) return d == 1;
  unsigned long r4 = mpz_fdiv_ui(d.get_mpz_t(), 4);
  if (r4 == 1) return is_squarefree(d);
  if (r4 != 0) return false;
  Int d1 = d / 4;
  unsigned long q = mpz_fdiv_ui(d1.get_mpz_t(), 4);
  return (q == 2 || q == 3) && is_squarefree(d1);
}

bool is_twice_odd_squarefree(const Int& m) {
  if (m < 2 || mpz_fdiv_ui(m.get_mpz_t(), 4) != 2) return false;
  return is_squarefree(m);
}

std::vector<FundDisc> fundamental_discriminants_dividing(const Int& D) {
  if (D >= 0 || mpz_fdiv_ui(D.get_mpz_t(), 4) != 0 || !is_twice_odd_squarefree(-D / 4))
    throw DomainError("expected D = -4m with m twice an odd squarefree number");
  Int odd = -D / 8;
  std::vector<FundDisc> out;
  for (const Int& d : divisors(odd)) {
    // Exactly one of d, -d is 1 mod 4 since d is odd.
    Int s = mpz_fdiv_ui(d.get_mpz_t(), 4) == 1 ? Int(d) : Int(-d);
    out.push_back({s});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const FundDisc& x, const FundDisc& y) { return abs(x.value) < abs(y.value); });
  return out;
}

}  // namespace smod::arith
