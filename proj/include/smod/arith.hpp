#pragma once

#include <utility>
#include <vector>

#include "smod/types.hpp"

namespace smod::arith {

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// Jacobi symbol (a/n) for odd n >= 1.
int jacobi(const Int& a, const Int& n);
// Kronecker extension to any n (including even and negative n, and n = 0).
int kronecker(const Int& a, const Int& n);

// Prime factorization by trial division, ascending primes with multiplicity.
std::vector<std::pair<Int, unsigned>> factor(const Int& n);
std::vector<Int> divisors(const Int& n);

bool is_squarefree(const Int& n);
bool is_square(const Int& n);
Int isqrt(const Int& n);
// n = square * kernel with kernel squarefree and carrying the sign of n.
struct SquarefreeSplit {
  Int square_root;  // s with n = s^2 * kernel
  Int kernel;
};
SquarefreeSplit squarefree_split(const Int& n);

bool is_fundamental_discriminant(const Int& d);

struct FundDisc {
  Int value;
};

// Signed odd squarefree divisors delta of D with delta = 1 (mod 4).  D must be
// -4m where m is twice a squarefree odd number.
std::vector<FundDisc> fundamental_discriminants_dividing(const Int& D);

// True when m = 2 * (product of distinct odd primes), m = 2 allowed.
bool is_twice_odd_squarefree(const Int& m);

}  // namespace smod::arith
