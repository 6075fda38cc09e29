#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "smod/bigreal.hpp"
#include "smod/unit_product.hpp"

namespace smod::modulus {

using surd::SurdElement;
using surd::UnitProduct;

// k from 1/k - k = 2 g^12, i.e. k = g^6 (sqrt(g^12 + g^-12) - g^6), evaluated
// in the cancellation-free form g^-6 / (sqrt(g^12 + g^-12) + g^6).
BigReal k_from_g_numeric(const BigReal& g, int digits);

// Terms with odd radicand (rational part included) and with even radicand.
std::pair<SurdElement, SurdElement> split_even_odd(const SurdElement& g12);

// u v = p and (u + 1)(v - 1) = q, u the larger root.
std::pair<SurdElement, SurdElement> solve_pair_product(const SurdElement& p, const SurdElement& q,
                                                       const std::vector<Int>& primes);
// c d = p and (c - 1)(d - 1) = q, c >= d.
std::pair<SurdElement, SurdElement> solve_pair_product_minus(const SurdElement& p, const SurdElement& q,
                                                             const std::vector<Int>& primes);

struct AvcalWitness {
  SurdElement S1, S2;  // sqrt(alpha beta), sqrt((alpha + 1)(beta - 1))
  SurdElement alpha, beta;
  SurdElement sqrt_alpha, sqrt_beta;
  SurdElement a, b, c, d;
};

struct AvcalResult {
  AvcalWitness witness;
  UnitProduct x1;  // the root in (0, 1)
  UnitProduct x2;  // -1 / x1
};

// Roots of 1/x - x = 2 (S1 + S2).  Throws NotASquare when some square root
// needed along the way is not in the field.
AvcalResult avcal_roots(const SurdElement& S1, const SurdElement& S2, const std::vector<Int>& primes);

// Candidate (S1, S2) splits of g^12 in the order they are tried: the parity
// split first, then the remaining character bipartitions, each with its
// larger half as S1 first.
std::vector<std::pair<SurdElement, SurdElement>> candidate_splits(const SurdElement& g12);

// First candidate split for which avcal_roots succeeds.
AvcalResult avcal_from_g12(const SurdElement& g12, const std::vector<Int>& primes);

// Watson's four-factor alpha from u v = g^6.
UnitProduct vcal(const SurdElement& u, const SurdElement& v, const std::vector<Int>& primes);
BigReal vcal_numeric(const BigReal& u, const BigReal& v);

struct VcalSplit {
  SurdElement u, v;
  UnitProduct alpha;
};
// Splits g^6 (g given as a product with exponents in (1/6)Z) into u v by
// subsets of its factors, nontrivial subsets first in mask order, and returns
// the first split whose exact vcal goes through.
VcalSplit vcal_from_g(const UnitProduct& g, const std::vector<Int>& primes);

// Rewrites each unit factor as a product of powers of fundamental units of
// quadratic subfields; a factor that is not a unit is kept and reported.
struct WatsonResult {
  UnitProduct product;
  std::vector<SurdElement> unrecognized;
};
WatsonResult watson_simplify(const UnitProduct& k, const std::vector<Int>& primes);

struct SingularModulus {
  Int n;
  std::optional<UnitProduct> k_exact;
  std::optional<UnitProduct> k_avcal;  // AVCAL output before simplification
  std::optional<AvcalWitness> witness;
  BigReal k_numeric;
  BigReal alpha_numeric;
  BigReal ratio_residual;
};

SingularModulus small_modulus(int n, int digits);
// n in {2, 3, 7} from the small modular equations; even n = 2 * odd
// squarefree through g_n and the AVCAL.  Otherwise numeric only.
SingularModulus singular_modulus(const Int& n, int digits);

// F(1 - alpha) / F(alpha) - sqrt(n), through the AGM.
BigReal verify_ratio(const BigReal& alpha, const Int& n, int digits);

}  // namespace smod::modulus
