#pragma once

#include <string>
#include <vector>

#include "smod/bigreal.hpp"
#include "smod/pell.hpp"
#include "smod/qforms.hpp"
#include "smod/unit_product.hpp"

namespace smod::weber {

// L(1, chi_delta) from the finite character sums.
BigReal l_value(const Int& delta, int digits);

struct DiscPair {
  Int delta;        // odd fundamental discriminant
  Int delta_prime;  // -4m / delta
  const Int& positive() const { return delta > 0 ? delta : delta_prime; }
};
std::vector<DiscPair> disc_pairs(const Int& m);

struct SurvivingSum {
  Int delta;
  Int delta_prime;
  // One entry per homologue pair, aligned with qforms::homologue_pairs: the
  // coefficient chi(A side) - chi(partner) of ln g_{m/A^2}, in {-2, 0, 2}.
  std::vector<int> coefficients;
  std::vector<Int> pair_A;  // A of each pair, so the term is ln g_{m/A^2}
  Rat K_delta;
  Rat K_delta_prime;
  pell::PellSolution unit;  // even Pell unit of the positive member
};

// The delta with (2/delta) = -1; every other delta has all coefficients 0.
std::vector<SurvivingSum> surviving_sums(const Int& m);
// All 2^t rows, survivors or not (coefficient table).
std::vector<SurvivingSum> coefficient_rows(const Int& m);

struct G2n {
  Int n;
  Int h;                           // class number of -8n
  surd::UnitProduct product;       // Pell units with exponents K K' / (2h)
  surd::UnitProduct simplified;    // square roots taken where exact
  BigReal value;
};

// g_{2n} with 2n twice an odd squarefree number whose forms are all diagonal.
G2n g2n(const Int& n, int digits);

// Replaces base^(p/q) by sqrt(base)^(2p/q) while q is even and the square root
// exists in the field of the base's primes.
surd::UnitProduct take_exact_roots(const surd::UnitProduct& u, const std::vector<Int>& primes);

struct WeightedSumTable {
  Int m;
  std::vector<Int> deltas;                // columns
  std::vector<qforms::QuadForm> forms;    // rows of the Jacobi table
  std::vector<Int> row_moduli;            // A + C, principal row shown as 1
  std::vector<std::vector<int>> jacobi;   // [form][delta]
  std::vector<std::pair<qforms::QuadForm, qforms::QuadForm>> pairs;
  std::vector<std::vector<int>> differences;  // [delta][pair]
  std::vector<SurvivingSum> survivors;
};
WeightedSumTable weighted_sum_table(const Int& m);

}  // namespace smod::weber
