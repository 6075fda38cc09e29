#pragma once

#include "smod/surd.hpp"
#include "smod/types.hpp"

namespace smod::pell {

// Minimal T, U >= 1 with T^2 - delta U^2 = 4.
struct PellSolution {
  Int delta;
  Int T;
  Int U;
};

PellSolution solve_even_pell(const Int& delta);

// (T + U sqrt(delta)) / 2 with the radicand reduced.
surd::SurdElement unit_value(const PellSolution& p);

// Fundamental unit (T + U sqrt(m)) / 2 > 1 of the order of discriminant 4m or
// m, taken from the least U with T^2 - m U^2 = +-4.  Used to factor units into
// quadratic pieces; its norm may be -1.
surd::SurdElement fundamental_unit(const Int& m);

}  // namespace smod::pell
