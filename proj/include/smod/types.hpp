#pragma once

#include <gmpxx.h>

namespace smod {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace smod
