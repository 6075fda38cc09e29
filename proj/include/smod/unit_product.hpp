#pragma once

#include <string>
#include <vector>

#include "smod/surd.hpp"

namespace smod::surd {

struct UnitFactor {
  SurdElement base;
  Rat exponent;
};

// coefficient * prod base_i ^ exponent_i.  Bases with a non-integral exponent
// must be positive in the identity embedding.
class UnitProduct {
 public:
  UnitProduct() = default;
  explicit UnitProduct(std::vector<UnitFactor> factors, Rat coefficient = 1)
      : factors_(std::move(factors)), coefficient_(std::move(coefficient)) {}

  const std::vector<UnitFactor>& factors() const { return factors_; }
  const Rat& coefficient() const { return coefficient_; }
  void push(SurdElement base, Rat exponent) { factors_.push_back({std::move(base), std::move(exponent)}); }

  Int exponent_lcm() const;
  // All exponents multiplied by n.
  UnitProduct power(const Rat& n) const;
  UnitProduct inverse() const;
  friend UnitProduct operator*(const UnitProduct& a, const UnitProduct& b);

  // Exact value; every exponent must be an integer.
  SurdElement expand() const;
  BigReal value(int digits) const;
  BigReal value_bits(Bits prec) const;

  // Every base has field norm +-1.
  bool all_units() const;

  // Equality of values: compare the L-th powers exactly, L the common
  // exponent denominator, and the signs numerically.
  bool same_value(const UnitProduct& o) const;

  // "(4 − √15)²(8 − 3√7)" style, factors in stored order.
  std::string pretty() const;
  // "(4 - sqrt(15))^2 * (8 - 3*sqrt(7))"
  std::string to_string() const;

 private:
  std::vector<UnitFactor> factors_;
  Rat coefficient_ = 1;
};

}  // namespace smod::surd
