#pragma once

#include <algorithm>
#include <utility>

#include "smod/bigreal.hpp"

namespace smod {

struct BigComplex {
  BigReal re;
  BigReal im;

  explicit BigComplex(Bits prec = 128) : re(prec), im(prec) {}
  BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}

  Bits precision() const { return std::max(re.precision(), im.precision()); }

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigReal& s);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a);

BigReal norm(const BigComplex& z);  // |z|^2
BigReal abs(const BigComplex& z);
BigReal arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex pow(const BigComplex& z, long n);
BigComplex conj(const BigComplex& z);

}  // namespace smod
