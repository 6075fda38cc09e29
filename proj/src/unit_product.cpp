#include "smod/unit_product.hpp"

#include "smod/arith.hpp"
#include "smod/errors.hpp"

namespace smod::surd {

Int UnitProduct::exponent_lcm() const {
  Int l = 1;
  for (const auto& f : factors_) l = arith::lcm(l, f.exponent.get_den());
  return l;
}

UnitProduct UnitProduct::power(const Rat& n) const {
  if (n.get_den() != 1 && coefficient_ != 1) throw DomainError("fractional power of a scaled product");
  UnitProduct out;
  for (const auto& f : factors_) out.factors_.push_back({f.base, f.exponent * n});
  if (n.get_den() == 1) {
    Rat c = 1;
    long e = n.get_num().get_si();
    for (long i = 0; i < (e < 0 ? -e : e); ++i) c *= coefficient_;
    out.coefficient_ = e < 0 ? Rat(1 / c) : c;
  }
  return out;
}

UnitProduct UnitProduct::inverse() const { return power(-1); }

UnitProduct operator*(const UnitProduct& a, const UnitProduct& b) {
  UnitProduct out = a;
  for (const auto& f : b.factors_) out.factors_.push_back(f);
  out.coefficient_ *= b.coefficient_;
  return out;
}

SurdElement UnitProduct::expand() const {
  SurdElement r(coefficient_);
  for (const auto& f : factors_) {
    if (f.exponent.get_den() != 1) throw DomainError("expand: non-integral exponent");
    r = r * pow(f.base, f.exponent.get_num().get_si());
  }
  return r;
}

BigReal UnitProduct::value_bits(Bits prec) const {
  BigReal r(coefficient_, prec);
  for (const auto& f : factors_) {
    BigReal b = embed_bits(f.base, Embedding::identity({}), prec);
    if (f.exponent.get_den() == 1) {
      r *= pow(b, f.exponent.get_num().get_si());
    } else {
      if (b.sign() <= 0) throw DomainError("fractional power of a nonpositive base");
      r *= exp(log(b) * BigReal(f.exponent, prec));
    }
  }
  return r;
}

BigReal UnitProduct::value(int digits) const { return value_bits(digits_to_bits(digits)); }

bool UnitProduct::all_units() const {
  for (const auto& f : factors_) {
    Rat n = field_norm(f.base);
    if (n != 1 && n != -1) return false;
  }
  return true;
}

bool UnitProduct::same_value(const UnitProduct& o) const {
  Int L = arith::lcm(exponent_lcm(), o.exponent_lcm());
  if (power(Rat(L)).expand() != o.power(Rat(L)).expand()) return false;
  return value_bits(128).sign() == o.value_bits(128).sign();
}

namespace {

const char* kSup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string superscript(const Int& n) {
  std::string s = n < 0 ? "⁻" : "";
  for (char ch : Int(abs(n)).get_str()) s += kSup[ch - '0'];
  return s;
}

bool is_atom(const SurdElement& b) { return b.terms().size() == 1 && b.coeff(b.terms().begin()->first) == 1; }

}  // namespace

std::string UnitProduct::pretty() const {
  if (factors_.size() == 1 && factors_[0].exponent == 1 && coefficient_ == 1) return factors_[0].base.pretty();
  std::string s;
  if (coefficient_ != 1) s += coefficient_ == -1 ? "−" : coefficient_.get_str() + "·";
  bool first = true;
  for (const auto& f : factors_) {
    const Int& num = f.exponent.get_num();
    const Int& den = f.exponent.get_den();
    std::string body = f.base.pretty();
    std::string piece;
    if (den == 1) {
      piece = (is_atom(f.base) && num == 1 ? body : "(" + body + ")");
      if (num != 1) piece += superscript(num);
    } else {
      std::string radix = den == 2 ? "√" : superscript(den) + "√";
      piece = radix + "(" + body + ")";
      if (num != 1) piece = "(" + piece + ")" + superscript(num);
    }
    if (!first && den != 1) s += "·";
    s += piece;
    first = false;
  }
  if (s.empty()) s = "1";
  return s;
}

std::string UnitProduct::to_string() const {
  std::string s;
  if (coefficient_ != 1) s += coefficient_.get_str();
  for (const auto& f : factors_) {
    if (!s.empty()) s += " * ";
    s += "(" + f.base.to_string() + ")";
    if (f.exponent != 1) {
      if (f.exponent.get_den() == 1)
        s += "^" + f.exponent.get_str();
      else
        s += "^(" + f.exponent.get_str() + ")";
    }
  }
  return s.empty() ? "1" : s;
}

}  // namespace smod::surd
