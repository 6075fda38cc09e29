#include "smod/surd.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "smod/arith.hpp"
#include "smod/errors.hpp"

namespace smod::surd {

Embedding Embedding::identity(std::vector<Int> primes) {
  Embedding e;
  e.signs.assign(primes.size(), 1);
  e.primes = std::move(primes);
  return e;
}

int Embedding::sign_of(const Int& radicand) const {
  int s = 1;
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (signs[i] < 0 && mpz_divisible_p(radicand.get_mpz_t(), primes[i].get_mpz_t())) s = -s;
  return s;
}

Int radicand_product(const Int& r, const Int& s) {
  Int g = arith::gcd(r, s);
  return (r / g) * (s / g);
}

std::set<Int> radicand_group(const std::set<Int>& gens) {
  std::set<Int> g{1};
  for (const Int& r : gens) {
    if (g.count(r)) continue;
    std::set<Int> next = g;
    for (const Int& x : g) next.insert(radicand_product(x, r));
    g = std::move(next);
  }
  return g;
}

SurdElement::SurdElement(const Rat& v) {
  Rat c = v;
  c.canonicalize();
  if (c != 0) terms_[Int(1)] = c;
}

void SurdElement::add_term(const Int& r, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(r);
  if (it == terms_.end()) {
    terms_.emplace(r, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SurdElement SurdElement::sqrt_of(const Int& n) {
  if (n < 0) throw DomainError("sqrt_of: negative radicand");
  SurdElement out;
  if (n == 0) return out;
  auto sp = arith::squarefree_split(n);
  out.terms_[sp.kernel] = Rat(sp.square_root);
  return out;
}

Rat SurdElement::coeff(const Int& radicand) const {
  auto it = terms_.find(radicand);
  return it == terms_.end() ? Rat(0) : it->second;
}

bool SurdElement::is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1); }

std::set<Int> SurdElement::radicands() const {
  std::set<Int> s;
  for (const auto& kv : terms_) s.insert(kv.first);
  return s;
}

std::vector<Int> SurdElement::primes() const {
  std::set<Int> ps;
  for (const auto& kv : terms_)
    if (kv.first > 1)
      for (const auto& f : arith::factor(kv.first)) ps.insert(f.first);
  return {ps.begin(), ps.end()};
}

SurdElement& SurdElement::operator+=(const SurdElement& o) {
  for (const auto& [r, c] : o.terms_) add_term(r, c);
  return *this;
}
SurdElement& SurdElement::operator-=(const SurdElement& o) {
  for (const auto& [r, c] : o.terms_) add_term(r, -c);
  return *this;
}
SurdElement& SurdElement::operator*=(const SurdElement& o) {
  *this = *this * o;
  return *this;
}

SurdElement operator*(const SurdElement& a, const SurdElement& b) {
  SurdElement out;
  for (const auto& [r, c] : a.terms_)
    for (const auto& [s, d] : b.terms_) {
      Int g = arith::gcd(r, s);
      out.add_term((r / g) * (s / g), c * d * g);
    }
  return out;
}
SurdElement operator*(const SurdElement& a, const Rat& s) {
  SurdElement out;
  if (s == 0) return out;
  Rat t = s;
  t.canonicalize();
  for (const auto& [r, c] : a.terms_) out.terms_.emplace(r, c * t);
  return out;
}
SurdElement operator/(const SurdElement& a, const Rat& s) {
  if (s == 0) throw DomainError("division by zero");
  return a * Rat(1 / s);
}
SurdElement operator-(const SurdElement& a) { return a * Rat(-1); }

SurdElement SurdElement::flip(const Int& prime) const {
  SurdElement out;
  for (const auto& [r, c] : terms_)
    out.terms_.emplace(r, mpz_divisible_p(r.get_mpz_t(), prime.get_mpz_t()) ? Rat(-c) : c);
  return out;
}

SurdElement SurdElement::conjugate(const Embedding& e) const {
  SurdElement out;
  for (const auto& [r, c] : terms_) out.terms_.emplace(r, e.sign_of(r) < 0 ? Rat(-c) : c);
  return out;
}

namespace {

std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace

std::string SurdElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [r, c] : terms_) {
    Rat mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (r == 1) {
      s += rat_str(mag);
    } else {
      if (mag != 1) s += rat_str(mag) + "*";
      s += "sqrt(" + r.get_str() + ")";
    }
  }
  return s;
}

std::string SurdElement::pretty() const {
  if (terms_.empty()) return "0";
  // Common denominator pulled out, e.g. (3 + √5)/2.
  Int den = 1;
  for (const auto& kv : terms_) den = arith::lcm(den, kv.second.get_den());
  std::vector<std::pair<Int, Int>> pos, neg;
  for (const auto& [r, c] : terms_) {
    Int n = c.get_num() * (den / c.get_den());
    (n > 0 ? pos : neg).emplace_back(r, abs(n));
  }
  std::string s;
  bool first = true;
  auto emit = [&](const std::pair<Int, Int>& t, bool negative) {
    if (first)
      s += negative ? "−" : "";
    else
      s += negative ? " − " : " + ";
    first = false;
    if (t.first == 1)
      s += t.second.get_str();
    else
      s += (t.second == 1 ? std::string() : t.second.get_str()) + "√" + t.first.get_str();
  };
  for (const auto& t : pos) emit(t, false);
  for (const auto& t : neg) emit(t, true);
  if (den != 1) {
    if (terms_.size() > 1) s = "(" + s + ")";
    s += "/" + den.get_str();
  }
  return s;
}

namespace {

struct Parser {
  const std::string& t;
  std::size_t i = 0;

  void ws() {
    while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
  }
  bool eat(const char* lit) {
    ws();
    std::size_t n = std::char_traits<char>::length(lit);
    if (t.compare(i, n, lit) == 0) {
      i += n;
      return true;
    }
    return false;
  }
  bool at_digit() {
    ws();
    return i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]));
  }
  Int integer() {
    ws();
    std::size_t j = i;
    while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
    if (j == i) fail("expected digits");
    Int v(t.substr(i, j - i));
    i = j;
    return v;
  }
  Rat rational() {
    Int n = integer();
    if (eat("/")) return make_rat(n, integer());
    return Rat(n);
  }
  SurdElement surd_atom() {
    if (!eat("sqrt")) fail("expected sqrt");
    if (!eat("(")) fail("expected (");
    Int r = integer();
    if (!eat(")")) fail("expected )");
    return SurdElement::sqrt_of(r);
  }
  SurdElement term() {
    if (at_digit()) {
      Rat c = rational();
      if (eat("*")) return surd_atom() * c;
      return SurdElement(c);
    }
    return surd_atom();
  }
  [[noreturn]] void fail(const char* why) {
    throw DomainError(std::string("surd parse error at ") + std::to_string(i) + ": " + why + " in '" + t + "'");
  }
};

}  // namespace

SurdElement SurdElement::parse(const std::string& text) {
  Parser p{text};
  SurdElement out;
  bool negative = p.eat("-");
  out += negative ? -p.term() : p.term();
  for (;;) {
    if (p.eat("+"))
      out += p.term();
    else if (p.eat("-"))
      out -= p.term();
    else
      break;
  }
  p.ws();
  if (p.i != text.size()) p.fail("trailing input");
  return out;
}

SurdElement pow(const SurdElement& x, long n) {
  if (n < 0) return pow(inverse(x), -n);
  SurdElement r(1L), b = x;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

SurdElement inverse(const SurdElement& x) {
  if (x.is_zero()) throw DomainError("inverse of zero");
  if (x.is_rational()) return SurdElement(Rat(1 / x.rational_part()));
  // x^{-1} = flip(x) * (x flip(x))^{-1}, and x flip(x) has one prime fewer.
  Int p = x.primes().back();
  SurdElement f = x.flip(p);
  return f * inverse(x * f);
}

Rat field_norm(const SurdElement& x) {
  // Product over all embeddings of the field generated by x's own primes,
  // folded one prime at a time; each fold squares the exponent of lower levels.
  std::vector<Int> ps = x.primes();
  SurdElement y = x;
  for (auto it = ps.rbegin(); it != ps.rend(); ++it) y = y * y.flip(*it);
  if (!y.is_rational()) throw PrecisionError("field_norm: internal error");
  return y.rational_part();
}

std::vector<Embedding> all_embeddings(const std::vector<Int>& primes) {
  std::vector<Embedding> out;
  std::size_t n = std::size_t(1) << primes.size();
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Embedding e = Embedding::identity(primes);
    for (std::size_t j = 0; j < primes.size(); ++j)
      if (i >> j & 1) e.signs[j] = -1;
    out.push_back(std::move(e));
  }
  return out;
}

BigReal embed_bits(const SurdElement& x, const Embedding& e, Bits prec) {
  BigReal s(prec);
  for (const auto& [r, c] : x.terms()) {
    BigReal t(c, prec);
    if (r != 1) t *= sqrt(BigReal(r, prec));
    if (e.sign_of(r) < 0)
      s -= t;
    else
      s += t;
  }
  return s;
}

BigReal embed(const SurdElement& x, const Embedding& e, int digits) { return embed_bits(x, e, digits_to_bits(digits)); }

BigReal embed(const SurdElement& x, int digits) { return embed(x, Embedding::identity({}), digits); }

std::optional<QuadUnit> as_unit_factor(const SurdElement& x) {
  std::set<Int> rs = x.radicands();
  rs.erase(1);
  if (rs.size() > 1) return std::nullopt;
  QuadUnit u{x.rational_part(), 0, 1, 0};
  if (rs.size() == 1) {
    u.m = *rs.begin();
    u.U = x.coeff(u.m);
  }
  Rat n = u.T * u.T - u.U * u.U * Rat(u.m);
  if (n != 1 && n != -1) return std::nullopt;
  u.norm = n == 1 ? 1 : -1;
  return u;
}

}  // namespace smod::surd
