#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "smod/bigreal.hpp"
#include "smod/types.hpp"

namespace smod::surd {

// Sign choice for each generating prime; the sign of sqrt(r) is the product of
// the signs of the primes dividing r.
struct Embedding {
  std::vector<Int> primes;
  std::vector<int> signs;

  static Embedding identity(std::vector<Int> primes);
  int sign_of(const Int& radicand) const;
};

// Rational combination of sqrt(r) over squarefree r >= 1 (r = 1 is the
// rational part).  Zero coefficients are never stored.
class SurdElement {
 public:
  SurdElement() = default;
  SurdElement(long v) : SurdElement(Rat(v)) {}  // NOLINT: implicit on purpose
  SurdElement(const Int& v) : SurdElement(Rat(v)) {}
  SurdElement(const Rat& v);

  // sqrt(n) for n >= 0, square part pulled into the coefficient.
  static SurdElement sqrt_of(const Int& n);
  // Parses the ASCII grammar produced by to_string().
  static SurdElement parse(const std::string& text);

  const std::map<Int, Rat>& terms() const { return terms_; }
  Rat coeff(const Int& radicand) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rat rational_part() const { return coeff(1); }
  std::set<Int> radicands() const;
  // Primes dividing some radicand, ascending.
  std::vector<Int> primes() const;

  SurdElement& operator+=(const SurdElement& o);
  SurdElement& operator-=(const SurdElement& o);
  SurdElement& operator*=(const SurdElement& o);

  friend SurdElement operator+(SurdElement a, const SurdElement& b) { return a += b; }
  friend SurdElement operator-(SurdElement a, const SurdElement& b) { return a -= b; }
  friend SurdElement operator*(const SurdElement& a, const SurdElement& b);
  friend SurdElement operator*(const SurdElement& a, const Rat& s);
  friend SurdElement operator/(const SurdElement& a, const Rat& s);
  friend SurdElement operator-(const SurdElement& a);
  friend bool operator==(const SurdElement& a, const SurdElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SurdElement& a, const SurdElement& b) { return !(a == b); }

  // Galois conjugate flipping sqrt(p) for the given prime.
  SurdElement flip(const Int& prime) const;
  // Conjugate selected by an embedding.
  SurdElement conjugate(const Embedding& e) const;

  // "3/2 + 1/2*sqrt(5)"
  std::string to_string() const;
  // "(3 + √5)/2", positive terms first; used for human-facing output.
  std::string pretty() const;

 private:
  void add_term(const Int& r, const Rat& c);
  std::map<Int, Rat> terms_;
};

SurdElement inverse(const SurdElement& x);
SurdElement pow(const SurdElement& x, long n);
Rat field_norm(const SurdElement& x);

BigReal embed(const SurdElement& x, const Embedding& e, int digits);
BigReal embed(const SurdElement& x, int digits);  // identity embedding
BigReal embed_bits(const SurdElement& x, const Embedding& e, Bits prec);

// All 2^r embeddings over the given primes; index i has sign -1 on primes[j]
// exactly when bit j of i is set.
std::vector<Embedding> all_embeddings(const std::vector<Int>& primes);

// y with y*y == x exactly and radicands of y inside `targets`; y is positive
// in the identity embedding.  Throws NotASquare.
SurdElement exact_sqrt(const SurdElement& x, const std::set<Int>& targets);
// Square root anywhere in Q(sqrt p : p in primes), trying each coset of the
// radicand group of x.  Throws NotASquare.
SurdElement sqrt_in_field(const SurdElement& x, const std::vector<Int>& primes);
// Non-throwing variant.
std::optional<SurdElement> try_sqrt_in_field(const SurdElement& x, const std::vector<Int>& primes);

// x = T + U sqrt(m) with T^2 - m U^2 = +-1.
struct QuadUnit {
  Rat T;
  Rat U;
  Int m;
  int norm;
};
std::optional<QuadUnit> as_unit_factor(const SurdElement& x);

// Radicand group generated (mod squares) by a set of squarefree radicands.
std::set<Int> radicand_group(const std::set<Int>& gens);
// Squarefree kernel of r*s for squarefree r, s.
Int radicand_product(const Int& r, const Int& s);

}  // namespace smod::surd
