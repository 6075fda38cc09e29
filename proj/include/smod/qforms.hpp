#pragma once

#include <string>
#include <utility>
#include <vector>

#include "smod/arith.hpp"
#include "smod/types.hpp"

namespace smod::qforms {

// aX^2 + bXY + cY^2
struct QuadForm {
  Int a, b, c;

  Int discriminant() const { return b * b - 4 * a * c; }
  bool positive_definite() const { return discriminant() < 0 && a > 0; }
  bool diagonal() const { return b == 0; }
  bool is_reduced() const;
  Int eval(const Int& x, const Int& y) const { return a * x * x + b * x * y + c * y * y; }

  friend bool operator==(const QuadForm& p, const QuadForm& q) {
    return p.a == q.a && p.b == q.b && p.c == q.c;
  }
};

// Substitution X -> rX + tY, Y -> sX + uY.
struct GLMatrix {
  Int r, s, t, u;

  Int det() const { return r * u - s * t; }
  static GLMatrix identity() { return {1, 0, 0, 1}; }
  friend bool operator==(const GLMatrix& x, const GLMatrix& y) {
    return x.r == y.r && x.s == y.s && x.t == y.t && x.u == y.u;
  }
};

GLMatrix operator*(const GLMatrix& x, const GLMatrix& y);
GLMatrix inverse(const GLMatrix& g);

struct FormClassSet {
  Int discriminant;
  std::vector<QuadForm> forms;
};

QuadForm apply(const GLMatrix& g, const QuadForm& f);
// Reduced representative G and a proper witness g with apply(g, f) == G.
std::pair<QuadForm, GLMatrix> reduce(const QuadForm& f);
FormClassSet reduced_forms(const Int& disc);
Int class_number(const Int& disc);
// Proper classes of primitive forms of a positive nonsquare discriminant,
// counted as cycles of reduced indefinite forms.
Int narrow_class_number(const Int& disc);
// Weighted class number K(delta): h * 2/w for negative delta, for positive
// delta recovered from L(1, chi) and the even Pell unit.
Rat weighted_class_number(const Int& delta);

Int representation_count(const QuadForm& f, const Int& n);
// Representations of n by all forms of determinant m, via 2 * sum_{d|n} (-m/d).
Int total_representations(const Int& m, const Int& n);

// Pairs (A, 0, 2C) and (2A, 0, C) as reduced forms; the first member of each
// pair carries the smaller odd coefficient A.  Ordered by A.
std::vector<std::pair<QuadForm, QuadForm>> homologue_pairs(const FormClassSet& set);

// (delta / (A + C)) for a diagonal form.
int chi(const Int& delta, const QuadForm& f);

// "X² + 210Y²" style rendering for the tables.
std::string render(const QuadForm& f);

}  // namespace smod::qforms
