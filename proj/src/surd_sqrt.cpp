// Square roots in multiquadratic fields, recovered from real embeddings.
//
// For y = sum_j c_j sqrt(r_j) with r_j in a fixed radicand set T, each real
// embedding e gives y_e = sum_j chi_j(e) c_j sqrt(r_j) = +-sqrt(x_e).  Fixing
// the signs on |T| well-chosen embeddings determines the c_j; the remaining
// embeddings and a trace integrality bound act as screens, and exact squaring
// is the final arbiter.

#include <algorithm>
#include <cmath>

#include "smod/arith.hpp"
#include "smod/errors.hpp"
#include "smod/surd.hpp"

namespace smod::surd {

namespace {

struct Layout {
  std::vector<Int> primes;   // generators of the ambient field
  std::vector<Int> targets;  // radicands of the unknown root
  std::vector<unsigned> tmask;
  unsigned mask(const Int& r) const {
    unsigned m = 0;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mpz_divisible_p(r.get_mpz_t(), primes[i].get_mpz_t())) m |= 1u << i;
    return m;
  }
  static int chi(unsigned rad_mask, unsigned emb) { return __builtin_parity(rad_mask & emb) ? -1 : 1; }
};

enum class Outcome { kFound, kNoCandidate, kCandidateFailed };

Outcome attempt(const SurdElement& x, const Layout& L, const std::vector<unsigned>& rows, Bits prec,
                SurdElement& out) {
  const std::size_t k = L.targets.size();
  const unsigned N = 1u << L.primes.size();

  std::vector<BigReal> xe;
  xe.reserve(N);
  for (unsigned e = 0; e < N; ++e) {
    BigReal v(prec);
    for (const auto& [r, c] : x.terms()) {
      BigReal t(c, prec);
      if (r != 1) t *= sqrt(BigReal(r, prec));
      if (Layout::chi(L.mask(r), e) < 0)
        v -= t;
      else
        v += t;
    }
    xe.push_back(std::move(v));
  }
  std::vector<BigReal> s;
  s.reserve(N);
  BigReal smax(prec);
  for (auto& v : xe) {
    if (v.sign() < 0) v = BigReal(prec);
    s.push_back(sqrt(v));
    smax = max(smax, s.back());
  }
  std::vector<BigReal> root_r;
  for (const Int& r : L.targets) root_r.push_back(sqrt(BigReal(r, prec)));

  // Inverse of M0[i][j] = chi_j(rows[i]) sqrt(r_j) by Gauss-Jordan.
  std::vector<std::vector<BigReal>> A(k, std::vector<BigReal>(2 * k, BigReal(prec)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      A[i][j] = root_r[j];
      if (Layout::chi(L.tmask[j], rows[i]) < 0) A[i][j] = -A[i][j];
    }
    A[i][k + i] = BigReal(1L, prec);
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < k; ++i)
      if (abs(A[i][col]) > abs(A[piv][col])) piv = i;
    std::swap(A[piv], A[col]);
    BigReal d = A[col][col];
    for (auto& v : A[col]) v /= d;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == col || A[i][col].is_zero()) continue;
      BigReal f = A[i][col];
      for (std::size_t j = 0; j < 2 * k; ++j) A[i][j] -= f * A[col][j];
    }
  }

  // If D x is integral then so is D y, and c_r = Tr(D y sqrt(r)) / (D N r),
  // so each scaled coefficient t_j = c_j D N r_j must be an integer.
  Int D = 1;
  for (const auto& kv : x.terms()) D = arith::lcm(D, Int(kv.second.get_den()));
  std::vector<Int> scale(k);
  for (std::size_t j = 0; j < k; ++j) scale[j] = D * N * L.targets[j];

  // Cheap double pass over the sign patterns; it only rejects a pattern when
  // rounding error is provably too small to hide an integer.
  std::vector<double> inv_d(k * k), sd(N), rootd(k), scale_d(k);
  for (std::size_t j = 0; j < k; ++j) {
    rootd[j] = root_r[j].to_double();
    scale_d[j] = scale[j].get_d();
    for (std::size_t i = 0; i < k; ++i) inv_d[j * k + i] = A[j][k + i].to_double();
  }
  for (unsigned e = 0; e < N; ++e) sd[e] = s[e].to_double();
  const double smax_d = smax.to_double();
  const double coarse_tol = smax_d * 1e-7;
  const bool use_coarse = std::isfinite(smax_d) && smax_d < 1e250;
  std::vector<double> rhs_d(k), c_d(k);
  auto coarse_ok = [&](std::size_t pat) {
    for (std::size_t i = 0; i < k; ++i) {
      bool neg = i > 0 && (pat >> (i - 1) & 1);
      rhs_d[i] = neg ? -sd[rows[i]] : sd[rows[i]];
    }
    for (std::size_t j = 0; j < k; ++j) {
      double acc = 0, mag = 0;
      for (std::size_t i = 0; i < k; ++i) {
        acc += inv_d[j * k + i] * rhs_d[i];
        mag += std::fabs(inv_d[j * k + i] * rhs_d[i]);
      }
      double t = acc * scale_d[j], err = 1e-13 * mag * scale_d[j] * k;
      if (err < 1e-2 && std::fabs(t - std::nearbyint(t)) > 0.25) return false;
      c_d[j] = acc * rootd[j];
    }
    for (unsigned e = 0; e < N; ++e) {
      double y = 0;
      for (std::size_t j = 0; j < k; ++j) y += Layout::chi(L.tmask[j], e) < 0 ? -c_d[j] : c_d[j];
      if (std::fabs(std::fabs(y) - sd[e]) > coarse_tol) return false;
    }
    return true;
  };

  const BigReal screen_tol = smax * pow2(-static_cast<long>(prec) / 2, prec) + pow2(-static_cast<long>(prec) / 2, prec);
  bool any_candidate = false;
  const std::size_t patterns = std::size_t(1) << (k - 1);
  std::vector<BigReal> rhs(k, BigReal(prec)), c(k, BigReal(prec));
  for (std::size_t pat = 0; pat < patterns; ++pat) {
    if (use_coarse && !coarse_ok(pat)) continue;
    for (std::size_t i = 0; i < k; ++i) {
      bool neg = i > 0 && (pat >> (i - 1) & 1);
      rhs[i] = neg ? -s[rows[i]] : s[rows[i]];
    }
    for (std::size_t j = 0; j < k; ++j) {
      BigReal acc(prec);
      for (std::size_t i = 0; i < k; ++i) acc += A[j][k + i] * rhs[i];
      c[j] = std::move(acc);
    }
    bool ok = true;
    for (unsigned e = 0; e < N && ok; ++e) {
      BigReal y(prec);
      for (std::size_t j = 0; j < k; ++j) {
        BigReal t = c[j] * root_r[j];
        if (Layout::chi(L.tmask[j], e) < 0)
          y -= t;
        else
          y += t;
      }
      if (abs(abs(y) - s[e]) > screen_tol) ok = false;
    }
    if (!ok) continue;
    any_candidate = true;
    SurdElement y;
    for (std::size_t j = 0; j < k && ok; ++j) {
      BigReal t = c[j] * BigReal(scale[j], prec);
      Int ti = t.round_to_int();
      if (abs(t - BigReal(ti, prec)) > BigReal(1L, prec) / 8L)
        ok = false;
      else if (ti != 0)
        y += SurdElement::sqrt_of(L.targets[j]) * make_rat(ti, scale[j]);
    }
    if (!ok) continue;
    if (y * y == x) {
      if (embed_bits(y, Embedding::identity({}), 64).sign() < 0) y = -y;
      out = y;
      return Outcome::kFound;
    }
  }
  return any_candidate ? Outcome::kCandidateFailed : Outcome::kNoCandidate;
}

}  // namespace

SurdElement exact_sqrt(const SurdElement& x, const std::set<Int>& targets) {
  if (x.is_zero()) return x;
  if (targets.empty()) throw NotASquare("exact_sqrt: empty target set");
  for (const Int& r : targets)
    if (r < 1 || !arith::is_squarefree(r)) throw DomainError("exact_sqrt: targets must be squarefree radicands");

  std::set<Int> ps;
  for (const Int& p : x.primes()) ps.insert(p);
  for (const Int& r : targets)
    if (r > 1)
      for (const auto& f : arith::factor(r)) ps.insert(f.first);
  Layout L;
  L.primes.assign(ps.begin(), ps.end());
  if (L.primes.size() > 20) throw DomainError("exact_sqrt: too many generators");
  L.targets.assign(targets.begin(), targets.end());
  for (const Int& r : L.targets) L.tmask.push_back(L.mask(r));
  const unsigned N = 1u << L.primes.size();
  const std::size_t k = L.targets.size();
  if (k > 16) throw DomainError("exact_sqrt: too many target radicands");

  // Cheap precheck and dynamic range estimate.
  double lo = 1e300, hi = -1e300;
  for (const auto& e : all_embeddings(L.primes)) {
    BigReal v = embed_bits(x, e, 256);
    double scale = 0;
    for (const auto& kv : x.terms()) scale = std::max(scale, std::fabs(kv.second.get_d()) * std::sqrt(kv.first.get_d()));
    if (v.sign() < 0 && std::fabs(v.to_double()) > scale * 1e-60) throw NotASquare("exact_sqrt: not totally positive");
    double l = log10_abs(v);
    lo = std::min(lo, l);
    hi = std::max(hi, l);
  }
  if (lo < -1e200) throw NotASquare("exact_sqrt: vanishing embedding");

  // Rows: greedy independent characters over the target radicands.
  std::vector<unsigned> rows;
  {
    std::vector<std::vector<double>> basis;
    for (unsigned e = 0; e < N && rows.size() < k; ++e) {
      std::vector<double> v(k);
      for (std::size_t j = 0; j < k; ++j) v[j] = Layout::chi(L.tmask[j], e);
      for (const auto& b : basis) {
        std::size_t p = 0;
        while (std::fabs(b[p]) < 1e-9) ++p;
        double f = v[p] / b[p];
        for (std::size_t j = 0; j < k; ++j) v[j] -= f * b[j];
      }
      bool indep = false;
      for (double d : v) indep |= std::fabs(d) > 1e-9;
      if (indep) {
        basis.push_back(v);
        rows.push_back(e);
      }
    }
    if (rows.size() < k) throw DomainError("exact_sqrt: target radicands are not independent characters");
  }

  double range_bits = (hi - lo) * 3.33 / 2 + hi * 3.33 / 2;
  Bits prec = static_cast<Bits>(std::max(0.0, range_bits)) + 256;
  for (int attempt_no = 0; attempt_no < 5; ++attempt_no, prec *= 2) {
    SurdElement y;
    Outcome o = attempt(x, L, rows, prec, y);
    if (o == Outcome::kFound) return y;
    if (o == Outcome::kNoCandidate) break;
  }
  throw NotASquare("exact_sqrt: no square root with radicands in the target set");
}

std::optional<SurdElement> try_sqrt_in_field(const SurdElement& x, const std::vector<Int>& primes) {
  if (x.is_zero()) return x;
  std::set<Int> ps(primes.begin(), primes.end());
  for (const Int& p : x.primes()) ps.insert(p);
  std::set<Int> G = radicand_group(ps);
  std::set<Int> H = radicand_group(x.radicands());
  std::set<Int> seen;
  for (const Int& r0 : G) {
    if (seen.count(r0)) continue;
    std::set<Int> coset;
    for (const Int& h : H) coset.insert(radicand_product(r0, h));
    seen.insert(coset.begin(), coset.end());
    try {
      return exact_sqrt(x, coset);
    } catch (const NotASquare&) {
      // next coset, or a genuine non-square
      if (embed_bits(x, Embedding::identity({}), 64).sign() < 0) return std::nullopt;
    }
  }
  return std::nullopt;
}

SurdElement sqrt_in_field(const SurdElement& x, const std::vector<Int>& primes) {
  auto y = try_sqrt_in_field(x, primes);
  if (!y) throw NotASquare("no square root of " + x.to_string() + " in the given field");
  return *y;
}

}  // namespace smod::surd
