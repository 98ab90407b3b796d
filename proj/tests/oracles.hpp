#pragma once

// Brute-force reference computations for tests.  Deliberately naive and
// independent of the library algorithms they check.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "hilbres/poly.hpp"

namespace oracle {

using hilbres::ContextPtr;
using hilbres::MPoly;
using hilbres::Rational;

using Blocks = std::vector<std::vector<int>>;

// mpq_class(a, b) does not reduce; arithmetic assumes reduced operands.
inline Rational frac(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

// All set partitions of {1..s} by inserting s into every block of every
// partition of {1..s-1}, or into a new block.  Canonicalised and sorted.
inline std::vector<Blocks> set_partitions(int s) {
  std::vector<Blocks> cur{{}};
  for (int x = 1; x <= s; ++x) {
    std::vector<Blocks> next;
    for (const auto& p : cur) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        Blocks q = p;
        q[b].push_back(x);
        next.push_back(q);
      }
      Blocks q = p;
      q.push_back({x});
      next.push_back(q);
    }
    cur = std::move(next);
  }
  for (auto& p : cur) std::sort(p.begin(), p.end());
  std::sort(cur.begin(), cur.end());
  return cur;
}

// P_r as sum over set partitions of prod a_{|block|}.
inline MPoly bell_by_enumeration(int r, const std::vector<MPoly>& a, const ContextPtr& ctx) {
  MPoly total(ctx);
  for (const auto& p : set_partitions(r)) {
    MPoly term(ctx, Rational(1));
    for (const auto& b : p) term *= a.at(b.size() - 1);
    total += term;
  }
  return total;
}

// e_m as a sum over m-subsets.
inline MPoly esym_by_subsets(int m, const std::vector<MPoly>& roots, const ContextPtr& ctx) {
  const int n = static_cast<int>(roots.size());
  MPoly total(ctx);
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    MPoly t(ctx, Rational(1));
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1U) t *= roots[i];
    total += t;
  }
  return total;
}

// Ordered-tuple Atiyah-Bott sum at numeric torus weights:
// sum over injective sigma: [d] -> [n] of
// alpha(lambda_sigma) / prod_m prod_{i not in im sigma} (lambda_i - lambda_sigma(m)).
// `alpha` is given as a list of (coefficient, exponent vector) terms.
using DenseTerm = std::pair<Rational, std::vector<int>>;

inline Rational grassmann_numeric(int n, int d, const std::vector<DenseTerm>& alpha,
                                  const std::vector<Rational>& lambda) {
  Rational total = 0;
  std::vector<int> sigma(d);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == d) {
      Rational num = 0;
      for (const auto& [c, e] : alpha) {
        Rational t = c;
        for (int m = 0; m < d; ++m)
          for (int k = 0; k < e[m]; ++k) t *= lambda[sigma[m]];
        num += t;
      }
      Rational den = 1;
      for (int m = 0; m < d; ++m)
        for (int i = 0; i < n; ++i)
          if (!used[i]) den *= lambda[i] - lambda[sigma[m]];
      total += num / den;
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = 1;
      sigma[pos] = i;
      self(self, pos + 1);
      used[i] = 0;
    }
  };
  rec(rec, 0);
  return total;
}

// Substitutes numeric values for every geometry symbol of p.
inline Rational evaluate_at(const MPoly& p, const std::map<std::size_t, Rational>& values) {
  Rational total = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (const auto& e : t.mono.entries())
      for (int k = 0; k < e.exp; ++k) v *= values.at(e.var);
    total += v;
  }
  return total;
}

// Standard monomials of an Artinian monomial ideal, found by growing the
// staircase one degree at a time from 1.
inline int standard_monomial_count(int nvars, const std::vector<std::vector<int>>& gens) {
  auto in_ideal = [&](const std::vector<int>& m) {
    for (const auto& g : gens) {
      bool div = true;
      for (int i = 0; i < nvars; ++i) div = div && g[i] <= m[i];
      if (div) return true;
    }
    return false;
  };
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> layer{std::vector<int>(nvars, 0)};
  if (in_ideal(layer[0])) return 0;
  seen.insert(layer[0]);
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& m : layer)
      for (int i = 0; i < nvars; ++i) {
        auto c = m;
        ++c[i];
        if (!in_ideal(c) && seen.insert(c).second) next.push_back(c);
      }
    if (seen.size() > 100000) return -1;
    layer = std::move(next);
  }
  return static_cast<int>(seen.size());
}

inline MPoly random_poly(std::mt19937& rng, const ContextPtr& ctx, int terms, int max_exp,
                         bool allow_negative = false) {
  std::uniform_int_distribution<int> coeff(-5, 5), den(1, 3);
  std::uniform_int_distribution<int> ex(allow_negative ? -max_exp : 0, max_exp);
  MPoly p(ctx);
  for (int t = 0; t < terms; ++t) {
    MPoly m(ctx, frac(coeff(rng), den(rng)));
    for (std::size_t v = 0; v < ctx->size(); ++v) {
      int e = ex(rng);
      if (!ctx->is_residue(v) && e < 0) e = -e;
      if (e != 0) m *= MPoly::variable(ctx, v, e);
    }
    p += m;
  }
  return p;
}

}  // namespace oracle
