#include "hilbres/residue.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

namespace hilbres {

MPoly LaurentSeries::to_poly(const ContextPtr& ctx) const {
  MPoly out(ctx);
  for (const auto& [e, c] : terms) out += c * MPoly::variable(ctx, variable, e);
  return out;
}

LaurentSeries expand_inverse_at_infinity(const LinearForm& f, std::size_t var, int lower_cutoff) {
  auto lead = f.leading_variable();
  if (!lead || *lead != var)
    throw std::invalid_argument("expansion variable is not the leading variable of " +
                                f.to_string());
  const auto& ctx = f.context();
  const Rational a = f.coefficient(var);
  const MPoly rest = f.to_poly() - MPoly::variable(ctx, var) * a;
  const int m = f.multiplicity();

  LaurentSeries s;
  s.variable = var;
  s.lower_cutoff = lower_cutoff;

  // 1/(a t + rest)^m = sum_j (-1)^j C(m+j-1, j) rest^j a^{-m-j} t^{-m-j}
  MPoly rest_pow(ctx, Rational(1));
  Rational a_pow_inv = 1;
  for (int i = 0; i < m; ++i) a_pow_inv /= a;
  for (int j = 0; -m - j >= lower_cutoff; ++j) {
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m + j - 1),
                 static_cast<unsigned long>(j));
    Rational coeff = Rational(binom) * a_pow_inv;
    if (j % 2 == 1) coeff = -coeff;
    MPoly c = rest_pow * coeff;
    if (!c.is_zero()) s.terms.emplace(-m - j, std::move(c));
    rest_pow *= rest;
    a_pow_inv /= a;
    if (rest_pow.is_zero()) break;
  }
  return s;
}

namespace {

void check_budget(const MPoly& p, const ResidueOptions& opts, ResidueStats* stats) {
  if (stats) stats->peak_terms = std::max(stats->peak_terms, p.size());
  if (p.size() > opts.term_budget)
    throw ResourceExhausted("iterated residue exceeded the term budget (" +
                            std::to_string(p.size()) + " > " + std::to_string(opts.term_budget) +
                            " terms)");
}

}  // namespace

MPoly iterated_residue(const ResidueProblem& p, const ResidueOptions& opts, ResidueStats* stats) {
  const ContextPtr& ctx = p.context;
  if (!ctx) throw MalformedProblem("problem has no context");
  const std::size_t k = ctx->num_residue();

  auto mul = [&](const MPoly& x, const MPoly& y) {
    if (stats) stats->multiplications++;
    MPoly r = multiply(x, y, opts.exec);
    check_budget(r, opts, stats);
    return r;
  };

  MPoly cur(ctx, p.prefactor);
  cur = mul(cur, p.numerator.transfer(ctx));
  for (const auto& lp : p.laurent_prefactors) {
    MPoly l = lp.transfer(ctx);
    for (std::size_t v = 0; v < k; ++v) {
      auto mx = l.max_exponent(v);
      if (mx && *mx > 0)
        throw MalformedProblem("laurent prefactor has a positive power of " + (*ctx)[v].name);
    }
    cur = mul(cur, l);
  }

  std::vector<LinearForm> factors;
  for (const auto& f : p.denominator) {
    if (!f.context()->same_as(*ctx)) throw ContextMismatch("denominator factor context differs");
    const int m = f.multiplicity();
    auto lead = f.leading_variable();
    if (!lead) {
      const MPoly& c = f.constant_part();
      if (c.is_zero() || !c.is_constant())
        throw MalformedProblem("denominator factor " + f.to_string() +
                               " has no residue variable and is not a nonzero constant");
      Rational inv = 1;
      for (int i = 0; i < m; ++i) inv /= c.constant_term();
      cur *= inv;
    } else if (f.z_coeffs().size() == 1 && f.constant_part().is_zero()) {
      // (a z)^m folds into a Laurent monomial.
      Rational inv = 1;
      for (int i = 0; i < m; ++i) inv /= f.z_coeffs()[0].second;
      cur = mul(cur, MPoly::monomial(ctx, Monomial::of(*lead, -m), inv));
    } else {
      factors.push_back(f);
    }
  }

  for (std::size_t step = 0; step < k && !cur.is_zero(); ++step) {
    const std::size_t t = k - 1 - step;
    std::vector<LinearForm> led;
    std::erase_if(factors, [&](const LinearForm& f) {
      if (f.leading_variable() == t) {
        led.push_back(f);
        return true;
      }
      return false;
    });
    int remaining = 0;
    for (const auto& f : led) remaining += f.multiplicity();

    for (const auto& f : led) {
      remaining -= f.multiplicity();
      // Every factor still to come lowers the t-exponent by at least its
      // multiplicity, so terms of this expansion below the cutoff can never
      // reach the target exponent -1.
      const int top = *cur.max_exponent(t);
      const int cutoff = -1 - top + remaining;
      if (cutoff > -f.multiplicity()) {
        cur = MPoly(ctx);
        break;
      }
      LaurentSeries s = expand_inverse_at_infinity(f, t, cutoff);
      assert(s.terms.empty() || s.terms.begin()->first >= cutoff);
      cur = mul(cur, s.to_poly(ctx));
      cur = cur.drop_below(t, remaining - 1);
      if (cur.is_zero()) break;
    }
    cur = cur.coefficient_of(t, -1);
  }
  if (!factors.empty() && !cur.is_zero())
    throw MalformedProblem("unprocessed denominator factors remain");

  if (cur.has_residue_variables())
    throw MalformedProblem("residue variables survived elimination");
  if (k % 2 == 1) cur = -cur;
  return cur;
}

// ---------------------------------------------------------------------------
// Grassmannian fixed-point oracle

ContextPtr grassmann_context(int n, int d) {
  if (d < 1 || n < d) throw std::invalid_argument("need 1 <= d <= n");
  ContextSpec spec;
  for (int i = 1; i <= d; ++i) spec.residue_vars.push_back("z" + std::to_string(i));
  for (int i = 1; i <= n; ++i) spec.geometry_symbols.push_back({"lambda" + std::to_string(i), 1});
  return VariableContext::make(std::move(spec));
}

MPoly divide_by_difference(const MPoly& p, std::size_t hi, std::size_t lo) {
  const auto& ctx = p.context();
  if (p.is_zero()) return p;
  if (*p.min_exponent(hi) < 0) throw std::domain_error("negative power in exact division");
  const int deg = *p.max_exponent(hi);
  std::vector<MPoly> c;
  c.reserve(deg + 1);
  for (int e = 0; e <= deg; ++e) c.push_back(p.coefficient_of(hi, e));
  const MPoly x_lo = MPoly::variable(ctx, lo);
  // Synthetic division by the root x_hi = x_lo.
  std::vector<MPoly> q(deg, MPoly(ctx));
  MPoly carry(ctx);
  for (int e = deg; e >= 1; --e) {
    carry = c[e] + x_lo * carry;
    q[e - 1] = carry;
  }
  MPoly remainder = c[0] + x_lo * carry;
  if (!remainder.is_zero())
    throw std::domain_error("polynomial is not divisible by (" + (*ctx)[hi].name + " - " +
                            (*ctx)[lo].name + ")");
  MPoly out(ctx);
  for (int e = 0; e < deg; ++e) out += q[e] * MPoly::variable(ctx, hi, e);
  return out;
}

MPoly grassmann_fixed_point_sum(const ContextPtr& ctx, int n, int d, const MPoly& alpha) {
  if (d > n) throw std::invalid_argument("d > n");
  if (static_cast<int>(ctx->num_residue()) < d ||
      static_cast<int>(ctx->size() - ctx->num_residue()) < n)
    throw std::invalid_argument("context too small for the Grassmannian sum");
  const std::size_t base = ctx->num_residue();
  auto lambda = [&](int i) { return MPoly::variable(ctx, base + i); };
  auto diff = [&](int hi, int lo) { return lambda(hi) - lambda(lo); };

  // Fixed points are ordered d-tuples of distinct weights; summing the
  // symmetrisation of alpha over unordered subsets covers every ordering.
  MPoly alpha_c(ctx);
  {
    MPoly a = alpha.transfer(ctx);
    std::vector<std::uint32_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0U);
    do {
      std::vector<MPoly::Term> ts;
      for (const auto& t : a.terms()) {
        std::vector<Monomial::Entry> es;
        for (const auto& e : t.mono.entries()) {
          if (e.var >= static_cast<std::uint32_t>(d))
            throw std::invalid_argument("alpha must be a polynomial in z1..zd");
          es.push_back({perm[e.var], e.exp});
        }
        ts.push_back({Monomial::from_entries(std::move(es)), t.coeff});
      }
      alpha_c += MPoly::from_terms(ctx, std::move(ts));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  MPoly numerator(ctx);
  std::vector<int> sel(n, 0);
  std::fill(sel.end() - d, sel.end(), 1);
  do {
    std::vector<int> in, out;
    for (int i = 0; i < n; ++i) (sel[i] ? in : out).push_back(i);

    // alpha(lambda_sigma)
    std::vector<MPoly::Term> ts;
    for (const auto& t : alpha_c.terms()) {
      std::vector<Monomial::Entry> es;
      for (const auto& e : t.mono.entries())
        es.push_back({static_cast<std::uint32_t>(base + in[e.var]), e.exp});
      ts.push_back({Monomial::from_entries(std::move(es)), t.coeff});
    }
    MPoly term = MPoly::from_terms(ctx, std::move(ts));

    int crossings = 0;
    for (int m : in)
      for (int i : out)
        if (i < m) ++crossings;
    for (const auto* group : {&in, &out})
      for (std::size_t a = 0; a < group->size(); ++a)
        for (std::size_t b = a + 1; b < group->size(); ++b)
          term *= diff((*group)[b], (*group)[a]);
    if (crossings % 2 == 1) term = -term;
    numerator += term;
  } while (std::next_permutation(sel.begin(), sel.end()));

  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      numerator = divide_by_difference(numerator, base + j, base + i);
  return numerator;
}

ResidueProblem grassmann_residue_problem(const ContextPtr& ctx, int n, int d, const MPoly& alpha) {
  if (d > n) throw std::invalid_argument("d > n");
  const std::size_t base = ctx->num_residue();
  ResidueProblem p(ctx);
  MPoly num = alpha.transfer(ctx);
  for (int m = 0; m < d; ++m)
    for (int l = 0; l < d; ++l)
      if (m != l) num *= MPoly::variable(ctx, m) - MPoly::variable(ctx, l);
  p.numerator = num;
  for (int l = 0; l < d; ++l)
    for (int i = 0; i < n; ++i)
      p.denominator.push_back(LinearForm::from_poly(MPoly::variable(ctx, base + i) -
                                                    MPoly::variable(ctx, l)));
  return p;
}

}  // namespace hilbres
