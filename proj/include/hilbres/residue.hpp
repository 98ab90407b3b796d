#pragma once

// Iterated residues at infinity.
//
// Res_{z_1=oo} ... Res_{z_k=oo} h(z) dz / prod(omega_i) is evaluated on the
// contour |z_1| << ... << |z_k|: each denominator factor is expanded as a
// geometric series in its leading variable, variables are eliminated from
// the outermost inwards, and the coefficient of (z_1 ... z_k)^{-1} is
// multiplied by (-1)^k, so that Res dz/(z_1...z_k) = (-1)^k.

#include <map>
#include <stdexcept>
#include <vector>

#include "hilbres/kernels.hpp"
#include "hilbres/poly.hpp"

namespace hilbres {

class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedProblem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Truncated Laurent expansion in one residue variable.  Coefficients are
/// polynomials in the smaller residue variables and geometry symbols.
struct LaurentSeries {
  std::size_t variable = 0;
  int lower_cutoff = 0;
  std::map<int, MPoly> terms;

  MPoly to_poly(const ContextPtr& ctx) const;
};

/// 1/f^m expanded at infinity in `var`, keeping exponents >= lower_cutoff.
/// Highest exponent is -m; exponents step down by one.
LaurentSeries expand_inverse_at_infinity(const LinearForm& f, std::size_t var, int lower_cutoff);

struct ResidueProblem {
  ContextPtr context;
  Rational prefactor{1};
  MPoly numerator;
  std::vector<LinearForm> denominator;
  /// Laurent polynomials with non-positive residue exponents (Segre factors,
  /// monomial denominators z^{-n}).
  std::vector<MPoly> laurent_prefactors;

  explicit ResidueProblem(ContextPtr ctx)
      : context(ctx), numerator(MPoly(ctx, Rational(1))) {}
};

struct ResidueOptions {
  std::size_t term_budget = 10'000'000;
  Exec exec = Exec::serial;
};

struct ResidueStats {
  std::size_t peak_terms = 0;
  std::size_t multiplications = 0;
};

MPoly iterated_residue(const ResidueProblem& p, const ResidueOptions& opts = {},
                       ResidueStats* stats = nullptr);

/// Context with residue variables z1..zd and torus weights lambda1..lambdan
/// (degree one, no truncation).
ContextPtr grassmann_context(int n, int d);

/// Atiyah-Bott sum over the torus-fixed points of the Grassmannian, indexed
/// by ordered d-tuples sigma of distinct elements of {1..n}:
///   alpha(lambda_sigma) / prod_{m} prod_{i not in sigma} (lambda_i - lambda_sigma(m)),
/// brought to a common denominator and divided out exactly.  For symmetric
/// alpha this is d! times the sum over d-subsets.
MPoly grassmann_fixed_point_sum(const ContextPtr& ctx, int n, int d, const MPoly& alpha);

/// Residue side of the Grassmannian identity:
///   prod_{m != l} (z_m - z_l) alpha(z) dz / prod_l prod_i (lambda_i - z_l).
ResidueProblem grassmann_residue_problem(const ContextPtr& ctx, int n, int d, const MPoly& alpha);

/// Exact quotient of p by (x_hi - x_lo); throws std::domain_error when the
/// division leaves a remainder.
MPoly divide_by_difference(const MPoly& p, std::size_t hi, std::size_t lo);

}  // namespace hilbres
