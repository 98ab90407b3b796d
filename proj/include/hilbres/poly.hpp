#pragma once

// Exact sparse multivariate (Laurent) polynomials over Q.
//
// Every polynomial lives in a VariableContext which fixes the order of the
// residue variables (z_1 << ... << z_k on the contour) and the graded geometry
// symbols (Chern roots, Chern classes of X, torus weights).  When the context
// carries a geometry cap, terms whose geometry degree exceeds the cap are
// dropped as soon as they are produced.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hilbres {

using Rational = mpq_class;
using Integer = mpz_class;

/// `p/q`, or `p` when the denominator is one.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

class ContextMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class VarKind { residue, geometry };

struct Variable {
  std::string name;
  VarKind kind = VarKind::residue;
  int degree = 1;
  std::optional<int> weight;
};

struct ContextSpec {
  std::vector<std::string> residue_vars;
  /// Either empty or one weight per residue variable, weakly increasing.
  std::vector<int> weights;
  std::vector<std::pair<std::string, int>> geometry_symbols;
  /// Drop terms whose geometry degree exceeds this value.
  std::optional<int> geometry_cap;
};

class VariableContext;
using ContextPtr = std::shared_ptr<const VariableContext>;

class VariableContext {
 public:
  static ContextPtr make(ContextSpec spec);

  std::size_t size() const { return vars_.size(); }
  std::size_t num_residue() const { return num_residue_; }
  const Variable& operator[](std::size_t i) const { return vars_.at(i); }
  bool is_residue(std::size_t i) const { return i < num_residue_; }
  std::optional<int> geometry_cap() const { return cap_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws std::out_of_range for unknown names.
  std::size_t index(std::string_view name) const;

  bool same_as(const VariableContext& other) const;
  const ContextSpec& spec() const { return spec_; }

 private:
  VariableContext() = default;

  ContextSpec spec_;
  std::vector<Variable> vars_;
  std::size_t num_residue_ = 0;
  std::optional<int> cap_;
};

/// Sparse exponent vector.  Entries are sorted by variable index and never
/// carry a zero exponent.
class Monomial {
 public:
  struct Entry {
    std::uint32_t var;
    std::int32_t exp;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Monomial() = default;
  static Monomial of(std::size_t var, int exp);
  static Monomial from_entries(std::vector<Entry> entries);

  int exponent(std::size_t var) const;
  std::span<const Entry> entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }

  Monomial operator*(const Monomial& other) const;
  Monomial without(std::size_t var) const;

  std::size_t hash() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Entry> entries_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Negative when `a` precedes `b` in emission order: lexicographic on the
/// dense exponent vector, larger exponent first, variables in context order.
int compare_canonical(const Monomial& a, const Monomial& b);

struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_canonical(a, b) < 0;
  }
};

class MPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  explicit MPoly(ContextPtr ctx);
  MPoly(ContextPtr ctx, const Rational& constant);

  /// Combines duplicates, drops zeros and over-cap terms, sorts canonically.
  static MPoly from_terms(ContextPtr ctx, std::vector<Term> terms);
  static MPoly variable(ContextPtr ctx, std::size_t var, int exp = 1);
  static MPoly variable(ContextPtr ctx, std::string_view name, int exp = 1);
  static MPoly monomial(ContextPtr ctx, Monomial mono, const Rational& coeff);

  const ContextPtr& context() const { return ctx_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the unit monomial.
  Rational constant_term() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  MPoly& operator*=(const Rational& scalar);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
  friend MPoly operator*(const Rational& s, MPoly a) { return a *= s; }

  friend bool operator==(const MPoly& a, const MPoly& b);

  MPoly pow(unsigned n) const;

  std::optional<int> max_exponent(std::size_t var) const;
  std::optional<int> min_exponent(std::size_t var) const;
  bool involves(std::size_t var) const;
  bool has_residue_variables() const;

  /// Polynomial in the remaining variables multiplying var^exp.
  MPoly coefficient_of(std::size_t var, int exp) const;
  /// Terms whose exponent in `var` is at least `min_exp`.
  MPoly drop_below(std::size_t var, int min_exp) const;
  /// Part of geometry degree exactly `deg`.
  MPoly geometry_part(int deg) const;

  MPoly substitute(std::size_t var, const MPoly& value) const;
  /// Re-expresses the polynomial in another context by variable name.
  MPoly transfer(const ContextPtr& to) const;

  std::string to_string() const;

 private:
  void check_same(const MPoly& other) const;

  ContextPtr ctx_;
  std::vector<Term> terms_;
};

int geometry_degree(const VariableContext& ctx, const Monomial& m);
bool exceeds_cap(const VariableContext& ctx, const Monomial& m);

std::string to_string(const VariableContext& ctx, const Monomial& m);

/// Parses `3*L^2 + 2*L*c1 - (z1 - z2)^2/2`.  Division is allowed by rational
/// constants only; exponents may be negative on bare variables.
MPoly parse_poly(const ContextPtr& ctx, std::string_view text);

/// Affine linear form sum a_i z_i + c where c lives in the geometry symbols.
class LinearForm {
 public:
  explicit LinearForm(ContextPtr ctx);
  /// Throws std::invalid_argument if `p` is not affine-linear in the residue
  /// variables or its constant part mentions residue variables.
  static LinearForm from_poly(const MPoly& p, int multiplicity = 1);
  static LinearForm parse(const ContextPtr& ctx, std::string_view text, int multiplicity = 1);

  const ContextPtr& context() const { return constant_.context(); }
  /// Nonzero coefficients sorted by variable index.
  const std::vector<std::pair<std::size_t, Rational>>& z_coeffs() const { return z_coeffs_; }
  const MPoly& constant_part() const { return constant_; }
  int multiplicity() const { return multiplicity_; }
  void set_multiplicity(int m);

  Rational coefficient(std::size_t var) const;
  /// Largest-ordered residue variable with nonzero coefficient.
  std::optional<std::size_t> leading_variable() const;
  bool is_zero() const { return z_coeffs_.empty() && constant_.is_zero(); }

  MPoly to_poly() const;
  std::string to_string() const;

  friend bool operator==(const LinearForm& a, const LinearForm& b);

 private:
  std::vector<std::pair<std::size_t, Rational>> z_coeffs_;
  MPoly constant_;
  int multiplicity_ = 1;
};

}  // namespace hilbres
