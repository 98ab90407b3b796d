#pragma once

// Chern root calculus over a base X: twisted roots of F(z), elementary
// symmetric functions, Segre factors s_X(1/z) and top-degree selection.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hilbres/poly.hpp"

namespace hilbres {

struct BundleModel {
  /// Chern roots theta_1..theta_r, geometry symbols of degree one.
  std::vector<std::string> roots{"L"};

  std::size_t rank() const { return roots.size(); }
};

/// How c_1 of the base pairs with L in numeric specialisations of P2.
enum class CanonicalConvention { canonical_class, tangent };

struct SurfaceModel {
  std::string name = "generic-surface";
  int dim = 2;
  /// Chern symbols c_1..c_n with degrees 1..n.
  std::vector<std::string> chern;
  /// s_1..s_n as text in the Chern symbols.
  std::vector<std::string> segre;
  /// For P2: evaluate basis monomials on curves of degree d.
  bool projective_plane = false;
  CanonicalConvention convention = CanonicalConvention::canonical_class;

  static SurfaceModel preset(std::string_view name);
  /// Generic base of dimension n with symbols c1..cn and the given Segre
  /// classes (defaults to zero above the base).
  static SurfaceModel generic(int n);

  /// Segre classes from the series inverse of 1 + c_1 + ... + c_n.
  SurfaceModel with_inverse_segre() const;
  /// Copy with every Chern symbol renamed `c1` -> `c1_<suffix>`.
  SurfaceModel renamed(const std::string& suffix) const;

  std::vector<std::pair<std::string, int>> symbols() const;

  /// Intersection numbers of the degree-n basis monomials on P2 with
  /// L = dH.  Throws unless `projective_plane`.
  std::map<std::string, Rational> p2_numbers(int d) const;
};

/// theta_j followed by theta_j + offset_i for every offset and root.
std::vector<MPoly> twisted_roots(const BundleModel& b, const ContextPtr& ctx,
                                 std::span<const MPoly> offsets);

/// e_0..e_m of the roots.
std::vector<MPoly> elementary_symmetric_all(int m, std::span<const MPoly> roots,
                                            const ContextPtr& ctx);
MPoly elementary_symmetric(int m, std::span<const MPoly> roots, const ContextPtr& ctx);

/// 1 + s_1/z + ... + s_n/z^n in residue variable `var`.
MPoly segre_factor(const ContextPtr& ctx, std::size_t var, const SurfaceModel& X);

/// Polynomial in the tautological Chern classes c_1, c_2, ... of F^[k],
/// stored as text over symbols `c1`, `c2`, ...  Evaluated by c_m -> e_m.
struct ChernPolynomial {
  std::string text = "1";

  static ChernPolynomial top(int m) { return {"c" + std::to_string(m)}; }
  MPoly evaluate(std::span<const MPoly> roots, const ContextPtr& ctx) const;
  int max_class() const;
};

struct TopDegree {
  /// Coefficient per basis monomial, in basis order.
  std::vector<std::pair<std::string, Rational>> coeffs;
  /// Terms of any other degree.
  MPoly remainder;

  Rational at(std::string_view key) const;
  std::string to_string() const;
};

/// All monomials of geometry degree n in the context's geometry symbols, in
/// canonical order.
std::vector<std::string> top_degree_basis(const ContextPtr& ctx, int n);

/// Degree-n part of p in the given basis.  Throws std::invalid_argument if a
/// degree-n monomial is missing from the basis or p still has residue
/// variables.
TopDegree select_top_degree(const MPoly& p, int n, std::span<const std::string> basis);

}  // namespace hilbres
