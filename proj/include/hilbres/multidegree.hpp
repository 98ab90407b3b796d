#pragma once

// Multidegrees (torus-equivariant Poincare duals) of monomial ideals, and the
// table of duals of Nakajima subsets with Morin algebras.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hilbres/poly.hpp"

namespace hilbres {

class MonomialIdeal {
 public:
  using Exponents = std::vector<int>;

  /// Generators are reduced to a minimal generating set.  Throws
  /// std::invalid_argument on wrong lengths or negative exponents.
  MonomialIdeal(int num_vars, std::vector<Exponents> generators);

  int num_vars() const { return n_; }
  const std::vector<Exponents>& generators() const { return gens_; }
  bool is_unit() const;
  /// Variables occurring in generator g.
  std::vector<int> support(std::size_t g) const;

  /// Parses `x^2*y, y^3` style text over the named variables.
  static MonomialIdeal parse(std::span<const std::string> var_names, std::string_view text);

 private:
  int n_;
  std::vector<Exponents> gens_;
};

/// N minus the size of the largest variable set avoiding every support,
/// i.e. the smallest set meeting all supports.  Throws on the unit ideal.
int codimension(const MonomialIdeal& I);

/// Sum over minimal coordinate primes P_S of maximal dimension of
/// mult_{P_S}(I) * prod_{i in S} eta_i.
MPoly multidegree(const MonomialIdeal& I, std::span<const MPoly> weights);

/// Length of the local ring of I at P_S (S given as variable indices).
Integer local_multiplicity(const MonomialIdeal& I, std::span<const int> S);

/// Dual of Nak(d_1 + ... + d_s) in Nak(d_1, ..., d_s) as the 1-based indices
/// of the z variables in the monomial; nullopt where the table has a gap.
std::optional<std::vector<int>> nakajima_dual(std::vector<int> d);

/// Same, as a polynomial in the given residue variables (z_i = vars[i-1]).
std::optional<MPoly> nakajima_dual(std::vector<int> d, const ContextPtr& ctx,
                                   std::span<const std::size_t> vars);

}  // namespace hilbres
