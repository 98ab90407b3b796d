#pragma once

// Residue problems for tautological integrals over punctual and geometric
// subsets of Hilbert schemes of points, the geometric component, and the
// nodal curve counts; evaluation down to intersection numbers on X.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hilbres/chern.hpp"
#include "hilbres/diagram.hpp"
#include "hilbres/partitions.hpp"
#include "hilbres/residue.hpp"

namespace hilbres {

struct AlgebraSpec {
  /// dim A, counting the unit.
  int k = 1;
  /// Filtration dimension vector, summing to k - 1.
  std::vector<int> filtration;
  /// Dual of Q(A) in Alg_d(N), as text in z1..z_{k-1}.
  std::string epd = "1";
  std::optional<Diagram> diagram;

  static AlgebraSpec trivial(int dim = 2);
  /// C[t]/t^d.
  static AlgebraSpec morin(int d, int dim = 2);
  /// Monomial algebra of a diagram with the filtration by powers of m.
  static AlgebraSpec from_diagram(const Diagram& d);

  std::vector<int> weights() const { return weight_map(filtration); }
  void validate() const;
};

struct GeometricSubsetSpec {
  std::vector<AlgebraSpec> algebras;
  /// Dual of the punctual subset of a block (1-based algebra indices), as
  /// text in z1..; nullopt when unknown.  Default: Nakajima table for Morin
  /// blocks, unknown otherwise.
  std::function<std::optional<std::string>(std::span<const int>)> block_dual;
  /// Dual of Q(A_S) for the sum algebra of a block.  Default "1".
  std::function<std::string(std::span<const int>)> block_epd;
};

/// An assembled integrand with the bookkeeping needed for evaluation and
/// structural comparison.
struct Assembled {
  ResidueProblem problem;
  SurfaceModel surface;
  int copies = 1;
  /// Residue variables of every block.
  std::vector<std::vector<std::size_t>> blocks;
  /// Per residue variable: power n in the monomial denominator z^n.
  std::vector<int> monomial_power;
  /// Residue variables carrying a Segre factor.
  std::vector<std::size_t> segre_vars;
  /// Copy of X owning each geometry symbol (0-based), indexed by context
  /// position minus the number of residue variables.
  std::vector<int> symbol_copy;
  std::vector<std::string> warnings;

  explicit Assembled(ContextPtr ctx) : problem(std::move(ctx)) {}
};

struct GeometricTerm {
  SetPartition alpha;
  std::optional<Assembled> integrand;
  /// Why the integrand is missing.
  std::string note;
};

struct PunctualOptions {
  Rational prefactor{1};
  /// Residue variable names; default z1..z_{k-1}.
  std::vector<std::string> names;
};

Assembled assemble_punctual(const AlgebraSpec& a, const BundleModel& F, const SurfaceModel& X,
                            const ChernPolynomial& phi, const PunctualOptions& opts = {});

std::vector<GeometricTerm> assemble_geometric(const GeometricSubsetSpec& g, const BundleModel& F,
                                              const SurfaceModel& X, const ChernPolynomial& phi);

/// Block polynomials Q_m of the geometric component; default 1.
using QPolynomials = std::function<std::string(int)>;

std::vector<GeometricTerm> assemble_ghilb(int k, const BundleModel& F, const SurfaceModel& X,
                                          const ChernPolynomial& phi, const QPolynomials& q = {});

/// Nodal curve problems.  r = 1, 2 are the calibrated closed forms; r >= 3
/// emits the general template with `epd` and a calibration warning.
Assembled assemble_severi(int r, const std::string& epd = "1",
                          const SurfaceModel& X = SurfaceModel::preset("generic-surface"));

struct Evaluation {
  MPoly residue;
  TopDegree top;
  std::vector<std::string> warnings;
};

Evaluation evaluate(const Assembled& a, const ResidueOptions& opts = {});

/// Evaluates every resolvable term, in parallel across terms; results keep
/// the input order.
std::vector<std::optional<Evaluation>> evaluate_terms(const std::vector<GeometricTerm>& terms,
                                                      const ResidueOptions& opts = {});

/// Numeric value of a surface coefficient map on P2 with L = dH.
Rational p2_value(const TopDegree& top, const SurfaceModel& X, int d);

/// Multiset of denominator linear forms written in block-local names
/// z1..z_m, sorted.  Used to compare assemblies structurally.
std::vector<std::string> block_denominator_signature(const Assembled& a, std::size_t block);

// ---------------------------------------------------------------------------
// Verification suite

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
};

struct VerifyOptions {
  /// Surface used for the a_1 / a_2 checks.
  SurfaceModel surface = SurfaceModel::preset("generic-surface");
  unsigned seed = 20240611;
};

std::vector<CriterionResult> verify_suite(const VerifyOptions& opts = {});

}  // namespace hilbres
