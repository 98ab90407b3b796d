#pragma once

// n-dimensional Young diagrams: downward closed sets of boxes in N^d.
// Two-dimensional partitions use the French convention, so the partition
// (l1 >= l2 >= ...) has boxes (i, j) with 0 <= i < l_{j+1}.

#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hilbres {

class Diagram {
 public:
  using Box = std::vector<int>;

  explicit Diagram(int dim = 2);

  /// Throws std::invalid_argument unless the boxes form a downward closed
  /// set of non-negative d-tuples.
  static Diagram from_boxes(int dim, std::vector<Box> boxes);
  static Diagram from_partition(std::span<const int> parts, int dim = 2);
  /// Accepts `(2,1)` or whitespace separated box tuples `(0,0) (1,0) (0,1)`.
  /// A `dim` of 0 infers the dimension from the text.
  static Diagram parse(std::string_view text, int dim = 0);

  int dim() const { return dim_; }
  std::size_t size() const { return boxes_.size(); }
  bool empty() const { return boxes_.empty(); }
  /// Sorted lexicographically.
  const std::vector<Box>& boxes() const { return boxes_; }
  bool contains(const Box& b) const;

  /// Maximal coordinate along every axis.  Throws on the empty diagram.
  std::vector<int> lengths() const;
  /// Number of boxes on each line parallel to the first axis, keyed by the
  /// remaining coordinates.
  std::map<std::vector<int>, int> slice_counts() const;
  /// Row lengths of a two-dimensional diagram (the classical partition).
  std::vector<int> partition() const;
  /// Number of boxes with coordinate sum j, for j = 1..max.
  std::vector<int> degree_profile() const;
  /// A single row: the monomial algebra C[t]/t^k.
  bool is_row() const;

  Diagram permute_axes(std::span<const int> perm) const;
  std::string to_string() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  int dim_;
  std::vector<Box> boxes_;
};

/// Axis permutation with r_1 >= ... >= r_d.  A well-oriented input is
/// returned unchanged; otherwise the candidate with the lexicographically
/// largest box list wins.
Diagram orient_well(const Diagram& d);

/// Adds slice cardinalities along the first axis without reorienting.
Diagram add_along_first_axis(const Diagram& a, const Diagram& b);

/// Well-orients every input and adds them along the first axis.
Diagram curvilinear_sum(std::span<const Diagram> diagrams);

/// Random diagram of the given size grown by adding addable boxes.
Diagram random_diagram(std::mt19937& rng, int dim, int size);

/// w(i) = j for d_1 + ... + d_{j-1} < i <= d_1 + ... + d_j; index 0 of the
/// result is w(1).
std::vector<int> weight_map(std::span<const int> dims);

}  // namespace hilbres
