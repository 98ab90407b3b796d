#pragma once

// Set partitions of {1..s}, the sieve coefficients of the partition lattice
// and the exponential (complete Bell polynomial) transform.

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilbres/poly.hpp"

namespace hilbres {

struct SetPartition {
  /// Blocks of 1-based elements, each sorted, blocks ordered by minimum.
  std::vector<std::vector<int>> blocks;

  std::size_t size() const { return blocks.size(); }
  int ground_size() const;
  bool is_discrete() const;
  std::string to_string() const;

  /// Throws std::invalid_argument unless the blocks partition {1..s}.
  static SetPartition from_blocks(std::vector<std::vector<int>> blocks);

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

/// All partitions of {1..s} in restricted-growth-string order; the first one
/// is the single block, the last one is discrete.
std::vector<SetPartition> set_partitions(int s);

Integer bell_number(int s);

/// (-1)^{|beta|-1} (|beta|-1)!
Integer sieve_coefficient(const SetPartition& beta);

/// Blocks beta_i = union of mu_j over j in alpha_i.
SetPartition merge_partition(const SetPartition& mu, const SetPartition& alpha);

/// P_1..P_r from a_1..a_r with sum P_r t^r / r! = exp(sum a_q t^q / q!).
/// `one` supplies the unit of the coefficient ring.
template <class T>
std::vector<T> bell_transform(std::span<const T> a, const T& one) {
  const std::size_t r = a.size();
  std::vector<T> p{one};
  for (std::size_t n = 0; n < r; ++n) {
    T next = one - one;
    Integer binom = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      next += a[k] * p[n - k] * Rational(binom);
      binom = binom * static_cast<unsigned long>(n - k) / static_cast<unsigned long>(k + 1);
    }
    p.push_back(std::move(next));
  }
  p.erase(p.begin());
  return p;
}

/// Logarithm transform: recovers a_1..a_r from P_1..P_r.
template <class T>
std::vector<T> bell_inverse(std::span<const T> P, const T& one) {
  const std::size_t r = P.size();
  std::vector<T> p{one};
  p.insert(p.end(), P.begin(), P.end());
  std::vector<T> a;
  for (std::size_t n = 0; n < r; ++n) {
    T an = p[n + 1];
    Integer binom = 1;
    for (std::size_t k = 0; k < n; ++k) {
      an -= a[k] * p[n - k] * Rational(binom);
      binom = binom * static_cast<unsigned long>(n - k) / static_cast<unsigned long>(k + 1);
    }
    a.push_back(std::move(an));
  }
  return a;
}

/// N_r = P_r / r!
template <class T>
T severi_count(const T& P, int r) {
  if (r < 0) throw std::invalid_argument("negative r");
  Integer f = 1;
  for (int i = 2; i <= r; ++i) f *= i;
  return P * Rational(1, f);
}

}  // namespace hilbres
