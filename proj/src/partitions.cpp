#include "hilbres/partitions.hpp"

#include <algorithm>

namespace hilbres {

int SetPartition::ground_size() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

bool SetPartition::is_discrete() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.size() == 1; });
}

std::string SetPartition::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    s += i ? ",{" : "{";
    for (std::size_t j = 0; j < blocks[i].size(); ++j)
      s += (j ? "," : "") + std::to_string(blocks[i][j]);
    s += "}";
  }
  return s + "}";
}

SetPartition SetPartition::from_blocks(std::vector<std::vector<int>> blocks) {
  int n = 0;
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block");
    std::sort(b.begin(), b.end());
    n += static_cast<int>(b.size());
  }
  std::vector<char> seen(n + 1, 0);
  for (const auto& b : blocks)
    for (int x : b) {
      if (x < 1 || x > n || seen[x]) throw std::invalid_argument("blocks do not partition {1..s}");
      seen[x] = 1;
    }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return SetPartition{std::move(blocks)};
}

std::vector<SetPartition> set_partitions(int s) {
  if (s < 1) throw std::invalid_argument("set_partitions needs s >= 1");
  std::vector<SetPartition> out;
  // Restricted growth strings a_1 = 0, a_i <= 1 + max(a_1..a_{i-1}).
  std::vector<int> a(s, 0), mx(s, 0);
  while (true) {
    int nb = mx[s - 1] + 1;
    SetPartition p;
    p.blocks.assign(nb, {});
    for (int i = 0; i < s; ++i) p.blocks[a[i]].push_back(i + 1);
    out.push_back(std::move(p));

    int i = s - 1;
    while (i > 0 && a[i] == mx[i - 1] + 1) --i;
    if (i == 0) break;
    ++a[i];
    mx[i] = std::max(mx[i - 1], a[i]);
    for (int j = i + 1; j < s; ++j) {
      a[j] = 0;
      mx[j] = mx[j - 1];
    }
  }
  return out;
}

Integer bell_number(int s) {
  // Bell triangle.
  std::vector<Integer> row{1};
  for (int i = 1; i < s; ++i) {
    std::vector<Integer> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return s == 0 ? Integer(1) : row.back();
}

Integer sieve_coefficient(const SetPartition& beta) {
  Integer f = 1;
  const int b = static_cast<int>(beta.size());
  for (int i = 2; i < b; ++i) f *= i;
  return (b - 1) % 2 ? Integer(-f) : f;
}

SetPartition merge_partition(const SetPartition& mu, const SetPartition& alpha) {
  if (alpha.ground_size() != static_cast<int>(mu.size()))
    throw std::invalid_argument("merge_partition: alpha must partition the blocks of mu");
  std::vector<std::vector<int>> blocks;
  for (const auto& ab : alpha.blocks) {
    std::vector<int> merged;
    for (int j : ab) merged.insert(merged.end(), mu.blocks.at(j - 1).begin(), mu.blocks.at(j - 1).end());
    blocks.push_back(std::move(merged));
  }
  return SetPartition::from_blocks(std::move(blocks));
}

}  // namespace hilbres
