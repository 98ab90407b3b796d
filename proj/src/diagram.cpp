#include "hilbres/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

namespace hilbres {

Diagram::Diagram(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("diagram dimension must be positive");
}

Diagram Diagram::from_boxes(int dim, std::vector<Box> boxes) {
  Diagram d(dim);
  std::sort(boxes.begin(), boxes.end());
  boxes.erase(std::unique(boxes.begin(), boxes.end()), boxes.end());
  std::set<Box> have(boxes.begin(), boxes.end());
  for (const auto& b : boxes) {
    if (static_cast<int>(b.size()) != dim)
      throw std::invalid_argument("box has wrong dimension");
    for (int i = 0; i < dim; ++i) {
      if (b[i] < 0) throw std::invalid_argument("negative box coordinate");
      if (b[i] == 0) continue;
      Box below = b;
      --below[i];
      if (!have.contains(below)) throw std::invalid_argument("box set is not downward closed");
    }
  }
  d.boxes_ = std::move(boxes);
  return d;
}

Diagram Diagram::from_partition(std::span<const int> parts, int dim) {
  if (dim < 2) throw std::invalid_argument("partition needs at least two dimensions");
  std::vector<Box> boxes;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j] <= 0 || (j > 0 && parts[j] > parts[j - 1]))
      throw std::invalid_argument("partition parts must be positive and weakly decreasing");
    for (int i = 0; i < parts[j]; ++i) {
      Box b(dim, 0);
      b[0] = i;
      b[1] = static_cast<int>(j);
      boxes.push_back(std::move(b));
    }
  }
  return from_boxes(dim, std::move(boxes));
}

namespace {

std::vector<std::vector<int>> parse_groups(std::string_view text) {
  std::vector<std::vector<int>> groups;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip();
    if (i == text.size()) break;
    if (text[i] != '(') throw std::invalid_argument("expected '(' in diagram text");
    ++i;
    std::vector<int> g;
    while (true) {
      skip();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '-'))
        ++i;
      if (start == i) throw std::invalid_argument("expected integer in diagram text");
      g.push_back(std::stoi(std::string(text.substr(start, i - start))));
      skip();
      if (i < text.size() && text[i] == ',') ++i;
    }
    groups.push_back(std::move(g));
  }
  return groups;
}

bool is_partition(const std::vector<int>& g) {
  if (g.empty()) return false;
  for (std::size_t j = 0; j < g.size(); ++j)
    if (g[j] <= 0 || (j > 0 && g[j] > g[j - 1])) return false;
  return true;
}

}  // namespace

Diagram Diagram::parse(std::string_view text, int dim) {
  auto groups = parse_groups(text);
  if (groups.empty()) throw std::invalid_argument("empty diagram text");
  if (groups.size() == 1 && is_partition(groups[0]))
    return from_partition(groups[0], dim == 0 ? 2 : dim);
  int d = dim == 0 ? static_cast<int>(groups[0].size()) : dim;
  return from_boxes(d, std::move(groups));
}

bool Diagram::contains(const Box& b) const {
  return std::binary_search(boxes_.begin(), boxes_.end(), b);
}

std::vector<int> Diagram::lengths() const {
  if (boxes_.empty()) throw std::invalid_argument("lengths of the empty diagram");
  std::vector<int> r(dim_, 0);
  for (const auto& b : boxes_)
    for (int i = 0; i < dim_; ++i) r[i] = std::max(r[i], b[i]);
  return r;
}

std::map<std::vector<int>, int> Diagram::slice_counts() const {
  std::map<std::vector<int>, int> out;
  for (const auto& b : boxes_) ++out[std::vector<int>(b.begin() + 1, b.end())];
  return out;
}

std::vector<int> Diagram::partition() const {
  if (dim_ != 2) throw std::invalid_argument("partition() needs a two-dimensional diagram");
  std::vector<int> parts;
  for (const auto& [key, n] : slice_counts()) {
    if (static_cast<std::size_t>(key[0]) >= parts.size()) parts.resize(key[0] + 1, 0);
    parts[key[0]] = n;
  }
  return parts;
}

std::vector<int> Diagram::degree_profile() const {
  std::vector<int> out;
  for (const auto& b : boxes_) {
    int s = std::accumulate(b.begin(), b.end(), 0);
    if (s == 0) continue;
    if (static_cast<std::size_t>(s) > out.size()) out.resize(s, 0);
    ++out[s - 1];
  }
  return out;
}

bool Diagram::is_row() const {
  for (const auto& b : boxes_)
    for (int i = 1; i < dim_; ++i)
      if (b[i] != 0) return false;
  return true;
}

Diagram Diagram::permute_axes(std::span<const int> perm) const {
  std::vector<Box> out;
  out.reserve(boxes_.size());
  for (const auto& b : boxes_) {
    Box nb(dim_);
    for (int i = 0; i < dim_; ++i) nb[i] = b[perm[i]];
    out.push_back(std::move(nb));
  }
  return from_boxes(dim_, std::move(out));
}

std::string Diagram::to_string() const {
  auto tuple = [](const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  if (dim_ == 2 && !boxes_.empty()) return tuple(partition());
  std::string s;
  for (const auto& b : boxes_) s += (s.empty() ? "" : " ") + tuple(b);
  return s.empty() ? "()" : s;
}

Diagram orient_well(const Diagram& d) {
  if (d.empty()) return d;
  auto r0 = d.lengths();
  if (std::is_sorted(r0.begin(), r0.end(), std::greater<>())) return d;
  std::vector<int> perm(d.dim());
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<Diagram> best;
  do {
    Diagram c = d.permute_axes(perm);
    auto r = c.lengths();
    if (!std::is_sorted(r.begin(), r.end(), std::greater<>())) continue;
    if (!best || c.boxes() > best->boxes()) best = std::move(c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

Diagram add_along_first_axis(const Diagram& a, const Diagram& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("diagram dimensions differ");
  auto counts = a.slice_counts();
  for (const auto& [key, n] : b.slice_counts()) counts[key] += n;
  std::vector<Diagram::Box> boxes;
  for (const auto& [key, n] : counts)
    for (int i = 0; i < n; ++i) {
      Diagram::Box box{i};
      box.insert(box.end(), key.begin(), key.end());
      boxes.push_back(std::move(box));
    }
  return Diagram::from_boxes(a.dim(), std::move(boxes));
}

Diagram curvilinear_sum(std::span<const Diagram> diagrams) {
  if (diagrams.empty()) throw std::invalid_argument("curvilinear sum of nothing");
  Diagram acc(diagrams[0].dim());
  for (const auto& d : diagrams) acc = add_along_first_axis(acc, orient_well(d));
  return acc;
}

Diagram random_diagram(std::mt19937& rng, int dim, int size) {
  std::set<Diagram::Box> boxes;
  if (size > 0) boxes.insert(Diagram::Box(dim, 0));
  while (static_cast<int>(boxes.size()) < size) {
    std::vector<Diagram::Box> addable;
    for (const auto& b : boxes)
      for (int i = 0; i < dim; ++i) {
        Diagram::Box c = b;
        ++c[i];
        if (boxes.contains(c)) continue;
        bool ok = true;
        for (int j = 0; j < dim && ok; ++j) {
          if (c[j] == 0) continue;
          Diagram::Box below = c;
          --below[j];
          ok = boxes.contains(below);
        }
        if (ok) addable.push_back(std::move(c));
      }
    std::uniform_int_distribution<std::size_t> pick(0, addable.size() - 1);
    boxes.insert(addable[pick(rng)]);
  }
  return Diagram::from_boxes(dim, {boxes.begin(), boxes.end()});
}

std::vector<int> weight_map(std::span<const int> dims) {
  std::vector<int> w;
  for (std::size_t j = 0; j < dims.size(); ++j) {
    if (dims[j] < 0) throw std::invalid_argument("negative filtration dimension");
    w.insert(w.end(), dims[j], static_cast<int>(j) + 1);
  }
  return w;
}

}  // namespace hilbres
