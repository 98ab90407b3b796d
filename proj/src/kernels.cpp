#include "hilbres/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <unordered_map>

namespace hilbres {

namespace {

using Accumulator = std::unordered_map<Monomial, Rational, MonomialHash>;

std::vector<int> geometry_degrees(const VariableContext& ctx, std::span<const MPoly::Term> ts) {
  std::vector<int> d;
  d.reserve(ts.size());
  for (const auto& t : ts) d.push_back(geometry_degree(ctx, t.mono));
  return d;
}

void accumulate(const VariableContext& ctx, std::span<const MPoly::Term> a,
                std::span<const int> deg_a, std::span<const MPoly::Term> b,
                std::span<const int> deg_b, std::size_t begin, std::size_t end,
                Accumulator& acc) {
  const auto cap = ctx.geometry_cap();
  Rational prod;
  for (std::size_t i = begin; i < end; ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (cap && deg_a[i] + deg_b[j] > *cap) continue;
      prod = a[i].coeff * b[j].coeff;
      auto [it, inserted] = acc.try_emplace(a[i].mono * b[j].mono, prod);
      if (!inserted) it->second += prod;
    }
  }
}

std::vector<MPoly::Term> drain_sorted(Accumulator& acc) {
  std::vector<MPoly::Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) out.push_back({m, std::move(c)});
  std::sort(out.begin(), out.end(), [](const MPoly::Term& x, const MPoly::Term& y) {
    return compare_canonical(x.mono, y.mono) < 0;
  });
  return out;
}

std::vector<MPoly::Term> merge_sorted(std::vector<MPoly::Term> x, std::vector<MPoly::Term> y) {
  std::vector<MPoly::Term> out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    int c = i == x.end() ? 1 : j == y.end() ? -1 : compare_canonical(i->mono, j->mono);
    if (c < 0) {
      out.push_back(std::move(*i++));
    } else if (c > 0) {
      out.push_back(std::move(*j++));
    } else {
      i->coeff += j->coeff;
      if (sgn(i->coeff) != 0) out.push_back(std::move(*i));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

MPoly multiply_serial(const MPoly& a, const MPoly& b) {
  if (a.context() != b.context() && !a.context()->same_as(*b.context()))
    throw ContextMismatch("polynomials belong to different variable contexts");
  const auto& ctx = *a.context();
  auto da = geometry_degrees(ctx, a.terms());
  auto db = geometry_degrees(ctx, b.terms());
  Accumulator acc;
  acc.reserve(a.size() * b.size());
  accumulate(ctx, a.terms(), da, b.terms(), db, 0, a.size(), acc);
  return MPoly::from_terms(a.context(), drain_sorted(acc));
}

MPoly multiply_parallel(const MPoly& a, const MPoly& b) {
  if (a.context() != b.context() && !a.context()->same_as(*b.context()))
    throw ContextMismatch("polynomials belong to different variable contexts");
  int threads = omp_get_max_threads();
  if (threads <= 1 || a.size() * b.size() < kParallelPairThreshold || a.size() < 2)
    return multiply_serial(a, b);

  // Put the longer operand on the left so the split has enough rows.
  const MPoly& left = a.size() >= b.size() ? a : b;
  const MPoly& right = a.size() >= b.size() ? b : a;
  const auto& ctx = *left.context();
  auto dl = geometry_degrees(ctx, left.terms());
  auto dr = geometry_degrees(ctx, right.terms());

  const int chunks = std::min<int>(threads, static_cast<int>(left.size()));
  std::vector<std::vector<MPoly::Term>> partial(chunks);

#pragma omp parallel for schedule(static) num_threads(chunks)
  for (int c = 0; c < chunks; ++c) {
    std::size_t begin = left.size() * c / chunks;
    std::size_t end = left.size() * (c + 1) / chunks;
    Accumulator acc;
    acc.reserve((end - begin) * right.size());
    accumulate(ctx, left.terms(), dl, right.terms(), dr, begin, end, acc);
    partial[c] = drain_sorted(acc);
  }

  // Pairwise merge tree; each level merges disjoint pairs concurrently.
  for (std::size_t stride = 1; stride < partial.size(); stride *= 2) {
    const auto n = static_cast<long>(partial.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; i += static_cast<long>(2 * stride)) {
      if (i + static_cast<long>(stride) < n)
        partial[i] = merge_sorted(std::move(partial[i]), std::move(partial[i + stride]));
    }
  }
  return MPoly::from_terms(left.context(), std::move(partial[0]));
}

}  // namespace hilbres
