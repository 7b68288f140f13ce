#pragma once

#include "treegen/adjacency.hpp"
#include "treegen/rooted.hpp"

namespace treegen {

namespace detail {

// Copies a cached subtree adjacency into dst with all labels shifted.
inline void splice_offset(AdjList& dst, const AdjList& src, std::size_t offset) {
  for (std::size_t v = 1; v <= src.n; ++v) {
    for (int w : src.nbrs[v]) dst.nbrs[v + offset].push_back(static_cast<int>(w + offset));
  }
}

inline const AdjList& adj_of(const RootedCache& cache, WeightSpan s, AdjList& fallback) {
  if (const AdjList* cached = cache.cached_adj(s)) return *cached;
  fallback = adj_list_from_ws(s, /*add_centroid_edge=*/false);
  return fallback;
}

}  // namespace detail

// Adjacency list of the tree n (+) a (+) b#, assembled from cached subtree
// adjacencies: a's labels are offset by 1, each tree of the forest b# by
// |a|+1 plus its segment start, and every subtree root is wired to vertex 1.
// Output is identical to adj_list_from_ws on the assembled sequence.
inline AdjList assemble_adj(std::size_t n, WeightSpan a, WeightSpan bTail,
                            const RootedCache& cache) {
  if (n != 1 + a.size() + bTail.size())
    throw std::invalid_argument("assemble_adj: order does not match parts");
  AdjList out;
  out.n = n;
  out.nbrs.resize(n + 1);
  AdjList scratch;

  detail::splice_offset(out, detail::adj_of(cache, a, scratch), 1);
  out.nbrs[1].push_back(2);
  out.nbrs[2].push_back(1);

  std::size_t p = 0;
  while (p < bTail.size()) {
    const std::size_t c = bTail[p];
    if (c < 1 || p + c > bTail.size())
      throw std::invalid_argument("assemble_adj: malformed forest tail");
    const std::size_t offset = 1 + a.size() + p;
    detail::splice_offset(out, detail::adj_of(cache, bTail.subspan(p, c), scratch), offset);
    out.nbrs[1].push_back(static_cast<int>(offset + 1));
    out.nbrs[offset + 1].push_back(1);
    p += c;
  }
  for (auto& lst : out.nbrs) std::sort(lst.begin(), lst.end());
  return out;
}

// Bicentroidal variant: the second half is offset by n/2 and the two
// centroids are joined.
inline AdjList assemble_adj_bi(WeightSpan a1, WeightSpan a2, const RootedCache& cache) {
  if (a1.size() != a2.size()) throw std::invalid_argument("assemble_adj_bi: halves differ in order");
  const std::size_t half = a1.size();
  AdjList out;
  out.n = 2 * half;
  out.nbrs.resize(out.n + 1);
  AdjList scratch;
  detail::splice_offset(out, detail::adj_of(cache, a1, scratch), 0);
  detail::splice_offset(out, detail::adj_of(cache, a2, scratch), half);
  out.nbrs[1].push_back(static_cast<int>(half + 1));
  out.nbrs[half + 1].push_back(1);
  for (auto& lst : out.nbrs) std::sort(lst.begin(), lst.end());
  return out;
}

}  // namespace treegen
