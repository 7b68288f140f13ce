#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "treegen/weight_seq.hpp"

namespace treegen {

// Neighbor lists for a tree labelled 1..n in pre-order. Slot 0 is unused so
// vertex labels index directly.
struct AdjList {
  std::size_t n = 0;
  std::vector<std::vector<int>> nbrs;  // size n + 1, each list sorted ascending

  bool operator==(const AdjList&) const = default;
};

struct AdjMatrix {
  std::size_t n = 0;
  std::vector<char> bits;  // row-major n x n, values 0/1

  char at(std::size_t i, std::size_t j) const { return bits[(i - 1) * n + (j - 1)]; }
  bool operator==(const AdjMatrix&) const = default;
};

// Converts a weight sequence to the adjacency list of the tree it denotes,
// labelling vertices 1..n in pre-order. Accepts unicentroidal tree sequences,
// bicentroidal pairs (first element n/2, which triggers the extra centroid
// edge) and plain rooted-tree sequences. The centroid edge can be suppressed
// when converting cached rooted subtrees whose order happens to equal n/2.
inline AdjList adj_list_from_ws(WeightSpan ws, bool add_centroid_edge = true) {
  const std::size_t n = ws.size();
  const bool bicentroidal = add_centroid_edge && n >= 2 && n % 2 == 0 && ws[0] == n / 2;
  if (bicentroidal) {
    if (!validate_tree_ws(ws.first(n / 2)) || !validate_tree_ws(ws.subspan(n / 2)))
      throw std::invalid_argument("adj_list_from_ws: invalid bicentroidal sequence");
  } else if (!validate_tree_ws(ws)) {
    throw std::invalid_argument("adj_list_from_ws: invalid tree weight sequence");
  }

  AdjList out;
  out.n = n;
  out.nbrs.resize(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t j = i + 1;
    while (j < i + ws[i - 1]) {
      out.nbrs[i].push_back(static_cast<int>(j));
      out.nbrs[j].push_back(static_cast<int>(i));
      j += ws[j - 1];
    }
  }
  if (bicentroidal) {
    const std::size_t hn = n / 2 + 1;
    out.nbrs[1].push_back(static_cast<int>(hn));
    out.nbrs[hn].push_back(static_cast<int>(1));
  }
  for (auto& lst : out.nbrs) std::sort(lst.begin(), lst.end());
  return out;
}

inline AdjMatrix adj_matrix_from_ws(WeightSpan ws, bool add_centroid_edge = true) {
  const AdjList adj = adj_list_from_ws(ws, add_centroid_edge);
  AdjMatrix m;
  m.n = adj.n;
  m.bits.assign(adj.n * adj.n, 0);
  for (std::size_t i = 1; i <= adj.n; ++i) {
    for (int j : adj.nbrs[i]) m.bits[(i - 1) * adj.n + (j - 1)] = 1;
  }
  return m;
}

namespace detail {

inline void check_is_tree(const AdjList& t) {
  const std::size_t n = t.n;
  if (n == 0 || t.nbrs.size() != n + 1) throw std::invalid_argument("not a tree: bad order");
  std::size_t edges = 0;
  for (std::size_t v = 1; v <= n; ++v) edges += t.nbrs[v].size();
  if (edges != 2 * (n - 1)) throw std::invalid_argument("not a tree: wrong edge count");
  std::vector<char> seen(n + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  std::size_t count = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++count;
    for (int w : t.nbrs[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  if (count != n) throw std::invalid_argument("not a tree: disconnected");
}

// cws of the subtree hanging off v away from parent (parent = 0 at the root).
inline WeightSeq cws_below(const AdjList& t, int v, int parent) {
  std::vector<WeightSeq> children;
  for (int w : t.nbrs[v]) {
    if (w != parent) children.push_back(cws_below(t, w, v));
  }
  std::stable_sort(children.begin(), children.end(),
                   [](const WeightSeq& a, const WeightSeq& b) { return lex_gt(a, b); });
  std::size_t total = 1;
  for (const auto& c : children) total += c.size();
  WeightSeq out;
  out.reserve(total);
  out.push_back(static_cast<Weight>(total));
  for (const auto& c : children) out.insert(out.end(), c.begin(), c.end());
  return out;
}

// Subtree sizes with respect to root 1, by iterative post-order.
inline void subtree_sizes(const AdjList& t, std::vector<int>& size, std::vector<int>& parent) {
  const std::size_t n = t.n;
  size.assign(n + 1, 1);
  parent.assign(n + 1, 0);
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> stack{1};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : t.nbrs[v]) {
      if (w != parent[v]) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent[*it] != 0) size[parent[*it]] += size[*it];
  }
}

}  // namespace detail

inline WeightSeq canonical_ws_of_rooted(const AdjList& t, int root) {
  detail::check_is_tree(t);
  if (root < 1 || static_cast<std::size_t>(root) > t.n)
    throw std::invalid_argument("canonical_ws_of_rooted: root out of range");
  return detail::cws_below(t, root, 0);
}

// The one or two vertices minimizing the largest component of T - u.
inline std::vector<int> find_centroids(const AdjList& t) {
  detail::check_is_tree(t);
  const int n = static_cast<int>(t.n);
  std::vector<int> size, parent;
  detail::subtree_sizes(t, size, parent);
  std::vector<int> result;
  int best = n;
  for (int v = 1; v <= n; ++v) {
    int maxcomp = n - size[v];
    for (int w : t.nbrs[v]) {
      if (w != parent[v]) maxcomp = std::max(maxcomp, size[w]);
    }
    if (maxcomp < best) {
      best = maxcomp;
      result.assign(1, v);
    } else if (maxcomp == best) {
      result.push_back(v);
    }
  }
  return result;
}

// The free weight sequence: cws at the centroid, or for a bicentroidal tree
// the two half cws values with the lexicographically larger half first.
inline WeightSeq fws_of_free(const AdjList& t) {
  const std::vector<int> cent = find_centroids(t);
  if (cent.size() == 1) return detail::cws_below(t, cent[0], 0);
  const WeightSeq first = detail::cws_below(t, cent[0], cent[1]);
  const WeightSeq second = detail::cws_below(t, cent[1], cent[0]);
  return lex_ge(first, second) ? concat(first, second) : concat(second, first);
}

}  // namespace treegen
