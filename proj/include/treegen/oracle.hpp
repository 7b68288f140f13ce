#pragma once

#include <set>

#include "treegen/adjacency.hpp"

namespace treegen {
namespace oracle {

// Enumeration caps keeping the brute-force sweeps tractable (n^(n-2) codes).
inline constexpr std::size_t kMaxFreeOrder = 9;
inline constexpr std::size_t kMaxRootedOrder = 8;
inline constexpr std::size_t kMaxPermutationOrder = 10;

struct PruferSeq {
  std::vector<int> labels;  // length n-2, entries in 1..n
};

// The unique labelled tree on 1..n with the given Prufer code.
inline AdjList prufer_to_tree(const PruferSeq& p, std::size_t n) {
  if (n < 2 || p.labels.size() != n - 2)
    throw std::invalid_argument("prufer_to_tree: code length must be n-2");
  for (int x : p.labels) {
    if (x < 1 || static_cast<std::size_t>(x) > n)
      throw std::invalid_argument("prufer_to_tree: label out of range");
  }
  AdjList t;
  t.n = n;
  t.nbrs.resize(n + 1);
  std::vector<int> degree(n + 1, 1);
  for (int x : p.labels) ++degree[x];

  const auto add_edge = [&t](int u, int v) {
    t.nbrs[u].push_back(v);
    t.nbrs[v].push_back(u);
  };
  int ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : p.labels) {
    add_edge(leaf, x);
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  add_edge(leaf, static_cast<int>(n));
  for (auto& lst : t.nbrs) std::sort(lst.begin(), lst.end());
  return t;
}

// Re-encodes a labelled tree; inverse of prufer_to_tree.
inline PruferSeq prufer_from_tree(const AdjList& t) {
  treegen::detail::check_is_tree(t);
  const std::size_t n = t.n;
  PruferSeq code;
  if (n < 2) throw std::invalid_argument("prufer_from_tree: order must be at least 2");
  std::vector<int> degree(n + 1, 0);
  std::vector<std::set<int>> nbrs(n + 1);
  for (std::size_t v = 1; v <= n; ++v) {
    degree[v] = static_cast<int>(t.nbrs[v].size());
    nbrs[v].insert(t.nbrs[v].begin(), t.nbrs[v].end());
  }
  int ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (std::size_t step = 0; step + 2 < n; ++step) {
    const int parent = *nbrs[leaf].begin();
    code.labels.push_back(parent);
    nbrs[parent].erase(leaf);
    if (--degree[parent] == 1 && parent < ptr) {
      leaf = parent;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  return code;
}

namespace detail {

template <class Fn>
void for_each_code(std::size_t n, Fn&& fn) {
  PruferSeq code;
  code.labels.assign(n >= 2 ? n - 2 : 0, 1);
  while (true) {
    fn(code);
    std::size_t i = 0;
    for (; i < code.labels.size(); ++i) {
      if (code.labels[i] < static_cast<int>(n)) {
        ++code.labels[i];
        break;
      }
      code.labels[i] = 1;
    }
    if (i == code.labels.size()) return;
  }
}

}  // namespace detail

// All free weight sequences of order n, by exhausting every labelled tree.
inline std::set<WeightSeq> brute_force_free_set(std::size_t n) {
  if (n < 2 || n > kMaxFreeOrder)
    throw std::domain_error("brute_force_free_set: order outside supported range");
  std::set<WeightSeq> out;
  detail::for_each_code(n, [&](const PruferSeq& code) {
    out.insert(fws_of_free(prufer_to_tree(code, n)));
  });
  return out;
}

// All canonical weight sequences of order n over every labelled tree and root.
inline std::set<WeightSeq> brute_force_rooted_set(std::size_t n) {
  if (n < 2 || n > kMaxRootedOrder)
    throw std::domain_error("brute_force_rooted_set: order outside supported range");
  std::set<WeightSeq> out;
  detail::for_each_code(n, [&](const PruferSeq& code) {
    const AdjList t = prufer_to_tree(code, n);
    for (int root = 1; root <= static_cast<int>(n); ++root)
      out.insert(canonical_ws_of_rooted(t, root));
  });
  return out;
}

namespace detail {

// Every weight sequence reachable by reordering children, deduplicated per
// subtree to keep the product of sibling permutations in check.
inline std::set<WeightSeq> all_orderings_ws(const AdjList& t, int v, int parent) {
  std::vector<std::vector<WeightSeq>> child_variants;
  std::size_t total = 1;
  for (int w : t.nbrs[v]) {
    if (w == parent) continue;
    const auto variants = all_orderings_ws(t, w, v);
    child_variants.emplace_back(variants.begin(), variants.end());
    total += child_variants.back().front().size();
  }
  std::set<WeightSeq> out;
  if (child_variants.empty()) {
    out.insert(WeightSeq{1});
    return out;
  }
  std::vector<std::size_t> order(child_variants.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end());
  do {
    std::vector<std::size_t> pick(child_variants.size(), 0);
    while (true) {
      WeightSeq seq;
      seq.reserve(total);
      seq.push_back(static_cast<Weight>(total));
      for (std::size_t i = 0; i < order.size(); ++i) {
        const WeightSeq& part = child_variants[order[i]][pick[order[i]]];
        seq.insert(seq.end(), part.begin(), part.end());
      }
      out.insert(std::move(seq));
      std::size_t i = 0;
      for (; i < pick.size(); ++i) {
        if (++pick[i] < child_variants[i].size()) break;
        pick[i] = 0;
      }
      if (i == pick.size()) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

}  // namespace detail

// Maximum weight sequence over every ordering of every vertex's children;
// the exhaustive counterpart of canonical_ws_of_rooted.
inline WeightSeq cws_via_max_permutation(const AdjList& t, int root) {
  treegen::detail::check_is_tree(t);
  if (t.n > kMaxPermutationOrder)
    throw std::domain_error("cws_via_max_permutation: order too large");
  const std::set<WeightSeq> all = detail::all_orderings_ws(t, root, 0);
  WeightSeq best;
  for (const WeightSeq& s : all) {
    if (best.empty() || lex_gt(s, best)) best = s;
  }
  return best;
}

}  // namespace oracle
}  // namespace treegen
