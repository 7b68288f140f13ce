#pragma once

#include <cassert>
#include <cstdint>
#include <unordered_map>

#include "treegen/adjacency.hpp"
#include "treegen/generator.hpp"
#include "treegen/weight_seq.hpp"

namespace treegen {

namespace detail {

inline std::string adj_cache_key(WeightSpan s) {
  return s.empty() || s[std::max<std::size_t>(0, 0)] > 35 ? encode_decimal(s) : encode_str(s);
}

}  // namespace detail

// Immutable tables of canonical weight sequences for small orders:
// B(k) for k <= L (relex ordered), the stripped variants B#(k), and the
// start-index table for the second-weight partitions B_q(n). Optionally
// also caches the adjacency list of every cached sequence, keyed by its
// encoded string, for fast assembly of adjacency output.
class RootedCache {
 public:
  explicit RootedCache(std::size_t L, bool build_adj_cache = false);

  std::size_t max_order() const { return lists_.size() - 1; }

  // B(k), relex ordered.
  const std::vector<WeightSeq>& list(std::size_t k) const {
    if (k < 1 || k > max_order()) throw std::out_of_range("RootedCache::list: order out of range");
    return lists_[k];
  }

  // B#(k): each element of B(k) with its first weight removed.
  const std::vector<WeightSeq>& stripped(std::size_t k) const {
    if (k < 1 || k > max_order())
      throw std::out_of_range("RootedCache::stripped: order out of range");
    return stripped_[k];
  }

  // 1-based index of the first element of B(n) whose second weight is q.
  std::size_t qstart(std::size_t n, std::size_t q) const { return qstart_index(n, q) + 1; }

  // Same, 0-based.
  std::size_t qstart_index(std::size_t n, std::size_t q) const {
    if (n < 2 || n > max_order() || q < 1 || q >= n)
      throw std::out_of_range("RootedCache::qstart: arguments out of range");
    return qstart_[n][q];
  }

  bool has_adj_cache() const { return has_adj_; }

  // Cached adjacency list for a cached sequence, or nullptr.
  const AdjList* cached_adj(WeightSpan s) const {
    if (!has_adj_) return nullptr;
    const auto it = adj_.find(detail::adj_cache_key(s));
    return it == adj_.end() ? nullptr : &it->second;
  }

 private:
  std::vector<std::vector<WeightSeq>> lists_;     // lists_[k] = B(k), k <= L
  std::vector<std::vector<WeightSeq>> stripped_;  // stripped_[k] = B#(k)
  std::vector<std::vector<std::size_t>> qstart_;  // qstart_[n][q], 0-based
  std::unordered_map<std::string, AdjList> adj_;
  bool has_adj_ = false;
};

inline Generator<WeightSeq> rooted_trees(std::size_t n, const RootedCache& cache);

namespace detail {

// Reference helper (the unoptimized recursion): emits B_q(n) in relex order.
inline Generator<WeightSeq> rt_helper_ref_impl(std::size_t n, std::size_t q);

inline Generator<WeightSeq> rooted_trees_ref_impl(std::size_t n) {
  if (n == 1) {
    const WeightSeq one{1};
    co_yield one;
    co_return;
  }
  for (std::size_t q = n - 1; q >= 1; --q) {
    auto gen = rt_helper_ref_impl(n, q);
    while (gen.next()) co_yield gen.value();
  }
}

inline Generator<WeightSeq> rt_helper_ref_impl(std::size_t n, std::size_t q) {
  WeightSeq buf;
  auto as = rooted_trees_ref_impl(q);
  while (as.next()) {
    const WeightSeq a = as.value();
    if (q == n - 1) {
      buf.assign(1, static_cast<Weight>(n));
      buf.insert(buf.end(), a.begin(), a.end());
      co_yield buf;
      continue;
    }
    const std::size_t newq = std::min(n - q - 1, q);
    for (std::size_t r = newq; r >= 1; --r) {
      auto bs = rt_helper_ref_impl(n - q, r);
      while (bs.next()) {
        const WeightSeq& b = bs.value();
        const WeightSpan btail = WeightSpan(b).subspan(1);
        if (succ_geq(a, btail)) {
          buf.assign(1, static_cast<Weight>(n));
          buf.insert(buf.end(), a.begin(), a.end());
          buf.insert(buf.end(), btail.begin(), btail.end());
          co_yield buf;
        }
      }
    }
  }
}

// Iterates B(k): table-backed when cached, recursive stream otherwise.
inline Generator<WeightSeq> b_stream(std::size_t k, const RootedCache& cache) {
  if (k <= cache.max_order()) {
    for (const WeightSeq& s : cache.list(k)) co_yield s;
  } else {
    auto gen = rooted_trees(k, cache);
    while (gen.next()) co_yield gen.value();
  }
}

inline Generator<WeightSeq> rt_helper_impl(std::size_t n, std::size_t q,
                                           const RootedCache& cache) {
  const std::size_t L = cache.max_order();
  WeightSeq buf;

  if (q == 1) {
    buf.assign(n, 1);
    buf[0] = static_cast<Weight>(n);
    co_yield buf;
    co_return;
  }
  if (q == 2) {
    for (std::size_t t = (n - 1) / 2; t >= 1; --t) {
      buf.clear();
      buf.push_back(static_cast<Weight>(n));
      for (std::size_t i = 0; i < t; ++i) {
        buf.push_back(2);
        buf.push_back(1);
      }
      buf.resize(n, 1);
      co_yield buf;
    }
    co_return;
  }
  if (q == n - 1) {
    auto as = b_stream(q, cache);
    while (as.next()) {
      const WeightSeq& a = as.value();
      buf.assign(1, static_cast<Weight>(n));
      buf.insert(buf.end(), a.begin(), a.end());
      co_yield buf;
    }
    co_return;
  }
  if (q == n - 2) {
    auto as = b_stream(q, cache);
    while (as.next()) {
      const WeightSeq& a = as.value();
      buf.assign(1, static_cast<Weight>(n));
      buf.insert(buf.end(), a.begin(), a.end());
      buf.push_back(1);
      co_yield buf;
    }
    co_return;
  }
  if (q >= (n + 1) / 2) {
    // r < q throughout, so no sibling-order checks are needed.
    const auto& btails = cache.stripped(n - q);
    auto as = b_stream(q, cache);
    while (as.next()) {
      const WeightSeq a = as.value();
      for (const WeightSeq& btail : btails) {
        buf.assign(1, static_cast<Weight>(n));
        buf.insert(buf.end(), a.begin(), a.end());
        buf.insert(buf.end(), btail.begin(), btail.end());
        co_yield buf;
      }
    }
    co_return;
  }
  if (q == (n - 1) / 2) {
    // The k-th a first pairs with b at index start + k: for odd n the first
    // valid b has b# = a; for even n the |B(n/2)| entries with a larger
    // first subtree are skipped as well.
    std::size_t start = (n % 2 == 0) ? cache.list(n / 2).size() : 0;
    const auto& btails = cache.stripped(n - q);
    for (const WeightSeq& a : cache.list(q)) {
      for (std::size_t i = start; i < btails.size(); ++i) {
        assert(succ_geq(a, btails[i]));
        buf.assign(1, static_cast<Weight>(n));
        buf.insert(buf.end(), a.begin(), a.end());
        buf.insert(buf.end(), btails[i].begin(), btails[i].end());
        co_yield buf;
      }
      ++start;
    }
    co_return;
  }
  if (q >= n - L) {
    // b iterates a suffix of B(n-q); the cursor only ever advances because
    // B(q) is relex ordered.
    std::size_t start = cache.qstart_index(n - q, q);
    const auto& btails = cache.stripped(n - q);
    for (const WeightSeq& a : cache.list(q)) {
      while (start < btails.size() && !succ_geq(a, btails[start])) ++start;
      for (std::size_t i = start; i < btails.size(); ++i) {
        buf.assign(1, static_cast<Weight>(n));
        buf.insert(buf.end(), a.begin(), a.end());
        buf.insert(buf.end(), btails[i].begin(), btails[i].end());
        co_yield buf;
      }
    }
    co_return;
  }
  // Deep recursion: q <= n-q-1 here, so the r-range is just q..1.
  for (const WeightSeq& a : cache.list(q)) {
    for (std::size_t r = q; r >= 1; --r) {
      auto bs = rt_helper_impl(n - q, r, cache);
      bool emitting = r != q;
      while (bs.next()) {
        const WeightSeq& b = bs.value();
        const WeightSpan btail = WeightSpan(b).subspan(1);
        if (!emitting) {
          if (!succ_geq(a, btail)) continue;
          emitting = true;  // holds for all subsequent b by relex order
        }
        buf.assign(1, static_cast<Weight>(n));
        buf.insert(buf.end(), a.begin(), a.end());
        buf.insert(buf.end(), btail.begin(), btail.end());
        co_yield buf;
      }
    }
  }
}

inline void check_helper_pre(std::size_t n, std::size_t q, const RootedCache& cache) {
  if (q < 1 || q > n - 1) throw std::domain_error("rt_helper: q out of range");
  if (cache.max_order() < n / 2 + 1)
    throw ConfigError("rt_helper: cache bound L must be at least floor(n/2)+1");
}

}  // namespace detail

// B_q(n) via the unoptimized reference recursion; differential-test anchor.
inline Generator<WeightSeq> rt_helper_ref(std::size_t n, std::size_t q) {
  if (q < 1 || q > n - 1) throw std::domain_error("rt_helper_ref: q out of range");
  return detail::rt_helper_ref_impl(n, q);
}

// B_q(n) via the cached branch structure; identical output to rt_helper_ref.
inline Generator<WeightSeq> rt_helper(std::size_t n, std::size_t q, const RootedCache& cache) {
  detail::check_helper_pre(n, q, cache);
  return detail::rt_helper_impl(n, q, cache);
}

// B(n) in relex order. For n <= L+1 every helper call is table-backed; for
// larger n the helpers stream B(q) recursively until they bottom out in the
// cache (which still requires L >= floor(n/2)+1).
inline Generator<WeightSeq> rooted_trees(std::size_t n, const RootedCache& cache) {
  if (n == 0) throw std::domain_error("rooted_trees: order must be positive");
  if (n > 1) detail::check_helper_pre(n, 1, cache);
  return [](std::size_t n, const RootedCache& cache) -> Generator<WeightSeq> {
    if (n == 1) {
      const WeightSeq one{1};
      co_yield one;
      co_return;
    }
    if (n <= cache.max_order()) {
      for (const WeightSeq& s : cache.list(n)) co_yield s;
      co_return;
    }
    for (std::size_t q = n - 1; q >= 1; --q) {
      auto gen = detail::rt_helper_impl(n, q, cache);
      while (gen.next()) co_yield gen.value();
    }
  }(n, cache);
}

inline std::uint64_t count_rooted(std::size_t n, const RootedCache& cache) {
  auto gen = rooted_trees(n, cache);
  std::uint64_t count = 0;
  while (gen.next()) ++count;
  return count;
}

inline RootedCache init_cache(std::size_t L, bool build_adj_cache = false) {
  return RootedCache(L, build_adj_cache);
}

inline RootedCache::RootedCache(std::size_t L, bool build_adj_cache) {
  if (L < 4) throw ConfigError("RootedCache: cache bound L must be at least 4");
  lists_.resize(L + 1);
  stripped_.resize(L + 1);
  qstart_.resize(L + 1);
  lists_[1] = {{1}};
  lists_[2] = {{2, 1}};
  lists_[3] = {{3, 2, 1}, {3, 1, 1}};
  lists_[4] = {{4, 3, 2, 1}, {4, 3, 1, 1}, {4, 2, 1, 1}, {4, 1, 1, 1}};

  const auto derive = [this](std::size_t k) {
    if (k >= 2) {
      stripped_[k].reserve(lists_[k].size());
      for (const WeightSeq& s : lists_[k]) stripped_[k].push_back(strip_root(s));
    }
    if (k >= 2) {
      // Second weights run k-1, k-2, ..., 1 along B(k) (no B_q(k) is empty);
      // record where each value first appears.
      qstart_[k].assign(k, 0);
      std::size_t prev = k;
      for (std::size_t i = 0; i < lists_[k].size(); ++i) {
        const std::size_t w = lists_[k][i][1];
        if (w < prev) {
          assert(w == prev - 1);
          qstart_[k][w] = i;
          prev = w;
        }
      }
      assert(prev == 1);
    }
  };
  for (std::size_t k = 1; k <= std::min<std::size_t>(4, L); ++k) derive(k);

  // Each B(k) is built from the already-filled smaller tables: during this
  // loop the helpers only touch orders below k.
  for (std::size_t k = 5; k <= L; ++k) {
    for (std::size_t q = k - 1; q >= 1; --q) {
      auto gen = detail::rt_helper_impl(k, q, *this);
      while (gen.next()) lists_[k].push_back(gen.value());
    }
    derive(k);
  }

  if (build_adj_cache) {
    has_adj_ = true;
    for (std::size_t k = 1; k <= L; ++k) {
      for (const WeightSeq& s : lists_[k])
        adj_.emplace(detail::adj_cache_key(s), adj_list_from_ws(s, /*add_centroid_edge=*/false));
    }
  }
}

}  // namespace treegen
