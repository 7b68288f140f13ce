#pragma once

#include "treegen/rooted.hpp"

namespace treegen {

namespace detail {

inline Generator<WeightSeq> uft_impl(std::size_t n, const RootedCache& cache) {
  if (n == 1) {
    const WeightSeq one{1};
    co_yield one;
    co_return;
  }
  // Rooting at the centroid bounds every root subtree by floor((n-1)/2).
  for (std::size_t q = (n - 1) / 2; q >= 1; --q) {
    auto gen = rt_helper_impl(n, q, cache);
    while (gen.next()) co_yield gen.value();
  }
}

inline Generator<WeightSeq> bft_impl(std::size_t n, const RootedCache& cache) {
  const auto& halves = cache.list(n / 2);
  WeightSeq buf;
  // Starting the inner scan at the outer index realizes a1 >= a2 without
  // per-pair comparisons, since B(n/2) is relex ordered.
  for (std::size_t i = 0; i < halves.size(); ++i) {
    for (std::size_t j = i; j < halves.size(); ++j) {
      assert(lex_ge(halves[i], halves[j]));
      buf.assign(halves[i].begin(), halves[i].end());
      buf.insert(buf.end(), halves[j].begin(), halves[j].end());
      co_yield buf;
    }
  }
}

}  // namespace detail

// F_U(n): free weight sequences of the unicentroidal free trees, relex ordered.
inline Generator<WeightSeq> uft(std::size_t n, const RootedCache& cache) {
  if (n == 0) throw std::domain_error("uft: order must be positive");
  if (n > 1) detail::check_helper_pre(n, 1, cache);
  return detail::uft_impl(n, cache);
}

// F_B(n): each unordered pair of half trees of order n/2, larger half first.
inline Generator<WeightSeq> bft(std::size_t n, const RootedCache& cache) {
  if (n < 2 || n % 2 != 0) throw std::domain_error("bft: order must be even and positive");
  if (cache.max_order() < n / 2) throw ConfigError("bft: cache bound L must be at least n/2");
  return detail::bft_impl(n, cache);
}

// F(n) = F_U(n) followed by F_B(n); the whole stream is relex ordered.
inline Generator<WeightSeq> free_trees(std::size_t n, const RootedCache& cache) {
  if (n == 0) throw std::domain_error("free_trees: order must be positive");
  return [](std::size_t n, const RootedCache& cache) -> Generator<WeightSeq> {
    auto uni = uft(n, cache);
    while (uni.next()) co_yield uni.value();
    if (n >= 2 && n % 2 == 0) {
      auto bi = bft(n, cache);
      while (bi.next()) co_yield bi.value();
    }
  }(n, cache);
}

inline std::uint64_t count_free(std::size_t n, const RootedCache& cache) {
  auto gen = free_trees(n, cache);
  std::uint64_t count = 0;
  while (gen.next()) ++count;
  return count;
}

}  // namespace treegen
