#include <doctest.h>

#include "test_support.hpp"
#include "treegen/assemble.hpp"
#include "treegen/free.hpp"

using namespace treegen;

namespace {

using EdgeSet = std::set<std::pair<int, int>>;

EdgeSet edges_of(const AdjList& t) {
  EdgeSet out;
  for (std::size_t i = 1; i <= t.n; ++i) {
    for (int j : t.nbrs[i]) {
      if (j > static_cast<int>(i)) out.insert({static_cast<int>(i), j});
    }
  }
  return out;
}

AdjList tree_from_edges(std::size_t n, const EdgeSet& edges) {
  AdjList t;
  t.n = n;
  t.nbrs.resize(n + 1);
  for (const auto& [u, v] : edges) {
    t.nbrs[u].push_back(v);
    t.nbrs[v].push_back(u);
  }
  for (auto& lst : t.nbrs) std::sort(lst.begin(), lst.end());
  return t;
}

// The order-10 tree used throughout the figures, as a labelled free tree.
const AdjList kFigTree = tree_from_edges(
    10, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {3, 6}, {2, 7}, {1, 8}, {8, 9}, {1, 10}});

}  // namespace

TEST_CASE("adj_list_from_ws follows the cursor rule") {
  CHECK(edges_of(adj_list_from_ws(WeightSeq{1, 1})) == EdgeSet{{1, 2}});
  CHECK(edges_of(adj_list_from_ws(decode_str("A421141111"))) ==
        EdgeSet{{1, 2}, {1, 6}, {1, 10}, {2, 3}, {2, 5}, {3, 4}, {6, 7}, {6, 8}, {6, 9}});
  // fws(P8): the path 4-3-2-1-5-6-7-8.
  CHECK(edges_of(adj_list_from_ws(decode_str("43214321"))) ==
        EdgeSet{{3, 4}, {2, 3}, {1, 2}, {1, 5}, {5, 6}, {6, 7}, {7, 8}});
  CHECK_THROWS_AS(adj_list_from_ws(WeightSeq{2, 2}), std::invalid_argument);
}

TEST_CASE("adj_matrix_from_ws agrees with the list form") {
  const AdjMatrix m2 = adj_matrix_from_ws(WeightSeq{1, 1});
  CHECK(m2.at(1, 2) == 1);
  CHECK(m2.at(2, 1) == 1);
  CHECK(m2.at(1, 1) == 0);

  const AdjMatrix path = adj_matrix_from_ws(WeightSeq{3, 2, 1});
  CHECK(path.at(1, 2) == 1);
  CHECK(path.at(2, 3) == 1);
  CHECK(path.at(1, 3) == 0);

  const RootedCache cache(5);
  auto gen = free_trees(9, cache);
  while (gen.next()) {
    const AdjList adj = adj_list_from_ws(gen.value());
    const AdjMatrix m = adj_matrix_from_ws(gen.value());
    std::size_t ones = 0;
    for (std::size_t i = 1; i <= m.n; ++i) {
      for (std::size_t j = 1; j <= m.n; ++j) {
        CHECK(m.at(i, j) == m.at(j, i));
        if (m.at(i, j)) ++ones;
      }
    }
    CHECK(ones == 2 * (m.n - 1));
    CHECK(edges_of(adj) == edges_of(adj_list_from_ws(gen.value())));
  }
}

TEST_CASE("converted sequences are trees") {
  const RootedCache cache(5);
  auto gen = free_trees(8, cache);
  while (gen.next()) {
    const AdjList t = adj_list_from_ws(gen.value());
    CHECK(edges_of(t).size() == t.n - 1);
    CHECK_NOTHROW(find_centroids(t));  // validates connectivity
  }
}

TEST_CASE("canonical_ws_of_rooted") {
  const AdjList star = tree_from_edges(4, {{1, 2}, {1, 3}, {1, 4}});
  CHECK(canonical_ws_of_rooted(star, 1) == WeightSeq{4, 1, 1, 1});
  const AdjList path = tree_from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK(canonical_ws_of_rooted(path, 1) == WeightSeq{4, 3, 2, 1});
  const AdjList single = tree_from_edges(1, {});
  CHECK(canonical_ws_of_rooted(single, 1) == WeightSeq{1});
  CHECK_THROWS_AS(canonical_ws_of_rooted(path, 9), std::invalid_argument);
  // The rooted figure tree, rooted at vertex 1.
  CHECK(canonical_ws_of_rooted(kFigTree, 1) == decode_str("A641111211"));
}

TEST_CASE("find_centroids") {
  CHECK(find_centroids(kFigTree) == std::vector<int>{2});
  const AdjList p8 = tree_from_edges(
      8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}});
  CHECK(find_centroids(p8) == std::vector<int>{4, 5});
  const AdjList star = tree_from_edges(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  CHECK(find_centroids(star) == std::vector<int>{1});
}

TEST_CASE("fws_of_free") {
  CHECK(fws_of_free(kFigTree) == decode_str("A421141111"));
  const AdjList p8 = tree_from_edges(
      8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}});
  CHECK(fws_of_free(p8) == decode_str("43214321"));
  const AdjList k2 = tree_from_edges(2, {{1, 2}});
  CHECK(fws_of_free(k2) == WeightSeq{1, 1});
}

TEST_CASE("fws round trip over generated free trees") {
  const RootedCache cache(6);
  for (std::size_t n = 1; n <= 10; ++n) {
    auto gen = free_trees(n, cache);
    while (gen.next()) {
      CHECK(fws_of_free(adj_list_from_ws(gen.value())) == gen.value());
    }
  }
}

TEST_CASE("equal fws coincides with brute-force isomorphism at small order") {
  // All trees on 5 labelled vertices, pairwise: equal fws iff some vertex
  // bijection maps edge sets onto each other.
  const std::size_t n = 5;
  std::vector<AdjList> trees;
  oracle::detail::for_each_code(n, [&](const oracle::PruferSeq& code) {
    trees.push_back(oracle::prufer_to_tree(code, n));
  });
  std::vector<int> perm{1, 2, 3, 4, 5};
  const auto isomorphic = [&](const AdjList& a, const AdjList& b) {
    std::vector<int> p = perm;
    do {
      EdgeSet mapped;
      for (const auto& [u, v] : edges_of(a)) {
        const int mu = p[u - 1], mv = p[v - 1];
        mapped.insert({std::min(mu, mv), std::max(mu, mv)});
      }
      if (mapped == edges_of(b)) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  };
  std::mt19937 rng(5);
  for (int i = 0; i < 40; ++i) {
    const AdjList& a = trees[rng() % trees.size()];
    const AdjList& b = trees[rng() % trees.size()];
    CHECK((fws_of_free(a) == fws_of_free(b)) == isomorphic(a, b));
  }
}

TEST_CASE("assemble_adj equals direct conversion") {
  const RootedCache cache(6, /*build_adj_cache=*/true);

  SUBCASE("worked examples") {
    CHECK(edges_of(assemble_adj(5, WeightSeq{2, 1}, WeightSeq{2, 1}, cache)) ==
          EdgeSet{{1, 2}, {2, 3}, {1, 4}, {4, 5}});
    CHECK(edges_of(assemble_adj_bi(WeightSeq{1}, WeightSeq{1}, cache)) == EdgeSet{{1, 2}});
    const WeightSeq a{3, 2, 1};
    const WeightSeq bTail{3, 2, 1, 1};  // b = [5,3,2,1,1] stripped
    CHECK(edges_of(assemble_adj(8, a, bTail, cache)) ==
          edges_of(adj_list_from_ws(decode_str("83213211"))));
  }

  SUBCASE("all generated free trees up to order 12") {
    const RootedCache gen_cache(7, /*build_adj_cache=*/true);
    for (std::size_t n = 3; n <= 12; ++n) {
      auto gen = free_trees(n, gen_cache);
      while (gen.next()) {
        const WeightSeq& s = gen.value();
        AdjList assembled;
        if (s[0] == n) {
          const std::size_t q = s[1];
          const WeightSpan a = WeightSpan(s).subspan(1, q);
          const WeightSpan bTail = WeightSpan(s).subspan(1 + q);
          assembled = assemble_adj(n, a, bTail, gen_cache);
        } else {
          assembled = assemble_adj_bi(WeightSpan(s).first(n / 2),
                                      WeightSpan(s).subspan(n / 2), gen_cache);
        }
        CHECK(assembled == adj_list_from_ws(s));
      }
    }
  }

  SUBCASE("cache miss falls back to direct conversion") {
    const RootedCache no_adj(6);  // no adjacency cache at all
    CHECK(edges_of(assemble_adj(5, WeightSeq{2, 1}, WeightSeq{2, 1}, no_adj)) ==
          EdgeSet{{1, 2}, {2, 3}, {1, 4}, {4, 5}});
  }
}
