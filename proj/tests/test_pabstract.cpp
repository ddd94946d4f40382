#include <doctest.h>

#include "oracle.hpp"
#include "pathabs/errors.hpp"
#include "pathabs/fixtures.hpp"
#include "pathabs/generators.hpp"
#include "pathabs/pabstract.hpp"

using namespace pathabs;

namespace {

std::set<Arc> arc_pairs(const Digraph& d) {
  std::set<Arc> out;
  for (const auto& a : d.arcs()) out.emplace(a.from, a.to);
  return out;
}

}  // namespace

TEST_CASE("detour and bypass at the hub") {
  const Digraph d = fixtures::hub_digraph();
  const Digraph b = bypass(d, 4);
  CHECK_FALSE(b.has_vertex(4));
  const std::set<Arc> expected{{1, 3}, {1, 5}, {1, 6}, {1, 7}, {2, 3}, {2, 5}, {2, 6},
                               {2, 7}, {3, 6}, {3, 7}, {5, 6}, {5, 7}, {3, 5}, {5, 3}};
  CHECK(arc_pairs(b) == expected);
  const Digraph t = detour(d, 4);
  CHECK(t.has_vertex(4));
  CHECK(t.predecessors(4).empty());
  CHECK(t.successors(4).empty());
  CHECK(arc_pairs(t) == expected);
}

TEST_CASE("triangle detour leaves a single arc") {
  const Digraph t = detour(fixtures::triangle_digraph(), 2);
  CHECK(arc_pairs(t) == std::set<Arc>{{1, 3}});
  CHECK(t.order() == 3);
}

TEST_CASE("detour matches the matrix oracle") {
  Rng rng(31);
  for (int k = 0; k < 500; ++k) {
    const Digraph d = gen::digraph(static_cast<std::size_t>(rng.uniform_int(1, 8)), rng.uniform01(), rng);
    for (Vertex v : d.vertices()) CHECK(oracle::adjacency(detour(d, v)) == oracle::detour(oracle::adjacency(d), v));
  }
}

TEST_CASE("set bypass versus naive splicing") {
  const Digraph d = fixtures::bypass_digraph();
  const auto U = fixtures::bypass_dropped();
  const std::set<Arc> correct{{1, 2}, {1, 4}, {1, 8}, {3, 1}, {3, 2}, {3, 6}, {3, 8}, {4, 2}, {4, 8}, {6, 8}};
  CHECK(arc_pairs(bypass_set(d, U)) == correct);
  std::set<Arc> naive = arc_pairs(naive_bypass(d, U));
  std::set<Arc> extra;
  std::set_difference(naive.begin(), naive.end(), correct.begin(), correct.end(), std::inserter(extra, extra.end()));
  CHECK(std::includes(naive.begin(), naive.end(), correct.begin(), correct.end()));
  CHECK(extra == std::set<Arc>{{1, 6}, {4, 1}, {4, 6}});
}

TEST_CASE("detour_set is order independent") {
  Rng rng(37);
  for (int k = 0; k < 200; ++k) {
    const Digraph d = gen::digraph(static_cast<std::size_t>(rng.uniform_int(2, 7)), rng.uniform01(), rng);
    const auto U = gen::subset(d.vertices(), 0.5, rng);
    const Digraph checked = detour_set(d, U, {.verify_order_independence = true});
    std::vector<Vertex> order(U.rbegin(), U.rend());
    Digraph folded = d;
    for (Vertex u : order) folded = detour(folded, u);
    CHECK(checked == folded);
  }
  CHECK_THROWS_AS(detour(Digraph(2, Semiring(SemiringKind::kCounting)), 1), ValidationError);
}

TEST_CASE("bypass keeps reachability between survivors") {
  Rng rng(41);
  for (int k = 0; k < 300; ++k) {
    const Digraph d = gen::digraph(static_cast<std::size_t>(rng.uniform_int(2, 8)), rng.uniform01() * 0.5, rng);
    const auto U = gen::subset(d.vertices(), 0.4, rng);
    const Digraph b = bypass_set(d, U);
    const auto before = oracle::closure(oracle::adjacency(d));
    const auto after = oracle::closure(oracle::adjacency(b));
    for (Vertex x : b.vertices())
      for (Vertex y : b.vertices())
        if (x != y) CHECK(before[x][y] == after[x][y]);
  }
}

TEST_CASE("project_path") {
  CHECK(project_path({3, 5, 1, 4, 7, 2}, {5, 7}) == PathWord{3, 1, 4, 2});
  CHECK(project_path({1, 2, 3, 1, 3, 4, 1, 2, 3, 4}, {3}) == PathWord{1, 2, 1, 4, 1, 2, 4});
  CHECK(project_path({1, 2, 3}, {}) == PathWord{1, 2, 3});
}

TEST_CASE("source-target paths correspond under the bypass") {
  const Digraph d = fixtures::bypass_digraph();
  const auto U = fixtures::bypass_dropped();
  const Digraph b = bypass_set(d, U);
  std::set<PathWord> projected;
  for (const auto& w : enumerate_paths(d, sources(d), sinks(d)).paths) projected.insert(project_path(w, U));
  CHECK(projected.size() == 7);
  const auto direct = enumerate_paths(b, {3}, {2, 8}).paths;
  CHECK(projected == std::set<PathWord>(direct.begin(), direct.end()));
  // The reduction keeps reachability but not the path count: 1->2, 1->8,
  // 3->2 and 3->8 are all implied by longer routes.
  const Digraph r = transitive_reduction_dag(b);
  CHECK(oracle::closure(oracle::adjacency(r)) == oracle::closure(oracle::adjacency(b)));
  CHECK(enumerate_paths(r, {3}, {2, 8}).paths ==
        std::vector<PathWord>{{3, 1, 4, 2}, {3, 1, 4, 8}, {3, 6, 8}});
}

TEST_CASE("path abstraction examples") {
  const Digraph d = fixtures::cyclic_digraph();
  const PartialPartition p(4, {{1}, {2, 4}});
  const Digraph a = path_abstract(d, p);
  CHECK(a.vertices() == std::vector<Vertex>{1, 2});
  CHECK(arc_pairs(a) == std::set<Arc>{{1, 2}, {2, 1}});
  CHECK(a.members(2) == std::vector<Vertex>{2, 4});
  CHECK(path_abstract_contract_first(d, p) == a);

  const PartialPartition discrete(4, {{1}, {2}, {3}, {4}});
  CHECK(path_abstract(d, discrete) == d);

  const Digraph fidi = fixtures::fidi_digraph();
  const auto pi = partition_from_labels(fixtures::fidi_coloring(), fixtures::fidi_kept_colors());
  CHECK(path_abstract(fidi, pi).arc_count() == 27);
  CHECK(path_abstract_contract_first(fidi, pi) == path_abstract(fidi, pi));
  CHECK_THROWS_AS(path_abstract(d, PartialPartition(5, {{1}})), ValidationError);
}

TEST_CASE("contract-first and bypass-first path abstraction agree") {
  Rng rng(43);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 8));
    const Digraph d = gen::digraph(n, rng.uniform01() * 0.6, rng);
    const auto c = gen::coloring(n, 4, rng);
    const auto keep = gen::subset(std::vector<Vertex>{1, 2, 3, 4}, 0.6, rng);
    const auto p = partition_from_labels(c, ColorSet(keep.begin(), keep.end()));
    CHECK(path_abstract(d, p) == path_abstract_contract_first(d, p));
  }
}
