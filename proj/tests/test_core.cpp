#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "pathabs/core.hpp"
#include "pathabs/errors.hpp"
#include "pathabs/fixtures.hpp"
#include "pathabs/generators.hpp"
#include "pathabs/semiring.hpp"

using namespace pathabs;

TEST_CASE("semiring laws hold on sampled carrier values") {
  for (const char* name : {"boolean", "counting", "minplus-nonneg", "real", "maxmin", "viterbi"}) {
    const auto report = check_semiring_laws(name, 100, 7);
    CHECK_MESSAGE(report.all_pass(), name);
    CHECK(report.samples == 100);
  }
  CHECK_THROWS_AS(check_semiring_laws("tropical-ish", 10, 1), ValidationError);
}

TEST_CASE("semiring arithmetic") {
  const Semiring minplus = Semiring::by_name("minplus-nonneg");
  CHECK(minplus.add(3, 5) == 3);
  CHECK(minplus.mul(3, 5) == 8);
  CHECK(minplus.one() == 0);
  CHECK_FALSE(minplus.in_carrier(-1));
  const Semiring counting = Semiring::by_name("counting");
  CHECK(counting.add(2, 3) == 5);
  CHECK_FALSE(counting.in_carrier(1.5));
  CHECK_FALSE(counting.in_carrier(0));
  const Semiring viterbi = Semiring::by_name("viterbi");
  CHECK(viterbi.add(0.25, 0.5) == 0.5);
  CHECK(viterbi.mul(0.25, 0.5) == 0.125);
  const Semiring maxmin = Semiring::by_name("maxmin");
  CHECK(maxmin.mul(0.25, 0.5) == 0.25);
  // Absence behaves as an adjoined zero.
  CHECK(minplus.plus(std::nullopt, Entry{4}) == Entry{4});
  CHECK_FALSE(minplus.times(std::nullopt, Entry{4}).has_value());
}

TEST_CASE("digraph storage rejects loops and off-carrier values") {
  Digraph d(3);
  CHECK_THROWS_AS(d.add_arc(2, 2), ValidationError);
  CHECK_THROWS_AS(d.add_arc(1, 4), ValidationError);
  Digraph c(2, Semiring(SemiringKind::kCounting));
  CHECK_THROWS_AS(c.add_arc(1, 2, 0.5), ValidationError);
  c.add_arc(1, 2, 2);
  c.add_arc(1, 2, 1);
  CHECK(c.arc(1, 2) == Entry{3});
}

TEST_CASE("contract_blocks examples") {
  const Digraph path = Digraph::from_arcs(3, {{1, 2}, {2, 3}});
  const Digraph c = contract_blocks(path, {{1, 3}});
  CHECK(c.vertices() == std::vector<Vertex>{1, 2});
  CHECK(c.has_arc(1, 2));
  CHECK(c.has_arc(2, 1));
  CHECK(c.arc_count() == 2);
  CHECK(c.members(1) == std::vector<Vertex>{1, 3});

  Digraph m(3, Semiring(SemiringKind::kCounting));
  m.add_arc(1, 3, 2);
  m.add_arc(2, 3, 1);
  CHECK(contract_blocks(m, {{1, 2}}).arc(1, 3) == Entry{3});

  CHECK_THROWS_AS(contract_blocks(path, {{1, 2}, {2, 3}}), ValidationError);
  CHECK_THROWS_AS(contract_blocks(path, {{1, 9}}), ValidationError);
}

TEST_CASE("contraction is independent of block order") {
  Rng rng(11);
  for (int k = 0; k < 300; ++k) {
    const Semiring s = Semiring::all()[static_cast<std::size_t>(k) % Semiring::all().size()];
    const Digraph d = gen::digraph(8, 0.4, rng, s);
    const std::vector<Vertex> all = d.vertices();
    auto blocks = gen::blocks(all, rng);
    if (blocks.size() < 2) continue;
    const Digraph together = contract_blocks(d, blocks);
    Digraph stepwise = d;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) stepwise = contract_blocks(stepwise, {*it});
    if (s.kind() == SemiringKind::kReal) {
      // Floating-point sums may associate differently.
      REQUIRE(together.arc_count() == stepwise.arc_count());
      for (const auto& a : together.arcs()) CHECK(std::fabs(a.value - *stepwise.arc(a.from, a.to)) <= 1e-9);
    } else {
      CHECK(together == stepwise);
    }
  }
}

TEST_CASE("classify_vertex") {
  const auto c = classify_vertex(fixtures::hub_digraph(), 4);
  CHECK(c.minus == VertexSet{1, 2});
  CHECK(c.plusminus == VertexSet{3, 5});
  CHECK(c.plus == VertexSet{6, 7});
  CHECK(c.zero.empty());
  CHECK(c.predecessors() == VertexSet{1, 2, 3, 5});
  CHECK(c.successors() == VertexSet{3, 5, 6, 7});

  const auto single = classify_vertex(Digraph(1), 1);
  CHECK((single.minus.empty() && single.plus.empty() && single.plusminus.empty() && single.zero.empty()));
  const auto two = classify_vertex(Digraph::from_arcs(2, {{1, 2}, {2, 1}}), 1);
  CHECK(two.plusminus == VertexSet{2});
  CHECK_THROWS_AS(classify_vertex(Digraph(2), 3), ValidationError);

  Rng rng(3);
  for (int k = 0; k < 1000; ++k) {
    const Digraph d = gen::digraph(static_cast<std::size_t>(rng.uniform_int(1, 10)), rng.uniform01(), rng);
    for (Vertex v : d.vertices()) {
      const auto n = classify_vertex(d, v);
      VertexSet all{v};
      std::size_t total = 1;
      for (const auto* s : {&n.minus, &n.plusminus, &n.plus, &n.zero}) {
        all.insert(s->begin(), s->end());
        total += s->size();
      }
      CHECK(total == d.order());
      CHECK(all.size() == d.order());
    }
  }
}

TEST_CASE("strongly connected components agree with mutual reachability") {
  CHECK(strongly_connected_components(Digraph::from_arcs(2, {{1, 2}, {2, 1}})).size() == 1);
  CHECK(strongly_connected_components(Digraph::from_arcs(3, {{1, 2}, {2, 3}})).size() == 3);
  CHECK(strongly_connected_components(fixtures::cyclic_digraph()).size() == 1);

  Rng rng(5);
  for (int k = 0; k < 500; ++k) {
    const Digraph d = gen::digraph(static_cast<std::size_t>(rng.uniform_int(1, 9)), rng.uniform01() * 0.5, rng);
    const auto reach = oracle::closure(oracle::adjacency(d));
    std::map<Vertex, std::size_t> comp;
    const auto comps = strongly_connected_components(d);
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (Vertex v : comps[i]) comp[v] = i;
    REQUIRE(comp.size() == d.order());
    for (Vertex x : d.vertices())
      for (Vertex y : d.vertices())
        if (x != y) CHECK((comp[x] == comp[y]) == (reach[x][y] && reach[y][x]));
    bool cyclic = false;
    for (Vertex v : d.vertices()) cyclic = cyclic || reach[v][v];
    CHECK(is_acyclic(d) == !cyclic);
  }
}

TEST_CASE("is_acyclic examples") {
  CHECK(is_acyclic(Digraph::from_arcs(3, {{1, 2}, {2, 3}})));
  CHECK_FALSE(is_acyclic(Digraph::from_arcs(2, {{1, 2}, {2, 1}})));
  CHECK(is_acyclic(fixtures::bypass_digraph()));
}

TEST_CASE("transitive reduction") {
  const Digraph tri = fixtures::triangle_digraph();
  CHECK(transitive_reduction_dag(tri) == Digraph::from_arcs(3, {{1, 2}, {2, 3}}));
  const Digraph chain = Digraph::from_arcs(3, {{1, 2}, {2, 3}});
  CHECK(transitive_reduction_dag(chain) == chain);
  CHECK_THROWS_AS(transitive_reduction_dag(fixtures::cyclic_digraph()), ValidationError);

  Rng rng(9);
  for (int k = 0; k < 300; ++k) {
    const Digraph d = gen::dag(static_cast<std::size_t>(rng.uniform_int(1, 10)), rng.uniform01(), rng);
    const Digraph r = transitive_reduction_dag(d);
    CHECK(oracle::closure(oracle::adjacency(r)) == oracle::closure(oracle::adjacency(d)));
    // Minimal: every arc is the only route between its ends.
    for (const auto& a : r.arcs()) {
      Digraph smaller = r;
      smaller.set_arc(a.from, a.to, std::nullopt);
      CHECK_FALSE(oracle::closure(oracle::adjacency(smaller))[a.from][a.to]);
    }
  }
}

TEST_CASE("enumerate_paths") {
  const auto single = enumerate_paths(Digraph::from_arcs(2, {{1, 2}}), {1}, {2});
  CHECK(single.paths == std::vector<PathWord>{{1, 2}});
  CHECK_FALSE(single.truncated);
  CHECK(enumerate_paths(Digraph(3), {1, 2, 3}, {1, 2, 3}).paths.empty());

  const auto table = enumerate_paths(fixtures::bypass_digraph(), {3}, {2, 8});
  CHECK(table.paths.size() == 7);
  CHECK(std::is_sorted(table.paths.begin(), table.paths.end()));

  Rng fixed(1);
  const Digraph complete = gen::digraph(7, 1.0, fixed);
  const auto capped = enumerate_paths(complete, {1}, {2}, 0, 10);
  CHECK(capped.paths.size() == 10);
  CHECK(capped.truncated);

  Rng rng(13);
  for (int k = 0; k < 200; ++k) {
    const Digraph d = gen::dag(static_cast<std::size_t>(rng.uniform_int(2, 8)), rng.uniform01(), rng);
    const auto all = d.vertices();
    const auto result = enumerate_paths(d, VertexSet(all.begin(), all.end()), VertexSet(all.begin(), all.end()));
    for (const auto& w : result.paths) {
      CHECK(w.size() >= 2);
      CHECK(std::set<Vertex>(w.begin(), w.end()).size() == w.size());
      for (std::size_t i = 0; i + 1 < w.size(); ++i) CHECK(d.has_arc(w[i], w[i + 1]));
    }
    // On a DAG the number of paths of length >= 1 equals the total walk count.
    std::uint64_t walks = 0;
    for (Vertex x : all)
      for (Vertex y : all)
        if (x != y) walks += count_walks_dag(d, x, y);
    CHECK(result.paths.size() == walks);
  }
}

TEST_CASE("count_walks_dag") {
  CHECK(count_walks_dag(Digraph::from_arcs(3, {{1, 2}, {2, 3}}), 1, 3) == 1);
  CHECK(count_walks_dag(Digraph::from_arcs(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}), 1, 4) == 2);
  Digraph m(3, Semiring(SemiringKind::kCounting));
  m.add_arc(1, 2, 2);
  m.add_arc(2, 3, 1);
  CHECK(count_walks_dag(m, 1, 3) == 2);
  CHECK_THROWS_AS(count_walks_dag(fixtures::cyclic_digraph(), 1, 2), ValidationError);
}
