#include <doctest.h>

#include "pathabs/errors.hpp"
#include "pathabs/fixtures.hpp"
#include "pathabs/generators.hpp"
#include "pathabs/vabstract.hpp"

using namespace pathabs;

namespace {

// Arcs as color pairs; vertex colors are distinct after abstraction.
std::set<std::pair<Color, Color>> colored_arcs(const ColoredDigraph& cd) {
  std::set<std::pair<Color, Color>> out;
  for (const auto& a : cd.digraph.arcs()) out.emplace(cd.colors.at(a.from), cd.colors.at(a.to));
  return out;
}

ColorSet colors_of(const ColoredDigraph& cd) {
  ColorSet out;
  for (const auto& [_, c] : cd.colors) out.insert(c);
  return out;
}

}  // namespace

TEST_CASE("vertex abstraction table of the colored path") {
  const auto cd = fixtures::colored_path();
  struct Row {
    ColorSet L;
    ColorSet colors;
    std::set<std::pair<Color, Color>> arcs;
  };
  const std::vector<Row> table{
      {{}, {}, {}},
      {{1}, {1}, {}},
      {{2}, {2}, {}},
      {{3}, {3}, {}},
      {{1, 2}, {1, 2}, {{1, 2}, {2, 1}}},
      {{1, 3}, {1, 3}, {{1, 3}}},
      {{2, 3}, {2, 3}, {}},
      {{1, 2, 3}, {1, 2, 3}, {{1, 2}, {2, 1}, {1, 3}}},
  };
  for (const auto& row : table) {
    const auto out = vertex_abstract(cd, row.L);
    CHECK(colors_of(out) == row.colors);
    CHECK(out.digraph.order() == row.colors.size());
    CHECK(colored_arcs(out) == row.arcs);
  }
  // Block ids are the smallest members.
  CHECK(vertex_abstract(cd, {1, 3}).digraph.vertices() == std::vector<Vertex>{1, 4});
}

TEST_CASE("block contraction morphism") {
  const auto cd = fixtures::colored_path();
  const auto m = block_contraction_morphism(cd, {1}, {1, 2});
  CHECK(m.map == VertexMap{{1, 1}});
  CHECK(m.introduced == std::vector<Vertex>{2});
  CHECK(m.target == vertex_abstract(cd, {1, 2}));
  CHECK(is_colored_morphism(m));

  const auto id = block_contraction_morphism(cd, {1, 3}, {1, 3});
  for (const auto& [v, w] : id.map) CHECK(v == w);
  CHECK(id.introduced.empty());
  CHECK_THROWS_AS(block_contraction_morphism(cd, {1, 2}, {1}), ValidationError);
}

TEST_CASE("composition law over every chain of the colored path") {
  const auto cd = fixtures::colored_path();
  const std::vector<ColorSet> subsets{{}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
  auto sub = [](const ColorSet& a, const ColorSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); };
  int chains = 0;
  for (const auto& L : subsets)
    for (const auto& L1 : subsets)
      for (const auto& L2 : subsets) {
        if (!sub(L, L1) || !sub(L1, L2)) continue;
        ++chains;
        const auto composed = compose(block_contraction_morphism(cd, L1, L2), block_contraction_morphism(cd, L, L1));
        const auto direct = block_contraction_morphism(cd, L, L2);
        CHECK(composed.map == direct.map);
        CHECK(composed.introduced == direct.introduced);
      }
  // Each color sits at one of four levels of the chain.
  CHECK(chains == 64);
}

TEST_CASE("vertex count equals the number of realized colors") {
  Rng rng(21);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 8));
    const auto coloring = gen::coloring(n, 5, rng);
    const ColoredDigraph cd(gen::digraph(n, 0.4, rng), coloring);
    const ColorSet L{1, 3, 5};
    std::size_t realized = 0;
    for (Color c : L) realized += coloring.palette().count(c);
    CHECK(vertex_abstract(cd, L).digraph.order() == realized);
    // Every abstracted arc comes from some original arc between the classes.
    const auto out = vertex_abstract(cd, L);
    for (const auto& a : out.digraph.arcs()) {
      bool witnessed = false;
      for (const auto& b : cd.digraph.arcs())
        witnessed = witnessed || (coloring(b.from) == out.colors.at(a.from) && coloring(b.to) == out.colors.at(a.to));
      CHECK(witnessed);
    }
  }
}
