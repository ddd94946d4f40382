#include "pathabs/vabstract.hpp"

#include <algorithm>

#include "pathabs/core.hpp"
#include "pathabs/errors.hpp"

namespace pathabs {

ColoredDigraph::ColoredDigraph(Digraph d, std::map<Vertex, Color> c)
    : digraph(std::move(d)), colors(std::move(c)) {
  if (colors.size() != digraph.order())
    throw ValidationError("coloring does not cover the vertex set");
  for (Vertex v : digraph.vertices())
    if (!colors.count(v)) throw ValidationError("vertex " + std::to_string(v) + " has no color");
}

ColoredDigraph::ColoredDigraph(Digraph d, const Coloring& c) : digraph(std::move(d)) {
  if (c.size() != digraph.order())
    throw ValidationError("coloring length " + std::to_string(c.size()) +
                          " does not match vertex count " + std::to_string(digraph.order()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto v = static_cast<Vertex>(i + 1);
    if (!digraph.has_vertex(v)) throw ValidationError("coloring expects vertices 1..n");
    colors[v] = c.labels[i];
  }
}

ColoredDigraph vertex_abstract(const ColoredDigraph& cd, const ColorSet& L) {
  Digraph induced = cd.digraph;
  std::map<Color, VertexBlock> classes;
  for (const auto& [v, color] : cd.colors) {
    if (L.count(color))
      classes[color].push_back(v);
    else
      induced.remove_vertex(v);
  }
  std::vector<VertexBlock> blocks;
  std::map<Vertex, Color> colors;
  for (auto& [color, block] : classes) {
    colors[*std::min_element(block.begin(), block.end())] = color;
    blocks.push_back(std::move(block));
  }
  return ColoredDigraph(contract_blocks(induced, blocks), std::move(colors));
}

AbstractionMorphism block_contraction_morphism(const ColoredDigraph& cd, const ColorSet& L,
                                               const ColorSet& Lp) {
  if (!std::includes(Lp.begin(), Lp.end(), L.begin(), L.end()))
    throw ValidationError("morphism needs L to be a subset of Lp");
  AbstractionMorphism m;
  m.from_colors = L;
  m.to_colors = Lp;
  m.source = vertex_abstract(cd, L);
  m.target = vertex_abstract(cd, Lp);
  // A source vertex is the class of its color; that class is unchanged in the target.
  std::map<Color, Vertex> target_of_color;
  for (const auto& [v, color] : m.target.colors) target_of_color[color] = v;
  for (const auto& [v, color] : m.source.colors) m.map[v] = target_of_color.at(color);
  for (const auto& [v, color] : m.target.colors)
    if (!L.count(color)) m.introduced.push_back(v);
  return m;
}

AbstractionMorphism compose(const AbstractionMorphism& g, const AbstractionMorphism& f) {
  if (!(f.target == g.source)) throw ValidationError("morphisms are not composable");
  AbstractionMorphism out;
  out.from_colors = f.from_colors;
  out.to_colors = g.to_colors;
  out.source = f.source;
  out.target = g.target;
  for (const auto& [v, w] : f.map) out.map[v] = g.map.at(w);
  std::set<Vertex> image;
  for (const auto& [_, w] : out.map) image.insert(w);
  for (Vertex v : out.target.digraph.vertices())
    if (!image.count(v)) out.introduced.push_back(v);
  return out;
}

bool is_colored_morphism(const AbstractionMorphism& m) {
  for (const auto& [v, w] : m.map) {
    if (!m.target.digraph.has_vertex(w)) return false;
    if (m.source.colors.at(v) != m.target.colors.at(w)) return false;
  }
  for (const auto& a : m.source.digraph.arcs())
    if (!m.target.digraph.has_arc(m.map.at(a.from), m.map.at(a.to))) return false;
  return true;
}

}  // namespace pathabs
