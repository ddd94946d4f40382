#pragma once

#include <map>
#include <vector>

#include "pathabs/digraph.hpp"
#include "pathabs/partitions.hpp"

namespace pathabs {

// A digraph whose vertices each carry a color.
struct ColoredDigraph {
  Digraph digraph;
  std::map<Vertex, Color> colors;

  ColoredDigraph() = default;
  ColoredDigraph(Digraph d, std::map<Vertex, Color> c);
  // Colors vertex i with c.labels[i-1]; c must have one entry per vertex 1..n.
  ColoredDigraph(Digraph d, const Coloring& c);

  friend bool operator==(const ColoredDigraph&, const ColoredDigraph&) = default;
};

// Induced subgraph on the vertices colored by L, with each color class
// contracted to its smallest member. Colors are carried over unchanged
// (not re-canonicalized).
ColoredDigraph vertex_abstract(const ColoredDigraph& cd, const ColorSet& L);

using VertexMap = std::map<Vertex, Vertex>;

// The morphism between the abstractions at L and at a superset Lp.
struct AbstractionMorphism {
  ColorSet from_colors;
  ColorSet to_colors;
  ColoredDigraph source;  // vertex_abstract(cd, from_colors)
  ColoredDigraph target;  // vertex_abstract(cd, to_colors)
  VertexMap map;          // source vertex -> target vertex
  std::vector<Vertex> introduced;  // target vertices not in the image (colors Lp \ L)
};

AbstractionMorphism block_contraction_morphism(const ColoredDigraph& cd, const ColorSet& L,
                                               const ColorSet& Lp);

// g after f; throws if f's target is not g's source.
AbstractionMorphism compose(const AbstractionMorphism& g, const AbstractionMorphism& f);

// Vertex map preserves colors and sends every arc to an arc.
bool is_colored_morphism(const AbstractionMorphism& m);

}  // namespace pathabs
