#include "pathabs/fixtures.hpp"

#include "pathabs/io.hpp"

namespace pathabs::fixtures {

std::string_view fidi_edges_text() {
  return R"(n 28
1 4
2 1
3 2
4 19
5 3
6 7
7 8
7 13
8 9
9 5
9 12
10 22
10 24
11 10
11 25
12 11
12 15
13 10
13 12
14 11
14 15
15 2
15 17
16 14
17 16
18 16
18 21
19 18
20 14
20 25
21 20
22 6
23 22
24 23
24 26
25 24
25 27
26 27
27 28
28 20
)";
}

std::string_view fidi_labels_text() {
  return R"(1 1
2 1
3 2
4 1
5 2
6 3
7 4
8 4
9 2
10 5
11 5
12 5
13 5
14 6
15 7
16 8
17 7
18 9
19 1
20 10
21 9
22 3
23 11
24 11
25 12
26 11
27 12
28 10
)";
}

Digraph fidi_digraph() { return parse_digraph(fidi_edges_text()); }

Coloring fidi_coloring() { return parse_labels(fidi_labels_text()); }

ColorSet fidi_kept_colors() { return {1, 2, 3, 4, 6, 7, 8, 9, 10, 11, 12}; }

ColoredDigraph colored_path() {
  return ColoredDigraph(Digraph::from_arcs(4, {{1, 2}, {2, 3}, {3, 4}}), Coloring{{1, 2, 1, 3}});
}

Digraph hub_digraph() {
  return Digraph::from_arcs(7, {{1, 4}, {2, 4}, {3, 4}, {4, 3}, {5, 4}, {4, 5}, {4, 6}, {4, 7}});
}

Digraph bypass_digraph() {
  return Digraph::from_arcs(8, {{1, 4}, {3, 5}, {4, 7}, {5, 1}, {5, 6}, {6, 8}, {7, 2}, {7, 8},
                               {1, 7}, {3, 8}, {5, 2}});
}

VertexSet bypass_dropped() { return {5, 7}; }

Digraph cyclic_digraph() {
  return Digraph::from_arcs(4, {{1, 2}, {1, 3}, {2, 3}, {3, 1}, {3, 4}, {4, 1}});
}

Digraph noncommuting_multigraph() {
  Digraph d(4, Semiring(SemiringKind::kCounting));
  d.add_arc(1, 2, 1);
  d.add_arc(1, 4, 1);
  d.add_arc(3, 1, 2);
  d.add_arc(4, 1, 1);
  return d;
}

Digraph triangle_digraph() { return Digraph::from_arcs(3, {{1, 2}, {2, 3}, {1, 3}}); }

DTCN contact_example() { return DTCN(5, {{1, 4, 1}, {5, 4, 2}, {2, 5, 3}, {4, 3, 4}}); }

}  // namespace pathabs::fixtures
