#pragma once

#include <string_view>
#include <vector>

#include "pathabs/digraph.hpp"
#include "pathabs/partitions.hpp"
#include "pathabs/temporal.hpp"
#include "pathabs/vabstract.hpp"

// Small worked examples shared by tests, the acceptance suite and the CLI.
namespace pathabs::fixtures {

// Financial-district street network: 28 intersections, 40 one-way segments.
std::string_view fidi_edges_text();
// 28-line "vertex color" file grouping intersections into 12 regions.
std::string_view fidi_labels_text();
Digraph fidi_digraph();
Coloring fidi_coloring();
// Regions kept by the reference abstraction: all but region 5.
ColorSet fidi_kept_colors();

// Path 1->2->3->4 colored (1,2,1,3).
ColoredDigraph colored_path();

// Hub vertex 4 with in-arcs from 1,2,3,5 and out-arcs to 3,5,6,7.
Digraph hub_digraph();

// Eight-vertex digraph whose bypass of {5,7} separates the correct set
// bypass from the naive arc-splicing rule.
Digraph bypass_digraph();
VertexSet bypass_dropped();

// Four-vertex cyclic digraph collapsed by the partial partition 1|24.
Digraph cyclic_digraph();

// Counting-semiring multigraph on which the detours at 1 and 4 disagree at (3,2).
Digraph noncommuting_multigraph();

// u->v->w plus u->w, as vertices 1,2,3.
Digraph triangle_digraph();

// Contacts (1,4,1), (5,4,2), (2,5,3), (4,3,4) on five vertices.
DTCN contact_example();

}  // namespace pathabs::fixtures
