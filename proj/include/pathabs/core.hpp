#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "pathabs/digraph.hpp"

namespace pathabs {

using VertexSet = std::set<Vertex>;
using VertexBlock = std::vector<Vertex>;
using PathWord = std::vector<Vertex>;

// Identifies each block to one vertex carrying the smallest member id.
// Arcs into, out of, and between blocks are summed in the semiring;
// block-internal arcs disappear. Blocks must be disjoint.
Digraph contract_blocks(const Digraph& d, const std::vector<VertexBlock>& blocks);

struct NeighborClassification {
  Vertex vertex = 0;
  VertexSet minus;      // in-neighbors only
  VertexSet plusminus;  // both directions
  VertexSet plus;       // out-neighbors only
  VertexSet zero;       // not adjacent

  VertexSet predecessors() const;
  VertexSet successors() const;
};

NeighborClassification classify_vertex(const Digraph& d, Vertex v);

// Components sorted internally and ordered by smallest member.
std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& d);

bool is_acyclic(const Digraph& d);

// Throws ValidationError on cyclic input: the reduction is not unique there.
Digraph transitive_reduction_dag(const Digraph& d);

// reach[i][j] over vertices() order; reach[i][i] is false unless i lies on a cycle.
std::vector<std::vector<bool>> reachability_matrix(const Digraph& d);

bool has_path(const Digraph& d, Vertex from, Vertex to);

struct PathEnumeration {
  std::vector<PathWord> paths;
  bool truncated = false;
};

// Simple paths with at least one arc from a vertex of `from` to a vertex of
// `to`, in lexicographic order. max_len bounds the number of arcs; 0 means
// "use the vertex count", and max_count 0 means the default cap of 10^6.
PathEnumeration enumerate_paths(const Digraph& d, const VertexSet& from, const VertexSet& to,
                                std::size_t max_len = 0, std::size_t max_count = 0);

VertexSet sources(const Digraph& d);
VertexSet sinks(const Digraph& d);

// Number of walks x -> y in an acyclic digraph, with counting-semiring arc
// values taken as multiplicities. Throws on cyclic input or overflow.
std::uint64_t count_walks_dag(const Digraph& d, Vertex x, Vertex y);

}  // namespace pathabs
