#pragma once

#include "pathabs/core.hpp"
#include "pathabs/digraph.hpp"
#include "pathabs/partitions.hpp"

namespace pathabs {

// Boolean detour at v: every arc touching v is removed and every
// predecessor of v is joined to every distinct successor of v. v stays in
// the vertex set as an isolated vertex.
Digraph detour(const Digraph& d, Vertex v);

// Detour followed by deleting v. Surviving ids are unchanged.
Digraph bypass(const Digraph& d, Vertex v);

struct DetourSetOptions {
  // Also fold in descending order and throw InvariantError if the results differ.
  bool verify_order_independence = false;
};

// Folds detour over U in ascending order.
Digraph detour_set(const Digraph& d, const VertexSet& U, DetourSetOptions options = {});
Digraph bypass_set(const Digraph& d, const VertexSet& U, DetourSetOptions options = {});

// The incorrect one-shot construction: join every external predecessor of U
// to every distinct external successor of U, then delete U. Kept only so
// tests and the CLI can show how it differs from bypass_set.
Digraph naive_bypass(const Digraph& d, const VertexSet& U);

// Drops the letters in U from a word.
PathWord project_path(const PathWord& w, const VertexSet& U);

// Bypass everything outside supp p, then contract each block of p. p must be
// a partial partition of [max vertex id of d].
Digraph path_abstract(const Digraph& d, const PartialPartition& p);
// Same result, contracting before bypassing.
Digraph path_abstract_contract_first(const Digraph& d, const PartialPartition& p);

}  // namespace pathabs
