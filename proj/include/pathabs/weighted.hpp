#pragma once

#include <optional>

#include "pathabs/core.hpp"
#include "pathabs/digraph.hpp"

namespace pathabs {

// Semiring detour: the row and column of v are cleared and every other
// off-diagonal entry becomes mu(x,y) + mu(x,v) * mu(v,y).
// On the boolean semiring this coincides arc for arc with detour().
Digraph weighted_detour(const Digraph& d, Vertex v);

// (d detour v) detour w.
Digraph double_detour(const Digraph& d, Vertex v, Vertex w);

// The six-term closed form of double_detour at an entry (x,y) with x != y
// and x,y outside {v,w}.
Entry six_term_expansion(const Digraph& d, Vertex v, Vertex w, Vertex x, Vertex y);

struct CommutationVerdict {
  bool commute = true;
  // First entry (x,y), in lexicographic order, at which the two orders differ.
  std::optional<Arc> witness;
};

// Decides whether detours at v and w commute without forming either double
// detour: they can only differ when mu(v,w) * mu(w,v) is present, and then
// only at entries where mu(x,v) mu(v,y) != mu(x,w) mu(w,y). Candidates are
// confirmed against the full six-term sums, so the verdict is exact in every
// semiring (for counting multigraphs the confirmation never rejects).
CommutationVerdict detours_commute(const Digraph& d, Vertex v, Vertex w);

// The bare two-clause criterion, without the confirmation step.
bool noncommutation_criterion(const Digraph& d, Vertex v, Vertex w);

// contract({v,w}) after detour(u) equals detour(u) after contract({v,w}).
bool weighted_contract_commutes(const Digraph& d, Vertex u, Vertex v, Vertex w);

// Folds weighted_detour over U in ascending order. For cyclic input every
// consecutive pair is checked online and a ValidationError is thrown as soon
// as one fails to commute.
Digraph weighted_detour_set(const Digraph& d, const VertexSet& U);

// A digraph has no 2-cycles / no 3-cycle through v.
bool has_two_cycle(const Digraph& d);
bool has_three_cycle_through(const Digraph& d, Vertex v);

}  // namespace pathabs
