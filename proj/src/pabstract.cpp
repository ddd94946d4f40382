#include "pathabs/pabstract.hpp"

#include <algorithm>
#include <string>

#include "pathabs/errors.hpp"

namespace pathabs {

namespace {

void require_boolean(const Digraph& d, const char* op) {
  if (!d.semiring().is_boolean())
    throw ValidationError(std::string(op) + " is defined for boolean digraphs; use weighted_detour");
}

void require_vertex(const Digraph& d, Vertex v) {
  if (!d.has_vertex(v)) throw ValidationError("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

namespace {

void detour_in_place(Digraph& g, Vertex v) {
  std::vector<Vertex> preds, succs;
  for (const auto& [x, _] : g.predecessors(v)) preds.push_back(x);
  for (const auto& [y, _] : g.successors(v)) succs.push_back(y);
  for (Vertex x : preds) g.set_arc(x, v, std::nullopt);
  for (Vertex y : succs) g.set_arc(v, y, std::nullopt);
  for (Vertex x : preds)
    for (Vertex y : succs)
      if (x != y) g.set_arc(x, y, 1.0);
}

}  // namespace

Digraph detour(const Digraph& d, Vertex v) {
  require_boolean(d, "detour");
  require_vertex(d, v);
  Digraph out = d;
  detour_in_place(out, v);
  return out;
}

Digraph bypass(const Digraph& d, Vertex v) {
  Digraph out = detour(d, v);
  out.remove_vertex(v);
  return out;
}

Digraph detour_set(const Digraph& d, const VertexSet& U, DetourSetOptions options) {
  require_boolean(d, "detour_set");
  for (Vertex u : U) require_vertex(d, u);
  Digraph out = d;
  for (Vertex u : U) detour_in_place(out, u);
  if (options.verify_order_independence) {
    Digraph reverse = d;
    for (auto it = U.rbegin(); it != U.rend(); ++it) detour_in_place(reverse, *it);
    if (!(reverse == out)) throw InvariantError("detour_set depends on the order of U");
  }
  return out;
}

Digraph bypass_set(const Digraph& d, const VertexSet& U, DetourSetOptions options) {
  Digraph out = detour_set(d, U, options);
  for (Vertex u : U) out.remove_vertex(u);
  return out;
}

Digraph naive_bypass(const Digraph& d, const VertexSet& U) {
  require_boolean(d, "naive_bypass");
  for (Vertex u : U) require_vertex(d, u);
  VertexSet external_preds, external_succs;
  for (Vertex u : U) {
    for (const auto& [x, _] : d.predecessors(u))
      if (!U.count(x)) external_preds.insert(x);
    for (const auto& [y, _] : d.successors(u))
      if (!U.count(y)) external_succs.insert(y);
  }
  Digraph out = d;
  for (Vertex u : U) out.remove_vertex(u);
  for (Vertex x : external_preds)
    for (Vertex y : external_succs)
      if (x != y) out.set_arc(x, y, 1.0);
  return out;
}

PathWord project_path(const PathWord& w, const VertexSet& U) {
  PathWord out;
  for (Vertex v : w)
    if (!U.count(v)) out.push_back(v);
  return out;
}

namespace {

VertexSet complement_of_support(const Digraph& d, const PartialPartition& p) {
  if (p.ground_size() != d.max_vertex())
    throw ValidationError("partition ground set [" + std::to_string(p.ground_size()) + "] does not match vertex ids 1.." +
                          std::to_string(d.max_vertex()));
  const auto support = p.support();
  for (Vertex v : support)
    if (!d.has_vertex(v))
      throw ValidationError("partition element " + std::to_string(v) + " is not a vertex");
  VertexSet dropped;
  for (Vertex v : d.vertices())
    if (!support.count(v)) dropped.insert(v);
  return dropped;
}

}  // namespace

Digraph path_abstract(const Digraph& d, const PartialPartition& p) {
  require_boolean(d, "path_abstract");
  const auto dropped = complement_of_support(d, p);
  return contract_blocks(bypass_set(d, dropped), p.blocks());
}

Digraph path_abstract_contract_first(const Digraph& d, const PartialPartition& p) {
  require_boolean(d, "path_abstract");
  const auto dropped = complement_of_support(d, p);
  return bypass_set(contract_blocks(d, p.blocks()), dropped);
}

}  // namespace pathabs
