#include "pathabs/weighted.hpp"

#include <string>
#include <vector>

#include "pathabs/errors.hpp"

namespace pathabs {

Digraph weighted_detour(const Digraph& d, Vertex v) {
  if (!d.has_vertex(v)) throw ValidationError("vertex " + std::to_string(v) + " out of range");
  const Semiring& s = d.semiring();
  const auto preds = d.predecessors(v);
  const auto succs = d.successors(v);
  Digraph out = d;
  for (const auto& [x, _] : preds) out.set_arc(x, v, std::nullopt);
  for (const auto& [y, _] : succs) out.set_arc(v, y, std::nullopt);
  for (const auto& [x, wxv] : preds)
    for (const auto& [y, wvy] : succs)
      if (x != y) out.set_arc(x, y, s.plus(d.arc(x, y), s.mul(wxv, wvy)));
  return out;
}

Digraph double_detour(const Digraph& d, Vertex v, Vertex w) {
  if (v == w) throw ValidationError("double detour needs distinct vertices");
  return weighted_detour(weighted_detour(d, v), w);
}

Entry six_term_expansion(const Digraph& d, Vertex v, Vertex w, Vertex x, Vertex y) {
  const Semiring& s = d.semiring();
  auto m = [&](Vertex a, Vertex b) { return d.arc(a, b); };
  auto prod = [&](std::initializer_list<Entry> terms) {
    Entry acc = s.one();
    for (const auto& t : terms) acc = s.times(acc, t);
    return acc;
  };
  Entry total = m(x, y);
  total = s.plus(total, prod({m(x, v), m(v, y)}));
  total = s.plus(total, prod({m(x, w), m(w, y)}));
  total = s.plus(total, prod({m(x, v), m(v, w), m(w, y)}));
  total = s.plus(total, prod({m(x, w), m(w, v), m(v, y)}));
  total = s.plus(total, prod({m(x, v), m(v, w), m(w, v), m(v, y)}));
  return total;
}

namespace {

void require_distinct_vertices(const Digraph& d, Vertex v, Vertex w) {
  if (v == w) throw ValidationError("commutation test needs distinct vertices");
  if (!d.has_vertex(v) || !d.has_vertex(w)) throw ValidationError("vertex out of range");
}

}  // namespace

bool noncommutation_criterion(const Digraph& d, Vertex v, Vertex w) {
  require_distinct_vertices(d, v, w);
  const Semiring& s = d.semiring();
  if (!s.times(d.arc(v, w), d.arc(w, v))) return false;
  for (Vertex x : d.vertices()) {
    if (x == v || x == w) continue;
    for (Vertex y : d.vertices()) {
      if (y == v || y == w || y == x) continue;
      if (s.times(d.arc(x, v), d.arc(v, y)) != s.times(d.arc(x, w), d.arc(w, y))) return true;
    }
  }
  return false;
}

CommutationVerdict detours_commute(const Digraph& d, Vertex v, Vertex w) {
  require_distinct_vertices(d, v, w);
  const Semiring& s = d.semiring();
  CommutationVerdict verdict;
  if (!s.times(d.arc(v, w), d.arc(w, v))) return verdict;

  // Only pairs with x -> {v,w} and {v,w} -> y can differ.
  VertexSet xs, ys;
  for (Vertex hub : {v, w}) {
    for (const auto& [x, _] : d.predecessors(hub))
      if (x != v && x != w) xs.insert(x);
    for (const auto& [y, _] : d.successors(hub))
      if (y != v && y != w) ys.insert(y);
  }
  for (Vertex x : xs) {
    for (Vertex y : ys) {
      if (x == y) continue;
      if (s.times(d.arc(x, v), d.arc(v, y)) == s.times(d.arc(x, w), d.arc(w, y))) continue;
      if (six_term_expansion(d, v, w, x, y) != six_term_expansion(d, w, v, x, y)) {
        verdict.commute = false;
        verdict.witness = Arc{x, y};
        return verdict;
      }
    }
  }
  return verdict;
}

bool weighted_contract_commutes(const Digraph& d, Vertex u, Vertex v, Vertex w) {
  if (u == v || u == w || v == w) throw ValidationError("contraction commutation needs distinct vertices");
  for (Vertex x : {u, v, w})
    if (!d.has_vertex(x)) throw ValidationError("vertex " + std::to_string(x) + " out of range");
  const std::vector<VertexBlock> block{{v, w}};
  const Digraph lhs = contract_blocks(weighted_detour(d, u), block);
  const Digraph rhs = weighted_detour(contract_blocks(d, block), u);
  return lhs == rhs;
}

Digraph weighted_detour_set(const Digraph& d, const VertexSet& U) {
  for (Vertex u : U)
    if (!d.has_vertex(u)) throw ValidationError("vertex " + std::to_string(u) + " out of range");
  const bool check = !is_acyclic(d);
  const std::vector<Vertex> order(U.begin(), U.end());
  Digraph out = d;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (check && i + 1 < order.size()) {
      const auto verdict = detours_commute(out, order[i], order[i + 1]);
      if (!verdict.commute)
        throw ValidationError("detours at " + std::to_string(order[i]) + " and " +
                              std::to_string(order[i + 1]) + " do not commute (witness " +
                              std::to_string(verdict.witness->first) + "," +
                              std::to_string(verdict.witness->second) + ")");
    }
    out = weighted_detour(out, order[i]);
  }
  return out;
}

bool has_two_cycle(const Digraph& d) {
  for (const auto& a : d.arcs())
    if (a.from < a.to && d.has_arc(a.to, a.from)) return true;
  return false;
}

bool has_three_cycle_through(const Digraph& d, Vertex v) {
  for (const auto& [x, _] : d.successors(v))
    for (const auto& [y, __] : d.successors(x))
      if (y != v && d.has_arc(y, v)) return true;
  return false;
}

}  // namespace pathabs
