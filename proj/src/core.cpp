#include "pathabs/core.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>

#include "pathabs/errors.hpp"

namespace pathabs {

Digraph contract_blocks(const Digraph& d, const std::vector<VertexBlock>& blocks) {
  std::map<Vertex, Vertex> rep;
  for (const auto& block : blocks) {
    if (block.empty()) throw ValidationError("contraction block is empty");
    const Vertex id = *std::min_element(block.begin(), block.end());
    for (Vertex v : block) {
      if (!d.has_vertex(v))
        throw ValidationError("contraction block member " + std::to_string(v) + " out of range");
      if (!rep.emplace(v, id).second)
        throw ValidationError("contraction blocks overlap at vertex " + std::to_string(v));
    }
  }
  auto image = [&](Vertex v) {
    auto it = rep.find(v);
    return it == rep.end() ? v : it->second;
  };

  std::vector<Vertex> kept;
  for (Vertex v : d.vertices())
    if (image(v) == v) kept.push_back(v);
  Digraph out(kept, d.semiring());

  std::map<Vertex, std::vector<Vertex>> members;
  for (Vertex v : d.vertices()) {
    auto m = d.members(v);
    auto& dst = members[image(v)];
    dst.insert(dst.end(), m.begin(), m.end());
  }
  for (auto& [v, m] : members) out.set_members(v, std::move(m));

  for (const auto& a : d.arcs()) {
    const Vertex x = image(a.from);
    const Vertex y = image(a.to);
    if (x != y) out.add_arc(x, y, a.value);
  }
  return out;
}

VertexSet NeighborClassification::predecessors() const {
  VertexSet out = minus;
  out.insert(plusminus.begin(), plusminus.end());
  return out;
}

VertexSet NeighborClassification::successors() const {
  VertexSet out = plusminus;
  out.insert(plus.begin(), plus.end());
  return out;
}

NeighborClassification classify_vertex(const Digraph& d, Vertex v) {
  if (!d.has_vertex(v)) throw ValidationError("vertex " + std::to_string(v) + " out of range");
  NeighborClassification c;
  c.vertex = v;
  const auto& in = d.predecessors(v);
  const auto& out = d.successors(v);
  for (Vertex x : d.vertices()) {
    if (x == v) continue;
    const bool into = in.count(x) != 0;
    const bool from = out.count(x) != 0;
    if (into && from)
      c.plusminus.insert(x);
    else if (into)
      c.minus.insert(x);
    else if (from)
      c.plus.insert(x);
    else
      c.zero.insert(x);
  }
  return c;
}

std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& d) {
  // Iterative Tarjan.
  const auto vs = d.vertices();
  std::unordered_map<Vertex, int> index_of;
  index_of.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) index_of[vs[i]] = static_cast<int>(i);

  const int n = static_cast<int>(vs.size());
  std::vector<std::vector<int>> adj(n);
  for (const auto& a : d.arcs()) adj[index_of[a.from]].push_back(index_of[a.to]);

  std::vector<int> number(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> call;
  std::vector<std::vector<Vertex>> components;
  int counter = 0;

  for (int root = 0; root < n; ++root) {
    if (number[root] != -1) continue;
    call.emplace_back(root, 0);
    number[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < adj[v].size()) {
        const int w = adj[v][next++];
        if (number[w] == -1) {
          number[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], number[w]);
        }
        continue;
      }
      const int finished = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[finished]);
      if (low[finished] == number[finished]) {
        std::vector<Vertex> comp;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(vs[w]);
        } while (w != finished);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

bool is_acyclic(const Digraph& d) {
  for (const auto& c : strongly_connected_components(d))
    if (c.size() > 1) return false;
  return true;
}

namespace {

// Kahn order over vertices(); empty if cyclic.
std::vector<int> topological_indices(const Digraph& d, const std::vector<Vertex>& vs,
                                     const std::unordered_map<Vertex, int>& index_of) {
  std::vector<int> indegree(vs.size(), 0);
  for (const auto& a : d.arcs()) ++indegree[index_of.at(a.to)];
  std::vector<int> order, ready;
  for (int i = static_cast<int>(vs.size()) - 1; i >= 0; --i)
    if (indegree[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    const int i = ready.back();
    ready.pop_back();
    order.push_back(i);
    for (const auto& [y, _] : d.successors(vs[i]))
      if (--indegree[index_of.at(y)] == 0) ready.push_back(index_of.at(y));
  }
  if (order.size() != vs.size()) return {};
  return order;
}

std::unordered_map<Vertex, int> index_map(const std::vector<Vertex>& vs) {
  std::unordered_map<Vertex, int> index_of;
  index_of.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) index_of[vs[i]] = static_cast<int>(i);
  return index_of;
}

}  // namespace

std::vector<std::vector<bool>> reachability_matrix(const Digraph& d) {
  const auto vs = d.vertices();
  const auto index_of = index_map(vs);
  const std::size_t n = vs.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> todo;
    for (const auto& [y, _] : d.successors(vs[s])) {
      const int j = index_of.at(y);
      if (!reach[s][j]) {
        reach[s][j] = true;
        todo.push_back(j);
      }
    }
    while (!todo.empty()) {
      const int i = todo.back();
      todo.pop_back();
      for (const auto& [y, _] : d.successors(vs[i])) {
        const int j = index_of.at(y);
        if (!reach[s][j]) {
          reach[s][j] = true;
          todo.push_back(j);
        }
      }
    }
  }
  return reach;
}

bool has_path(const Digraph& d, Vertex from, Vertex to) {
  if (!d.has_vertex(from) || !d.has_vertex(to)) return false;
  if (from == to) return true;
  std::set<Vertex> seen{from};
  std::vector<Vertex> todo{from};
  while (!todo.empty()) {
    const Vertex v = todo.back();
    todo.pop_back();
    for (const auto& [y, _] : d.successors(v)) {
      if (y == to) return true;
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return false;
}

Digraph transitive_reduction_dag(const Digraph& d) {
  const auto vs = d.vertices();
  const auto index_of = index_map(vs);
  const auto order = topological_indices(d, vs, index_of);
  if (order.size() != vs.size())
    throw ValidationError("transitive reduction requires an acyclic digraph");

  // An arc (u,w) is redundant iff w is reachable from another successor of u.
  const auto reach = reachability_matrix(d);
  Digraph out = d.empty_copy();
  for (const auto& a : d.arcs()) {
    const int w = index_of.at(a.to);
    bool redundant = false;
    for (const auto& [s, _] : d.successors(a.from)) {
      if (s != a.to && reach[index_of.at(s)][w]) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.set_arc(a.from, a.to, a.value);
  }
  return out;
}

namespace {

struct PathSearch {
  const Digraph& d;
  const VertexSet& to;
  std::size_t max_len;
  std::size_t max_count;
  PathEnumeration result;
  PathWord word;
  VertexSet on_path;

  // Returns false once the count cap stops the search.
  bool extend() {
    const Vertex v = word.back();
    for (const auto& [y, _] : d.successors(v)) {
      if (on_path.count(y)) continue;
      if (word.size() - 1 >= max_len) {
        result.truncated = true;
        return true;
      }
      word.push_back(y);
      on_path.insert(y);
      if (to.count(y)) {
        if (result.paths.size() >= max_count) {
          result.truncated = true;
          return false;
        }
        result.paths.push_back(word);
      }
      const bool go_on = extend();
      on_path.erase(y);
      word.pop_back();
      if (!go_on) return false;
    }
    return true;
  }
};

}  // namespace

PathEnumeration enumerate_paths(const Digraph& d, const VertexSet& from, const VertexSet& to,
                                std::size_t max_len, std::size_t max_count) {
  if (max_len == 0) max_len = d.order();
  if (max_count == 0) max_count = 1000000;
  PathSearch search{d, to, max_len, max_count, {}, {}, {}};
  for (Vertex s : from) {
    if (!d.has_vertex(s)) continue;
    search.word = {s};
    search.on_path = {s};
    if (!search.extend()) break;
  }
  return std::move(search.result);
}

VertexSet sources(const Digraph& d) {
  VertexSet out;
  for (Vertex v : d.vertices())
    if (d.predecessors(v).empty()) out.insert(v);
  return out;
}

VertexSet sinks(const Digraph& d) {
  VertexSet out;
  for (Vertex v : d.vertices())
    if (d.successors(v).empty()) out.insert(v);
  return out;
}

std::uint64_t count_walks_dag(const Digraph& d, Vertex x, Vertex y) {
  if (!d.has_vertex(x) || !d.has_vertex(y)) throw ValidationError("walk endpoint out of range");
  const auto kind = d.semiring().kind();
  if (kind != SemiringKind::kBoolean && kind != SemiringKind::kCounting)
    throw ValidationError("walk counting needs a boolean or counting digraph");
  const auto vs = d.vertices();
  const auto index_of = index_map(vs);
  const auto order = topological_indices(d, vs, index_of);
  if (order.size() != vs.size()) throw ValidationError("walk counts are infinite on cyclic digraphs");

  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> walks(vs.size(), 0);
  walks[index_of.at(x)] = 1;
  for (int i : order) {
    if (walks[i] == 0) continue;
    for (const auto& [w, value] : d.successors(vs[i])) {
      const auto mult = static_cast<std::uint64_t>(value);
      const int j = index_of.at(w);
      if (mult != 0 && walks[i] > kMax / mult) throw ValidationError("walk count overflow");
      const std::uint64_t add = walks[i] * mult;
      if (walks[j] > kMax - add) throw ValidationError("walk count overflow");
      walks[j] += add;
    }
  }
  return x == y ? 1 : walks[index_of.at(y)];
}

}  // namespace pathabs
