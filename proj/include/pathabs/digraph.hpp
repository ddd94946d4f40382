#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pathabs/semiring.hpp"

namespace pathabs {

using Vertex = std::uint32_t;
using Arc = std::pair<Vertex, Vertex>;

struct WeightedArc {
  Vertex from;
  Vertex to;
  Weight value;

  friend bool operator==(const WeightedArc&, const WeightedArc&) = default;
  friend auto operator<=>(const WeightedArc&, const WeightedArc&) = default;
};

// Loopless digraph with semiring-valued arcs.
//
// Vertex ids are positive integers but need not be contiguous: deleting a
// vertex keeps the ids of survivors, and contracting a block keeps the
// smallest member id. A vertex produced by contraction remembers the
// original ids it stands for (members()).
class Digraph {
 public:
  Digraph() = default;
  // Vertices 1..n, no arcs.
  explicit Digraph(std::size_t n, Semiring semiring = Semiring());
  Digraph(const std::vector<Vertex>& vertices, Semiring semiring);

  static Digraph from_arcs(std::size_t n, std::initializer_list<Arc> arcs,
                           Semiring semiring = Semiring());

  const Semiring& semiring() const { return semiring_; }

  std::size_t order() const { return out_.size(); }
  std::size_t arc_count() const { return arc_count_; }
  bool has_vertex(Vertex v) const { return out_.count(v) != 0; }
  std::vector<Vertex> vertices() const;
  Vertex max_vertex() const { return out_.empty() ? 0 : out_.rbegin()->first; }

  Entry arc(Vertex x, Vertex y) const;
  bool has_arc(Vertex x, Vertex y) const { return arc(x, y).has_value(); }

  // Sorted by (from, to).
  std::vector<WeightedArc> arcs() const;
  // Total multiplicity: sum of values for counting digraphs, arc count otherwise.
  double total_weight() const;

  const std::map<Vertex, Weight>& successors(Vertex v) const;
  const std::map<Vertex, Weight>& predecessors(Vertex v) const;

  // Original vertex ids represented by v (just {v} unless v came from a contraction).
  std::vector<Vertex> members(Vertex v) const;
  const std::map<Vertex, std::vector<Vertex>>& merged_members() const { return members_; }

  void add_vertex(Vertex v);
  // Removes v and every arc incident to it.
  void remove_vertex(Vertex v);
  // Accumulates with semiring addition if the arc already exists.
  void add_arc(Vertex x, Vertex y, Weight w);
  void add_arc(Vertex x, Vertex y) { add_arc(x, y, semiring_.one()); }
  // Overwrites; an empty entry deletes the arc.
  void set_arc(Vertex x, Vertex y, const Entry& value);
  void set_members(Vertex v, std::vector<Vertex> members);

  // Same vertices and membership, no arcs.
  Digraph empty_copy() const;

  friend bool operator==(const Digraph& a, const Digraph& b);

  std::string to_string() const;

 private:
  void require_vertex(Vertex v, const char* context) const;

  Semiring semiring_;
  std::map<Vertex, std::map<Vertex, Weight>> out_;
  std::map<Vertex, std::map<Vertex, Weight>> in_;
  std::map<Vertex, std::vector<Vertex>> members_;
  std::size_t arc_count_ = 0;
};

}  // namespace pathabs
