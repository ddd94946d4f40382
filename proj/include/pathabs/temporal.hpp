#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pathabs/core.hpp"
#include "pathabs/digraph.hpp"
#include "pathabs/partitions.hpp"

namespace pathabs {

// A real time extended by -inf and +inf sentinels.
struct TimePoint {
  enum class Kind { kNegInf, kFinite, kPosInf };

  Kind kind = Kind::kFinite;
  double value = 0.0;

  static constexpr TimePoint neg_inf() { return {Kind::kNegInf, 0.0}; }
  static constexpr TimePoint pos_inf() { return {Kind::kPosInf, 0.0}; }
  static constexpr TimePoint at(double t) { return {Kind::kFinite, t}; }

  bool finite() const { return kind == Kind::kFinite; }
  std::string to_string() const;

  friend bool operator==(const TimePoint&, const TimePoint&) = default;
  friend std::partial_ordering operator<=>(const TimePoint& a, const TimePoint& b) {
    if (a.kind != b.kind) return a.kind <=> b.kind;
    return a.value <=> b.value;
  }
};

struct Contact {
  Vertex source = 0;
  Vertex target = 0;
  double time = 0.0;

  friend bool operator==(const Contact&, const Contact&) = default;
  friend std::partial_ordering operator<=>(const Contact&, const Contact&) = default;
};

// Directed temporal contact network on vertices 1..n: a set of distinct
// (source, target, time) triples with source != target and finite time.
// Parsed and sampled networks are required to be nonempty; operations such
// as detours may legitimately return an empty network.
class DTCN {
 public:
  DTCN() = default;
  explicit DTCN(std::size_t n) : n_(n) {}
  // Throws on duplicate triples.
  DTCN(std::size_t n, const std::vector<Contact>& contacts);

  std::size_t vertex_count() const { return n_; }
  const std::set<Contact>& contacts() const { return contacts_; }
  std::size_t size() const { return contacts_.size(); }
  bool empty() const { return contacts_.empty(); }

  // Returns false if the triple was already present.
  bool insert(const Contact& c);

  friend bool operator==(const DTCN&, const DTCN&) = default;

 private:
  std::size_t n_ = 0;
  std::set<Contact> contacts_;
};

// -inf, the distinct contact times at v (as source or target), +inf; ascending.
std::vector<TimePoint> temporal_fiber(const DTCN& d, Vertex v);

struct Layer {
  Vertex vertex = 0;
  TimePoint time;

  friend bool operator==(const Layer&, const Layer&) = default;
  friend std::partial_ordering operator<=>(const Layer&, const Layer&) = default;
};

// Layered digraph: one vertex per (v, fiber time), temporal arcs chaining
// consecutive fiber times of each v, spatial arcs (s,t)->(t',t) per contact.
struct TemporalDigraph {
  std::size_t base_vertices = 0;
  std::vector<Layer> layers;  // layer with digraph id i is layers[i-1]
  std::map<Layer, Vertex> id_of;
  Digraph digraph;
  std::vector<Arc> spatial_arcs;
  std::vector<Arc> temporal_arcs;

  const Layer& layer(Vertex id) const { return layers.at(id - 1); }
};

TemporalDigraph build_temporal_digraph(const DTCN& d);

// Bypasses every layer of every u in U inside the temporal digraph in a
// single pass, then reads each remaining arc between layers of distinct
// vertices as a contact stamped with the later of the two layer times.
DTCN dtcn_detour(const DTCN& d, const VertexSet& U);

// Single-vertex rule that splices j->v->k into j->k whenever the times are
// nondecreasing. Does not compose correctly; kept for differential tests.
DTCN naive_dtcn_detour(const DTCN& d, Vertex v);

// Re-addresses contacts to block ids (smallest member) and drops contacts
// internal to a block.
DTCN dtcn_contract(const DTCN& d, const std::vector<VertexBlock>& blocks);

// Detour by the complement of supp p, then contract the blocks of p.
DTCN dtcn_path_abstract(const DTCN& d, const PartialPartition& p);

// Underlying boolean digraph on 1..n.
Digraph underlying_digraph(const DTCN& d);

// Vertices at which some contact arrives and another leaves at the same time.
// Such chains are traversed within a single layer by dtcn_detour.
std::vector<Layer> equal_time_chains(const DTCN& d);

// A time-respecting walk along `word` exists (nondecreasing contact times).
bool has_time_respecting_path(const DTCN& d, const PathWord& word);

enum class ContactMode { kUniform, kPoisson };
enum class EmptyPolicy { kReject, kRetry };

ContactMode contact_mode_by_name(const std::string& name);

// Uniform: arcs of D(n,p) with independent uniform times in [0,1).
// Poisson: per ordered pair, Poisson(p) many contacts with uniform times.
// An empty draw is rejected (ValidationError) or redrawn with a derived seed.
DTCN sample_dtcn(std::size_t n, double p, ContactMode mode, std::uint64_t seed,
                 EmptyPolicy empty = EmptyPolicy::kReject);

// p^len / len!: chance that a fixed len-arc route is time-respecting in the uniform model.
double temporal_path_prob(double p, std::size_t len);

}  // namespace pathabs
