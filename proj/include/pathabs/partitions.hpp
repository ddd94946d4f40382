#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pathabs/digraph.hpp"

namespace pathabs {

using Color = std::int64_t;
using ColorSet = std::set<Color>;

// labels[i] is the color of vertex i+1.
struct Coloring {
  std::vector<Color> labels;

  std::size_t size() const { return labels.size(); }
  Color operator()(Vertex v) const { return labels.at(v - 1); }
  ColorSet palette() const { return ColorSet(labels.begin(), labels.end()); }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Restricted growth string: colors renumbered 1, 2, ... in order of first
// appearance. Idempotent.
Coloring canonicalize(const Coloring& c);

// A partition of a subset of [n]. Blocks are nonempty, disjoint, sorted, and
// ordered by smallest element; block order carries no meaning.
class PartialPartition {
 public:
  PartialPartition() = default;
  PartialPartition(std::size_t n, std::vector<std::vector<Vertex>> blocks);

  std::size_t ground_size() const { return n_; }
  const std::vector<std::vector<Vertex>>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  std::set<Vertex> support() const;
  bool is_full() const;

  // Bar notation: "13|2"; multi-digit ids are comma-separated; empty is "∅".
  std::string to_string() const;

  friend bool operator==(const PartialPartition&, const PartialPartition&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Vertex>> blocks_;
};

// One block per color of L with nonempty preimage, ordered by color.
PartialPartition partition_from_labels(const Coloring& c, const ColorSet& L);

// Every block of a lies inside some block of b. Throws on mismatched ground sets.
bool refines(const PartialPartition& a, const PartialPartition& b);

// Partial partition of [n] -> full partition of [n+1] (missing elements become singletons).
PartialPartition complete_partial(const PartialPartition& p);

// Full partition of [n+1] -> partial partition of [n] (n+1 removed from its block).
PartialPartition drop_element(const PartialPartition& t);

// All set partitions of [n], generated as restricted growth strings.
std::vector<PartialPartition> all_set_partitions(std::size_t n);
// All partial partitions of [n] (partitions of every subset).
std::vector<PartialPartition> all_partial_partitions(std::size_t n);

}  // namespace pathabs
