#include "pathabs/partitions.hpp"

#include <algorithm>
#include <map>

#include "pathabs/errors.hpp"

namespace pathabs {

Coloring canonicalize(const Coloring& c) {
  std::map<Color, Color> renumber;
  Coloring out;
  out.labels.reserve(c.size());
  for (Color x : c.labels) {
    auto [it, _] = renumber.try_emplace(x, static_cast<Color>(renumber.size() + 1));
    out.labels.push_back(it->second);
  }
  return out;
}

PartialPartition::PartialPartition(std::size_t n, std::vector<std::vector<Vertex>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  std::set<Vertex> seen;
  for (auto& b : blocks_) {
    if (b.empty()) throw ValidationError("partition block is empty");
    std::sort(b.begin(), b.end());
    for (Vertex v : b) {
      if (v < 1 || v > n_)
        throw ValidationError("partition element " + std::to_string(v) + " outside [" +
                              std::to_string(n_) + "]");
      if (!seen.insert(v).second)
        throw ValidationError("partition blocks overlap at " + std::to_string(v));
    }
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::set<Vertex> PartialPartition::support() const {
  std::set<Vertex> out;
  for (const auto& b : blocks_) out.insert(b.begin(), b.end());
  return out;
}

bool PartialPartition::is_full() const { return support().size() == n_; }

std::string PartialPartition::to_string() const {
  if (blocks_.empty()) return "∅";
  const bool short_ids = n_ < 10;
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += '|';
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j && !short_ids) out += ',';
      out += std::to_string(blocks_[i][j]);
    }
  }
  return out;
}

PartialPartition partition_from_labels(const Coloring& c, const ColorSet& L) {
  std::map<Color, std::vector<Vertex>> preimages;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (L.count(c.labels[i])) preimages[c.labels[i]].push_back(static_cast<Vertex>(i + 1));
  std::vector<std::vector<Vertex>> blocks;
  for (auto& [_, b] : preimages) blocks.push_back(std::move(b));
  return PartialPartition(c.size(), std::move(blocks));
}

bool refines(const PartialPartition& a, const PartialPartition& b) {
  if (a.ground_size() != b.ground_size())
    throw ValidationError("refinement compares partitions of different ground sets");
  std::map<Vertex, std::size_t> block_of;
  for (std::size_t i = 0; i < b.blocks().size(); ++i)
    for (Vertex v : b.blocks()[i]) block_of[v] = i;
  for (const auto& block : a.blocks()) {
    auto first = block_of.find(block.front());
    if (first == block_of.end()) return false;
    for (Vertex v : block) {
      auto it = block_of.find(v);
      if (it == block_of.end() || it->second != first->second) return false;
    }
  }
  return true;
}

PartialPartition complete_partial(const PartialPartition& p) {
  const std::size_t n = p.ground_size();
  auto blocks = p.blocks();
  const auto support = p.support();
  for (Vertex v = 1; v <= n + 1; ++v)
    if (!support.count(v)) blocks.push_back({v});
  return PartialPartition(n + 1, std::move(blocks));
}

PartialPartition drop_element(const PartialPartition& t) {
  if (t.ground_size() == 0) throw ValidationError("cannot drop an element from an empty ground set");
  if (!t.is_full()) throw ValidationError("drop_element expects a full partition");
  const auto last = static_cast<Vertex>(t.ground_size());
  std::vector<std::vector<Vertex>> blocks;
  for (auto b : t.blocks()) {
    b.erase(std::remove(b.begin(), b.end(), last), b.end());
    if (!b.empty()) blocks.push_back(std::move(b));
  }
  return PartialPartition(t.ground_size() - 1, std::move(blocks));
}

std::vector<PartialPartition> all_set_partitions(std::size_t n) {
  std::vector<PartialPartition> out;
  if (n == 0) {
    out.emplace_back(0, std::vector<std::vector<Vertex>>{});
    return out;
  }
  // Restricted growth strings a[0..n-1] with a[0]=0 and a[i] <= 1 + max(a[0..i-1]).
  std::vector<std::size_t> a(n, 0), prefix_max(n, 0);
  while (true) {
    std::vector<std::vector<Vertex>> blocks(prefix_max[n - 1] + 1);
    for (std::size_t i = 0; i < n; ++i) blocks[a[i]].push_back(static_cast<Vertex>(i + 1));
    out.emplace_back(n, std::move(blocks));

    std::size_t i = n - 1;
    while (i > 0 && a[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

std::vector<PartialPartition> all_partial_partitions(std::size_t n) {
  std::vector<PartialPartition> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) subset.push_back(static_cast<Vertex>(i + 1));
    for (const auto& p : all_set_partitions(subset.size())) {
      std::vector<std::vector<Vertex>> blocks;
      for (const auto& b : p.blocks()) {
        std::vector<Vertex> mapped;
        for (Vertex v : b) mapped.push_back(subset[v - 1]);
        blocks.push_back(std::move(mapped));
      }
      out.emplace_back(n, std::move(blocks));
    }
  }
  return out;
}

}  // namespace pathabs
