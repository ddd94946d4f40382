#include "pathabs/digraph.hpp"

#include <algorithm>
#include <sstream>

#include "pathabs/errors.hpp"

namespace pathabs {

namespace {
const std::map<Vertex, Weight> kNoNeighbors;
}

Digraph::Digraph(std::size_t n, Semiring semiring) : semiring_(semiring) {
  for (std::size_t v = 1; v <= n; ++v) add_vertex(static_cast<Vertex>(v));
}

Digraph::Digraph(const std::vector<Vertex>& vertices, Semiring semiring) : semiring_(semiring) {
  for (Vertex v : vertices) add_vertex(v);
}

Digraph Digraph::from_arcs(std::size_t n, std::initializer_list<Arc> arcs, Semiring semiring) {
  Digraph d(n, semiring);
  for (const auto& [x, y] : arcs) d.add_arc(x, y);
  return d;
}

std::vector<Vertex> Digraph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(out_.size());
  for (const auto& [v, _] : out_) out.push_back(v);
  return out;
}

Entry Digraph::arc(Vertex x, Vertex y) const {
  auto row = out_.find(x);
  if (row == out_.end()) return std::nullopt;
  auto it = row->second.find(y);
  if (it == row->second.end()) return std::nullopt;
  return it->second;
}

std::vector<WeightedArc> Digraph::arcs() const {
  std::vector<WeightedArc> out;
  out.reserve(arc_count_);
  for (const auto& [x, row] : out_)
    for (const auto& [y, w] : row) out.push_back({x, y, w});
  return out;
}

double Digraph::total_weight() const {
  if (semiring_.kind() != SemiringKind::kCounting) return static_cast<double>(arc_count_);
  double total = 0.0;
  for (const auto& [x, row] : out_)
    for (const auto& [y, w] : row) total += w;
  return total;
}

const std::map<Vertex, Weight>& Digraph::successors(Vertex v) const {
  auto it = out_.find(v);
  return it == out_.end() ? kNoNeighbors : it->second;
}

const std::map<Vertex, Weight>& Digraph::predecessors(Vertex v) const {
  auto it = in_.find(v);
  return it == in_.end() ? kNoNeighbors : it->second;
}

std::vector<Vertex> Digraph::members(Vertex v) const {
  auto it = members_.find(v);
  if (it == members_.end()) return {v};
  return it->second;
}

void Digraph::add_vertex(Vertex v) {
  if (v == 0) throw ValidationError("vertex ids start at 1");
  out_.try_emplace(v);
  in_.try_emplace(v);
}

void Digraph::remove_vertex(Vertex v) {
  require_vertex(v, "remove_vertex");
  for (const auto& [y, _] : out_.at(v)) in_.at(y).erase(v);
  for (const auto& [x, _] : in_.at(v)) out_.at(x).erase(v);
  arc_count_ -= out_.at(v).size() + in_.at(v).size();
  out_.erase(v);
  in_.erase(v);
  members_.erase(v);
}

void Digraph::add_arc(Vertex x, Vertex y, Weight w) {
  if (!semiring_.in_carrier(w))
    throw ValidationError("weight " + std::to_string(w) + " is not in the " +
                          std::string(semiring_.name()) + " carrier");
  auto current = arc(x, y);
  set_arc(x, y, current ? semiring_.add(*current, w) : w);
}

void Digraph::set_arc(Vertex x, Vertex y, const Entry& value) {
  if (x == y) throw ValidationError("self-loop at vertex " + std::to_string(x));
  require_vertex(x, "arc source");
  require_vertex(y, "arc target");
  auto& row = out_.at(x);
  auto it = row.find(y);
  if (!value) {
    if (it != row.end()) {
      row.erase(it);
      in_.at(y).erase(x);
      --arc_count_;
    }
    return;
  }
  if (it == row.end()) ++arc_count_;
  row[y] = *value;
  in_.at(y)[x] = *value;
}

void Digraph::set_members(Vertex v, std::vector<Vertex> members) {
  require_vertex(v, "set_members");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.size() <= 1 && (members.empty() || members.front() == v)) {
    members_.erase(v);
    return;
  }
  members_[v] = std::move(members);
}

Digraph Digraph::empty_copy() const {
  Digraph d(vertices(), semiring_);
  d.members_ = members_;
  return d;
}

bool operator==(const Digraph& a, const Digraph& b) {
  return a.semiring_ == b.semiring_ && a.out_ == b.out_ && a.members_ == b.members_;
}

std::string Digraph::to_string() const {
  std::ostringstream os;
  os << "Digraph[" << semiring_.name() << "; V={";
  bool first = true;
  for (const auto& [v, _] : out_) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << "}; A={";
  first = true;
  for (const auto& a : arcs()) {
    os << (first ? "" : ",") << "(" << a.from << "," << a.to;
    if (!semiring_.is_boolean()) os << ":" << a.value;
    os << ")";
    first = false;
  }
  os << "}]";
  return os.str();
}

void Digraph::require_vertex(Vertex v, const char* context) const {
  if (!has_vertex(v))
    throw ValidationError(std::string(context) + ": vertex " + std::to_string(v) +
                          " is not in the digraph");
}

}  // namespace pathabs
