#include "pathabs/temporal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pathabs/errors.hpp"
#include "pathabs/pabstract.hpp"
#include "pathabs/rng.hpp"

namespace pathabs {

std::string TimePoint::to_string() const {
  switch (kind) {
    case Kind::kNegInf:
      return "-inf";
    case Kind::kPosInf:
      return "+inf";
    case Kind::kFinite:
      break;
  }
  std::ostringstream os;
  os << value;
  return os.str();
}

DTCN::DTCN(std::size_t n, const std::vector<Contact>& contacts) : n_(n) {
  for (const auto& c : contacts) {
    if (!insert(c))
      throw ValidationError("duplicate contact (" + std::to_string(c.source) + "," +
                            std::to_string(c.target) + "," + std::to_string(c.time) + ")");
  }
}

bool DTCN::insert(const Contact& c) {
  if (c.source == c.target)
    throw ValidationError("contact from vertex " + std::to_string(c.source) + " to itself");
  if (c.source < 1 || c.source > n_ || c.target < 1 || c.target > n_)
    throw ValidationError("contact endpoint outside [" + std::to_string(n_) + "]");
  if (!std::isfinite(c.time)) throw ValidationError("contact times must be finite");
  return contacts_.insert(c).second;
}

std::vector<TimePoint> temporal_fiber(const DTCN& d, Vertex v) {
  if (v < 1 || v > d.vertex_count()) throw ValidationError("vertex " + std::to_string(v) + " out of range");
  std::set<double> times;
  for (const auto& c : d.contacts())
    if (c.source == v || c.target == v) times.insert(c.time);
  std::vector<TimePoint> fiber{TimePoint::neg_inf()};
  for (double t : times) fiber.push_back(TimePoint::at(t));
  fiber.push_back(TimePoint::pos_inf());
  return fiber;
}

TemporalDigraph build_temporal_digraph(const DTCN& d) {
  TemporalDigraph T;
  T.base_vertices = d.vertex_count();
  std::vector<std::set<double>> times(d.vertex_count() + 1);
  for (const auto& c : d.contacts()) {
    times[c.source].insert(c.time);
    times[c.target].insert(c.time);
  }
  for (Vertex v = 1; v <= d.vertex_count(); ++v) {
    T.layers.push_back({v, TimePoint::neg_inf()});
    for (double t : times[v]) T.layers.push_back({v, TimePoint::at(t)});
    T.layers.push_back({v, TimePoint::pos_inf()});
  }
  T.digraph = Digraph(T.layers.size());
  for (std::size_t i = 0; i < T.layers.size(); ++i)
    T.id_of.emplace(T.layers[i], static_cast<Vertex>(i + 1));

  for (std::size_t i = 0; i + 1 < T.layers.size(); ++i) {
    if (T.layers[i].vertex != T.layers[i + 1].vertex) continue;
    const Arc a{static_cast<Vertex>(i + 1), static_cast<Vertex>(i + 2)};
    T.temporal_arcs.push_back(a);
    T.digraph.add_arc(a.first, a.second);
  }
  for (const auto& c : d.contacts()) {
    const Arc a{T.id_of.at({c.source, TimePoint::at(c.time)}),
                T.id_of.at({c.target, TimePoint::at(c.time)})};
    T.spatial_arcs.push_back(a);
    T.digraph.add_arc(a.first, a.second);
  }
  return T;
}

DTCN dtcn_detour(const DTCN& d, const VertexSet& U) {
  for (Vertex u : U)
    if (u < 1 || u > d.vertex_count()) throw ValidationError("vertex " + std::to_string(u) + " out of range");
  const TemporalDigraph T = build_temporal_digraph(d);
  VertexSet bypassed;
  for (Vertex id = 1; id <= T.layers.size(); ++id)
    if (U.count(T.layer(id).vertex)) bypassed.insert(id);
  const Digraph reduced = bypass_set(T.digraph, bypassed);

  DTCN out(d.vertex_count());
  for (const auto& a : reduced.arcs()) {
    const Layer& from = T.layer(a.from);
    const Layer& to = T.layer(a.to);
    if (from.vertex == to.vertex) continue;
    const TimePoint stamp = std::max(from.time, to.time, [](const TimePoint& x, const TimePoint& y) {
      return x < y;
    });
    if (!stamp.finite())
      throw InvariantError("detour produced a contact at sentinel time " + stamp.to_string());
    out.insert({from.vertex, to.vertex, stamp.value});
  }
  return out;
}

DTCN naive_dtcn_detour(const DTCN& d, Vertex v) {
  if (v < 1 || v > d.vertex_count()) throw ValidationError("vertex " + std::to_string(v) + " out of range");
  DTCN out(d.vertex_count());
  std::vector<Contact> into, from;
  for (const auto& c : d.contacts()) {
    if (c.target == v)
      into.push_back(c);
    else if (c.source == v)
      from.push_back(c);
    else
      out.insert(c);
  }
  for (const auto& a : into)
    for (const auto& b : from)
      if (a.time <= b.time && a.source != b.target) out.insert({a.source, b.target, b.time});
  return out;
}

DTCN dtcn_contract(const DTCN& d, const std::vector<VertexBlock>& blocks) {
  std::map<Vertex, Vertex> rep;
  for (const auto& block : blocks) {
    if (block.empty()) throw ValidationError("contraction block is empty");
    const Vertex id = *std::min_element(block.begin(), block.end());
    for (Vertex v : block) {
      if (v < 1 || v > d.vertex_count())
        throw ValidationError("contraction block member " + std::to_string(v) + " out of range");
      if (!rep.emplace(v, id).second)
        throw ValidationError("contraction blocks overlap at vertex " + std::to_string(v));
    }
  }
  auto image = [&](Vertex v) {
    auto it = rep.find(v);
    return it == rep.end() ? v : it->second;
  };
  DTCN out(d.vertex_count());
  for (const auto& c : d.contacts()) {
    const Vertex s = image(c.source);
    const Vertex t = image(c.target);
    if (s != t) out.insert({s, t, c.time});
  }
  return out;
}

DTCN dtcn_path_abstract(const DTCN& d, const PartialPartition& p) {
  if (p.ground_size() != d.vertex_count())
    throw ValidationError("partition ground set must match the network's vertex count");
  const auto support = p.support();
  VertexSet dropped;
  for (Vertex v = 1; v <= d.vertex_count(); ++v)
    if (!support.count(v)) dropped.insert(v);
  return dtcn_contract(dtcn_detour(d, dropped), p.blocks());
}

Digraph underlying_digraph(const DTCN& d) {
  Digraph g(d.vertex_count());
  for (const auto& c : d.contacts()) g.set_arc(c.source, c.target, 1.0);
  return g;
}

std::vector<Layer> equal_time_chains(const DTCN& d) {
  std::set<std::pair<Vertex, double>> arrivals, departures;
  for (const auto& c : d.contacts()) {
    arrivals.emplace(c.target, c.time);
    departures.emplace(c.source, c.time);
  }
  std::vector<Layer> out;
  for (const auto& [v, t] : arrivals)
    if (departures.count({v, t})) out.push_back({v, TimePoint::at(t)});
  return out;
}

bool has_time_respecting_path(const DTCN& d, const PathWord& word) {
  if (word.size() < 2) return !word.empty();
  // Greedy: take the earliest usable contact at every hop.
  double now = -INFINITY;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    auto it = d.contacts().lower_bound({word[i], word[i + 1], now});
    if (it == d.contacts().end() || it->source != word[i] || it->target != word[i + 1]) return false;
    now = it->time;
  }
  return true;
}

ContactMode contact_mode_by_name(const std::string& name) {
  if (name == "uniform") return ContactMode::kUniform;
  if (name == "poisson") return ContactMode::kPoisson;
  throw ValidationError("unknown contact mode '" + name + "' (expected uniform or poisson)");
}

DTCN sample_dtcn(std::size_t n, double p, ContactMode mode, std::uint64_t seed, EmptyPolicy empty) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("probability outside [0,1]");
  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Rng rng(attempt == 0 ? seed : derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    DTCN d(n);
    for (Vertex x = 1; x <= n; ++x) {
      for (Vertex y = 1; y <= n; ++y) {
        if (x == y) continue;
        if (mode == ContactMode::kUniform) {
          if (rng.bernoulli(p)) d.insert({x, y, rng.uniform01()});
        } else {
          const auto count = rng.poisson(p);
          for (std::uint64_t k = 0; k < count; ++k) d.insert({x, y, rng.uniform01()});
        }
      }
    }
    if (!d.empty()) return d;
    if (empty == EmptyPolicy::kReject) throw ValidationError("sampled contact network is empty");
    if (p == 0.0) break;
  }
  throw ValidationError("could not draw a nonempty contact network");
}

double temporal_path_prob(double p, std::size_t len) {
  if (len < 1) throw ValidationError("path length must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("probability outside [0,1]");
  return std::pow(p, static_cast<double>(len)) / std::tgamma(static_cast<double>(len) + 1.0);
}

}  // namespace pathabs
