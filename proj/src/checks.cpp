#include "pathabs/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "pathabs/core.hpp"
#include "pathabs/errors.hpp"
#include "pathabs/generators.hpp"
#include "pathabs/io.hpp"
#include "pathabs/pabstract.hpp"
#include "pathabs/partitions.hpp"
#include "pathabs/random_digraph.hpp"
#include "pathabs/rng.hpp"
#include "pathabs/semiring.hpp"
#include "pathabs/temporal.hpp"
#include "pathabs/vabstract.hpp"
#include "pathabs/weighted.hpp"

namespace pathabs::checks {

namespace {

struct Context {
  Result& result;
  Rng rng;
  double scale;

  std::size_t count(std::size_t base) const {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(base * scale)));
  }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result.cases;
    if (ok) return;
    if (result.failures++ == 0) result.first_failure = describe();
  }

  std::size_t size(std::size_t lo, std::size_t hi) {
    return static_cast<std::size_t>(rng.uniform_int(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
  }
};

bool strongly_connected(const Digraph& d) { return strongly_connected_components(d).size() <= 1; }

std::vector<ColorSet> subsets_of(const ColorSet& palette) {
  const std::vector<Color> colors(palette.begin(), palette.end());
  std::vector<ColorSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << colors.size()); ++mask) {
    ColorSet s;
    for (std::size_t i = 0; i < colors.size(); ++i)
      if (mask >> i & 1) s.insert(colors[i]);
    out.push_back(std::move(s));
  }
  return out;
}

bool subset_of(const ColorSet& a, const ColorSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

void semiring_laws(Context& c) {
  for (const auto& s : Semiring::all()) {
    const auto report = check_semiring_laws(s, c.count(500), c.rng.engine()());
    c.expect(report.all_pass(), [&] { return std::string(s.name()) + " violates a semiring law"; });
  }
}

void partition_lattice(Context& c) {
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto partial = all_partial_partitions(n);
    const auto full = all_set_partitions(n + 1);
    for (const auto& sigma : partial) {
      const auto completed = complete_partial(sigma);
      for (const auto& tau : full) {
        const bool lhs = refines(sigma, drop_element(tau));
        const bool rhs = refines(completed, tau);
        c.expect(lhs == rhs, [&] { return "Galois law fails at " + sigma.to_string() + " / " + tau.to_string(); });
      }
    }
  }
  for (std::size_t k = 0; k < c.count(200); ++k) {
    const auto col = gen::coloring(c.size(1, 8), 5, c.rng);
    const auto canon = canonicalize(col);
    Coloring relabeled = col;
    for (auto& x : relabeled.labels) x = 100 - 7 * x;
    c.expect(canonicalize(canon) == canon && canonicalize(relabeled) == canon,
             [] { return std::string("canonicalize is not idempotent or not relabel-invariant"); });
    for (const auto& L : subsets_of(col.palette()))
      for (const auto& Lp : subsets_of(col.palette()))
        if (subset_of(L, Lp))
          c.expect(refines(partition_from_labels(col, L), partition_from_labels(col, Lp)),
                   [] { return std::string("partition_from_labels is not monotone"); });
  }
}

void detour_commutation(Context& c) {
  for (std::size_t k = 0; k < c.count(1000); ++k) {
    const Digraph d = gen::digraph(c.size(2, 8), c.rng.uniform01(), c.rng);
    for (Vertex v : d.vertices())
      for (Vertex w : d.vertices())
        if (v < w)
          c.expect(detour(detour(d, v), w) == detour(detour(d, w), v),
                   [&] { return "detours at " + std::to_string(v) + "," + std::to_string(w) + " differ on\n" + d.to_string(); });
  }
}

void contraction_commutation(Context& c) {
  for (std::size_t k = 0; k < c.count(1000); ++k) {
    const Digraph d = gen::digraph(c.size(3, 8), c.rng.uniform01(), c.rng);
    const auto vs = d.vertices();
    for (Vertex u : vs)
      for (Vertex v : vs)
        for (Vertex w : vs) {
          if (u == v || u == w || v >= w) continue;
          const std::vector<VertexBlock> block{{v, w}};
          c.expect(contract_blocks(detour(d, u), block) == detour(contract_blocks(d, block), u), [&] {
            return "detour at " + std::to_string(u) + " and contraction of {" + std::to_string(v) + "," +
                   std::to_string(w) + "} differ on\n" + d.to_string();
          });
        }
  }
}

void path_preservation(Context& c) {
  for (std::size_t k = 0; k < c.count(300); ++k) {
    const Digraph d = gen::digraph(c.size(3, 8), c.rng.uniform01() * 0.6, c.rng);
    for (Vertex v : d.vertices()) {
      const Digraph det = detour(d, v);
      const Digraph byp = bypass(d, v);
      for (Vertex x : d.vertices())
        for (Vertex y : d.vertices()) {
          if (x == y || x == v || y == v || !has_path(d, x, y)) continue;
          c.expect(has_path(det, x, y) && has_path(byp, x, y), [&] {
            return "path " + std::to_string(x) + "->" + std::to_string(y) + " lost by detour at " + std::to_string(v);
          });
        }
    }
  }
}

void path_language(Context& c) {
  for (std::size_t k = 0; k < c.count(300); ++k) {
    const bool acyclic = k % 2 == 0;
    const std::size_t n = c.size(2, 8);
    const Digraph d = acyclic ? gen::dag(n, c.rng.uniform01() * 0.7, c.rng) : gen::digraph(n, c.rng.uniform01() * 0.4, c.rng);
    const VertexSet U = gen::subset(d.vertices(), 0.4, c.rng);
    const Digraph b = bypass_set(d, U);
    for (Vertex x : b.vertices())
      for (Vertex y : b.vertices()) {
        if (x == y) continue;
        std::set<PathWord> projected;
        for (const auto& w : enumerate_paths(d, {x}, {y}).paths) projected.insert(project_path(w, U));
        if (acyclic) {
          const auto direct = enumerate_paths(b, {x}, {y}).paths;
          c.expect(projected == std::set<PathWord>(direct.begin(), direct.end()), [&] {
            return "path language differs for " + std::to_string(x) + "->" + std::to_string(y) + " on\n" + d.to_string();
          });
        } else {
          for (const auto& w : projected) {
            bool walk = true;
            for (std::size_t i = 0; i + 1 < w.size(); ++i) walk = walk && b.has_arc(w[i], w[i + 1]);
            c.expect(walk, [&] { return "projected path is not a walk of the bypass on\n" + d.to_string(); });
          }
        }
      }
  }
}

void acyclicity_preservation(Context& c) {
  for (std::size_t k = 0; k < c.count(500); ++k) {
    const Digraph d = gen::dag(c.size(1, 8), c.rng.uniform01(), c.rng);
    const VertexSet U = gen::subset(d.vertices(), 0.5, c.rng);
    c.expect(is_acyclic(detour_set(d, U)), [&] { return "detour_set created a cycle in\n" + d.to_string(); });
  }
}

void strong_connectivity(Context& c) {
  for (std::size_t k = 0; k < c.count(500); ++k) {
    const Digraph d = gen::digraph(c.size(2, 7), 0.3 + 0.5 * c.rng.uniform01(), c.rng);
    for (Vertex v : d.vertices()) {
      if (d.predecessors(v).empty() || d.successors(v).empty()) continue;
      if (!strongly_connected(bypass(d, v))) continue;
      c.expect(strongly_connected(d), [&] { return "bypass at " + std::to_string(v) + " strongly connected but d is not"; });
    }
  }
}

void dag_minimality(Context& c) {
  for (std::size_t k = 0; k < c.count(300); ++k) {
    const Digraph d = gen::dag(c.size(1, 6), c.rng.uniform01(), c.rng);
    const VertexSet U = gen::subset(d.vertices(), 0.4, c.rng);
    const Digraph r = transitive_reduction_dag(bypass_set(d, U));
    for (Vertex x : r.vertices())
      for (Vertex y : r.vertices())
        if (x != y)
          c.expect(has_path(r, x, y) == has_path(d, x, y), [&] { return "reduction changes reachability on\n" + d.to_string(); });
    for (const auto& a : r.arcs()) {
      Digraph smaller = r;
      smaller.set_arc(a.from, a.to, std::nullopt);
      c.expect(!has_path(smaller, a.from, a.to), [&] { return "reduction keeps a redundant arc on\n" + d.to_string(); });
    }
  }
}

void vabstract_functoriality(Context& c) {
  for (std::size_t k = 0; k < c.count(100); ++k) {
    const std::size_t n = c.size(1, 7);
    const Coloring coloring = gen::coloring(n, 4, c.rng);
    const ColoredDigraph cd(gen::digraph(n, c.rng.uniform01() * 0.6, c.rng), coloring);
    const ColorSet palette = coloring.palette();
    const auto subsets = subsets_of(palette);
    for (const auto& L : subsets) {
      c.expect(vertex_abstract(cd, L).digraph.order() == [&] {
        std::size_t live = 0;
        for (Color col : L) live += palette.count(col);
        return live;
      }(), [] { return std::string("vertex_abstract has the wrong vertex count"); });
      for (const auto& L1 : subsets) {
        if (!subset_of(L, L1)) continue;
        const auto f = block_contraction_morphism(cd, L, L1);
        c.expect(is_colored_morphism(f), [] { return std::string("abstraction map is not a colored morphism"); });
        for (const auto& L2 : subsets) {
          if (!subset_of(L1, L2)) continue;
          const auto g = block_contraction_morphism(cd, L1, L2);
          const auto direct = block_contraction_morphism(cd, L, L2);
          const auto composed = compose(g, f);
          c.expect(composed.map == direct.map && composed.target == direct.target &&
                       composed.introduced == direct.introduced,
                   [] { return std::string("composition law fails"); });
        }
      }
    }
    // Pullback square over L1, L2 inside L.
    for (std::size_t t = 0; t < 10 && !subsets.empty(); ++t) {
      const auto& L = subsets[static_cast<std::size_t>(c.rng.uniform_int(0, static_cast<std::int64_t>(subsets.size()) - 1))];
      const auto inside = subsets_of(L);
      const auto& L1 = inside[static_cast<std::size_t>(c.rng.uniform_int(0, static_cast<std::int64_t>(inside.size()) - 1))];
      const auto& L2 = inside[static_cast<std::size_t>(c.rng.uniform_int(0, static_cast<std::int64_t>(inside.size()) - 1))];
      ColorSet meet;
      std::set_intersection(L1.begin(), L1.end(), L2.begin(), L2.end(), std::inserter(meet, meet.end()));
      const auto left = compose(block_contraction_morphism(cd, L1, L), block_contraction_morphism(cd, meet, L1));
      const auto right = compose(block_contraction_morphism(cd, L2, L), block_contraction_morphism(cd, meet, L2));
      c.expect(left.map == right.map, [] { return std::string("pullback square does not commute"); });
    }
  }
}

void weighted_predicate(Context& c) {
  const Semiring counting(SemiringKind::kCounting);
  for (std::size_t k = 0; k < c.count(1000); ++k) {
    const Digraph d = gen::digraph(c.size(2, 6), 0.2 + 0.6 * c.rng.uniform01(), c.rng, counting);
    for (Vertex v : d.vertices())
      for (Vertex w : d.vertices()) {
        if (v == w) continue;
        const Digraph vw = double_detour(d, v, w);
        const Digraph wv = double_detour(d, w, v);
        const auto verdict = detours_commute(d, v, w);
        c.expect(verdict.commute == (vw == wv), [&] {
          return "predicate disagrees with double detours at " + std::to_string(v) + "," + std::to_string(w) + " on\n" + d.to_string();
        });
        if (!verdict.commute && verdict.witness) {
          const auto [x, y] = *verdict.witness;
          c.expect(vw.arc(x, y) != wv.arc(x, y), [] { return std::string("reported witness is not a differing entry"); });
        }
        for (Vertex x : d.vertices())
          for (Vertex y : d.vertices()) {
            if (x == y || x == v || x == w || y == v || y == w) continue;
            c.expect(vw.arc(x, y) == six_term_expansion(d, v, w, x, y),
                     [] { return std::string("six-term expansion does not match the double detour"); });
          }
      }
  }
}

void weighted_structure(Context& c) {
  const Semiring counting(SemiringKind::kCounting);
  for (std::size_t k = 0; k < c.count(1000); ++k) {
    const Digraph d = gen::digraph(c.size(3, 7), 0.2 + 0.5 * c.rng.uniform01(), c.rng, counting);
    const auto vs = d.vertices();
    const Vertex u = vs[static_cast<std::size_t>(c.rng.uniform_int(0, static_cast<std::int64_t>(vs.size()) - 1))];
    for (Vertex v : vs)
      for (Vertex w : vs)
        if (v != u && w != u && v < w)
          c.expect(weighted_contract_commutes(d, u, v, w), [&] { return "weighted detour and contraction differ on\n" + d.to_string(); });

    const Digraph a = gen::dag(c.size(2, 7), c.rng.uniform01(), c.rng, counting);
    for (Vertex v : a.vertices())
      for (Vertex w : a.vertices())
        if (v < w)
          c.expect(double_detour(a, v, w) == double_detour(a, w, v), [&] { return "acyclic weighted detours differ on\n" + a.to_string(); });

    const Digraph b = gen::digraph(c.size(2, 7), c.rng.uniform01(), c.rng);
    for (Vertex v : b.vertices()) {
      c.expect(weighted_detour(b, v) == detour(b, v), [] { return std::string("boolean weighted detour differs from detour"); });
      if (!has_two_cycle(b) && !has_three_cycle_through(b, v))
        c.expect(!has_two_cycle(weighted_detour(b, v)), [&] { return "detour created a 2-cycle in\n" + b.to_string(); });
    }
  }
}

std::size_t layered_vertex_count(const DTCN& d) {
  std::size_t total = 0;
  for (Vertex v = 1; v <= d.vertex_count(); ++v) total += temporal_fiber(d, v).size();
  return total;
}

void temporal_identities(Context& c) {
  for (std::size_t k = 0; k < c.count(500); ++k) {
    const DTCN d = gen::dtcn(c.size(2, 7), 12, 4, c.rng);
    const auto T = build_temporal_digraph(d);
    const std::size_t V = d.vertex_count();
    const std::size_t vc = T.digraph.order();
    c.expect(vc == layered_vertex_count(d) && vc <= 2 * V + 2 * d.size() &&
                 T.digraph.arc_count() == vc - V + d.size() &&
                 T.temporal_arcs.size() + T.spatial_arcs.size() == T.digraph.arc_count(),
             [&] { return "temporal digraph size identities fail for " + serialize_contacts(d); });
    for (const auto& [x, y] : T.temporal_arcs)
      c.expect(T.layer(x).vertex == T.layer(y).vertex && T.layer(x).time < T.layer(y).time,
               [] { return std::string("temporal arc joins the wrong layers"); });
    for (const auto& [x, y] : T.spatial_arcs)
      c.expect(T.layer(x).vertex != T.layer(y).vertex && T.layer(x).time == T.layer(y).time,
               [] { return std::string("spatial arc joins the wrong layers"); });

    const VertexSet U = gen::subset(std::vector<Vertex>([&] {
                                      std::vector<Vertex> all(V);
                                      std::iota(all.begin(), all.end(), Vertex{1});
                                      return all;
                                    }()),
                                    0.4, c.rng);
    const DTCN out = dtcn_detour(d, U);
    bool avoids = true;
    for (const auto& ct : out.contacts()) avoids = avoids && !U.count(ct.source) && !U.count(ct.target);
    c.expect(avoids, [&] { return "detour output mentions a bypassed vertex for " + serialize_contacts(d); });
  }
}

void temporal_constant_time(Context& c) {
  for (std::size_t k = 0; k < c.count(200); ++k) {
    const DTCN d = gen::dtcn(c.size(2, 7), 14, 1, c.rng, true);
    const Digraph g = underlying_digraph(d);
    const VertexSet U = gen::subset(g.vertices(), 0.4, c.rng);
    std::set<Arc> temporal_pairs, static_pairs;
    for (const auto& ct : dtcn_detour(d, U).contacts()) temporal_pairs.emplace(ct.source, ct.target);
    for (const auto& a : bypass_set(g, U).arcs()) static_pairs.emplace(a.from, a.to);
    c.expect(temporal_pairs == static_pairs, [&] { return "constant-time detour differs from the digraph bypass for " + serialize_contacts(d); });
  }
}

void temporal_contraction(Context& c) {
  for (std::size_t k = 0; k < c.count(500); ++k) {
    const DTCN d = gen::dtcn(c.size(2, 7), 12, 4, c.rng);
    std::vector<Vertex> all(d.vertex_count());
    std::iota(all.begin(), all.end(), Vertex{1});
    const VertexSet U = gen::subset(all, 0.35, c.rng);
    std::vector<Vertex> rest;
    for (Vertex v : all)
      if (!U.count(v)) rest.push_back(v);
    const auto blocks = gen::blocks(rest, c.rng);
    c.expect(dtcn_contract(dtcn_detour(d, U), blocks) == dtcn_detour(dtcn_contract(d, blocks), U),
             [&] { return "temporal detour and contraction differ for " + serialize_contacts(d); });
  }
}

void io_round_trip(Context& c) {
  for (std::size_t k = 0; k < c.count(200); ++k) {
    for (const auto& s : Semiring::all()) {
      Digraph d = gen::digraph(c.size(1, 7), c.rng.uniform01(), c.rng, s);
      if (d.order() > 2 && c.rng.bernoulli(0.5)) d = contract_blocks(d, {{1, 2}});
      if (d.order() > 1 && c.rng.bernoulli(0.5)) {
        const auto vs = d.vertices();
        d.remove_vertex(vs[static_cast<std::size_t>(c.rng.uniform_int(0, static_cast<std::int64_t>(vs.size()) - 2))]);
      }
      for (auto f : {OutputFormat::kEdgelist, OutputFormat::kJson, OutputFormat::kCsv})
        c.expect(parse_digraph_as(serialize_digraph(d, f), f, s) == d, [&] {
          return std::string(output_format_name(f)) + " round trip fails for " + std::string(s.name()) + "\n" + d.to_string();
        });
    }
    const DTCN t = gen::dtcn(c.size(2, 7), 10, 4, c.rng);
    c.expect(parse_contacts(serialize_contacts(t), t.vertex_count()) == t, [] { return std::string("contact CSV round trip fails"); });
  }
}

void random_model(Context& c) {
  c.expect(f_map(0.0) == 0.0 && f_map(1.0) == 1.0, [] { return std::string("f does not fix 0 and 1"); });
  for (std::size_t k = 0; k < c.count(200); ++k) {
    const double p = 0.001 + 0.998 * c.rng.uniform01();
    c.expect(f_map(p) >= p && approx_iterate(p, 0.0) == p, [&] { return "f(p) < p or F^{-1}(F(p)) != p at p=" + std::to_string(p); });
    std::vector<std::size_t> sizes(c.size(2, 6));
    for (auto& b : sizes) b = c.size(1, 4);
    const std::size_t support = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
    const std::size_t n = support + c.size(0, 10);
    const double base = expected_arcs(p / 4, n, sizes);
    std::shuffle(sizes.begin(), sizes.end(), c.rng.engine());
    c.expect(std::fabs(expected_arcs(p / 4, n, sizes) - base) <= 1e-9 * std::max(1.0, base),
             [] { return std::string("expected_arcs depends on block order"); });
  }
}

using Suite = void (*)(Context&);

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> suites = {
      {"semiring-laws", semiring_laws},
      {"partition-lattice", partition_lattice},
      {"detour-commutation", detour_commutation},
      {"contraction-commutation", contraction_commutation},
      {"path-preservation", path_preservation},
      {"path-language", path_language},
      {"acyclicity-preservation", acyclicity_preservation},
      {"strong-connectivity", strong_connectivity},
      {"dag-minimality", dag_minimality},
      {"vabstract-functoriality", vabstract_functoriality},
      {"weighted-predicate", weighted_predicate},
      {"weighted-structure", weighted_structure},
      {"temporal-identities", temporal_identities},
      {"temporal-constant-time", temporal_constant_time},
      {"temporal-contraction", temporal_contraction},
      {"io-round-trip", io_round_trip},
      {"random-model", random_model},
  };
  return suites;
}

}  // namespace

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : registry()) out.push_back(name);
  return out;
}

Result run(const std::string& name, const Options& options) {
  const auto& suites = registry();
  const auto it = std::find_if(suites.begin(), suites.end(), [&](const auto& s) { return s.first == name; });
  if (it == suites.end()) throw ValidationError("unknown check '" + name + "'");
  Result r;
  r.name = name;
  const auto index = static_cast<std::uint64_t>(it - suites.begin());
  Context c{r, Rng(derive_seed(options.seed, index)), options.scale};
  const auto start = std::chrono::steady_clock::now();
  it->second(c);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<Result> run_all(const Options& options) {
  std::vector<Result> out;
  for (const auto& name : names()) out.push_back(run(name, options));
  return out;
}

}  // namespace pathabs::checks
