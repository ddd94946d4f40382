// Command-line front end: batch access to every library operation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathabs/checks.hpp"
#include "pathabs/core.hpp"
#include "pathabs/errors.hpp"
#include "pathabs/io.hpp"
#include "pathabs/pabstract.hpp"
#include "pathabs/partitions.hpp"
#include "pathabs/random_digraph.hpp"
#include "pathabs/rng.hpp"
#include "pathabs/temporal.hpp"
#include "pathabs/vabstract.hpp"
#include "pathabs/weighted.hpp"

namespace {

using namespace pathabs;

struct Args {
  RunConfig config;
  std::string format_name = "edgelist";
  std::string output;

  std::string graph, labels, partition, contacts;
  std::string keep_colors;
  std::vector<Vertex> vertices;
  std::vector<std::string> blocks;
  bool unsafe_naive = false;

  std::size_t n = 0;
  double p = 0.0;
  double c = 0.0;
  std::string block_sizes;
  long long dropped = -1;
  std::size_t trials = 100;
  std::size_t threads = 1;
  bool add_log_n = false;
  std::size_t n_max = 0;

  std::string mode = "uniform";
  bool retry_empty = false;
  bool naive = false;

  std::vector<Vertex> from, to;
  std::size_t max_len = 0, max_count = 0;

  double scale = 1.0;
  std::vector<std::string> only;
};

OutputFormat input_format_for(const std::string& path) {
  if (path.ends_with(".json")) return OutputFormat::kJson;
  if (path.ends_with(".csv")) return OutputFormat::kCsv;
  return OutputFormat::kEdgelist;
}

Digraph load_graph(const Args& a) {
  const std::string text = read_file(a.graph);
  const auto f = input_format_for(a.graph);
  if (f == OutputFormat::kJson) return parse_digraph_json(text);
  return parse_digraph_as(text, f, Semiring::by_name(a.config.semiring));
}

ColorSet parse_color_set(const std::string& text) {
  const auto list = parse_color_list(text);
  return ColorSet(list.begin(), list.end());
}

PartialPartition load_partition(const Args& a, std::size_t n) {
  if (!a.partition.empty()) return parse_partition(read_file(a.partition), n);
  if (!a.labels.empty()) {
    if (a.keep_colors.empty()) throw ValidationError("--labels needs --keep-colors");
    const Coloring c = parse_labels(read_file(a.labels));
    if (c.size() != n) throw ValidationError("label file covers " + std::to_string(c.size()) + " vertices, expected " + std::to_string(n));
    return partition_from_labels(c, parse_color_set(a.keep_colors));
  }
  std::vector<std::vector<Vertex>> blocks;
  for (const auto& b : a.blocks) {
    std::vector<Vertex> block;
    for (auto v : parse_size_list(b)) block.push_back(static_cast<Vertex>(v));
    blocks.push_back(std::move(block));
  }
  return PartialPartition(n, std::move(blocks));
}

std::vector<VertexBlock> block_args(const Args& a) {
  if (!a.partition.empty() || !a.labels.empty()) {
    throw ValidationError("use --block for contraction blocks");
  }
  std::vector<VertexBlock> blocks;
  for (const auto& b : a.blocks) {
    VertexBlock block;
    for (auto v : parse_size_list(b)) block.push_back(static_cast<Vertex>(v));
    blocks.push_back(std::move(block));
  }
  return blocks;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ValidationError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void emit_graph(const Args& a, const Digraph& d) {
  Output out(a.output);
  out.stream() << serialize_digraph(d, a.config.format, a.config.compact_ids);
  std::cerr << "vertices " << d.order() << ", arcs " << d.arc_count() << "\n";
}

void emit_contacts(const Args& a, const DTCN& d) {
  Output out(a.output);
  out.stream() << serialize_contacts(d);
  std::cerr << "contacts " << d.size() << "\n";
}

VertexSet vertex_set(const Args& a) { return VertexSet(a.vertices.begin(), a.vertices.end()); }

int cmd_contract(const Args& a) {
  emit_graph(a, contract_blocks(load_graph(a), block_args(a)));
  return 0;
}

int cmd_vabstract(const Args& a) {
  const Digraph d = load_graph(a);
  const ColoredDigraph cd(d, parse_labels(read_file(a.labels)));
  const auto result = vertex_abstract(cd, parse_color_set(a.keep_colors));
  emit_graph(a, result.digraph);
  for (const auto& [v, color] : result.colors) std::cerr << "color " << v << " " << color << "\n";
  return 0;
}

int cmd_detour(const Args& a, bool remove) {
  const Digraph d = load_graph(a);
  const VertexSet U = vertex_set(a);
  Digraph out;
  if (d.semiring().is_boolean()) {
    out = remove ? bypass_set(d, U) : detour_set(d, U);
  } else {
    out = weighted_detour_set(d, U);
    if (remove)
      for (Vertex u : U) out.remove_vertex(u);
  }
  emit_graph(a, out);
  return 0;
}

int cmd_pabstract(const Args& a) {
  const Digraph d = load_graph(a);
  emit_graph(a, path_abstract(d, load_partition(a, d.max_vertex())));
  return 0;
}

int cmd_naive_bypass(const Args& a) {
  if (!a.unsafe_naive)
    throw ValidationError("naive-bypass splices arcs one vertex at a time and can add spurious arcs; pass --unsafe-naive");
  emit_graph(a, naive_bypass(load_graph(a), vertex_set(a)));
  return 0;
}

int cmd_rand_stats(const Args& a) {
  const auto sizes = parse_size_list(a.block_sizes);
  std::size_t support = 0;
  for (auto b : sizes) support += b;
  if (support > a.n) throw ValidationError("blocks cover more than n vertices");
  if (a.dropped >= 0 && static_cast<std::size_t>(a.dropped) != a.n - support)
    throw ValidationError("--dropped disagrees with n minus the block sizes (" + std::to_string(a.n - support) + ")");
  GnpModel model(a.n, a.p);
  Output out(a.output);
  auto& os = out.stream();
  os << "n " << a.n << "\n"
     << "p " << format_number(a.p) << "\n"
     << "blocks " << sizes.size() << "\n"
     << "dropped " << a.n - support << "\n";
  for (auto conv : {IterateConvention::kTheorem, IterateConvention::kReported}) {
    const char* tag = conv == IterateConvention::kTheorem ? "theorem" : "reported";
    const auto N = iterate_count(a.n, support, conv);
    os << "iterates_" << tag << " " << N << "\n"
       << "arc_prob_" << tag << " " << format_number(f_iterate(a.p, N)) << "\n"
       << "expected_arcs_" << tag << " " << format_number(expected_arcs(a.p, a.n, sizes, conv)) << "\n";
  }
  return 0;
}

int cmd_rand_mc(const Args& a) {
  GnpModel model(a.n, a.p);
  const std::uint64_t seed = effective_seed(a.config);
  PartialPartition partition;
  if (a.dropped >= 0) {
    partition = random_bypass_partition(a.n, static_cast<std::size_t>(a.dropped), derive_seed(seed, 0xb10c));
  } else {
    partition = load_partition(a, a.n);
  }
  const auto s = monte_carlo_abstraction(model, partition, a.trials, seed, a.threads);
  Output out(a.output);
  out.stream() << serialize_frequencies_csv(s, a.n);
  const std::size_t iterates = a.n - partition.support().size();
  std::cerr << "mean " << format_number(s.mean) << " stderr " << format_number(s.standard_error) << " f_iterate("
            << iterates << ") " << format_number(f_iterate(a.p, iterates)) << "\n";
  return 0;
}

int cmd_rand_renorm(const Args& a) {
  const std::size_t n_max = a.n_max ? a.n_max : a.n - 1;
  Output out(a.output);
  out.stream() << serialize_renorm_csv(renorm_grid(a.n, a.c, a.add_log_n, n_max));
  return 0;
}

int cmd_rand_scc(const Args& a) {
  const std::uint64_t seed = effective_seed(a.config);
  GnpModel model(a.n, a.c / static_cast<double>(a.n));
  double total = 0.0;
  for (std::size_t t = 0; t < a.trials; ++t) total += largest_scc_fraction(model, derive_seed(seed, t));
  Output out(a.output);
  out.stream() << "predicted " << format_number(giant_scc_fraction(a.c)) << "\n"
               << "observed " << format_number(total / static_cast<double>(a.trials)) << "\n";
  return 0;
}

DTCN load_contacts(const Args& a) {
  DTCN d = parse_contacts(read_file(a.contacts), a.n);
  for (const auto& layer : equal_time_chains(d))
    std::cerr << "lint: contacts enter and leave vertex " << layer.vertex << " at time " << layer.time.to_string() << "\n";
  return d;
}

int cmd_dtcn_fiber(const Args& a) {
  const DTCN d = load_contacts(a);
  Output out(a.output);
  const std::vector<Vertex> vs = a.vertices.empty() ? [&] {
    std::vector<Vertex> all;
    for (Vertex v = 1; v <= d.vertex_count(); ++v) all.push_back(v);
    return all;
  }() : a.vertices;
  for (Vertex v : vs) {
    out.stream() << v << ":";
    for (const auto& t : temporal_fiber(d, v)) out.stream() << " " << t.to_string();
    out.stream() << "\n";
  }
  return 0;
}

int cmd_dtcn_tgraph(const Args& a) {
  const auto T = build_temporal_digraph(load_contacts(a));
  Output out(a.output);
  if (a.config.format == OutputFormat::kJson) {
    nlohmann::ordered_json j;
    auto& layers = j["layers"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < T.layers.size(); ++i)
      layers.push_back({{"id", i + 1}, {"vertex", T.layers[i].vertex}, {"time", T.layers[i].time.to_string()}});
    j["temporal"] = T.temporal_arcs;
    j["spatial"] = T.spatial_arcs;
    out.stream() << j.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < T.layers.size(); ++i)
      out.stream() << "# layer " << i + 1 << " vertex " << T.layers[i].vertex << " time " << T.layers[i].time.to_string() << "\n";
    out.stream() << serialize_digraph(T.digraph, a.config.format);
  }
  std::cerr << "layers " << T.layers.size() << ", arcs " << T.digraph.arc_count() << " (" << T.temporal_arcs.size()
            << " temporal, " << T.spatial_arcs.size() << " spatial)\n";
  return 0;
}

int cmd_dtcn_detour(const Args& a) {
  DTCN d = load_contacts(a);
  if (a.naive) {
    if (!a.unsafe_naive) throw ValidationError("--naive needs --unsafe-naive");
    for (Vertex v : a.vertices) d = naive_dtcn_detour(d, v);
    emit_contacts(a, d);
    return 0;
  }
  emit_contacts(a, dtcn_detour(d, vertex_set(a)));
  return 0;
}

int cmd_dtcn_abstract(const Args& a) {
  const DTCN d = load_contacts(a);
  emit_contacts(a, dtcn_path_abstract(d, load_partition(a, d.vertex_count())));
  return 0;
}

int cmd_dtcn_sample(const Args& a) {
  emit_contacts(a, sample_dtcn(a.n, a.p, contact_mode_by_name(a.mode), effective_seed(a.config),
                               a.retry_empty ? EmptyPolicy::kRetry : EmptyPolicy::kReject));
  return 0;
}

int cmd_paths(const Args& a) {
  const Digraph d = load_graph(a);
  const VertexSet from = a.from.empty() ? sources(d) : VertexSet(a.from.begin(), a.from.end());
  const VertexSet to = a.to.empty() ? sinks(d) : VertexSet(a.to.begin(), a.to.end());
  const auto result = enumerate_paths(d, from, to, a.max_len, a.max_count);
  Output out(a.output);
  for (const auto& w : result.paths) {
    for (std::size_t i = 0; i < w.size(); ++i) out.stream() << (i ? " " : "") << w[i];
    out.stream() << "\n";
  }
  std::cerr << "paths " << result.paths.size() << (result.truncated ? " (truncated)" : "") << "\n";
  return 0;
}

int cmd_check(const Args& a) {
  checks::Options options;
  options.seed = effective_seed(a.config);
  options.scale = a.scale;
  const auto names = a.only.empty() ? checks::names() : a.only;
  bool ok = true;
  Output out(a.output);
  for (const auto& name : names) {
    const auto r = checks::run(name, options);
    ok = ok && r.passed();
    char line[160];
    std::snprintf(line, sizeof line, "%-26s %s  cases=%zu failures=%zu  %.2fs", r.name.c_str(),
                  r.passed() ? "PASS" : "FAIL", r.cases, r.failures, r.seconds);
    out.stream() << line << "\n";
    if (!r.first_failure.empty()) out.stream() << "  first failure: " << r.first_failure << "\n";
  }
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  Args a;
  CLI::App app{"Digraph abstraction toolkit: contraction, detours, path abstraction, random and temporal models"};
  app.require_subcommand(1);
  app.add_option("--seed", a.config.seed, "Master seed (PATHABS_SEED overrides)");
  app.add_option("--semiring", a.config.semiring, "boolean, counting, real, minplus-nonneg, maxmin, viterbi");
  app.add_option("--format", a.format_name, "Output format: edgelist, json, csv");
  app.add_flag("--compact-ids", a.config.compact_ids, "Renumber output vertices 1..k");
  app.add_option("--output", a.output, "Write to this file instead of stdout");

  auto graph_opt = [&](CLI::App* s) { s->add_option("--graph", a.graph, "Digraph file (.edges, .json, .csv)")->required(); };
  auto vertex_opt = [&](CLI::App* s) { s->add_option("--vertex", a.vertices, "Vertex (repeatable)"); };
  auto partition_opts = [&](CLI::App* s) {
    s->add_option("--partition", a.partition, "Partition file: one block per line");
    s->add_option("--labels", a.labels, "Label file: 'vertex color' lines");
    s->add_option("--keep-colors", a.keep_colors, "Comma-separated colors whose classes become blocks");
    s->add_option("--block", a.blocks, "Block as comma-separated ids (repeatable)");
  };

  auto* contract = app.add_subcommand("contract", "Contract disjoint vertex blocks");
  graph_opt(contract);
  contract->add_option("--block", a.blocks, "Block as comma-separated ids (repeatable)")->required();

  auto* vabstract = app.add_subcommand("vabstract", "Vertex abstraction by a color subset");
  graph_opt(vabstract);
  vabstract->add_option("--labels", a.labels, "Label file")->required();
  vabstract->add_option("--keep-colors", a.keep_colors, "Comma-separated colors")->required();

  auto* detour_cmd = app.add_subcommand("detour", "Detour at a set of vertices (kept as isolated vertices)");
  graph_opt(detour_cmd);
  vertex_opt(detour_cmd);

  auto* bypass_cmd = app.add_subcommand("bypass", "Bypass a set of vertices");
  graph_opt(bypass_cmd);
  vertex_opt(bypass_cmd);

  auto* pabstract = app.add_subcommand("pabstract", "Path abstraction by a partial partition");
  graph_opt(pabstract);
  partition_opts(pabstract);

  auto* naive = app.add_subcommand("naive-bypass", "Arc-splicing bypass (incorrect on cycles; for comparison only)");
  graph_opt(naive);
  vertex_opt(naive);
  naive->add_flag("--unsafe-naive", a.unsafe_naive, "Acknowledge that the result may contain spurious arcs");

  auto* rand = app.add_subcommand("rand", "Random digraph statistics");
  rand->require_subcommand(1);
  auto* stats = rand->add_subcommand("stats", "Closed-form expected arc count of a path abstraction of D(n,p)");
  stats->add_option("--n", a.n)->required();
  stats->add_option("--p", a.p)->required();
  stats->add_option("--blocks", a.block_sizes, "Comma-separated block sizes")->required();
  stats->add_option("--dropped", a.dropped, "Number of bypassed vertices (checked against n and blocks)");
  auto* mc = rand->add_subcommand("mc", "Monte Carlo arc frequency of path abstractions of D(n,p)");
  mc->add_option("--n", a.n)->required();
  mc->add_option("--p", a.p)->required();
  mc->add_option("--dropped", a.dropped, "Bypass this many random vertices, keep the rest as singletons");
  partition_opts(mc);
  mc->add_option("--trials", a.trials);
  mc->add_option("--threads", a.threads);
  auto* renorm = rand->add_subcommand("renorm", "Grid of log[(n-N) f^N(p0)]");
  renorm->add_option("--n", a.n)->required();
  renorm->add_option("--c", a.c)->required();
  renorm->add_flag("--log-n", a.add_log_n, "Use p0 = (c + log n)/n instead of c/n");
  renorm->add_option("--nmax", a.n_max, "Largest N (default n-1)");
  auto* scc = rand->add_subcommand("scc", "Giant strong component: prediction and sampled fraction");
  scc->add_option("--n", a.n)->required();
  scc->add_option("--c", a.c)->required();
  scc->add_option("--trials", a.trials);

  auto* dtcn = app.add_subcommand("dtcn", "Directed temporal contact networks");
  dtcn->require_subcommand(1);
  auto contacts_opt = [&](CLI::App* s) {
    s->add_option("--contacts", a.contacts, "Contact CSV (source,target,time)")->required();
    s->add_option("--n", a.n, "Vertex count (default: largest id)");
  };
  auto* fiber = dtcn->add_subcommand("fiber", "Temporal fibers");
  contacts_opt(fiber);
  vertex_opt(fiber);
  auto* tgraph = dtcn->add_subcommand("tgraph", "Layered temporal digraph");
  contacts_opt(tgraph);
  auto* tdetour = dtcn->add_subcommand("detour", "Detour a vertex set through the temporal digraph");
  contacts_opt(tdetour);
  vertex_opt(tdetour);
  tdetour->add_flag("--naive", a.naive, "Fold single-vertex splices in the given order instead");
  tdetour->add_flag("--unsafe-naive", a.unsafe_naive, "Acknowledge that --naive is order dependent");
  auto* tabstract = dtcn->add_subcommand("abstract", "Temporal path abstraction");
  contacts_opt(tabstract);
  partition_opts(tabstract);
  auto* sample = dtcn->add_subcommand("sample", "Random contact network");
  sample->add_option("--n", a.n)->required();
  sample->add_option("--p", a.p)->required();
  sample->add_option("--mode", a.mode, "uniform or poisson");
  sample->add_flag("--retry-empty", a.retry_empty, "Redraw empty networks instead of failing");

  auto* paths = app.add_subcommand("paths", "Enumerate simple paths (default: sources to sinks)");
  graph_opt(paths);
  paths->add_option("--from", a.from, "Start vertex (repeatable)");
  paths->add_option("--to", a.to, "End vertex (repeatable)");
  paths->add_option("--max-len", a.max_len, "Longest path in arcs (default n)");
  paths->add_option("--max-count", a.max_count, "Stop after this many paths");

  auto* check = app.add_subcommand("check", "Run the property suites");
  check->add_option("--scale", a.scale, "Multiply every suite's case count");
  check->add_option("--only", a.only, "Run only these suites (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    a.config.format = output_format_by_name(a.format_name);
    Semiring::by_name(a.config.semiring);
    if (contract->parsed()) return cmd_contract(a);
    if (vabstract->parsed()) return cmd_vabstract(a);
    if (detour_cmd->parsed()) return cmd_detour(a, false);
    if (bypass_cmd->parsed()) return cmd_detour(a, true);
    if (pabstract->parsed()) return cmd_pabstract(a);
    if (naive->parsed()) return cmd_naive_bypass(a);
    if (stats->parsed()) return cmd_rand_stats(a);
    if (mc->parsed()) return cmd_rand_mc(a);
    if (renorm->parsed()) return cmd_rand_renorm(a);
    if (scc->parsed()) return cmd_rand_scc(a);
    if (fiber->parsed()) return cmd_dtcn_fiber(a);
    if (tgraph->parsed()) return cmd_dtcn_tgraph(a);
    if (tdetour->parsed()) return cmd_dtcn_detour(a);
    if (tabstract->parsed()) return cmd_dtcn_abstract(a);
    if (sample->parsed()) return cmd_dtcn_sample(a);
    if (paths->parsed()) return cmd_paths(a);
    if (check->parsed()) return cmd_check(a);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
