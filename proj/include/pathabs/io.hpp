#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathabs/digraph.hpp"
#include "pathabs/partitions.hpp"
#include "pathabs/random_digraph.hpp"
#include "pathabs/semiring.hpp"
#include "pathabs/temporal.hpp"

namespace pathabs {

enum class OutputFormat { kEdgelist, kJson, kCsv };

OutputFormat output_format_by_name(std::string_view name);
std::string_view output_format_name(OutputFormat f);

struct RunConfig {
  std::uint64_t seed = 0;
  std::string semiring = "boolean";
  OutputFormat format = OutputFormat::kEdgelist;
  bool compact_ids = false;
};

// PATHABS_SEED, when set, replaces config.seed. Malformed values are rejected.
std::uint64_t effective_seed(const RunConfig& config);

// Shortest decimal text that reads back to the same double.
std::string format_number(double x);

// Edge-list grammar, one statement per line, '#' starts a comment:
//   n <count>               vertices 1..count (otherwise 1..max id mentioned)
//   vertices <id>...        explicit vertex set (for graphs with gaps)
//   block <id> <member>...  merged-vertex record left by a contraction
//   <u> <v> [weight]        arc; repeated arcs are semiring-added
// A DOT subset is accepted as well: "digraph {", "}", "u -> v;", and
// "u -> v [weight=w];". Vertex ids are positive integers.
Digraph parse_digraph(std::string_view text, const Semiring& s = Semiring());
Digraph parse_digraph_json(std::string_view text);
// Columns from,to,value[,members]; rows with empty `to` declare a vertex.
Digraph parse_digraph_csv(std::string_view text, const Semiring& s = Semiring());
Digraph parse_digraph_as(std::string_view text, OutputFormat f, const Semiring& s = Semiring());

std::string serialize_digraph(const Digraph& d, OutputFormat f, bool compact_ids = false);

// Lines "vertex color"; every vertex 1..max must appear exactly once.
Coloring parse_labels(std::string_view text);

// One block per line, whitespace- or comma-separated ids. An optional
// "n <count>" line sets the ground set; otherwise `n` is used.
PartialPartition parse_partition(std::string_view text, std::size_t n);

// CSV with header "source,target,time". n defaults to the largest id.
// The network must be nonempty and free of duplicate triples.
DTCN parse_contacts(std::string_view text, std::size_t n = 0);
std::string serialize_contacts(const DTCN& d);

std::string serialize_renorm_csv(const RenormGrid& g);
std::string serialize_frequencies_csv(const MonteCarloSummary& s, std::size_t n);

std::vector<std::size_t> parse_size_list(std::string_view text);
std::vector<Color> parse_color_list(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace pathabs
