#include "pathabs/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pathabs/errors.hpp"

namespace pathabs {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

std::vector<std::string_view> tokens(std::string_view line, std::string_view seps = " \t\r") {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && seps.find(line[i]) != std::string_view::npos) ++i;
    const auto start = i;
    while (i < line.size() && seps.find(line[i]) == std::string_view::npos) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::vector<std::string_view> csv_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

[[noreturn]] void fail_at(std::size_t line_no, const std::string& what) {
  throw ValidationError("line " + std::to_string(line_no) + ": " + what);
}

template <typename Int>
Int parse_int(std::string_view tok, const char* what) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ValidationError(std::string("malformed ") + what + " '" + std::string(tok) + "'");
  return value;
}

Vertex parse_vertex(std::string_view tok) {
  const auto v = parse_int<std::uint64_t>(tok, "vertex id");
  if (v == 0 || v > 0xffffffffULL) throw ValidationError("vertex id " + std::string(tok) + " out of range");
  return static_cast<Vertex>(v);
}

double parse_real(std::string_view tok, const char* what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ValidationError(std::string("malformed ") + what + " '" + std::string(tok) + "'");
  return value;
}

struct ArcLine {
  std::size_t line_no;
  Vertex from;
  Vertex to;
  std::optional<double> weight;
};

// Rewrites a DOT-style arc statement into "u v [w]" tokens; nullopt if the
// line is not one.
std::optional<std::vector<std::string_view>> dot_arc_tokens(std::string_view line,
                                                            std::string& scratch) {
  const auto arrow = line.find("->");
  if (arrow == std::string_view::npos) return std::nullopt;
  scratch.assign(line);
  std::erase(scratch, ';');
  std::string weight;
  if (const auto open = scratch.find('['); open != std::string::npos) {
    const auto close = scratch.find(']', open);
    if (close == std::string::npos) throw ValidationError("unterminated attribute list");
    for (auto attr : tokens(std::string_view(scratch).substr(open + 1, close - open - 1), " ,\t")) {
      const auto eq = attr.find('=');
      if (eq == std::string_view::npos) continue;
      const auto key = trim(attr.substr(0, eq));
      auto value = trim(attr.substr(eq + 1));
      if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
        value = value.substr(1, value.size() - 2);
      if (key == "weight" || key == "label") weight.assign(value);
    }
    scratch.erase(open);
  }
  const auto a = scratch.find("->");
  scratch = scratch.substr(0, a) + " " + scratch.substr(a + 2) + " " + weight;
  return tokens(scratch);
}

Digraph assemble(const Semiring& s, std::optional<std::size_t> n,
                 const std::optional<std::set<Vertex>>& declared, const std::vector<ArcLine>& arcs,
                 const std::vector<std::pair<Vertex, std::vector<Vertex>>>& blocks) {
  std::vector<Vertex> vertices;
  if (declared) {
    vertices.assign(declared->begin(), declared->end());
    if (n)
      for (Vertex v = 1; v <= *n; ++v)
        if (!declared->count(v)) vertices.push_back(v);
  } else {
    Vertex top = n ? static_cast<Vertex>(*n) : 0;
    if (!n) {
      for (const auto& a : arcs) top = std::max({top, a.from, a.to});
      for (const auto& [id, _] : blocks) top = std::max(top, id);
    }
    for (Vertex v = 1; v <= top; ++v) vertices.push_back(v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  Digraph d(vertices, s);
  for (const auto& a : arcs) {
    if (a.from == a.to) fail_at(a.line_no, "self-loop at vertex " + std::to_string(a.from));
    if (!d.has_vertex(a.from) || !d.has_vertex(a.to))
      fail_at(a.line_no, "arc endpoint outside the declared vertex set");
    try {
      d.add_arc(a.from, a.to, a.weight ? *a.weight : s.one());
    } catch (const ValidationError& e) {
      fail_at(a.line_no, e.what());
    }
  }
  for (const auto& [id, members] : blocks) {
    if (!d.has_vertex(id)) throw ValidationError("block id " + std::to_string(id) + " is not a vertex");
    d.set_members(id, members);
  }
  return d;
}

std::string join_ids(const std::vector<Vertex>& ids, char sep) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(ids[i]);
  }
  return out;
}

}  // namespace

OutputFormat output_format_by_name(std::string_view name) {
  if (name == "edgelist") return OutputFormat::kEdgelist;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  throw ValidationError("unknown output format '" + std::string(name) + "' (edgelist, json, csv)");
}

std::string_view output_format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::kEdgelist:
      return "edgelist";
    case OutputFormat::kJson:
      return "json";
    case OutputFormat::kCsv:
      return "csv";
  }
  return "edgelist";
}

std::uint64_t effective_seed(const RunConfig& config) {
  const char* env = std::getenv("PATHABS_SEED");
  if (env == nullptr || *env == '\0') return config.seed;
  return parse_int<std::uint64_t>(trim(env), "PATHABS_SEED value");
}

std::string format_number(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw InvariantError("number formatting failed");
  return std::string(buf, ptr);
}

Digraph parse_digraph(std::string_view text, const Semiring& s) {
  std::optional<std::size_t> n;
  std::optional<std::set<Vertex>> declared;
  std::vector<ArcLine> arcs;
  std::vector<std::pair<Vertex, std::vector<Vertex>>> blocks;
  std::string scratch;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto line = strip_comment(lines[i]);
    if (line.empty() || line == "{" || line == "}" || line.starts_with("digraph") ||
        line.starts_with("strict digraph"))
      continue;
    try {
      auto dot = dot_arc_tokens(line, scratch);
      const auto tok = dot ? *dot : tokens(line);
      if (tok.front() == "n") {
        if (tok.size() != 2) fail_at(line_no, "expected 'n <count>'");
        if (n) fail_at(line_no, "vertex count given twice");
        n = parse_int<std::size_t>(tok[1], "vertex count");
      } else if (tok.front() == "vertices") {
        if (!declared) declared.emplace();
        for (std::size_t k = 1; k < tok.size(); ++k) declared->insert(parse_vertex(tok[k]));
      } else if (tok.front() == "block") {
        if (tok.size() < 3) fail_at(line_no, "expected 'block <id> <member>...'");
        std::vector<Vertex> members;
        for (std::size_t k = 2; k < tok.size(); ++k) members.push_back(parse_vertex(tok[k]));
        blocks.emplace_back(parse_vertex(tok[1]), std::move(members));
      } else {
        if (tok.size() != 2 && tok.size() != 3) fail_at(line_no, "expected 'u v' or 'u v weight'");
        ArcLine a{line_no, parse_vertex(tok[0]), parse_vertex(tok[1]), std::nullopt};
        if (tok.size() == 3) a.weight = parse_real(tok[2], "weight");
        arcs.push_back(a);
      }
    } catch (const ValidationError& e) {
      if (std::string_view(e.what()).starts_with("line ")) throw;
      fail_at(line_no, e.what());
    }
  }
  if (n)
    for (const auto& a : arcs)
      if (a.from > *n || a.to > *n) fail_at(a.line_no, "vertex id exceeds declared n");
  return assemble(s, n, declared, arcs, blocks);
}

Digraph parse_digraph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  try {
    const Semiring s = Semiring::by_name(j.value("semiring", std::string("boolean")));
    std::vector<Vertex> vertices;
    if (j.contains("vertices")) {
      for (const auto& v : j.at("vertices")) vertices.push_back(v.get<Vertex>());
    } else {
      const auto n = j.at("n").get<std::size_t>();
      for (Vertex v = 1; v <= n; ++v) vertices.push_back(v);
    }
    Digraph d(vertices, s);
    for (const auto& a : j.value("arcs", nlohmann::json::array())) {
      const Weight w = a.contains("value") ? a.at("value").get<double>() : s.one();
      d.add_arc(a.at("from").get<Vertex>(), a.at("to").get<Vertex>(), w);
    }
    for (const auto& b : j.value("blocks", nlohmann::json::array()))
      d.set_members(b.at("id").get<Vertex>(), b.at("members").get<std::vector<Vertex>>());
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("JSON digraph: ") + e.what());
  }
}

Digraph parse_digraph_csv(std::string_view text, const Semiring& s) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && strip_comment(lines[i]).empty()) ++i;
  if (i == lines.size() || !strip_comment(lines[i]).starts_with("from,to,value"))
    throw ValidationError("CSV digraph must start with header 'from,to,value'");
  std::set<Vertex> declared;
  std::vector<ArcLine> arcs;
  std::vector<std::pair<Vertex, std::vector<Vertex>>> blocks;
  for (++i; i < lines.size(); ++i) {
    const auto line = strip_comment(lines[i]);
    if (line.empty()) continue;
    const auto f = csv_fields(line);
    if (f.size() < 3 || f.size() > 4) fail_at(i + 1, "expected 3 or 4 CSV fields");
    try {
      const Vertex from = parse_vertex(f[0]);
      if (f[1].empty()) {
        declared.insert(from);
        if (f.size() == 4 && !f[3].empty()) {
          std::vector<Vertex> members;
          for (auto t : tokens(f[3])) members.push_back(parse_vertex(t));
          blocks.emplace_back(from, std::move(members));
        }
        continue;
      }
      ArcLine a{i + 1, from, parse_vertex(f[1]), std::nullopt};
      if (!f[2].empty()) a.weight = parse_real(f[2], "weight");
      declared.insert(a.from);
      declared.insert(a.to);
      arcs.push_back(a);
    } catch (const ValidationError& e) {
      if (std::string_view(e.what()).starts_with("line ")) throw;
      fail_at(i + 1, e.what());
    }
  }
  return assemble(s, std::nullopt, declared, arcs, blocks);
}

Digraph parse_digraph_as(std::string_view text, OutputFormat f, const Semiring& s) {
  switch (f) {
    case OutputFormat::kJson: {
      Digraph d = parse_digraph_json(text);
      if (d.semiring() != s)
        throw ValidationError("JSON semiring '" + std::string(d.semiring().name()) +
                              "' differs from the requested '" + std::string(s.name()) + "'");
      return d;
    }
    case OutputFormat::kCsv:
      return parse_digraph_csv(text, s);
    case OutputFormat::kEdgelist:
      break;
  }
  return parse_digraph(text, s);
}

std::string serialize_digraph(const Digraph& d, OutputFormat f, bool compact_ids) {
  std::map<Vertex, Vertex> id;
  {
    Vertex next = 1;
    for (Vertex v : d.vertices()) id[v] = compact_ids ? next++ : v;
  }
  const auto vertices = d.vertices();
  const bool boolean = d.semiring().is_boolean();
  const auto arcs = d.arcs();
  const auto& blocks = d.merged_members();

  std::ostringstream os;
  switch (f) {
    case OutputFormat::kEdgelist: {
      os << "# semiring " << d.semiring().name() << "\n";
      const bool dense = compact_ids || vertices.empty() || vertices.back() == vertices.size();
      if (dense) {
        os << "n " << vertices.size() << "\n";
      } else {
        os << "vertices " << join_ids(vertices, ' ') << "\n";
      }
      for (const auto& [v, members] : blocks) os << "block " << id.at(v) << " " << join_ids(members, ' ') << "\n";
      for (const auto& a : arcs) {
        os << id.at(a.from) << " " << id.at(a.to);
        if (!boolean) os << " " << format_number(a.value);
        os << "\n";
      }
      break;
    }
    case OutputFormat::kJson: {
      nlohmann::ordered_json j;
      j["n"] = vertices.size();
      j["semiring"] = std::string(d.semiring().name());
      auto& vs = j["vertices"] = nlohmann::ordered_json::array();
      for (Vertex v : vertices) vs.push_back(id.at(v));
      auto& as = j["arcs"] = nlohmann::ordered_json::array();
      for (const auto& a : arcs)
        as.push_back({{"from", id.at(a.from)}, {"to", id.at(a.to)}, {"value", a.value}});
      auto& bs = j["blocks"] = nlohmann::ordered_json::array();
      for (const auto& [v, members] : blocks) bs.push_back({{"id", id.at(v)}, {"members", members}});
      os << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::kCsv: {
      os << "from,to,value,members\n";
      for (Vertex v : vertices) {
        os << id.at(v) << ",,,";
        if (auto it = blocks.find(v); it != blocks.end()) os << join_ids(it->second, ' ');
        os << "\n";
      }
      for (const auto& a : arcs) os << id.at(a.from) << "," << id.at(a.to) << "," << format_number(a.value) << ",\n";
      break;
    }
  }
  return os.str();
}

Coloring parse_labels(std::string_view text) {
  std::map<Vertex, Color> seen;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = strip_comment(lines[i]);
    if (line.empty()) continue;
    const auto tok = tokens(line, " \t\r,");
    if (tok.size() != 2) fail_at(i + 1, "expected 'vertex color'");
    try {
      const Vertex v = parse_vertex(tok[0]);
      if (!seen.emplace(v, parse_int<Color>(tok[1], "color")).second)
        fail_at(i + 1, "vertex " + std::to_string(v) + " labelled twice");
    } catch (const ValidationError& e) {
      if (std::string_view(e.what()).starts_with("line ")) throw;
      fail_at(i + 1, e.what());
    }
  }
  Coloring c;
  for (const auto& [v, color] : seen) {
    if (v != c.labels.size() + 1) throw ValidationError("vertex " + std::to_string(c.labels.size() + 1) + " has no label");
    c.labels.push_back(color);
  }
  return c;
}

PartialPartition parse_partition(std::string_view text, std::size_t n) {
  std::vector<std::vector<Vertex>> blocks;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = strip_comment(lines[i]);
    if (line.empty()) continue;
    const auto tok = tokens(line, " \t\r,");
    try {
      if (tok.front() == "n") {
        if (tok.size() != 2) fail_at(i + 1, "expected 'n <count>'");
        n = parse_int<std::size_t>(tok[1], "ground set size");
        continue;
      }
      std::vector<Vertex> block;
      for (auto t : tok) block.push_back(parse_vertex(t));
      blocks.push_back(std::move(block));
    } catch (const ValidationError& e) {
      if (std::string_view(e.what()).starts_with("line ")) throw;
      fail_at(i + 1, e.what());
    }
  }
  return PartialPartition(n, std::move(blocks));
}

DTCN parse_contacts(std::string_view text, std::size_t n) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && strip_comment(lines[i]).empty()) ++i;
  if (i == lines.size() || strip_comment(lines[i]) != "source,target,time")
    throw ValidationError("contact CSV must start with header 'source,target,time'");
  std::vector<Contact> contacts;
  for (++i; i < lines.size(); ++i) {
    const auto line = strip_comment(lines[i]);
    if (line.empty()) continue;
    const auto f = csv_fields(line);
    if (f.size() != 3) fail_at(i + 1, "expected source,target,time");
    try {
      contacts.push_back({parse_vertex(f[0]), parse_vertex(f[1]), parse_real(f[2], "time")});
    } catch (const ValidationError& e) {
      fail_at(i + 1, e.what());
    }
  }
  if (contacts.empty()) throw ValidationError("contact network is empty");
  std::size_t top = 0;
  for (const auto& c : contacts) top = std::max<std::size_t>({top, c.source, c.target});
  if (n == 0) n = top;
  if (top > n) throw ValidationError("contact endpoint exceeds n = " + std::to_string(n));
  return DTCN(n, contacts);
}

std::string serialize_contacts(const DTCN& d) {
  std::ostringstream os;
  os << "source,target,time\n";
  for (const auto& c : d.contacts()) os << c.source << "," << c.target << "," << format_number(c.time) << "\n";
  return os.str();
}

std::string serialize_renorm_csv(const RenormGrid& g) {
  std::ostringstream os;
  os << "N,n,value\n";
  for (std::size_t N = 0; N < g.values.size(); ++N) os << N << "," << g.n << "," << format_number(g.values[N]) << "\n";
  return os.str();
}

std::string serialize_frequencies_csv(const MonteCarloSummary& s, std::size_t n) {
  std::ostringstream os;
  os << "trial,n,value\n";
  for (std::size_t t = 0; t < s.frequencies.size(); ++t)
    os << t << "," << n << "," << format_number(s.frequencies[t]) << "\n";
  return os.str();
}

namespace {

// Comma-separated list; spaces around items are allowed, empty items are not.
template <typename T>
std::vector<T> parse_list(std::string_view text, const char* what) {
  std::vector<T> out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const auto parts = tokens(item, " \t");
    if (parts.size() != 1) throw ValidationError(std::string("malformed ") + what + " list '" + std::string(text) + "'");
    out.push_back(parse_int<T>(parts[0], what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::vector<std::size_t> parse_size_list(std::string_view text) { return parse_list<std::size_t>(text, "size"); }

std::vector<Color> parse_color_list(std::string_view text) { return parse_list<Color>(text, "color"); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace pathabs
