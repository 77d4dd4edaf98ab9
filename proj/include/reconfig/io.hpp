#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "reconfig/reduction.hpp"
#include "reconfig/translate.hpp"

namespace reconfig {
namespace detail {

/// Line-oriented reader that skips blank lines and full-line # comments and
/// tracks line numbers for error messages.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<std::string> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++lineno_;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      if (line[first] == '#') continue;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return line;
    }
    return std::nullopt;
  }

  int lineno() const { return lineno_; }

 private:
  std::istream& in_;
  int lineno_ = 0;
};

inline long long parse_int(const std::string& tok, int lineno, const char* what) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (...) {
    pos = 0;
  }
  if (pos != tok.size())
    throw ParseError("line " + std::to_string(lineno) + ": expected " + what + ", got '" +
                     tok + "'");
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ParseError("line " + std::to_string(lineno) + ": " + what + " out of range: " + tok);
  return v;
}

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

inline std::vector<std::pair<int, int>> read_edge_lines(LineReader& r, long long m) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    auto line = r.next();
    if (!line)
      throw ParseError("line " + std::to_string(r.lineno()) + ": expected " +
                       std::to_string(m) + " edge lines, got " + std::to_string(i));
    const auto tok = tokens(*line);
    if (tok.size() != 2)
      throw ParseError("line " + std::to_string(r.lineno()) + ": expected 'u v'");
    edges.emplace_back(static_cast<int>(parse_int(tok[0], r.lineno(), "vertex id")),
                       static_cast<int>(parse_int(tok[1], r.lineno(), "vertex id")));
  }
  return edges;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Graph text format: header "n m", then m lines "u v"; lines starting with
// '#' are comments. Output is always canonical.

inline Graph read_graph(std::istream& in) {
  detail::LineReader r(in);
  auto header = r.next();
  if (!header) throw ParseError("line " + std::to_string(r.lineno()) + ": missing 'n m' header");
  const auto tok = detail::tokens(*header);
  if (tok.size() != 2)
    throw ParseError("line " + std::to_string(r.lineno()) + ": malformed header, expected 'n m'");
  const long long n = detail::parse_int(tok[0], r.lineno(), "vertex count");
  const long long m = detail::parse_int(tok[1], r.lineno(), "edge count");
  if (n < 0 || m < 0)
    throw ParseError("line " + std::to_string(r.lineno()) + ": counts must be nonnegative");
  const int header_line = r.lineno();
  auto edges = detail::read_edge_lines(r, m);
  if (auto extra = r.next())
    throw ParseError("line " + std::to_string(r.lineno()) + ": trailing content after " +
                     std::to_string(m) + " edges");
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const Error& e) {
    throw ParseError("graph starting at line " + std::to_string(header_line) + ": " + e.what());
  }
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

// ---------------------------------------------------------------------------
// Configs: whitespace-separated sorted id lists.

inline std::string format_config(const Config& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(c[i]);
  }
  return s;
}

inline Config parse_config_tokens(const std::vector<std::string>& tok, std::size_t from,
                                  int lineno) {
  std::vector<int> ids;
  for (std::size_t i = from; i < tok.size(); ++i)
    ids.push_back(static_cast<int>(detail::parse_int(tok[i], lineno, "vertex id")));
  return detail::canonical_config(std::move(ids));
}

// ---------------------------------------------------------------------------
// Property specs and rules as text: "clique k" | "biclique p q" |
// "mset s1 s2 ..." and "tj|cj|cs|cs1".

inline std::string format_spec(const PropertySpec& spec) {
  if (const auto* c = std::get_if<CliqueSpec>(&spec)) return "clique " + std::to_string(c->k);
  if (const auto* b = std::get_if<BicliqueSpec>(&spec))
    return "biclique " + std::to_string(b->p) + ' ' + std::to_string(b->q);
  std::string s = "mset";
  for (int v : std::get<MSetSpec>(spec).sizes) s += ' ' + std::to_string(v);
  return s;
}

inline PropertySpec parse_spec_tokens(const std::vector<std::string>& tok, std::size_t from,
                                      int lineno) {
  if (from >= tok.size())
    throw ParseError("line " + std::to_string(lineno) + ": missing property kind");
  const std::string& kind = tok[from];
  const auto arg = [&](std::size_t i) {
    if (from + i >= tok.size())
      throw ParseError("line " + std::to_string(lineno) + ": missing argument for " + kind);
    return static_cast<int>(detail::parse_int(tok[from + i], lineno, "property argument"));
  };
  PropertySpec spec;
  if (kind == "clique") {
    if (tok.size() != from + 2)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'clique k'");
    spec = CliqueSpec{arg(1)};
  } else if (kind == "biclique") {
    if (tok.size() != from + 3)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'biclique p q'");
    spec = BicliqueSpec{arg(1), arg(2)};
  } else if (kind == "mset") {
    std::vector<int> sizes;
    for (std::size_t i = from + 1; i < tok.size(); ++i)
      sizes.push_back(static_cast<int>(detail::parse_int(tok[i], lineno, "component size")));
    std::sort(sizes.begin(), sizes.end());
    spec = MSetSpec{std::move(sizes)};
  } else {
    throw ParseError("line " + std::to_string(lineno) + ": unknown property '" + kind + "'");
  }
  try {
    validate_spec(spec);
  } catch (const Error& e) {
    throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
  }
  return spec;
}

inline MoveRule parse_rule(const std::string& s, int lineno) {
  if (s == "tj") return MoveRule::TJ;
  if (s == "cj") return MoveRule::CJ;
  if (s == "cs") return MoveRule::CS;
  if (s == "cs1") return MoveRule::CS1;
  throw ParseError("line " + std::to_string(lineno) + ": unknown rule '" + s +
                   "' (expected tj|cj|cs|cs1)");
}

// ---------------------------------------------------------------------------
// Instance files: fields graph / property / rule / start / target. The graph
// is either inline ("graph inline n m" followed by edge lines) or a path to
// a graph file, resolved relative to the instance file's directory.

inline Instance read_instance(std::istream& in, const std::filesystem::path& base_dir = ".") {
  detail::LineReader r(in);
  std::optional<Graph> graph;
  std::optional<PropertySpec> spec;
  std::optional<MoveRule> rule;
  std::optional<Config> start, target;
  while (auto line = r.next()) {
    const auto tok = detail::tokens(*line);
    const std::string& key = tok.front();
    const auto reject_dup = [&](bool present) {
      if (present)
        throw ParseError("line " + std::to_string(r.lineno()) + ": duplicate field '" + key +
                         "'");
    };
    if (key == "graph") {
      reject_dup(graph.has_value());
      if (tok.size() >= 2 && tok[1] == "inline") {
        if (tok.size() != 4)
          throw ParseError("line " + std::to_string(r.lineno()) +
                           ": expected 'graph inline n m'");
        const long long n = detail::parse_int(tok[2], r.lineno(), "vertex count");
        const long long m = detail::parse_int(tok[3], r.lineno(), "edge count");
        const int header_line = r.lineno();
        auto edges = detail::read_edge_lines(r, m);
        try {
          graph = Graph(static_cast<int>(n), edges);
        } catch (const Error& e) {
          throw ParseError("graph starting at line " + std::to_string(header_line) + ": " +
                           e.what());
        }
      } else if (tok.size() == 2) {
        const auto path = base_dir / tok[1];
        std::ifstream gf(path);
        if (!gf) throw ParseError("cannot open graph file " + path.string());
        graph = read_graph(gf);
      } else {
        throw ParseError("line " + std::to_string(r.lineno()) +
                         ": expected 'graph <path>' or 'graph inline n m'");
      }
    } else if (key == "property") {
      reject_dup(spec.has_value());
      spec = parse_spec_tokens(tok, 1, r.lineno());
    } else if (key == "rule") {
      reject_dup(rule.has_value());
      if (tok.size() != 2)
        throw ParseError("line " + std::to_string(r.lineno()) + ": expected 'rule <name>'");
      rule = parse_rule(tok[1], r.lineno());
    } else if (key == "start") {
      reject_dup(start.has_value());
      start = parse_config_tokens(tok, 1, r.lineno());
    } else if (key == "target") {
      reject_dup(target.has_value());
      target = parse_config_tokens(tok, 1, r.lineno());
    } else {
      throw ParseError("line " + std::to_string(r.lineno()) + ": unknown field '" + key + "'");
    }
  }
  const auto require = [&](bool present, const char* name) {
    if (!present) throw ParseError(std::string("missing field '") + name + "'");
  };
  require(graph.has_value(), "graph");
  require(spec.has_value(), "property");
  require(rule.has_value(), "rule");
  require(start.has_value(), "start");
  require(target.has_value(), "target");
  Instance inst{std::move(*graph), std::move(*spec), *rule, std::move(*start),
                std::move(*target)};
  try {
    inst.validate();
  } catch (const Error& e) {
    throw ParseError(std::string("invalid instance: ") + e.what());
  }
  return inst;
}

inline Instance read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file " + path.string());
  return read_instance(in, path.has_parent_path() ? path.parent_path() : ".");
}

inline void write_instance(std::ostream& out, const Instance& inst) {
  out << "graph inline " << inst.graph.vertex_count() << ' ' << inst.graph.edge_count() << '\n';
  for (auto [u, v] : inst.graph.edges()) out << u << ' ' << v << '\n';
  out << "property " << format_spec(inst.spec) << '\n';
  out << "rule " << rule_name(inst.rule) << '\n';
  out << "start " << format_config(inst.start) << '\n';
  out << "target " << format_config(inst.target) << '\n';
}

// ---------------------------------------------------------------------------
// Sequence files: one config per line.

inline Sequence read_sequence(std::istream& in) {
  detail::LineReader r(in);
  Sequence seq;
  while (auto line = r.next())
    seq.steps.push_back(parse_config_tokens(detail::tokens(*line), 0, r.lineno()));
  if (seq.steps.empty()) throw ParseError("sequence file is empty");
  return seq;
}

inline Sequence read_sequence_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open sequence file " + path.string());
  return read_sequence(in);
}

inline void write_sequence(std::ostream& out, const Sequence& seq) {
  for (const Config& c : seq.steps) out << format_config(c) << '\n';
}

// ---------------------------------------------------------------------------
// Certificate files: instance paths (relative to the certificate's own
// directory), the two removed unlock vertices, and the origin map with lines
// "<id> -> v:<v>" or "<id> -> e:<u>,<v>".

inline void write_certificate(std::ostream& out, const ReductionCert& cert,
                              const std::string& source_path,
                              const std::string& produced_path) {
  out << "source " << source_path << '\n';
  out << "produced " << produced_path << '\n';
  out << "removed_start " << cert.removed_start << '\n';
  out << "removed_target " << cert.removed_target << '\n';
  out << "origin " << cert.origin.size() << '\n';
  for (std::size_t i = 0; i < cert.origin.size(); ++i) {
    const auto& o = cert.origin[i];
    out << i << " -> ";
    if (o.kind == VertexOrigin::Kind::Vertex)
      out << "v:" << o.vertex << '\n';
    else
      out << "e:" << o.edge.first << ',' << o.edge.second << '\n';
  }
}

struct CertificateFile {
  std::string source_path;
  std::string produced_path;
  int removed_start = -1;
  int removed_target = -1;
  std::vector<VertexOrigin> origin;
};

inline CertificateFile read_certificate(std::istream& in) {
  detail::LineReader r(in);
  CertificateFile cf;
  bool have_source = false, have_produced = false, have_rs = false, have_rt = false;
  while (auto line = r.next()) {
    const auto tok = detail::tokens(*line);
    const std::string& key = tok.front();
    if (key == "source" && tok.size() == 2) {
      cf.source_path = tok[1];
      have_source = true;
    } else if (key == "produced" && tok.size() == 2) {
      cf.produced_path = tok[1];
      have_produced = true;
    } else if (key == "removed_start" && tok.size() == 2) {
      cf.removed_start = static_cast<int>(detail::parse_int(tok[1], r.lineno(), "vertex id"));
      have_rs = true;
    } else if (key == "removed_target" && tok.size() == 2) {
      cf.removed_target = static_cast<int>(detail::parse_int(tok[1], r.lineno(), "vertex id"));
      have_rt = true;
    } else if (key == "origin" && tok.size() == 2) {
      const long long count = detail::parse_int(tok[1], r.lineno(), "origin count");
      for (long long i = 0; i < count; ++i) {
        auto oline = r.next();
        if (!oline)
          throw ParseError("line " + std::to_string(r.lineno()) + ": origin map truncated");
        const auto ot = detail::tokens(*oline);
        if (ot.size() != 3 || ot[1] != "->")
          throw ParseError("line " + std::to_string(r.lineno()) +
                           ": expected '<id> -> v:<v>' or '<id> -> e:<u>,<v>'");
        const long long id = detail::parse_int(ot[0], r.lineno(), "vertex id");
        if (id != i)
          throw ParseError("line " + std::to_string(r.lineno()) +
                           ": origin ids must be dense and ascending");
        const std::string& rhs = ot[2];
        if (rhs.rfind("v:", 0) == 0) {
          cf.origin.push_back(VertexOrigin::of_vertex(
              static_cast<int>(detail::parse_int(rhs.substr(2), r.lineno(), "vertex id"))));
        } else if (rhs.rfind("e:", 0) == 0) {
          const auto comma = rhs.find(',');
          if (comma == std::string::npos)
            throw ParseError("line " + std::to_string(r.lineno()) + ": expected 'e:<u>,<v>'");
          cf.origin.push_back(VertexOrigin::of_edge(
              static_cast<int>(detail::parse_int(rhs.substr(2, comma - 2), r.lineno(), "vertex id")),
              static_cast<int>(detail::parse_int(rhs.substr(comma + 1), r.lineno(), "vertex id"))));
        } else {
          throw ParseError("line " + std::to_string(r.lineno()) + ": unknown origin '" + rhs +
                           "'");
        }
      }
    } else {
      throw ParseError("line " + std::to_string(r.lineno()) + ": unknown field '" + key + "'");
    }
  }
  if (!have_source || !have_produced || !have_rs || !have_rt || cf.origin.empty())
    throw ParseError("certificate is missing required fields");
  return cf;
}

/// Reads a certificate and resolves it into a full ReductionCert by loading
/// the referenced instance files.
inline ReductionCert load_certificate(const std::filesystem::path& cert_path) {
  std::ifstream in(cert_path);
  if (!in) throw ParseError("cannot open certificate file " + cert_path.string());
  const CertificateFile cf = read_certificate(in);
  const auto base = cert_path.has_parent_path() ? cert_path.parent_path()
                                                : std::filesystem::path(".");
  const auto resolve = [&](const std::string& p) {
    std::filesystem::path fp(p);
    return fp.is_absolute() ? fp : base / fp;
  };
  ReductionCert cert;
  cert.source = read_instance_file(resolve(cf.source_path));
  cert.produced = read_instance_file(resolve(cf.produced_path));
  cert.origin = cf.origin;
  cert.removed_start = cf.removed_start;
  cert.removed_target = cf.removed_target;
  if (static_cast<int>(cert.origin.size()) != cert.produced.graph.vertex_count())
    throw ParseError("origin map size does not match the produced graph");
  return cert;
}

// ---------------------------------------------------------------------------
// Trace files: one line per original step.

inline void write_trace(std::ostream& out, const TranslationTrace& trace) {
  for (const auto& s : trace.steps)
    out << s.index << ' ' << s.leave << ' ' << s.enter << ' ' << s.unlock_before << ' '
        << s.unlock_after << " micro_moves=" << s.micro_moves << '\n';
}

}  // namespace reconfig
