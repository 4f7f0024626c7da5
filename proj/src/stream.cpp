#include "cwstream/stream.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace cwstream {

namespace {

// Canonical 64-bit key for an undirected edge; n <= 2^32 so this is collision-free.
std::uint64_t edge_key(VertexId a, VertexId b) {
  const std::uint64_t lo = std::min(a, b);
  const std::uint64_t hi = std::max(a, b);
  return (lo << 32) | hi;
}

void check_vertex(VertexId v, std::size_t n, std::size_t line) {
  if (v >= n) {
    throw ValidationError(ValidationErrorKind::VertexOutOfRange,
                          "vertex " + std::to_string(v) + " out of range for declared n=" +
                              std::to_string(n),
                          line);
  }
}

}  // namespace

Graph materialize(const GraphStream& stream) {
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  std::vector<bool> arrived(stream.declared_n, false);

  auto add_edge = [&](VertexId a, VertexId b) {
    if (a == b) {
      throw ValidationError(ValidationErrorKind::SelfLoop,
                            "self-loop at vertex " + std::to_string(a));
    }
    check_vertex(a, stream.declared_n, 0);
    check_vertex(b, stream.declared_n, 0);
    if (!seen.insert(edge_key(a, b)).second) {
      throw ValidationError(ValidationErrorKind::DuplicateEdge,
                            "duplicate edge {" + std::to_string(std::min(a, b)) + "," +
                                std::to_string(std::max(a, b)) + "}");
    }
    edges.push_back(make_edge(a, b));
  };

  for (const StreamEvent& ev : stream.events) {
    if (stream.mode == StreamMode::EdgeArrival) {
      const auto* ea = std::get_if<EdgeArrival>(&ev);
      if (!ea) {
        throw ValidationError(ValidationErrorKind::ModeMismatch,
                              "vertex-arrival event in edge-arrival stream");
      }
      add_edge(ea->e.u, ea->e.v);
    } else {
      const auto* va = std::get_if<VertexArrival>(&ev);
      if (!va) {
        throw ValidationError(ValidationErrorKind::ModeMismatch,
                              "edge-arrival event in vertex-arrival stream");
      }
      check_vertex(va->v, stream.declared_n, 0);
      if (arrived[va->v]) {
        throw ValidationError(ValidationErrorKind::ArrivalOrder,
                              "vertex " + std::to_string(va->v) + " arrived twice");
      }
      arrived[va->v] = true;
      for (VertexId u : va->back) {
        check_vertex(u, stream.declared_n, 0);
        if (!arrived[u]) {
          throw ValidationError(ValidationErrorKind::ArrivalOrder,
                                "back-neighbor " + std::to_string(u) + " of vertex " +
                                    std::to_string(va->v) + " has not arrived yet");
        }
        add_edge(va->v, u);
      }
    }
  }
  return Graph::from_edges(stream.declared_n, edges);
}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_u64(std::string_view tok, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ValidationError(ValidationErrorKind::Parse,
                          "line " + std::to_string(line) + ": expected " + what + ", got '" +
                              std::string(tok) + "'",
                          line);
  }
  return value;
}

VertexId parse_vertex(std::string_view tok, std::size_t line) {
  std::uint64_t v = parse_u64(tok, line, "vertex id");
  if (v > 0xffffffffULL) {
    throw ValidationError(ValidationErrorKind::Parse,
                          "line " + std::to_string(line) + ": vertex id too large", line);
  }
  return static_cast<VertexId>(v);
}

}  // namespace

GraphStream read_stream(std::istream& in) {
  GraphStream stream;
  std::string raw;
  std::size_t lineno = 0;
  bool have_header = false;

  while (std::getline(in, raw)) {
    ++lineno;
    auto toks = split_ws(raw);
    if (toks.empty()) continue;

    if (!have_header) {
      if (toks.size() != 4 || toks[0] != "n" || toks[2] != "mode") {
        throw ValidationError(ValidationErrorKind::Parse,
                              "line " + std::to_string(lineno) +
                                  ": expected header 'n <N> mode <edge|vertex>'",
                              lineno);
      }
      stream.declared_n = parse_u64(toks[1], lineno, "vertex count");
      if (toks[3] == "edge") {
        stream.mode = StreamMode::EdgeArrival;
      } else if (toks[3] == "vertex") {
        stream.mode = StreamMode::VertexArrival;
      } else {
        throw ValidationError(ValidationErrorKind::Parse,
                              "line " + std::to_string(lineno) + ": unknown mode '" +
                                  std::string(toks[3]) + "'",
                              lineno);
      }
      have_header = true;
      continue;
    }

    if (toks[0] == "e") {
      if (stream.mode != StreamMode::EdgeArrival) {
        throw ValidationError(ValidationErrorKind::ModeMismatch,
                              "line " + std::to_string(lineno) +
                                  ": edge event in vertex-arrival stream",
                              lineno);
      }
      if (toks.size() != 3) {
        throw ValidationError(ValidationErrorKind::Parse,
                              "line " + std::to_string(lineno) + ": expected 'e <u> <v>'",
                              lineno);
      }
      stream.events.push_back(
          EdgeArrival{{parse_vertex(toks[1], lineno), parse_vertex(toks[2], lineno)}});
    } else if (toks[0] == "v") {
      if (stream.mode != StreamMode::VertexArrival) {
        throw ValidationError(ValidationErrorKind::ModeMismatch,
                              "line " + std::to_string(lineno) +
                                  ": vertex event in edge-arrival stream",
                              lineno);
      }
      if (toks.size() < 2) {
        throw ValidationError(ValidationErrorKind::Parse,
                              "line " + std::to_string(lineno) +
                                  ": expected 'v <id> [<back>...]'",
                              lineno);
      }
      VertexArrival va;
      va.v = parse_vertex(toks[1], lineno);
      va.back.reserve(toks.size() - 2);
      for (std::size_t i = 2; i < toks.size(); ++i) {
        va.back.push_back(parse_vertex(toks[i], lineno));
      }
      stream.events.push_back(std::move(va));
    } else {
      throw ValidationError(ValidationErrorKind::Parse,
                            "line " + std::to_string(lineno) + ": unknown event '" +
                                std::string(toks[0]) + "'",
                            lineno);
    }
  }

  if (!have_header) {
    throw ValidationError(ValidationErrorKind::Parse, "missing stream header", 0);
  }
  return stream;
}

GraphStream read_stream_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_stream(in);
}

void write_stream(std::ostream& out, const GraphStream& stream) {
  out << "n " << stream.declared_n << " mode "
      << (stream.mode == StreamMode::EdgeArrival ? "edge" : "vertex") << '\n';
  for (const StreamEvent& ev : stream.events) {
    if (const auto* ea = std::get_if<EdgeArrival>(&ev)) {
      out << "e " << ea->e.u << ' ' << ea->e.v << '\n';
    } else {
      const auto& va = std::get<VertexArrival>(ev);
      out << "v " << va.v;
      for (VertexId u : va.back) out << ' ' << u;
      out << '\n';
    }
  }
}

void write_stream_file(const std::string& path, const GraphStream& stream) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_stream(out, stream);
}

}  // namespace cwstream
