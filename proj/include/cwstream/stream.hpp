#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "cwstream/graph.hpp"

namespace cwstream {

enum class StreamMode { EdgeArrival, VertexArrival };

struct EdgeArrival {
  Edge e;
  friend bool operator==(const EdgeArrival&, const EdgeArrival&) = default;
};

// A vertex together with its edges to previously arrived vertices.
struct VertexArrival {
  VertexId v;
  std::vector<VertexId> back;
  friend bool operator==(const VertexArrival&, const VertexArrival&) = default;
};

using StreamEvent = std::variant<EdgeArrival, VertexArrival>;

// The vertex count is declared up front; estimators size their parameters
// from it before seeing any event.
struct GraphStream {
  StreamMode mode = StreamMode::EdgeArrival;
  std::size_t declared_n = 0;
  std::vector<StreamEvent> events;

  friend bool operator==(const GraphStream&, const GraphStream&) = default;
};

// Builds the graph defined by the stream, validating as it goes: vertex ids
// must be < declared_n, no self-loops or duplicate edges, events must match
// the stream mode, and vertex-arrival back-neighbors must have arrived
// strictly earlier (each vertex arrives at most once).
Graph materialize(const GraphStream& stream);

// Text format, one event per line.
//   header:  n <declaredN> mode <edge|vertex>
//   events:  e <u> <v>
//            v <id> [<back-neighbor>...]
GraphStream read_stream(std::istream& in);
GraphStream read_stream_file(const std::string& path);
void write_stream(std::ostream& out, const GraphStream& stream);
void write_stream_file(const std::string& path, const GraphStream& stream);

}  // namespace cwstream
