// Command-line front end: generate or read graph streams, run seeded
// estimator trial batches, compare against offline oracles, and write CSV.
//
// Examples:
//   cwstream --mode edge --gen gnm:n=10000,m=40000 --est eps --eps 0.25 \
//            --trials 50 --seed 1 --out results.csv
//   cwstream --mode vertex --gen gadget:k=16,z=2,c=2,x=1+3,y=0+2 --est vertex \
//            --trials 10 --emit gadget_stream.txt
//   cwstream --mode vertex --input stream.txt --est degtest --d 8 --eps 0.5

#include <CLI11.hpp>

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "cwstream/harness.hpp"
#include "cwstream/stream_gen.hpp"

namespace {

using namespace cwstream;

constexpr int kExitValidation = 2;

std::vector<std::pair<std::string, std::string>> parse_kv(const std::string& body) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    const std::size_t next = body.find(',', pos);
    const std::string item = body.substr(pos, next == std::string::npos ? next : next - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("generator parameter '" + item + "' is not key=value");
    }
    out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

std::vector<std::uint32_t> parse_id_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t next = s.find('+', pos);
    const std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
    if (!tok.empty()) out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

struct GeneratedInstance {
  GraphStream stream;
  std::optional<GadgetStream> gadget;  // set when the source is a gadget
};

GeneratedInstance generate(const std::string& spec_text, StreamMode mode,
                           const std::string& order, std::uint64_t order_seed) {
  const std::size_t colon = spec_text.find(':');
  const std::string kind = spec_text.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : spec_text.substr(colon + 1);

  OrderPolicy policy = OrderPolicy::shuffle(order_seed);
  if (order == "degree-asc") policy = OrderPolicy::degree_ascending();
  else if (order == "degree-desc") policy = OrderPolicy::degree_descending();
  else if (order != "shuffle") throw std::invalid_argument("unknown --order " + order);

  GeneratedInstance out;
  if (kind == "gnm") {
    std::size_t n = 0, m = 0;
    std::uint64_t seed = 1;
    for (const auto& [k, v] : parse_kv(body)) {
      if (k == "n") n = std::stoull(v);
      else if (k == "m") m = std::stoull(v);
      else if (k == "seed") seed = std::stoull(v);
      else throw std::invalid_argument("unknown gnm parameter '" + k + "'");
    }
    out.stream = to_stream(gen_gnm(n, m, seed), mode, policy);
    return out;
  }
  if (kind == "gadget") {
    GadgetSpec spec;
    std::uint64_t seed = 1;
    bool arrival_order = true;  // the two-party arrival order; false = policy order
    for (const auto& [k, v] : parse_kv(body)) {
      if (k == "k") spec.k = std::stoull(v);
      else if (k == "z") spec.z = std::stoull(v);
      else if (k == "c") spec.c = std::stoull(v);
      else if (k == "x") spec.X = parse_id_list(v);
      else if (k == "y") spec.Y = parse_id_list(v);
      else if (k == "seed") seed = std::stoull(v);
      else if (k == "order") arrival_order = v != "policy";
      else throw std::invalid_argument("unknown gadget parameter '" + k + "'");
    }
    spec.validate();
    if (mode == StreamMode::VertexArrival && arrival_order) {
      out.gadget = gen_gadget_stream(spec, seed);
      out.stream = out.gadget->stream;
    } else {
      out.stream = to_stream(gen_gadget(spec), mode, policy);
    }
    return out;
  }
  throw std::invalid_argument("unknown generator '" + kind + "' (expected gnm or gadget)");
}

void write_gadget_sidecar(const std::string& path, const GadgetStream& gs) {
  nlohmann::json j;
  j["k"] = gs.spec.k;
  j["z"] = gs.spec.z;
  j["c"] = gs.spec.c;
  j["x"] = gs.spec.X;
  j["y"] = gs.spec.Y;
  j["n"] = gs.spec.total_n();
  j["cut_index"] = gs.cut_index;
  j["intersecting"] = gs.spec.intersecting();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
}

int run(int argc, char** argv) {
  CLI::App app{"Caro-Wei bound estimation on graph streams"};

  std::string mode_name;
  std::string input_path;
  std::string gen_spec;
  std::string est_name = "eps";
  std::string order = "shuffle";
  std::string oracle = "auto";
  std::string out_path = "-";
  std::string emit_path;
  TrialPlan plan;
  std::uint64_t order_seed = 1;

  app.add_option("--mode", mode_name, "Stream mode: edge or vertex");
  auto* input_opt = app.add_option("--input", input_path, "Read a stream file");
  auto* gen_opt =
      app.add_option("--gen", gen_spec,
                     "Generate an instance: gnm:n=..,m=..[,seed=..] or "
                     "gadget:k=..,z=..,c=..[,x=i+j+..][,y=..][,seed=..][,order=policy]");
  input_opt->excludes(gen_opt);
  app.add_option("--est", est_name, "Estimator: eps, phi, vertex, or degtest")
      ->check(CLI::IsMember({"eps", "phi", "vertex", "degtest"}));
  app.add_option("--eps", plan.eps, "Accuracy for eps and degtest estimators");
  app.add_option("--phi", plan.phi, "Approximation factor for the phi estimator");
  app.add_option("--gamma", plan.gamma, "Lower bound on beta; 0 = n/(avg degree + 1)");
  app.add_option("--d", plan.d, "Degree bound for degtest");
  app.add_option("--cap-override", plan.cap_override, "Sample capacity override (0 = derived)");
  app.add_option("--trials", plan.trials, "Seeded trials to run");
  app.add_option("--seed", plan.base_seed, "Base seed; trial t uses seed + t");
  app.add_option("--oracle", oracle, "auto or off")->check(CLI::IsMember({"auto", "off"}));
  app.add_option("--order", order, "Arrival order for generated streams")
      ->check(CLI::IsMember({"shuffle", "degree-asc", "degree-desc"}));
  app.add_option("--order-seed", order_seed, "Seed for the shuffle order");
  app.add_option("--out", out_path, "CSV output path, - for stdout");
  app.add_option("--emit", emit_path,
                 "Write the stream to this file (gadgets add a .json sidecar)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  StreamMode mode = StreamMode::EdgeArrival;
  if (mode_name == "edge") mode = StreamMode::EdgeArrival;
  else if (mode_name == "vertex") mode = StreamMode::VertexArrival;
  else if (!mode_name.empty()) throw std::invalid_argument("unknown --mode " + mode_name);

  GeneratedInstance instance;
  if (!gen_spec.empty()) {
    if (mode_name.empty()) throw std::invalid_argument("--gen requires --mode");
    instance = generate(gen_spec, mode, order, order_seed);
    plan.source = gen_spec;
  } else if (!input_path.empty()) {
    instance.stream = read_stream_file(input_path);
    if (!mode_name.empty() && instance.stream.mode != mode) {
      throw ValidationError(ValidationErrorKind::ModeMismatch,
                            "--mode disagrees with the stream header");
    }
    plan.source = input_path;
  } else {
    throw std::invalid_argument("one of --input or --gen is required");
  }

  if (!emit_path.empty()) {
    write_stream_file(emit_path, instance.stream);
    if (instance.gadget) write_gadget_sidecar(emit_path + ".json", *instance.gadget);
    std::cerr << "wrote stream to " << emit_path << '\n';
  }

  if (est_name == "eps") plan.estimator = EstimatorKind::EdgeEps;
  else if (est_name == "phi") plan.estimator = EstimatorKind::EdgePhi;
  else if (est_name == "vertex") plan.estimator = EstimatorKind::Vertex;
  else plan.estimator = EstimatorKind::DegTest;
  plan.oracle = oracle == "auto";

  const PlanResult result = run_plan(instance.stream, plan);

  if (out_path == "-") {
    write_csv(std::cout, result);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    write_csv(out, result);
  }
  print_summary(std::cerr, summarize(result));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}
