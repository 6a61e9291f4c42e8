#include "odrc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "odrc/cycles.hpp"
#include "odrc/generators.hpp"
#include "odrc/harness.hpp"
#include "odrc/io.hpp"
#include "odrc/metrics.hpp"
#include "odrc/oracles.hpp"
#include "odrc/orienter.hpp"
#include "odrc/rainbow.hpp"
#include "odrc/serialize.hpp"

namespace odrc::cli {
namespace {

// Bad command-line values that CLI11 cannot check on its own.
class UsageError : public Error {
 public:
  using Error::Error;
};

class Io {
 public:
  Io(std::istream& in, std::ostream& out, std::ostream& err)
      : in_(in), out_(out), err_(err) {}

  std::string read(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
      if (stdin_used_) throw UsageError("stdin can only be read once");
      stdin_used_ = true;
      buf << in_.rdbuf();
    } else {
      std::ifstream f(path);
      if (!f) throw UsageError("cannot read " + path);
      buf << f.rdbuf();
    }
    return buf.str();
  }

  void write(const std::string& path, const std::string& text) {
    if (path == "-") {
      out_ << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
  }

  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  bool stdin_used_ = false;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string dist(long long d) { return format_distance(static_cast<int>(d)); }

struct Options {
  std::string graph;
  std::string second;  // orientation, coloring or family name
  std::string output;
  std::string trace;
  std::string json;
  std::string certificates;
  std::string verify = "none";
  int threads = 1;
  std::uint64_t seed = 0;
  int max_edges = 0;
  int max_colors = 18;
  int k = 2;
  int face_len = 0;
  bool edge_transitive = false;
  std::map<std::string, int> params;
};

int cmd_analyze(Io& io, const Options& o) {
  Graph g = parse_graph(io.read(o.graph));
  GraphSummary s = summarize(g, o.threads);
  auto cut = bridges(g);
  std::vector<Vertex> centers;
  if (s.rad != kInf) centers = radius_diameter_centers(g, o.threads).centers;
  std::optional<int> zeta;
  if (g.n() <= 14) zeta = zeta_bruteforce(g);

  std::ostream& out = io.out();
  out << "n " << s.n << "\nm " << s.m << "\nrad " << dist(s.rad) << "\ndiam "
      << dist(s.diam) << "\ncenters";
  for (Vertex c : centers) out << ' ' << c;
  out << "\ngirth " << dist(s.girth) << "\neta " << dist(s.eta) << "\nbridges";
  for (EdgeId e : cut) out << ' ' << g.edge(e).u << '-' << g.edge(e).v;
  out << "\nzeta " << (zeta ? std::to_string(*zeta) : std::string("skipped (n > 14)"))
      << "\n";
  if (!o.json.empty()) {
    Json bridges_json = Json::array();
    for (EdgeId e : cut) bridges_json.push_back({g.edge(e).u, g.edge(e).v});
    Json j{{"n", s.n},
           {"m", s.m},
           {"rad", distance_json(s.rad)},
           {"diam", distance_json(s.diam)},
           {"centers", centers},
           {"girth", distance_json(s.girth)},
           {"eta", distance_json(s.eta)},
           {"min_degree", s.min_degree},
           {"bipartite", s.bipartite},
           {"bridges", std::move(bridges_json)},
           {"zeta", zeta ? Json(*zeta) : Json(nullptr)}};
    j["cycle_cover"] = to_json(g, cycle_cover(g, true, o.threads));
    io.write(o.json, dump(j));
  }
  return kExitOk;
}

int cmd_orient(Io& io, const Options& o) {
  Graph g = parse_graph(io.read(o.graph));
  auto res = orient(g);
  if (!o.trace.empty()) io.write(o.trace, dump(to_json(res.trace)));
  const std::string out_path = o.output.empty() ? "-" : o.output;
  io.write(out_path, serialize_orientation(g, res.orientation));
  if (out_path != "-") {
    auto report = verify_orientation_bounds(g, res.orientation, &res.trace, o.threads);
    io.out() << "center " << res.trace.center << "\nradius_bound "
             << res.trace.bounds.radius << "\ndiameter_bound " << res.trace.bounds.diameter
             << "\ndirected_radius " << dist(report.directed_radius)
             << "\ndirected_diameter " << dist(report.directed_diameter) << "\n";
    if (!report.pass) return kExitViolation;
  }
  return kExitOk;
}

int verify_certificates(Io& io, const Graph& g, const EdgeColoring& c,
                        const ColorTrace& t, const std::string& cert_path,
                        std::string& failure) {
  CertificateBuilder builder(g, t);
  std::string lines;
  for (Vertex x = 0; x < g.n(); ++x) {
    for (Vertex y = x + 1; y < g.n(); ++y) {
      auto cert = builder.build(x, y);
      if (!cert_path.empty()) lines += to_json(cert).dump() + "\n";
      if (!valid_certificate(g, c, cert) && failure.empty()) {
        failure = "certificate for " + std::to_string(x) + "," + std::to_string(y) +
                  " is not rainbow";
      }
    }
  }
  if (!cert_path.empty()) io.write(cert_path, lines);
  return failure.empty() ? kExitOk : kExitViolation;
}

int cmd_rainbow(Io& io, const Options& o) {
  if (o.verify != "none" && o.verify != "certificate" && o.verify != "exact") {
    throw UsageError("--verify must be none, certificate or exact");
  }
  Graph g = parse_graph(io.read(o.graph));
  auto res = rainbow_color(g);
  const int colors = res.coloring.color_count();
  if (o.verify == "exact" && colors > o.max_colors) {
    throw UsageError(std::to_string(colors) +
                     " colors is too many for the exact check; use --verify certificate");
  }
  if (!o.trace.empty()) io.write(o.trace, dump(to_json(res.trace)));
  const std::string out_path = o.output.empty() ? "-" : o.output;
  io.write(out_path, serialize_coloring(g, res.coloring));
  std::ostream& info = out_path == "-" ? io.err() : io.out();
  info << "colors=" << colors << " bound=" << res.trace.bound << "\n";

  int code = kExitOk;
  std::string failure;
  if (o.verify == "certificate" || !o.certificates.empty()) {
    code = verify_certificates(io, g, res.coloring, res.trace, o.certificates, failure);
  }
  if (o.verify == "exact") {
    auto check = is_rainbow_connected(g, res.coloring, o.max_colors, false, o.threads);
    if (!check.connected) {
      failure = "pair " + std::to_string(check.failing_pair->first) + "," +
                std::to_string(check.failing_pair->second) + " has no rainbow path";
      code = kExitViolation;
    }
  }
  if (res.trace.total_colors > res.trace.bound && g.m() > 0) {
    failure = "color count exceeds bound";
    code = kExitViolation;
  }
  if (o.verify != "none") info << "verify " << o.verify << ": " << (code ? "fail" : "pass") << "\n";
  if (!failure.empty()) info << failure << "\n";
  return code;
}

int cmd_generate(Io& io, const Options& o) {
  FamilySpec spec{o.second, o.params, o.seed};
  Graph g = generate(spec);
  io.write(o.output.empty() ? "-" : o.output, serialize_graph(g));
  return kExitOk;
}

int cmd_verify_orientation(Io& io, const Options& o) {
  Graph g = parse_graph(io.read(o.graph));
  Orientation orientation = parse_orientation(g, io.read(o.second));
  std::optional<OrientTrace> trace;
  if (!o.trace.empty()) {
    // Only the center is used.
    Json j = Json::parse(io.read(o.trace));
    OrientTrace t;
    t.center = j.at("center").get<Vertex>();
    if (!g.has_vertex(t.center)) throw UsageError("trace center not in graph");
    trace = t;
  }
  auto r = verify_orientation_bounds(g, orientation, trace ? &*trace : nullptr, o.threads);
  std::ostream& out = io.out();
  out << "strong " << (r.strong ? "yes" : "no") << "\ndirected_radius "
      << dist(r.directed_radius) << "\ndirected_diameter " << dist(r.directed_diameter)
      << "\nradius_bound " << r.bounds.radius << "\ndiameter_bound " << r.bounds.diameter
      << "\n";
  if (r.center_eccentricity) out << "center_eccentricity " << dist(*r.center_eccentricity) << "\n";
  out << (r.pass ? "pass" : "fail") << "\n";
  if (!o.json.empty()) io.write(o.json, dump(to_json(r)));
  return r.pass ? kExitOk : kExitViolation;
}

int cmd_verify_coloring(Io& io, const Options& o) {
  Graph g = parse_graph(io.read(o.graph));
  EdgeColoring c = parse_coloring(g, io.read(o.second));
  std::string failure;
  int code = kExitOk;
  std::string method;
  if (!o.trace.empty()) {
    method = "certificate";
    ColorTrace t = color_trace_from_json(Json::parse(io.read(o.trace)));
    code = verify_certificates(io, g, c, t, o.certificates, failure);
  } else if (c.color_count() <= o.max_colors) {
    method = "exact";
    auto check = is_rainbow_connected(g, c, o.max_colors, false, o.threads);
    if (!check.connected) {
      code = kExitViolation;
      failure = "pair " + std::to_string(check.failing_pair->first) + "," +
                std::to_string(check.failing_pair->second) + " has no rainbow path";
    }
  } else {
    throw UsageError("too many colors for the exact check; pass --trace for certificates");
  }
  io.out() << "colors " << c.color_count() << "\nmethod " << method << "\n"
           << (code ? "fail" : "pass") << "\n";
  if (!failure.empty()) io.out() << failure << "\n";
  return code;
}

int cmd_exhaustive(Io& io, const Options& o) {
  Graph g = parse_graph(io.read(o.graph));
  auto r = optimal_oriented_diameter(g, o.max_edges > 0 ? o.max_edges : 20, o.threads);
  io.out() << "best_diameter " << r.best_diam << "\nbest_radius " << r.best_rad
           << "\nstrong_orientations " << r.strong_count << "\nenumerated " << r.enumerated
           << "\n";
  if (!o.output.empty()) io.write(o.output, serialize_orientation(g, r.best_orientation));
  return kExitOk;
}

int cmd_exact_rc(Io& io, const Options& o) {
  Graph g = parse_graph(io.read(o.graph));
  int rc = exact_rc(g, o.max_edges > 0 ? o.max_edges : 8, o.threads);
  io.out() << "rc " << rc << "\n";
  return kExitOk;
}

int cmd_report(Io& io, const Options& o) {
  Graph g = parse_graph(io.read(o.graph));
  ReportOptions ro;
  ro.k = o.k;
  if (o.face_len > 0) ro.face_len = o.face_len;
  ro.edge_transitive = o.edge_transitive;
  ro.threads = o.threads;
  auto report = full_report(g, ro);
  io.out() << format_report_table(report);
  if (!o.json.empty()) io.write(o.json, dump(to_json(report)));
  return report.ok() ? kExitOk : kExitViolation;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Strong orientations and rainbow colorings of bridgeless graphs", "odrc"};
  app.require_subcommand(1);
  Options o;
  auto threads = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  };
  auto graph_arg = [&](CLI::App* sub) {
    sub->add_option("graph", o.graph, "Edge list file or -")->required();
  };

  auto* analyze = app.add_subcommand("analyze", "Print radius, diameter, eta, bridges and more");
  graph_arg(analyze);
  analyze->add_option("--json", o.json, "Write a JSON summary");
  threads(analyze);

  auto* orient_cmd = app.add_subcommand("orient", "Construct a strong orientation");
  graph_arg(orient_cmd);
  orient_cmd->add_option("-o,--output", o.output, "Orientation output (default stdout)");
  orient_cmd->add_option("--trace", o.trace, "Write the construction trace as JSON");
  threads(orient_cmd);

  auto* rainbow = app.add_subcommand("rainbow", "Construct a rainbow connected coloring");
  graph_arg(rainbow);
  rainbow->add_option("-o,--output", o.output, "Coloring output (default stdout)");
  rainbow->add_option("--trace", o.trace, "Write the construction trace as JSON");
  rainbow->add_option("--verify", o.verify, "none, certificate or exact");
  rainbow->add_option("--certificates", o.certificates, "Write certificates as JSON lines");
  rainbow->add_option("--max-colors", o.max_colors, "Color cap for the exact check");
  threads(rainbow);

  auto* gen = app.add_subcommand("generate", "Generate a graph family");
  gen->add_option("family", o.second, "Family name")->required();
  gen->add_option("-o,--output", o.output, "Output (default stdout)");
  gen->add_option("--seed", o.seed, "Seed for random families");
  for (const char* key : {"depth", "r", "eta", "copies", "k", "n", "m", "extra_ears"}) {
    gen->add_option_function<int>(std::string("--") + key,
                                  [&o, key](const int& v) { o.params[key] = v; });
  }

  auto* vo = app.add_subcommand("verify-orientation", "Check an orientation against the bounds");
  graph_arg(vo);
  vo->add_option("orientation", o.second, "Orientation file or -")->required();
  vo->add_option("--trace", o.trace, "Construction trace (checks its center too)");
  vo->add_option("--json", o.json, "Write the report as JSON");
  threads(vo);

  auto* vc = app.add_subcommand("verify-coloring", "Check that a coloring is rainbow connected");
  graph_arg(vc);
  vc->add_option("coloring", o.second, "Coloring file or -")->required();
  vc->add_option("--trace", o.trace, "Color trace for certificate checking");
  vc->add_option("--certificates", o.certificates, "Write certificates as JSON lines");
  vc->add_option("--max-colors", o.max_colors, "Color cap for the exact check");
  threads(vc);

  auto* ex = app.add_subcommand("exhaustive", "Optimal oriented diameter by enumeration");
  graph_arg(ex);
  ex->add_option("--max-edges", o.max_edges, "Edge cap (default 20)");
  ex->add_option("-o,--output", o.output, "Write a best orientation");
  threads(ex);

  auto* rc = app.add_subcommand("exact-rc", "Exact rainbow connection number");
  graph_arg(rc);
  rc->add_option("--max-edges", o.max_edges, "Edge cap (default 8)");
  threads(rc);

  auto* rep = app.add_subcommand("report", "Check every applicable bound");
  graph_arg(rep);
  rep->add_option("--k", o.k, "Neighborhood radius for the growth condition");
  rep->add_option("--face-len", o.face_len, "Assert a maximum face length");
  rep->add_flag("--edge-transitive", o.edge_transitive, "Assert edge transitivity");
  rep->add_option("--json", o.json, "Write the report as JSON");
  threads(rep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  Io io(in, out, err);
  try {
    if (analyze->parsed()) return cmd_analyze(io, o);
    if (orient_cmd->parsed()) return cmd_orient(io, o);
    if (rainbow->parsed()) return cmd_rainbow(io, o);
    if (gen->parsed()) return cmd_generate(io, o);
    if (vo->parsed()) return cmd_verify_orientation(io, o);
    if (vc->parsed()) return cmd_verify_coloring(io, o);
    if (ex->parsed()) return cmd_exhaustive(io, o);
    if (rc->parsed()) return cmd_exact_rc(io, o);
    if (rep->parsed()) return cmd_report(io, o);
  } catch (const nlohmann::json::exception& e) {
    err << "error: bad JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace odrc::cli
