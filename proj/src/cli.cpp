#include "dimerknot/cli.hpp"

#include <ostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "dimerknot/diagram.hpp"
#include "dimerknot/dimer.hpp"
#include "dimerknot/error.hpp"
#include "dimerknot/jones.hpp"
#include "dimerknot/kauffman.hpp"
#include "dimerknot/overlay.hpp"
#include "dimerknot/tait.hpp"
#include "json.hpp"

namespace dimerknot {

namespace {

struct RunConfig {
  std::string braid;
  int strands = 0;
  std::string method;
  std::string format = "text";
  int max_crossings = 24;
  bool parallel = false;
  bool debug_diagram = false;
  // kauffman
  int q = 0;
  bool framed = false;
  bool normalized = false;
  // matrix / graph / verify
  bool symbolic = false;
  std::string kind = "overlay";
  bool corpus = false;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::StrandMismatch:
    case ErrorCode::ZeroExponent:
    case ErrorCode::InvalidArgument:
    case ErrorCode::NegativeIndex:
      return kExitParse;
    case ErrorCode::TooManyCrossings:
    case ErrorCode::TooLarge:
      return kExitCap;
    default:
      return kExitUnsupported;
  }
}

class Runner {
 public:
  Runner(const RunConfig& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

  int jones_or_bracket(bool jones_mode) {
    const BraidWord w = word();
    const Method method = cfg_.method.empty() ? Method::Det : parse_method(cfg_.method);
    JonesOptions options;
    options.state_sum = state_sum_options();
    const LaurentPoly1 p = jones_mode ? jones(w, method, options) : bracket(w, method, options);
    if (cfg_.format == "json")
      out_ << to_json(p) << '\n';
    else
      out_ << to_string(p) << '\n';
    return kExitOk;
  }

  int kauffman() {
    KauffmanMethod method = KauffmanMethod::Skein;
    if (cfg_.method == "prop")
      method = KauffmanMethod::Prop;
    else if (cfg_.method == "closed")
      method = KauffmanMethod::Closed;
    else if (!cfg_.method.empty() && cfg_.method != "skein")
      throw Error(ErrorCode::InvalidArgument, "kauffman method must be skein, prop or closed");
    const LaurentPoly2 p = cfg_.normalized ? F2q(cfg_.q, method) : K2q(cfg_.q, method);
    out_ << (cfg_.format == "json" ? to_json(p) : to_string(p)) << '\n';
    return kExitOk;
  }

  int matrix() {
    const OverlayGraph g = signed_overlay(word());
    out_ << (cfg_.format == "json" ? matrix_to_json(g, cfg_.symbolic) : matrix_to_text(g, cfg_.symbolic));
    if (cfg_.format == "json") out_ << '\n';
    return kExitOk;
  }

  int graph() {
    const BraidWord w = word();
    const LinkDiagram d = build_diagram(w);
    if (cfg_.kind == "overlay") {
      const OverlayGraph g = signed_overlay(w);
      if (cfg_.format == "json")
        out_ << overlay_to_json(g) << '\n';
      else if (cfg_.format == "dot")
        out_ << overlay_to_dot(g);
      else
        out_ << overlay_text(g);
      return kExitOk;
    }
    if (cfg_.kind != "tait" && cfg_.kind != "dual")
      throw Error(ErrorCode::InvalidArgument, "graph kind must be tait, dual or overlay");
    TaitGraph t = build_tait(d);
    if (cfg_.kind == "dual") t = dual_tait(t, d);
    if (cfg_.format == "json")
      out_ << tait_to_json(t) << '\n';
    else if (cfg_.format == "dot")
      out_ << tait_to_dot(t);
    else
      out_ << tait_text(t);
    return kExitOk;
  }

  int verify() {
    std::vector<BraidWord> words;
    if (cfg_.corpus)
      words = family_corpus();
    else
      words.push_back(word());
    const StateSumOptions options = state_sum_options();
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    std::size_t failures = 0;
    for (const auto& w : words) {
      const VerifyReport r = verify_word(w, options);
      if (!r.pass) ++failures;
      if (cfg_.format == "json") {
        reports.push_back(report_json(r));
      } else if (cfg_.corpus) {
        out_ << (r.pass ? "PASS " : "FAIL ") << to_string(w) << '\n';
      } else {
        report_text(r);
      }
    }
    if (cfg_.format == "json") {
      out_ << (cfg_.corpus ? reports.dump(2) : reports[0].dump(2)) << '\n';
    } else if (cfg_.corpus) {
      out_ << words.size() - failures << '/' << words.size() << " words passed\n";
    }
    return failures == 0 ? kExitOk : kExitMismatch;
  }

  void debug_diagram() {
    if (cfg_.debug_diagram && !cfg_.braid.empty()) err_ << diagram_to_json(build_diagram(word())) << '\n';
  }

 private:
  BraidWord word() const {
    if (cfg_.braid.empty()) throw Error(ErrorCode::InvalidArgument, "--braid is required");
    return parse_braid(cfg_.braid, cfg_.strands > 0 ? std::optional<int>(cfg_.strands) : std::nullopt);
  }

  StateSumOptions state_sum_options() const {
    StateSumOptions o;
    o.max_crossings = cfg_.max_crossings;
    o.threads = cfg_.parallel ? std::max(1U, std::thread::hardware_concurrency()) : 1U;
    return o;
  }

  static std::string overlay_text(const OverlayGraph& g) {
    std::ostringstream s;
    s << "crossings:";
    for (int id : g.crossing_ids) s << " c" << id;
    s << "\nfaces:";
    for (std::size_t i = 0; i < g.face_ids.size(); ++i)
      s << " f" << g.face_ids[i] << (g.face_shaded[i] ? "*" : "");
    s << "\nedges:\n";
    for (const auto& e : g.edges) {
      s << "  c" << g.crossing_ids[static_cast<std::size_t>(e.crossing)] << " -- f"
        << g.face_ids[static_cast<std::size_t>(e.face)] << "  " << (e.kasteleyn_sign < 0 ? "-" : "+")
        << letter_name(e.letter) << '\n';
    }
    return s.str();
  }

  static std::string tait_text(const TaitGraph& t) {
    std::ostringstream s;
    s << "vertices:";
    for (int f : t.vertex_faces) s << " f" << f;
    s << "\nedges:\n";
    for (const auto& e : t.edges) {
      s << "  c" << e.crossing_id << ": f" << t.vertex_faces[static_cast<std::size_t>(e.u)] << " -- f"
        << t.vertex_faces[static_cast<std::size_t>(e.v)] << "  " << (e.sign < 0 ? "-" : "+") << '\n';
    }
    return s.str();
  }

  static nlohmann::ordered_json report_json(const VerifyReport& r) {
    nlohmann::ordered_json j;
    j["braid"] = to_string(r.word);
    for (Method m : {Method::Det, Method::Matchings, Method::Trees, Method::StateSum})
      j["jones"][to_string(m)] = to_string(r.jones[static_cast<std::size_t>(m)]);
    j["matchings"] = r.matchings;
    j["trees"] = r.trees;
    j["kasteleyn"] = r.kasteleyn;
    j["pass"] = r.pass;
    return j;
  }

  void report_text(const VerifyReport& r) {
    out_ << "braid      " << to_string(r.word) << '\n';
    for (Method m : {Method::Det, Method::Matchings, Method::Trees, Method::StateSum}) {
      std::string name = to_string(m);
      name.resize(11, ' ');
      out_ << name << to_string(r.jones[static_cast<std::size_t>(m)]) << '\n';
    }
    out_ << "matchings  " << r.matchings << '\n';
    out_ << "trees      " << r.trees << '\n';
    out_ << "kasteleyn  " << (r.kasteleyn ? "ok" : "violated") << '\n';
    out_ << (r.pass ? "PASS" : "FAIL") << '\n';
  }

  const RunConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Jones and Kauffman polynomials of braid closures via dimers"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--braid", cfg.braid, "Braid word, e.g. \"s1^3 s2^-1\"");
  app.add_option("--strands", cfg.strands, "Strand count (default: largest generator + 1)");
  app.add_option("--method", cfg.method,
                 "det|matchings|trees|statesum (jones, bracket); skein|prop|closed (kauffman)");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--max-crossings", cfg.max_crossings, "Crossing cap for trees and statesum")
      ->check(CLI::PositiveNumber);
  app.add_flag("--parallel", cfg.parallel, "Split the state sum across threads");
  app.add_flag("--debug-diagram", cfg.debug_diagram, "Dump the diagram as JSON to stderr");

  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial in A");
  auto* bracket_cmd = app.add_subcommand("bracket", "Kauffman bracket in A");
  auto* kauffman_cmd = app.add_subcommand("kauffman", "Kauffman polynomial of the (2,q) torus link");
  kauffman_cmd->add_option("--q", cfg.q, "Number of half twists")->required();
  auto* framed = kauffman_cmd->add_flag("--framed", cfg.framed, "Regular isotopy invariant (default)");
  auto* normalized = kauffman_cmd->add_flag("--normalized", cfg.normalized, "Apply the a^-q writhe factor");
  framed->excludes(normalized);
  auto* matrix_cmd = app.add_subcommand("matrix", "Kasteleyn-signed overlay adjacency matrix");
  matrix_cmd->add_flag("--symbolic", cfg.symbolic, "Letters instead of specialised weights");
  auto* graph_cmd = app.add_subcommand("graph", "Tait, dual Tait or overlay graph");
  graph_cmd->add_option("--kind", cfg.kind, "Graph kind")->check(CLI::IsMember({"tait", "dual", "overlay"}));
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check all methods");
  verify_cmd->add_flag("--corpus", cfg.corpus, "Sweep the family corpus (n <= 4, |m_i| <= 4)");
  for (auto* sub : {jones_cmd, bracket_cmd, kauffman_cmd, matrix_cmd, graph_cmd, verify_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  Runner runner(cfg, out, err);
  try {
    runner.debug_diagram();
    if (*jones_cmd) return runner.jones_or_bracket(true);
    if (*bracket_cmd) return runner.jones_or_bracket(false);
    if (*kauffman_cmd) return runner.kauffman();
    if (*matrix_cmd) return runner.matrix();
    if (*graph_cmd) return runner.graph();
    return runner.verify();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace dimerknot
