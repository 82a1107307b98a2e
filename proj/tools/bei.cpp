#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "bei/errors.hpp"
#include "bei/families.hpp"
#include "bei/graph_io.hpp"
#include "bei/ideal_props.hpp"
#include "bei/initial_complex.hpp"
#include "bei/pipeline.hpp"
#include "bei/strong_unmixed.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kIo = 2, kContradiction = 3 };

using Json = nlohmann::ordered_json;

struct GraphSource {
  std::string g6;
  std::string edges;
};

bei::Graph load_graph(const GraphSource& src) {
  if (!src.g6.empty()) return bei::decode_graph6(src.g6);
  std::ifstream in(src.edges);
  if (!in) throw bei::IoError("cannot open " + src.edges);
  return bei::parse_edge_list(in);
}

void add_graph_source(CLI::App* cmd, GraphSource& src) {
  auto* g6 = cmd->add_option("--g6", src.g6, "graph in graph6 format");
  auto* edges = cmd->add_option("--edges", src.edges, "edge-list file");
  g6->excludes(edges);
  edges->excludes(g6);
  cmd->callback([cmd, &src] {
    if (src.g6.empty() && src.edges.empty()) throw CLI::RequiredError("--g6 or --edges");
    (void)cmd;
  });
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw bei::InvalidInput("bad integer '" + item + "'");
    } catch (const std::logic_error&) {
      throw bei::InvalidInput("bad integer '" + item + "'");
    }
  }
  return out;
}

Json property_report(const bei::Graph& g, bool with_s2) {
  Json j;
  j["graph6"] = bei::encode_graph6(g);
  j["n"] = g.order();
  j["edge_count"] = g.edge_count();
  const bei::AccessibilityReport acc = bei::check_accessible(g);
  j["unmixed"] = acc.unmixed;
  j["accessible"] = acc.accessible;
  j["witness"] = acc.witness ? Json(acc.witness->to_vector()) : Json(nullptr);
  j["strongly_unmixed"] = bei::is_strongly_unmixed(g);
  j["s2"] = with_s2 ? Json(bei::is_s2(g)) : Json(nullptr);
  return j;
}

int run_analyze(const GraphSource& src, bool s2, bool complex) {
  bei::ClassifyOptions opts;
  opts.s2 = s2;
  opts.complex = complex;
  opts.short_circuit = false;
  std::cout << bei::record_to_json(bei::classify(load_graph(src), opts)) << '\n';
  return kOk;
}

int run_complex(const GraphSource& src) {
  const bei::Graph g = load_graph(src);
  const bei::FacetComplex c = bei::delta_facets(g);
  const auto f = bei::f_vector(c);
  const auto h = bei::h_vector(f, c.max_facet_size());
  auto line = [](const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
  };
  std::cout << "# facets\n" << bei::format_faces(g.order(), c.facets);
  std::cout << "# minimal nonfaces\n" << bei::format_faces(g.order(), bei::minimal_nonfaces(c).monomials);
  std::cout << "# f-vector\n" << line(f) << '\n';
  std::cout << "# h-vector\n" << line(h) << '\n';
  std::cout << "# multiplicity\n" << bei::multiplicity(c) << '\n';
  return kOk;
}

int run_enumerate(bei::PipelineOptions opts, const std::string& input, const std::string& out) {
  if (!input.empty()) opts.input = input;
  if (!out.empty()) opts.out_dir = out;
  if (opts.n <= 0 && !opts.input) throw CLI::ValidationError("--n", "required without --input");
  const bei::RunResult res = bei::run_pipeline(opts);
  std::cout << bei::summary_csv(res.summary) << bei::format_report(res.report);
  return res.report.verified ? kOk : kContradiction;
}

int run_verify(const std::string& dir) {
  std::filesystem::path path = std::filesystem::path(dir) / bei::kRecordsFile;
  if (!std::filesystem::exists(path)) throw bei::IoError("no " + std::string(bei::kRecordsFile) + " in " + dir);
  const bei::EquivalenceReport rep = bei::verify_equivalence(bei::read_records(path));
  std::cout << bei::format_report(rep);
  return rep.verified ? kOk : kContradiction;
}

int run_chain(const std::string& cycles, const std::string& glue, const std::string& whiskers, bool s2) {
  bei::ChainSpec spec;
  spec.cycles = parse_int_list(cycles);
  spec.top_steps = parse_int_list(glue);
  for (int v : parse_int_list(whiskers)) {
    if (v < 0 || v >= bei::kMaxVertices) throw bei::InvalidInput("whisker vertex out of range");
    spec.whiskers = spec.whiskers.with(v);
  }
  const bei::WhiskeredBlock wb = bei::chain_block(spec);
  Json j = property_report(wb.graph, s2);
  const bei::SetupReport setup = bei::check_setup(wb);
  j["setup"] = setup.satisfied;
  j["setup_violated"] = setup.satisfied ? Json(nullptr) : Json(setup.violated);
  std::cout << j.dump() << '\n';
  return kOk;
}

int run_helm(int k, bool s2) {
  std::cout << property_report(bei::helm(k), s2).dump() << '\n';
  return kOk;
}

int run_catalog(bool s2) {
  for (const auto& entry : bei::rank3_catalog()) {
    Json j;
    j["name"] = entry.name;
    const Json props = property_report(entry.graph.graph, s2);
    for (auto& [key, value] : props.items()) j[key] = value;
    std::cout << j.dump() << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binomial edge ideal classification toolkit"};
  app.require_subcommand(1);

  GraphSource analyze_src;
  bool analyze_s2 = false, analyze_complex = false;
  auto* analyze = app.add_subcommand("analyze", "classify one graph, print its record as JSON");
  add_graph_source(analyze, analyze_src);
  analyze->add_flag("--s2", analyze_s2, "also run the S2 link check");
  analyze->add_flag("--complex", analyze_complex, "also report f/h-vectors and multiplicity");

  bei::PipelineOptions pipe;
  pipe.workers = bei::default_worker_count();
  std::string enum_input, enum_out;
  auto* enumerate = app.add_subcommand("enumerate", "run the classification pipeline");
  enumerate->add_option("--n", pipe.n, "number of vertices")->check(CLI::Range(1, 62));
  enumerate->add_option("--input", enum_input, "graph6 file instead of the built-in generator");
  enumerate->add_flag("--s2", pipe.classify.s2, "run the S2 link check on surviving graphs");
  enumerate->add_flag("--complex", pipe.classify.complex, "record f/h-vectors and multiplicity");
  enumerate->add_option("--out", enum_out, "output directory for records and summary");
  enumerate->add_option("--workers", pipe.workers, "worker threads (default BEI_WORKERS or cores)")
      ->check(CLI::Range(1, 1024));
  enumerate->add_flag("--resume", pipe.resume, "continue from the checkpoint in --out");
  enumerate->add_option("--checkpoint-every", pipe.checkpoint_every, "records between checkpoints")
      ->check(CLI::PositiveNumber);

  std::string run_dir;
  auto* verify = app.add_subcommand("verify", "check accessible == strongly unmixed on a finished run");
  verify->add_option("--run", run_dir, "run directory")->required();

  GraphSource complex_src;
  auto* complex = app.add_subcommand("complex", "facets, minimal nonfaces, f/h-vector, multiplicity");
  add_graph_source(complex, complex_src);

  auto* families = app.add_subcommand("families", "named graph families");
  families->require_subcommand(1);
  std::string cycles, glue, whiskers;
  bool fam_s2 = false;
  auto* chain = families->add_subcommand("chain", "whiskered chain of cycles");
  chain->add_option("--cycles", cycles, "cycle lengths, e.g. 3,4,3")->required();
  chain->add_option("--glue", glue, "per-cycle steps along the top path, e.g. 0,1,0");
  chain->add_option("--whiskers", whiskers, "block vertices carrying a whisker, e.g. 0,2");
  chain->add_flag("--s2", fam_s2, "also run the S2 link check");
  int helm_k = 0;
  auto* helm = families->add_subcommand("helm", "helm graph over the wheel W_k");
  helm->add_option("--k", helm_k, "rim length")->required()->check(CLI::Range(3, 31));
  helm->add_flag("--s2", fam_s2, "also run the S2 link check");
  bool rank3 = false;
  auto* catalog = families->add_subcommand("catalog", "built-in catalogs");
  catalog->add_flag("--rank3", rank3, "accessible whiskered blocks of cycle rank 3")->required();
  catalog->add_flag("--s2", fam_s2, "also run the S2 link check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return run_analyze(analyze_src, analyze_s2, analyze_complex);
    if (*enumerate) return run_enumerate(pipe, enum_input, enum_out);
    if (*verify) return run_verify(run_dir);
    if (*complex) return run_complex(complex_src);
    if (*chain) return run_chain(cycles, glue, whiskers, fam_s2);
    if (*helm) return run_helm(helm_k, fam_s2);
    if (*catalog) return run_catalog(fam_s2);
  } catch (const bei::TheoremContradiction& e) {
    std::cerr << "theorem contradiction: " << e.what() << '\n';
    return kContradiction;
  } catch (const bei::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
