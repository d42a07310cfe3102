// specgraph: inspect modules, build and export their graphs, and run the
// claim verification suite.

#include <chrono>
#include <ctime>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "specgraph/specgraph.hpp"

namespace {

using namespace specgraph;

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string module_path;
  std::string kind = "zmax";
  std::string subset = "max";
  std::string export_format;
  std::string format = "json";
  std::string out;
  u64 corpus_max_order = 200;
  std::size_t corpus_max_rank = 3;
  std::size_t max_subset_universe = 6;
  std::vector<std::string> claims{"all"};
  unsigned jobs = 1;
  bool stamp = false;
  bool all_results = false;
};

GraphKind parse_kind(const std::string& k) {
  if (k == "zmax") return GraphKind::zariski_max;
  if (k == "zspec") return GraphKind::zariski_spec;
  if (k == "zmax-disjoint") return GraphKind::zariski_max_disjoint;
  if (k == "ag") return GraphKind::annihilating;
  throw InvalidArgument("unknown graph kind '" + k + "'");
}

std::optional<std::string> timestamp(bool enabled) {
  if (!enabled) return std::nullopt;
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return std::string(buf);
}

void emit(const Options& o, const std::string& content) {
  if (o.out.empty())
    std::cout << content;
  else
    write_atomic(o.out, content);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

SpecGraph build_graph(const Options& o, const std::shared_ptr<const ModuleData>& data) {
  const GraphKind kind = parse_kind(o.kind);
  switch (kind) {
    case GraphKind::annihilating: return data->ag;
    case GraphKind::zariski_spec:
      return build_zariski_spec(data->spectrum, parse_subset(data->spec(), o.subset, true));
    case GraphKind::zariski_max:
      return build_zariski_max(data->spectrum, parse_subset(data->spec(), o.subset, false));
    case GraphKind::zariski_max_disjoint:
      return build_zariski_max_disjoint(data->spectrum, parse_subset(data->spec(), o.subset, false));
  }
  throw InvalidArgument("unknown graph kind");
}

std::shared_ptr<const ModuleData> load(const Options& o) {
  return make_module_data(load_module_spec(o.module_path), default_max_order());
}

int run_inspect(const Options& o) {
  const auto data = load(o);
  if (o.format == "text")
    emit(o, inspect_text(*data));
  else
    emit(o, dump(inspect_json(*data)));
  return kExitOk;
}

int run_graph(const Options& o) {
  const auto data = load(o);
  const SpecGraph g = build_graph(o, data);
  if (!o.export_format.empty()) {
    emit(o, export_graph(g, o.export_format));
    return kExitOk;
  }
  const GraphReport r = analyze(g);
  if (o.format == "text") {
    std::ostringstream os;
    os << to_string(g.kind) << " over " << data->module().to_string() << ": " << r.vertex_count << " vertices, "
       << r.edge_count << " edges, connected " << (r.connected ? "yes" : "no") << ", diameter "
       << optional_json(r.diameter).dump() << ", girth " << optional_json(r.girth).dump() << ", bipartite "
       << (r.bipartite ? "yes" : "no") << "\n";
    emit(o, os.str());
    return kExitOk;
  }
  nlohmann::json j = to_json(g);
  j["report"] = report_json(r);
  emit(o, dump(j));
  return kExitOk;
}

int run_export(const Options& o) {
  Options e = o;
  if (e.export_format.empty()) e.export_format = "dot";
  return run_graph(e);
}

Corpus corpus_for(const Options& o, CorpusParams& params) {
  params.max_order = o.corpus_max_order;
  params.max_rank = o.corpus_max_rank;
  params.max_subset_universe = o.max_subset_universe;
  if (o.module_path.empty()) return generate_corpus(params);
  const FinModule m = load_module_spec(o.module_path);
  CorpusEntry entry{m, std::nullopt};
  if (o.subset != "all") {
    const auto data = make_module_data(m, default_max_order());
    const Bitset t = parse_subset(data->spec(), o.subset, false);
    std::vector<std::size_t> members;
    t.for_each([&](std::size_t q) { members.push_back(data->spec().max_spec()[q]); });
    entry.subsets = std::vector<std::vector<std::size_t>>{members};
  }
  return {entry};
}

nlohmann::json corpus_description(const Options& o, const CorpusParams& params) {
  if (o.module_path.empty()) return params.to_json();
  const FinModule m = load_module_spec(o.module_path);
  nlohmann::json j = module_json(m);
  j["subset"] = o.subset;
  return j;
}

int run_verify(const Options& o) {
  CorpusParams params;
  const Corpus corpus = corpus_for(o, params);
  SuiteOptions so;
  so.corpus = params;
  so.claims = o.claims;
  so.jobs = o.jobs;
  so.keep_all = o.all_results;
  so.bound = default_max_order();
  const SuiteReport rep = run_suite(corpus, so);
  if (o.format == "text")
    emit(o, report_text(rep));
  else
    emit(o, dump(report_json(rep, corpus_description(o, params), timestamp(o.stamp))));
  return rep.any_fail() ? kExitFailures : kExitOk;
}

int run_explore(const Options& o) {
  CorpusParams params;
  const Corpus corpus = corpus_for(o, params);
  const ExploreReport rep = explore_q412(corpus, o.max_subset_universe, o.jobs, default_max_order());
  if (o.format == "text")
    emit(o, rep.to_text());
  else
    emit(o, dump(rep.to_json(corpus_description(o, params), timestamp(o.stamp))));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zariski topology-graphs and annihilating-submodule graphs of finite modules"};
  app.require_subcommand(1);
  Options o;

  auto add_module = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--module", o.module_path, "module spec file (JSON)")->check(CLI::ExistingFile);
    if (required) opt->required();
  };
  auto add_output = [&](CLI::App* c, std::vector<std::string> formats) {
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
    c->add_option("--out", o.out, "write to this file instead of stdout");
  };
  auto add_corpus = [&](CLI::App* c) {
    c->add_option("--corpus-max-order", o.corpus_max_order, "largest module order in the corpus")
        ->check(CLI::Range(u64{2}, u64{4096}));
    c->add_option("--corpus-max-rank", o.corpus_max_rank, "largest number of invariant factors")
        ->check(CLI::Range(std::size_t{1}, std::size_t{8}));
    c->add_option("--max-subset-universe", o.max_subset_universe,
                  "enumerate every subset T when |Max(M)| is at most this");
    c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    c->add_flag("--stamp", o.stamp, "add a generation timestamp to JSON output");
  };
  const std::vector<std::string> kinds{"zmax", "zspec", "zmax-disjoint", "ag"};
  const std::vector<std::string> exports{"dot", "json"};

  auto* inspect = app.add_subcommand("inspect", "lattice, spectra and topology of a module");
  add_module(inspect, true);
  add_output(inspect, {"json", "text"});

  auto* graph = app.add_subcommand("graph", "build one of the graphs and report its invariants");
  add_module(graph, true);
  graph->add_option("--kind", o.kind, "graph kind")->check(CLI::IsMember(kinds));
  graph->add_option("--subset", o.subset, "T: max, spec, indices (0,3) or generator tuples (<2>;<3>)");
  graph->add_option("--export", o.export_format, "emit an export document instead")->check(CLI::IsMember(exports));
  add_output(graph, {"json", "text"});

  auto* exp = app.add_subcommand("export", "export a graph as DOT or JSON");
  add_module(exp, true);
  exp->add_option("--kind", o.kind, "graph kind")->check(CLI::IsMember(kinds));
  exp->add_option("--subset", o.subset, "T: max, spec, indices or generator tuples");
  exp->add_option("--export", o.export_format, "document format (default dot)")->check(CLI::IsMember(exports));
  exp->add_option("--out", o.out, "write to this file instead of stdout");

  auto* verify = app.add_subcommand("verify", "check every registered claim over a corpus");
  add_corpus(verify);
  add_module(verify, false);
  verify->add_option("--subset", o.subset, "with --module: T to check (default max; 'all' for every T)");
  verify->add_option("--claims", o.claims, "claim ids, or all")->delimiter(',');
  verify->add_flag("--all-results", o.all_results, "list passing and not-applicable results too");
  add_output(verify, {"json", "text"});

  auto* explore = app.add_subcommand("explore", "evidence on whether T meets the vertex set of G");
  add_corpus(explore);
  add_module(explore, false);
  explore->add_option("--subset", o.subset, "with --module: T to examine (default max; 'all' for every T)");
  add_output(explore, {"json", "text"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*inspect) return run_inspect(o);
    if (*graph) return run_graph(o);
    if (*exp) return run_export(o);
    if (*verify) return run_verify(o);
    if (*explore) return run_explore(o);
  } catch (const MalformedSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IndexOutOfRange& e) {
    std::cerr << "error: IndexOutOfRange: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BoundExceeded& e) {
    std::cerr << "error: bound exceeded: " << e.what() << " (raise SPECGRAPH_MAX_ORDER)\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
