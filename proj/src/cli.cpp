#include "pgpart/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pgpart/acceptance.hpp"
#include "pgpart/commands.hpp"

namespace pgpart {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw UsageError("failed writing " + path);
}

void emit(std::ostream& out, const Json& doc, const std::string& path) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

std::string violation_message(int q, const MarginReport& r, int t) {
  const auto v = r.first_violation(t);
  if (!v) return {};
  const Plane pl = build_plane(q);
  std::ostringstream os;
  os << "verification failed: vertex " << vertex_label(pl, *v) << " has margin " << r.margin[*v]
     << " (own " << r.own_degree[*v] << " of " << pl.order() + 1 << "), below " << 2 * t << " required for t=" << t;
  return os.str();
}

struct Options {
  int q = 0;
  int t = 0;
  std::string out_path;

  // plane
  std::string graph_path, json_path;

  // construct
  ConstructRequest construct;
  int even_line = -1;

  // verify
  std::string partition_path;

  // search
  std::string method;
  SearchBudget budget;
  AnnealParams anneal;

  // reproduce-paper
  std::string out_dir;
  std::vector<int> only;
};

int cmd_plane(const Options& o, std::ostream& out) {
  const Plane pl = build_plane(o.q);
  const auto ig = incidence_graph(pl);
  Json j;
  j["field"] = field_to_json(pl.field());
  j["points"] = pl.size();
  j["lines"] = pl.size();
  j["edges"] = ig.graph.edge_count();
  j["degree"] = pl.order() + 1;
  j["girth"] = girth(ig.graph);
  if (!o.graph_path.empty()) {
    std::ostringstream os;
    write_dimacs(os, ig.graph);
    write_file(o.graph_path, os.str());
    j["graph_file"] = o.graph_path;
  }
  if (!o.json_path.empty()) {
    write_file(o.json_path, plane_to_json(pl).dump(2) + "\n");
    j["json_file"] = o.json_path;
  }
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_construct(Options o, std::ostream& out, std::ostream& err) {
  o.construct.q = o.q;
  if (o.even_line >= 0) o.construct.line = o.even_line;
  const auto res = run_construct(o.construct);
  emit(out, res.document, o.out_path);
  if (!res.report.is_t_internal(0)) {
    err << violation_message(o.q, res.report, 0) << "\n";
    return kFailed;
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  Json doc;
  Plane pl = [&] {
    std::ifstream f(o.partition_path);
    if (!f) throw UsageError("cannot open " + o.partition_path);
    try {
      doc = Json::parse(f);
      return build_plane(partition_order(doc));
    } catch (const Json::exception& e) {
      throw UsageError(o.partition_path + ": " + e.what());
    }
  }();
  Partition part = [&] {
    try {
      return partition_from_json(pl, doc);
    } catch (const Json::exception& e) {
      throw UsageError(o.partition_path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError(o.partition_path + ": " + e.what());
    }
  }();
  const auto rep = margins(incidence_graph(pl).graph, part);
  Json j = margin_report_to_json(pl, rep);
  j["summary"]["requested_t"] = o.t;
  j["summary"]["t_internal"] = rep.is_t_internal(o.t);
  emit(out, j, o.out_path);
  if (!rep.is_t_internal(o.t)) {
    err << violation_message(pl.order(), rep, o.t) << "\n";
    return kFailed;
  }
  return kOk;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const Plane pl = build_plane(o.q);
  emit(out, spectrum_to_json(pl, singular_spectrum(pl)), o.out_path);
  return kOk;
}

int cmd_bound(const Options& o, std::ostream& out) {
  out << intimacy_upper_bound(o.q) << "\n";
  return kOk;
}

int cmd_search(const Options& o, std::ostream& out) {
  SearchRequest req{.method = o.method, .q = o.q, .t = o.t, .budget = o.budget, .anneal = o.anneal};
  if (req.method == "anneal") req.anneal.max_seconds = o.budget.max_seconds;
  const auto res = run_search(req);
  emit(out, res.document, o.out_path);
  return kOk;
}

int cmd_reproduce(const Options& o, std::ostream& out) {
  namespace fs = std::filesystem;
  const fs::path dir = o.out_dir;
  fs::create_directories(dir / "runs");
  std::vector<int> ids = o.only;
  if (ids.empty())
    for (int i = 1; i <= acceptance_criterion_count(); ++i) ids.push_back(i);

  Json manifest;
  manifest["version"] = kVersion;
  manifest["criteria"] = Json::array();
  bool all = true;
  int serial = 0;
  for (int id : ids) {
    if (id < 1 || id > acceptance_criterion_count()) throw UsageError("no criterion " + std::to_string(id));
    const auto r = run_criterion(id);
    out << format_result(r) << std::endl;
    all = all && r.passed;
    Json c;
    c["id"] = r.id;
    c["title"] = r.title;
    c["passed"] = r.passed;
    c["detail"] = r.detail;
    c["seconds"] = r.seconds;
    c["limit_seconds"] = r.limit_seconds;
    c["runs"] = Json::array();
    for (const auto& rec : r.records) {
      std::ostringstream name;
      name << "runs/" << std::setw(4) << std::setfill('0') << ++serial << ".json";
      write_file((dir / name.str()).string(), rec.output.dump(2) + "\n");
      RunRecord stub = rec;
      stub.output = name.str();
      c["runs"].push_back(run_record_to_json(stub));
    }
    manifest["criteria"].push_back(std::move(c));
  }
  manifest["all_passed"] = all;
  write_file((dir / "manifest.json").string(), manifest.dump(2) + "\n");
  out << (all ? "all criteria passed" : "some criteria FAILED") << "; manifest at " << (dir / "manifest.json").string()
      << "\n";
  return all ? kOk : kFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Internal partitions of projective plane incidence graphs", "pgpart"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options o;

  auto* plane = app.add_subcommand("plane", "Build PG(2,q) and export it");
  plane->add_option("--q", o.q, "Field order")->required();
  plane->add_option("--export-graph", o.graph_path, "Write the Levi graph in DIMACS format");
  plane->add_option("--export-json", o.json_path, "Write points, lines and incidences as JSON");

  auto* construct = app.add_subcommand("construct", "Build an internal partition and report its margins");
  construct->add_option("kind", o.construct.kind, "Construction")
      ->required()
      ->check(CLI::IsMember({"baer", "combinatorial", "alg1mod4", "alg3mod4", "oval", "even"}));
  construct->add_option("--q", o.q, "Field order")->required();
  construct->add_flag("--erase-units", o.construct.erase_units, "alg1mod4/alg3mod4: drop the coordinate triangle");
  construct->add_flag("--drop-point", o.construct.drop_point, "combinatorial: drop P from the point class");
  construct->add_flag("--drop-line", o.construct.drop_line, "combinatorial: drop ell from the line class");
  construct->add_option("--variant", o.construct.variant, "oval: interior or exterior")
      ->check(CLI::IsMember({"interior", "exterior"}));
  construct->add_option("--line", o.even_line, "even: index of a q/2-secant of the arc");
  construct->add_option("--out", o.out_path, "Write the JSON here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Check a partition file");
  verify->add_option("--partition", o.partition_path, "Partition JSON")->required();
  verify->add_option("--t", o.t, "Required intimacy (default 0)");
  verify->add_option("--out", o.out_path, "Write the report here instead of stdout");

  auto* spectrum = app.add_subcommand("spectrum", "Singular values of the incidence matrix");
  spectrum->add_option("--q", o.q, "Field order")->required();
  spectrum->add_option("--out", o.out_path, "Write the JSON here instead of stdout");

  auto* bound = app.add_subcommand("bound", "Spectral upper bound on the intimacy");
  bound->add_option("--q", o.q, "Field order")->required();

  auto* search = app.add_subcommand("search", "Look for a t-internal partition");
  search->add_option("method", o.method, "exhaustive or anneal")
      ->required()
      ->check(CLI::IsMember({"exhaustive", "anneal"}));
  search->add_option("--q", o.q, "Field order")->required();
  search->add_option("--t", o.t, "Required intimacy")->required();
  search->add_option("--max-nodes", o.budget.max_nodes, "Node budget, 0 for none");
  search->add_option("--max-seconds", o.budget.max_seconds, "Time budget, 0 for none");
  search->add_option("--workers", o.budget.workers, "Threads for exhaustive search")->check(CLI::PositiveNumber);
  search->add_option("--seed", o.anneal.seed, "Annealing seed");
  search->add_option("--restarts", o.anneal.restarts, "Annealing restarts")->check(CLI::PositiveNumber);
  search->add_option("--steps", o.anneal.steps_per_restart, "Annealing steps per restart");
  search->add_option("--out", o.out_path, "Write the JSON here instead of stdout");

  auto* reproduce = app.add_subcommand("reproduce-paper", "Run the acceptance table and write a manifest");
  o.out_dir = "pgpart-runs";
  reproduce->add_option("--out-dir", o.out_dir, "Directory for the manifest and run outputs");
  reproduce->add_option("--only", o.only, "Run only these criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
      err << sub->help();
    else
      err << app.help();
    return kUsage;
  }

  try {
    if (plane->parsed()) return cmd_plane(o, out);
    if (construct->parsed()) return cmd_construct(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (spectrum->parsed()) return cmd_spectrum(o, out);
    if (bound->parsed()) return cmd_bound(o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (reproduce->parsed()) return cmd_reproduce(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace pgpart
