#include "pgpart/commands.hpp"

#include <sstream>
#include <stdexcept>

namespace pgpart {

namespace {

Json build_parameters(const ConstructRequest& req) {
  Json p = Json::object();
  p["q"] = req.q;
  if (req.kind == "combinatorial") {
    p["drop_point"] = req.drop_point;
    p["drop_line"] = req.drop_line;
  } else if (req.kind == "alg1mod4" || req.kind == "alg3mod4") {
    p["erase_units"] = req.erase_units;
  } else if (req.kind == "oval") {
    p["variant"] = req.variant;
  } else if (req.kind == "even" && req.line) {
    p["line"] = *req.line;
  }
  return p;
}

Partition build(const Plane& pl, const ConstructRequest& req, Json& params) {
  const auto& k = req.kind;
  if (k == "baer") return construct_baer_partition(pl, baer_decomposition(pl));
  if (k == "combinatorial") {
    CombinatorialParams cp;
    cp.drop_point = req.drop_point;
    cp.drop_line = req.drop_line;
    return construct_combinatorial(pl, cp);
  }
  if (k == "alg1mod4") return construct_algebraic_1mod4(pl, req.erase_units);
  if (k == "alg3mod4") return construct_algebraic_3mod4(pl, req.erase_units);
  if (k == "oval") {
    OvalVariant v;
    if (req.variant == "interior") {
      v = OvalVariant::interior_skew;
    } else if (req.variant == "exterior") {
      v = OvalVariant::exterior_skewtangent;
    } else {
      throw std::invalid_argument("unknown oval variant '" + req.variant + "' (expected interior or exterior)");
    }
    if (pl.order() % 2 == 0) throw ConstructionError("oval construction requires odd q");
    return construct_oval(pl, classify_conic(pl), v);
  }
  if (k == "even") {
    if (pl.order() % 2 != 0 || pl.order() < 4) throw ConstructionError("even construction requires q even, q >= 4");
    const auto arc = construct_denniston(pl);
    const int line = req.line.value_or(default_even_line(pl, arc));
    params["line"] = line;
    params["arc_size"] = arc.arc.size();
    return construct_even(pl, arc, line);
  }
  throw std::invalid_argument("unknown construction '" + k + "'");
}

}  // namespace

ConstructOutcome run_construct(const ConstructRequest& req) {
  const Plane pl = build_plane(req.q);
  Json params = build_parameters(req);
  Partition part = build(pl, req, params);
  MarginReport report = margins(incidence_graph(pl).graph, part);
  Json doc = partition_to_json(pl, part, Provenance{req.kind, params});
  doc["report"] = margin_report_to_json(pl, report);
  return {std::move(part), std::move(report), std::move(doc)};
}

std::string command_line(const ConstructRequest& req) {
  std::ostringstream os;
  os << "construct " << req.kind << " --q " << req.q;
  if (req.erase_units) os << " --erase-units";
  if (req.drop_point) os << " --drop-point";
  if (req.drop_line) os << " --drop-line";
  if (req.kind == "oval") os << " --variant " << req.variant;
  if (req.line) os << " --line " << *req.line;
  return os.str();
}

SearchOutcome run_search(const SearchRequest& req) {
  const Plane pl = build_plane(req.q);
  const Graph& g = incidence_graph(pl).graph;
  Json params = Json::object();
  params["q"] = req.q;
  params["t"] = req.t;
  SearchResult r;
  if (req.method == "exhaustive") {
    params["max_nodes"] = req.budget.max_nodes;
    params["max_seconds"] = req.budget.max_seconds;
    params["workers"] = req.budget.workers;
    r = exhaustive_exists(g, req.t, req.budget);
  } else if (req.method == "anneal") {
    params["seed"] = req.anneal.seed;
    params["restarts"] = req.anneal.restarts;
    params["steps_per_restart"] = req.anneal.steps_per_restart;
    params["initial_temperature"] = req.anneal.initial_temperature;
    params["final_temperature"] = req.anneal.final_temperature;
    params["max_seconds"] = req.anneal.max_seconds;
    r = anneal_search(g, req.t, req.anneal);
  } else {
    throw std::invalid_argument("unknown search method '" + req.method + "'");
  }
  Json doc = Json::object();
  doc["method"] = req.method;
  doc["parameters"] = params;
  doc["result"] = search_result_to_json(pl, r, Provenance{"search-" + req.method, params});
  return {std::move(r), std::move(doc)};
}

std::string command_line(const SearchRequest& req) {
  std::ostringstream os;
  os << "search " << req.method << " --q " << req.q << " --t " << req.t;
  if (req.method == "exhaustive") {
    if (req.budget.max_nodes) os << " --max-nodes " << req.budget.max_nodes;
    if (req.budget.max_seconds > 0) os << " --max-seconds " << req.budget.max_seconds;
    if (req.budget.workers != 1) os << " --workers " << req.budget.workers;
  } else {
    os << " --seed " << req.anneal.seed << " --restarts " << req.anneal.restarts << " --steps "
       << req.anneal.steps_per_restart;
    if (req.anneal.max_seconds > 0) os << " --max-seconds " << req.anneal.max_seconds;
  }
  return os.str();
}

}  // namespace pgpart
