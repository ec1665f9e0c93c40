#include "pgpart/io.hpp"

#include <ostream>
#include <stdexcept>

namespace pgpart {

Json field_to_json(const Field& f) {
  Json j;
  j["p"] = f.p();
  j["h"] = f.h();
  j["q"] = f.q();
  j["modulus"] = f.modulus();
  return j;
}

Json plane_to_json(const Plane& pl) {
  Json j;
  j["field"] = field_to_json(pl.field());
  Json points = Json::array(), lines = Json::array(), incidence = Json::array();
  for (int i = 0; i < pl.size(); ++i) {
    points.push_back(pl.point_label(i));
    lines.push_back(pl.line_label(i));
    Json on = Json::array();
    for (int p : pl.points_on(i)) on.push_back(p);
    incidence.push_back(std::move(on));
  }
  j["points"] = std::move(points);
  j["lines"] = std::move(lines);
  j["points_on_line"] = std::move(incidence);
  return j;
}

void write_dimacs(std::ostream& os, const Graph& g) {
  os << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
  for (int u = 0; u < g.size(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) os << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Json partition_to_json(const Plane& pl, const Partition& part, const Provenance& prov) {
  if (part.size() != 2 * pl.size()) throw std::invalid_argument("partition does not match the plane");
  Json j;
  j["provenance"]["construction"] = prov.construction;
  j["provenance"]["parameters"] = prov.parameters;
  j["provenance"]["field"] = field_to_json(pl.field());
  Json sides = Json::object();
  for (int v = 0; v < part.size(); ++v) sides[vertex_label(pl, v)] = std::string(1, side_char(part.side(v)));
  j["partition"] = std::move(sides);
  return j;
}

int partition_order(const Json& doc) {
  const auto& f = doc.at("provenance").at("field");
  return f.at("q").get<int>();
}

Partition partition_from_json(const Plane& pl, const Json& doc) {
  const auto& block = doc.at("partition");
  if (!block.is_object()) throw std::invalid_argument("\"partition\" must be an object");
  const int n = 2 * pl.size();
  std::vector<int> state(n, -1);
  for (const auto& [label, value] : block.items()) {
    const int v = vertex_from_label(pl, label);
    if (state[v] >= 0) throw std::invalid_argument("vertex " + label + " listed twice");
    const auto s = value.get<std::string>();
    if (s != "A" && s != "B") throw std::invalid_argument("vertex " + label + " has side '" + s + "', expected A or B");
    state[v] = s == "A" ? 0 : 1;
  }
  std::vector<Side> sides(n);
  for (int v = 0; v < n; ++v) {
    if (state[v] < 0) throw std::invalid_argument("vertex " + vertex_label(pl, v) + " is missing");
    sides[v] = state[v] == 0 ? Side::A : Side::B;
  }
  return Partition(std::move(sides));
}

Json margin_report_to_json(const Plane& pl, const MarginReport& r) {
  Json j;
  j["summary"]["class_sizes"]["A"] = r.size_a;
  j["summary"]["class_sizes"]["B"] = r.size_b;
  j["summary"]["min_margin_A"] = r.min_margin_a;
  j["summary"]["min_margin_B"] = r.min_margin_b;
  j["summary"]["partition_intimacy"] = r.partition_intimacy;
  j["summary"]["internal"] = r.partition_intimacy >= 0;
  j["summary"]["strict"] = std::min(r.min_margin_a, r.min_margin_b) >= 1;
  Json m = Json::object();
  for (int v = 0; v < static_cast<int>(r.margin.size()); ++v) m[vertex_label(pl, v)] = r.margin[v];
  j["margins"] = std::move(m);
  return j;
}

Json spectrum_to_json(const Plane& pl, const SpectralReport& r) {
  Json j;
  j["q"] = pl.order();
  Json sv = Json::array();
  for (const auto& [value, mult] : r.singular_values) sv.push_back({{"value", value}, {"multiplicity", mult}});
  j["singular_values"] = std::move(sv);
  j["lambda2"] = r.lambda2;
  j["gram_residual_max"] = r.identity_residual;
  return j;
}

Json mixing_audit_to_json(const MixingAudit& a) {
  Json j;
  j["class"] = std::string(1, side_char(a.side));
  j["dual"] = a.dual;
  j["points"] = a.points;
  j["lines"] = a.lines;
  j["edges"] = a.edges;
  j["mixing_upper"] = a.mixing_upper;
  j["intimacy_lower"] = a.intimacy_lower;
  j["hypothetical_lower"] = a.hypothetical_lower;
  j["upper_holds"] = a.upper_holds();
  j["lower_holds"] = a.lower_holds();
  j["excludes_half_sqrt_q"] = a.excludes_half_sqrt_q();
  return j;
}

Json search_result_to_json(const Plane& pl, const SearchResult& r, const Provenance& prov) {
  Json j;
  j["status"] = to_string(r.status);
  j["t"] = r.t;
  j["nodes_explored"] = r.nodes_explored;
  if (r.trace_hash != 0) j["trace_hash"] = r.trace_hash;
  if (r.restart >= 0) j["restart"] = r.restart;
  j["witness"] = r.witness ? verified_partition_json(pl, *r.witness, prov) : Json();
  return j;
}

Json verified_partition_json(const Plane& pl, const Partition& part, const Provenance& prov) {
  Json j = partition_to_json(pl, part, prov);
  j["report"] = margin_report_to_json(pl, margins(incidence_graph(pl).graph, part));
  return j;
}

}  // namespace pgpart
