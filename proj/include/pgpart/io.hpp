#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "pgpart/constructions.hpp"
#include "pgpart/plane.hpp"
#include "pgpart/search.hpp"
#include "pgpart/spectral.hpp"
#include "pgpart/verify.hpp"

namespace pgpart {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";

Json field_to_json(const Field& f);

/// Labels of points and lines plus, per line, the indices of its points.
Json plane_to_json(const Plane& pl);

/// "p edge n m" header, then "e u v" per edge with 1-based ids, u < v.
void write_dimacs(std::ostream& os, const Graph& g);

struct Provenance {
  std::string construction;
  Json parameters = Json::object();
};

/// {"provenance": {...}, "partition": {label: "A"|"B"}} in vertex order.
Json partition_to_json(const Plane& pl, const Partition& part, const Provenance& prov);

/// Field order recorded in a partition document's provenance.
int partition_order(const Json& doc);

/// Reads the "partition" block; every vertex must appear exactly once.
Partition partition_from_json(const Plane& pl, const Json& doc);

Json margin_report_to_json(const Plane& pl, const MarginReport& r);
Json spectrum_to_json(const Plane& pl, const SpectralReport& r);
Json mixing_audit_to_json(const MixingAudit& a);

/// Status and counters; the witness, when present, in partition_to_json form.
Json search_result_to_json(const Plane& pl, const SearchResult& r, const Provenance& prov);

/// Partition document with its MarginReport attached under "report".
Json verified_partition_json(const Plane& pl, const Partition& part, const Provenance& prov);

}  // namespace pgpart
