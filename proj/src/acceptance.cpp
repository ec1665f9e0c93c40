#include "pgpart/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "pgpart/commands.hpp"

namespace pgpart {

Json run_record_to_json(const RunRecord& r) {
  Json j;
  j["command"] = r.command;
  j["parameters"] = r.parameters;
  j["field_modulus"] = r.modulus;
  j["version"] = kVersion;
  j["output"] = r.output;
  j["wall_seconds"] = r.wall_seconds;
  return j;
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<int> modulus_of(int q) { return make_field_of_order(q).modulus(); }

// Collects failures; the criterion passes when none were noted.
struct Checker {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  std::vector<RunRecord> records;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }

  ConstructOutcome construct(const ConstructRequest& req) {
    const auto t0 = Clock::now();
    auto out = run_construct(req);
    records.push_back({command_line(req), out.document["provenance"]["parameters"], modulus_of(req.q), out.document,
                       since(t0)});
    return out;
  }

  SearchOutcome search(const SearchRequest& req) {
    const auto t0 = Clock::now();
    auto out = run_search(req);
    records.push_back({command_line(req), out.document["parameters"], modulus_of(req.q), out.document, since(t0)});
    return out;
  }

  std::string detail() const {
    std::ostringstream os;
    const auto& src = failures.empty() ? notes : failures;
    const std::size_t shown = std::min<std::size_t>(src.size(), 8);
    for (std::size_t i = 0; i < shown; ++i) os << (i ? "; " : "") << src[i];
    if (src.size() > shown) os << "; ... " << src.size() - shown << " more";
    return os.str();
  }
};

std::string str(int v) { return std::to_string(v); }

void criterion_baer_exact(Checker& c) {
  for (auto [q, want] : {std::pair{4, 0}, std::pair{9, 1}, std::pair{25, 2}}) {
    const auto t0 = Clock::now();
    const auto out = c.construct({.kind = "baer", .q = q});
    const double s = since(t0);
    const int got = out.report.partition_intimacy;
    c.expect(got == want, "baer q=" + str(q) + " intimacy " + str(got) + ", expected " + str(want));
    c.expect(s < 5.0, "baer q=" + str(q) + " took " + std::to_string(s) + " s");
    c.note("q=" + str(q) + ": " + str(got));
  }
}

void criterion_upper_bound(Checker& c) {
  for (int q : {4, 9, 16, 25}) {
    const int bound = intimacy_upper_bound(q);
    std::vector<ConstructRequest> reqs{{.kind = "baer", .q = q}};
    if (q % 2 == 1) {
      for (bool dp : {false, true})
        for (bool dl : {false, true}) reqs.push_back({.kind = "combinatorial", .q = q, .drop_point = dp, .drop_line = dl});
      for (bool e : {false, true}) reqs.push_back({.kind = "alg1mod4", .q = q, .erase_units = e});
      reqs.push_back({.kind = "oval", .q = q, .variant = "interior"});
      reqs.push_back({.kind = "oval", .q = q, .variant = "exterior"});
    } else {
      reqs.push_back({.kind = "even", .q = q});
    }
    for (const auto& r : reqs) {
      const auto out = c.construct(r);
      const int inti = out.report.partition_intimacy;
      c.expect(inti <= bound, command_line(r) + " intimacy " + str(inti) + " exceeds bound " + str(bound));
      if (r.kind == "baer")
        c.expect(inti == bound, "baer q=" + str(q) + " intimacy " + str(inti) + " != bound " + str(bound));
    }
    // Search witnesses at the bound and one above it.
    for (int t : {bound, bound + 1}) {
      SearchRequest sr{.method = "anneal", .q = q, .t = t};
      sr.anneal.steps_per_restart = 50000;
      sr.anneal.restarts = 4;
      const auto out = c.search(sr);
      if (out.result.witness) {
        const Plane pl = build_plane(q);
        const int inti = margins(incidence_graph(pl).graph, *out.result.witness).partition_intimacy;
        c.expect(inti <= bound, command_line(sr) + " witness intimacy " + str(inti) + " exceeds bound");
      }
      c.expect(t <= bound || !out.result.witness, command_line(sr) + " found a witness above the bound");
    }
    if (q == 4) {
      SearchRequest sr{.method = "exhaustive", .q = q, .t = bound + 1};
      const auto out = c.search(sr);
      c.expect(out.result.status == SearchStatus::exhausted_none,
               "exhaustive q=4 t=" + str(bound + 1) + " returned " + to_string(out.result.status));
    }
    c.note("q=" + str(q) + " bound " + str(bound));
  }
}

void criterion_small_plane(Checker& c) {
  const auto one = c.search({.method = "exhaustive", .q = 3, .t = 1});
  c.expect(one.result.status == SearchStatus::exhausted_none, "t=1 returned " + to_string(one.result.status));
  const auto zero = c.search({.method = "exhaustive", .q = 3, .t = 0});
  c.expect(zero.result.status == SearchStatus::found, "t=0 returned " + to_string(zero.result.status));
  const auto m = exhaustive_max_intimacy(incidence_graph(build_plane(3)).graph);
  c.expect(m.intimacy == 0, "max intimacy " + (m.intimacy ? str(*m.intimacy) : std::string("unknown")));
  c.note("t=1 " + to_string(one.result.status) + " after " + std::to_string(one.result.nodes_explored) +
         " nodes; t=0 found; max intimacy 0");
}

void criterion_odd_constructions(Checker& c) {
  const std::vector<int> odd{3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27};
  int checked = 0;
  auto run = [&](const ConstructRequest& r) {
    const auto out = c.construct(r);
    ++checked;
    if (out.report.partition_intimacy < 0)
      c.expect(false, command_line(r) + " intimacy " + str(out.report.partition_intimacy));
  };
  for (int q : odd) {
    for (bool dp : {false, true})
      for (bool dl : {false, true}) run({.kind = "combinatorial", .q = q, .drop_point = dp, .drop_line = dl});
    run({.kind = "oval", .q = q, .variant = "interior"});
    run({.kind = "oval", .q = q, .variant = "exterior"});
  }
  for (int q : {5, 9, 13, 25})
    for (bool e : {false, true}) run({.kind = "alg1mod4", .q = q, .erase_units = e});
  for (int q : {3, 7, 11, 19, 23, 27})
    for (bool e : {false, true}) run({.kind = "alg3mod4", .q = q, .erase_units = e});
  c.note(str(checked) + " partitions internal");
}

void criterion_even(Checker& c) {
  for (int q : {4, 8, 16}) {
    const Plane pl = build_plane(q);
    const auto arc = construct_denniston(pl);
    c.expect(verify_maximal_arc(pl, arc.arc, arc.degree), "q=" + str(q) + " Denniston arc fails the arc check");
    c.expect(arc.degree == q / 2, "q=" + str(q) + " arc degree " + str(arc.degree));
    const auto out = c.construct({.kind = "even", .q = q});
    const Graph& g = incidence_graph(pl).graph;
    c.expect(is_strict(g, out.partition), "q=" + str(q) + " partition is not strict");
    int min_own = q + 1;
    for (int v : out.partition.members(Side::A)) min_own = std::min(min_own, out.report.own_degree[v]);
    c.expect(min_own >= q / 2 + 1, "q=" + str(q) + " A own-degree " + str(min_own) + " < q/2+1");
    c.note("q=" + str(q) + " |M|=" + str(static_cast<int>(arc.arc.size())) + " min A own " + str(min_own));
  }
}

void criterion_spectral(Checker& c) {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    const Plane pl = build_plane(q);
    const auto rep = singular_spectrum(pl, 1e-9);
    c.expect(rep.identity_residual == 0, "q=" + str(q) + " Gram residual " + std::to_string(rep.identity_residual));
    const auto& sv = rep.singular_values;
    const bool shape = sv.size() == 2 && sv[0].second == 1 && sv[1].second == q * q + q;
    c.expect(shape, "q=" + str(q) + " singular values do not form two groups of sizes 1 and q^2+q");
    if (shape) {
      c.expect(std::abs(sv[0].first - (q + 1)) <= 1e-9, "q=" + str(q) + " top singular value off");
      c.expect(std::abs(sv[1].first - std::sqrt(static_cast<double>(q))) <= 1e-9,
               "q=" + str(q) + " second singular value off");
    }
  }
  const Plane pl = build_plane(5);
  const int n = pl.size();
  std::mt19937_64 rng(20240601);
  std::vector<int> pts(n), lns(n);
  for (int i = 0; i < n; ++i) {
    pts[i] = i;
    lns[i] = n + i;
  }
  int bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::shuffle(pts.begin(), pts.end(), rng);
    std::shuffle(lns.begin(), lns.end(), rng);
    const auto s = static_cast<std::size_t>(rng() % (n + 1));
    const auto t = static_cast<std::size_t>(rng() % (n + 1));
    if (!check_mixing(pl, std::span(pts).first(s), std::span(lns).first(t))) ++bad;
  }
  c.expect(bad == 0, str(bad) + " of 1000 random pairs break the mixing inequality");
  c.note("residual 0 and spectrum {q+1, sqrt q} for q <= 16; 1000 mixing pairs hold");
}

void criterion_ovals(Checker& c) {
  for (int q : {5, 7, 9, 11, 13}) {
    const Plane pl = build_plane(q);
    const auto od = classify_conic(pl);
    const auto ext = od.exterior_points(), in = od.interior_points();
    c.expect(static_cast<int>(ext.size()) == q * (q + 1) / 2, "q=" + str(q) + " exterior " + str(static_cast<int>(ext.size())));
    c.expect(static_cast<int>(in.size()) == q * (q - 1) / 2, "q=" + str(q) + " interior " + str(static_cast<int>(in.size())));
    std::vector<int> kind(pl.size(), 0);  // 0 oval, 1 interior, 2 exterior
    for (int i : in) kind[i] = 1;
    for (int i : ext) kind[i] = 2;
    int uneven = 0;
    for (int j = 0; j < pl.size(); ++j) {
      if (od.line_class[j] == LineClass::tangent) continue;
      int ni = 0, ne = 0;
      for (int i : pl.points_on(j)) {
        ni += kind[i] == 1;
        ne += kind[i] == 2;
      }
      uneven += ni != ne;
    }
    c.expect(uneven == 0, "q=" + str(q) + " " + str(uneven) + " non-tangent lines split unevenly");
  }
  c.note("exterior q(q+1)/2, interior q(q-1)/2, even splits for q in {5,7,9,11,13}");
}

Graph random_bipartite(std::mt19937_64& rng, int side) {
  GraphBuilder b(2 * side);
  std::bernoulli_distribution edge(0.5);
  for (int u = 0; u < side; ++u)
    for (int v = side; v < 2 * side; ++v)
      if (edge(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

void criterion_oracle(Checker& c) {
  std::mt19937_64 rng(12);
  int agree = 0;
  for (int k = 0; k < 20; ++k) {
    const Graph g = random_bipartite(rng, 6);
    for (int t : {-1, 0, 1}) {
      const auto fast = exhaustive_exists(g, t);
      const auto slow = brute_force_exists(g, t);
      const bool ok = fast.status == slow.status;
      c.expect(ok, "graph " + str(k) + " t=" + str(t) + ": " + to_string(fast.status) + " vs " + to_string(slow.status));
      if (fast.witness) c.expect(margins(g, *fast.witness).partition_intimacy >= t, "graph " + str(k) + " bad witness");
      agree += ok;
    }
  }
  c.note(str(agree) + "/60 agree");
}

void criterion_anneal(Checker& c) {
  for (int q : {5, 7}) {
    const SearchRequest req{.method = "anneal", .q = q, .t = 1};
    const auto first = c.search(req);
    const auto again = run_search(req);
    c.expect(first.document.dump() == again.document.dump(), "q=" + str(q) + " anneal output is not reproducible");
    if (first.result.witness) {
      const Plane pl = build_plane(q);
      c.expect(margins(incidence_graph(pl).graph, *first.result.witness).partition_intimacy >= 1,
               "q=" + str(q) + " witness fails re-verification");
    }
    c.note("q=" + str(q) + " seed " + std::to_string(req.anneal.seed) + ": " + to_string(first.result.status));
  }
}

struct Spec {
  const char* title;
  double limit;
  void (*run)(Checker&);
};

const Spec kCriteria[] = {
    {"Baer intimacy at q = 4, 9, 25", 15.0, criterion_baer_exact},
    {"upper bound holds for all partitions at square q", 60.0, criterion_upper_bound},
    {"PG(2,3) exhaustive: no 1-internal partition, max intimacy 0", 60.0, criterion_small_plane},
    {"odd-order constructions are internal", 120.0, criterion_odd_constructions},
    {"Denniston arcs and strict even partitions", 30.0, criterion_even},
    {"Gram identity, singular values, mixing inequality", 30.0, criterion_spectral},
    {"conic point and line counts", 10.0, criterion_ovals},
    {"branch and bound agrees with full enumeration", 60.0, criterion_oracle},
    {"annealing records at q = 5, 7 with t = 1", 300.0, criterion_anneal},
};

}  // namespace

int acceptance_criterion_count() { return static_cast<int>(std::size(kCriteria)); }

CriterionResult run_criterion(int id) {
  if (id < 1 || id > acceptance_criterion_count()) throw std::out_of_range("no criterion " + std::to_string(id));
  const Spec& s = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = s.title;
  r.limit_seconds = s.limit;
  Checker c;
  const auto t0 = Clock::now();
  try {
    s.run(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = since(t0);
  if (r.seconds > s.limit)
    c.failures.push_back("took " + std::to_string(r.seconds) + " s, limit " + std::to_string(s.limit) + " s");
  r.passed = c.failures.empty();
  r.detail = c.detail();
  r.records = std::move(c.records);
  return r;
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= acceptance_criterion_count(); ++id) out.push_back(run_criterion(id));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.title << " (" << r.seconds << " s / limit "
     << r.limit_seconds << " s): " << r.detail;
  return os.str();
}

}  // namespace pgpart
