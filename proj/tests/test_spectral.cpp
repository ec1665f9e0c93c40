#include <doctest.h>

#include <cmath>
#include <random>

#include "pgpart/constructions.hpp"
#include "pgpart/spectral.hpp"
#include "pgpart/verify.hpp"

using namespace pgpart;

TEST_SUITE("spectral") {

TEST_CASE("Gram identity holds exactly") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) CHECK(gram_identity_residual(build_plane(q)) == 0);
}

TEST_CASE("singular values") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    CAPTURE(q);
    const auto r = singular_spectrum(build_plane(q));
    REQUIRE(r.singular_values.size() == 2);
    CHECK(std::abs(r.singular_values[0].first - (q + 1)) <= 1e-9);
    CHECK(r.singular_values[0].second == 1);
    CHECK(std::abs(r.singular_values[1].first - std::sqrt(q)) <= 1e-9);
    CHECK(r.singular_values[1].second == q * q + q);
    CHECK(std::abs(r.lambda2 - std::sqrt(q)) <= 1e-9);
  }
  CHECK_THROWS(singular_spectrum(build_plane(17)));
}

TEST_CASE("bipartite adjacency spectrum of PG(2,4)") {
  const auto ev = adjacency_spectrum(incidence_graph(build_plane(4)).graph, 1e-8);
  REQUIRE(ev.size() == 4);
  CHECK(std::abs(ev[0].first - 5) < 1e-8);
  CHECK(ev[0].second == 1);
  CHECK(std::abs(ev[1].first - 2) < 1e-8);
  CHECK(ev[1].second == 20);
  CHECK(std::abs(ev[2].first + 2) < 1e-8);
  CHECK(ev[2].second == 20);
  CHECK(std::abs(ev[3].first + 5) < 1e-8);
}

TEST_CASE("group_values") {
  const auto g = group_values({1.0, 3.0, 1.0 + 1e-12, 2.0}, 1e-9);
  REQUIRE(g.size() == 3);
  CHECK(g[0].first == 3.0);
  CHECK(g[2].second == 2);
}

TEST_CASE("mixing bound examples") {
  const auto empty = mixing_bound(31, 6, std::sqrt(5.0), 0, 12);
  CHECK(empty.lower == 0.0);
  CHECK(empty.upper == 0.0);
  const auto full = mixing_bound(31, 6, std::sqrt(5.0), 31, 31);
  CHECK(full.deviation_cap == 0.0);
  CHECK(full.expected == doctest::Approx(6.0 * 31));
  const auto ten = mixing_bound(31, 6, std::sqrt(5.0), 10, 10);
  CHECK(ten.expected == doctest::Approx(600.0 / 31));
  CHECK(ten.expected == doctest::Approx(19.35).epsilon(0.001));
  CHECK(ten.deviation_cap == doctest::Approx(std::sqrt(5.0) * 10 * 21 / 31));
  CHECK(ten.deviation_cap == doctest::Approx(15.15).epsilon(0.001));
  CHECK(ten.lower <= ten.upper);
  CHECK_THROWS(mixing_bound(31, 6, 1.0, 32, 1));
  CHECK_THROWS(mixing_bound(31, 6, 1.0, -1, 1));
}

TEST_CASE("check_mixing") {
  const Plane pl = build_plane(5);
  const int n = pl.size();
  std::mt19937_64 rng(4);
  std::vector<int> pts(n), lns(n);
  for (int i = 0; i < n; ++i) {
    pts[i] = i;
    lns[i] = n + i;
  }
  for (int k = 0; k < 1000; ++k) {
    std::shuffle(pts.begin(), pts.end(), rng);
    std::shuffle(lns.begin(), lns.end(), rng);
    const std::size_t s = rng() % (n + 1), t = rng() % (n + 1);
    const auto S = std::span(pts).first(s), T = std::span(lns).first(t);
    // Direct count against edges_between.
    long long e = 0;
    for (int p : S)
      for (int l : T) e += pl.incident(p, l - n);
    REQUIRE(e == edges_between(pl, S, T));
    REQUIRE(check_mixing(pl, S, T));
  }
  const std::vector<int> one{7};
  std::vector<int> through, missing;
  for (int l = 0; l < n; ++l) (pl.incident(7, l) ? through : missing).push_back(n + l);
  CHECK(edges_between(pl, one, through) == 6);
  CHECK(check_mixing(pl, one, through));
  CHECK(edges_between(pl, one, missing) == 0);
  CHECK(check_mixing(pl, one, missing));
  const std::vector<int> mixed{n + 1};
  CHECK_THROWS(check_mixing(pl, mixed, through));
  CHECK_THROWS(check_mixing(pl, one, one));
  const std::vector<int> twice{n + 1, n + 1};
  CHECK_THROWS(check_mixing(pl, one, twice));
}

TEST_CASE("intimacy upper bound") {
  CHECK(intimacy_upper_bound(9) == 1);
  CHECK(intimacy_upper_bound(25) == 2);
  CHECK(intimacy_upper_bound(3) == 0);
  CHECK(intimacy_upper_bound(4) == 0);
  CHECK(intimacy_upper_bound(16) == 1);
  CHECK(intimacy_upper_bound(5) == 1);
  CHECK(intimacy_upper_bound(7) == 1);
  CHECK(intimacy_upper_bound(49) == 3);
  // For square q the bound is floor((sqrt q - 1)/2).
  for (int m : {2, 3, 4, 5, 7, 8, 9, 11}) CHECK(intimacy_upper_bound(m * m) == (m - 1) / 2);
  CHECK_THROWS(intimacy_upper_bound(6));
}

TEST_CASE("bound covers constructed partitions") {
  for (int q : {3, 4, 5, 7, 8, 9, 11, 13, 16, 25}) {
    const Plane pl = build_plane(q);
    const auto g = incidence_graph(pl).graph;
    std::vector<Partition> parts;
    if (exact_sqrt(q)) parts.push_back(construct_baer_partition(pl, baer_decomposition(pl)));
    if (q % 2) {
      parts.push_back(construct_combinatorial(pl));
      parts.push_back(construct_oval(pl, classify_conic(pl), OvalVariant::exterior_skewtangent));
      if (q % 4 == 1) parts.push_back(construct_algebraic_1mod4(pl));
      if (q % 4 == 3) parts.push_back(construct_algebraic_3mod4(pl));
    } else if (q >= 4) {
      parts.push_back(construct_even(pl, construct_denniston(pl)));
    }
    for (const auto& p : parts) CHECK(margins(g, p).partition_intimacy <= intimacy_upper_bound(q));
  }
}

TEST_CASE("inequality chain on the Baer partition of PG(2,9)") {
  const Plane pl = build_plane(9);
  const auto part = construct_baer_partition(pl, baer_decomposition(pl));
  const int inti = margins(incidence_graph(pl).graph, part).partition_intimacy;
  const auto a = audit_mixing(pl, part, inti);
  CHECK(a.lines <= a.points);
  CHECK(a.lines <= (81 + 9) / 2);
  CHECK(a.upper_holds());
  CHECK(a.lower_holds());
  // t = sqrt(q)/2 = 1.5 would force more edges than mixing allows.
  CHECK(a.excludes_half_sqrt_q());
  // Class A: three subplanes, 39 points each meeting 6 lines of A.
  CHECK(a.side == Side::A);
  CHECK(a.points == 39);
  CHECK(a.edges == 39 * 6);
}

}
