#include "pgpart/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "pgpart/field.hpp"

namespace pgpart {

long long gram_identity_residual(const Plane& pl) {
  const Eigen::MatrixXi m = incidence_matrix<int>(pl);
  const int n = pl.size();
  const Eigen::MatrixXi expected =
      Eigen::MatrixXi::Constant(n, n, 1) + pl.order() * Eigen::MatrixXi::Identity(n, n);
  const Eigen::MatrixXi diff = m * m.transpose() - expected;
  return diff.cwiseAbs().maxCoeff();
}

GroupedValues group_values(std::vector<double> values, double tol) {
  std::sort(values.begin(), values.end(), std::greater<>());
  GroupedValues out;
  for (double v : values) {
    if (!out.empty() && std::abs(out.back().first - v) <= tol) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

SpectralReport singular_spectrum(const Plane& pl, double tol) {
  if (pl.order() > kMaxSpectralOrder)
    throw std::invalid_argument("dense spectrum supports q <= " + std::to_string(kMaxSpectralOrder));
  const Eigen::MatrixXd m = incidence_matrix<double>(pl);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  const Eigen::VectorXd sv = svd.singularValues();
  SpectralReport r;
  r.singular_values = group_values(std::vector<double>(sv.data(), sv.data() + sv.size()), tol);
  r.lambda2 = r.singular_values.size() > 1 ? r.singular_values[1].first : 0.0;
  r.identity_residual = gram_identity_residual(pl);
  return r;
}

GroupedValues adjacency_spectrum(const Graph& g, double tol) {
  const int n = g.size();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) a(v, w) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  return group_values(std::vector<double>(ev.data(), ev.data() + ev.size()), tol);
}

MixingBound mixing_bound(int n, int d, double lambda2, int s, int t) {
  if (n <= 0 || s < 0 || t < 0 || s > n || t > n) throw std::invalid_argument("subset sizes must lie in [0, n]");
  MixingBound b;
  b.s = s;
  b.t = t;
  const double ds = s, dt = t, dn = n;
  b.expected = d * ds * dt / dn;
  b.deviation_cap = lambda2 * std::sqrt(std::max(0.0, ds * dt * (1.0 - ds / dn) * (1.0 - dt / dn)));
  b.lower = b.expected - b.deviation_cap;
  b.upper = b.expected + b.deviation_cap;
  return b;
}

long long edges_between(const Plane& pl, std::span<const int> point_vertices, std::span<const int> line_vertices) {
  const int n = pl.size();
  std::vector<char> in_t(n, 0);
  for (int v : line_vertices) in_t[v - n] = 1;
  long long e = 0;
  for (int v : point_vertices)
    for (int j : pl.lines_through(v)) e += in_t[j];
  return e;
}

bool check_mixing(const Plane& pl, std::span<const int> point_vertices, std::span<const int> line_vertices) {
  const int n = pl.size();
  std::vector<char> seen(2 * n, 0);
  for (int v : point_vertices) {
    if (v < 0 || v >= n) throw std::invalid_argument("S must contain point vertices only");
    if (seen[v]++) throw std::invalid_argument("S contains a repeated vertex");
  }
  for (int v : line_vertices) {
    if (v < n || v >= 2 * n) throw std::invalid_argument("T must contain line vertices only");
    if (seen[v]++) throw std::invalid_argument("T contains a repeated vertex");
  }
  const auto bound = mixing_bound(n, pl.order() + 1, std::sqrt(static_cast<double>(pl.order())),
                                  static_cast<int>(point_vertices.size()), static_cast<int>(line_vertices.size()));
  return bound.contains(static_cast<double>(edges_between(pl, point_vertices, line_vertices)));
}

int intimacy_upper_bound(long long q) {
  if (!as_prime_power(q)) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  // t < sqrt(q)/2  <=>  4 t^2 < q  for t >= 0.
  long long t = 0;
  while (4 * (t + 1) * (t + 1) < q) ++t;
  return static_cast<int>(t);
}

MixingAudit audit_mixing(const Plane& pl, const Partition& part, int partition_intimacy) {
  const int n = pl.size();
  const int q = pl.order();
  if (part.size() != 2 * n) throw std::invalid_argument("partition does not match the plane's Levi graph");

  std::vector<int> pts[2], lns[2];
  for (int v = 0; v < 2 * n; ++v) {
    const int k = part.side(v) == Side::A ? 0 : 1;
    (v < n ? pts[k] : lns[k]).push_back(v);
  }
  const auto half = (static_cast<long long>(q) * q + q) / 2;
  MixingAudit a;
  bool chosen = false;
  for (int k = 0; k < 2 && !chosen; ++k) {
    for (bool dual : {false, true}) {
      const auto np = static_cast<int>(dual ? lns[k].size() : pts[k].size());
      const auto nl = static_cast<int>(dual ? pts[k].size() : lns[k].size());
      if (nl <= np && nl <= half) {
        a.side = k == 0 ? Side::A : Side::B;
        a.dual = dual;
        a.points = np;
        a.lines = nl;
        a.edges = edges_between(pl, pts[k], lns[k]);
        chosen = true;
        break;
      }
    }
  }
  if (!chosen) throw std::logic_error("no class satisfies the size normalization");

  const double sq = std::sqrt(static_cast<double>(q));
  a.mixing_upper = mixing_bound(n, q + 1, sq, a.points, a.lines).upper;
  a.intimacy_lower = a.points * ((q + 1) / 2.0 + partition_intimacy);
  a.hypothetical_lower = a.points * ((q + 1) / 2.0 + sq / 2.0);
  return a;
}

}  // namespace pgpart
