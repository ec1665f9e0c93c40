#pragma once

#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pgpart/graph.hpp"
#include "pgpart/partition.hpp"
#include "pgpart/plane.hpp"

namespace pgpart {

inline constexpr int kMaxSpectralOrder = 16;

/// Point-by-line 0/1 incidence matrix.
template <typename Scalar = int>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> incidence_matrix(const Plane& pl) {
  const int n = pl.size();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int i : pl.points_on(j)) m(i, j) = Scalar(1);
  return m;
}

/// Max-entry norm of M M^T - qI - J, computed in exact integer arithmetic.
long long gram_identity_residual(const Plane& pl);

/// (value, multiplicity), sorted by value descending.
using GroupedValues = std::vector<std::pair<double, int>>;

/// Groups values that lie within tol of the first member of their group.
GroupedValues group_values(std::vector<double> values, double tol);

struct SpectralReport {
  GroupedValues singular_values;
  double lambda2 = 0.0;
  long long identity_residual = 0;
};

SpectralReport singular_spectrum(const Plane& pl, double tol = 1e-9);

/// Eigenvalues of a graph's adjacency matrix (dense, symmetric).
GroupedValues adjacency_spectrum(const Graph& g, double tol = 1e-9);

/// Expander-mixing interval for e(S,T) with |S| = s, |T| = t; n is the size
/// of one side for the bipartite form (or of the vertex set in general).
struct MixingBound {
  int s = 0;
  int t = 0;
  double expected = 0.0;
  double deviation_cap = 0.0;
  double lower = 0.0;
  double upper = 0.0;

  bool contains(double e, double eps = 1e-9) const { return e >= lower - eps && e <= upper + eps; }
};

MixingBound mixing_bound(int n, int d, double lambda2, int s, int t);

/// Edges between point vertices S and line vertices T of the Levi graph.
long long edges_between(const Plane& pl, std::span<const int> point_vertices, std::span<const int> line_vertices);

/// True iff e(S,T) lies inside the bipartite mixing interval with lambda2 = sqrt q.
/// S must hold point vertices and T line vertices (Levi graph ids).
bool check_mixing(const Plane& pl, std::span<const int> point_vertices, std::span<const int> line_vertices);

/// Largest integer strictly below sqrt(q)/2.
int intimacy_upper_bound(long long q);

/// Instantiation of the two-sided estimate on e(X_P, X_L) for one class X of
/// a partition, oriented so |X_L| <= |X_P| and |X_L| <= (q^2+q)/2.
struct MixingAudit {
  Side side = Side::A;
  bool dual = false;  // true when points and lines swapped roles
  int points = 0;     // |X_P|
  int lines = 0;      // |X_L|
  long long edges = 0;
  double mixing_upper = 0.0;     // expected + sqrt(q)-deviation
  double intimacy_lower = 0.0;   // |X_P| ((q+1)/2 + t) with t the partition intimacy
  double hypothetical_lower = 0.0;  // same with t = sqrt(q)/2

  bool upper_holds() const { return edges <= mixing_upper + 1e-9; }
  bool lower_holds() const { return edges >= intimacy_lower - 1e-9; }
  /// The hypothetical intimacy sqrt(q)/2 contradicts the mixing upper bound.
  bool excludes_half_sqrt_q() const { return hypothetical_lower > mixing_upper; }
};

MixingAudit audit_mixing(const Plane& pl, const Partition& part, int partition_intimacy);

}  // namespace pgpart
