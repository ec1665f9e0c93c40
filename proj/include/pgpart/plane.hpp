#pragma once

#include <array>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pgpart/field.hpp"
#include "pgpart/graph.hpp"

namespace pgpart {

inline constexpr int kMaxPlaneOrder = 64;

/// Homogeneous triple, normalized so its last nonzero coordinate is 1.
/// Points are written (a:b:c) and lines [x:y:z]; both use the same type.
struct HomTriple {
  std::array<FieldElement, 3> c{};

  friend constexpr bool operator==(const HomTriple&, const HomTriple&) = default;
};

/// Scales t so its last nonzero coordinate is 1. Throws on the zero triple.
HomTriple normalize(const Field& f, HomTriple t);

/// PG(2,q). Points and lines are both enumerated in the order
///   (1:0:0), (x:1:0) for x = 0..q-1, (x:y:1) for y = 0..q-1, x = 0..q-1,
/// which is the lexicographic order of normalized coordinates with the last
/// coordinate most significant (elements compared by code).
class Plane {
 public:
  explicit Plane(std::shared_ptr<const Field> field);

  const Field& field() const { return *field_; }
  std::shared_ptr<const Field> field_ptr() const { return field_; }
  int order() const { return field_->q(); }
  /// Number of points, which is also the number of lines.
  int size() const { return static_cast<int>(triples_.size()); }

  const HomTriple& point(int i) const { return triples_[i]; }
  const HomTriple& line(int j) const { return triples_[j]; }
  /// Index of the point (or line) with the given coordinates, after normalizing.
  int index_of(HomTriple t) const;

  bool incident(int point, int line) const {
    return (incidence_[static_cast<std::size_t>(point) * words_ + (line >> 6)] >> (line & 63)) & 1U;
  }
  std::span<const int> points_on(int line) const { return points_on_[line]; }
  std::span<const int> lines_through(int point) const { return lines_through_[point]; }

  /// Line through two distinct points; the point on two distinct lines.
  int join(int p1, int p2) const;
  int meet(int l1, int l2) const;

  std::string point_label(int i) const;
  std::string line_label(int j) const;

 private:
  std::shared_ptr<const Field> field_;
  std::vector<HomTriple> triples_;
  std::vector<std::vector<int>> points_on_;
  std::vector<std::vector<int>> lines_through_;
  std::vector<std::uint64_t> incidence_;
  std::size_t words_ = 0;
};

Plane build_plane(std::shared_ptr<const Field> field);
Plane build_plane(int q);

/// Levi graph: vertex i < N is point i, vertex N + j is line j.
struct IncidenceGraph {
  Graph graph;
  int n_points = 0;

  int point_vertex(int i) const { return i; }
  int line_vertex(int j) const { return n_points + j; }
  bool is_point(int v) const { return v < n_points; }
};

IncidenceGraph incidence_graph(const Plane& pl);

/// Label of vertex v in the Levi graph, "P(a:b:c)" or "L[x:y:z]".
std::string vertex_label(const Plane& pl, int v);
/// Inverse of vertex_label; throws std::invalid_argument on malformed input.
int vertex_from_label(const Plane& pl, const std::string& label);

using Mat3 = std::array<std::array<FieldElement, 3>, 3>;

Mat3 mat_identity(const Field& f);
Mat3 mat_mul(const Field& f, const Mat3& a, const Mat3& b);
Mat3 mat_pow(const Field& f, Mat3 a, std::uint64_t e);
Mat3 mat_transpose(const Mat3& a);
Mat3 mat_inverse(const Field& f, const Mat3& a);
HomTriple mat_apply(const Field& f, const Mat3& a, const HomTriple& v);

struct SingerCycle {
  /// x^3 + c2 x^2 + c1 x + c0 as {c0, c1, c2}.
  std::array<FieldElement, 3> polynomial{};
  Mat3 matrix{};
  std::vector<int> point_perm;
  std::vector<int> line_perm;
};

/// Companion matrix of the least monic primitive cubic over GF(q), acting on
/// points by v -> Cv and on lines by the inverse transpose.
SingerCycle singer_cycle(const Plane& pl);

/// True iff perm is one cycle through all of its elements.
bool is_single_cycle(std::span<const int> perm);

struct Subplane {
  std::vector<int> points;
  std::vector<int> lines;
};

struct BaerDecomposition {
  int suborder = 0;
  std::vector<Subplane> subplanes;
};

/// Point orbits of the Singer power g^(q - sqrt(q) + 1), ordered by their
/// smallest point index, each paired with the lines meeting it in sqrt(q)+1 points.
BaerDecomposition baer_decomposition(const Plane& pl);
BaerDecomposition baer_decomposition(const Plane& pl, const SingerCycle& sigma);

/// True iff (pts, lns) is a subplane of order m under the induced incidence.
bool verify_subplane(const Plane& pl, std::span<const int> pts, std::span<const int> lns, int m);

}  // namespace pgpart
