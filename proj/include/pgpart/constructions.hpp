#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "pgpart/partition.hpp"
#include "pgpart/plane.hpp"

namespace pgpart {

/// Raised when a construction's precondition on q or its parameters fails.
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Every partition here lives on the Levi graph of the plane: point i is
/// vertex i, line j is vertex size()+j. Class A is always P1 u L1.
Partition partition_from_sets(const Plane& pl, std::span<const int> points_a, std::span<const int> lines_a);

/// Union of the first floor((q - sqrt q + 1)/2) Baer subplanes.
Partition construct_baer_partition(const Plane& pl, const BaerDecomposition& dec);
int baer_class_count(int q);

struct CombinatorialParams {
  /// Defaults: P = (0:0:1), ell = [0:0:1], pencil = first (q+1)/2 lines through P.
  std::optional<int> point;
  std::optional<int> line;
  std::vector<int> pencil;
  bool drop_point = false;
  bool drop_line = false;
};

/// Points of (q+1)/2 concurrent lines through P, plus every line through the
/// (q+1)/2 points those lines cut out on a line ell missing P.
Partition construct_combinatorial(const Plane& pl, const CombinatorialParams& params = {});

Partition construct_algebraic_1mod4(const Plane& pl, bool erase_units = false);
Partition construct_algebraic_3mod4(const Plane& pl, bool erase_units = false);

enum class LineClass : std::uint8_t { skew, tangent, secant };

struct OvalData {
  std::vector<int> oval;
  std::vector<int> tangent_count;  // per point
  std::vector<LineClass> line_class;

  std::vector<int> interior_points() const;
  std::vector<int> exterior_points() const;
  int count(LineClass c) const;
};

/// The conic {(t : t^2 : 1)} u {(0:1:0)} with its line and point classification.
OvalData classify_conic(const Plane& pl);

enum class OvalVariant { interior_skew, exterior_skewtangent };

Partition construct_oval(const Plane& pl, const OvalData& od, OvalVariant variant);

struct ArcData {
  std::vector<int> arc;
  int degree = 0;
  std::vector<int> line_intersections;  // |line n arc| per line
};

/// Denniston maximal arc of degree q/2: {(x:y:1) : x^2 + l xy + y^2 in ker Tr},
/// l the least nonzero element with Tr(1/l) = 1.
ArcData construct_denniston(const Plane& pl);

/// True iff |M| = (n-1)(q+1)+1 and every line meets M in 0 or n points.
bool verify_maximal_arc(const Plane& pl, std::span<const int> arc, int n);

/// P1 = M xor ell; L1 = lines through points of ell \ M that meet M.
/// Defaults to the lowest-index q/2-secant.
Partition construct_even(const Plane& pl, const ArcData& arc, std::optional<int> line = std::nullopt);
int default_even_line(const Plane& pl, const ArcData& arc);

}  // namespace pgpart
