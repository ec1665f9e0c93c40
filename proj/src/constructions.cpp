#include "pgpart/constructions.hpp"

#include <algorithm>
#include <string>

namespace pgpart {

Partition partition_from_sets(const Plane& pl, std::span<const int> points_a, std::span<const int> lines_a) {
  const int n = pl.size();
  std::vector<int> a;
  a.reserve(points_a.size() + lines_a.size());
  for (int i : points_a) {
    if (i < 0 || i >= n) throw ConstructionError("point index out of range");
    a.push_back(i);
  }
  for (int j : lines_a) {
    if (j < 0 || j >= n) throw ConstructionError("line index out of range");
    a.push_back(n + j);
  }
  return Partition::from_class_a(2 * n, a);
}

int baer_class_count(int q) {
  const auto s = exact_sqrt(q);
  if (!s) throw ConstructionError("baer construction requires a square order q");
  return (q - *s + 1) / 2;
}

Partition construct_baer_partition(const Plane& pl, const BaerDecomposition& dec) {
  const int m = baer_class_count(pl.order());
  if (static_cast<int>(dec.subplanes.size()) < m || dec.suborder * dec.suborder != pl.order())
    throw ConstructionError("Baer decomposition does not belong to this plane");
  std::vector<int> pts, lns;
  for (int k = 0; k < m; ++k) {
    const auto& sp = dec.subplanes[k];
    pts.insert(pts.end(), sp.points.begin(), sp.points.end());
    lns.insert(lns.end(), sp.lines.begin(), sp.lines.end());
  }
  return partition_from_sets(pl, pts, lns);
}

Partition construct_combinatorial(const Plane& pl, const CombinatorialParams& params) {
  const int q = pl.order();
  const int n = pl.size();
  if (q % 2 == 0) throw ConstructionError("combinatorial construction requires odd q");
  const int half = (q + 1) / 2;
  const int centre = params.point.value_or(q + 1);  // (0:0:1)
  const int axis = params.line.value_or(q + 1);     // [0:0:1]
  if (centre < 0 || centre >= n || axis < 0 || axis >= n) throw ConstructionError("point or line index out of range");
  if (pl.incident(centre, axis)) throw ConstructionError("combinatorial construction requires P not on ell");

  std::vector<int> pencil = params.pencil;
  if (pencil.empty()) {
    const auto through = pl.lines_through(centre);
    pencil.assign(through.begin(), through.begin() + half);
  }
  std::sort(pencil.begin(), pencil.end());
  if (static_cast<int>(pencil.size()) != half || std::adjacent_find(pencil.begin(), pencil.end()) != pencil.end())
    throw ConstructionError("pencil must consist of (q+1)/2 distinct lines");
  for (int j : pencil)
    if (j < 0 || j >= n || !pl.incident(centre, j)) throw ConstructionError("pencil lines must all pass through P");

  std::vector<char> in_p1(n, 0), in_l1(n, 0);
  for (int j : pencil)
    for (int i : pl.points_on(j)) in_p1[i] = 1;
  for (int x : pl.points_on(axis)) {
    if (!in_p1[x]) continue;
    for (int j : pl.lines_through(x)) in_l1[j] = 1;
  }
  if (params.drop_point) in_p1[centre] = 0;
  if (params.drop_line) in_l1[axis] = 0;

  std::vector<int> pts, lns;
  for (int i = 0; i < n; ++i) {
    if (in_p1[i]) pts.push_back(i);
    if (in_l1[i]) lns.push_back(i);
  }
  return partition_from_sets(pl, pts, lns);
}

namespace {

enum class Residue { one_mod_4, three_mod_4 };

// Membership of a normalized triple in P1.
bool algebraic_member(const Field& f, const SquareSet& squares, const HomTriple& t, Residue r, bool erase_units) {
  const auto x = t.c[0], y = t.c[1], z = t.c[2];
  const bool unit = (z.code == 1 && x.code == 0 && y.code == 0) || (z.code == 0 && y.code == 1 && x.code == 0) ||
                    (z.code == 0 && y.code == 0);
  if (unit) return !erase_units;
  if (z.code == 0) {
    // (x:1:0), x nonzero
    return r == Residue::one_mod_4 ? squares.contains(x) : !squares.contains(x);
  }
  if (x.code != 0 && y.code != 0) return squares.contains(f.div(y, x));
  if (x.code == 0) return r == Residue::one_mod_4 ? squares.contains(y) : true;
  // (x:0:1), x nonzero
  return r == Residue::one_mod_4 ? !squares.contains(x) : false;
}

HomTriple reversed(const Field& f, const HomTriple& t) {
  return normalize(f, HomTriple{{t.c[2], t.c[1], t.c[0]}});
}

Partition algebraic(const Plane& pl, Residue r, bool erase_units) {
  const Field& f = pl.field();
  const auto squares = f.square_set();
  std::vector<int> pts, lns;
  for (int i = 0; i < pl.size(); ++i) {
    if (algebraic_member(f, squares, pl.point(i), r, erase_units)) pts.push_back(i);
    // q = 1 mod 4: [x:y:z] is in L1 when (z:y:x) is in P1. With the same
    // coordinates the points (x:y:1), y/x a nonsquare, see only two lines
    // of their own class. q = 3 mod 4 keeps the coordinates as they are.
    const HomTriple l = r == Residue::one_mod_4 ? reversed(f, pl.line(i)) : pl.line(i);
    if (algebraic_member(f, squares, l, r, erase_units)) lns.push_back(i);
  }
  return partition_from_sets(pl, pts, lns);
}

}  // namespace

Partition construct_algebraic_1mod4(const Plane& pl, bool erase_units) {
  if (pl.order() % 4 != 1) throw ConstructionError("alg1mod4 construction requires q ≡ 1 (mod 4)");
  return algebraic(pl, Residue::one_mod_4, erase_units);
}

Partition construct_algebraic_3mod4(const Plane& pl, bool erase_units) {
  if (pl.order() % 4 != 3) throw ConstructionError("alg3mod4 construction requires q ≡ 3 (mod 4)");
  return algebraic(pl, Residue::three_mod_4, erase_units);
}

std::vector<int> OvalData::interior_points() const {
  std::vector<int> in_oval(tangent_count.size(), 0), out;
  for (int i : oval) in_oval[i] = 1;
  for (int i = 0; i < static_cast<int>(tangent_count.size()); ++i)
    if (!in_oval[i] && tangent_count[i] == 0) out.push_back(i);
  return out;
}

std::vector<int> OvalData::exterior_points() const {
  std::vector<int> in_oval(tangent_count.size(), 0), out;
  for (int i : oval) in_oval[i] = 1;
  for (int i = 0; i < static_cast<int>(tangent_count.size()); ++i)
    if (!in_oval[i] && tangent_count[i] == 2) out.push_back(i);
  return out;
}

int OvalData::count(LineClass c) const {
  return static_cast<int>(std::count(line_class.begin(), line_class.end(), c));
}

OvalData classify_conic(const Plane& pl) {
  const Field& f = pl.field();
  if (f.q() % 2 == 0) throw ConstructionError("conic classification requires odd q");
  const int n = pl.size();
  OvalData od;
  for (const auto t : f.elements()) od.oval.push_back(pl.index_of({{t, f.mul(t, t), f.one()}}));
  od.oval.push_back(pl.index_of({{f.zero(), f.one(), f.zero()}}));
  std::sort(od.oval.begin(), od.oval.end());

  std::vector<int> hits(n, 0);
  for (int i : od.oval)
    for (int j : pl.lines_through(i)) ++hits[j];
  od.line_class.resize(n);
  od.tangent_count.assign(n, 0);
  for (int j = 0; j < n; ++j) {
    if (hits[j] > 2) throw std::logic_error("conic has three collinear points");
    od.line_class[j] = hits[j] == 0 ? LineClass::skew : hits[j] == 1 ? LineClass::tangent : LineClass::secant;
    if (hits[j] == 1)
      for (int i : pl.points_on(j)) ++od.tangent_count[i];
  }
  return od;
}

Partition construct_oval(const Plane& pl, const OvalData& od, OvalVariant variant) {
  if (pl.order() % 2 == 0) throw ConstructionError("oval construction requires odd q");
  std::vector<int> lns;
  for (int j = 0; j < pl.size(); ++j) {
    const auto c = od.line_class[j];
    if (c == LineClass::skew || (variant == OvalVariant::exterior_skewtangent && c == LineClass::tangent))
      lns.push_back(j);
  }
  const auto pts = variant == OvalVariant::interior_skew ? od.interior_points() : od.exterior_points();
  return partition_from_sets(pl, pts, lns);
}

ArcData construct_denniston(const Plane& pl) {
  const Field& f = pl.field();
  if (f.p() != 2 || f.h() < 2) throw ConstructionError("Denniston arc requires q = 2^h with h > 1");
  FieldElement lambda{0};
  for (const auto c : f.elements()) {
    if (c.code != 0 && f.trace(f.inv(c)) == 1) {
      lambda = c;
      break;
    }
  }
  ArcData ad;
  ad.degree = f.q() / 2;
  for (const auto y : f.elements())
    for (const auto x : f.elements()) {
      const auto form = f.add(f.add(f.mul(x, x), f.mul(lambda, f.mul(x, y))), f.mul(y, y));
      if (f.trace(form) == 0) ad.arc.push_back(pl.index_of({{x, y, f.one()}}));
    }
  std::sort(ad.arc.begin(), ad.arc.end());
  ad.line_intersections.assign(pl.size(), 0);
  for (int i : ad.arc)
    for (int j : pl.lines_through(i)) ++ad.line_intersections[j];
  if (!verify_maximal_arc(pl, ad.arc, ad.degree)) throw std::logic_error("Denniston set is not a maximal arc");
  return ad;
}

bool verify_maximal_arc(const Plane& pl, std::span<const int> arc, int n) {
  const int q = pl.order();
  if (n < 1 || static_cast<long long>(arc.size()) != static_cast<long long>(n - 1) * (q + 1) + 1) return false;
  std::vector<char> in(pl.size(), 0);
  for (int i : arc) {
    if (i < 0 || i >= pl.size() || in[i]) return false;
    in[i] = 1;
  }
  for (int j = 0; j < pl.size(); ++j) {
    int c = 0;
    for (int i : pl.points_on(j)) c += in[i];
    if (c != 0 && c != n) return false;
  }
  return true;
}

int default_even_line(const Plane& pl, const ArcData& arc) {
  for (int j = 0; j < pl.size(); ++j)
    if (arc.line_intersections[j] == arc.degree) return j;
  throw ConstructionError("arc has no secant of its degree");
}

Partition construct_even(const Plane& pl, const ArcData& arc, std::optional<int> line) {
  const int q = pl.order();
  if (q % 2 != 0 || q < 4) throw ConstructionError("even construction requires q = 2^h with h > 1");
  const int n = pl.size();
  const int axis = line.value_or(default_even_line(pl, arc));
  if (axis < 0 || axis >= n || arc.line_intersections[axis] != q / 2)
    throw ConstructionError("even construction requires ell to be a q/2-secant of the arc");

  std::vector<char> in_p1(n, 0), in_l1(n, 0);
  for (int i : arc.arc) in_p1[i] = 1;
  for (int i : pl.points_on(axis)) {
    const bool on_arc = in_p1[i];
    in_p1[i] = !on_arc;
    if (on_arc) continue;
    for (int j : pl.lines_through(i))
      if (arc.line_intersections[j] > 0) in_l1[j] = 1;
  }
  std::vector<int> pts, lns;
  for (int i = 0; i < n; ++i) {
    if (in_p1[i]) pts.push_back(i);
    if (in_l1[i]) lns.push_back(i);
  }
  return partition_from_sets(pl, pts, lns);
}

}  // namespace pgpart
