#include "pgpart/plane.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pgpart {

HomTriple normalize(const Field& f, HomTriple t) {
  for (int k = 2; k >= 0; --k) {
    if (t.c[k].code == 0) continue;
    const auto s = f.inv(t.c[k]);
    for (auto& x : t.c) x = f.mul(x, s);
    return t;
  }
  throw std::invalid_argument("zero triple has no projective point");
}

Plane::Plane(std::shared_ptr<const Field> field) : field_(std::move(field)) {
  const Field& f = *field_;
  const int q = f.q();
  if (q > kMaxPlaneOrder)
    throw std::invalid_argument("plane order " + std::to_string(q) + " exceeds supported maximum " +
                                std::to_string(kMaxPlaneOrder));
  const int n = q * q + q + 1;
  triples_.reserve(n);
  triples_.push_back({{f.one(), f.zero(), f.zero()}});
  for (std::uint32_t x = 0; x < static_cast<std::uint32_t>(q); ++x)
    triples_.push_back({{FieldElement{x}, f.one(), f.zero()}});
  for (std::uint32_t y = 0; y < static_cast<std::uint32_t>(q); ++y)
    for (std::uint32_t x = 0; x < static_cast<std::uint32_t>(q); ++x)
      triples_.push_back({{FieldElement{x}, FieldElement{y}, f.one()}});

  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  incidence_.assign(words_ * n, 0);
  points_on_.assign(n, {});
  lines_through_.assign(n, {});
  for (int j = 0; j < n; ++j) {
    const auto& l = triples_[j];
    for (int i = 0; i < n; ++i) {
      const auto& p = triples_[i];
      const auto dot = f.add(f.add(f.mul(p.c[0], l.c[0]), f.mul(p.c[1], l.c[1])), f.mul(p.c[2], l.c[2]));
      if (dot.code != 0) continue;
      points_on_[j].push_back(i);
      incidence_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    }
  }
  for (int j = 0; j < n; ++j)
    for (int i : points_on_[j]) lines_through_[i].push_back(j);
}

int Plane::index_of(HomTriple t) const {
  const int q = order();
  t = normalize(*field_, t);
  if (t.c[2].code != 0) return q + 1 + static_cast<int>(t.c[1].code) * q + static_cast<int>(t.c[0].code);
  if (t.c[1].code != 0) return 1 + static_cast<int>(t.c[0].code);
  return 0;
}

static int common_element(std::span<const int> a, std::span<const int> b) {
  std::size_t i = 0, k = 0;
  while (i < a.size() && k < b.size()) {
    if (a[i] == b[k]) return a[i];
    if (a[i] < b[k]) ++i;
    else ++k;
  }
  return -1;
}

int Plane::join(int p1, int p2) const {
  if (p1 == p2) throw std::invalid_argument("join of a point with itself");
  return common_element(lines_through_[p1], lines_through_[p2]);
}

int Plane::meet(int l1, int l2) const {
  if (l1 == l2) throw std::invalid_argument("meet of a line with itself");
  return common_element(points_on_[l1], points_on_[l2]);
}

static std::string coords(const HomTriple& t) {
  return std::to_string(t.c[0].code) + ":" + std::to_string(t.c[1].code) + ":" + std::to_string(t.c[2].code);
}

std::string Plane::point_label(int i) const { return "P(" + coords(triples_[i]) + ")"; }
std::string Plane::line_label(int j) const { return "L[" + coords(triples_[j]) + "]"; }

Plane build_plane(std::shared_ptr<const Field> field) { return Plane(std::move(field)); }

Plane build_plane(int q) {
  if (q > kMaxPlaneOrder)
    throw std::invalid_argument("plane order " + std::to_string(q) + " exceeds supported maximum " +
                                std::to_string(kMaxPlaneOrder));
  return Plane(std::make_shared<const Field>(make_field_of_order(q)));
}

IncidenceGraph incidence_graph(const Plane& pl) {
  const int n = pl.size();
  GraphBuilder b(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j : pl.lines_through(i)) b.add_edge(i, n + j);
  return {std::move(b).build(), n};
}

std::string vertex_label(const Plane& pl, int v) {
  return v < pl.size() ? pl.point_label(v) : pl.line_label(v - pl.size());
}

int vertex_from_label(const Plane& pl, const std::string& label) {
  const auto bad = [&] { return std::invalid_argument("malformed vertex label '" + label + "'"); };
  if (label.size() < 7) throw bad();
  const bool is_point = label[0] == 'P' && label[1] == '(' && label.back() == ')';
  const bool is_line = label[0] == 'L' && label[1] == '[' && label.back() == ']';
  if (!is_point && !is_line) throw bad();
  const std::string body = label.substr(2, label.size() - 3);
  HomTriple t;
  std::size_t pos = 0;
  for (int k = 0; k < 3; ++k) {
    const auto end = k < 2 ? body.find(':', pos) : body.size();
    if (end == std::string::npos || end == pos) throw bad();
    const std::string tok = body.substr(pos, end - pos);
    if (!std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) || tok.size() > 6)
      throw bad();
    t.c[k] = pl.field().element(static_cast<std::uint32_t>(std::stoul(tok)));
    pos = end + 1;
  }
  if (normalize(pl.field(), t) != t) throw bad();
  const int idx = pl.index_of(t);
  return is_point ? idx : pl.size() + idx;
}

Mat3 mat_identity(const Field& f) {
  Mat3 m{};
  for (int i = 0; i < 3; ++i) m[i][i] = f.one();
  return m;
}

Mat3 mat_mul(const Field& f, const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      FieldElement s = f.zero();
      for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(a[i][k], b[k][j]));
      r[i][j] = s;
    }
  return r;
}

Mat3 mat_pow(const Field& f, Mat3 a, std::uint64_t e) {
  Mat3 r = mat_identity(f);
  for (; e > 0; e >>= 1) {
    if (e & 1) r = mat_mul(f, r, a);
    a = mat_mul(f, a, a);
  }
  return r;
}

Mat3 mat_transpose(const Mat3& a) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
  return r;
}

Mat3 mat_inverse(const Field& f, const Mat3& a) {
  // Adjugate over determinant.
  const auto minor = [&](int r0, int r1, int c0, int c1) {
    return f.sub(f.mul(a[r0][c0], a[r1][c1]), f.mul(a[r0][c1], a[r1][c0]));
  };
  Mat3 cof{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      cof[i][j] = minor(r0, r1, c0, c1);  // cyclic indices absorb the sign
    }
  FieldElement det = f.zero();
  for (int j = 0; j < 3; ++j) det = f.add(det, f.mul(a[0][j], cof[0][j]));
  if (det.code == 0) throw std::invalid_argument("singular matrix");
  const auto dinv = f.inv(det);
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = f.mul(cof[j][i], dinv);
  return r;
}

HomTriple mat_apply(const Field& f, const Mat3& a, const HomTriple& v) {
  HomTriple r;
  for (int i = 0; i < 3; ++i) {
    FieldElement s = f.zero();
    for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(a[i][k], v.c[k]));
    r.c[i] = s;
  }
  return r;
}

bool is_single_cycle(std::span<const int> perm) {
  const auto n = static_cast<int>(perm.size());
  if (n == 0) return false;
  int v = 0, steps = 0;
  do {
    if (perm[v] < 0 || perm[v] >= n) return false;
    v = perm[v];
    ++steps;
  } while (v != 0 && steps <= n);
  return steps == n && v == 0;
}

SingerCycle singer_cycle(const Plane& pl) {
  const Field& f = pl.field();
  const std::uint64_t q = f.q();
  const std::uint64_t group = q * q * q - 1;
  const auto divisors = prime_factors(static_cast<std::int64_t>(group));
  const Mat3 id = mat_identity(f);

  for (std::uint64_t idx = 0; idx < q * q * q; ++idx) {
    const FieldElement c0{static_cast<std::uint32_t>(idx % q)};
    const FieldElement c1{static_cast<std::uint32_t>((idx / q) % q)};
    const FieldElement c2{static_cast<std::uint32_t>(idx / (q * q))};
    if (c0.code == 0) continue;
    Mat3 comp{};
    comp[1][0] = f.one();
    comp[2][1] = f.one();
    comp[0][2] = f.neg(c0);
    comp[1][2] = f.neg(c1);
    comp[2][2] = f.neg(c2);
    if (mat_pow(f, comp, group) != id) continue;
    bool primitive = true;
    for (auto r : divisors) {
      if (mat_pow(f, comp, group / static_cast<std::uint64_t>(r)) == id) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;

    SingerCycle s;
    s.polynomial = {c0, c1, c2};
    s.matrix = comp;
    const Mat3 dual = mat_transpose(mat_inverse(f, comp));
    const int n = pl.size();
    s.point_perm.resize(n);
    s.line_perm.resize(n);
    for (int i = 0; i < n; ++i) {
      s.point_perm[i] = pl.index_of(mat_apply(f, comp, pl.point(i)));
      s.line_perm[i] = pl.index_of(mat_apply(f, dual, pl.line(i)));
    }
    if (!is_single_cycle(s.point_perm) || !is_single_cycle(s.line_perm))
      throw std::logic_error("primitive companion matrix did not act as a single cycle");
    return s;
  }
  throw std::logic_error("no primitive cubic found");
}

BaerDecomposition baer_decomposition(const Plane& pl) { return baer_decomposition(pl, singer_cycle(pl)); }

BaerDecomposition baer_decomposition(const Plane& pl, const SingerCycle& sigma) {
  const int q = pl.order();
  const auto root = exact_sqrt(q);
  if (!root) throw std::invalid_argument("Baer decomposition requires a square order, got q = " + std::to_string(q));
  const int s = *root;
  const int n = pl.size();
  const int stride = q - s + 1;

  // Orbits of sigma^stride are the residue classes of cycle position mod stride.
  std::vector<int> klass(n);
  int v = 0;
  for (int pos = 0; pos < n; ++pos, v = sigma.point_perm[v]) klass[v] = pos % stride;

  std::vector<std::vector<int>> orbits(stride);
  for (int i = 0; i < n; ++i) orbits[klass[i]].push_back(i);
  std::sort(orbits.begin(), orbits.end());

  BaerDecomposition dec;
  dec.suborder = s;
  std::vector<int> hits(n);
  for (auto& pts : orbits) {
    std::fill(hits.begin(), hits.end(), 0);
    for (int i : pts)
      for (int j : pl.lines_through(i)) ++hits[j];
    Subplane sp;
    sp.points = std::move(pts);
    for (int j = 0; j < n; ++j)
      if (hits[j] == s + 1) sp.lines.push_back(j);
    if (!verify_subplane(pl, sp.points, sp.lines, s))
      throw std::logic_error("Singer orbit failed the subplane check");
    dec.subplanes.push_back(std::move(sp));
  }
  return dec;
}

bool verify_subplane(const Plane& pl, std::span<const int> pts, std::span<const int> lns, int m) {
  const auto expected = static_cast<std::size_t>(m) * m + m + 1;
  if (m < 1 || pts.size() != expected || lns.size() != expected) return false;
  const int n = pl.size();
  std::vector<char> in_pts(n, 0), in_lns(n, 0);
  for (int i : pts) {
    if (i < 0 || i >= n || in_pts[i]) return false;
    in_pts[i] = 1;
  }
  for (int j : lns) {
    if (j < 0 || j >= n || in_lns[j]) return false;
    in_lns[j] = 1;
  }
  for (int j : lns) {
    int c = 0;
    for (int i : pl.points_on(j)) c += in_pts[i];
    if (c != m + 1) return false;
  }
  for (int i : pts) {
    int c = 0;
    for (int j : pl.lines_through(i)) c += in_lns[j];
    if (c != m + 1) return false;
  }
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      if (!in_lns[pl.join(pts[a], pts[b])]) return false;
  return true;
}

}  // namespace pgpart
