#pragma once

// Per-cell marching kernels shared by the OpenMP and serial drivers.
// Everything is computed in cell-local coordinates so that a cell's output
// depends only on its corner samples and spacing, never on its position.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace zeroset::detail {

inline bool positive(double v) { return v >= 0.0; }

/// Fraction along an edge from its lower endpoint, given a sign change.
inline double crossing(double lo, double hi) { return lo / (lo - hi); }

/// Order-insensitive sums, so that permuting coordinate axes permutes the
/// inputs without changing a single bit of the result.
inline double sorted_sum3(double a, double b, double c) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return (a + b) + c;
}

struct SquareCellOutput {
  int segments = 0;
  std::array<double, 8> points{};
  std::array<double, 2> lengths{};
};

/// Segment lengths are reported individually so callers can feed them to an
/// order-independent accumulator.
/// Corners (0,0), (1,0), (1,1), (0,1). Edges: 0 bottom, 1 right, 2 top,
/// 3 left. Zero counts as positive; saddles ask `center_positive()`.
template <class CenterPositive>
SquareCellOutput square_cell(const std::array<double, 4>& v, double hx, double hy,
                             CenterPositive&& center_positive) {
  SquareCellOutput out;
  const bool s0 = positive(v[0]), s1 = positive(v[1]), s2 = positive(v[2]), s3 = positive(v[3]);
  if (s0 == s1 && s1 == s2 && s2 == s3) return out;

  std::array<std::array<double, 2>, 4> pt{};
  std::array<bool, 4> cut{s0 != s1, s1 != s2, s3 != s2, s0 != s3};
  if (cut[0]) pt[0] = {hx * crossing(v[0], v[1]), 0.0};
  if (cut[1]) pt[1] = {hx, hy * crossing(v[1], v[2])};
  if (cut[2]) pt[2] = {hx * crossing(v[3], v[2]), hy};
  if (cut[3]) pt[3] = {0.0, hy * crossing(v[0], v[3])};

  std::array<std::array<int, 2>, 2> pairs{};
  if (cut[0] && cut[1] && cut[2] && cut[3]) {
    out.segments = 2;
    if (center_positive() == s0) pairs = {{{0, 1}, {2, 3}}};  // corners 0 and 2 joined
    else pairs = {{{3, 0}, {1, 2}}};
  } else {
    out.segments = 1;
    int first = -1, second = -1;
    for (int e = 0; e < 4; ++e) {
      if (!cut[static_cast<std::size_t>(e)]) continue;
      (first < 0 ? first : second) = e;
    }
    pairs[0] = {first, second};
  }
  for (int s = 0; s < out.segments; ++s) {
    const auto& a = pt[static_cast<std::size_t>(pairs[static_cast<std::size_t>(s)][0])];
    const auto& b = pt[static_cast<std::size_t>(pairs[static_cast<std::size_t>(s)][1])];
    const double dx = std::fabs(a[0] - b[0]);
    const double dy = std::fabs(a[1] - b[1]);
    out.lengths[static_cast<std::size_t>(s)] = std::sqrt(dx * dx + dy * dy);
    out.points[static_cast<std::size_t>(4 * s + 0)] = a[0];
    out.points[static_cast<std::size_t>(4 * s + 1)] = a[1];
    out.points[static_cast<std::size_t>(4 * s + 2)] = b[0];
    out.points[static_cast<std::size_t>(4 * s + 3)] = b[1];
  }
  return out;
}

struct CubeCellOutput {
  std::size_t triangles = 0;
  // A cell holds at most 12 crossing points, hence at most 12 fan triangles.
  std::array<double, 12> areas{};
  bool crossed = false;
};

/// Edge id for the cube edge parallel to `axis` whose remaining two
/// coordinates (in increasing axis order) are (lo_bit, hi_bit).
constexpr int cube_edge(int axis, int lo_bit, int hi_bit) { return axis * 4 + lo_bit + 2 * hi_bit; }

/// Corner i sits at offsets (i & 1, (i >> 1) & 1, (i >> 2) & 1).
///
/// Every face pairs up its crossing edges (saddle faces via
/// `face_center_positive(axis, side)`); each crossing edge belongs to exactly
/// two faces, so the pairings close into loops. Each loop is triangulated as
/// a fan around its vertex centroid. Triangles in local coordinates are
/// appended to `triangles` when non-null.
template <class FaceCenterPositive>
CubeCellOutput cube_cell(const std::array<double, 8>& v, const std::array<double, 3>& h,
                         FaceCenterPositive&& face_center_positive,
                         std::vector<double>* triangles) {
  CubeCellOutput out;
  const bool s0 = positive(v[0]);
  bool mixed = false;
  for (int i = 1; i < 8 && !mixed; ++i) mixed = positive(v[static_cast<std::size_t>(i)]) != s0;
  if (!mixed) return out;
  out.crossed = true;

  // Crossing point of every cut edge.
  std::array<std::array<double, 3>, 12> point{};
  std::array<bool, 12> cut{};
  for (int axis = 0; axis < 3; ++axis) {
    const int o1 = axis == 0 ? 1 : 0;
    const int o2 = axis == 2 ? 1 : 2;
    for (int b1 = 0; b1 < 2; ++b1) {
      for (int b2 = 0; b2 < 2; ++b2) {
        const int base = (b1 << o1) | (b2 << o2);
        const double lo = v[static_cast<std::size_t>(base)];
        const double hi = v[static_cast<std::size_t>(base | (1 << axis))];
        if (positive(lo) == positive(hi)) continue;
        const auto id = static_cast<std::size_t>(cube_edge(axis, b1, b2));
        cut[id] = true;
        point[id][static_cast<std::size_t>(axis)] = h[static_cast<std::size_t>(axis)] * crossing(lo, hi);
        point[id][static_cast<std::size_t>(o1)] = b1 ? h[static_cast<std::size_t>(o1)] : 0.0;
        point[id][static_cast<std::size_t>(o2)] = b2 ? h[static_cast<std::size_t>(o2)] : 0.0;
      }
    }
  }

  std::array<std::array<int, 2>, 12> link{};
  std::array<int, 12> degree{};
  auto connect = [&](int a, int b) {
    link[static_cast<std::size_t>(a)][static_cast<std::size_t>(degree[static_cast<std::size_t>(a)]++)] = b;
    link[static_cast<std::size_t>(b)][static_cast<std::size_t>(degree[static_cast<std::size_t>(b)]++)] = a;
  };

  for (int axis = 0; axis < 3; ++axis) {
    const int b = axis == 0 ? 1 : 0;  // face axes b < c
    const int c = axis == 2 ? 1 : 2;
    for (int side = 0; side < 2; ++side) {
      auto corner = [&](int bb, int cc) {
        return v[static_cast<std::size_t>((side << axis) | (bb << b) | (cc << c))];
      };
      // Edge along b has other axes {axis, c}; along c has {axis, b}.
      auto edge_b = [&](int cc) {
        return axis < c ? cube_edge(b, side, cc) : cube_edge(b, cc, side);
      };
      auto edge_c = [&](int bb) {
        return axis < b ? cube_edge(c, side, bb) : cube_edge(c, bb, side);
      };
      const std::array<double, 4> fv{corner(0, 0), corner(1, 0), corner(1, 1), corner(0, 1)};
      const std::array<int, 4> fe{edge_b(0), edge_c(1), edge_b(1), edge_c(0)};
      std::array<bool, 4> fs{};
      for (std::size_t i = 0; i < 4; ++i) fs[i] = positive(fv[i]);
      const std::array<bool, 4> fcut{fs[0] != fs[1], fs[1] != fs[2], fs[3] != fs[2], fs[0] != fs[3]};
      const int ncut = fcut[0] + fcut[1] + fcut[2] + fcut[3];
      if (ncut == 0) continue;
      if (ncut == 4) {
        if (face_center_positive(axis, side) == fs[0]) {
          connect(fe[0], fe[1]);
          connect(fe[2], fe[3]);
        } else {
          connect(fe[3], fe[0]);
          connect(fe[1], fe[2]);
        }
      } else {
        int first = -1, second = -1;
        for (std::size_t i = 0; i < 4; ++i) {
          if (!fcut[i]) continue;
          (first < 0 ? first : second) = fe[i];
        }
        connect(first, second);
      }
    }
  }

  std::array<bool, 12> visited{};
  std::vector<int> loop;
  loop.reserve(12);
  for (int start = 0; start < 12; ++start) {
    if (!cut[static_cast<std::size_t>(start)] || visited[static_cast<std::size_t>(start)]) continue;
    loop.clear();
    int prev = -1, cur = start;
    while (!visited[static_cast<std::size_t>(cur)]) {
      visited[static_cast<std::size_t>(cur)] = true;
      loop.push_back(cur);
      const auto& l = link[static_cast<std::size_t>(cur)];
      const int next = l[0] != prev ? l[0] : l[1];
      prev = cur;
      cur = next;
    }
    const std::size_t m = loop.size();
    std::array<double, 3> centroid{};
    std::array<double, 12> scratch{};
    for (std::size_t ax = 0; ax < 3; ++ax) {
      for (std::size_t i = 0; i < m; ++i) scratch[i] = point[static_cast<std::size_t>(loop[i])][ax];
      std::sort(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(m));
      double s = 0.0;
      for (std::size_t i = 0; i < m; ++i) s += scratch[i];
      centroid[ax] = s / static_cast<double>(m);
    }
    for (std::size_t i = 0; i < m; ++i) {
      const auto& p = point[static_cast<std::size_t>(loop[i])];
      const auto& q = point[static_cast<std::size_t>(loop[(i + 1) % m])];
      const double ux = p[0] - centroid[0], uy = p[1] - centroid[1], uz = p[2] - centroid[2];
      const double wx = q[0] - centroid[0], wy = q[1] - centroid[1], wz = q[2] - centroid[2];
      const double cx = uy * wz - uz * wy;
      const double cy = uz * wx - ux * wz;
      const double cz = ux * wy - uy * wx;
      out.areas[out.triangles++] = 0.5 * std::sqrt(sorted_sum3(cx * cx, cy * cy, cz * cz));
      if (triangles) {
        triangles->insert(triangles->end(), centroid.begin(), centroid.end());
        triangles->insert(triangles->end(), p.begin(), p.end());
        triangles->insert(triangles->end(), q.begin(), q.end());
      }
    }
  }
  return out;
}

}  // namespace zeroset::detail
