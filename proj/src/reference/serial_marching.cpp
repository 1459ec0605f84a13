#include "zeroset/detail/marching_cells.hpp"
#include "zeroset/errors.hpp"
#include "zeroset/exact_sum.hpp"
#include "zeroset/marching.hpp"

namespace zeroset::reference {
namespace {

// Value of p at the half-step lattice point `half` of an N-cell grid.
double sample(const Polynomial& p, const Box& box, std::size_t n,
              std::span<const std::size_t> half) {
  std::vector<Rational> x(half.size());
  for (std::size_t a = 0; a < half.size(); ++a)
    x[a] = box.lower(a + 1) + box.side(a + 1) * Rational(Integer(static_cast<unsigned long>(half[a]))) /
                                  Rational(Integer(static_cast<unsigned long>(2 * n)));
  return evaluate(p, x).get_d();
}

void check(const Polynomial& p, const Box& box, std::size_t dim, std::size_t n) {
  if (p.is_trivial()) throw TrivialPolynomialError("marching reference");
  if (p.dimension() != dim || box.dimension() != dim) throw DomainError("dimension mismatch");
  if (n < 2) throw DomainError("resolution must be >= 2");
}

}  // namespace

MeasureEstimate marching_squares_length_serial(const Polynomial& p, const Box& box,
                                               std::size_t resolution) {
  check(p, box, 2, resolution);
  const std::size_t n = resolution;
  const double hx = Rational(box.side(1) / Rational(Integer(static_cast<unsigned long>(n)))).get_d();
  const double hy = Rational(box.side(2) / Rational(Integer(static_cast<unsigned long>(n)))).get_d();
  ExactSum total;
  std::size_t crossed = 0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      auto at = [&](std::size_t di, std::size_t dj) {
        const std::size_t idx[2] = {2 * (i + di), 2 * (j + dj)};
        return sample(p, box, n, idx);
      };
      const std::array<double, 4> v{at(0, 0), at(1, 0), at(1, 1), at(0, 1)};
      const auto cell = detail::square_cell(v, hx, hy, [&] {
        const std::size_t c[2] = {2 * i + 1, 2 * j + 1};
        return sample(p, box, n, c) >= 0.0;
      });
      if (cell.segments == 0) continue;
      ++crossed;
      for (int s = 0; s < cell.segments; ++s) total.add(cell.lengths[static_cast<std::size_t>(s)]);
    }
  }
  return {total.value(), MeasureMethod::MarchingSquares, n, crossed};
}

MeasureEstimate marching_cubes_area_serial(const Polynomial& p, const Box& box,
                                           std::size_t resolution) {
  check(p, box, 3, resolution);
  const std::size_t n = resolution;
  std::array<double, 3> h{};
  for (std::size_t a = 0; a < 3; ++a)
    h[a] = Rational(box.side(a + 1) / Rational(Integer(static_cast<unsigned long>(n)))).get_d();
  ExactSum total;
  std::size_t crossed = 0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::array<std::size_t, 3> cell_idx{i, j, k};
        std::array<double, 8> v;
        for (std::size_t c = 0; c < 8; ++c) {
          const std::size_t idx[3] = {2 * (i + (c & 1)), 2 * (j + ((c >> 1) & 1)),
                                      2 * (k + ((c >> 2) & 1))};
          v[c] = sample(p, box, n, idx);
        }
        auto face_center = [&](int axis, int side) {
          std::size_t idx[3];
          for (std::size_t a = 0; a < 3; ++a)
            idx[a] = static_cast<int>(a) == axis ? 2 * (cell_idx[a] + static_cast<std::size_t>(side))
                                                 : 2 * cell_idx[a] + 1;
          return sample(p, box, n, idx) >= 0.0;
        };
        const auto cell = detail::cube_cell(v, h, face_center, nullptr);
        if (!cell.crossed) continue;
        ++crossed;
        for (std::size_t t = 0; t < cell.triangles; ++t) total.add(cell.areas[t]);
      }
    }
  }
  return {total.value(), MeasureMethod::MarchingCubes, n, crossed};
}

}  // namespace zeroset::reference
