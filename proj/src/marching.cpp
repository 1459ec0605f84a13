#include "zeroset/marching.hpp"

#include <charconv>
#include <cstdint>
#include <ostream>

#include <omp.h>

#include "zeroset/detail/marching_cells.hpp"
#include "zeroset/errors.hpp"
#include "zeroset/exact_sum.hpp"
#include "zeroset/lattice.hpp"
#include "zeroset/sturm.hpp"

namespace zeroset {
namespace {

void check_inputs(const Polynomial& p, const Box& box, std::size_t dim, std::size_t resolution,
                  const char* what) {
  if (p.is_trivial()) throw TrivialPolynomialError(what);
  if (p.dimension() != dim || box.dimension() != dim)
    throw DomainError(std::string(what) + " needs dimension " + std::to_string(dim));
  if (resolution < 2) throw DomainError(std::string(what) + " needs resolution >= 2");
}

int resolve_workers(const ExecutionConfig& exec) {
  return exec.workers > 0 ? exec.workers : omp_get_max_threads();
}

void append_shortest(std::string& out, double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, ptr);
}

}  // namespace

std::string_view to_string(MeasureMethod m) {
  switch (m) {
    case MeasureMethod::ExactCount: return "exact_count";
    case MeasureMethod::MarchingSquares: return "marching_squares";
    case MeasureMethod::MarchingCubes: return "marching_cubes";
  }
  return "unknown";
}

void write_mesh_csv(const Mesh& mesh, std::ostream& out) {
  if (mesh.dimension == 2) out << "x0,y0,x1,y1\n";
  else out << "x0,y0,z0,x1,y1,z1,x2,y2,z2\n";
  const std::size_t per = mesh.values_per_primitive();
  std::string line;
  for (std::size_t p = 0; p < mesh.primitive_count(); ++p) {
    line.clear();
    for (std::size_t i = 0; i < per; ++i) {
      if (i) line += ',';
      append_shortest(line, mesh.coordinates[p * per + i]);
    }
    line += '\n';
    out << line;
  }
}

MeasureEstimate measure_d1(const Polynomial& p, const Box& interval) {
  if (p.is_trivial()) throw TrivialPolynomialError("measure_d1");
  if (p.dimension() != 1 || interval.dimension() != 1)
    throw DomainError("measure_d1 needs dimension 1");
  const RootCount rc =
      count_real_roots(restrict_to_line(p, 1, {}), interval.lower(1), interval.upper(1));
  MeasureEstimate est;
  est.value = static_cast<double>(rc.count());
  est.method = MeasureMethod::ExactCount;
  est.resolution = 1;
  est.cells_with_sign_change = rc.count();
  return est;
}

MeasureEstimate marching_squares_length(const Polynomial& p, const Box& box, std::size_t resolution,
                                        const ExecutionConfig& exec, Mesh* mesh) {
  check_inputs(p, box, 2, resolution, "marching_squares_length");
  const std::size_t n = resolution;
  const std::size_t stride = n + 1;
  const LatticeEvaluator eval(p, box, n);
  const int workers = resolve_workers(exec);

  std::vector<double> vertex(stride * stride);
#pragma omp parallel for schedule(static) num_threads(workers)
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(stride); ++j) {
    for (std::size_t i = 0; i < stride; ++i) {
      const std::size_t idx[2] = {2 * i, 2 * static_cast<std::size_t>(j)};
      vertex[static_cast<std::size_t>(j) * stride + i] = eval.value(idx);
    }
  }

  const double hx = Rational(box.side(1) / Rational(Integer(static_cast<unsigned long>(n)))).get_d();
  const double hy = Rational(box.side(2) / Rational(Integer(static_cast<unsigned long>(n)))).get_d();
  std::vector<std::vector<double>> rows(mesh ? n : 0);

  ExactSum total;
  std::size_t crossed = 0;
#pragma omp parallel num_threads(workers)
  {
    ExactSum local;
    std::size_t local_crossed = 0;
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t jj = 0; jj < static_cast<std::int64_t>(n); ++jj) {
      const auto j = static_cast<std::size_t>(jj);
      for (std::size_t i = 0; i < n; ++i) {
        const std::array<double, 4> v{vertex[j * stride + i], vertex[j * stride + i + 1],
                                      vertex[(j + 1) * stride + i + 1],
                                      vertex[(j + 1) * stride + i]};
        const auto cell = detail::square_cell(v, hx, hy, [&] {
          const std::size_t c[2] = {2 * i + 1, 2 * j + 1};
          return eval.value(c) >= 0.0;
        });
        if (cell.segments == 0) continue;
        ++local_crossed;
        for (int s = 0; s < cell.segments; ++s) local.add(cell.lengths[static_cast<std::size_t>(s)]);
        if (mesh) {
          const double ox = eval.coordinate(0, 2 * i).get_d();
          const double oy = eval.coordinate(1, 2 * j).get_d();
          for (int s = 0; s < 4 * cell.segments; ++s)
            rows[j].push_back(cell.points[static_cast<std::size_t>(s)] + (s % 2 == 0 ? ox : oy));
        }
      }
    }
#pragma omp critical(zeroset_marching_squares_merge)
    {
      total.merge(local);
      crossed += local_crossed;
    }
  }

  if (mesh) {
    mesh->dimension = 2;
    mesh->coordinates.clear();
    for (const auto& r : rows) mesh->coordinates.insert(mesh->coordinates.end(), r.begin(), r.end());
  }
  return {total.value(), MeasureMethod::MarchingSquares, n, crossed};
}

MeasureEstimate marching_cubes_area(const Polynomial& p, const Box& box, std::size_t resolution,
                                    const ExecutionConfig& exec, Mesh* mesh) {
  check_inputs(p, box, 3, resolution, "marching_cubes_area");
  const std::size_t n = resolution;
  const std::size_t s1 = n + 1;
  const std::size_t s2 = s1 * s1;
  const LatticeEvaluator eval(p, box, n);
  const int workers = resolve_workers(exec);

  std::vector<double> vertex(s2 * s1);
#pragma omp parallel for schedule(static) num_threads(workers)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(s2); ++r) {
    const auto k = static_cast<std::size_t>(r) / s1;
    const auto j = static_cast<std::size_t>(r) % s1;
    for (std::size_t i = 0; i < s1; ++i) {
      const std::size_t idx[3] = {2 * i, 2 * j, 2 * k};
      vertex[k * s2 + j * s1 + i] = eval.value(idx);
    }
  }

  std::array<double, 3> h{};
  for (std::size_t a = 0; a < 3; ++a)
    h[a] = Rational(box.side(a + 1) / Rational(Integer(static_cast<unsigned long>(n)))).get_d();
  std::vector<std::vector<double>> rows(mesh ? n * n : 0);

  ExactSum total;
  std::size_t crossed = 0;
#pragma omp parallel num_threads(workers)
  {
    ExactSum local;
    std::size_t local_crossed = 0;
    std::vector<double> tris;
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(n * n); ++r) {
      const auto k = static_cast<std::size_t>(r) / n;
      const auto j = static_cast<std::size_t>(r) % n;
      for (std::size_t i = 0; i < n; ++i) {
        std::array<double, 8> v;
        for (std::size_t c = 0; c < 8; ++c)
          v[c] = vertex[(k + ((c >> 2) & 1)) * s2 + (j + ((c >> 1) & 1)) * s1 + i + (c & 1)];
        const std::array<std::size_t, 3> cell_idx{i, j, k};
        auto face_center = [&](int axis, int side) {
          std::size_t idx[3];
          for (std::size_t a = 0; a < 3; ++a)
            idx[a] = static_cast<int>(a) == axis ? 2 * (cell_idx[a] + static_cast<std::size_t>(side))
                                                 : 2 * cell_idx[a] + 1;
          return eval.value(idx) >= 0.0;
        };
        tris.clear();
        const auto cell = detail::cube_cell(v, h, face_center, mesh ? &tris : nullptr);
        if (!cell.crossed) continue;
        ++local_crossed;
        for (std::size_t t = 0; t < cell.triangles; ++t) local.add(cell.areas[t]);
        if (mesh) {
          const std::array<double, 3> origin{eval.coordinate(0, 2 * i).get_d(),
                                             eval.coordinate(1, 2 * j).get_d(),
                                             eval.coordinate(2, 2 * k).get_d()};
          for (std::size_t c = 0; c < tris.size(); ++c)
            rows[static_cast<std::size_t>(r)].push_back(tris[c] + origin[c % 3]);
        }
      }
    }
#pragma omp critical(zeroset_marching_cubes_merge)
    {
      total.merge(local);
      crossed += local_crossed;
    }
  }

  if (mesh) {
    mesh->dimension = 3;
    mesh->coordinates.clear();
    for (const auto& r : rows) mesh->coordinates.insert(mesh->coordinates.end(), r.begin(), r.end());
  }
  return {total.value(), MeasureMethod::MarchingCubes, n, crossed};
}

MeasureEstimate direct_measure(const Polynomial& p, const Box& box, std::size_t resolution,
                               const ExecutionConfig& exec, Mesh* mesh) {
  switch (box.dimension()) {
    case 1: return measure_d1(p, box);
    case 2: return marching_squares_length(p, box, resolution, exec, mesh);
    case 3: return marching_cubes_area(p, box, resolution, exec, mesh);
    default:
      throw DomainError("direct measure is available for dimensions 1 to 3 only");
  }
}

}  // namespace zeroset
