#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "zeroset/box.hpp"
#include "zeroset/execution.hpp"
#include "zeroset/polynomial.hpp"

namespace zeroset {

enum class MeasureMethod { ExactCount, MarchingSquares, MarchingCubes };

std::string_view to_string(MeasureMethod m);

/// Direct estimate of the (d-1)-dimensional measure of the zero set in a box.
struct MeasureEstimate {
  double value = 0.0;
  MeasureMethod method = MeasureMethod::ExactCount;
  std::size_t resolution = 1;
  std::size_t cells_with_sign_change = 0;
};

/// Level-set primitives in global coordinates: segments (d = 2, 4 numbers
/// each) or triangles (d = 3, 9 numbers each), in cell order.
struct Mesh {
  std::size_t dimension = 0;
  std::vector<double> coordinates;

  std::size_t values_per_primitive() const noexcept { return dimension == 2 ? 4 : 9; }
  std::size_t primitive_count() const noexcept {
    return dimension == 0 ? 0 : coordinates.size() / values_per_primitive();
  }
};

/// One primitive per row with a header line.
void write_mesh_csv(const Mesh& mesh, std::ostream& out);

/// d = 1: the exact number of distinct roots in [a, b].
MeasureEstimate measure_d1(const Polynomial& p, const Box& interval);

/// d = 2: length of the marching-squares polyline of {p = 0} on an N x N grid.
MeasureEstimate marching_squares_length(const Polynomial& p, const Box& box, std::size_t resolution,
                                        const ExecutionConfig& exec = {}, Mesh* mesh = nullptr);

/// d = 3: area of the marching-cubes surface of {p = 0} on an N^3 grid.
MeasureEstimate marching_cubes_area(const Polynomial& p, const Box& box, std::size_t resolution,
                                    const ExecutionConfig& exec = {}, Mesh* mesh = nullptr);

/// Dispatches on the box dimension (1, 2 or 3). DomainError for d >= 4.
MeasureEstimate direct_measure(const Polynomial& p, const Box& box, std::size_t resolution,
                               const ExecutionConfig& exec = {}, Mesh* mesh = nullptr);


namespace reference {
/// Sequential versions that evaluate every corner with exact rational
/// arithmetic instead of the lattice evaluator.
MeasureEstimate marching_squares_length_serial(const Polynomial& p, const Box& box,
                                               std::size_t resolution);
MeasureEstimate marching_cubes_area_serial(const Polynomial& p, const Box& box,
                                           std::size_t resolution);
}  // namespace reference

}  // namespace zeroset
