#include <algorithm>

#include "zeroset/crofton.hpp"
#include "zeroset/errors.hpp"

namespace zeroset::reference {

AxisEstimate crofton_axis_integral_serial(const Polynomial& p, const Box& box, std::size_t k,
                                          const IntegrationScheme& scheme) {
  if (p.is_trivial()) throw TrivialPolynomialError("crofton_axis_integral_serial");
  validate(scheme);
  const std::uint64_t lines = lines_for_scheme(box, scheme);
  std::uint64_t count_sum = 0;
  std::size_t max_count = 0;
  std::size_t degenerate = 0;
  for (std::uint64_t i = 0; i < lines; ++i) {
    std::vector<Rational> base;
    if (p.dimension() > 1) {
      if (const auto* g = std::get_if<GridScheme>(&scheme))
        base = grid_base_point(box, k, g->points_per_axis, i);
      else
        base = monte_carlo_base_point(box, k, std::get<MonteCarloScheme>(scheme).seed, i);
    }
    const RootCount rc = line_count(p, box, k, base);
    if (rc.is_identically_zero()) {
      ++degenerate;
      continue;
    }
    count_sum += rc.count();
    max_count = std::max(max_count, rc.count());
  }
  return detail::finish_axis(p, box, k, scheme, lines, count_sum, max_count, degenerate);
}

CroftonResult crofton_upper_estimate_serial(const Polynomial& p, const Box& box,
                                            const IntegrationScheme& scheme) {
  if (p.is_trivial()) throw TrivialPolynomialError("crofton_upper_estimate_serial");
  std::vector<AxisEstimate> axes;
  for (std::size_t k = 1; k <= p.dimension(); ++k)
    axes.push_back(crofton_axis_integral_serial(p, box, k, scheme));
  return detail::combine_axes(p, box, std::move(axes));
}

}  // namespace zeroset::reference
