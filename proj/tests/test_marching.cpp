#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "test_support.hpp"
#include "zeroset/crofton.hpp"
#include "zeroset/errors.hpp"
#include "zeroset/lattice.hpp"
#include "zeroset/marching.hpp"

using namespace zeroset;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Box unit(std::size_t d) { return Box::cube(d, q(0), q(1)); }

std::uint64_t bits(double x) { return std::bit_cast<std::uint64_t>(x); }

double measure(const Polynomial& p, const Box& box, std::size_t n, int workers = 0) {
  return direct_measure(p, box, n, {workers}).value;
}

}  // namespace

TEST(MeasureD1, Examples) {
  const auto a = measure_d1(parse_polynomial("x1^2 - 1/4", 1), unit(1));
  EXPECT_EQ(a.value, 1.0);
  EXPECT_EQ(a.method, MeasureMethod::ExactCount);
  EXPECT_EQ(measure_d1(parse_polynomial("x1^2 + 1", 1), unit(1)).value, 0.0);
  EXPECT_THROW(measure_d1(Polynomial(1), unit(1)), TrivialPolynomialError);
}

TEST(MeasureD1, PlantedTenthsIncludingEndpoint) {
  Polynomial p = Polynomial::constant(1, q(1));
  for (long i = 1; i <= 10; ++i)
    p = p * (Polynomial::variable(1, 1) - Polynomial::constant(1, q(i, 10)));
  for (long i = 1; i <= 10; ++i) EXPECT_EQ(evaluate(p, std::vector<Rational>{q(i, 10)}), 0);
  EXPECT_EQ(measure_d1(p, unit(1)).value, 10.0);
}

TEST(MarchingSquares, VerticalLineIsExact) {
  const auto m = marching_squares_length(parse_polynomial("x1 - 1/2", 2), unit(2), 64);
  EXPECT_NEAR(m.value, 1.0, 1e-12);
  EXPECT_EQ(m.method, MeasureMethod::MarchingSquares);
  EXPECT_EQ(m.resolution, 64u);
  EXPECT_EQ(m.cells_with_sign_change, 64u);
}

TEST(MarchingSquares, DiagonalIsExact) {
  const auto m = marching_squares_length(parse_polynomial("x1 - x2 + 1/7", 2), unit(2), 50);
  EXPECT_NEAR(m.value, std::numbers::sqrt2 * (6.0 / 7.0), 1e-12);
}

TEST(MarchingSquares, Circle) {
  const double v = measure(parse_polynomial("x1^2 + x2^2 - 1/4", 2), Box::cube(2, q(-1), q(1)), 1024);
  EXPECT_LE(std::fabs(v - std::numbers::pi) / std::numbers::pi, 0.005);
  EXPECT_LE(v, std::numbers::pi);
}

TEST(MarchingSquares, HyperbolaAgainstQuadrature) {
  const double v = measure(parse_polynomial("x1*x2 - 1/100", 2), unit(2), 1024);
  const double l = oracle::hyperbola_length(0.01);
  EXPECT_LE(std::fabs(v - l) / l, 0.01) << v << " vs " << l;
}

TEST(MarchingSquares, Errors) {
  EXPECT_THROW(marching_squares_length(Polynomial(2), unit(2), 8), TrivialPolynomialError);
  EXPECT_THROW(marching_squares_length(parse_polynomial("x1", 2), unit(2), 1), DomainError);
  EXPECT_THROW(marching_squares_length(parse_polynomial("x1", 3), unit(3), 8), DomainError);
  EXPECT_THROW(direct_measure(parse_polynomial("x1", 4), unit(4), 8), DomainError);
}

TEST(MarchingCubes, PlaneIsExact) {
  const auto m = marching_cubes_area(parse_polynomial("x1 - 1/2", 3), unit(3), 32);
  EXPECT_NEAR(m.value, 1.0, 1e-12);
  EXPECT_EQ(m.method, MeasureMethod::MarchingCubes);
  EXPECT_EQ(m.cells_with_sign_change, 32u * 32u);
}

TEST(MarchingCubes, Sphere) {
  const double v = measure(parse_polynomial("x1^2 + x2^2 + x3^2 - 1/4", 3), Box::cube(3, q(-1), q(1)), 128);
  EXPECT_LE(std::fabs(v - std::numbers::pi) / std::numbers::pi, 0.02);
}

TEST(MarchingCubes, HexagonalSection) {
  const double v = measure(parse_polynomial("x1 + x2 + x3 - 3/2", 3), unit(3), 64);
  const double hexagon = 3 * std::sqrt(3.0) / 4;
  EXPECT_LE(std::fabs(v - hexagon) / hexagon, 0.01);
  // planar surfaces are reproduced exactly by linear interpolation
  EXPECT_NEAR(v, hexagon, 1e-9);
}

TEST(MarchingCubes, HyperboloidAgainstQuadrature) {
  const double v = measure(parse_polynomial("x1*x2*x3 - 1/8", 3), unit(3), 96);
  const double a = oracle::hyperboloid_area(0.125);
  EXPECT_LE(std::fabs(v - a) / a, 0.01) << v << " vs " << a;
}

TEST(Lattice, MatchesExactEvaluation) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const Polynomial p = zeroset::testing::random_polynomial(rng, d, 4, 5);
    std::vector<Box::Interval> iv;
    for (std::size_t k = 0; k < d; ++k) {
      const Rational a = oracle::random_rational(rng, 2, 3);
      iv.emplace_back(a, a + q(1 + static_cast<long>(rng() % 3), 1 + static_cast<long>(rng() % 4)));
    }
    const Box box(iv);
    const std::size_t n = 5 + rng() % 7;
    const LatticeEvaluator lat(p, box, n);
    for (int s = 0; s < 40; ++s) {
      std::vector<std::size_t> j(d);
      std::vector<Rational> x(d);
      for (std::size_t k = 0; k < d; ++k) {
        j[k] = rng() % (2 * n + 1);
        x[k] = box.lower(k + 1) + box.side(k + 1) * Rational(static_cast<long>(j[k])) /
                                      Rational(static_cast<long>(2 * n));
        EXPECT_EQ(lat.coordinate(k, j[k]), x[k]);
      }
      const Rational exact = evaluate(p, x);
      EXPECT_EQ(bits(lat.value(j)), bits(exact.get_d()));
      EXPECT_EQ(lat.sign(j), sgn(exact));
    }
  }
}

TEST(Symmetry, AxisSwapIsBitIdentical) {
  const Polynomial circle = parse_polynomial("x1^2 + x2^2 - 1/3", 2);
  EXPECT_EQ(bits(measure(circle, unit(2), 97)), bits(measure(circle.swap_variables(1, 2), unit(2), 97)));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const Polynomial p = zeroset::testing::random_polynomial(rng, d, 3, 5);
    const Box box = d == 2 ? Box({{q(0), q(1)}, {q(-1, 2), q(3, 2)}})
                           : Box({{q(0), q(1)}, {q(-1, 2), q(1, 2)}, {q(1), q(3)}});
    const std::size_t n = d == 2 ? 64 : 16;
    for (std::size_t i = 1; i < d; ++i)
      EXPECT_EQ(bits(measure(p, box, n)),
                bits(measure(p.swap_variables(i, i + 1), box.swapped(i, i + 1), n)));
  }
}

TEST(Symmetry, TranslationIsBitIdentical) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const Polynomial p = zeroset::testing::random_polynomial(rng, d, 3, 5);
    std::vector<Rational> c(d), minus_c(d);
    for (std::size_t k = 0; k < d; ++k) {
      c[k] = oracle::random_rational(rng, 3, 8);
      minus_c[k] = -c[k];
    }
    // p(x - c) on the box shifted by c
    const Polynomial moved = p.translate(minus_c);
    const std::size_t n = d == 2 ? 64 : 16;
    EXPECT_EQ(bits(measure(p, unit(d), n)), bits(measure(moved, unit(d).translated(c), n)));
  }
}

TEST(Symmetry, ScalingMultipliesLength) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    const Polynomial p = zeroset::testing::random_polynomial(rng, 2, 3, 5);
    const long s_num = 2 + static_cast<long>(rng() % 5);
    const Rational s = q(s_num, 3);
    // p(x / s), expanded termwise
    Polynomial::TermMap scaled;
    for (const auto& [e, coeff] : p.terms()) {
      Rational f = coeff;
      for (unsigned ex : e)
        for (unsigned i = 0; i < ex; ++i) f /= s;
      scaled.emplace(e, f);
    }
    const Polynomial ps = Polynomial::from_terms(2, std::move(scaled));
    const double base = measure(p, unit(2), 80);
    const double big = measure(ps, Box::cube(2, q(0), s), 80);
    if (base == 0) {
      EXPECT_EQ(big, 0.0);
    } else {
      EXPECT_LE(std::fabs(big - s.get_d() * base) / (s.get_d() * base), 1e-9);
    }
  }
}

TEST(Reference, SerialMatchesParallel) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const Polynomial p = zeroset::testing::random_polynomial(rng, d, 3, 5);
    const std::size_t n = d == 2 ? 64 : 12;
    const auto serial = d == 2 ? reference::marching_squares_length_serial(p, unit(d), n)
                               : reference::marching_cubes_area_serial(p, unit(d), n);
    for (int workers : {1, 4}) {
      const auto par = direct_measure(p, unit(d), n, {workers});
      EXPECT_EQ(bits(par.value), bits(serial.value));
      EXPECT_EQ(par.cells_with_sign_change, serial.cells_with_sign_change);
    }
  }
}

TEST(Mesh, DumpIsPlotReady) {
  Mesh mesh;
  const auto m = marching_squares_length(parse_polynomial("x1 - 1/2", 2), unit(2), 4, {}, &mesh);
  EXPECT_EQ(mesh.dimension, 2u);
  ASSERT_EQ(mesh.primitive_count(), 4u);
  double len = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const double* s = &mesh.coordinates[4 * i];
    EXPECT_EQ(s[0], 0.5);
    EXPECT_EQ(s[2], 0.5);
    len += std::hypot(s[2] - s[0], s[3] - s[1]);
  }
  EXPECT_NEAR(len, m.value, 1e-15);

  std::ostringstream out;
  write_mesh_csv(mesh, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x0,y0,x1,y1");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 3);
    ++rows;
  }
  EXPECT_EQ(rows, 4u);

  Mesh cubes;
  const auto a = marching_cubes_area(parse_polynomial("x1 + x2 + x3 - 3/2", 3), unit(3), 6, {}, &cubes);
  EXPECT_EQ(cubes.dimension, 3u);
  double area = 0;
  for (std::size_t t = 0; t < cubes.primitive_count(); ++t) {
    const double* v = &cubes.coordinates[9 * t];
    const double ux = v[3] - v[0], uy = v[4] - v[1], uz = v[5] - v[2];
    const double wx = v[6] - v[0], wy = v[7] - v[1], wz = v[8] - v[2];
    area += 0.5 * std::sqrt(std::pow(uy * wz - uz * wy, 2) + std::pow(uz * wx - ux * wz, 2) +
                            std::pow(ux * wy - uy * wx, 2));
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(v[3 * i] + v[3 * i + 1] + v[3 * i + 2], 1.5, 1e-12);
  }
  EXPECT_NEAR(area, a.value, 1e-9);
}

TEST(BoundChain, RandomCorpus) {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const Polynomial p = zeroset::testing::random_polynomial(rng, d, d == 2 ? 4 : 3, 6);
    if (p.is_trivial()) continue;
    const Box cube = unit(d);
    const Rational bound = theorem_bound(p, cube);
    const double b = bound.get_d();
    const auto crofton = crofton_upper_estimate(p, cube, GridScheme{d == 2 ? 256u : 32u});
    const double direct = measure(p, cube, d == 2 ? 128 : 24);
    EXPECT_LE(crofton.exact_total, bound);
    EXPECT_LE(direct, b + 1e-6);
    EXPECT_LE(direct, crofton.total + 0.05 * b) << p.to_string();
    ++checked;
  }
  EXPECT_EQ(checked, 40);
}
