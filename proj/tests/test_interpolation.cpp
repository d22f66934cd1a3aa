#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "hlf/config.hpp"
#include "hlf/interpolation.hpp"
#include "hlf/jet.hpp"

using namespace hlf;

namespace {
const double pi = std::acos(-1.0);

// fixed full-degree test polynomial coefficients
std::vector<double> test_coeffs(int degree) {
  std::vector<double> c(degree + 1);
  double s = 1.0;
  for (int q = 0; q <= degree; ++q) {
    c[q] = s * (1.0 + 0.37 * q) / (1.0 + q * q);
    s = -s;
  }
  return c;
}
}  // namespace

TEST_CASE("order zero operator by hand") {
  // value-only interpolation: mean and difference of the endpoint values
  InterpOperator op = build_interp_operator(0);
  REQUIRE(op.n == 2);
  CHECK(op.M[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(op.M[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(op.M[2] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(op.M[3] == doctest::Approx(1.0).epsilon(1e-15));

  Jet ext = reconstruct_cell_1d(op, Jet{3.0}, Jet{5.0});
  CHECK(ext[0] == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(ext[1] == doctest::Approx(2.0).epsilon(1e-15));

  CHECK_THROWS_AS(build_interp_operator(9), ConfigError);
  CHECK_THROWS_AS(build_interp_operator(-1), ConfigError);
}

TEST_CASE("degree 2m+1 polynomials are reproduced exactly") {
  const double h = 0.25, xl = 0.2, xr = 0.45, xc = 0.325;
  for (int m = 0; m <= 8; ++m) {
    CAPTURE(m);
    InterpOperator op = build_interp_operator(m);
    CHECK(op.condition > 1.0);
    CHECK(std::isfinite(op.condition));

    std::vector<double> c = test_coeffs(2 * m + 1);
    Jet left = poly_jet(c, xl, h, m + 1);
    Jet right = poly_jet(c, xr, h, m + 1);
    Jet ext = reconstruct_cell_1d(op, left, right);
    Jet ref = poly_jet(c, xc, h, 2 * m + 2);
    double scale = 0.0;
    for (double v : ref) scale = std::max(scale, std::abs(v));
    // roundoff grows with the constraint system's conditioning (1.8e7 at m=8)
    for (int s = 0; s < op.n; ++s) {
      CAPTURE(s);
      CHECK(std::abs(ext[s] - ref[s]) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("cubic through two first-order jets") {
  // u(x) = x^3 on the cell [0, 1]: values 0,1 and slopes 0,3 pin the cubic
  InterpOperator op = build_interp_operator(1);
  Jet left = poly_jet({0.0, 0.0, 0.0, 1.0}, 0.0, 1.0, 2);
  Jet right = poly_jet({0.0, 0.0, 0.0, 1.0}, 1.0, 1.0, 2);
  Jet ext = reconstruct_cell_1d(op, left, right);
  Jet ref = poly_jet({0.0, 0.0, 0.0, 1.0}, 0.5, 1.0, 4);
  for (int s = 0; s < 4; ++s) CHECK(ext[s] == doctest::Approx(ref[s]).epsilon(1e-13));
}

TEST_CASE("tensor reconstruction reproduces x^2 y") {
  InterpOperator op = build_interp_operator(1);
  const double h = 0.5;
  const double x0 = 0.1, y0 = -0.3;  // low corner; center at +h/2 each way
  auto corner = [&](double x, double y) {
    // jets of u = x^2 y: d/dx = 2xy, d/dy = x^2, d2/dxdy = 2x
    TensorJet t(2, 2);
    t.at(0, 0) = x * x * y;
    t.at(1, 0) = 2.0 * x * y * h;
    t.at(0, 1) = x * x * h;
    t.at(1, 1) = 2.0 * x * h * h;
    return t;
  };
  TensorJet ext = reconstruct_cell_2d(op, corner(x0, y0), corner(x0 + h, y0),
                                      corner(x0, y0 + h), corner(x0 + h, y0 + h));
  const double xc = x0 + h / 2.0, yc = y0 + h / 2.0;
  for (double xi : {-0.41, 0.0, 0.37})
    for (double eta : {-0.5, 0.12, 0.5}) {
      const double x = xc + xi * h, y = yc + eta * h;
      CHECK(tensor_eval(ext, xi, eta) == doctest::Approx(x * x * y).epsilon(1e-13));
    }
}

TEST_CASE("tensor reconstruction of separable data is separable") {
  const int m = 2;
  const double h = 0.2;
  InterpOperator op = build_interp_operator(m);
  Jet fxl = sin_jet(1.0, 2.3, 0.4, 0.0, h, m + 1);
  Jet fxr = sin_jet(1.0, 2.3, 0.4, h, h, m + 1);
  Jet fyl = sin_jet(0.7, 1.9, -0.2, 1.0, h, m + 1);
  Jet fyr = sin_jet(0.7, 1.9, -0.2, 1.0 + h, h, m + 1);

  TensorJet ext = reconstruct_cell_2d(op, tensor_outer(fxl, fyl), tensor_outer(fxr, fyl),
                                      tensor_outer(fxl, fyr), tensor_outer(fxr, fyr));
  Jet ex = reconstruct_cell_1d(op, fxl, fxr);
  Jet ey = reconstruct_cell_1d(op, fyl, fyr);
  TensorJet ref = tensor_outer(ex, ey);
  double scale = 0.0;
  for (double v : ref.a) scale = std::max(scale, std::abs(v));
  for (int i = 0; i < ext.nx; ++i)
    for (int j = 0; j < ext.ny; ++j)
      CHECK(std::abs(ext.at(i, j) - ref.at(i, j)) <= 1e-13 * scale);
}

TEST_CASE("piecewise evaluation of a periodic field") {
  const int m = 2, K = 16;
  Grid1d g = Grid1d::over(0.0, 1.0, K);
  InterpOperator op = build_interp_operator(m);

  std::vector<Jet> prim(K), dual(K);
  for (int j = 0; j < K; ++j) {
    prim[j] = sin_jet(1.0, 2.0 * pi, 0.0, g.primary(j), g.h, m + 1);
    dual[j] = sin_jet(1.0, 2.0 * pi, 0.0, g.dual(j), g.h, m + 1);
  }

  SUBCASE("interior accuracy") {
    // h = 1/16 and order 2m+2 = 6 puts the reconstruction error near 1e-7
    for (double x : {0.03, 0.21, 0.50, 0.77, 0.999}) {
      CHECK(std::abs(evaluate_piecewise(op, prim, g, false, x) - std::sin(2.0 * pi * x)) < 1e-6);
      CHECK(std::abs(evaluate_piecewise(op, dual, g, true, x) - std::sin(2.0 * pi * x)) < 1e-6);
    }
  }

  SUBCASE("continuity at a shared node") {
    const double xn = g.primary(5);
    double below = evaluate_piecewise(op, prim, g, false, xn - 1e-13);
    double above = evaluate_piecewise(op, prim, g, false, xn + 1e-13);
    CHECK(std::abs(below - above) < 1e-10);
  }

  SUBCASE("periodic wrap uses the closing cell") {
    // x just below the right edge lives in the dual-grid cell centered at
    // the domain seam
    double v = evaluate_piecewise(op, dual, g, true, 1.0 - 1e-4);
    CHECK(std::abs(v - std::sin(2.0 * pi * (1.0 - 1e-4))) < 1e-8);
  }

  CHECK_THROWS_AS(evaluate_piecewise(op, std::vector<Jet>(K - 1), g, false, 0.5),
                  std::invalid_argument);
}

TEST_CASE("reconstruction converges at order 2m+2, single jets at order m+1") {
  for (int m = 0; m <= 3; ++m) {
    CAPTURE(m);
    InterpOperator op = build_interp_operator(m);
    std::vector<double> hs, e_cell, e_node;
    for (int K : {8, 16, 32, 64}) {
      const double h = 1.0 / K;
      // cell [0.3, 0.3 + h]: compare the reconstructed center value with sin
      Jet l = sin_jet(1.0, 2.0 * pi, 0.0, 0.3, h, m + 1);
      Jet r = sin_jet(1.0, 2.0 * pi, 0.0, 0.3 + h, h, m + 1);
      Jet ext = reconstruct_cell_1d(op, l, r);
      const double xq = 0.3 + 0.29 * h;  // generic point inside the cell
      e_cell.push_back(std::abs(jet_eval(ext, -0.5 + 0.29) - std::sin(2.0 * pi * xq)));
      // one-sided Taylor evaluation half a cell away
      e_node.push_back(std::abs(jet_eval(l, 0.5) - std::sin(2.0 * pi * (0.3 + 0.5 * h))));
      hs.push_back(h);
    }
    auto slope = [](const std::vector<double>& hs, const std::vector<double>& es) {
      // least squares fit of log e against log h
      const int n = static_cast<int>(hs.size());
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (int i = 0; i < n; ++i) {
        const double x = std::log(hs[i]), y = std::log(es[i]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
      }
      return (n * sxy - sx * sy) / (n * sxx - sx * sx);
    };
    CHECK(std::abs(slope(hs, e_cell) - (2.0 * m + 2.0)) < 0.3);
    CHECK(std::abs(slope(hs, e_node) - (m + 1.0)) < 0.3);
  }
}
