#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hlf/config.hpp"
#include "hlf/jet.hpp"

using namespace hlf;

namespace {
const double pi = std::acos(-1.0);
}

TEST_CASE("jet product against pointwise values") {
  // two fixed cubics; the length-4 product jet must reproduce the true
  // product's Taylor polynomial truncated to degree 3
  Jet a = {0.7, -1.3, 0.25, 2.0};
  Jet b = {-0.4, 0.9, 1.7, -0.6};
  Jet c = jet_multiply(a, b);
  REQUIRE(c.size() == 4);

  // truncated coefficients by hand: c_k = sum_{i+j=k} a_i b_j
  CHECK(c[0] == doctest::Approx(a[0] * b[0]).epsilon(1e-15));
  CHECK(c[1] == doctest::Approx(a[0] * b[1] + a[1] * b[0]).epsilon(1e-15));
  CHECK(c[2] == doctest::Approx(a[0] * b[2] + a[1] * b[1] + a[2] * b[0]).epsilon(1e-15));
  CHECK(c[3] ==
        doctest::Approx(a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0]).epsilon(1e-15));

  // commutativity and truncation-consistent associativity
  Jet ba = jet_multiply(b, a);
  Jet d = {1.1, 0.0, -0.5, 0.3};
  Jet left = jet_multiply(jet_multiply(a, b), d);
  Jet right = jet_multiply(a, jet_multiply(b, d));
  for (int i = 0; i < 4; ++i) {
    CHECK(c[i] == doctest::Approx(ba[i]).epsilon(1e-15));
    CHECK(left[i] == doctest::Approx(right[i]).epsilon(1e-14));
  }

  CHECK_THROWS_AS(jet_multiply(a, Jet{1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("jet differentiation") {
  const double h = 0.1;
  Jet s = sin_jet(1.0, 1.0, 0.0, 0.3, h, 8);

  SUBCASE("order zero is the identity") {
    Jet d0 = jet_differentiate(s, 0, h);
    for (size_t i = 0; i < s.size(); ++i) CHECK(d0[i] == s[i]);
  }

  SUBCASE("second derivative of sin is -sin") {
    Jet d2 = jet_differentiate(s, 2, h);
    Jet ref = sin_jet(-1.0, 1.0, 0.0, 0.3, h, 8);
    for (int i = 0; i < 6; ++i) CHECK(d2[i] == doctest::Approx(ref[i]).epsilon(1e-13));
    // exhausted top entries are zero padded
    CHECK(d2[6] == 0.0);
    CHECK(d2[7] == 0.0);
  }

  SUBCASE("constants differentiate to zero") {
    Jet c = constant_jet(4.2, 5);
    Jet d = jet_differentiate(c, 1, h);
    for (double v : d) CHECK(v == 0.0);
  }

  CHECK_THROWS_AS(jet_differentiate(s, -1, h), std::invalid_argument);
}

TEST_CASE("raw derivative round trip") {
  std::vector<double> raw = {2.0, -3.0, 7.0, 0.5, -11.0};
  const double h = 0.37;
  Jet a = jet_from_raw(raw, h);
  std::vector<double> back = jet_to_raw(a, h);
  for (size_t i = 0; i < raw.size(); ++i)
    CHECK(back[i] == doctest::Approx(raw[i]).epsilon(1e-14));

  // scaling convention: entry i is h^i/i! times the raw derivative
  CHECK(a[2] == doctest::Approx(raw[2] * h * h / 2.0).epsilon(1e-15));
  CHECK(a[4] == doctest::Approx(raw[4] * std::pow(h, 4) / 24.0).epsilon(1e-15));
}

TEST_CASE("sin jet values") {
  // p(x) = sin(2 pi x) sampled at x = 0.25 with h = 0.1 and m = 1: the node
  // value is 1 and the scaled slope h p'(0.25) vanishes
  Jet p = sin_jet(1.0, 2.0 * pi, 0.0, 0.25, 0.1, 2);
  CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(p[1]) < 1e-15);

  // evaluation at an offset point matches the function up to truncation
  Jet q = sin_jet(0.8, 2.0, 0.4, 0.3, 0.05, 12);
  const double x = 0.3 + 0.02;
  CHECK(jet_eval(q, 0.02 / 0.05) ==
        doctest::Approx(0.8 * std::sin(2.0 * x + 0.4)).epsilon(1e-14));
}

TEST_CASE("polynomial jet") {
  // p(x) = 1 + 2x + 3x^2 at x0 = 0.5, h = 0.25
  Jet p = poly_jet({1.0, 2.0, 3.0}, 0.5, 0.25, 4);
  CHECK(p[0] == doctest::Approx(2.75).epsilon(1e-15));
  CHECK(p[1] == doctest::Approx(5.0 * 0.25).epsilon(1e-15));
  CHECK(p[2] == doctest::Approx(6.0 * 0.25 * 0.25 / 2.0).epsilon(1e-15));
  CHECK(p[3] == 0.0);
}

TEST_CASE("gaussian jet") {
  const double center = 0.3, delta = 0.002, h = 0.03125;
  const int n = 6;
  Jet g = gaussian_jet(center, delta, 0.35, h, n);

  // node value
  CHECK(jet_eval(g, 0.0) ==
        doctest::Approx(std::exp(-0.05 * 0.05 / delta)).epsilon(1e-14));

  // the defining identity g' = -2 (x - center)/delta g, checked on the jets
  Jet dg = jet_differentiate(g, 1, h);
  Jet lin = poly_jet({2.0 * center / delta, -2.0 / delta}, 0.35, h, n);
  Jet rhs = jet_multiply(lin, g);
  for (int i = 0; i + 1 < n; ++i)
    CHECK(dg[i] == doctest::Approx(rhs[i]).epsilon(1e-12));
}

TEST_CASE("tensor jets") {
  const double h = 0.2;
  const int n = 6;
  Jet sx = sin_jet(1.0, 3.0, 0.2, 0.1, h, n);
  Jet sy = sin_jet(1.0, 2.0, -0.4, 0.7, h, n);
  TensorJet t = tensor_outer(sx, sy);

  SUBCASE("evaluation matches the separable product") {
    const double xi = 0.31, eta = -0.45;
    const double ref = std::sin(3.0 * (0.1 + xi * h) + 0.2) *
                       std::sin(2.0 * (0.7 + eta * h) - 0.4);
    CHECK(tensor_eval(t, xi, eta) == doctest::Approx(ref).epsilon(1e-6));
  }

  SUBCASE("x derivative shifts the x factor's phase") {
    TensorJet dt_ = tensor_dx(t, h);
    TensorJet ref = tensor_outer(sin_jet(3.0, 3.0, 0.2 + pi / 2.0, 0.1, h, n), sy);
    for (int i = 0; i + 1 < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(dt_.at(i, j) == doctest::Approx(ref.at(i, j)).epsilon(1e-12));
    for (int j = 0; j < n; ++j) CHECK(dt_.at(n - 1, j) == 0.0);
  }

  SUBCASE("y derivative shifts the y factor's phase") {
    TensorJet dt_ = tensor_dy(t, h);
    TensorJet ref = tensor_outer(sx, sin_jet(2.0, 2.0, -0.4 + pi / 2.0, 0.7, h, n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j + 1 < n; ++j)
        CHECK(dt_.at(i, j) == doctest::Approx(ref.at(i, j)).epsilon(1e-12));
  }

  SUBCASE("product of separable jets is the outer product of 1D products") {
    Jet ax = {0.5, 1.0, -0.25, 0.0, 0.125, 0.0};
    Jet ay = {1.0, -0.5, 0.0, 0.3, 0.0, 0.0};
    TensorJet u = tensor_outer(ax, ay);
    TensorJet prod = tensor_multiply(t, u);
    TensorJet ref = tensor_outer(jet_multiply(sx, ax), jet_multiply(sy, ay));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(prod.at(i, j) == doctest::Approx(ref.at(i, j)).epsilon(1e-12));
  }
}

TEST_CASE("scheme configuration guards") {
  SchemeConfig cfg;
  cfg.m = 3;
  cfg.cfl = 0.9;
  CHECK_NOTHROW(cfg.validate());

  cfg.m = 9;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.m = -1;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.m = 8;
  CHECK_NOTHROW(cfg.validate());

  cfg.cfl = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.cfl = -0.5;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);

  CHECK(step_count(1.0, 0.3) == 4);
  CHECK(step_count(1.2, 0.3) == 4);
  CHECK_THROWS_AS(step_count(-1.0, 0.3), ConfigError);
}
