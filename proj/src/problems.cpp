#include "hlf/problem.hpp"

#include <cmath>
#include <random>

namespace hlf {

namespace {
const double pi = std::acos(-1.0);

Jet scaled(Jet j, double s) {
  for (double& v : j) v *= s;
  return j;
}

TensorJet scaled(TensorJet t, double s) {
  for (double& v : t.a) v *= s;
  return t;
}
}  // namespace

Problem1d standing_wave_problem() {
  Problem1d p;
  p.name = "standing-wave-1d";
  p.x_min = -1.0;
  p.x_max = 1.0;
  p.c_max = 1.0;
  p.ap = [](double, double, int n) { return constant_jet(-1.0, n); };
  p.av = [](double, double, int n) { return constant_jet(-1.0, n); };
  p.exact = [](int f, double x, double t, double h, int n) {
    // p = cos(2 pi t) sin(2 pi x), v = -sin(2 pi t) cos(2 pi x)
    if (f == 0) return scaled(sin_jet(1.0, 2.0 * pi, 0.0, x, h, n), std::cos(2.0 * pi * t));
    return scaled(sin_jet(1.0, 2.0 * pi, pi / 2.0, x, h, n), -std::sin(2.0 * pi * t));
  };
  return p;
}

Problem1d variable_speed_problem() {
  Problem1d p;
  p.name = "variable-speed-1d";
  p.x_min = 0.0;
  p.x_max = 2.0 * pi;
  p.c_max = std::sqrt(1.5);
  // dp/dt = -c2(x) dv/dx + z, c2 = 1 + sin(x)/2
  p.ap = [](double x, double h, int n) {
    Jet j = sin_jet(0.5, 1.0, 0.0, x, h, n);
    j[0] += 1.0;
    return scaled(j, -1.0);
  };
  p.av = [](double, double, int n) { return constant_jet(-1.0, n); };
  p.exact = [](int, double x, double t, double h, int n) {
    return sin_jet(1.0, 1.0, -t, x, h, n);  // p = v = sin(x - t)
  };
  // z = sin(x) cos(x - t) / 2 = [sin(2x - t) + sin(t)] / 4
  p.forcing = [](int r, double x, double t, double h, int n) {
    Jet j = sin_jet(0.25, 2.0, -t - r * pi / 2.0, x, h, n);
    j[0] += 0.25 * std::sin(t + r * pi / 2.0);
    return j;
  };
  return p;
}

Problem1d advection_problem() {
  Problem1d p;
  p.name = "advection-modified-1d";
  p.x_min = -1.0;
  p.x_max = 1.0;
  p.c_max = 1.0;
  p.n_fields = 1;
  p.field_names = {"u"};
  p.ap = [](double, double, int n) { return constant_jet(-1.0, n); };
  p.exact = [](int, double x, double t, double h, int n) {
    return sin_jet(1.0, 3.0 * pi, -3.0 * pi * t, x, h, n);  // u = sin(3 pi (x - t))
  };
  return p;
}

Problem1d pv_problem() {
  Problem1d p;
  p.name = "pv-modified-1d";
  p.x_min = -1.0;
  p.x_max = 1.0;
  p.c_max = 1.0;
  p.ap = [](double, double, int n) { return constant_jet(-1.0, n); };
  p.av = [](double, double, int n) { return constant_jet(-1.0, n); };
  p.exact = [](int f, double x, double t, double h, int n) {
    // p = cos(3 pi t) sin(3 pi x), v = -sin(3 pi t) cos(3 pi x)
    if (f == 0) return scaled(sin_jet(1.0, 3.0 * pi, 0.0, x, h, n), std::cos(3.0 * pi * t));
    return scaled(sin_jet(1.0, 3.0 * pi, pi / 2.0, x, h, n), -std::sin(3.0 * pi * t));
  };
  return p;
}

Problem1d random_wave_problem(unsigned seed) {
  // p_t = v_x, v_t = p_x on [-1,1]: characteristics w+- = p +- v translate
  // left/right, so the trig data below has a closed-form evolution
  const int modes = 4;
  std::mt19937 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> pa(modes), pb(modes), va(modes), vb(modes);
  for (int k = 0; k < modes; ++k) {
    const double fade = 1.0 / ((k + 1.0) * (k + 1.0));
    pa[k] = normal(gen) * fade;
    pb[k] = normal(gen) * fade;
  }
  for (int k = 0; k < modes; ++k) {
    const double fade = 1.0 / ((k + 1.0) * (k + 1.0));
    va[k] = normal(gen) * fade;
    vb[k] = normal(gen) * fade;
  }

  Problem1d p;
  p.name = "random-wave-1d";
  p.x_min = -1.0;
  p.x_max = 1.0;
  p.c_max = 1.0;
  p.ap = [](double, double, int n) { return constant_jet(1.0, n); };
  p.av = [](double, double, int n) { return constant_jet(1.0, n); };
  p.exact = [=](int f, double x, double t, double h, int n) {
    Jet acc(n, 0.0);
    for (int k = 0; k < modes; ++k) {
      const double w = (k + 1.0) * pi;
      // w+(x,t) = w+(x + t, 0) carries p0 + v0; w- carries p0 - v0
      const double sp = pa[k] + va[k], cp = pb[k] + vb[k];
      const double sm = pa[k] - va[k], cm = pb[k] - vb[k];
      Jet plus = sin_jet(sp, w, w * t, x, h, n);
      Jet tmp = sin_jet(cp, w, w * t + pi / 2.0, x, h, n);
      for (int i = 0; i < n; ++i) plus[i] += tmp[i];
      Jet minus = sin_jet(sm, w, -w * t, x, h, n);
      tmp = sin_jet(cm, w, -w * t + pi / 2.0, x, h, n);
      for (int i = 0; i < n; ++i) minus[i] += tmp[i];
      const double sgn = f == 0 ? 1.0 : -1.0;
      for (int i = 0; i < n; ++i) acc[i] += 0.5 * (plus[i] + sgn * minus[i]);
    }
    return acc;
  };
  return p;
}

Problem2d acoustics_mode_problem(Boundary boundary) {
  Problem2d p;
  p.name = "acoustics-2d";
  p.system = Problem2d::System::acoustics;
  p.boundary = boundary;
  const double wx = pi, wy = pi;
  const double wt = std::sqrt(wx * wx + wy * wy);
  p.exact = [=](int f, double x, double y, double t, double h, int n) {
    if (f == 0)
      return scaled(tensor_outer(sin_jet(1.0, wx, 0.0, x, h, n), sin_jet(1.0, wy, 0.0, y, h, n)),
                    std::cos(wt * t));
    if (f == 1)
      return scaled(tensor_outer(sin_jet(-wx / wt, wx, pi / 2.0, x, h, n),
                                 sin_jet(1.0, wy, 0.0, y, h, n)),
                    std::sin(wt * t));
    return scaled(tensor_outer(sin_jet(-wy / wt, wx, 0.0, x, h, n),
                               sin_jet(1.0, wy, pi / 2.0, y, h, n)),
                  std::sin(wt * t));
  };
  return p;
}

Problem2d maxwell_cavity_problem() {
  Problem2d p;
  p.name = "maxwell-tm-2d";
  p.system = Problem2d::System::maxwell_tm;
  p.boundary = Boundary::reflective;
  p.field_names = {"Ez", "Hx", "Hy"};
  const double wx = 8.0 * pi, wy = 8.0 * pi;
  const double wt = std::sqrt(wx * wx + wy * wy);
  p.exact = [=](int f, double x, double y, double t, double h, int n) {
    if (f == 0)
      return scaled(tensor_outer(sin_jet(1.0, wx, 0.0, x, h, n), sin_jet(1.0, wy, 0.0, y, h, n)),
                    std::cos(wt * t));
    if (f == 1)
      return scaled(tensor_outer(sin_jet(-wy / wt, wx, 0.0, x, h, n),
                                 sin_jet(1.0, wy, pi / 2.0, y, h, n)),
                    std::sin(wt * t));
    return scaled(tensor_outer(sin_jet(wx / wt, wx, pi / 2.0, x, h, n),
                               sin_jet(1.0, wy, 0.0, y, h, n)),
                  std::sin(wt * t));
  };
  return p;
}

Problem2d gaussian_pulse_problem() {
  Problem2d p;
  p.name = "gaussian-reflect-2d";
  p.system = Problem2d::System::acoustics;
  p.boundary = Boundary::reflective;
  p.has_exact = false;
  const double cx = 0.3, cy = 0.3, delta = 0.002;
  p.exact = [=](int f, double x, double y, double t, double h, int n) {
    (void)t;
    if (f == 0)
      return tensor_outer(gaussian_jet(cx, delta, x, h, n), gaussian_jet(cy, delta, y, h, n));
    return TensorJet(n, n);  // velocities start at rest
  };
  return p;
}

}  // namespace hlf
