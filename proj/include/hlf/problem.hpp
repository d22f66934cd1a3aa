#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hlf/config.hpp"
#include "hlf/jet.hpp"

namespace hlf {

// 1D model problem
//   dp/dt = ap(x) dv/dx + z(x,t),   dv/dt = av(x) dp/dx
// or, with n_fields = 1, scalar advection du/dt = ap(x) du/dx + z.
// Coefficient and exact-solution providers hand out scaled jets of any
// requested length so every order m can be driven from one definition.
struct Problem1d {
  std::string name;
  double x_min = 0.0, x_max = 1.0;
  double c_max = 1.0;
  int n_fields = 2;
  std::vector<std::string> field_names{"p", "v"};

  std::function<Jet(double x, double h, int n)> ap, av;
  // exact jet of field f at (x, t); f indexes field_names
  std::function<Jet(int f, double x, double t, double h, int n)> exact;
  // scaled space jet of the r-th time derivative of the forcing at (x, t);
  // null when the problem is unforced
  std::function<Jet(int r, double x, double t, double h, int n)> forcing;

  double length() const { return x_max - x_min; }
  double exact_value(int f, double x, double t) const { return exact(f, x, t, 1.0, 1)[0]; }
};

// 2D systems with unit speed on a square:
//   acoustics   dp/dt = -(dv/dx + du/dy), dv/dt = -dp/dx, du/dt = -dp/dy
//   maxwell_tm  dEz/dt = dHy/dx - dHx/dy, dHx/dt = -dEz/dy, dHy/dt = dEz/dx
// Field 0 lives on the primary grid, fields 1 and 2 on the dual grid.
struct Problem2d {
  enum class System { acoustics, maxwell_tm };

  std::string name;
  System system = System::acoustics;
  Boundary boundary = Boundary::periodic;
  double x_min = -1.0, x_max = 1.0, y_min = -1.0, y_max = 1.0;
  double c_max = 1.0;
  std::vector<std::string> field_names{"p", "v", "u"};
  bool has_exact = true;

  std::function<TensorJet(int f, double x, double y, double t, double h, int n)> exact;

  double exact_value(int f, double x, double y, double t) const {
    return exact(f, x, y, t, 1.0, 1).at(0, 0);
  }
};

// built-in problem definitions used by the experiment catalog and tests
Problem1d standing_wave_problem();
Problem1d variable_speed_problem();
Problem1d advection_problem();
Problem1d pv_problem();
// random periodic trig data for the symmetric system p_t = v_x, v_t = p_x
// (the conservation setup); exact evolution via characteristics
Problem1d random_wave_problem(unsigned seed);

Problem2d acoustics_mode_problem(Boundary boundary);
Problem2d maxwell_cavity_problem();
Problem2d gaussian_pulse_problem();

}  // namespace hlf
