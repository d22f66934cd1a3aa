#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace hlf {

enum class Variant { hermite_leapfrog, modified, dual_hermite };
enum class Boundary { periodic, reflective };

const char* variant_name(Variant v);
bool parse_variant(const std::string& s, Variant& out);

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a run blows up; carries the step at which it was detected.
struct InstabilityError : std::runtime_error {
  int step;
  InstabilityError(int step_, const std::string& what)
      : std::runtime_error(what), step(step_) {}
};

// Scheme parameters. The nominal step is dt = 2 C (h/2) / c_max: the
// stability-relevant spacing is the distance h/2 between a node and its
// nearest staggered neighbor. The 2D tensor stencil tightens this by
// a further 1/sqrt(2).
struct SchemeConfig {
  static constexpr int m_cap = 8;

  int m = 2;
  double cfl = 0.9;
  Variant variant = Variant::hermite_leapfrog;
  Boundary boundary = Boundary::periodic;

  void validate() const;

  double dt_nominal_1d(double h, double c_max) const { return cfl * h / c_max; }
  double dt_nominal_2d(double h, double c_max) const {
    return cfl * h / std::sqrt(2.0) / c_max;
  }
};

// number of steps of size exactly T/n with n = ceil(T / dt_nominal)
int step_count(double T, double dt_nominal);

}  // namespace hlf
