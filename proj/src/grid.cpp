#include "hlf/grid.hpp"

#include <cmath>

#include "hlf/config.hpp"

namespace hlf {

Grid1d Grid1d::over(double x_min, double x_max, int K) {
  if (K < 2) throw ConfigError("grid needs K >= 2");
  if (!(x_max > x_min)) throw ConfigError("grid needs x_max > x_min");
  Grid1d g;
  g.x_min = x_min;
  g.h = (x_max - x_min) / K;
  g.K = K;
  return g;
}

Grid2d Grid2d::over(double x_min, double x_max, double y_min, double y_max, int K) {
  if (K < 2) throw ConfigError("grid needs K >= 2");
  if (!(x_max > x_min) || !(y_max > y_min))
    throw ConfigError("grid needs a nonempty box");
  const double hx = (x_max - x_min) / K;
  const double hy = (y_max - y_min) / K;
  if (std::abs(hx - hy) > 1e-12 * std::abs(hx))
    throw ConfigError("grid must be square (equal spacing in x and y)");
  Grid2d g;
  g.x_min = x_min;
  g.y_min = y_min;
  g.h = hx;
  g.K = K;
  return g;
}

}  // namespace hlf
