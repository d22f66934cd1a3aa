#pragma once

namespace hlf {

// Uniform grid on [x_min, x_min + K h]: primary nodes x_j = x_min + j h,
// dual nodes offset by h/2.
struct Grid1d {
  double x_min = 0.0;
  double h = 1.0;
  int K = 0;

  static Grid1d over(double x_min, double x_max, int K);

  double primary(int j) const { return x_min + j * h; }
  double dual(int j) const { return x_min + (j + 0.5) * h; }
  double length() const { return K * h; }
  int wrap(int j) const {
    int r = j % K;
    return r < 0 ? r + K : r;
  }
};

// Square tensor grid with a common spacing h in both directions.
struct Grid2d {
  double x_min = 0.0, y_min = 0.0;
  double h = 1.0;
  int K = 0;

  static Grid2d over(double x_min, double x_max, double y_min, double y_max, int K);

  double primary_x(int i) const { return x_min + i * h; }
  double primary_y(int j) const { return y_min + j * h; }
  double dual_x(int i) const { return x_min + (i + 0.5) * h; }
  double dual_y(int j) const { return y_min + (j + 0.5) * h; }
  int wrap(int j) const {
    int r = j % K;
    return r < 0 ? r + K : r;
  }
};

}  // namespace hlf
