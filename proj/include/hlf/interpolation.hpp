#pragma once

#include <vector>

#include "hlf/grid.hpp"
#include "hlf/jet.hpp"

namespace hlf {

// Two-point Hermite reconstruction for a cell scaled to xi in [-1/2, 1/2]:
// M maps the stacked endpoint jets (m+1 scaled derivatives at xi = -1/2,
// then m+1 at xi = +1/2) to the 2m+2 coefficients of the unique polynomial
// matching all of them.
struct InterpOperator {
  int m = 0;
  int n = 2;               // 2m + 2
  std::vector<double> M;   // n x n, row-major
  double condition = 0.0;  // 1-norm condition of the constraint system
};

InterpOperator build_interp_operator(int m);

// out[r] = sum_s M[r][s] stacked[s]; stacked and out hold op.n entries
void interp_apply(const InterpOperator& op, const double* stacked, double* out);

// extended (length 2m+2) jet at the cell center from the two endpoint jets
// (each of length m+1, scaled with the same h as the cell width)
Jet reconstruct_cell_1d(const InterpOperator& op, const Jet& left, const Jet& right);

// tensor version: corner jets are (m+1) x (m+1), ordered x-side then y-side
// (c00 = low-x low-y, c10 = high-x low-y, c01 = low-x high-y, c11 = both high)
TensorJet reconstruct_cell_2d(const InterpOperator& op, const TensorJet& c00,
                              const TensorJet& c10, const TensorJet& c01,
                              const TensorJet& c11);

// point evaluation of the global piecewise reconstruction of a periodic
// nodal field; jets_on_dual selects which staggered family holds the data
double evaluate_piecewise(const InterpOperator& op, const std::vector<Jet>& jets,
                          const Grid1d& grid, bool jets_on_dual, double x);

// Extended tensor jets on the cells of a staggered grid, with per-axis
// integration bounds (cells against a wall are clipped to the domain).
struct PiecewiseTensor {
  int nx = 0, ny = 0;
  double h = 1.0;
  std::vector<double> cx, cy;                  // cell centers per axis
  std::vector<double> lo_x, hi_x, lo_y, hi_y;  // absolute bounds per axis
  std::vector<TensorJet> ext;                  // row-major, ix * ny + iy

  const TensorJet& cell(int ix, int iy) const {
    return ext[static_cast<size_t>(ix) * ny + iy];
  }
};

}  // namespace hlf
