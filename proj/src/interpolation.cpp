#include "hlf/interpolation.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "hlf/config.hpp"

namespace hlf {

namespace {

double binom(int s, int l) {
  double b = 1.0;
  for (int q = 0; q < l; ++q) b = b * (s - q) / (q + 1);
  return b;
}

}  // namespace

InterpOperator build_interp_operator(int m) {
  if (m < 0 || m > SchemeConfig::m_cap)
    throw ConfigError("interpolation order m must be in [0, " +
                      std::to_string(SchemeConfig::m_cap) + "]");
  const int n = 2 * m + 2;

  // constraint rows: derivative l of the candidate polynomial at xi = -1/2
  // (first block) and +1/2 (second block), in the scaled-jet normalization
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int half = 0; half < 2; ++half) {
    const double xi = half == 0 ? -0.5 : 0.5;
    for (int l = 0; l <= m; ++l) {
      const int row = half * (m + 1) + l;
      for (int s = l; s < n; ++s) A(row, s) = binom(s, l) * std::pow(xi, s - l);
    }
  }

  Eigen::MatrixXd Minv = A.partialPivLu().inverse();

  InterpOperator op;
  op.m = m;
  op.n = n;
  op.M.resize(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) op.M[static_cast<size_t>(r) * n + s] = Minv(r, s);

  const double norm_a = A.cwiseAbs().colwise().sum().maxCoeff();
  const double norm_m = Minv.cwiseAbs().colwise().sum().maxCoeff();
  op.condition = norm_a * norm_m;
  return op;
}

void interp_apply(const InterpOperator& op, const double* stacked, double* out) {
  const int n = op.n;
  for (int r = 0; r < n; ++r) {
    const double* row = op.M.data() + static_cast<size_t>(r) * n;
    double acc = 0.0;
    for (int s = 0; s < n; ++s) acc += row[s] * stacked[s];
    out[r] = acc;
  }
}

Jet reconstruct_cell_1d(const InterpOperator& op, const Jet& left, const Jet& right) {
  const int n1 = op.m + 1;
  if (static_cast<int>(left.size()) != n1 || static_cast<int>(right.size()) != n1)
    throw std::invalid_argument("reconstruct_cell_1d: endpoint jets must hold m+1 entries");
  std::vector<double> stacked(op.n);
  for (int l = 0; l < n1; ++l) {
    stacked[l] = left[l];
    stacked[n1 + l] = right[l];
  }
  Jet out(op.n);
  interp_apply(op, stacked.data(), out.data());
  return out;
}

TensorJet reconstruct_cell_2d(const InterpOperator& op, const TensorJet& c00,
                              const TensorJet& c10, const TensorJet& c01,
                              const TensorJet& c11) {
  const int n1 = op.m + 1;
  const int n = op.n;
  for (const TensorJet* c : {&c00, &c10, &c01, &c11})
    if (c->nx != n1 || c->ny != n1)
      throw std::invalid_argument("reconstruct_cell_2d: corner jets must be (m+1)^2");

  // x sweep for each y side and y order, then y sweep for each extended x order
  std::vector<double> ex(static_cast<size_t>(2) * n * n1);  // [side][a][l]
  std::vector<double> stacked(n), out(n);
  for (int side = 0; side < 2; ++side) {
    const TensorJet& lo = side == 0 ? c00 : c01;
    const TensorJet& hi = side == 0 ? c10 : c11;
    for (int l = 0; l < n1; ++l) {
      for (int i = 0; i < n1; ++i) {
        stacked[i] = lo.at(i, l);
        stacked[n1 + i] = hi.at(i, l);
      }
      interp_apply(op, stacked.data(), out.data());
      for (int a = 0; a < n; ++a)
        ex[(static_cast<size_t>(side) * n + a) * n1 + l] = out[a];
    }
  }

  TensorJet res(n, n);
  for (int a = 0; a < n; ++a) {
    for (int l = 0; l < n1; ++l) {
      stacked[l] = ex[(static_cast<size_t>(0) * n + a) * n1 + l];
      stacked[n1 + l] = ex[(static_cast<size_t>(1) * n + a) * n1 + l];
    }
    interp_apply(op, stacked.data(), out.data());
    for (int c = 0; c < n; ++c) res.at(a, c) = out[c];
  }
  return res;
}

double evaluate_piecewise(const InterpOperator& op, const std::vector<Jet>& jets,
                          const Grid1d& grid, bool jets_on_dual, double x) {
  if (static_cast<int>(jets.size()) != grid.K)
    throw std::invalid_argument("evaluate_piecewise: need one jet per node");
  const double L = grid.length();
  double u = x - grid.x_min;
  u -= std::floor(u / L) * L;  // into [0, L)

  int jl, jr;
  double center;
  if (jets_on_dual) {
    // cells centered at primary nodes, spanning [dual(j-1), dual(j)]
    int j = static_cast<int>(std::floor(u / grid.h + 0.5));
    center = grid.x_min + j * grid.h;
    jl = grid.wrap(j - 1);
    jr = grid.wrap(j);
  } else {
    // cells centered at dual nodes, spanning [primary(j), primary(j+1)]
    int j = static_cast<int>(std::floor(u / grid.h));
    if (j >= grid.K) j = grid.K - 1;
    center = grid.dual(j);
    jl = j;
    jr = grid.wrap(j + 1);
  }
  Jet ext = reconstruct_cell_1d(op, jets[jl], jets[jr]);
  return jet_eval(ext, (grid.x_min + u - center) / grid.h);
}

}  // namespace hlf
