#include "hlf/dispersion.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>

#include "hlf/config.hpp"

namespace hlf {

namespace {

template <typename Real>
using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CMat = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
Real binom(int s, int l) {
  Real b = 1;
  for (int q = 0; q < l; ++q) b = b * Real(s - q) / Real(q + 1);
  return b;
}

// reconstruction matrix for the centered cell, in the requested precision
template <typename Real>
Mat<Real> interp_matrix(int m) {
  const int n = 2 * m + 2;
  Mat<Real> A = Mat<Real>::Zero(n, n);
  for (int half = 0; half < 2; ++half) {
    const Real xi = half == 0 ? Real(-0.5) : Real(0.5);
    for (int l = 0; l <= m; ++l) {
      const int row = half * (m + 1) + l;
      for (int s = l; s < n; ++s)
        A(row, s) = binom<Real>(s, l) * std::pow(xi, Real(s - l));
    }
  }
  return A.partialPivLu().inverse();
}

// increment operator: column c is the half-cycle update produced by the
// extended reconstruction of a plane-wave unit jet at the two staggered
// neighbors (phases exp(-+ i k / 2)), h = 1
template <typename Real>
CMat<Real> symbol(int m, Real lambda, Real k) {
  using C = std::complex<Real>;
  const int n1 = m + 1;
  const int n = 2 * m + 2;
  const Mat<Real> M = interp_matrix<Real>(m);
  const C phase_l = std::exp(C(0, -k / 2));
  const C phase_r = std::exp(C(0, k / 2));

  CMat<Real> D = CMat<Real>::Zero(n1, n1);
  Eigen::Matrix<C, Eigen::Dynamic, 1> stacked(n), ext(n);
  for (int col = 0; col < n1; ++col) {
    stacked.setZero();
    stacked(col) = phase_l;
    stacked(n1 + col) = phase_r;
    ext = M.template cast<C>() * stacked;
    for (int s = 0; s < n1; ++s) {
      C acc(0, 0);
      for (int j = 1; j + s < n; j += 2) {
        Real w = 2;
        for (int q = 1; q <= j; ++q) w *= lambda / 2 / Real(q);
        acc += w * binom<Real>(j + s, j) * ext(j + s);
      }
      D(s, col) = acc;
    }
  }
  return D;
}

}  // namespace

std::vector<Cplx> dispersion_symbol(int m, double lambda, double k) {
  if (m < 0 || m > SchemeConfig::m_cap) throw ConfigError("dispersion_symbol: bad m");
  CMat<double> D = symbol<double>(m, lambda, k);
  const int n1 = m + 1;
  std::vector<Cplx> out(static_cast<size_t>(n1) * n1);
  for (int r = 0; r < n1; ++r)
    for (int c = 0; c < n1; ++c) out[static_cast<size_t>(r) * n1 + c] = D(r, c);
  return out;
}

DispersionFit dispersion_order_scan(int m, double lambda) {
  using Real = long double;
  using C = std::complex<Real>;
  const Real pi = std::acos(Real(-1));
  const Real lam = lambda;

  std::vector<Real> kept_k, kept_d;
  for (int j = 2; j <= 16; ++j) {
    const Real k = pi * std::pow(Real(2), -Real(j) / 2);
    CMat<Real> D = symbol<Real>(m, lam, k);
    Eigen::ComplexEigenSolver<CMat<Real>> eig(D, false);
    const C target = C(0, 2) * std::sin(k * lam / 2);
    Real best = -1;
    for (int i = 0; i < D.rows(); ++i) {
      const Real d = std::abs(eig.eigenvalues()(i) - target);
      if (best < 0 || d < best) best = d;
    }
    if (best > Real(1e-16)) {
      kept_k.push_back(k);
      kept_d.push_back(best / std::abs(target));
    }
  }

  DispersionFit fit;
  fit.points_used = static_cast<int>(kept_k.size());
  if (fit.points_used < 3) return fit;  // degenerate; order stays 0

  // slope over the last three kept (finest) points
  Real sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = kept_k.size() - 3; i < kept_k.size(); ++i) {
    const Real x = std::log(kept_k[i]);
    const Real y = std::log(kept_d[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  fit.order = static_cast<double>((3 * sxy - sx * sy) / (3 * sxx - sx * sx));
  return fit;
}

ZeroEigenStructure zero_eigen_structure(int m, double lambda) {
  const int n1 = m + 1;
  CMat<double> Dc = symbol<double>(m, lambda, 0.0);
  Mat<double> D(n1, n1);
  for (int r = 0; r < n1; ++r)
    for (int c = 0; c < n1; ++c) D(r, c) = Dc(r, c).real();

  Eigen::JacobiSVD<Mat<double>> svd(D, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sig = svd.singularValues();
  int nulldim = 0;
  for (int i = 0; i < sig.size(); ++i)
    if (sig(i) < 1e-9 * sig(0)) ++nulldim;
  if (nulldim < 1) throw ConfigError("zero_eigen_structure: no zero eigenvalue at k = 0");

  // a Jordan block above the constant mode exists iff D g = e1 is solvable
  Eigen::VectorXd e1 = Eigen::VectorXd::Zero(n1);
  e1(0) = 1.0;
  Eigen::VectorXd g = svd.solve(e1);
  const double resid = (D * g - e1).norm();
  return resid < 1e-8 ? ZeroEigenStructure::generalized : ZeroEigenStructure::simple;
}

double amplification_scan(int m, double lambda, int nk) {
  const int n1 = m + 1;
  const double pi = std::acos(-1.0);
  double radius = 0.0;
  for (int i = 0; i < nk; ++i) {
    const double k = -pi + 2.0 * pi * i / (nk - 1);
    CMat<double> D = symbol<double>(m, lambda, k);
    CMat<double> G(2 * n1, 2 * n1);
    CMat<double> I = CMat<double>::Identity(n1, n1);
    G.topLeftCorner(n1, n1) = I + D * D;
    G.topRightCorner(n1, n1) = D;
    G.bottomLeftCorner(n1, n1) = D;
    G.bottomRightCorner(n1, n1) = I;
    Eigen::ComplexEigenSolver<CMat<double>> eig(G, false);
    for (int q = 0; q < 2 * n1; ++q)
      radius = std::max(radius, std::abs(eig.eigenvalues()(q)));
  }
  return radius;
}

}  // namespace hlf
