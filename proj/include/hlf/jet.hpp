#pragma once

#include <vector>

namespace hlf {

// Scaled jet: entry i holds h^i/i! d^i u/dx^i at a node, so the local
// polynomial is sum_i a[i] xi^i with xi = (x - x_node)/h.
using Jet = std::vector<double>;

// product of two local polynomials, truncated to the shared length
Jet jet_multiply(const Jet& a, const Jet& b);

// scaled jet of the order-th spatial derivative; keeps the input length,
// padding the exhausted top entries with zeros
Jet jet_differentiate(const Jet& a, int order, double h);

double jet_eval(const Jet& a, double xi);

Jet jet_from_raw(const std::vector<double>& derivs, double h);
std::vector<double> jet_to_raw(const Jet& a, double h);

Jet constant_jet(double value, int n);

// length-n jet of amp*sin(w x + phase) at x0
Jet sin_jet(double amp, double w, double phase, double x0, double h, int n);

// length-n jet of exp(-(x - center)^2 / delta) at x0
Jet gaussian_jet(double center, double delta, double x0, double h, int n);

// length-n jet of sum_q coeffs[q] x^q at x0
Jet poly_jet(const std::vector<double>& coeffs, double x0, double h, int n);

// Tensor-product jet: entry (i,j) holds hx^i hy^j / (i! j!) times the mixed
// derivative d^{i+j} u / dx^i dy^j, stored row-major with x first.
struct TensorJet {
  int nx = 0, ny = 0;
  std::vector<double> a;

  TensorJet() = default;
  TensorJet(int nx_, int ny_)
      : nx(nx_), ny(ny_), a(static_cast<size_t>(nx_) * ny_, 0.0) {}

  double& at(int i, int j) { return a[static_cast<size_t>(i) * ny + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * ny + j]; }
};

TensorJet tensor_outer(const Jet& gx, const Jet& gy);
TensorJet tensor_multiply(const TensorJet& a, const TensorJet& b);
TensorJet tensor_dx(const TensorJet& t, double hx);
TensorJet tensor_dy(const TensorJet& t, double hy);
double tensor_eval(const TensorJet& t, double xi, double eta);

}  // namespace hlf
