#include "hlf/jet.hpp"

#include <cmath>
#include <stdexcept>

namespace hlf {

Jet jet_multiply(const Jet& a, const Jet& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("jet_multiply: length mismatch");
  const int n = static_cast<int>(a.size());
  Jet out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; j < n - i; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Jet jet_differentiate(const Jet& a, int order, double h) {
  if (order < 0) throw std::invalid_argument("jet_differentiate: order < 0");
  const int n = static_cast<int>(a.size());
  Jet out(n, 0.0);
  const double hq = std::pow(h, order);
  for (int j = 0; j + order < n; ++j) {
    double fac = 1.0;
    for (int q = 1; q <= order; ++q) fac *= j + q;
    out[j] = a[j + order] * fac / hq;
  }
  return out;
}

double jet_eval(const Jet& a, double xi) {
  double v = 0.0;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) v = v * xi + a[i];
  return v;
}

Jet jet_from_raw(const std::vector<double>& derivs, double h) {
  Jet out(derivs.size());
  double f = 1.0;
  for (size_t i = 0; i < derivs.size(); ++i) {
    out[i] = derivs[i] * f;
    f *= h / static_cast<double>(i + 1);
  }
  return out;
}

std::vector<double> jet_to_raw(const Jet& a, double h) {
  std::vector<double> out(a.size());
  double f = 1.0;
  for (size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] * f;
    f *= static_cast<double>(i + 1) / h;
  }
  return out;
}

Jet constant_jet(double value, int n) {
  Jet out(n, 0.0);
  if (n > 0) out[0] = value;
  return out;
}

Jet sin_jet(double amp, double w, double phase, double x0, double h, int n) {
  Jet out(n);
  double base = amp;
  const double pi = std::acos(-1.0);
  for (int i = 0; i < n; ++i) {
    out[i] = base * std::sin(w * x0 + phase + i * pi / 2.0);
    base *= h * w / static_cast<double>(i + 1);
  }
  return out;
}

Jet gaussian_jet(double center, double delta, double c, double h, int n) {
  // raw derivatives satisfy g^{(i+1)} = -(2/delta) ((x-center) g^{(i)} + i g^{(i-1)})
  std::vector<double> raw(n, 0.0);
  const double d = c - center;
  raw[0] = std::exp(-d * d / delta);
  if (n > 1) raw[1] = -2.0 / delta * d * raw[0];
  for (int i = 1; i + 1 < n; ++i)
    raw[i + 1] = -2.0 / delta * (d * raw[i] + i * raw[i - 1]);
  return jet_from_raw(raw, h);
}

Jet poly_jet(const std::vector<double>& coeffs, double x0, double h, int n) {
  std::vector<double> raw(n, 0.0);
  const int deg = static_cast<int>(coeffs.size()) - 1;
  for (int i = 0; i < n && i <= deg; ++i) {
    double acc = 0.0;
    for (int q = deg; q >= i; --q) {
      double fall = 1.0;
      for (int r = 0; r < i; ++r) fall *= q - r;
      acc += coeffs[q] * fall * std::pow(x0, q - i);
    }
    raw[i] = acc;
  }
  return jet_from_raw(raw, h);
}

TensorJet tensor_outer(const Jet& gx, const Jet& gy) {
  TensorJet out(static_cast<int>(gx.size()), static_cast<int>(gy.size()));
  for (int i = 0; i < out.nx; ++i)
    for (int j = 0; j < out.ny; ++j) out.at(i, j) = gx[i] * gy[j];
  return out;
}

TensorJet tensor_multiply(const TensorJet& a, const TensorJet& b) {
  if (a.nx != b.nx || a.ny != b.ny)
    throw std::invalid_argument("tensor_multiply: shape mismatch");
  TensorJet out(a.nx, a.ny);
  for (int i = 0; i < a.nx; ++i)
    for (int j = 0; j < a.ny; ++j) {
      const double c = a.at(i, j);
      if (c == 0.0) continue;
      for (int k = 0; k < a.nx - i; ++k)
        for (int l = 0; l < a.ny - j; ++l) out.at(i + k, j + l) += c * b.at(k, l);
    }
  return out;
}

TensorJet tensor_dx(const TensorJet& t, double hx) {
  TensorJet out(t.nx, t.ny);
  for (int i = 0; i + 1 < t.nx; ++i)
    for (int j = 0; j < t.ny; ++j) out.at(i, j) = t.at(i + 1, j) * (i + 1) / hx;
  return out;
}

TensorJet tensor_dy(const TensorJet& t, double hy) {
  TensorJet out(t.nx, t.ny);
  for (int i = 0; i < t.nx; ++i)
    for (int j = 0; j + 1 < t.ny; ++j) out.at(i, j) = t.at(i, j + 1) * (j + 1) / hy;
  return out;
}

double tensor_eval(const TensorJet& t, double xi, double eta) {
  double v = 0.0;
  for (int i = t.nx - 1; i >= 0; --i) {
    double row = 0.0;
    for (int j = t.ny - 1; j >= 0; --j) row = row * eta + t.at(i, j);
    v = v * xi + row;
  }
  return v;
}

}  // namespace hlf
