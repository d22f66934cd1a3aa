#include "hlf/analysis.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <set>

#include "hlf/config.hpp"

namespace hlf {

const GaussRule& gauss_rule(int npts) {
  static std::map<int, GaussRule> cache;
  static std::mutex lock;
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(npts);
  if (it == cache.end()) {
    gsl_integration_glfixed_table* tab =
        gsl_integration_glfixed_table_alloc(static_cast<size_t>(npts));
    GaussRule rule;
    rule.x.resize(npts);
    rule.w.resize(npts);
    for (int i = 0; i < npts; ++i)
      gsl_integration_glfixed_point(-1.0, 1.0, static_cast<size_t>(i), &rule.x[i], &rule.w[i],
                                    tab);
    gsl_integration_glfixed_table_free(tab);
    it = cache.emplace(npts, std::move(rule)).first;
  }
  return it->second;
}

PiecewisePoly interpolant_from_primary(const std::vector<Jet>& jets, const Grid1d& g,
                                       const InterpOperator& op) {
  PiecewisePoly f;
  f.x0 = g.x_min;
  f.L = g.length();
  for (int j = 0; j < g.K; ++j) {
    PiecewisePoly::Piece pc;
    pc.xl = g.primary(j);
    pc.xr = g.primary(j) + g.h;
    pc.center = g.dual(j);
    pc.scale = g.h;
    pc.a = reconstruct_cell_1d(op, jets[j], jets[g.wrap(j + 1)]);
    f.pieces.push_back(std::move(pc));
  }
  return f;
}

PiecewisePoly interpolant_from_dual(const std::vector<Jet>& jets, const Grid1d& g,
                                    const InterpOperator& op) {
  PiecewisePoly f;
  f.x0 = g.x_min;
  f.L = g.length();
  for (int j = 1; j < g.K; ++j) {
    PiecewisePoly::Piece pc;
    pc.xl = g.dual(j - 1);
    pc.xr = g.dual(j);
    pc.center = g.primary(j);
    pc.scale = g.h;
    pc.a = reconstruct_cell_1d(op, jets[j - 1], jets[j]);
    f.pieces.push_back(std::move(pc));
  }
  // the cell around the seam splits into a head and a tail piece that share
  // coefficients; the tail keeps its center one period to the right
  Jet seam = reconstruct_cell_1d(op, jets[g.K - 1], jets[0]);
  PiecewisePoly::Piece head;
  head.xl = g.x_min;
  head.xr = g.x_min + g.h / 2.0;
  head.center = g.x_min;
  head.scale = g.h;
  head.a = seam;
  PiecewisePoly::Piece tail;
  tail.xl = g.x_min + f.L - g.h / 2.0;
  tail.xr = g.x_min + f.L;
  tail.center = g.x_min + f.L;
  tail.scale = g.h;
  tail.a = std::move(seam);
  f.pieces.insert(f.pieces.begin(), std::move(head));
  f.pieces.push_back(std::move(tail));
  return f;
}

namespace {

double piece_eval(const PiecewisePoly::Piece& pc, double x) {
  const double xi = (x - pc.center) / pc.scale;
  double v = 0.0;
  for (int i = static_cast<int>(pc.a.size()) - 1; i >= 0; --i) v = v * xi + pc.a[i];
  return v;
}

const PiecewisePoly::Piece& find_piece(const PiecewisePoly& f, double x) {
  const double tol = 1e-12 * std::max(1.0, f.L);
  for (const auto& pc : f.pieces)
    if (x >= pc.xl - tol && x < pc.xr + tol) return pc;
  throw std::logic_error("piecewise lookup fell through");
}

// coefficients of the same polynomial re-expressed around (c_new, sc_new)
std::vector<double> recenter(const std::vector<double>& a, double c_old, double sc_old,
                             double c_new, double sc_new) {
  const int n = static_cast<int>(a.size());
  const double alpha = sc_new / sc_old;
  const double beta = (c_new - c_old) / sc_old;
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0.0) continue;
    double binom = 1.0;
    for (int q = 0; q <= i; ++q) {
      out[q] += a[i] * binom * std::pow(alpha, q) * std::pow(beta, i - q);
      binom = binom * (i - q) / (q + 1.0);
    }
  }
  return out;
}

}  // namespace

double pw_eval(const PiecewisePoly& f, double x) {
  while (x < f.x0) x += f.L;
  while (x >= f.x0 + f.L) x -= f.L;
  return piece_eval(find_piece(f, x), x);
}

PiecewisePoly pw_shift(const PiecewisePoly& f, double s) {
  PiecewisePoly g;
  g.x0 = f.x0;
  g.L = f.L;
  const double hi = f.x0 + f.L;
  const double tol = 1e-12 * f.L;
  for (const auto& pc : f.pieces) {
    double nl = pc.xl - s;
    double nr = pc.xr - s;
    double nc = pc.center - s;
    const double w = std::floor((nl - f.x0) / f.L + 1e-12);
    nl -= w * f.L;
    nr -= w * f.L;
    nc -= w * f.L;
    if (nr <= hi + tol) {
      PiecewisePoly::Piece out{std::max(nl, f.x0), std::min(nr, hi), nc, pc.scale, pc.a};
      if (out.xr - out.xl > tol) g.pieces.push_back(std::move(out));
    } else {
      g.pieces.push_back({nl, hi, nc, pc.scale, pc.a});
      g.pieces.push_back({f.x0, nr - f.L, nc - f.L, pc.scale, pc.a});
    }
  }
  std::sort(g.pieces.begin(), g.pieces.end(),
            [](const auto& a, const auto& b) { return a.xl < b.xl; });
  return g;
}

PiecewisePoly pw_combine(const PiecewisePoly& f, const PiecewisePoly& g, double cf, double cg) {
  const double rel = 1e-11 * f.L;
  std::set<long long> keys;
  for (const auto& pc : f.pieces) {
    keys.insert(std::llround((pc.xl - f.x0) / rel));
    keys.insert(std::llround((pc.xr - f.x0) / rel));
  }
  for (const auto& pc : g.pieces) {
    keys.insert(std::llround((pc.xl - f.x0) / rel));
    keys.insert(std::llround((pc.xr - f.x0) / rel));
  }

  PiecewisePoly out;
  out.x0 = f.x0;
  out.L = f.L;
  long long prev = 0;
  bool have_prev = false;
  for (long long k : keys) {
    if (have_prev && k > prev) {
      const double xl = f.x0 + prev * rel;
      const double xr = f.x0 + k * rel;
      const double xm = 0.5 * (xl + xr);
      const double width = xr - xl;
      const auto& pf = find_piece(f, xm);
      const auto& pg = find_piece(g, xm);
      std::vector<double> af = recenter(pf.a, pf.center, pf.scale, xm, width);
      std::vector<double> ag = recenter(pg.a, pg.center, pg.scale, xm, width);
      std::vector<double> a(std::max(af.size(), ag.size()), 0.0);
      for (size_t i = 0; i < af.size(); ++i) a[i] += cf * af[i];
      for (size_t i = 0; i < ag.size(); ++i) a[i] += cg * ag[i];
      out.pieces.push_back({xl, xr, xm, width, std::move(a)});
    }
    prev = k;
    have_prev = true;
  }
  return out;
}

double sobolev_seminorm(const PiecewisePoly& f, int order) {
  double total = 0.0;
  for (const auto& pc : f.pieces) {
    const int len = static_cast<int>(pc.a.size());
    if (order >= len) continue;
    // scaled coefficients of the order-th derivative in the piece frame
    std::vector<double> b(len - order);
    for (int j = 0; j < len - order; ++j) {
      double fac = 1.0;
      for (int q = 1; q <= order; ++q) fac *= j + q;
      b[j] = pc.a[j + order] * fac / std::pow(pc.scale, order);
    }
    const int npts = std::max<int>(1, static_cast<int>(b.size()));
    const GaussRule& rule = gauss_rule(npts);
    const double xil = (pc.xl - pc.center) / pc.scale;
    const double xir = (pc.xr - pc.center) / pc.scale;
    double acc = 0.0;
    for (int q = 0; q < npts; ++q) {
      const double xi = 0.5 * (xil + xir) + 0.5 * (xir - xil) * rule.x[q];
      double v = 0.0;
      for (int j = static_cast<int>(b.size()) - 1; j >= 0; --j) v = v * xi + b[j];
      acc += rule.w[q] * v * v;
    }
    total += acc * 0.5 * (xir - xil) * pc.scale;
  }
  return total;
}

double conserved_q(const std::vector<Jet>& p, const std::vector<Jet>& v_behind,
                   const Grid1d& g, const InterpOperator& op, double c, double dt) {
  PiecewisePoly fp = interpolant_from_primary(p, g, op);
  PiecewisePoly fv = interpolant_from_dual(v_behind, g, op);
  const double s = c * dt / 2.0;
  PiecewisePoly plus = pw_combine(fp, pw_shift(fv, s), 1.0, -1.0);
  PiecewisePoly minus = pw_combine(fp, pw_shift(fv, -s), 1.0, 1.0);
  return sobolev_seminorm(plus, op.m + 1) + sobolev_seminorm(minus, op.m + 1);
}

double conserved_r(const std::vector<Jet>& v_ahead, const std::vector<Jet>& p,
                   const Grid1d& g, const InterpOperator& op, double c, double dt) {
  PiecewisePoly fv = interpolant_from_dual(v_ahead, g, op);
  PiecewisePoly fp = interpolant_from_primary(p, g, op);
  const double s = c * dt / 2.0;
  PiecewisePoly plus = pw_combine(fv, pw_shift(fp, s), 1.0, -1.0);
  PiecewisePoly minus = pw_combine(fv, pw_shift(fp, -s), 1.0, 1.0);
  return sobolev_seminorm(plus, op.m + 1) + sobolev_seminorm(minus, op.m + 1);
}

double l2_error_1d(const std::vector<Jet>& jets, const Grid1d& g, const InterpOperator& op,
                   bool jets_on_primary, const std::function<double(double)>& exact) {
  const GaussRule& rule = gauss_rule(op.n);
  double total = 0.0;
  for (int j = 0; j < g.K; ++j) {
    const int li = jets_on_primary ? j : g.wrap(j - 1);
    const int ri = jets_on_primary ? g.wrap(j + 1) : j;
    const double xc = jets_on_primary ? g.dual(j) : g.primary(j);
    Jet ext = reconstruct_cell_1d(op, jets[li], jets[ri]);
    for (int q = 0; q < op.n; ++q) {
      const double x = xc + 0.5 * g.h * rule.x[q];
      const double diff = jet_eval(ext, 0.5 * rule.x[q]) - exact(x);
      total += rule.w[q] * diff * diff * 0.5 * g.h;
    }
  }
  return std::sqrt(total);
}

double l2_error_2d(const PiecewiseTensor& cells,
                   const std::function<double(double, double)>& exact) {
  if (cells.ext.empty()) return 0.0;
  const int nq = cells.ext[0].nx;
  const GaussRule& rule = gauss_rule(nq);
  double total = 0.0;
  for (int ix = 0; ix < cells.nx; ++ix) {
    const double wx2 = 0.5 * (cells.hi_x[ix] - cells.lo_x[ix]);
    const double mx = 0.5 * (cells.hi_x[ix] + cells.lo_x[ix]);
    for (int iy = 0; iy < cells.ny; ++iy) {
      const double wy2 = 0.5 * (cells.hi_y[iy] - cells.lo_y[iy]);
      const double my = 0.5 * (cells.hi_y[iy] + cells.lo_y[iy]);
      const TensorJet& ext = cells.cell(ix, iy);
      for (int a = 0; a < nq; ++a) {
        const double x = mx + wx2 * rule.x[a];
        const double xi = (x - cells.cx[ix]) / cells.h;
        for (int b = 0; b < nq; ++b) {
          const double y = my + wy2 * rule.x[b];
          const double eta = (y - cells.cy[iy]) / cells.h;
          const double diff = tensor_eval(ext, xi, eta) - exact(x, y);
          total += rule.w[a] * rule.w[b] * wx2 * wy2 * diff * diff;
        }
      }
    }
  }
  return std::sqrt(total);
}

RateFit convergence_rate(const std::vector<double>& hs, const std::vector<double>& errors,
                         double floor) {
  if (hs.size() != errors.size())
    throw std::invalid_argument("convergence_rate: length mismatch");
  std::vector<double> lx, ly;
  for (size_t i = 0; i < hs.size(); ++i) {
    if (errors[i] > floor) {
      lx.push_back(std::log(hs[i]));
      ly.push_back(std::log(errors[i]));
    }
  }
  RateFit fit;
  fit.points_used = static_cast<int>(lx.size());
  if (fit.points_used < 3)
    throw InsufficientDataError("convergence_rate: fewer than 3 error points above the floor");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(lx.size());
  for (size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  fit.rate = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return fit;
}

}  // namespace hlf
