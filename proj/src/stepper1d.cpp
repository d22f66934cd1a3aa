#include "hlf/stepper1d.hpp"

#include <cmath>
#include <stdexcept>

namespace hlf {

CKTable ck_recurrence_constant(const Jet& v_ext, double c, int count, double h) {
  CKTable out(count);
  out[0] = v_ext;
  Jet cur = v_ext;
  double cr = 1.0;
  for (int r = 1; r < count; ++r) {
    cur = jet_differentiate(cur, 1, h);
    cr *= c;
    out[r] = cur;
    for (double& x : out[r]) x *= cr;
  }
  return out;
}

std::pair<CKTable, CKTable> ck_recurrence_variable(const Jet& p_ext, const Jet& v_ext,
                                                   const Jet& ap, const Jet& av,
                                                   const ForcingAt& z, int count, double h) {
  CKTable P(count), V(count);
  P[0] = p_ext;
  V[0] = v_ext;
  for (int r = 0; r + 1 < count; ++r) {
    Jet pn = jet_multiply(ap, jet_differentiate(V[r], 1, h));
    if (z) {
      Jet zr = z(r);
      for (size_t i = 0; i < pn.size() && i < zr.size(); ++i) pn[i] += zr[i];
    }
    P[r + 1] = std::move(pn);
    V[r + 1] = jet_multiply(av, jet_differentiate(P[r], 1, h));
  }
  return {std::move(P), std::move(V)};
}

CKTable ck_advection(const Jet& u_ext, const Jet& a, const ForcingAt& z, int count, double h) {
  CKTable out(count);
  out[0] = u_ext;
  for (int r = 0; r + 1 < count; ++r) {
    Jet un = jet_multiply(a, jet_differentiate(out[r], 1, h));
    if (z) {
      Jet zr = z(r);
      for (size_t i = 0; i < un.size() && i < zr.size(); ++i) un[i] += zr[i];
    }
    out[r + 1] = std::move(un);
  }
  return out;
}

void leapfrog_half_update(Jet& target, const CKTable& table, double dt, int m) {
  const int count = static_cast<int>(table.size());
  for (int r = 1; r < count; r += 2) {
    double w = 2.0;
    for (int q = 1; q <= r; ++q) w *= dt / 2.0 / q;
    for (int s = 0; s <= m; ++s) target[s] += w * table[r][s];
  }
}

Jet taylor_advance(const CKTable& table, double tau, int m) {
  Jet out(m + 1, 0.0);
  double w = 1.0;
  for (size_t r = 0; r < table.size(); ++r) {
    if (r > 0) w *= tau / static_cast<double>(r);
    for (int s = 0; s <= m; ++s) out[s] += w * table[r][s];
  }
  return out;
}

Jet modified_advance(const Jet& prev, const CKTable& table, double dt, int m) {
  const int count = static_cast<int>(table.size());
  std::vector<double> w(count);
  w[0] = 2.0;
  for (int r = 1; r < count; ++r) w[r] = w[r - 1] * dt / 2.0 / r;
  Jet out(m + 1, 0.0);
  for (int s = 0; s <= m; ++s) {
    if (s % 2 == 0) {
      double acc = prev[s];
      for (int r = 1; r < count; r += 2) acc += w[r] * table[r][s];
      out[s] = acc;
    } else {
      double acc = -prev[s];
      for (int r = 0; r < count; r += 2) acc += w[r] * table[r][s];
      out[s] = acc;
    }
  }
  return out;
}

Stepper1d::Stepper1d(Problem1d prob, Grid1d grid, int m)
    : prob_(std::move(prob)), grid_(grid), m_(m), n_(2 * m + 2) {
  SchemeConfig guard;
  guard.m = m;
  guard.validate();
  op_ = build_interp_operator(m);
  ap_prim_.resize(grid_.K);
  av_prim_.resize(grid_.K);
  ap_dual_.resize(grid_.K);
  av_dual_.resize(grid_.K);
  for (int j = 0; j < grid_.K; ++j) {
    ap_prim_[j] = prob_.ap(grid_.primary(j), grid_.h, n_);
    ap_dual_[j] = prob_.ap(grid_.dual(j), grid_.h, n_);
    if (prob_.n_fields == 2) {
      av_prim_[j] = prob_.av(grid_.primary(j), grid_.h, n_);
      av_dual_[j] = prob_.av(grid_.dual(j), grid_.h, n_);
    }
  }
}

ForcingAt Stepper1d::forcing_at(double x, double t) const {
  if (!prob_.forcing) return nullptr;
  const auto& fz = prob_.forcing;
  const double h = grid_.h;
  const int n = n_;
  return [&fz, x, t, h, n](int r) { return fz(r, x, t, h, n); };
}

void Stepper1d::check_finite(const std::vector<const std::vector<Jet>*>& fields,
                             int step_index) const {
  for (const auto* f : fields)
    for (const Jet& j : *f)
      for (double v : j)
        if (!std::isfinite(v))
          throw InstabilityError(step_index, "solution became non-finite at step " +
                                                 std::to_string(step_index));
}

State1d Stepper1d::init_leapfrog(double dt, double t0) const {
  if (prob_.n_fields != 2)
    throw ConfigError("the staggered scheme needs a two-field system");
  State1d st;
  st.dt = dt;
  st.t_p = t0;
  st.t_v = t0 + dt / 2.0;
  st.p.resize(grid_.K);
  st.v.resize(grid_.K);
  for (int j = 0; j < grid_.K; ++j) {
    st.p[j] = prob_.exact(0, grid_.primary(j), t0, grid_.h, m_ + 1);
    st.v[j] = prob_.exact(1, grid_.dual(j), st.t_v, grid_.h, m_ + 1);
  }
  return st;
}

void Stepper1d::advance_p(State1d& st) const {
  // p cell at primary node j spans the dual neighbors j-1, j
  for (int j = 0; j < grid_.K; ++j) {
    Jet v_ext = reconstruct_cell_1d(op_, st.v[grid_.wrap(j - 1)], st.v[j]);
    auto tables = ck_recurrence_variable(Jet(n_, 0.0), v_ext, ap_prim_[j], av_prim_[j],
                                         forcing_at(grid_.primary(j), st.t_v), n_, grid_.h);
    leapfrog_half_update(st.p[j], tables.first, st.dt, m_);
  }
  st.t_p += st.dt;
}

void Stepper1d::advance_v(State1d& st) const {
  for (int j = 0; j < grid_.K; ++j) {
    Jet p_ext = reconstruct_cell_1d(op_, st.p[j], st.p[grid_.wrap(j + 1)]);
    auto tables = ck_recurrence_variable(p_ext, Jet(n_, 0.0), ap_dual_[j], av_dual_[j],
                                         forcing_at(grid_.dual(j), st.t_p), n_, grid_.h);
    leapfrog_half_update(st.v[j], tables.second, st.dt, m_);
  }
  st.t_v += st.dt;
}

void Stepper1d::step_system(State1d& st, int step_index) const {
  advance_p(st);
  advance_v(st);
  check_finite({&st.p, &st.v}, step_index);
}

ModifiedState1d Stepper1d::init_modified(double dt, double t0) const {
  ModifiedState1d st;
  st.dt = dt;
  st.t = t0;
  st.prim.resize(prob_.n_fields);
  st.dual.resize(prob_.n_fields);
  for (int f = 0; f < prob_.n_fields; ++f) {
    st.prim[f].resize(grid_.K);
    st.dual[f].resize(grid_.K);
    for (int j = 0; j < grid_.K; ++j) {
      st.prim[f][j] = prob_.exact(f, grid_.primary(j), t0, grid_.h, m_ + 1);
      st.dual[f][j] = prob_.exact(f, grid_.dual(j), t0 + dt / 2.0, grid_.h, m_ + 1);
    }
  }
  return st;
}

void Stepper1d::step_modified(ModifiedState1d& st, int step_index) const {
  const double dt = st.dt;
  const int nf = prob_.n_fields;

  // primary update from the dual-grid copies (tables centered at t + dt/2),
  // then dual update from the fresh primary copies (centered at t + dt)
  for (int half = 0; half < 2; ++half) {
    const bool to_primary = half == 0;
    const double tc = st.t + (to_primary ? dt / 2.0 : dt);
    const auto& src = to_primary ? st.dual : st.prim;
    auto& dst = to_primary ? st.prim : st.dual;
    std::vector<std::vector<Jet>> out(nf, std::vector<Jet>(grid_.K));
    for (int j = 0; j < grid_.K; ++j) {
      const int li = to_primary ? grid_.wrap(j - 1) : j;
      const int ri = to_primary ? j : grid_.wrap(j + 1);
      const double x = to_primary ? grid_.primary(j) : grid_.dual(j);
      const Jet& ap = to_primary ? ap_prim_[j] : ap_dual_[j];
      if (nf == 1) {
        Jet u_ext = reconstruct_cell_1d(op_, src[0][li], src[0][ri]);
        CKTable tab = ck_advection(u_ext, ap, forcing_at(x, tc), n_, grid_.h);
        out[0][j] = modified_advance(dst[0][j], tab, dt, m_);
      } else {
        Jet p_ext = reconstruct_cell_1d(op_, src[0][li], src[0][ri]);
        Jet v_ext = reconstruct_cell_1d(op_, src[1][li], src[1][ri]);
        const Jet& av = to_primary ? av_prim_[j] : av_dual_[j];
        auto tables =
            ck_recurrence_variable(p_ext, v_ext, ap, av, forcing_at(x, tc), n_, grid_.h);
        out[0][j] = modified_advance(dst[0][j], tables.first, dt, m_);
        out[1][j] = modified_advance(dst[1][j], tables.second, dt, m_);
      }
    }
    dst = std::move(out);
  }
  st.t += dt;

  std::vector<const std::vector<Jet>*> all;
  for (int f = 0; f < nf; ++f) {
    all.push_back(&st.prim[f]);
    all.push_back(&st.dual[f]);
  }
  check_finite(all, step_index);
}

DualState1d Stepper1d::init_dual_hermite(double dt, double t0) const {
  if (prob_.n_fields != 2)
    throw ConfigError("the classic Hermite baseline needs a two-field system");
  DualState1d st;
  st.dt = dt;
  st.t = t0;
  st.p.resize(grid_.K);
  st.v.resize(grid_.K);
  for (int j = 0; j < grid_.K; ++j) {
    st.p[j] = prob_.exact(0, grid_.primary(j), t0, grid_.h, m_ + 1);
    st.v[j] = prob_.exact(1, grid_.primary(j), t0, grid_.h, m_ + 1);
  }
  return st;
}

void Stepper1d::step_dual_hermite(DualState1d& st, int step_index) const {
  const double tau = st.dt / 2.0;
  std::vector<Jet> p_mid(grid_.K), v_mid(grid_.K);
  for (int j = 0; j < grid_.K; ++j) {
    // dual node j sits between primary nodes j, j+1
    Jet p_ext = reconstruct_cell_1d(op_, st.p[j], st.p[grid_.wrap(j + 1)]);
    Jet v_ext = reconstruct_cell_1d(op_, st.v[j], st.v[grid_.wrap(j + 1)]);
    auto tables = ck_recurrence_variable(p_ext, v_ext, ap_dual_[j], av_dual_[j],
                                         forcing_at(grid_.dual(j), st.t), n_, grid_.h);
    p_mid[j] = taylor_advance(tables.first, tau, m_);
    v_mid[j] = taylor_advance(tables.second, tau, m_);
  }
  for (int j = 0; j < grid_.K; ++j) {
    // primary node j sits between dual nodes j-1, j
    Jet p_ext = reconstruct_cell_1d(op_, p_mid[grid_.wrap(j - 1)], p_mid[j]);
    Jet v_ext = reconstruct_cell_1d(op_, v_mid[grid_.wrap(j - 1)], v_mid[j]);
    auto tables = ck_recurrence_variable(p_ext, v_ext, ap_prim_[j], av_prim_[j],
                                         forcing_at(grid_.primary(j), st.t + tau), n_, grid_.h);
    st.p[j] = taylor_advance(tables.first, tau, m_);
    st.v[j] = taylor_advance(tables.second, tau, m_);
  }
  st.t += st.dt;
  check_finite({&st.p, &st.v}, step_index);
}

}  // namespace hlf
