#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hlf/config.hpp"
#include "hlf/grid.hpp"
#include "hlf/interpolation.hpp"
#include "hlf/problem.hpp"

namespace hlf {

// Time-derivative table at one node: entry r is the extended scaled jet of
// the r-th time derivative; every entry keeps length 2m+2 with exhausted
// degrees zero padded, and entry 0 is the seed jet itself.
using CKTable = std::vector<Jet>;

// provider of the forcing's r-th time-derivative space jet at a fixed (x, t)
using ForcingAt = std::function<Jet(int r)>;

// constant-speed model p_t = c v_x: entry r is c^r times the r-fold spatial
// derivative of the seed
CKTable ck_recurrence_constant(const Jet& v_ext, double c, int count, double h);

// coupled recurrence for p_t = ap(x) v_x + z, v_t = av(x) p_x, seeded with
// both fields; returns the p and v tables. A field that is not known at the
// node may be seeded with zeros: the OTHER parity of its table (the only one
// a staggered update reads) is unaffected.
std::pair<CKTable, CKTable> ck_recurrence_variable(const Jet& p_ext, const Jet& v_ext,
                                                   const Jet& ap, const Jet& av,
                                                   const ForcingAt& z, int count, double h);

// scalar advection u_t = a(x) u_x + z
CKTable ck_advection(const Jet& u_ext, const Jet& a, const ForcingAt& z, int count, double h);

// staggered half-cycle update target[s] += 2 sum_{r odd} (dt/2)^r/r! table[r][s]
void leapfrog_half_update(Jet& target, const CKTable& table, double dt, int m);

// full Taylor advance by tau (classic Hermite half step)
Jet taylor_advance(const CKTable& table, double tau, int m);

// modified update: even-order DOFs keep the difference form, odd-order DOFs
// use the sum form with the previous value negated
Jet modified_advance(const Jet& prev, const CKTable& table, double dt, int m);

// Hermite-leapfrog state: p on the primary grid at t_p, v on the dual grid
// at t_v = t_p + dt/2 after a whole step.
struct State1d {
  double t_p = 0.0, t_v = 0.0, dt = 0.0;
  std::vector<Jet> p, v;
};

// modified scheme carries every field on both grids; prim at t, dual at t + dt/2
struct ModifiedState1d {
  double t = 0.0, dt = 0.0;
  std::vector<std::vector<Jet>> prim, dual;  // [field][node]
};

// classic two-half-step scheme: both fields co-located on the primary grid at t
struct DualState1d {
  double t = 0.0, dt = 0.0;
  std::vector<Jet> p, v;
};

class Stepper1d {
 public:
  Stepper1d(Problem1d prob, Grid1d grid, int m);

  State1d init_leapfrog(double dt, double t0 = 0.0) const;
  // each half-update is centered at the other field's current time stamp
  void advance_p(State1d& st) const;
  void advance_v(State1d& st) const;
  void step_system(State1d& st, int step_index) const;

  ModifiedState1d init_modified(double dt, double t0 = 0.0) const;
  void step_modified(ModifiedState1d& st, int step_index) const;

  DualState1d init_dual_hermite(double dt, double t0 = 0.0) const;
  void step_dual_hermite(DualState1d& st, int step_index) const;

  const Problem1d& problem() const { return prob_; }
  const Grid1d& grid() const { return grid_; }
  const InterpOperator& op() const { return op_; }
  int m() const { return m_; }

 private:
  Problem1d prob_;
  Grid1d grid_;
  int m_, n_;
  InterpOperator op_;
  std::vector<Jet> ap_prim_, av_prim_, ap_dual_, av_dual_;

  ForcingAt forcing_at(double x, double t) const;
  void check_finite(const std::vector<const std::vector<Jet>*>& fields, int step_index) const;
};

}  // namespace hlf
