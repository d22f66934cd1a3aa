#pragma once

#include <complex>
#include <vector>

namespace hlf {

using Cplx = std::complex<double>;

// One-step increment operator acting on a nodal jet: column c is the update
// a single-mode unit jet e_c induces at the staggered target node, for the
// unit-speed system with lambda = c dt / h; (m+1)^2 entries, row-major.
std::vector<Cplx> dispersion_symbol(int m, double lambda, double k);

struct DispersionFit {
  double order = 0.0;
  int points_used = 0;
};

// Dispersion accuracy order: compares the symbol's eigenvalue nearest the
// exact increment 2 i sin(k lambda / 2) over a dyadic k ladder and fits the
// decay of the relative defect. Runs in extended precision internally.
DispersionFit dispersion_order_scan(int m, double lambda);

// Structure of the k = 0 null space: a simple zero eigenvalue or a
// generalized (Jordan) one, decided by whether D g = e_1 is solvable.
enum class ZeroEigenStructure { simple, generalized };
ZeroEigenStructure zero_eigen_structure(int m, double lambda);

// largest one-step amplification magnitude over a uniform k sample of
// [-pi, pi] for the two-field update matrix
double amplification_scan(int m, double lambda, int nk = 257);

}  // namespace hlf
