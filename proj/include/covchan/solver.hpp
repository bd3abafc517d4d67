#pragma once

#include "covchan/channel.hpp"
#include "covchan/groupreps.hpp"

namespace covchan {

// One solution of D2(g)^-1 A_a D1(g) = sum_b Omega_ab(g) A_b is a multiplet
// (A_1..A_k), k = dim Omega. The null space of the stacked generator system
// yields one multiplet per basis vector; its dimension is the multiplicity
// of Omega in D1 (x) conj(D2). Multiplets are pairwise orthogonal in the
// stacked Hilbert-Schmidt inner product, deterministically phased, and
// scaled so the mean component Frobenius norm is 1 (a full multiplet then
// trace-normalizes with c = dim(Omega)/d).
struct IntertwinerSolution {
  std::string omega_label;
  int omega_dim = 0;
  int multiplicity = 0;
  std::vector<std::vector<Matrix>> multiplets;  // [multiplicity][omega_dim]
  double residual = 0.0;                        // max re-substitution error
};

IntertwinerSolution solve_intertwiners(const FiniteGroupRep& d1, const FiniteGroupRep& d2,
                                       const FiniteGroupRep& omega, double tol = kNullTol);

// Infinitesimal version A D1(T) - D2(T) A = sum_b Omega(T)_ab A_b for every
// algebra generator; omega_gens are the Omega images of the generators.
IntertwinerSolution solve_intertwiners(const LieAlgebraRep& d1, const LieAlgebraRep& d2,
                                       const std::vector<Matrix>& omega_gens,
                                       const std::string& omega_label, double tol = kNullTol);

// Symmetry equation A_a D(g) = sum_b Omega_ab(g) A_b.
IntertwinerSolution solve_symmetric(const FiniteGroupRep& d, const FiniteGroupRep& omega,
                                    double tol = kNullTol);

// Schur normalization: requires sum_a A_a^dag A_a = c I (checked to tol,
// relative); rescales by 1/sqrt(c) to a trace-preserving channel.
Channel normalize_tp(const std::vector<Matrix>& kraus, double tol = 1e-8,
                     std::string label = "tp-normalized");

struct CovarianceCheck {
  bool ok = false;
  double max_residual = 0.0;
};

// max_g max_rho || D2(g) E(rho) D2(g)^-1 - E(D1(g) rho D1(g)^-1) ||_F over
// random densities; element lists must be unitary.
CovarianceCheck check_covariance(const Channel& ch, const std::vector<Matrix>& d1_elems,
                                 const std::vector<Matrix>& d2_elems, double tol = 1e-9,
                                 unsigned long long seed = kDefaultSeed, int n_states = 25);
CovarianceCheck check_covariance(const Channel& ch, const FiniteGroupRep& d1,
                                 const FiniteGroupRep& d2, double tol = 1e-9,
                                 unsigned long long seed = kDefaultSeed, int n_states = 25);
// Lie version samples group elements exp(i theta T_n) at theta in
// {0.3, 0.7, 1.1} for every generator.
CovarianceCheck check_covariance(const Channel& ch, const LieAlgebraRep& d1,
                                 const LieAlgebraRep& d2, double tol = 1e-9,
                                 unsigned long long seed = kDefaultSeed, int n_states = 25);

// max_g max_rho || E(D(g) rho D(g)^-1) - E(rho) ||_F.
CovarianceCheck check_symmetry(const Channel& ch, const std::vector<Matrix>& elems,
                               double tol = 1e-9, unsigned long long seed = kDefaultSeed,
                               int n_states = 25);
CovarianceCheck check_symmetry(const Channel& ch, const FiniteGroupRep& d, double tol = 1e-9,
                               unsigned long long seed = kDefaultSeed, int n_states = 25);

}  // namespace covchan
