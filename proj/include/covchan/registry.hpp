#pragma once

#include "covchan/groupreps.hpp"
#include "covchan/solver.hpp"

namespace covchan {

// Named catalogue of the groups, representations, and one-dimensional or
// irreducible omega labels the command-line tool understands.
//
//   z3       cyclic, generator diag(1, w, w^2); reps: defining; omegas 0..2
//   hadamard cyclic order 4, generator = Fourier matrix; omegas 1, -1, i, -i
//   s3       permutations of the basis; reps defining, 1, 1p, 2; omegas same
//   pauli    projective group <X, Z>; rep defining; omegas kl for k,l in 0..2
//   u1       diag(1, 1, e^{i t}); rep phase; omega = any integer charge
//   u1u1     diag(1, e^{i t1}, e^{i t2}); rep phases; omega = "a,b" charges
//   su3      Lie algebra reps 1, 3, 3bar, 6, 6bar, 8 (reps and omegas)
//   so3      real rotations acting on C^3; rep vector (check only)

struct SolveProblem {
  bool lie = false;
  std::string group, d1_name, d2_name, omega_name;
  FiniteGroupRep fin_d1, fin_d2, fin_omega;
  LieAlgebraRep lie_d1, lie_d2, lie_omega;
};

std::vector<std::string> registry_groups();
std::string registry_default_rep(const std::string& group);
std::string registry_omega_help(const std::string& group);

SolveProblem resolve_problem(const std::string& group, const std::string& d1,
                             const std::string& d2, const std::string& omega);

IntertwinerSolution solve_problem(const SolveProblem& p);

// Representation data in the form the covariance/symmetry checkers accept.
struct CheckRep {
  bool lie = false;
  std::vector<Matrix> generators;
  LieAlgebraRep lie_rep;
};

CheckRep resolve_check_rep(const std::string& group, const std::string& rep);

}  // namespace covchan
