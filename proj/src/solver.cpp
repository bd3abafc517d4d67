#include "covchan/solver.hpp"

#include <cmath>
#include <stdexcept>

namespace covchan {

namespace {

// Builds the stacked linear system from per-generator block maps
// block(g) acting on each |A_a> and the Omega mixing, then extracts the
// canonical null-space multiplets.
IntertwinerSolution solve_stacked(const std::vector<Matrix>& blocks,
                                  const std::vector<Matrix>& omegas,
                                  const std::string& omega_label, int d, double tol) {
  if (blocks.size() != omegas.size() || blocks.empty())
    throw std::invalid_argument("solver: generator count mismatch");
  int k = static_cast<int>(omegas[0].rows());
  int n = d * d;
  Matrix eye_k = Matrix::Identity(k, k);
  Matrix eye_n = Matrix::Identity(n, n);
  Matrix stacked(static_cast<Eigen::Index>(blocks.size()) * k * n, k * n);
  for (size_t t = 0; t < blocks.size(); ++t) {
    if (omegas[t].rows() != k || omegas[t].cols() != k)
      throw std::invalid_argument("solver: omega dimension mismatch");
    stacked.block(static_cast<Eigen::Index>(t) * k * n, 0, k * n, k * n) =
        kron(eye_k, blocks[t]) - kron(omegas[t], eye_n);
  }
  std::vector<Vector> null = null_space(stacked, tol);

  IntertwinerSolution sol;
  sol.omega_label = omega_label;
  sol.omega_dim = k;
  sol.multiplicity = static_cast<int>(null.size());
  // Scale each multiplet so the mean component Frobenius norm is 1; the
  // trace-normalization constant of a full multiplet is then k/d.
  double scale = std::sqrt(static_cast<double>(k));
  for (const Vector& v : null) {
    std::vector<Matrix> multiplet;
    for (int a = 0; a < k; ++a) {
      multiplet.push_back(devectorize(scale * v.segment(a * n, n), d, d));
    }
    sol.multiplets.push_back(std::move(multiplet));
  }
  for (const Vector& v : null) {
    for (size_t t = 0; t < blocks.size(); ++t) {
      Vector r = (kron(eye_k, blocks[t]) - kron(omegas[t], eye_n)) * v;
      sol.residual = std::max(sol.residual, r.norm());
    }
  }
  return sol;
}

void require_same_group(const FiniteGroupRep& a, const FiniteGroupRep& b) {
  if (a.order != b.order || a.mult_table != b.mult_table)
    throw std::invalid_argument("solver: representations of different groups");
}

}  // namespace

IntertwinerSolution solve_intertwiners(const FiniteGroupRep& d1, const FiniteGroupRep& d2,
                                       const FiniteGroupRep& omega, double tol) {
  require_same_group(d1, d2);
  require_same_group(d1, omega);
  if (d1.dim != d2.dim) throw std::invalid_argument("solver: d1/d2 dimension mismatch");
  int d = d1.dim;
  std::vector<Matrix> blocks, omegas;
  for (int idx : d1.generator_indices) {
    // |D2(g^-1) A D1(g)> = (D2(g)^dag (x) D1(g)^T)|A> for unitary D2.
    blocks.push_back(kron(d2.elements[idx].adjoint(), d1.elements[idx].transpose()));
  }
  for (int idx : omega.generator_indices) omegas.push_back(omega.elements[idx]);
  return solve_stacked(blocks, omegas, omega.name, d, tol);
}

IntertwinerSolution solve_intertwiners(const LieAlgebraRep& d1, const LieAlgebraRep& d2,
                                       const std::vector<Matrix>& omega_gens,
                                       const std::string& omega_label, double tol) {
  if (d1.generators.size() != d2.generators.size() ||
      d1.generators.size() != omega_gens.size())
    throw std::invalid_argument("solver: generator count mismatch");
  if (d1.dim != d2.dim) throw std::invalid_argument("solver: d1/d2 dimension mismatch");
  int d = d1.dim;
  Matrix eye = Matrix::Identity(d, d);
  std::vector<Matrix> blocks;
  for (size_t n = 0; n < d1.generators.size(); ++n)
    blocks.push_back(kron(eye, d1.generators[n].transpose()) - kron(d2.generators[n], eye));
  return solve_stacked(blocks, omega_gens, omega_label, d, tol);
}

IntertwinerSolution solve_symmetric(const FiniteGroupRep& d, const FiniteGroupRep& omega,
                                    double tol) {
  require_same_group(d, omega);
  int dim = d.dim;
  Matrix eye = Matrix::Identity(dim, dim);
  std::vector<Matrix> blocks, omegas;
  for (int idx : d.generator_indices) blocks.push_back(kron(eye, d.elements[idx].transpose()));
  for (int idx : omega.generator_indices) omegas.push_back(omega.elements[idx]);
  return solve_stacked(blocks, omegas, omega.name, dim, tol);
}

Channel normalize_tp(const std::vector<Matrix>& kraus, double tol, std::string label) {
  if (kraus.empty()) throw std::invalid_argument("normalize_tp: empty Kraus list");
  int d = static_cast<int>(kraus[0].rows());
  Matrix s = Matrix::Zero(d, d);
  for (const Matrix& a : kraus) s += a.adjoint() * a;
  double c = s.trace().real() / d;
  if (c <= tol) throw std::invalid_argument("normalize_tp: vanishing Kraus sum");
  if ((s - c * Matrix::Identity(d, d)).norm() > tol * std::max(1.0, s.norm()))
    throw std::invalid_argument("normalize_tp: sum A^dag A is not proportional to I");
  std::vector<Matrix> scaled;
  scaled.reserve(kraus.size());
  for (const Matrix& a : kraus) scaled.push_back(a / std::sqrt(c));
  return make_channel(d, std::move(scaled), std::move(label));
}

CovarianceCheck check_covariance(const Channel& ch, const std::vector<Matrix>& d1_elems,
                                 const std::vector<Matrix>& d2_elems, double tol,
                                 unsigned long long seed, int n_states) {
  if (d1_elems.size() != d2_elems.size() || d1_elems.empty())
    throw std::invalid_argument("check_covariance: element lists mismatch");
  Rng rng(seed);
  CovarianceCheck result;
  std::vector<Matrix> states;
  for (int s = 0; s < n_states; ++s) states.push_back(random_density(ch.d, rng));
  for (size_t g = 0; g < d1_elems.size(); ++g) {
    const Matrix& u1 = d1_elems[g];
    const Matrix& u2 = d2_elems[g];
    for (const Matrix& rho : states) {
      Matrix lhs = u2 * covchan::apply(ch, rho) * u2.adjoint();
      Matrix rhs = covchan::apply(ch, u1 * rho * u1.adjoint());
      result.max_residual = std::max(result.max_residual, (lhs - rhs).norm());
    }
  }
  result.ok = result.max_residual <= tol;
  return result;
}

CovarianceCheck check_covariance(const Channel& ch, const FiniteGroupRep& d1,
                                 const FiniteGroupRep& d2, double tol, unsigned long long seed,
                                 int n_states) {
  require_same_group(d1, d2);
  return check_covariance(ch, d1.generators(), d2.generators(), tol, seed, n_states);
}

CovarianceCheck check_covariance(const Channel& ch, const LieAlgebraRep& d1,
                                 const LieAlgebraRep& d2, double tol, unsigned long long seed,
                                 int n_states) {
  if (d1.generators.size() != d2.generators.size())
    throw std::invalid_argument("check_covariance: generator count mismatch");
  static const double angles[3] = {0.3, 0.7, 1.1};
  std::vector<Matrix> u1, u2;
  for (size_t n = 0; n < d1.generators.size(); ++n)
    for (double theta : angles) {
      u1.push_back(exp_i(d1.generators[n], theta));
      u2.push_back(exp_i(d2.generators[n], theta));
    }
  return check_covariance(ch, u1, u2, tol, seed, n_states);
}

CovarianceCheck check_symmetry(const Channel& ch, const std::vector<Matrix>& elems, double tol,
                               unsigned long long seed, int n_states) {
  if (elems.empty()) throw std::invalid_argument("check_symmetry: no elements");
  Rng rng(seed);
  CovarianceCheck result;
  std::vector<Matrix> states;
  for (int s = 0; s < n_states; ++s) states.push_back(random_density(ch.d, rng));
  for (const Matrix& u : elems)
    for (const Matrix& rho : states) {
      Matrix lhs = covchan::apply(ch, u * rho * u.adjoint());
      Matrix rhs = covchan::apply(ch, rho);
      result.max_residual = std::max(result.max_residual, (lhs - rhs).norm());
    }
  result.ok = result.max_residual <= tol;
  return result;
}

CovarianceCheck check_symmetry(const Channel& ch, const FiniteGroupRep& d, double tol,
                               unsigned long long seed, int n_states) {
  return check_symmetry(ch, d.generators(), tol, seed, n_states);
}

}  // namespace covchan
