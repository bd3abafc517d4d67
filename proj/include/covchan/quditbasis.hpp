#pragma once

#include "covchan/matcore.hpp"

namespace covchan {

// Trace-orthonormal Hermitian basis: gammas[0] = I/sqrt(d), then the
// symmetric pair matrices (i<j in lex order), the antisymmetric ones,
// and the d-1 diagonal ones. tr(G_mu G_nu) = delta_mu_nu.
struct HermitianBasis {
  int d = 0;
  std::vector<Matrix> gammas;
};

HermitianBasis gell_mann_basis(int d);

// Expansion coefficients r_mu = tr(G_mu rho); real for Hermitian rho.
struct CoherenceVector {
  int d = 0;
  RealVector components;  // length d*d, components(0) = 1/sqrt(d) for states
};

CoherenceVector coherence_vector(const Matrix& rho, double tol = 1e-9);

struct DensityResult {
  Matrix rho;
  bool positivity_warning = false;  // eigenvalue below -1e-10
  double min_eigenvalue = 0.0;
};

// Rebuild sum_mu v_mu G_mu. Hermitian and unit trace by construction when
// components(0) = 1/sqrt(d); positivity is only flagged, not enforced.
DensityResult density_from_coherence(const CoherenceVector& v);

}  // namespace covchan
