#include "covchan/quditbasis.hpp"

#include <cmath>
#include <stdexcept>

namespace covchan {

HermitianBasis gell_mann_basis(int d) {
  if (d < 2) throw std::invalid_argument("gell_mann_basis: need d >= 2");
  HermitianBasis b;
  b.d = d;
  const Complex I(0.0, 1.0);
  b.gammas.push_back(Matrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));
  const double s = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Matrix m = Matrix::Zero(d, d);
      m(i, j) = s;
      m(j, i) = s;
      b.gammas.push_back(m);
    }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Matrix m = Matrix::Zero(d, d);
      m(i, j) = -I * s;
      m(j, i) = I * s;
      b.gammas.push_back(m);
    }
  for (int l = 1; l < d; ++l) {
    Matrix m = Matrix::Zero(d, d);
    double f = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int j = 0; j < l; ++j) m(j, j) = f;
    m(l, l) = -static_cast<double>(l) * f;
    b.gammas.push_back(m);
  }
  return b;
}

CoherenceVector coherence_vector(const Matrix& rho, double tol) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("coherence_vector: not square");
  int d = static_cast<int>(rho.rows());
  if ((rho - rho.adjoint()).norm() > tol * std::max(1.0, rho.norm()))
    throw std::invalid_argument("coherence_vector: input is not Hermitian");
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > tol)
    throw std::invalid_argument("coherence_vector: input does not have unit trace");
  HermitianBasis b = gell_mann_basis(d);
  CoherenceVector v;
  v.d = d;
  v.components.resize(d * d);
  for (int mu = 0; mu < d * d; ++mu) {
    Complex c = (b.gammas[mu] * rho).trace();
    if (std::abs(c.imag()) > 1e-10)
      throw std::runtime_error("coherence_vector: non-real component");
    v.components(mu) = c.real();
  }
  return v;
}

DensityResult density_from_coherence(const CoherenceVector& v) {
  int d = v.d;
  if (d < 2 || v.components.size() != static_cast<Eigen::Index>(d) * d)
    throw std::invalid_argument("density_from_coherence: bad coherence vector");
  HermitianBasis b = gell_mann_basis(d);
  Matrix rho = Matrix::Zero(d, d);
  for (int mu = 0; mu < d * d; ++mu) rho += v.components(mu) * b.gammas[mu];
  DensityResult r;
  r.rho = rho;
  EigResult eig = hermitian_eig(rho);
  r.min_eigenvalue = eig.values(0);
  r.positivity_warning = r.min_eigenvalue < -1e-10;
  return r;
}

}  // namespace covchan
