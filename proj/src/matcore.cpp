#include "covchan/matcore.hpp"

#include <algorithm>
#include <stdexcept>

namespace covchan {

Vector vectorize(const Matrix& a) {
  Vector v(a.rows() * a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) v(i * a.cols() + j) = a(i, j);
  return v;
}

Matrix devectorize(const Vector& v, int rows, int cols) {
  if (v.size() != static_cast<Eigen::Index>(rows) * cols)
    throw std::invalid_argument("devectorize: size mismatch");
  Matrix a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a(i, j) = v(i * cols + j);
  return a;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

void fix_phase(Vector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    double m = std::abs(v(i));
    if (m > 1e-8) {
      v *= std::conj(v(i)) / m;
      return;
    }
  }
}

EigResult hermitian_eig(const Matrix& a, double herm_tol) {
  if (a.rows() != a.cols()) throw std::invalid_argument("hermitian_eig: not square");
  double scale = std::max(1.0, a.norm());
  if ((a - a.adjoint()).norm() > herm_tol * scale)
    throw std::invalid_argument("hermitian_eig: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (a + a.adjoint()));
  if (es.info() != Eigen::Success) throw std::runtime_error("hermitian_eig: solver failed");
  EigResult r;
  r.values = es.eigenvalues();
  r.vectors = es.eigenvectors();
  for (Eigen::Index k = 0; k < r.vectors.cols(); ++k) {
    Vector col = r.vectors.col(k);
    fix_phase(col);
    r.vectors.col(k) = col;
  }
  return r;
}

std::vector<Vector> canonical_subspace_basis(const std::vector<Vector>& span, int ambient_dim) {
  if (span.empty()) return {};
  Matrix raw(ambient_dim, static_cast<Eigen::Index>(span.size()));
  for (size_t k = 0; k < span.size(); ++k) raw.col(static_cast<Eigen::Index>(k)) = span[k];
  // Projector onto the subspace; basis-independent by construction.
  Eigen::JacobiSVD<Matrix> svd(raw, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > 1e-10 * std::max(1.0, sv(0))) ++rank;
  if (rank == 0) return {};
  Matrix proj = Matrix::Zero(ambient_dim, ambient_dim);
  for (int k = 0; k < rank; ++k) proj += svd.matrixU().col(k) * svd.matrixU().col(k).adjoint();

  // Pivoted Gram-Schmidt on the projector columns: depends only on the
  // subspace, so the basis is reproducible regardless of input ordering.
  Matrix work = proj;
  std::vector<Vector> basis;
  for (int step = 0; step < rank; ++step) {
    int pivot = -1;
    double best = -1.0;
    for (Eigen::Index c = 0; c < work.cols(); ++c) {
      double n = work.col(c).norm();
      if (n > best + 1e-12) {
        best = n;
        pivot = static_cast<int>(c);
      }
    }
    if (pivot < 0 || best < 1e-12) break;
    Vector v = work.col(pivot) / best;
    fix_phase(v);
    basis.push_back(v);
    work -= v * (v.adjoint() * work);
  }
  return basis;
}

std::vector<Vector> null_space(const Matrix& m, double tol) {
  if (m.size() == 0) throw std::invalid_argument("null_space: empty matrix");
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() > 0 ? sv(0) : 0.0;
  std::vector<Vector> raw;
  Eigen::Index n = m.cols();
  for (Eigen::Index k = 0; k < n; ++k) {
    double s = k < sv.size() ? sv(k) : 0.0;
    if (s <= tol * smax) raw.push_back(svd.matrixV().col(k));
  }
  return canonical_subspace_basis(raw, static_cast<int>(n));
}

Matrix random_matrix(int d, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = Complex(g(rng), g(rng));
  return a;
}

Matrix random_unitary(int d, Rng& rng) {
  Matrix a = random_matrix(d, rng);
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < d; ++k) {
    Complex rv = r(k, k);
    q.col(k) *= std::abs(rv) > 0 ? rv / std::abs(rv) : 1.0;
  }
  return q;
}

Matrix random_density(int d, Rng& rng) {
  Matrix g = random_matrix(d, rng);
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

Vector random_pure(int d, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector v(d);
  for (int i = 0; i < d; ++i) v(i) = Complex(g(rng), g(rng));
  return v / v.norm();
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).norm() <= tol;
}

}  // namespace covchan
