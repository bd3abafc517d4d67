#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

namespace covchan {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Rng = std::mt19937_64;

inline constexpr double kHermTol = 1e-9;
inline constexpr double kNullTol = 1e-9;
inline constexpr unsigned long long kDefaultSeed = 20240915ULL;

// Row-major vectorization: entry (i*cols + j) = A(i, j).
// Satisfies |B A> = (B (x) I)|A> and |A B> = (I (x) B^T)|A>.
Vector vectorize(const Matrix& a);
Matrix devectorize(const Vector& v, int rows, int cols);

Matrix kron(const Matrix& a, const Matrix& b);

struct EigResult {
  RealVector values;  // ascending
  Matrix vectors;     // columns, phase-fixed
};

// Eigendecomposition of a Hermitian matrix. Throws if the input deviates
// from Hermiticity by more than herm_tol relative to max(1, ||A||_F).
EigResult hermitian_eig(const Matrix& a, double herm_tol = kHermTol);

// Orthonormal basis of {v : ||M v|| <= tol * sigma_max(M)}. The basis is
// canonical for the subspace (independent of how the span was produced):
// pivoted Gram-Schmidt on the columns of the orthogonal projector, then a
// deterministic phase convention.
std::vector<Vector> null_space(const Matrix& m, double tol = kNullTol);

// Make the first component with |v_i| > 1e-8 real positive.
void fix_phase(Vector& v);

// Canonical orthonormal basis of span(vectors); input need not be orthonormal.
std::vector<Vector> canonical_subspace_basis(const std::vector<Vector>& span, int ambient_dim);

Matrix random_matrix(int d, Rng& rng);   // complex Ginibre
Matrix random_unitary(int d, Rng& rng);  // Haar via QR
Matrix random_density(int d, Rng& rng);  // G G^dag normalized
Vector random_pure(int d, Rng& rng);

bool approx_equal(const Matrix& a, const Matrix& b, double tol);

}  // namespace covchan
