#include <complex>

#include "covchan/matcore.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace covchan;

TEST_CASE("vectorization is row-major") {
  Matrix a(2, 3);
  a << 1, 2, 3, 4, 5, 6;
  Vector v = vectorize(a);
  REQUIRE(v.size() == 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) CHECK(std::abs(v(3 * i + j) - a(i, j)) == 0.0);
  CHECK(testutil::diff(devectorize(v, 2, 3), a) == 0.0);
}

TEST_CASE("vectorization product identities hold for 100 random pairs") {
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix a = random_matrix(3, rng), b = random_matrix(3, rng);
    Matrix id = Matrix::Identity(3, 3);
    CHECK((vectorize(b * a) - kron(b, id) * vectorize(a)).norm() <= 1e-12);
    CHECK((vectorize(a * b) - kron(id, b.transpose()) * vectorize(a)).norm() <= 1e-12);
    CHECK((vectorize(b * a * b.transpose()) - kron(b, b) * vectorize(a)).norm() <= 1e-12);
  }
}

TEST_CASE("kron matches the hand-expanded 2x2 example") {
  Matrix a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 1, 1, 0;
  Matrix k = kron(a, b);
  REQUIRE(k.rows() == 4);
  REQUIRE(k.cols() == 4);
  Matrix expect(4, 4);
  expect << 0, 1, 0, 2, 1, 0, 2, 0, 0, 3, 0, 4, 3, 0, 4, 0;
  CHECK(testutil::diff(k, expect) == 0.0);
}

TEST_CASE("hermitian_eig reconstructs the input with ascending eigenvalues") {
  Rng rng(2);
  Matrix g = random_matrix(4, rng);
  Matrix h = g + g.adjoint();
  EigResult eig = hermitian_eig(h);
  REQUIRE(eig.values.size() == 4);
  for (int i = 0; i + 1 < 4; ++i) CHECK(eig.values(i) <= eig.values(i + 1));
  Matrix rebuilt = eig.vectors * eig.values.asDiagonal().toDenseMatrix().cast<Complex>() *
                   eig.vectors.adjoint();
  CHECK(testutil::diff(rebuilt, h) <= 1e-12 * h.norm());
  CHECK(testutil::diff(eig.vectors.adjoint() * eig.vectors, Matrix::Identity(4, 4)) <= 1e-12);
  CHECK_THROWS(hermitian_eig(g));  // generic matrix is not Hermitian
}

TEST_CASE("null_space finds the kernel exactly on a rank-2 example") {
  Matrix m = Matrix::Zero(2, 3);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  auto ns = null_space(m);
  REQUIRE(ns.size() == 1);
  Vector e2 = Vector::Zero(3);
  e2(2) = 1.0;
  CHECK((ns[0] - e2).norm() <= 1e-14);  // phase convention makes it exactly e2
}

TEST_CASE("null_space vectors annihilate the matrix and are orthonormal") {
  Rng rng(3);
  // rank-3 map on C^5: 3 random rows stacked with 2 zero rows
  Matrix m = Matrix::Zero(5, 5);
  for (int r = 0; r < 3; ++r) m.row(r) = random_matrix(5, rng).row(0);
  auto ns = null_space(m);
  REQUIRE(ns.size() == 2);
  for (size_t i = 0; i < ns.size(); ++i) {
    CHECK((m * ns[i]).norm() <= 1e-10 * m.norm());
    for (size_t j = 0; j < ns.size(); ++j) {
      Complex ip = ns[i].adjoint() * ns[j];
      CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) <= 1e-12);
    }
  }
  CHECK(null_space(Matrix::Identity(4, 4)).empty());
}

TEST_CASE("canonical_subspace_basis is independent of the spanning set") {
  Rng rng(4);
  Vector v1 = random_pure(5, rng), v2 = random_pure(5, rng);
  std::vector<Vector> span_a = {v1, v2};
  Complex phase = std::polar(1.0, 0.7);
  std::vector<Vector> span_b = {phase * (2.5 * v2 + 0.3 * v1), Complex(0.0, 1.0) * v1,
                                v1 + v2};  // same subspace, redundant and rephased
  auto ba = canonical_subspace_basis(span_a, 5);
  auto bb = canonical_subspace_basis(span_b, 5);
  REQUIRE(ba.size() == 2);
  REQUIRE(bb.size() == 2);
  for (size_t i = 0; i < 2; ++i) CHECK((ba[i] - bb[i]).norm() <= 1e-10);
}

TEST_CASE("fix_phase rotates the first significant component to the positive axis") {
  Vector v(3);
  v << Complex(0.0, 0.0), Complex(0.0, 2.0), Complex(1.0, 1.0);
  fix_phase(v);
  CHECK(std::abs(v(1).imag()) <= 1e-15);
  CHECK(v(1).real() > 0.0);
  CHECK(std::abs(v.norm() - std::sqrt(6.0)) <= 1e-12);
}

TEST_CASE("random matrix generators are deterministic and well-formed") {
  Rng r1(9), r2(9);
  CHECK(testutil::diff(random_matrix(3, r1), random_matrix(3, r2)) == 0.0);
  Matrix u = random_unitary(3, r1);
  CHECK(testutil::diff(u.adjoint() * u, Matrix::Identity(3, 3)) <= 1e-12);
  Matrix rho = random_density(3, r1);
  CHECK(std::abs(rho.trace() - Complex(1.0, 0.0)) <= 1e-12);
  CHECK(testutil::diff(rho, rho.adjoint()) <= 1e-14);
  CHECK(hermitian_eig(rho).values(0) >= -1e-14);
  CHECK(std::abs(random_pure(4, r1).norm() - 1.0) <= 1e-12);
}

TEST_CASE("approx_equal applies the tolerance to the Frobenius distance") {
  Matrix a = Matrix::Identity(2, 2);
  Matrix b = a;
  b(0, 0) += 1e-8;
  CHECK(approx_equal(a, b, 1e-6));
  CHECK_FALSE(approx_equal(a, b, 1e-10));
}
