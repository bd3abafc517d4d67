#include "covchan/channel.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace covchan;

namespace {

Matrix unit_entry(int d, int i, int j) {
  Matrix m = Matrix::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

Channel random_cp_channel(int d, int n_kraus, unsigned long long seed) {
  Rng rng(seed);
  std::vector<Matrix> kraus;
  for (int a = 0; a < n_kraus; ++a) kraus.push_back(random_matrix(d, rng) / double(n_kraus));
  return make_channel(d, kraus, "random-cp");
}

Channel qutrit_damping(double g) {
  Matrix k0 = Matrix::Zero(3, 3);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - g);
  k0(2, 2) = std::sqrt(1.0 - g);
  Matrix k1 = std::sqrt(g) * unit_entry(3, 0, 1);
  Matrix k2 = std::sqrt(g) * unit_entry(3, 0, 2);
  return make_channel(3, {k0, k1, k2}, "damping");
}

}  // namespace

TEST_CASE("identity channel classifies as CP, TP and unital") {
  Channel id = make_channel(3, {Matrix::Identity(3, 3)}, "id");
  Classification cls = classify(id);
  CHECK(cls.cp);
  CHECK(cls.tp);
  CHECK(cls.unital);
  CHECK(cls.tp_residual <= 1e-15);
  // Choi spectrum of the identity: one maximally entangled direction
  EigResult eig = hermitian_eig(choi(id).m);
  CHECK(std::abs(eig.values(8) - 3.0) <= 1e-12);
  CHECK(std::abs(eig.values(7)) <= 1e-12);
}

TEST_CASE("complete mixing has a flat Choi spectrum") {
  std::vector<Matrix> kraus;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) kraus.push_back(unit_entry(3, i, j) / std::sqrt(3.0));
  Channel mix = make_channel(3, kraus, "mixing");
  EigResult eig = hermitian_eig(choi(mix).m);
  for (int k = 0; k < 9; ++k) CHECK(std::abs(eig.values(k) - 1.0 / 3.0) <= 1e-12);
  for (const Matrix& rho : testutil::densities(3, 5)) {
    CHECK(testutil::diff(covchan::apply(mix, rho), Matrix::Identity(3, 3) / 3.0) <= 1e-12);
  }
}

TEST_CASE("apply and apply_choi agree on random channels and states") {
  Channel ch = random_cp_channel(3, 4, 21);
  ChoiMatrix j = choi(ch);
  for (const Matrix& rho : testutil::densities(3, 10)) {
    CHECK(testutil::diff(covchan::apply(ch, rho), apply_choi(j, rho)) <= 1e-12);
  }
}

TEST_CASE("amplitude damping toward level 0 is TP but not unital") {
  Channel ch = qutrit_damping(0.3);
  Classification cls = classify(ch);
  CHECK(cls.cp);
  CHECK(cls.tp);
  CHECK_FALSE(cls.unital);
  CHECK(cls.unital_residual > 0.1);
}

TEST_CASE("affine representation matches the Kraus action") {
  Channel ch = qutrit_damping(0.45);
  AffineRep rep = affine_rep(ch);
  REQUIRE(rep.lambda_full.rows() == 9);
  // row 0 pattern: (1, 0, ..., 0) for a TP map
  CHECK(std::abs(rep.lambda_full(0, 0) - 1.0) <= 1e-12);
  CHECK(rep.lambda_full.row(0).tail(8).norm() <= 1e-12);
  // non-unital: the translation block is nonzero
  CHECK(rep.t_vec.norm() > 1e-3);
  for (const Matrix& rho : testutil::densities(3, 25)) {
    CoherenceVector out = apply_affine(rep, coherence_vector(rho));
    CHECK(testutil::diff(density_from_coherence(out).rho, covchan::apply(ch, rho)) <= 1e-10);
  }
}

TEST_CASE("Choi to Kraus round trip preserves the map") {
  Channel ch = random_cp_channel(3, 5, 33);
  Channel back = kraus_from_choi(choi(ch));
  CHECK(channels_equal(ch, back, 1e-10));
  CHECK(channel_distance(ch, back) <= 1e-10);
}

TEST_CASE("kraus_from_choi rejects a non-CP map") {
  // E(rho) = rho^T: its Choi matrix is the swap operator, eigenvalues +-1,
  // so no completely positive realization exists.
  Matrix j = Matrix::Zero(9, 9);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      Matrix eik = unit_entry(3, i, k);
      j += kron(eik.transpose(), eik);
    }
  ChoiMatrix jm{3, j};
  Classification cls = classify_choi(jm);
  CHECK_FALSE(cls.cp);
  CHECK(cls.tp);
  CHECK(std::abs(cls.min_choi_eig + 1.0) <= 1e-12);
  CHECK_THROWS(kraus_from_choi(jm));
}

TEST_CASE("unitary mixing of the Kraus list leaves the channel unchanged") {
  Channel ch = random_cp_channel(3, 4, 55);
  Rng rng(56);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix om = random_unitary(4, rng);
    Channel mixed;
    mixed.d = 3;
    mixed.label = "mixed";
    for (int b = 0; b < 4; ++b) {
      Matrix kb = Matrix::Zero(3, 3);
      for (int a = 0; a < 4; ++a) kb += om(b, a) * ch.kraus[a];
      mixed.kraus.push_back(kb);
    }
    CHECK(channels_equal(ch, mixed, 1e-10));
  }
}

TEST_CASE("convex_combine averages the Choi matrices") {
  Channel id = make_channel(3, {Matrix::Identity(3, 3)}, "id");
  std::vector<Matrix> mix_kraus;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) mix_kraus.push_back(unit_entry(3, i, j) / std::sqrt(3.0));
  Channel mix = make_channel(3, mix_kraus, "mixing");
  Channel combo = convex_combine({id, mix}, {0.25, 0.75});
  for (const Matrix& rho : testutil::densities(3, 10)) {
    Matrix expect = 0.25 * rho + 0.75 * Matrix::Identity(3, 3) / 3.0 * rho.trace();
    CHECK(testutil::diff(covchan::apply(combo, rho), expect) <= 1e-12);
  }
  CHECK(classify(combo).tp);
}

TEST_CASE("signed weights carry formally non-CP maps") {
  Matrix x = Matrix::Zero(3, 3);
  x(0, 1) = 1.0;
  x(1, 2) = 1.0;
  x(2, 0) = 1.0;  // cyclic shift, HS-orthogonal to the identity
  Channel ch;
  ch.d = 3;
  ch.kraus = {Matrix::Identity(3, 3), x};
  ch.weights = {1.5, -0.5};
  ch.label = "signed";
  CHECK_FALSE(ch.unit_weights());
  for (const Matrix& rho : testutil::densities(3, 5)) {
    CHECK(testutil::diff(covchan::apply(ch, rho), 1.5 * rho - 0.5 * x * rho * x.adjoint()) <= 1e-12);
  }
  Classification cls = classify(ch);
  CHECK(cls.tp);
  CHECK_FALSE(cls.cp);
  CHECK(std::abs(cls.min_choi_eig + 1.5) <= 1e-12);  // -0.5 on a norm-3 Choi direction
}

TEST_CASE("make_channel validates shapes") {
  CHECK_THROWS(make_channel(3, {}, "empty"));
  CHECK_THROWS(make_channel(3, {Matrix::Identity(2, 2)}, "wrong-dim"));
  CHECK_THROWS(make_channel(3, {Matrix::Identity(3, 3)}, "bad-weights", {1.0, 2.0}));
}
