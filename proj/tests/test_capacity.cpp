#include <cmath>

#include "covchan/capacity.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace covchan;

namespace {

const double kLog3 = std::log2(3.0);

Channel family(const std::string& name, std::initializer_list<std::pair<const char*, double>> kv) {
  ParamMap p;
  for (const auto& [k, v] : kv) p[k] = Complex(v, 0.0);
  return make_family(name, p).channel;
}

}  // namespace

TEST_CASE("von Neumann entropy on frozen spectra") {
  Matrix pure = Matrix::Zero(3, 3);
  pure(1, 1) = 1.0;
  CHECK(std::abs(von_neumann_entropy(pure)) <= 1e-12);
  CHECK(std::abs(von_neumann_entropy(Matrix::Identity(3, 3) / 3.0) - kLog3) <= 1e-12);
  Matrix half = Matrix::Zero(3, 3);
  half(0, 0) = 0.5;
  half(1, 1) = 0.25;
  half(2, 2) = 0.25;
  CHECK(std::abs(von_neumann_entropy(half) - 1.5) <= 1e-12);  // in bits
  // unitary invariance
  Rng rng(3);
  Matrix u = random_unitary(3, rng);
  CHECK(std::abs(von_neumann_entropy(u * half * u.adjoint()) - 1.5) <= 1e-12);
}

TEST_CASE("von Neumann entropy rejects non-states") {
  Matrix neg = Matrix::Zero(3, 3);
  neg(0, 0) = 1.1;
  neg(1, 1) = -0.1;
  CHECK_THROWS(von_neumann_entropy(neg));
  CHECK_THROWS(von_neumann_entropy(Matrix::Identity(3, 3)));  // trace 3
}

TEST_CASE("Holevo quantity of frozen ensembles") {
  Channel id = family("identity", {});
  Ensemble basis;
  for (int i = 0; i < 3; ++i) {
    Matrix rho = Matrix::Zero(3, 3);
    rho(i, i) = 1.0;
    basis.states.push_back(rho);
    basis.probs.push_back(1.0 / 3.0);
  }
  CHECK(std::abs(holevo_quantity(id, basis) - kLog3) <= 1e-12);
  // single-state ensembles carry no information
  Ensemble single{{Matrix::Identity(3, 3) / 3.0}, {1.0}};
  CHECK(std::abs(holevo_quantity(id, single)) <= 1e-12);
  // the adjoint-multiplet family: uniform basis ensemble meets the capacity formula
  double p = 0.3;
  Channel ch = family("su3-8", {{"p", p}});
  double expect = kLog3 + (1.0 - p) * std::log2(1.0 - p) + p * std::log2(p / 2.0);
  CHECK(std::abs(holevo_quantity(ch, basis) - expect) <= 1e-10);
  CHECK_THROWS(holevo_quantity(id, Ensemble{{Matrix::Identity(3, 3) / 3.0}, {0.5, 0.5}}));
}

TEST_CASE("minimum output entropy of transparent and opaque channels") {
  MinEntropyResult id_res = min_output_entropy(family("identity", {}), 8);
  CHECK(std::abs(id_res.s_min) <= 1e-9);
  CHECK(id_res.restarts_converged >= 1);
  MinEntropyResult mix_res = min_output_entropy(family("mixing", {}), 4);
  CHECK(std::abs(mix_res.s_min - kLog3) <= 1e-9);
  CHECK(std::abs(mix_res.minimizer.norm() - 1.0) <= 1e-10);
}

TEST_CASE("minimum output entropy requires a physical channel") {
  Channel bad = make_family("su3-8", {{"p", Complex(0.5, 0.0)}}).channel;
  bad.weights = std::vector<double>(bad.kraus.size(), 1.0);
  bad.weights[0] = -1.0;  // formally signed, no longer CP
  CHECK_THROWS_AS(min_output_entropy(bad), std::invalid_argument);
}

TEST_CASE("capacity of the adjoint-multiplet family matches its output spectrum") {
  double p = 0.5;
  CapacityReport rep = covariant_capacity(family("su3-8", {{"p", p}}));
  // best output spectrum (1-p, p/2, p/2) gives sMin = 1.5 bits at p = 1/2
  CHECK(std::abs(rep.s_min - 1.5) <= 1e-7);
  CHECK(std::abs(rep.capacity - (kLog3 - 1.5)) <= 1e-7);
  CHECK(rep.method == "optimizer");
  CHECK(rep.restarts_converged >= 1);
  CHECK(std::abs(rep.capacity - closed_form_capacity("su3-8", {{"p", Complex(p, 0.0)}})) <= 1e-6);
}

TEST_CASE("capacity of the transpose-multiplet family at its endpoints") {
  CapacityReport one = covariant_capacity(family("su3-6", {{"p", 1.0}}));
  CHECK(std::abs(one.capacity - (kLog3 - 1.5)) <= 1e-6);
  // p = 2/3 is complete mixing: zero capacity
  CapacityReport dead = covariant_capacity(family("su3-6", {{"p", 2.0 / 3.0}}));
  CHECK(std::abs(dead.capacity) <= 1e-9);
  CapacityReport id = covariant_capacity(family("identity", {}));
  CHECK(std::abs(id.capacity - kLog3) <= 1e-9);
}

TEST_CASE("closed forms match frozen values and respect the CP window") {
  // log2(3) - 0.5 - 0.75 log2(8/3), evaluated independently
  double expect8 = kLog3 + 0.25 * std::log2(0.25) + 0.75 * std::log2(0.375);
  CHECK(std::abs(closed_form_capacity("su3-8", {{"p", Complex(0.75, 0.0)}}) - expect8) <= 1e-12);
  CHECK(std::abs(expect8 - 0.023684376262023) <= 1e-12);
  double expect6 = kLog3 + 0.5 * std::log2(0.5) + 0.5 * std::log2(0.25);
  CHECK(std::abs(closed_form_capacity("su3-6", {{"p", Complex(1.0, 0.0)}}) - expect6) <= 1e-12);
  CHECK(std::abs(closed_form_capacity("su3-6", {{"p", Complex(2.0 / 3.0, 0.0)}})) <= 1e-12);
  CHECK_THROWS(closed_form_capacity("su3-8", {{"p", Complex(0.9, 0.0)}}));
  CHECK(std::isfinite(closed_form_capacity("su3-8", {{"p", Complex(0.9, 0.0)}}, true)));
  CHECK_THROWS(closed_form_capacity("identity", {}));
  // uniform coset weights kill the shift-clock capacity
  ParamMap q;
  q["m"] = Complex(0.0, 0.0);
  q["n"] = Complex(1.0, 0.0);
  q["q0"] = q["q1"] = q["q2"] = Complex(1.0 / 3.0, 0.0);
  CHECK(std::abs(closed_form_capacity("symmetric-pauli", q)) <= 1e-12);
  q["q0"] = Complex(1.0, 0.0);
  q["q1"] = q["q2"] = Complex(0.0, 0.0);
  CHECK(std::abs(closed_form_capacity("symmetric-pauli", q) - kLog3) <= 1e-12);
}

TEST_CASE("coset-weighted mixture capacity equals log2(3) minus the weight entropy") {
  ParamMap q;
  q["m"] = Complex(1.0, 0.0);
  q["n"] = Complex(0.0, 0.0);
  q["q0"] = Complex(0.6, 0.0);
  q["q1"] = Complex(0.3, 0.0);
  q["q2"] = Complex(0.1, 0.0);
  Channel ch = make_family("symmetric-pauli", q).channel;
  double h = -(0.6 * std::log2(0.6) + 0.3 * std::log2(0.3) + 0.1 * std::log2(0.1));
  CapacityReport rep = covariant_capacity(ch);
  CHECK(std::abs(rep.capacity - (kLog3 - h)) <= 1e-6);
  CHECK(std::abs(rep.capacity - closed_form_capacity("symmetric-pauli", q)) <= 1e-6);
  // the minimizer is an eigenstate of the generating shift X^1 Z^0
  Matrix g = pauli_op(3, 1, 0);
  Eigen::ComplexEigenSolver<Matrix> es(g);
  double best = 0.0;
  for (int i = 0; i < 3; ++i) {
    Vector v = es.eigenvectors().col(i);
    best = std::max(best, std::norm(v.dot(rep.minimizer)));
  }
  CHECK(best >= 1.0 - 1e-6);
}

TEST_CASE("group averaging certifies the covariant-capacity argument") {
  // shift-clock conjugation average sends everything to the mixed state
  FiniteGroupRep pg = pauli_group(3);
  ParamMap w;
  w["p01"] = Complex(0.5, 0.0);
  w["p20"] = Complex(0.5, 0.0);
  Channel ch = make_family("pauli", w).channel;
  for (const Matrix& rho : testutil::densities(3, 5)) {
    CHECK(group_average_check(ch, pg, pg, rho) <= 1e-10);
  }
  // a trivial group certifies nothing: the residual stays macroscopic
  FiniteGroupRep triv = cyclic_rep(1, Matrix::Identity(3, 3), "trivial");
  Channel id = family("identity", {});
  Matrix pure = Matrix::Zero(3, 3);
  pure(0, 0) = 1.0;
  CHECK(group_average_check(id, triv, triv, pure) > 0.5);
}

TEST_CASE("Holevo quantity is maximal on the optimal covariant ensemble") {
  // for a covariant channel, the uniform orbit of the entropy minimizer
  // achieves log2(3) - sMin exactly
  Channel ch = family("su3-6", {{"p", 0.4}});
  CapacityReport rep = covariant_capacity(ch);
  Ensemble orbit;
  FiniteGroupRep pg = pauli_group(3);
  Matrix opt = rep.minimizer * rep.minimizer.adjoint();
  for (const Matrix& u : pg.elements) {
    orbit.states.push_back(u * opt * u.adjoint());
    orbit.probs.push_back(1.0 / 9.0);
  }
  double chi = holevo_quantity(ch, orbit);
  CHECK(std::abs(chi - rep.capacity) <= 1e-6);
}
