#include "covchan/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace covchan {

bool Channel::unit_weights() const {
  for (size_t a = 0; a < kraus.size(); ++a)
    if (weight(a) != 1.0) return false;
  return true;
}

Channel make_channel(int d, std::vector<Matrix> kraus, std::string label,
                     std::vector<double> weights) {
  if (d < 2) throw std::invalid_argument("make_channel: need d >= 2");
  if (kraus.empty()) throw std::invalid_argument("make_channel: empty Kraus list");
  for (const Matrix& a : kraus)
    if (a.rows() != d || a.cols() != d)
      throw std::invalid_argument("make_channel: Kraus operator dimension mismatch");
  if (!weights.empty() && weights.size() != kraus.size())
    throw std::invalid_argument("make_channel: weights size mismatch");
  Channel ch;
  ch.d = d;
  ch.kraus = std::move(kraus);
  ch.weights = std::move(weights);
  ch.label = std::move(label);
  return ch;
}

Matrix apply(const Channel& ch, const Matrix& rho) {
  if (rho.rows() != ch.d || rho.cols() != ch.d)
    throw std::invalid_argument("apply: input dimension mismatch");
  Matrix out = Matrix::Zero(ch.d, ch.d);
  for (size_t a = 0; a < ch.kraus.size(); ++a)
    out += ch.weight(a) * ch.kraus[a] * rho * ch.kraus[a].adjoint();
  return out;
}

ChoiMatrix choi(const Channel& ch) {
  int d = ch.d;
  ChoiMatrix j;
  j.d = d;
  j.m = Matrix::Zero(d * d, d * d);
  // J = sum_a w_a |A_a><A_a| in the row-major vectorization.
  for (size_t a = 0; a < ch.kraus.size(); ++a) {
    Vector v = vectorize(ch.kraus[a]);
    j.m += ch.weight(a) * v * v.adjoint();
  }
  return j;
}

Matrix apply_choi(const ChoiMatrix& j, const Matrix& x) {
  int d = j.d;
  if (x.rows() != d || x.cols() != d)
    throw std::invalid_argument("apply_choi: input dimension mismatch");
  Matrix out = Matrix::Zero(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) out(a, b) += j.m(a * d + i, b * d + k) * x(i, k);
  return out;
}

static Classification classify_common(const ChoiMatrix& j, const Matrix& sum_tp,
                                       const Matrix& sum_unital, double tol) {
  Classification c;
  int d = j.d;
  EigResult eig = hermitian_eig(j.m, 1e-8);
  c.min_choi_eig = eig.values(0);
  c.cp = c.min_choi_eig >= -tol;
  Matrix id = Matrix::Identity(d, d);
  c.tp_residual = (sum_tp - id).norm();
  c.unital_residual = (sum_unital - id).norm();
  c.tp = c.tp_residual <= tol;
  c.unital = c.unital_residual <= tol;
  return c;
}

Classification classify(const Channel& ch, double tol) {
  Matrix sum_tp = Matrix::Zero(ch.d, ch.d);
  Matrix sum_unital = Matrix::Zero(ch.d, ch.d);
  for (size_t a = 0; a < ch.kraus.size(); ++a) {
    sum_tp += ch.weight(a) * ch.kraus[a].adjoint() * ch.kraus[a];
    sum_unital += ch.weight(a) * ch.kraus[a] * ch.kraus[a].adjoint();
  }
  return classify_common(choi(ch), sum_tp, sum_unital, tol);
}

Classification classify_choi(const ChoiMatrix& j, double tol) {
  int d = j.d;
  // Partial traces: over the first factor for TP, the second for unitality.
  Matrix tr1 = Matrix::Zero(d, d);
  Matrix tr2 = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j2 = 0; j2 < d; ++j2)
      for (int k = 0; k < d; ++k) {
        tr1(i, j2) += j.m(k * d + i, k * d + j2);
        tr2(i, j2) += j.m(i * d + k, j2 * d + k);
      }
  return classify_common(j, tr1, tr2, tol);
}

AffineRep affine_rep(const Channel& ch) {
  int d = ch.d;
  int n = d * d;
  HermitianBasis b = gell_mann_basis(d);
  AffineRep rep;
  rep.d = d;
  rep.lambda_full.resize(n, n);
  for (int nu = 0; nu < n; ++nu) {
    Matrix img = covchan::apply(ch, b.gammas[nu]);
    for (int mu = 0; mu < n; ++mu) {
      Complex c = (b.gammas[mu] * img).trace();
      if (std::abs(c.imag()) > 1e-10)
        throw std::runtime_error("affine_rep: map is not Hermiticity-preserving");
      rep.lambda_full(mu, nu) = c.real();
    }
  }
  rep.t_vec = rep.lambda_full.block(1, 0, n - 1, 1);
  rep.lambda_block = rep.lambda_full.block(1, 1, n - 1, n - 1);
  return rep;
}

CoherenceVector apply_affine(const AffineRep& rep, const CoherenceVector& v) {
  if (v.d != rep.d) throw std::invalid_argument("apply_affine: dimension mismatch");
  CoherenceVector out;
  out.d = v.d;
  out.components = rep.lambda_full * v.components;
  return out;
}

double channel_distance(const Channel& a, const Channel& b) {
  if (a.d != b.d) throw std::invalid_argument("channel_distance: dimension mismatch");
  return (choi(a).m - choi(b).m).norm();
}

bool channels_equal(const Channel& a, const Channel& b, double tol) {
  return channel_distance(a, b) <= tol;
}

Channel kraus_from_choi(const ChoiMatrix& j, double tol) {
  int d = j.d;
  EigResult eig = hermitian_eig(j.m, 1e-8);
  if (eig.values(0) < -tol)
    throw std::invalid_argument("kraus_from_choi: Choi matrix has a negative eigenvalue");
  std::vector<Matrix> kraus;
  for (Eigen::Index k = eig.values.size() - 1; k >= 0; --k) {
    double lam = eig.values(k);
    if (lam <= tol) continue;
    Vector v = eig.vectors.col(k);
    kraus.push_back(std::sqrt(lam) * devectorize(v, d, d));
  }
  if (kraus.empty()) throw std::invalid_argument("kraus_from_choi: zero map");
  return make_channel(d, std::move(kraus), "from-choi");
}

Channel convex_combine(const std::vector<Channel>& channels, const std::vector<double>& weights) {
  if (channels.empty() || channels.size() != weights.size())
    throw std::invalid_argument("convex_combine: size mismatch");
  int d = channels[0].d;
  double total = 0.0;
  for (double w : weights) {
    if (w < -1e-12) throw std::invalid_argument("convex_combine: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("convex_combine: weights do not sum to 1");
  std::vector<Matrix> kraus;
  std::vector<double> kweights;
  bool any_nonunit = false;
  for (const Channel& ch : channels) {
    if (ch.d != d) throw std::invalid_argument("convex_combine: dimension mismatch");
    if (!ch.unit_weights()) any_nonunit = true;
  }
  for (size_t i = 0; i < channels.size(); ++i) {
    double w = std::max(weights[i], 0.0);
    for (size_t a = 0; a < channels[i].kraus.size(); ++a) {
      kraus.push_back(std::sqrt(w) * channels[i].kraus[a]);
      if (any_nonunit) kweights.push_back(channels[i].weight(a));
    }
  }
  return make_channel(d, std::move(kraus), "mixture", std::move(kweights));
}

}  // namespace covchan
