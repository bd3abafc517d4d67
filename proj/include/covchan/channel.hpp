#pragma once

#include <string>

#include "covchan/quditbasis.hpp"

namespace covchan {

// Kraus-form map E(rho) = sum_a w_a A_a rho A_a^dag. weights empty means all
// +1 (the usual CP case); negative weights let the toolkit carry formal
// one-parameter families through their non-CP range for analysis.
struct Channel {
  int d = 0;
  std::vector<Matrix> kraus;
  std::vector<double> weights;  // empty => unit weights
  std::string label;

  double weight(size_t a) const { return weights.empty() ? 1.0 : weights[a]; }
  bool unit_weights() const;
};

Channel make_channel(int d, std::vector<Matrix> kraus, std::string label = "",
                     std::vector<double> weights = {});

Matrix apply(const Channel& ch, const Matrix& rho);

// Unnormalized Choi matrix J = sum_ij E(E_ij) (x) E_ij; tr J = d when TP.
struct ChoiMatrix {
  int d = 0;
  Matrix m;
};

ChoiMatrix choi(const Channel& ch);

// Action recovered from the Choi matrix: E(X) = Tr_2[J (I (x) X^T)].
Matrix apply_choi(const ChoiMatrix& j, const Matrix& x);

struct Classification {
  bool cp = false;
  bool tp = false;
  bool unital = false;
  double min_choi_eig = 0.0;
  double tp_residual = 0.0;      // ||sum w A^dag A - I||_F
  double unital_residual = 0.0;  // ||sum w A A^dag - I||_F
};

Classification classify(const Channel& ch, double tol = 1e-9);
Classification classify_choi(const ChoiMatrix& j, double tol = 1e-9);

// Coherence-vector picture: r'_mu = sum_nu L_mu_nu r_nu with L_mu_nu =
// tr(G_mu E(G_nu)). Row 0 is (1, 0, ..., 0) iff TP; column 0 below the
// corner is the translation block, zero iff unital.
struct AffineRep {
  int d = 0;
  RealMatrix lambda_full;   // d^2 x d^2
  RealVector t_vec;         // lambda_full column 0, rows 1..d^2-1
  RealMatrix lambda_block;  // rows/cols 1..d^2-1
};

AffineRep affine_rep(const Channel& ch);
CoherenceVector apply_affine(const AffineRep& rep, const CoherenceVector& v);

// Same-map test via Frobenius distance of Choi matrices.
bool channels_equal(const Channel& a, const Channel& b, double tol = 1e-9);
double channel_distance(const Channel& a, const Channel& b);

// Kraus operators from the Choi spectrum; throws if J has an eigenvalue
// below -tol (no completely positive realization).
Channel kraus_from_choi(const ChoiMatrix& j, double tol = 1e-9);

Channel convex_combine(const std::vector<Channel>& channels, const std::vector<double>& weights);

}  // namespace covchan
