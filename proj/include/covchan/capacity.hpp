#pragma once

#include "covchan/channel.hpp"
#include "covchan/groupreps.hpp"
#include "covchan/zoo.hpp"

namespace covchan {

// Von Neumann entropy in bits.  Eigenvalues in [-1e-10, 0] are clamped to
// zero; anything more negative is rejected.
double von_neumann_entropy(const Matrix& rho);

struct Ensemble {
  std::vector<Matrix> states;
  std::vector<double> probs;
};

// S(sum_i p_i E(rho_i)) - sum_i p_i S(E(rho_i)), in bits.
double holevo_quantity(const Channel& ch, const Ensemble& ens);

struct MinEntropyResult {
  double s_min = 0.0;  // bits
  Vector minimizer;    // optimal pure input state
  int restarts_converged = 0;
};

// Derivative-free simplex descent over pure states parametrized by
// 2(d-1) angles (hyperspherical amplitudes plus relative phases), best
// over seeded restarts.
MinEntropyResult min_output_entropy(const Channel& ch, int restarts = 32, double tol = 1e-10,
                                    std::uint64_t seed = kDefaultSeed);

struct CapacityReport {
  double s_min = 0.0;
  Vector minimizer;
  double capacity = 0.0;
  std::string method;  // "optimizer" or "closed-form"
  int restarts_converged = 0;
};

// One-shot capacity log2(d) - sMin for channels covariant under a group
// acting irreducibly on the output.
CapacityReport covariant_capacity(const Channel& ch, std::uint64_t seed = kDefaultSeed,
                                  int restarts = 32);

// || (1/|G|) sum_g D2(g) E(rho) D2(g)^-1 - I/d ||_F; near zero certifies
// the optimal-ensemble averaging argument behind covariant_capacity.
double group_average_check(const Channel& ch, const FiniteGroupRep& d1, const FiniteGroupRep& d2,
                           const Matrix& rho);

// Closed forms for the families with printed capacity formulas
// (symmetric-pauli, su3-8, su3-6), in bits.  Errors outside the
// completely positive parameter range unless force is set.
double closed_form_capacity(const std::string& family, const ParamMap& params, bool force = false);

}  // namespace covchan
