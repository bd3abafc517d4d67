#pragma once

#include <vector>

#include "covchan/matcore.hpp"

namespace testutil {

inline double diff(const covchan::Matrix& a, const covchan::Matrix& b) { return (a - b).norm(); }

// Deterministic batch of density matrices for property checks.
inline std::vector<covchan::Matrix> densities(int d, int n, unsigned long long seed = 42) {
  covchan::Rng rng(seed);
  std::vector<covchan::Matrix> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(covchan::random_density(d, rng));
  return out;
}

}  // namespace testutil
