#pragma once

#include <map>

#include "covchan/channel.hpp"
#include "covchan/groupreps.hpp"

namespace covchan {

using ParamMap = std::map<std::string, Complex>;

struct FamilyChannel {
  Channel channel;
  std::string family;
  ParamMap params;
  std::vector<std::string> notes;
  std::vector<std::string> warnings;  // e.g. complete-positivity warnings
  bool cp = true;
  bool tp = true;
  double min_choi_eig = 0.0;
};

std::vector<std::string> family_names();

// Raw Kraus construction without constraint enforcement (shape checks only);
// make_family layers the trace-preservation constraint on top and classifies.
Channel family_channel_raw(const std::string& family, const ParamMap& params);

FamilyChannel make_family(const std::string& family, const ParamMap& params);

struct TpConstraint {
  bool satisfied = false;
  double residual = 0.0;
  std::string description;
};

// Evaluates the family's structural trace-preservation constraint.
TpConstraint family_tp_constraint(const std::string& family, const ParamMap& params);

struct CpInterval {
  double p_min = 0.0;
  double p_max = 0.0;
};

// Largest parameter interval on which the one-parameter su(3) families are
// completely positive, located by bisection on the minimal Choi eigenvalue.
CpInterval su3_family_cp_interval(const std::string& family, double tol = 1e-8);

// Group data a family is declared covariant (or symmetric) under, in a form
// check_covariance / check_symmetry accept directly.
struct SymmetryWitness {
  std::string description;
  bool symmetric = false;  // true: invariance; false: covariance
  bool lie = false;
  std::vector<Matrix> d1_elems;  // finite generators (or empty for lie)
  std::vector<Matrix> d2_elems;
  LieAlgebraRep lie_d1;
  LieAlgebraRep lie_d2;
};

std::vector<SymmetryWitness> family_symmetries(const std::string& family, const ParamMap& params);

}  // namespace covchan
