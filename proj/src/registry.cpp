#include "covchan/registry.hpp"

#include <algorithm>
#include <stdexcept>

namespace covchan {

namespace {

bool parse_int(const std::string& s, int& out) {
  try {
    size_t pos = 0;
    out = std::stoi(s, &pos);
    return pos == s.size();
  } catch (...) {
    return false;
  }
}

FiniteGroupRep z3_group() { return cyclic_rep(3, pauli_z(3), "z3"); }

FiniteGroupRep hadamard_group() { return cyclic_rep(4, hadamard_matrix(3), "hadamard"); }

LieAlgebraRep scalar_charge_rep(const std::string& algebra, const std::vector<int>& charges,
                                const std::string& name) {
  LieAlgebraRep rep;
  rep.name = name;
  rep.algebra = algebra;
  rep.dim = 1;
  for (int c : charges) {
    Matrix g(1, 1);
    g(0, 0) = static_cast<double>(c);
    rep.generators.push_back(g);
  }
  return rep;
}

[[noreturn]] void unknown_group(const std::string& group) {
  std::string names;
  for (const auto& n : registry_groups()) names += (names.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown group '" + group + "' (known: " + names + ")");
}

}  // namespace

std::vector<std::string> registry_groups() {
  return {"z3", "hadamard", "s3", "pauli", "u1", "u1u1", "su3", "so3"};
}

std::string registry_default_rep(const std::string& group) {
  if (group == "z3" || group == "hadamard" || group == "s3" || group == "pauli") {
    return "defining";
  }
  if (group == "u1") return "phase";
  if (group == "u1u1") return "phases";
  if (group == "su3") return "3";
  if (group == "so3") return "vector";
  unknown_group(group);
}

std::string registry_omega_help(const std::string& group) {
  if (group == "z3") return "0, 1, 2";
  if (group == "hadamard") return "1, -1, i, -i";
  if (group == "s3") return "1, 1p, 2";
  if (group == "pauli") return "kl with k, l in 0..2 (e.g. 01)";
  if (group == "u1") return "any integer charge (e.g. -1)";
  if (group == "u1u1") return "charge pair a,b (e.g. 1,-1)";
  if (group == "su3") return "1, 3, 3bar, 6, 6bar, 8";
  if (group == "so3") return "(solving not catalogued; use for checks)";
  unknown_group(group);
}

SolveProblem resolve_problem(const std::string& group, const std::string& d1,
                             const std::string& d2, const std::string& omega) {
  SolveProblem p;
  p.group = group;
  p.d1_name = d1.empty() ? registry_default_rep(group) : d1;
  p.d2_name = d2.empty() ? registry_default_rep(group) : d2;
  p.omega_name = omega;

  auto rep_error = [&](const std::string& rep) -> void {
    throw std::invalid_argument("group '" + group + "' has no representation '" + rep +
                                "' (default: " + registry_default_rep(group) + ")");
  };
  auto omega_error = [&]() -> void {
    throw std::invalid_argument("group '" + group + "' has no omega label '" + omega +
                                "' (expected: " + registry_omega_help(group) + ")");
  };

  if (group == "z3" || group == "hadamard") {
    FiniteGroupRep g = group == "z3" ? z3_group() : hadamard_group();
    if (p.d1_name != "defining") rep_error(p.d1_name);
    if (p.d2_name != "defining") rep_error(p.d2_name);
    p.fin_d1 = g;
    p.fin_d2 = g;
    int k = -1;
    if (group == "z3") {
      if (!parse_int(omega, k) || k < 0 || k > 2) omega_error();
      p.fin_omega = cyclic_irrep(g, k);
    } else {
      if (omega == "1") k = 0;
      else if (omega == "i") k = 1;
      else if (omega == "-1") k = 2;
      else if (omega == "-i") k = 3;
      else omega_error();
      p.fin_omega = cyclic_irrep(g, k);
    }
    return p;
  }
  if (group == "s3") {
    auto reps = s3_reps();
    if (!reps.count(p.d1_name)) rep_error(p.d1_name);
    if (!reps.count(p.d2_name)) rep_error(p.d2_name);
    p.fin_d1 = reps.at(p.d1_name);
    p.fin_d2 = reps.at(p.d2_name);
    if (!reps.count(omega)) omega_error();
    p.fin_omega = reps.at(omega);
    return p;
  }
  if (group == "pauli") {
    if (p.d1_name != "defining") rep_error(p.d1_name);
    if (p.d2_name != "defining") rep_error(p.d2_name);
    FiniteGroupRep g = pauli_group(3);
    p.fin_d1 = g;
    p.fin_d2 = g;
    if (omega.size() != 2 || omega[0] < '0' || omega[0] > '2' || omega[1] < '0' ||
        omega[1] > '2') {
      omega_error();
    }
    p.fin_omega = pauli_irrep(3, omega[0] - '0', omega[1] - '0');
    return p;
  }
  if (group == "u1") {
    if (p.d1_name != "phase") rep_error(p.d1_name);
    if (p.d2_name != "phase") rep_error(p.d2_name);
    p.lie = true;
    p.lie_d1 = u1_rep();
    p.lie_d2 = u1_rep();
    int alpha = 0;
    if (!parse_int(omega, alpha)) omega_error();
    p.lie_omega = scalar_charge_rep("u1", {alpha}, omega);
    return p;
  }
  if (group == "u1u1") {
    if (p.d1_name != "phases") rep_error(p.d1_name);
    if (p.d2_name != "phases") rep_error(p.d2_name);
    p.lie = true;
    p.lie_d1 = u1u1_rep();
    p.lie_d2 = u1u1_rep();
    auto comma = omega.find(',');
    int a = 0, b = 0;
    if (comma == std::string::npos || !parse_int(omega.substr(0, comma), a) ||
        !parse_int(omega.substr(comma + 1), b)) {
      omega_error();
    }
    p.lie_omega = scalar_charge_rep("u1u1", {a, b}, omega);
    return p;
  }
  if (group == "su3") {
    p.lie = true;
    const std::vector<std::string> labels = {"1", "3", "3bar", "6", "6bar", "8"};
    auto known = [&](const std::string& l) {
      return std::find(labels.begin(), labels.end(), l) != labels.end();
    };
    if (!known(p.d1_name)) rep_error(p.d1_name);
    if (!known(p.d2_name)) rep_error(p.d2_name);
    if (!known(omega)) omega_error();
    p.lie_d1 = su3_rep(p.d1_name);
    p.lie_d2 = su3_rep(p.d2_name);
    p.lie_omega = su3_rep(omega);
    return p;
  }
  if (group == "so3") {
    throw std::invalid_argument(
        "group 'so3' is catalogued for covariance checks only, not for solving");
  }
  unknown_group(group);
}

IntertwinerSolution solve_problem(const SolveProblem& p) {
  if (p.lie) {
    if (p.lie_d1.dim != p.lie_d2.dim) {
      throw std::invalid_argument("input and output representations must share a dimension");
    }
    return solve_intertwiners(p.lie_d1, p.lie_d2, p.lie_omega.generators, p.omega_name);
  }
  if (p.fin_d1.dim != p.fin_d2.dim) {
    throw std::invalid_argument("input and output representations must share a dimension");
  }
  IntertwinerSolution sol = solve_intertwiners(p.fin_d1, p.fin_d2, p.fin_omega);
  sol.omega_label = p.omega_name;
  return sol;
}

CheckRep resolve_check_rep(const std::string& group, const std::string& rep) {
  std::string name = rep.empty() ? registry_default_rep(group) : rep;
  CheckRep out;
  if (group == "z3" || group == "hadamard") {
    if (name != "defining") {
      throw std::invalid_argument("group '" + group + "' has no representation '" + name + "'");
    }
    out.generators = (group == "z3" ? z3_group() : hadamard_group()).generators();
    return out;
  }
  if (group == "s3") {
    auto reps = s3_reps();
    if (!reps.count(name)) {
      throw std::invalid_argument("group 's3' has no representation '" + name + "'");
    }
    out.generators = reps.at(name).generators();
    return out;
  }
  if (group == "pauli") {
    if (name != "defining") {
      throw std::invalid_argument("group 'pauli' has no representation '" + name + "'");
    }
    out.generators = {pauli_x(3), pauli_z(3)};
    return out;
  }
  if (group != "u1" && group != "u1u1" && group != "so3" && group != "su3") {
    unknown_group(group);
  }
  out.lie = true;
  if (group == "u1" && name == "phase") {
    out.lie_rep = u1_rep();
  } else if (group == "u1u1" && name == "phases") {
    out.lie_rep = u1u1_rep();
  } else if (group == "so3" && name == "vector") {
    out.lie_rep = so3_rep();
  } else if (group == "su3") {
    const std::vector<std::string> labels = {"1", "3", "3bar", "6", "6bar", "8"};
    if (std::find(labels.begin(), labels.end(), name) == labels.end()) {
      throw std::invalid_argument("group 'su3' has no representation '" + name + "'");
    }
    out.lie_rep = su3_rep(name);
  } else {
    throw std::invalid_argument("group '" + group + "' has no representation '" + name + "'");
  }
  return out;
}

}  // namespace covchan
