#include "covchan/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace covchan {

namespace {

Matrix unit_entry(int d, int i, int j) {
  Matrix e = Matrix::Zero(d, d);
  e(i, j) = 1.0;
  return e;
}

Complex get_param(const ParamMap& params, const std::string& family, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw std::invalid_argument("family '" + family + "' requires parameter '" + key + "'");
  }
  return it->second;
}

Complex get_param_or(const ParamMap& params, const std::string& key, Complex fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

double real_param(const ParamMap& params, const std::string& family, const std::string& key) {
  Complex v = get_param(params, family, key);
  if (std::abs(v.imag()) > 1e-10) {
    throw std::invalid_argument("parameter '" + key + "' of family '" + family + "' must be real");
  }
  return v.real();
}

double prob_param(const ParamMap& params, const std::string& family, const std::string& key) {
  double v = real_param(params, family, key);
  if (v < -1e-12) {
    throw std::invalid_argument("parameter '" + key + "' of family '" + family +
                                "' must be a nonnegative weight");
  }
  return std::max(v, 0.0);
}

// Weight parameters default to zero when omitted.
double prob_param_or0(const ParamMap& params, const std::string& family, const std::string& key) {
  if (params.find(key) == params.end()) return 0.0;
  return prob_param(params, family, key);
}

int int_param(const ParamMap& params, const std::string& family, const std::string& key) {
  double v = real_param(params, family, key);
  double r = std::round(v);
  if (std::abs(v - r) > 1e-9) {
    throw std::invalid_argument("parameter '" + key + "' of family '" + family +
                                "' must be an integer");
  }
  return static_cast<int>(r);
}

int dim_param(const ParamMap& params, const std::string& family) {
  auto it = params.find("d");
  if (it == params.end()) return 3;
  double v = it->second.real();
  int d = static_cast<int>(std::round(v));
  if (std::abs(it->second.imag()) > 1e-10 || std::abs(v - d) > 1e-9 || d < 2) {
    throw std::invalid_argument("parameter 'd' of family '" + family +
                                "' must be an integer dimension >= 2");
  }
  return d;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

// E(rho) = rho
Channel raw_identity(int d) {
  return make_channel(d, {Matrix::Identity(d, d)}, "identity");
}

// E(rho) = tr(rho) I / d
Channel raw_mixing(int d) {
  std::vector<Matrix> kraus;
  double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) kraus.push_back(s * unit_entry(d, i, j));
  }
  return make_channel(d, kraus, "mixing");
}

// E(rho) = (tr(rho) I + rho^T) / (d + 1)
Channel raw_transpose(int d) {
  std::vector<Matrix> kraus;
  double diag = std::sqrt(2.0 / (d + 1.0));
  double off = 1.0 / std::sqrt(d + 1.0);
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      if (i == j) {
        kraus.push_back(diag * unit_entry(d, i, i));
      } else {
        kraus.push_back(off * (unit_entry(d, i, j) + unit_entry(d, j, i)));
      }
    }
  }
  return make_channel(d, kraus, "transpose");
}

// E(rho) = alpha tr(rho) I + beta rho + gamma rho^T, decomposed into
// weights (beta, d (alpha - gamma), (d+1) gamma) over identity / mixing /
// transpose.  Weights may be negative, in which case the map is kept in
// signed-weight form and is typically not completely positive.
Channel raw_sod(const ParamMap& params) {
  int d = dim_param(params, "sod");
  double alpha = real_param(params, "sod", "alpha");
  double beta = real_param(params, "sod", "beta");
  double gamma = real_param(params, "sod", "gamma");
  double wi = beta;
  double wm = d * (alpha - gamma);
  double wt = (d + 1.0) * gamma;
  Channel id = raw_identity(d);
  Channel mix = raw_mixing(d);
  Channel tra = raw_transpose(d);
  if (std::min({wi, wm, wt}) >= -1e-12 && std::abs(wi + wm + wt - 1.0) <= 1e-9) {
    Channel out = convex_combine({id, mix, tra}, {wi, wm, wt});
    out.label = "sod";
    return out;
  }
  Channel out;
  out.d = d;
  out.label = "sod";
  out.kraus.push_back(id.kraus[0]);
  out.weights.push_back(wi);
  for (const Matrix& k : mix.kraus) {
    out.kraus.push_back(k);
    out.weights.push_back(wm);
  }
  for (const Matrix& k : tra.kraus) {
    out.kraus.push_back(k);
    out.weights.push_back(wt);
  }
  return out;
}

// Kraus A_k = sum_l a_{l,l+k} |l><l+k| for the cyclic group generated by
// Z = diag(1, w, w^2); parameters are the nine coefficients a_lm.
Channel raw_cyclic_z3(const ParamMap& params) {
  Complex a[3][3];
  for (int l = 0; l < 3; ++l) {
    for (int m = 0; m < 3; ++m) {
      a[l][m] = get_param_or(params, "a" + std::to_string(l) + std::to_string(m), 0.0);
    }
  }
  std::vector<Matrix> kraus;
  for (int k = 0; k < 3; ++k) {
    Matrix A = Matrix::Zero(3, 3);
    for (int l = 0; l < 3; ++l) {
      int m = (l + k) % 3;
      A(l, m) = a[l][m];
    }
    kraus.push_back(A);
  }
  return make_channel(3, kraus, "cyclicZ3");
}

struct HBasis {
  Vector plus, minus, imag;  // eigenvectors of H for eigenvalues 1, -1, i
};

HBasis hadamard_eigenbasis() {
  double s3 = std::sqrt(3.0);
  HBasis b;
  b.plus = Vector(3);
  b.plus << 1.0 + s3, 1.0, 1.0;
  b.plus.normalize();
  b.minus = Vector(3);
  b.minus << 1.0 - s3, 1.0, 1.0;
  b.minus.normalize();
  b.imag = Vector(3);
  b.imag << 0.0, -1.0, 1.0;
  b.imag.normalize();
  return b;
}

// Covariant family for the order-4 group generated by the 3x3 Fourier
// matrix.  Coefficients a_ij couple its eigenvectors (labels 1, 2, 3 for
// eigenvalues 1, -1, i); row norms of (a_ij) control trace preservation.
Channel raw_hadamard3(const ParamMap& params) {
  Complex a[4][4];
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      a[i][j] = get_param_or(params, "a" + std::to_string(i) + std::to_string(j), 0.0);
    }
  }
  HBasis b = hadamard_eigenbasis();
  auto outer = [](const Vector& u, const Vector& v) -> Matrix { return u * v.adjoint(); };
  std::vector<Matrix> kraus;
  kraus.push_back(a[1][1] * outer(b.plus, b.plus) + a[2][2] * outer(b.minus, b.minus) +
                  a[3][3] * outer(b.imag, b.imag));
  kraus.push_back(a[2][1] * outer(b.plus, b.minus) + a[1][2] * outer(b.minus, b.plus));
  kraus.push_back(a[3][1] * outer(b.plus, b.imag) + a[2][3] * outer(b.imag, b.minus));
  kraus.push_back(a[1][3] * outer(b.imag, b.plus) + a[3][2] * outer(b.minus, b.imag));
  return make_channel(3, kraus, "hadamard3");
}

Channel raw_pauli(const ParamMap& params) {
  std::vector<Matrix> kraus;
  for (int m = 0; m < 3; ++m) {
    for (int n = 0; n < 3; ++n) {
      double p = prob_param_or0(params, "pauli", "p" + std::to_string(m) + std::to_string(n));
      if (p < 1e-15) continue;
      kraus.push_back(std::sqrt(p) * pauli_op(3, m, n));
    }
  }
  if (kraus.empty()) {
    throw std::invalid_argument("family 'pauli' requires at least one nonzero weight");
  }
  return make_channel(3, kraus, "pauli");
}

// Cosets of the subgroup {(0,0), (m,n), (2m,2n)} of Z3 x Z3, indexed in
// the order their lexicographically smallest members appear.
std::vector<std::vector<std::pair<int, int>>> shift_cosets(int m, int n) {
  int assigned[3][3];
  for (auto& row : assigned) row[0] = row[1] = row[2] = -1;
  std::vector<std::vector<std::pair<int, int>>> cosets;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (assigned[a][b] >= 0) continue;
      int idx = static_cast<int>(cosets.size());
      cosets.emplace_back();
      for (int t = 0; t < 3; ++t) {
        int x = (a + t * m) % 3;
        int y = (b + t * n) % 3;
        if (assigned[x][y] < 0) {
          assigned[x][y] = idx;
          cosets[idx].emplace_back(x, y);
        }
      }
    }
  }
  return cosets;
}

// Pauli channel whose weights are constant on cosets of the cyclic
// subgroup generated by the shift (m, n); such a channel is invariant
// under conjugation by X^m Z^n.
Channel raw_symmetric_pauli(const ParamMap& params) {
  int m = ((int_param(params, "symmetric-pauli", "m") % 3) + 3) % 3;
  int n = ((int_param(params, "symmetric-pauli", "n") % 3) + 3) % 3;
  if (m == 0 && n == 0) {
    throw std::invalid_argument("family 'symmetric-pauli' requires (m, n) != (0, 0) mod 3");
  }
  double q[3];
  for (int c = 0; c < 3; ++c) {
    q[c] = prob_param_or0(params, "symmetric-pauli", "q" + std::to_string(c));
  }
  auto cosets = shift_cosets(m, n);
  std::vector<Matrix> kraus;
  for (int c = 0; c < 3; ++c) {
    if (q[c] / 3.0 < 1e-15) continue;
    for (auto [a, b] : cosets[c]) {
      kraus.push_back(std::sqrt(q[c] / 3.0) * pauli_op(3, a, b));
    }
  }
  if (kraus.empty()) {
    throw std::invalid_argument("family 'symmetric-pauli' requires at least one nonzero weight");
  }
  return make_channel(3, kraus, "symmetric-pauli");
}

Channel raw_s3_covariant(const ParamMap& params) {
  Complex a = get_param_or(params, "a", 0.0);
  Complex b = get_param_or(params, "b", 0.0);
  Complex c = get_param_or(params, "c", 0.0);
  Complex d = get_param_or(params, "d", 0.0);
  Complex e = get_param_or(params, "e", 0.0);
  Complex f = get_param_or(params, "f", 0.0);
  Matrix A(3, 3), B(3, 3), C1(3, 3), C2(3, 3);
  A << a, b, b, b, a, b, b, b, a;
  B << 0, c, -c, -c, 0, c, c, -c, 0;
  C1 << d, -e - f, e, -e - f, d, e, f, f, -2.0 * d;
  double s3 = std::sqrt(3.0);
  C2 << 3.0 * d, e - f, -e - 2.0 * f, f - e, -3.0 * d, e + 2.0 * f, -2.0 * e - f, 2.0 * e + f, 0;
  C2 /= s3;
  return make_channel(3, {A, B, C1, C2}, "s3-covariant");
}

Channel raw_s3_symmetric(const ParamMap& params) {
  Complex a = get_param_or(params, "a", 0.0);
  Complex b = get_param_or(params, "b", 0.0);
  Complex c = get_param_or(params, "c", 0.0);
  Complex d = get_param_or(params, "d", 0.0);
  Complex e = get_param_or(params, "e", 0.0);
  Complex f = get_param_or(params, "f", 0.0);
  Matrix A(3, 3), C1(3, 3), C2(3, 3);
  A << a, a, a, b, b, b, c, c, c;
  C1 << d, d, -2.0 * d, e, e, -2.0 * e, f, f, -2.0 * f;
  double s3 = std::sqrt(3.0);
  C2 << s3 * d, -s3 * d, 0, s3 * e, -s3 * e, 0, s3 * f, -s3 * f, 0;
  return make_channel(3, {A, C1, C2}, "s3-symmetric");
}

// Phase-covariant family for diag(1, 1, e^{i theta}); the charge-0 Kraus
// operator carries an arbitrary 2x2 block B and corner entry a, the
// charge -1 / +1 operators fill the remaining row and column.
Channel raw_u1(const ParamMap& params) {
  Matrix A0 = Matrix::Zero(3, 3);
  A0(0, 0) = get_param_or(params, "b00", 0.0);
  A0(0, 1) = get_param_or(params, "b01", 0.0);
  A0(1, 0) = get_param_or(params, "b10", 0.0);
  A0(1, 1) = get_param_or(params, "b11", 0.0);
  A0(2, 2) = get_param_or(params, "a", 0.0);
  Matrix A1 = Matrix::Zero(3, 3);
  A1(2, 0) = get_param_or(params, "b", 0.0);
  A1(2, 1) = get_param_or(params, "c", 0.0);
  Matrix A2 = Matrix::Zero(3, 3);
  A2(0, 2) = get_param_or(params, "d", 0.0);
  A2(1, 2) = get_param_or(params, "e", 0.0);
  return make_channel(3, {A0, A1, A2}, "u1");
}

// Two-phase covariant family for diag(1, e^{i t1}, e^{i t2}): one free
// diagonal Kraus operator plus weighted |i><j| for (i, j) != (0, 0).
Channel raw_u1u1(const ParamMap& params) {
  Matrix A0 = Matrix::Zero(3, 3);
  A0(0, 0) = get_param_or(params, "a0", 0.0);
  A0(1, 1) = get_param_or(params, "a1", 0.0);
  A0(2, 2) = get_param_or(params, "a2", 0.0);
  std::vector<Matrix> kraus = {A0};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == 0 && j == 0) continue;
      double p = prob_param_or0(params, "u1u1", "p" + std::to_string(i) + std::to_string(j));
      if (p < 1e-15) continue;
      kraus.push_back(std::sqrt(p) * unit_entry(3, i, j));
    }
  }
  return make_channel(3, kraus, "u1u1");
}

std::vector<Matrix> traceless_multiplet() {
  std::vector<Matrix> ops;
  Matrix id3 = Matrix::Identity(3, 3) / 3.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Matrix m = unit_entry(3, i, j);
      if (i == j) m -= id3;
      ops.push_back(m);
    }
  }
  return ops;
}

// E(rho) = (p tr(rho) I + (2 - 3p) rho) / 2; completely positive for
// p in [0, 3/4].  Outside that interval the identity weight 1 - 4p/3 or
// the multiplet weight p/2 is negative and the map stays in signed form.
Channel raw_su3_8(const ParamMap& params) {
  double p = real_param(params, "su3-8", "p");
  double w0 = 1.0 - 4.0 * p / 3.0;
  double wm = p / 2.0;
  Matrix id = Matrix::Identity(3, 3);
  if (w0 >= -1e-14 && wm >= -1e-14) {
    std::vector<Matrix> kraus;
    if (w0 > 1e-15) kraus.push_back(std::sqrt(std::max(w0, 0.0)) * id);
    if (wm > 1e-15) {
      for (const Matrix& m : traceless_multiplet()) {
        kraus.push_back(std::sqrt(wm) * m);
      }
    }
    if (kraus.empty()) kraus.push_back(id);
    return make_channel(3, kraus, "su3-8");
  }
  Channel out;
  out.d = 3;
  out.label = "su3-8";
  out.kraus.push_back(id);
  out.weights.push_back(w0);
  for (const Matrix& m : traceless_multiplet()) {
    out.kraus.push_back(m);
    out.weights.push_back(wm);
  }
  return out;
}

std::vector<Matrix> antisym_multiplet_tp() {
  // (E_ij - E_ji)/sqrt(2) over i < j; sums to the identity for d = 3.
  std::vector<Matrix> ops;
  double s = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      ops.push_back(s * (unit_entry(3, i, j) - unit_entry(3, j, i)));
    }
  }
  return ops;
}

std::vector<Matrix> sym_multiplet_tp() {
  // E_ii/sqrt(2) and (E_ij + E_ji)/2; sums to the identity for d = 3.
  std::vector<Matrix> ops;
  double sd = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < 3; ++i) ops.push_back(sd * unit_entry(3, i, i));
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      ops.push_back(0.5 * (unit_entry(3, i, j) + unit_entry(3, j, i)));
    }
  }
  return ops;
}

// E(rho) = ((2 - p) tr(rho) I + (3p - 2) rho^T) / 4: the convex path from
// the antisymmetric-multiplet channel (p = 0) to the symmetric-multiplet
// channel (p = 1); completely positive exactly on [0, 1].
Channel raw_su3_6(const ParamMap& params) {
  double p = real_param(params, "su3-6", "p");
  auto anti = antisym_multiplet_tp();
  auto sym = sym_multiplet_tp();
  if (p >= -1e-14 && p <= 1.0 + 1e-14) {
    double wa = std::sqrt(std::max(1.0 - p, 0.0));
    double ws = std::sqrt(std::max(p, 0.0));
    std::vector<Matrix> kraus;
    if (wa > 1e-15) {
      for (const Matrix& m : anti) kraus.push_back(wa * m);
    }
    if (ws > 1e-15) {
      for (const Matrix& m : sym) kraus.push_back(ws * m);
    }
    return make_channel(3, kraus, "su3-6");
  }
  Channel out;
  out.d = 3;
  out.label = "su3-6";
  for (const Matrix& m : anti) {
    out.kraus.push_back(m);
    out.weights.push_back(1.0 - p);
  }
  for (const Matrix& m : sym) {
    out.kraus.push_back(m);
    out.weights.push_back(p);
  }
  return out;
}

double tp_residual_of(const Channel& ch) {
  Matrix s = Matrix::Zero(ch.d, ch.d);
  for (size_t a = 0; a < ch.kraus.size(); ++a) {
    s += ch.weight(a) * (ch.kraus[a].adjoint() * ch.kraus[a]);
  }
  return (s - Matrix::Identity(ch.d, ch.d)).norm();
}

ParamMap filled_params(const std::string& family, const ParamMap& params) {
  ParamMap out = params;
  if (family == "identity" || family == "mixing" || family == "transpose") {
    out["d"] = Complex(dim_param(params, family), 0.0);
  } else if (family == "sod") {
    out["d"] = Complex(dim_param(params, family), 0.0);
  }
  return out;
}

}  // namespace

std::vector<std::string> family_names() {
  return {"identity",     "mixing",       "transpose", "sod",
          "cyclicZ3",     "hadamard3",    "pauli",     "symmetric-pauli",
          "s3-covariant", "s3-symmetric", "u1",        "u1u1",
          "su3-8",        "su3-6"};
}

Channel family_channel_raw(const std::string& family, const ParamMap& params) {
  if (family == "identity") return raw_identity(dim_param(params, family));
  if (family == "mixing") return raw_mixing(dim_param(params, family));
  if (family == "transpose") return raw_transpose(dim_param(params, family));
  if (family == "sod") return raw_sod(params);
  if (family == "cyclicZ3") return raw_cyclic_z3(params);
  if (family == "hadamard3") return raw_hadamard3(params);
  if (family == "pauli") return raw_pauli(params);
  if (family == "symmetric-pauli") return raw_symmetric_pauli(params);
  if (family == "s3-covariant") return raw_s3_covariant(params);
  if (family == "s3-symmetric") return raw_s3_symmetric(params);
  if (family == "u1") return raw_u1(params);
  if (family == "u1u1") return raw_u1u1(params);
  if (family == "su3-8") return raw_su3_8(params);
  if (family == "su3-6") return raw_su3_6(params);
  std::string names;
  for (const auto& n : family_names()) names += (names.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown family '" + family + "' (known: " + names + ")");
}

TpConstraint family_tp_constraint(const std::string& family, const ParamMap& params) {
  TpConstraint c;
  if (family == "identity" || family == "mixing" || family == "transpose" || family == "su3-8" ||
      family == "su3-6") {
    c.description = "trace preserving for all parameter values by construction";
    c.residual = tp_residual_of(family_channel_raw(family, params));
  } else if (family == "sod") {
    int d = dim_param(params, family);
    double alpha = real_param(params, family, "alpha");
    double beta = real_param(params, family, "beta");
    double gamma = real_param(params, family, "gamma");
    c.description = "d*alpha + beta + gamma = 1";
    c.residual = std::abs(d * alpha + beta + gamma - 1.0);
  } else if (family == "cyclicZ3") {
    double worst = 0.0;
    for (int m = 0; m < 3; ++m) {
      double s = 0.0;
      for (int l = 0; l < 3; ++l) {
        s += std::norm(get_param_or(params, "a" + std::to_string(l) + std::to_string(m), 0.0));
      }
      worst = std::max(worst, std::abs(s - 1.0));
    }
    c.description = "unit column norms: sum_l |a_lm|^2 = 1 for each m";
    c.residual = worst;
  } else if (family == "hadamard3") {
    double worst = 0.0;
    for (int i = 1; i <= 3; ++i) {
      double s = 0.0;
      for (int j = 1; j <= 3; ++j) {
        s += std::norm(get_param_or(params, "a" + std::to_string(i) + std::to_string(j), 0.0));
      }
      worst = std::max(worst, std::abs(s - 1.0));
    }
    c.description = "unit row norms: sum_j |a_ij|^2 = 1 for each i";
    c.residual = worst;
  } else if (family == "pauli") {
    double s = 0.0;
    for (int m = 0; m < 3; ++m) {
      for (int n = 0; n < 3; ++n) {
        s += prob_param_or0(params, family, "p" + std::to_string(m) + std::to_string(n));
      }
    }
    c.description = "weights p_mn form a probability distribution";
    c.residual = std::abs(s - 1.0);
  } else if (family == "symmetric-pauli") {
    double s = 0.0;
    for (int k = 0; k < 3; ++k) s += prob_param_or0(params, family, "q" + std::to_string(k));
    c.description = "coset weights q_k form a probability distribution";
    c.residual = std::abs(s - 1.0);
  } else if (family == "s3-covariant") {
    c.description = "sum_k K_k^dag K_k = I constrains (a, b, c, d, e, f)";
    c.residual = tp_residual_of(family_channel_raw(family, params));
  } else if (family == "s3-symmetric") {
    c.description =
        "sum_k K_k^dag K_k = I, equivalent to |a|^2+|b|^2+|c|^2 = 1/3 and "
        "|d|^2+|e|^2+|f|^2 = 1/6";
    c.residual = tp_residual_of(family_channel_raw(family, params));
  } else if (family == "u1") {
    c.description = "B^dag B + (b, c)^dag-gram = I_2 and |a|^2 + |d|^2 + |e|^2 = 1";
    c.residual = tp_residual_of(family_channel_raw(family, params));
  } else if (family == "u1u1") {
    double worst = 0.0;
    const char* keys[3] = {"a0", "a1", "a2"};
    for (int j = 0; j < 3; ++j) {
      double s = std::norm(get_param_or(params, keys[j], 0.0));
      for (int i = 0; i < 3; ++i) {
        if (i == 0 && j == 0) continue;
        s += prob_param_or0(params, family, "p" + std::to_string(i) + std::to_string(j));
      }
      worst = std::max(worst, std::abs(s - 1.0));
    }
    c.description = "|a_j|^2 + sum_i p_ij = 1 for each column j";
    c.residual = worst;
  } else {
    family_channel_raw(family, params);  // throws the unknown-family error
  }
  c.satisfied = c.residual <= 1e-9;
  return c;
}

FamilyChannel make_family(const std::string& family, const ParamMap& params) {
  Channel ch = family_channel_raw(family, params);
  TpConstraint tc = family_tp_constraint(family, params);
  if (!tc.satisfied) {
    throw std::invalid_argument("family '" + family +
                                "' trace-preservation constraint violated (residual " +
                                fmt(tc.residual) + "): " + tc.description);
  }
  FamilyChannel out;
  out.channel = ch;
  out.family = family;
  out.params = filled_params(family, params);

  Classification cls = classify(ch);
  out.cp = cls.cp;
  out.tp = cls.tp;
  out.min_choi_eig = cls.min_choi_eig;
  if (!cls.cp) {
    out.warnings.push_back("not completely positive: min Choi eigenvalue = " +
                           fmt(cls.min_choi_eig));
  }

  if (family == "su3-8") {
    out.notes.push_back("action: E(rho) = (p tr(rho) I + (2 - 3 p) rho) / 2");
    out.notes.push_back("completely positive iff 0 <= p <= 3/4");
    out.notes.push_back(
        "p = 3/4 is the trace-normalized traceless-multiplet channel "
        "E(rho) = (3 tr(rho) I - rho) / 8; a bare 1/2 prefactor on that multiplet "
        "would be neither trace preserving (sum A^dag A = (4/3) I) nor completely "
        "positive (min Choi eigenvalue -1)");
  } else if (family == "su3-6") {
    out.notes.push_back("action: E(rho) = ((2 - p) tr(rho) I + (3 p - 2) rho^T) / 4");
    out.notes.push_back("completely positive iff 0 <= p <= 1");
    out.notes.push_back(
        "p = 0 gives (tr(rho) I - rho^T) / 2; p = 1 gives (tr(rho) I + rho^T) / 4");
  } else if (family == "symmetric-pauli") {
    int m = ((int_param(params, family, "m") % 3) + 3) % 3;
    int n = ((int_param(params, family, "n") % 3) + 3) % 3;
    auto cosets = shift_cosets(m, n);
    std::string note = "coset weights (each Pauli term gets q_k / 3):";
    for (int k = 0; k < 3; ++k) {
      note += " q" + std::to_string(k) + " -> {";
      for (size_t t = 0; t < cosets[k].size(); ++t) {
        note += (t ? ", " : "") + std::string("(") + std::to_string(cosets[k][t].first) + "," +
                std::to_string(cosets[k][t].second) + ")";
      }
      note += "}";
    }
    out.notes.push_back(note);
  } else if (family == "sod") {
    out.notes.push_back(
        "convex weights over (identity, mixing, transpose): "
        "(beta, d (alpha - gamma), (d + 1) gamma)");
  }
  return out;
}

CpInterval su3_family_cp_interval(const std::string& family, double tol) {
  if (family != "su3-8" && family != "su3-6") {
    throw std::invalid_argument("cp interval scan supports families 'su3-8' and 'su3-6'");
  }
  auto min_eig = [&](double p) {
    ParamMap params;
    params["p"] = Complex(p, 0.0);
    Channel ch = family_channel_raw(family, params);
    EigResult eig = hermitian_eig(choi(ch).m);
    return eig.values.minCoeff();
  };
  const double cp_cut = -1e-12;
  double inside = 0.5;  // both families are CP here
  if (min_eig(inside) < cp_cut) {
    throw std::runtime_error("cp interval scan: reference point p = 0.5 is not CP");
  }
  auto bisect = [&](double good, double bad) {
    while (std::abs(bad - good) > tol) {
      double mid = 0.5 * (good + bad);
      if (min_eig(mid) >= cp_cut) {
        good = mid;
      } else {
        bad = mid;
      }
    }
    return good;
  };
  double lo = -2.0, hi = 3.0;  // both endpoints are non-CP for these families
  CpInterval out;
  out.p_min = bisect(inside, lo);
  out.p_max = bisect(inside, hi);
  return out;
}

std::vector<SymmetryWitness> family_symmetries(const std::string& family, const ParamMap& params) {
  std::vector<SymmetryWitness> out;
  auto lie_witness = [&](const std::string& desc, const LieAlgebraRep& d1,
                         const LieAlgebraRep& d2) {
    SymmetryWitness w;
    w.description = desc;
    w.lie = true;
    w.lie_d1 = d1;
    w.lie_d2 = d2;
    out.push_back(w);
  };
  auto finite_witness = [&](const std::string& desc, std::vector<Matrix> gens) {
    SymmetryWitness w;
    w.description = desc;
    w.d1_elems = gens;
    w.d2_elems = std::move(gens);
    out.push_back(w);
  };

  if (family == "identity" || family == "mixing" || family == "su3-8") {
    lie_witness("su(3) covariant, input 3 output 3", su3_rep("3"), su3_rep("3"));
  } else if (family == "transpose" || family == "su3-6") {
    lie_witness("su(3) covariant, input 3 output 3bar", su3_rep("3"), su3_rep("3bar"));
  } else if (family == "sod") {
    lie_witness("so(3) covariant under real rotations", so3_rep(), so3_rep());
  } else if (family == "cyclicZ3") {
    finite_witness("covariant under the cyclic group generated by diag(1, w, w^2)",
                   {pauli_z(3)});
  } else if (family == "hadamard3") {
    finite_witness("covariant under the order-4 group generated by the Fourier matrix",
                   {hadamard_matrix(3)});
  } else if (family == "pauli" || family == "symmetric-pauli") {
    finite_witness("covariant under the Pauli group", {pauli_x(3), pauli_z(3)});
    if (family == "symmetric-pauli") {
      int m = ((int_param(params, family, "m") % 3) + 3) % 3;
      int n = ((int_param(params, family, "n") % 3) + 3) % 3;
      SymmetryWitness w;
      w.description = "invariant under conjugation by X^" + std::to_string(m) + " Z^" +
                      std::to_string(n);
      w.symmetric = true;
      w.d1_elems = {pauli_op(3, m, n)};
      out.push_back(w);
    }
  } else if (family == "s3-covariant") {
    auto reps = s3_reps();
    finite_witness("covariant under the permutation group on three basis states",
                   {reps.at("defining").elements[reps.at("defining").generator_indices[0]],
                    reps.at("defining").elements[reps.at("defining").generator_indices[1]]});
  } else if (family == "s3-symmetric") {
    auto reps = s3_reps();
    SymmetryWitness w;
    w.description = "invariant under the permutation group on three basis states";
    w.symmetric = true;
    w.d1_elems = {reps.at("defining").elements[reps.at("defining").generator_indices[0]],
                  reps.at("defining").elements[reps.at("defining").generator_indices[1]]};
    out.push_back(w);
  } else if (family == "u1") {
    lie_witness("covariant under diag(1, 1, e^{i t})", u1_rep(), u1_rep());
  } else if (family == "u1u1") {
    lie_witness("covariant under diag(1, e^{i t1}, e^{i t2})", u1u1_rep(), u1u1_rep());
  } else {
    family_channel_raw(family, params);  // throws the unknown-family error
  }
  return out;
}

}  // namespace covchan
