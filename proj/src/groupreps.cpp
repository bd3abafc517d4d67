#include "covchan/groupreps.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <stdexcept>

namespace covchan {

namespace {

// Proportionality test for same-size matrices; returns the phase c with
// b = c * a, or nullopt-like flag via ok.
struct PhaseMatch {
  bool ok = false;
  Complex phase{1.0, 0.0};
};

PhaseMatch match_up_to_phase(const Matrix& a, const Matrix& b, double tol) {
  PhaseMatch m;
  Complex s = (a.adjoint() * b).trace();
  double na = a.norm(), nb = b.norm();
  if (na < tol || nb < tol) {
    m.ok = na < tol && nb < tol;
    return m;
  }
  if (std::abs(s) < 0.5 * na * nb) return m;  // cheap reject
  Complex phase = s / (na * na);
  if ((b - phase * a).norm() <= tol * std::max(1.0, nb)) {
    m.ok = true;
    m.phase = phase;
  }
  return m;
}

int find_element(const std::vector<Matrix>& elements, const Matrix& c, double tol,
                 Complex* phase_out) {
  for (size_t k = 0; k < elements.size(); ++k) {
    PhaseMatch m = match_up_to_phase(elements[k], c, tol);
    if (m.ok) {
      if (phase_out) *phase_out = m.phase;
      return static_cast<int>(k);
    }
  }
  return -1;
}

void fill_tables(FiniteGroupRep& rep, double tol) {
  int n = rep.order;
  rep.mult_table.assign(n, std::vector<int>(n, -1));
  rep.phases.assign(n, std::vector<Complex>(n, Complex(1.0, 0.0)));
  rep.projective = false;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      Matrix prod = rep.elements[g] * rep.elements[h];
      Complex phase;
      int idx = find_element(rep.elements, prod, tol, &phase);
      if (idx < 0) throw std::runtime_error("finite group: product left the element set");
      rep.mult_table[g][h] = idx;
      rep.phases[g][h] = phase;
      if (std::abs(phase - Complex(1.0, 0.0)) > 1e-8) rep.projective = true;
    }
}

}  // namespace

std::vector<Matrix> FiniteGroupRep::generators() const {
  std::vector<Matrix> g;
  for (int idx : generator_indices) g.push_back(elements[idx]);
  return g;
}

FiniteGroupRep finite_group_from_generators(const std::string& name,
                                            const std::vector<Matrix>& gens, double tol,
                                            int max_order) {
  if (gens.empty()) throw std::invalid_argument("finite group: no generators");
  int dim = static_cast<int>(gens[0].rows());
  for (const Matrix& g : gens)
    if (g.rows() != dim || g.cols() != dim)
      throw std::invalid_argument("finite group: generator dimension mismatch");

  FiniteGroupRep rep;
  rep.name = name;
  rep.dim = dim;
  rep.elements.push_back(Matrix::Identity(dim, dim));
  rep.words.push_back({});
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int g = queue.front();
    queue.pop_front();
    for (size_t t = 0; t < gens.size(); ++t) {
      Matrix c = rep.elements[g] * gens[t];
      if (find_element(rep.elements, c, tol, nullptr) >= 0) continue;
      rep.elements.push_back(c);
      std::vector<int> w = rep.words[g];
      w.push_back(static_cast<int>(t));
      rep.words.push_back(std::move(w));
      queue.push_back(static_cast<int>(rep.elements.size()) - 1);
      if (static_cast<int>(rep.elements.size()) > max_order)
        throw std::runtime_error("finite group: closure exceeds max_order");
    }
  }
  rep.order = static_cast<int>(rep.elements.size());
  for (size_t t = 0; t < gens.size(); ++t) {
    int idx = find_element(rep.elements, gens[t], tol, nullptr);
    if (idx < 0) throw std::runtime_error("finite group: generator not found in closure");
    rep.generator_indices.push_back(idx);
  }
  fill_tables(rep, tol);
  return rep;
}

FiniteGroupRep rep_from_words(const FiniteGroupRep& group, const std::vector<Matrix>& gen_images,
                              const std::string& name) {
  if (gen_images.size() != group.generator_indices.size())
    throw std::invalid_argument("rep_from_words: generator count mismatch");
  int dim = static_cast<int>(gen_images[0].rows());
  FiniteGroupRep rep;
  rep.name = name;
  rep.order = group.order;
  rep.dim = dim;
  rep.generator_indices = group.generator_indices;
  rep.words = group.words;
  for (const auto& word : group.words) {
    Matrix m = Matrix::Identity(dim, dim);
    for (int t : word) m = m * gen_images[t];
    rep.elements.push_back(m);
  }
  // The abstract multiplication table carries over; phases are recomputed
  // against it since a non-faithful image collapses differently.
  rep.mult_table = group.mult_table;
  rep.phases.assign(rep.order, std::vector<Complex>(rep.order, Complex(1.0, 0.0)));
  rep.projective = false;
  for (int g = 0; g < rep.order; ++g)
    for (int h = 0; h < rep.order; ++h) {
      Matrix prod = rep.elements[g] * rep.elements[h];
      PhaseMatch m = match_up_to_phase(rep.elements[rep.mult_table[g][h]], prod, 1e-8);
      if (!m.ok) throw std::runtime_error("rep_from_words: images violate the group table");
      rep.phases[g][h] = m.phase;
      if (std::abs(m.phase - Complex(1.0, 0.0)) > 1e-8) rep.projective = true;
    }
  return rep;
}

FiniteGroupRep cyclic_rep(int n, const Matrix& x, const std::string& name) {
  if (n < 1) throw std::invalid_argument("cyclic_rep: need n >= 1");
  int dim = static_cast<int>(x.rows());
  Matrix p = Matrix::Identity(dim, dim);
  for (int k = 0; k < n; ++k) p = p * x;
  if ((p - Matrix::Identity(dim, dim)).norm() > 1e-10 * std::max(1.0, p.norm()))
    throw std::invalid_argument("cyclic_rep: generator^n != I");
  FiniteGroupRep rep = finite_group_from_generators(name, {x});
  if (rep.order != n) throw std::invalid_argument("cyclic_rep: generator order is not n");
  return rep;
}

FiniteGroupRep cyclic_irrep(const FiniteGroupRep& cyclic_group, int k) {
  int n = cyclic_group.order;
  Complex w = std::exp(Complex(0.0, 2.0 * std::numbers::pi * k / n));
  Matrix g(1, 1);
  g(0, 0) = w;
  FiniteGroupRep rep = rep_from_words(cyclic_group, {g}, "chi" + std::to_string(((k % n) + n) % n));
  return rep;
}

Matrix hadamard_matrix(int d) {
  Matrix h(d, d);
  Complex w = std::exp(Complex(0.0, 2.0 * std::numbers::pi / d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) h(i, j) = std::pow(w, i * j) / std::sqrt(static_cast<double>(d));
  return h;
}

Matrix pauli_x(int d) { return pauli_op(d, 1, 0); }
Matrix pauli_z(int d) { return pauli_op(d, 0, 1); }

Matrix pauli_op(int d, int m, int n) {
  Matrix op = Matrix::Zero(d, d);
  Complex w = std::exp(Complex(0.0, 2.0 * std::numbers::pi / d));
  for (int j = 0; j < d; ++j) op(((j + m) % d + d) % d, j) = std::pow(w, ((j * n) % d + d) % d);
  return op;
}

FiniteGroupRep pauli_group(int d) {
  return finite_group_from_generators("pauli" + std::to_string(d), {pauli_x(d), pauli_z(d)});
}

FiniteGroupRep pauli_irrep(int d, int k, int l) {
  FiniteGroupRep group = pauli_group(d);
  Complex w = std::exp(Complex(0.0, 2.0 * std::numbers::pi / d));
  Matrix gx(1, 1), gz(1, 1);
  gx(0, 0) = std::pow(w, ((l % d) + d) % d);        // conjugation by X shifts by omega^l
  gz(0, 0) = std::pow(w, ((-k % d) + d) % d);       // conjugation by Z by omega^{-k}
  return rep_from_words(group, {gx, gz}, "chi" + std::to_string(k) + std::to_string(l));
}

std::map<std::string, FiniteGroupRep> s3_reps() {
  Matrix s1 = Matrix::Zero(3, 3), s2 = Matrix::Zero(3, 3);
  s1(0, 1) = s1(1, 0) = s1(2, 2) = 1.0;
  s2(0, 0) = s2(1, 2) = s2(2, 1) = 1.0;
  FiniteGroupRep defining = finite_group_from_generators("s3", {s1, s2});

  Matrix one(1, 1), sgn(1, 1);
  one(0, 0) = 1.0;
  sgn(0, 0) = -1.0;
  Matrix t1(2, 2), t2(2, 2);
  t1 << 1.0, 0.0, 0.0, -1.0;
  t2 << -0.5, std::sqrt(3.0) / 2.0, std::sqrt(3.0) / 2.0, 0.5;

  std::map<std::string, FiniteGroupRep> reps;
  reps["1"] = rep_from_words(defining, {one, one}, "1");
  reps["1p"] = rep_from_words(defining, {sgn, sgn}, "1p");
  reps["2"] = rep_from_words(defining, {t1, t2}, "2");
  reps["defining"] = std::move(defining);
  return reps;
}

FiniteGroupRep conjugate_rep(const FiniteGroupRep& r) {
  FiniteGroupRep out = r;
  out.name = "conj(" + r.name + ")";
  for (Matrix& m : out.elements) m = m.conjugate();
  for (auto& row : out.phases)
    for (Complex& p : row) p = std::conj(p);
  return out;
}

FiniteGroupRep tensor_rep(const FiniteGroupRep& a, const FiniteGroupRep& b) {
  if (a.order != b.order || a.mult_table != b.mult_table)
    throw std::invalid_argument("tensor_rep: group structures differ");
  FiniteGroupRep out;
  out.name = a.name + "(x)" + b.name;
  out.order = a.order;
  out.dim = a.dim * b.dim;
  out.generator_indices = a.generator_indices;
  out.mult_table = a.mult_table;
  out.words = a.words;
  out.projective = false;
  for (int g = 0; g < a.order; ++g) out.elements.push_back(kron(a.elements[g], b.elements[g]));
  out.phases.assign(out.order, std::vector<Complex>(out.order, Complex(1.0, 0.0)));
  for (int g = 0; g < out.order; ++g)
    for (int h = 0; h < out.order; ++h) {
      Complex p = a.phases[g][h] * b.phases[g][h];
      out.phases[g][h] = p;
      if (std::abs(p - Complex(1.0, 0.0)) > 1e-8) out.projective = true;
    }
  return out;
}

int irrep_multiplicity(const FiniteGroupRep& irrep, const FiniteGroupRep& product) {
  if (irrep.order != product.order || irrep.mult_table != product.mult_table)
    throw std::invalid_argument("irrep_multiplicity: group structures differ");
  if (irrep.projective || product.projective)
    throw std::invalid_argument("irrep_multiplicity: characters need non-projective reps");
  Complex acc(0.0, 0.0);
  for (int g = 0; g < product.order; ++g)
    acc += std::conj(irrep.elements[g].trace()) * product.elements[g].trace();
  acc /= static_cast<double>(product.order);
  double m = acc.real();
  int mi = static_cast<int>(std::lround(m));
  if (std::abs(m - mi) > 1e-8 || std::abs(acc.imag()) > 1e-8)
    throw std::runtime_error("irrep_multiplicity: non-integer character inner product");
  return mi;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Matrix> gell_mann_halves() {
  const Complex I(0.0, 1.0);
  auto E = [](int i, int j) {
    Matrix m = Matrix::Zero(3, 3);
    m(i, j) = 1.0;
    return m;
  };
  std::vector<Matrix> lam(8);
  lam[0] = E(0, 1) + E(1, 0);
  lam[1] = -I * E(0, 1) + I * E(1, 0);
  lam[2] = E(0, 0) - E(1, 1);
  lam[3] = E(0, 2) + E(2, 0);
  lam[4] = -I * E(0, 2) + I * E(2, 0);
  lam[5] = E(1, 2) + E(2, 1);
  lam[6] = -I * E(1, 2) + I * E(2, 1);
  lam[7] = (E(0, 0) + E(1, 1) - 2.0 * E(2, 2)) / std::sqrt(3.0);
  for (Matrix& m : lam) m *= 0.5;
  return lam;
}

LieAlgebraRep su3_fundamental() {
  LieAlgebraRep rep;
  rep.name = "3";
  rep.algebra = "su3";
  rep.dim = 3;
  rep.generators = gell_mann_halves();
  rep.cartan = {2, 7};
  return rep;
}

// Isometry onto the symmetric subspace of C^3 (x) C^3, pairs (i<=j) in lex order.
Matrix symmetric_isometry() {
  Matrix v = Matrix::Zero(9, 6);
  int col = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      if (i == j) {
        v(3 * i + j, col) = 1.0;
      } else {
        v(3 * i + j, col) = 1.0 / std::sqrt(2.0);
        v(3 * j + i, col) = 1.0 / std::sqrt(2.0);
      }
      ++col;
    }
  return v;
}

// Isometry onto the traceless subspace of C^3 (x) C^3bar: columns are the
// vectorized trace-orthonormal traceless Hermitian matrices.
Matrix traceless_isometry() {
  std::vector<Matrix> lam = gell_mann_halves();
  Matrix v(9, 8);
  for (int n = 0; n < 8; ++n) v.col(n) = vectorize(lam[n] * std::sqrt(2.0));
  return v;
}

LieAlgebraRep restrict_rep(const std::string& name, const LieAlgebraRep& big, const Matrix& iso) {
  LieAlgebraRep rep;
  rep.name = name;
  rep.algebra = big.algebra;
  rep.dim = static_cast<int>(iso.cols());
  rep.cartan = big.cartan;
  for (const Matrix& t : big.generators) {
    Matrix r = iso.adjoint() * t * iso;
    // Invariance check: the generator must not leak out of the subspace.
    if ((t * iso - iso * r).norm() > 1e-9)
      throw std::runtime_error("restrict_rep: subspace is not invariant");
    rep.generators.push_back(r);
  }
  return rep;
}

}  // namespace

LieAlgebraRep conjugate_rep(const LieAlgebraRep& r) {
  LieAlgebraRep out = r;
  out.name = "conj(" + r.name + ")";
  for (Matrix& t : out.generators) t = (-t.transpose()).eval();
  return out;
}

LieAlgebraRep tensor_rep(const LieAlgebraRep& a, const LieAlgebraRep& b) {
  if (a.algebra != b.algebra || a.generators.size() != b.generators.size())
    throw std::invalid_argument("tensor_rep: algebra mismatch");
  LieAlgebraRep out;
  out.name = a.name + "(x)" + b.name;
  out.algebra = a.algebra;
  out.dim = a.dim * b.dim;
  out.cartan = a.cartan;
  Matrix ia = Matrix::Identity(a.dim, a.dim), ib = Matrix::Identity(b.dim, b.dim);
  for (size_t n = 0; n < a.generators.size(); ++n)
    out.generators.push_back(kron(a.generators[n], ib) + kron(ia, b.generators[n]));
  return out;
}

LieAlgebraRep su3_rep(const std::string& label) {
  LieAlgebraRep fund = su3_fundamental();
  if (label == "3") return fund;
  if (label == "3bar") {
    LieAlgebraRep r = conjugate_rep(fund);
    r.name = "3bar";
    return r;
  }
  if (label == "1") {
    LieAlgebraRep r;
    r.name = "1";
    r.algebra = "su3";
    r.dim = 1;
    r.cartan = {2, 7};
    for (int n = 0; n < 8; ++n) r.generators.push_back(Matrix::Zero(1, 1));
    return r;
  }
  if (label == "6") return restrict_rep("6", tensor_rep(fund, fund), symmetric_isometry());
  if (label == "6bar") {
    LieAlgebraRep r = conjugate_rep(su3_rep("6"));
    r.name = "6bar";
    return r;
  }
  if (label == "8")
    return restrict_rep("8", tensor_rep(fund, conjugate_rep(fund)), traceless_isometry());
  throw std::invalid_argument("su3_rep: unknown label '" + label + "'");
}

LieAlgebraRep u1_rep() {
  LieAlgebraRep rep;
  rep.name = "defining";
  rep.algebra = "u1";
  rep.dim = 3;
  Matrix t = Matrix::Zero(3, 3);
  t(2, 2) = 1.0;
  rep.generators = {t};
  rep.cartan = {0};
  return rep;
}

LieAlgebraRep u1u1_rep() {
  LieAlgebraRep rep;
  rep.name = "defining";
  rep.algebra = "u1u1";
  rep.dim = 3;
  Matrix t1 = Matrix::Zero(3, 3), t2 = Matrix::Zero(3, 3);
  t1(1, 1) = 1.0;
  t2(2, 2) = 1.0;
  rep.generators = {t1, t2};
  rep.cartan = {0, 1};
  return rep;
}

LieAlgebraRep so3_rep() {
  LieAlgebraRep rep;
  rep.name = "vector";
  rep.algebra = "so3";
  rep.dim = 3;
  const Complex I(0.0, 1.0);
  for (int k = 0; k < 3; ++k) {
    Matrix j = Matrix::Zero(3, 3);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        int eps = (k == a || k == b || a == b) ? 0 : (((a - k + 3) % 3 == 1) ? 1 : -1);
        if (eps != 0) j(a, b) = -I * static_cast<double>(eps);
      }
    rep.generators.push_back(j);
  }
  return rep;
}

Matrix exp_i(const Matrix& herm, double theta) {
  EigResult eig = hermitian_eig(herm, 1e-8);
  Matrix d = Matrix::Zero(herm.rows(), herm.cols());
  for (Eigen::Index k = 0; k < eig.values.size(); ++k)
    d(k, k) = std::exp(Complex(0.0, theta * eig.values(k)));
  return eig.vectors * d * eig.vectors.adjoint();
}

RealMatrix rep_weights(const LieAlgebraRep& rep) {
  if (rep.cartan.empty()) throw std::invalid_argument("rep_weights: no Cartan generators");
  Matrix combo = Matrix::Zero(rep.dim, rep.dim);
  double c = 1.0;
  for (int idx : rep.cartan) {
    combo += c * rep.generators[idx];
    c *= std::numbers::pi;  // generic direction: no distinct weights collide
  }
  EigResult eig = hermitian_eig(combo, 1e-8);
  RealMatrix w(rep.dim, static_cast<Eigen::Index>(rep.cartan.size()));
  for (int r = 0; r < rep.dim; ++r) {
    Vector v = eig.vectors.col(r);
    for (size_t k = 0; k < rep.cartan.size(); ++k) {
      Complex val = (v.adjoint() * rep.generators[rep.cartan[k]] * v)(0, 0);
      w(r, static_cast<Eigen::Index>(k)) = val.real();
    }
  }
  return w;
}

std::vector<RootOperator> su3_root_operators(const LieAlgebraRep& rep) {
  if (rep.algebra != "su3") throw std::invalid_argument("su3_root_operators: not su(3)");
  const double h = std::sqrt(3.0) / 2.0;
  struct Pair {
    int a, b;
    std::array<double, 2> root;
  };
  const Pair pairs[3] = {{0, 1, {1.0, 0.0}}, {3, 4, {0.5, h}}, {5, 6, {-0.5, h}}};
  std::vector<RootOperator> out;
  for (const Pair& p : pairs) {
    RootOperator plus, minus;
    plus.op = rep.generators[p.a] + Complex(0.0, 1.0) * rep.generators[p.b];
    plus.root = p.root;
    minus.op = rep.generators[p.a] - Complex(0.0, 1.0) * rep.generators[p.b];
    minus.root = {-p.root[0], -p.root[1]};
    out.push_back(plus);
    out.push_back(minus);
  }
  return out;
}

namespace {

using Weight = std::array<double, 2>;

bool weight_less(const Weight& a, const Weight& b) {
  const double tol = 1e-6;
  if (a[0] < b[0] - tol) return true;
  if (a[0] > b[0] + tol) return false;
  return a[1] < b[1] - tol;
}

bool weight_eq(const Weight& a, const Weight& b) {
  return std::abs(a[0] - b[0]) <= 1e-6 && std::abs(a[1] - b[1]) <= 1e-6;
}

std::vector<Weight> weight_multiset(const LieAlgebraRep& rep) {
  RealMatrix w = rep_weights(rep);
  std::vector<Weight> ws;
  for (int r = 0; r < rep.dim; ++r) ws.push_back({w(r, 0), w(r, 1)});
  return ws;
}

}  // namespace

std::map<std::string, int> su3_decompose(const LieAlgebraRep& rep) {
  if (rep.algebra != "su3") throw std::invalid_argument("su3_decompose: not su(3)");
  static const std::vector<std::string> labels = {"1", "3", "3bar", "6", "6bar", "8"};
  std::vector<std::pair<std::string, std::vector<Weight>>> table;
  for (const std::string& l : labels) table.emplace_back(l, weight_multiset(su3_rep(l)));

  std::vector<Weight> remaining = weight_multiset(rep);
  std::map<std::string, int> counts;
  while (!remaining.empty()) {
    size_t hi = 0;
    for (size_t k = 1; k < remaining.size(); ++k)
      if (weight_less(remaining[hi], remaining[k])) hi = k;
    Weight top = remaining[hi];
    const std::vector<Weight>* irrep_ws = nullptr;
    std::string found;
    for (const auto& [label, ws] : table) {
      Weight w_hi = ws[0];
      for (const Weight& w : ws)
        if (weight_less(w_hi, w)) w_hi = w;
      if (weight_eq(w_hi, top)) {
        irrep_ws = &ws;
        found = label;
        break;
      }
    }
    if (!irrep_ws)
      throw std::runtime_error("su3_decompose: highest weight outside the supported table");
    for (const Weight& w : *irrep_ws) {
      bool erased = false;
      for (size_t k = 0; k < remaining.size(); ++k)
        if (weight_eq(remaining[k], w)) {
          remaining.erase(remaining.begin() + static_cast<long>(k));
          erased = true;
          break;
        }
      if (!erased) throw std::runtime_error("su3_decompose: weight subtraction failed");
    }
    counts[found] += 1;
  }
  return counts;
}

int irrep_multiplicity(const std::string& su3_label, const LieAlgebraRep& product) {
  auto counts = su3_decompose(product);
  auto it = counts.find(su3_label);
  return it == counts.end() ? 0 : it->second;
}

int abelian_multiplicity(const std::vector<int>& alpha, const LieAlgebraRep& product) {
  if (product.cartan.size() != alpha.size())
    throw std::invalid_argument("abelian_multiplicity: weight size mismatch");
  RealMatrix w = rep_weights(product);
  int count = 0;
  for (int r = 0; r < product.dim; ++r) {
    bool all = true;
    for (size_t k = 0; k < alpha.size(); ++k)
      if (std::abs(w(r, static_cast<Eigen::Index>(k)) - alpha[k]) > 1e-6) all = false;
    if (all) ++count;
  }
  return count;
}

}  // namespace covchan
