#pragma once

#include <array>
#include <map>
#include <string>

#include "covchan/matcore.hpp"

namespace covchan {

// Matrix representation of a finite group, stored as one matrix per abstract
// element. Products are matched up to a global phase so projective families
// (generalized Pauli) fit the same container; the phase cocycle is recorded
// but conjugation-style uses never need it.
struct FiniteGroupRep {
  std::string name;
  int order = 0;
  int dim = 0;
  std::vector<Matrix> elements;                 // [order]
  std::vector<int> generator_indices;
  std::vector<std::vector<int>> mult_table;     // [g][h] -> index of g*h
  std::vector<std::vector<Complex>> phases;     // elements[g]*elements[h] = phase * elements[g*h]
  std::vector<std::vector<int>> words;          // generator word per element
  bool projective = false;

  std::vector<Matrix> generators() const;
};

// Closure of the generator set under multiplication (BFS over right
// multiplication, deterministic element order). Throws if the closure
// exceeds max_order or products leave the set.
FiniteGroupRep finite_group_from_generators(const std::string& name,
                                            const std::vector<Matrix>& gens,
                                            double tol = 1e-8, int max_order = 4096);

// Another representation of the same abstract group: evaluates the stored
// generator words on new generator images.
FiniteGroupRep rep_from_words(const FiniteGroupRep& group, const std::vector<Matrix>& gen_images,
                              const std::string& name);

// <x> with x^n = I (checked to 1e-10); elements ordered I, x, ..., x^{n-1}.
FiniteGroupRep cyclic_rep(int n, const Matrix& x, const std::string& name = "cyclic");
// One-dimensional representation generator -> exp(2 pi i k / n).
FiniteGroupRep cyclic_irrep(const FiniteGroupRep& cyclic_group, int k);

Matrix hadamard_matrix(int d);  // (1/sqrt d) sum omega^{ij} |i><j|
Matrix pauli_x(int d);
Matrix pauli_z(int d);
// X_{mn} = X^m Z^n = sum_j omega^{jn} |j+m><j|.
Matrix pauli_op(int d, int m, int n);

// The d^2 operators X_{mn} as a projective group (phases recorded).
FiniteGroupRep pauli_group(int d);
// Character of the conjugation action: X_{kl} satisfies
// X_{mn}^{-1} X_{kl} X_{mn} = omega^{lm-kn} X_{kl}.
FiniteGroupRep pauli_irrep(int d, int k, int l);

// Permutation group on three letters: "defining" plus irreps "1", "1p", "2".
std::map<std::string, FiniteGroupRep> s3_reps();

FiniteGroupRep conjugate_rep(const FiniteGroupRep& r);
FiniteGroupRep tensor_rep(const FiniteGroupRep& a, const FiniteGroupRep& b);

// Multiplicity of an irreducible in a (non-projective) representation via
// the character inner product.
int irrep_multiplicity(const FiniteGroupRep& irrep, const FiniteGroupRep& product);

// ---------------------------------------------------------------------------

// Lie-algebra data: Hermitian generators T_n; group elements arise as
// exp(i theta T_n). cartan lists the generator indices whose joint spectrum
// defines weights.
struct LieAlgebraRep {
  std::string name;
  std::string algebra;  // "su3", "u1", "u1u1", "so3"
  int dim = 0;
  std::vector<Matrix> generators;
  std::vector<int> cartan;
};

// Labels: "1", "3", "3bar", "6", "6bar", "8".
LieAlgebraRep su3_rep(const std::string& label);
LieAlgebraRep u1_rep();    // generator diag(0,0,1)
LieAlgebraRep u1u1_rep();  // generators diag(0,1,0), diag(0,0,1)
LieAlgebraRep so3_rep();   // rotation generators (J_k)_{ab} = -i eps_{kab}

LieAlgebraRep conjugate_rep(const LieAlgebraRep& r);
LieAlgebraRep tensor_rep(const LieAlgebraRep& a, const LieAlgebraRep& b);

// exp(i theta T) for Hermitian T.
Matrix exp_i(const Matrix& herm, double theta);

// Weight rows (one per basis state of the rep, columns follow rep.cartan).
RealMatrix rep_weights(const LieAlgebraRep& rep);

// Ladder operators of su(3) in a given rep with their root vectors.
struct RootOperator {
  Matrix op;
  std::array<double, 2> root;
};
std::vector<RootOperator> su3_root_operators(const LieAlgebraRep& rep);

// Full decomposition by greedy highest-weight subtraction (dims <= 9).
std::map<std::string, int> su3_decompose(const LieAlgebraRep& rep);
int irrep_multiplicity(const std::string& su3_label, const LieAlgebraRep& product);

// Multiplicity of the joint integer weight alpha in an abelian (u1 / u1u1) rep.
int abelian_multiplicity(const std::vector<int>& alpha, const LieAlgebraRep& product);

}  // namespace covchan
