// n-qubit pure states, density matrices, local-operation application, qubit
// permutations, and the symmetric-subspace <-> spin-j dictionary.
#pragma once

#include <vector>

#include "stellar/numeric.hpp"

namespace stellar {

struct PureState {
  int n = 1;  // qubit count, 1..12; qubit 0 is the most significant index bit
  cvec amp;   // length 2^n, bitstring-ascending
};

// Validating constructor: 1 <= n <= 12, amp.size() == 2^n, finite entries.
PureState make_pure(int n, cvec amp);
PureState basis_state(int n, unsigned bits);

double state_norm(const PureState& s);
PureState normalized_copy(PureState s);
cplx state_inner(const PureState& a, const PureState& b);  // <a|b>
double state_distance(const PureState& a, const PureState& b);

void require_qubits(const PureState& s, int n, const char* where);
void require_normalized(const PureState& s, double gate, const char* where);

// Applies chain entries in order; each entry acts on one qubit slot.
PureState apply_local(const PureState& s, const LocalOpChain& chain);

// Moves qubit k to position sigma[k]: amp'[i_{sigma(0)} ... i_{sigma(n-1)}] =
// amp[i_0 ... i_{n-1}]. sigma must be a bijection on {0..n-1}.
PureState permute_qubits(const PureState& s, const std::vector<int>& sigma);

// max over transpositions (i j) of || psi - P_ij psi ||.
double symmetry_defect(const PureState& s);

struct SpinState {
  int two_j = 1;
  cvec c;  // c[k] is the amplitude of |j, m = j - k>, equal to the Dicke coefficient a_k
};

double spin_norm(const SpinState& s);

// Requires symmetry_defect <= tol.symmetry; projects onto the Dicke basis.
SpinState symmetric_to_spin(const PureState& s, const Tolerances& tol = {});
PureState spin_to_symmetric(const SpinState& s);

// Overlap against the spin coherent state pointing along (theta, phi):
// sum_m sqrt(C(2j, j+m)) cos(theta/2)^(j-m) (sin(theta/2) e^{i phi})^(j+m) c_m.
cplx coherent_overlap(const SpinState& s, double theta, double phi);

struct DensityMatrix {
  int dim = 1;
  cvec rho;  // row-major dim x dim; row a corresponds to m = j - a
  cplx& at(int r, int c) { return rho[static_cast<size_t>(r) * dim + c]; }
  const cplx& at(int r, int c) const { return rho[static_cast<size_t>(r) * dim + c]; }
};

// Validates Hermiticity (1e-12), unit trace (1e-12), eigenvalues >= -1e-10.
DensityMatrix make_density(int dim, cvec entries);

// Partial trace onto the listed qubits (0-based, unique, nonempty, not all).
DensityMatrix reduced_density(const PureState& s, const std::vector<int>& keep);

}  // namespace stellar
