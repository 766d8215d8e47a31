// Three-qubit entanglement invariants: the degree-4 hyperdeterminant, the
// three-tangle, SLOCC covariance factors, and two-qubit Schmidt/concurrence
// helpers.
#pragma once

#include "stellar/numeric.hpp"
#include "stellar/qstate.hpp"

namespace stellar {

// Degree-4 polynomial in the amplitudes Gamma_{ijk} = amp[4i + 2j + k];
// invariant in modulus under unit-determinant local operations.
cplx hyperdet3(const PureState& s);

// tau3 = 4 |hyperdet3|; requires a normalized 3-qubit state.
double three_tangle(const PureState& s, const Tolerances& tol = {});

// Product over chain entries of det(mat)^2: hyperdet3(apply_local(s, chain))
// = covariance_factor(chain) * hyperdet3(s).
cplx covariance_factor(const LocalOpChain& chain);

struct SchmidtPair {
  double mu1 = 1.0;  // descending: mu1 >= mu2 >= 0
  double mu2 = 0.0;
  double chi = 0.0;  // arctan(mu2 / mu1) in [0, pi/4]
};

// Two-qubit helpers.
double concurrence2(const PureState& s, const Tolerances& tol = {});
SchmidtPair schmidt2(const PureState& s, const Tolerances& tol = {});

}  // namespace stellar
