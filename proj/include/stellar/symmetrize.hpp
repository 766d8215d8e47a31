// Determinant-preserving (SL(2,C) per qubit) symmetrization of three-qubit
// states: GHZ-class states map to cos(vartheta)|000> + sin(vartheta)|111>,
// W-class states map to the symmetric W state.
#pragma once

#include "stellar/acin.hpp"
#include "stellar/numeric.hpp"
#include "stellar/qstate.hpp"

namespace stellar {

enum class StateClass { GHZ_CLASS, W_CLASS };

struct SymmetrizationResult {
  AcinForm input_form;
  LocalOpChain chain;   // apply_local(input, chain) == scale * output (within
                        // tolerance at moderate conditioning)
  PureState output;     // exact normalized symmetric representative
  double vartheta = 0;  // arccos(nu1) in [0, pi/4] for GHZ class; 0 for W class
  StateClass class_tag = StateClass::GHZ_CLASS;
  cplx scale{1.0, 0.0};
  bool renormalized = false;
};

struct GammaNu {
  double gamma = 0.0;
  double nu1 = 0.0;  // nu1 >= nu2, nu1^2 + nu2^2 = 1, nu1 nu2 = lambda0 lambda4
  double nu2 = 0.0;
};

// Third-qubit shear making the last two qubits interchangeable.
LocalOpChain build_M(const AcinForm& f, double gamma);
// First-qubit unit-determinant map aligning the first qubit with the others.
LocalOpChain build_Mprime(const AcinForm& f);
// The same upper-triangular shear on all three qubits, finishing the
// reduction to the two-term generalized-GHZ normal form.
LocalOpChain build_Mdoubleprime(const AcinForm& f);

GammaNu gamma_and_nu(const AcinForm& f);

SymmetrizationResult symmetrize_ghz_class(const AcinForm& f, const Tolerances& tol = {});

// Symmetrizes c|001> + d|010> + e|100> (c, d, e > 0) by two diagonal
// unit-determinant maps; scale = sqrt(3 c e).
SymmetrizationResult symmetrize_w_class(double c, double d, double e,
                                        const Tolerances& tol = {});

// Full dispatch: canonical form, then the GHZ- or W-class pipeline.
SymmetrizationResult symmetrize(const PureState& s, const Tolerances& tol = {});

}  // namespace stellar
