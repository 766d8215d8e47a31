// Canonical five-parameter form of a three-qubit pure state under local
// unitaries: lambda0|000> + lambda1 e^{i phi}|100> + lambda2|101> +
// lambda3|110> + lambda4|111>, lambda_i >= 0, phi in [0, pi].
#pragma once

#include "stellar/numeric.hpp"
#include "stellar/qstate.hpp"

namespace stellar {

struct AcinForm {
  double lambda[5] = {1.0, 0.0, 0.0, 0.0, 0.0};
  double phi = 0.0;
};

// The state the form denotes, as a normalized 3-qubit state.
PureState reconstruct(const AcinForm& f);

// tau3 of the form: 4 lambda0^2 lambda4^2.
double tangle_from_acin(const AcinForm& f);

// Delta = lambda1 lambda4 e^{i phi} - lambda2 lambda3.
cplx acin_delta(const AcinForm& f);

struct AcinResult {
  AcinForm form;
  LocalOpChain chain;  // three unitaries, slots 0/1/2: apply_local(input, chain)
                       // equals reconstruct(form) up to numerical tolerance
};

// Computes the canonical form. Among the candidate slice-pencil roots the
// selection prefers forms with phi in [0, pi], then maximal lambda0, then
// minimal lambda1. lambda1 below tol.phase_gauge reports phi = 0.
AcinResult acin_canonical(const PureState& s, const Tolerances& tol = {});

}  // namespace stellar
