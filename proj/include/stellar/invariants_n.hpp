// Polynomial SL-invariants of four- and five-qubit states, the two-parameter
// Bell-pair family g_abcd, and its distinguished symmetrizable member.
#pragma once

#include "stellar/numeric.hpp"
#include "stellar/qstate.hpp"

namespace stellar {

// Degree-2 invariant: the signed corner pairing sum over amplitude pairs
// (i, 15 - i) with parity signs.
cplx inv4_H(const PureState& psi);
// Degree-4 determinant invariants of the two inequivalent 4x4 reshapes.
cplx inv4_L(const PureState& psi);
cplx inv4_M(const PureState& psi);
// Degree-6 invariant: determinant of the 3x3 coefficient matrix of the
// biquadratic det_{jk}[ sum_{il} amp_{ijkl} x_i t_l ].
cplx inv4_D(const PureState& psi);

struct FourInvariants {
  cplx H, L, M, D;
};
FourInvariants invariants4(const PureState& psi);

// Bell-pair combination with pairing (12)(34); amplitudes are used raw (the
// state is not normalized), so closed-form invariants hold exactly:
// H = (a^2+b^2+c^2+d^2)/2, L = abcd.
PureState g_abcd(const cplx& a, const cplx& b, const cplx& c, const cplx& d);

// Degeneracy test for symmetrizability of g_abcd: abcd must vanish together
// with one of the four difference/sum coincidences of the pair combinations.
bool symmetrizable_generic(const cplx& a, const cplx& b, const cplx& c, const cplx& d,
                           double tol_eq = 1e-10);

// The symmetrizable g_abcd member with third roots of unity as parameters,
// the two-operation local chain that symmetrizes it, and its exact image.
PureState l_state();
LocalOpChain l_state_chain();
PureState l_state_symmetrized();

// Unnormalized symmetric family with amplitude (b+2d)/2 on the corner strings
// and b/2 on the six weight-2 strings; its star polynomial is exactly
// ((b+2d)/2) z^4 + 3b z^2 + (b+2d)/2.
PureState special_case_family(const cplx& b, const cplx& d);

// Degree-6 five-qubit invariant built from fifteen epsilon contractions of
// six amplitude tensors; vanishes identically on symmetric states.
cplx inv5_F(const PureState& psi);

}  // namespace stellar
