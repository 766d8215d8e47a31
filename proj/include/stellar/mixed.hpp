// Spherical-tensor decomposition of spin-j density matrices and the star
// constellations of the rank-k components.
#pragma once

#include <vector>

#include "stellar/majorana.hpp"
#include "stellar/numeric.hpp"
#include "stellar/qstate.hpp"

namespace stellar {

// <j1 m1; j2 m2 | j m> with Condon-Shortley phases; arguments are doubled so
// half-integer spins stay integral. Selection-rule failures return 0;
// malformed quantum numbers throw.
double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2, int two_j, int two_m);

// Orthonormal irreducible tensor operator T^k_q on the spin-j space, row-major
// with rows/columns in descending m (row a <-> m = j - a); Tr(T^k_q^dag T^k'_q')
// = delta_kk' delta_qq'.
cvec tensor_op(int two_j, int k, int q);

struct SphericalDecomp {
  int two_j = 0;
  std::vector<cvec> components;  // components[k][q + k] = rho_kq, k = 0..2j
  std::vector<double> radii;     // radii[k] = sqrt(sum_q |rho_kq|^2)
};

SphericalDecomp spherical_decompose(const DensityMatrix& rho);

// Degree-2k polynomial whose roots are the rank-k component's stars:
// coeff[r] = (-1)^r sqrt(C(2k, r)) rho_{k, r-k}.
cvec rank_polynomial(const SphericalDecomp& d, int k);

struct MixedConstellation {
  int k = 0;
  double radius = 0.0;
  Constellation constellation;
  double antipodal_defect = 0.0;  // Hermiticity forces near-antipodal pairing
};

// One entry per rank k >= 1 whose radius exceeds tol.sphere_min.
std::vector<MixedConstellation> mixed_constellations(const SphericalDecomp& d,
                                                     const Tolerances& tol = {});

double purity(const DensityMatrix& rho);

// Spin-(n/2) density of the n-qubit GHZ state: 1/2 in all four corners.
DensityMatrix nghz_density(int n);

}  // namespace stellar
