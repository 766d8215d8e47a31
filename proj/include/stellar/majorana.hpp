// Star representation of spin-j states: the degree-2j polynomial whose roots
// are the stereographic images of the stars, root finding with degree
// deficiency (stars at infinity), star geometry, and the closed-form tangle /
// concurrence expressions in star coordinates.
#pragma once

#include <array>
#include <utility>
#include <vector>

#include "stellar/numeric.hpp"
#include "stellar/qstate.hpp"

namespace stellar {

struct Star {
  double theta = 0.0;  // polar angle in [0, pi]; 0 is the north pole
  double phi = 0.0;    // azimuth in [0, 2 pi)
  int mult = 1;
};

struct Constellation {
  int degree = 0;  // 2j; equals the sum of multiplicities (stars at infinity included)
  std::vector<Star> stars;
};

// Ascending coefficients: coeff[j + m] = (-1)^{j+m} sqrt(C(2j, j+m)) c_m.
cvec majorana_polynomial(const SpinState& s);

struct PolyRoots {
  std::vector<std::pair<cplx, int>> finite;  // clustered (root, multiplicity)
  int at_infinity = 0;                       // degree deficiency
};

// Companion-matrix roots with one safeguarded Newton polish per root and
// greedy clustering at tol.cluster_radius. Leading/trailing coefficients
// below tol.coeff_cutoff * max|coeff| are trimmed (trailing trim = roots at
// infinity). Throws ZeroPolynomial when max|coeff| <= tol.zero_poly.
PolyRoots roots_with_infinity(const cvec& coeff, const Tolerances& tol = {});

// theta = 2 arccot|z|, phi = arg z mod 2pi: z = 0 maps to the south pole.
Star star_from_root(const cplx& z, int mult = 1);
Star star_at_infinity(int mult = 1);  // the north pole

std::array<double, 3> star_vec(const Star& s);
// Chordal distance 2 sin(theta_12 / 2) between star directions.
double chordal_distance(const Star& a, const Star& b);

// Canonical order: descending cos(theta), then ascending phi.
Constellation constellation_from_coeffs(const cvec& coeff, int degree,
                                        const Tolerances& tol = {});
Constellation constellation_of(const SpinState& s, const Tolerances& tol = {});

// tau3 from three stars: (1/3) (d12 d13 d23 / (12 - d12^2 - d13^2 - d23^2))^2.
double tangle_from_stars(const Constellation& c);
// Concurrence from two stars: sin^2(theta12/2) / (1 + cos^2(theta12/2)).
double concurrence_from_stars(const Constellation& c);

// Inverse star map: the normalized symmetric state whose constellation this is.
PureState symmetric_state_from_stars(const Constellation& c, const Tolerances& tol = {});

// Max pairing distance when matching every star direction to an antipode.
double antipodal_defect(const Constellation& c);

}  // namespace stellar
