#include "stellar/majorana.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "stellar/errors.hpp"

namespace stellar {

cvec majorana_polynomial(const SpinState& s) {
  const int d = s.two_j;
  if (d < 0 || static_cast<int>(s.c.size()) != d + 1)
    throw bad_argument("spin state must hold 2j + 1 components");
  cvec coeff(d + 1);
  for (int r = 0; r <= d; ++r) {
    const double sign = (r % 2 == 0) ? 1.0 : -1.0;
    coeff[r] = sign * sqrt_binom(d, r) * s.c[d - r];
  }
  return coeff;
}

namespace {

// Horner evaluation of an ascending-coefficient polynomial and its derivative.
void eval_poly(const cvec& a, const cplx& z, cplx& p, cplx& dp) {
  p = a.back();
  dp = cplx{0.0, 0.0};
  for (int i = static_cast<int>(a.size()) - 2; i >= 0; --i) {
    dp = dp * z + p;
    p = p * z + a[i];
  }
}

cplx polish_root(const cvec& a, cplx z) {
  cplx p, dp;
  eval_poly(a, z, p, dp);
  for (int iter = 0; iter < 3; ++iter) {
    if (std::abs(dp) == 0.0) break;
    const cplx cand = z - p / dp;
    cplx pc, dpc;
    eval_poly(a, cand, pc, dpc);
    if (std::abs(pc) >= std::abs(p)) break;
    z = cand;
    p = pc;
    dp = dpc;
  }
  return z;
}

}  // namespace

PolyRoots roots_with_infinity(const cvec& coeff, const Tolerances& tol) {
  double maxc = 0.0;
  for (const cplx& a : coeff) maxc = std::max(maxc, std::abs(a));
  if (maxc <= tol.zero_poly) throw zero_polynomial("all polynomial coefficients vanish");

  const double cutoff = tol.coeff_cutoff * maxc;
  int hi = static_cast<int>(coeff.size()) - 1;
  while (hi > 0 && std::abs(coeff[hi]) <= cutoff) --hi;
  int lo = 0;
  while (lo < hi && std::abs(coeff[lo]) <= cutoff) ++lo;

  PolyRoots out;
  out.at_infinity = static_cast<int>(coeff.size()) - 1 - hi;

  // Reduced polynomial with zero roots and the degree deficiency stripped.
  cvec a(coeff.begin() + lo, coeff.begin() + hi + 1);
  const int deg = hi - lo;

  std::vector<cplx> candidates(lo, cplx{0.0, 0.0});  // exact zero roots
  if (deg > 0) {
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -a[i] / a[deg];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es{comp, false};
    if (es.info() != Eigen::Success) throw degenerate_input("root eigensolve failed");
    for (int i = 0; i < deg; ++i) candidates.push_back(polish_root(a, es.eigenvalues()(i)));
  }

  std::sort(candidates.begin(), candidates.end(), [](const cplx& x, const cplx& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });

  // Greedy clustering against running centroids.
  std::vector<cplx> sums;
  std::vector<int> counts;
  for (const cplx& z : candidates) {
    bool placed = false;
    for (std::size_t k = 0; k < sums.size(); ++k) {
      const cplx centroid = sums[k] / static_cast<double>(counts[k]);
      if (std::abs(z - centroid) <= tol.cluster_radius) {
        sums[k] += z;
        ++counts[k];
        placed = true;
        break;
      }
    }
    if (!placed) {
      sums.push_back(z);
      counts.push_back(1);
    }
  }
  for (std::size_t k = 0; k < sums.size(); ++k)
    out.finite.emplace_back(sums[k] / static_cast<double>(counts[k]), counts[k]);
  return out;
}

Star star_from_root(const cplx& z, int mult) {
  Star s;
  s.theta = 2.0 * std::atan2(1.0, std::abs(z));
  double p = std::arg(z);
  if (p < 0.0) p += 2.0 * kPi;
  if (p >= 2.0 * kPi) p -= 2.0 * kPi;
  s.phi = p + 0.0;  // normalize -0.0
  s.mult = mult;
  return s;
}

Star star_at_infinity(int mult) { return Star{0.0, 0.0, mult}; }

std::array<double, 3> star_vec(const Star& s) {
  return {std::sin(s.theta) * std::cos(s.phi), std::sin(s.theta) * std::sin(s.phi),
          std::cos(s.theta)};
}

double chordal_distance(const Star& a, const Star& b) {
  const auto u = star_vec(a);
  const auto v = star_vec(b);
  double d2 = 0.0;
  for (int i = 0; i < 3; ++i) d2 += (u[i] - v[i]) * (u[i] - v[i]);
  return std::sqrt(d2);
}

Constellation constellation_from_coeffs(const cvec& coeff, int degree, const Tolerances& tol) {
  if (degree < 0) throw bad_argument("constellation degree must be non-negative");
  if (static_cast<int>(coeff.size()) > degree + 1)
    throw bad_argument("coefficient list longer than degree + 1");
  cvec padded = coeff;
  padded.resize(degree + 1, cplx{0.0, 0.0});

  Constellation c;
  c.degree = degree;
  if (degree == 0) return c;

  const PolyRoots pr = roots_with_infinity(padded, tol);
  for (const auto& [z, mult] : pr.finite) c.stars.push_back(star_from_root(z, mult));
  if (pr.at_infinity > 0) c.stars.push_back(star_at_infinity(pr.at_infinity));
  std::sort(c.stars.begin(), c.stars.end(), [](const Star& x, const Star& y) {
    return x.theta != y.theta ? x.theta < y.theta : x.phi < y.phi;
  });
  return c;
}

Constellation constellation_of(const SpinState& s, const Tolerances& tol) {
  return constellation_from_coeffs(majorana_polynomial(s), s.two_j, tol);
}

namespace {

std::vector<Star> expand_stars(const Constellation& c) {
  std::vector<Star> out;
  for (const Star& s : c.stars) {
    if (s.mult < 1) throw bad_argument("star multiplicities must be positive");
    for (int i = 0; i < s.mult; ++i) out.push_back(Star{s.theta, s.phi, 1});
  }
  return out;
}

}  // namespace

double tangle_from_stars(const Constellation& c) {
  if (c.degree != 3) throw bad_argument("tangle needs a degree-3 constellation");
  const std::vector<Star> e = expand_stars(c);
  if (e.size() != 3) throw bad_argument("star multiplicities must sum to 3");
  const double d12 = chordal_distance(e[0], e[1]);
  const double d13 = chordal_distance(e[0], e[2]);
  const double d23 = chordal_distance(e[1], e[2]);
  const double denom = 12.0 - d12 * d12 - d13 * d13 - d23 * d23;  // always >= 3
  const double ratio = d12 * d13 * d23 / denom;
  return std::clamp(ratio * ratio / 3.0, 0.0, 1.0);
}

double concurrence_from_stars(const Constellation& c) {
  if (c.degree != 2) throw bad_argument("concurrence needs a degree-2 constellation");
  const std::vector<Star> e = expand_stars(c);
  if (e.size() != 2) throw bad_argument("star multiplicities must sum to 2");
  const double d2 = std::pow(chordal_distance(e[0], e[1]), 2);
  return std::clamp(d2 / (8.0 - d2), 0.0, 1.0);
}

PureState symmetric_state_from_stars(const Constellation& c, const Tolerances& tol) {
  (void)tol;
  const int n = c.degree;
  if (n < 1 || n > 12) throw bad_argument("degree must lie in [1, 12]");
  const std::vector<Star> e = expand_stars(c);
  if (static_cast<int>(e.size()) != n)
    throw bad_argument("star multiplicities must sum to the degree");

  // One coherent factor per star. The root-to-star map mirrors through the
  // equator (a factor along (theta, phi) puts its star at (pi - theta, phi)),
  // so a star at (theta, phi) needs the factor pointing at its mirror.
  std::vector<std::array<cplx, 2>> sp(n);
  for (int l = 0; l < n; ++l) {
    const double half = 0.5 * e[l].theta;
    sp[l] = {cplx{std::sin(half), 0.0},
             std::cos(half) * std::exp(cplx{0.0, e[l].phi})};
  }

  // Ryser permanents of the overlap matrix, one per basis-string weight. Rows
  // repeat by bit value, so each subset contributes powers of its two column
  // sums: perm_w = (-1)^n sum_S (-1)^|S| (sum_{l in S} sp[l][1])^w
  //                                      (sum_{l in S} sp[l][0])^(n-w).
  std::vector<cplx> perm_w(n + 1, cplx{0.0, 0.0});
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    cplx s0{0.0, 0.0}, s1{0.0, 0.0};
    for (int l = 0; l < n; ++l)
      if (mask & (1u << l)) {
        s0 += sp[l][0];
        s1 += sp[l][1];
      }
    const double sign = (__builtin_popcount(mask) % 2 == 0) ? 1.0 : -1.0;
    cplx pow0{1.0, 0.0};
    std::vector<cplx> pow0s(n + 1);
    for (int i = 0; i <= n; ++i) {
      pow0s[i] = pow0;
      pow0 *= s0;
    }
    cplx pow1{1.0, 0.0};
    for (int w = 0; w <= n; ++w) {
      perm_w[w] += sign * pow1 * pow0s[n - w];
      pow1 *= s1;
    }
  }
  const double outer = (n % 2 == 0) ? 1.0 : -1.0;
  for (cplx& p : perm_w) p *= outer;

  // Norm^2 of the unnormalized symmetric product is n! perm(Gram).
  std::vector<cplx> gram(static_cast<std::size_t>(n) * n);
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m)
      gram[static_cast<std::size_t>(l) * n + m] =
          std::conj(sp[l][0]) * sp[m][0] + std::conj(sp[l][1]) * sp[m][1];
  cplx perm_gram{0.0, 0.0};
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const double sign = (__builtin_popcount(mask) % 2 == 0) ? 1.0 : -1.0;
    cplx prod{1.0, 0.0};
    for (int k = 0; k < n; ++k) {
      cplx row{0.0, 0.0};
      for (int l = 0; l < n; ++l)
        if (mask & (1u << l)) row += gram[static_cast<std::size_t>(k) * n + l];
      prod *= row;
    }
    perm_gram += sign * prod;
  }
  perm_gram *= outer;

  double fact = 1.0;
  for (int i = 2; i <= n; ++i) fact *= i;
  const double nrm2 = fact * perm_gram.real();
  if (!(nrm2 > 1e-300)) throw norm_underflow("constellation maps to a vanishing state");
  const double inv = 1.0 / std::sqrt(nrm2);

  cvec amp(std::size_t{1} << n);
  for (std::size_t i = 0; i < amp.size(); ++i)
    amp[i] = perm_w[__builtin_popcount(static_cast<unsigned>(i))] * inv;
  return make_pure(n, std::move(amp));
}

double antipodal_defect(const Constellation& c) {
  const std::vector<Star> e = expand_stars(c);
  if (e.empty()) return 0.0;
  std::vector<std::array<double, 3>> v;
  v.reserve(e.size());
  for (const Star& s : e) v.push_back(star_vec(s));
  double worst = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    double best = 2.0;  // distance from the antipode to the star itself
    for (std::size_t j = 0; j < v.size(); ++j) {
      double d2 = 0.0;
      for (int k = 0; k < 3; ++k) d2 += (v[i][k] + v[j][k]) * (v[i][k] + v[j][k]);
      best = std::min(best, std::sqrt(d2));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace stellar
