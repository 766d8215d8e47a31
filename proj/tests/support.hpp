// Shared test utilities: deterministic samplers, named fixture states, small
// determinants, and star-set matching. Every sampler draws from an engine the
// caller seeds, so each test fixes its own sequence.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "stellar/majorana.hpp"
#include "stellar/numeric.hpp"
#include "stellar/qstate.hpp"

namespace ts {

using stellar::cplx;
using stellar::cvec;

inline cplx gauss(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return {g(rng), g(rng)};
}

inline stellar::PureState random_state(std::mt19937_64& rng, int n) {
  cvec a(size_t{1} << n);
  for (auto& z : a) z = gauss(rng);
  return stellar::normalized_copy(stellar::make_pure(n, std::move(a)));
}

inline stellar::SpinState random_spin(std::mt19937_64& rng, int two_j) {
  stellar::SpinState s;
  s.two_j = two_j;
  s.c.resize(static_cast<size_t>(two_j) + 1);
  for (auto& z : s.c) z = gauss(rng);
  double nrm = 0.0;
  for (const auto& z : s.c) nrm += std::norm(z);
  nrm = std::sqrt(nrm);
  for (auto& z : s.c) z /= nrm;
  return s;
}

inline stellar::PureState random_symmetric(std::mt19937_64& rng, int n) {
  return stellar::spin_to_symmetric(random_spin(rng, n));
}

// Haar-ish special unitary from a normalized complex pair.
inline stellar::Mat2 random_su2(std::mt19937_64& rng) {
  cplx a = gauss(rng), b = gauss(rng);
  const double nrm = std::sqrt(std::norm(a) + std::norm(b));
  a /= nrm;
  b /= nrm;
  return {a, -std::conj(b), b, std::conj(a)};
}

// Complex Gaussian entries scaled by a principal square root of the
// determinant; moderate determinants are resampled away so entries stay O(1).
inline stellar::Mat2 random_sl2(std::mt19937_64& rng) {
  for (;;) {
    stellar::Mat2 m{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    const cplx det = m.det();
    if (std::abs(det) < 0.2) continue;
    const cplx s = std::sqrt(det);
    return {m.a / s, m.b / s, m.c / s, m.d / s};
  }
}

inline stellar::LocalOpChain chain_per_slot(std::mt19937_64& rng, int n, bool special) {
  stellar::LocalOpChain ch;
  for (int q = 0; q < n; ++q)
    ch.push_back({q, special ? random_sl2(rng) : random_su2(rng)});
  return ch;
}

// Ginibre construction: G G^dag normalized to unit trace.
inline stellar::DensityMatrix random_density(std::mt19937_64& rng, int dim) {
  cvec g(static_cast<size_t>(dim) * dim);
  for (auto& z : g) z = gauss(rng);
  cvec r(static_cast<size_t>(dim) * dim);
  cplx tr{0.0, 0.0};
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      cplx s{0.0, 0.0};
      for (int k = 0; k < dim; ++k)
        s += g[static_cast<size_t>(i) * dim + k] * std::conj(g[static_cast<size_t>(j) * dim + k]);
      r[static_cast<size_t>(i) * dim + j] = s;
      if (i == j) tr += s;
    }
  for (auto& z : r) z /= tr.real();
  return stellar::make_density(dim, std::move(r));
}

inline stellar::DensityMatrix density_of_spin(const stellar::SpinState& s) {
  const int d = s.two_j + 1;
  cvec r(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      r[static_cast<size_t>(i) * d + j] = s.c[i] * std::conj(s.c[j]);
  return stellar::make_density(d, std::move(r));
}

// --- named fixtures -------------------------------------------------------

inline stellar::PureState ghz3() {
  cvec a(8);
  a[0] = a[7] = cplx{1.0 / std::sqrt(2.0), 0.0};
  return stellar::make_pure(3, std::move(a));
}

inline stellar::PureState w3() {
  cvec a(8);
  a[1] = a[2] = a[4] = cplx{1.0 / std::sqrt(3.0), 0.0};
  return stellar::make_pure(3, std::move(a));
}

inline stellar::PureState gghz(double vartheta) {
  cvec a(8);
  a[0] = cplx{std::cos(vartheta), 0.0};
  a[7] = cplx{std::sin(vartheta), 0.0};
  return stellar::make_pure(3, std::move(a));
}

inline stellar::PureState gw(double c, double d, double e) {
  const double nrm = std::sqrt(c * c + d * d + e * e);
  cvec a(8);
  a[1] = cplx{c / nrm, 0.0};
  a[2] = cplx{d / nrm, 0.0};
  a[4] = cplx{e / nrm, 0.0};
  return stellar::make_pure(3, std::move(a));
}

inline stellar::PureState ghz4() {
  cvec a(16);
  a[0] = a[15] = cplx{1.0 / std::sqrt(2.0), 0.0};
  return stellar::make_pure(4, std::move(a));
}

inline stellar::PureState cluster4() {
  cvec a(16);
  a[0] = a[3] = a[12] = cplx{0.5, 0.0};
  a[15] = cplx{-0.5, 0.0};
  return stellar::make_pure(4, std::move(a));
}

// cos(chi)|00> + sin(chi)|11>
inline stellar::PureState schmidt_pair(double chi) {
  cvec a(4);
  a[0] = cplx{std::cos(chi), 0.0};
  a[3] = cplx{std::sin(chi), 0.0};
  return stellar::make_pure(2, std::move(a));
}

// --- small linear algebra --------------------------------------------------

// Partial-pivot LU determinant for n <= 5 complex matrices (row-major).
inline cplx det_small(cvec a, int n) {
  cplx det{1.0, 0.0};
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int r = k + 1; r < n; ++r)
      if (std::abs(a[static_cast<size_t>(r) * n + k]) >
          std::abs(a[static_cast<size_t>(p) * n + k]))
        p = r;
    if (std::abs(a[static_cast<size_t>(p) * n + k]) == 0.0) return {0.0, 0.0};
    if (p != k) {
      for (int c = 0; c < n; ++c)
        std::swap(a[static_cast<size_t>(p) * n + c], a[static_cast<size_t>(k) * n + c]);
      det = -det;
    }
    det *= a[static_cast<size_t>(k) * n + k];
    for (int r = k + 1; r < n; ++r) {
      const cplx f = a[static_cast<size_t>(r) * n + k] / a[static_cast<size_t>(k) * n + k];
      for (int c = k; c < n; ++c)
        a[static_cast<size_t>(r) * n + c] -= f * a[static_cast<size_t>(k) * n + c];
    }
  }
  return det;
}

inline double max_abs_entry(const cvec& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

// --- star-set matching ------------------------------------------------------

inline std::vector<stellar::Star> expand_stars(const stellar::Constellation& c) {
  std::vector<stellar::Star> out;
  for (const auto& s : c.stars)
    for (int k = 0; k < s.mult; ++k) out.push_back({s.theta, s.phi, 1});
  return out;
}

// Minimum over pairings of the maximum chordal mismatch; sizes <= 8 so brute
// force over permutations is fine. Mismatched sizes report 4 (> any chord).
inline double star_set_distance(const stellar::Constellation& a, const stellar::Constellation& b) {
  std::vector<stellar::Star> xa = expand_stars(a), xb = expand_stars(b);
  if (xa.size() != xb.size()) return 4.0;
  std::vector<int> idx(xb.size());
  std::iota(idx.begin(), idx.end(), 0);
  double best = 4.0;
  do {
    double worst = 0.0;
    for (size_t i = 0; i < xa.size(); ++i)
      worst = std::max(worst, stellar::chordal_distance(xa[i], xb[idx[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return best;
}

inline stellar::Constellation constellation_from(const std::vector<stellar::Star>& stars) {
  stellar::Constellation c;
  for (const auto& s : stars) {
    c.stars.push_back(s);
    c.degree += s.mult;
  }
  return c;
}

inline bool has_star(const stellar::Constellation& c, double theta, double phi, int mult,
                     double tol) {
  for (const auto& s : c.stars)
    if (s.mult == mult && stellar::chordal_distance(s, {theta, phi, 1}) <= tol) return true;
  return false;
}

}  // namespace ts
