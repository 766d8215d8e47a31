#include "stellar/invariants_n.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>

#include "stellar/errors.hpp"

namespace stellar {

cplx inv4_H(const PureState& psi) {
  require_qubits(psi, 4, "inv4_H");
  const cvec& g = psi.amp;
  return g[0] * g[15] - g[1] * g[14] - g[2] * g[13] + g[3] * g[12] - g[4] * g[11] +
         g[5] * g[10] + g[6] * g[9] - g[7] * g[8];
}

namespace {

cplx det4(const std::array<cplx, 16>& m) {
  Eigen::Matrix4cd a;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) a(r, c) = m[static_cast<std::size_t>(4 * r + c)];
  return a.determinant();
}

}  // namespace

cplx inv4_L(const PureState& psi) {
  require_qubits(psi, 4, "inv4_L");
  const cvec& g = psi.amp;
  return det4({g[0], g[4], g[8], g[12],   //
               g[1], g[5], g[9], g[13],   //
               g[2], g[6], g[10], g[14],  //
               g[3], g[7], g[11], g[15]});
}

cplx inv4_M(const PureState& psi) {
  require_qubits(psi, 4, "inv4_M");
  const cvec& g = psi.amp;
  return det4({g[0], g[8], g[2], g[10],   //
               g[1], g[9], g[3], g[11],   //
               g[4], g[12], g[6], g[14],  //
               g[5], g[13], g[7], g[15]});
}

cplx inv4_D(const PureState& psi) {
  require_qubits(psi, 4, "inv4_D");
  const cvec& g = psi.amp;
  const auto biquad = [&](const std::array<double, 2>& x, const std::array<double, 2>& t) {
    cplx r00{}, r01{}, r10{}, r11{};
    for (int i = 0; i < 2; ++i)
      for (int l = 0; l < 2; ++l) {
        const double w = x[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(l)];
        if (w == 0.0) continue;
        r00 += w * g[static_cast<std::size_t>(8 * i + l)];
        r01 += w * g[static_cast<std::size_t>(8 * i + 2 + l)];
        r10 += w * g[static_cast<std::size_t>(8 * i + 4 + l)];
        r11 += w * g[static_cast<std::size_t>(8 * i + 6 + l)];
      }
    return r00 * r11 - r01 * r10;
  };

  // Coefficient matrix of the biquadratic from values at three sample points
  // each: (1,0) and (0,1) read off the end coefficients, (1,1) the middle.
  const std::array<std::array<double, 2>, 3> pts = {{{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}}};
  Eigen::Matrix3cd samples;
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 3; ++t)
      samples(s, t) = biquad(pts[static_cast<std::size_t>(s)], pts[static_cast<std::size_t>(t)]);

  Eigen::Matrix3d einv;
  einv << 1.0, 0.0, 0.0,  //
      -1.0, -1.0, 1.0,    //
      0.0, 1.0, 0.0;
  const Eigen::Matrix3cd coeffs = einv * samples * einv.transpose();
  return coeffs.determinant();
}

FourInvariants invariants4(const PureState& psi) {
  return FourInvariants{inv4_H(psi), inv4_L(psi), inv4_M(psi), inv4_D(psi)};
}

PureState g_abcd(const cplx& a, const cplx& b, const cplx& c, const cplx& d) {
  cvec amp(16, cplx{0.0, 0.0});
  amp[0b0000] = amp[0b1111] = 0.5 * (a + d);
  amp[0b0011] = amp[0b1100] = 0.5 * (a - d);
  amp[0b0101] = amp[0b1010] = 0.5 * (b + c);
  amp[0b0110] = amp[0b1001] = 0.5 * (b - c);
  return make_pure(4, std::move(amp));
}

bool symmetrizable_generic(const cplx& a, const cplx& b, const cplx& c, const cplx& d,
                           double tol_eq) {
  const cplx u = c - d, v = a - b, s = a + b, w = c + d;
  const double coincidence = std::min(std::min(std::abs(u - v), std::abs(u + v)),
                                      std::min(std::abs(s - w), std::abs(s + w)));
  return std::abs(a * b * c * d) <= tol_eq && coincidence <= tol_eq;
}

PureState l_state() {
  const cplx w = std::exp(cplx{0.0, 2.0 * kPi / 3.0});
  const double r3 = std::sqrt(3.0);
  return g_abcd(1.0 / r3, w * w / r3, 0.0, w / r3);
}

LocalOpChain l_state_chain() {
  const Mat2 q{0.0, 1.0, -1.0, 0.0};
  return {LocalOp{2, q}, LocalOp{3, q}};
}

PureState l_state_symmetrized() {
  const cplx w = std::exp(cplx{0.0, 2.0 * kPi / 3.0});
  const double s = 2.0 * std::sqrt(3.0);
  const cplx corner = (1.0 - w) / s;
  const cplx middle = -w * w / s;
  cvec amp(16, cplx{0.0, 0.0});
  amp[0b0000] = amp[0b1111] = corner;
  for (std::size_t i : {std::size_t{3}, std::size_t{5}, std::size_t{6}, std::size_t{9},
                        std::size_t{10}, std::size_t{12}})
    amp[i] = middle;
  return make_pure(4, std::move(amp));
}

PureState special_case_family(const cplx& b, const cplx& d) {
  if (std::abs(b) == 0.0 && std::abs(d) == 0.0)
    throw bad_argument("family parameters must not both vanish");
  cvec amp(16, cplx{0.0, 0.0});
  amp[0b0000] = amp[0b1111] = 0.5 * b + d;
  for (std::size_t i : {std::size_t{3}, std::size_t{5}, std::size_t{6}, std::size_t{9},
                        std::size_t{10}, std::size_t{12}})
    amp[i] = 0.5 * b;
  return make_pure(4, std::move(amp));
}

cplx inv5_F(const PureState& psi) {
  require_qubits(psi, 5, "inv5_F");
  // Each of the six amplitude factors carries index slots (i,j,k,l,m); every
  // slot is tied to exactly one of fifteen epsilon contractions.
  struct End {
    int factor;
    int pos;  // 0..4 for i..m
  };
  static constexpr End kPairs[15][2] = {
      {{0, 2}, {1, 2}}, {{0, 4}, {1, 4}}, {{0, 1}, {2, 1}}, {{0, 3}, {2, 3}},
      {{0, 0}, {3, 0}}, {{1, 3}, {3, 3}}, {{2, 4}, {3, 4}}, {{1, 0}, {4, 0}},
      {{4, 3}, {5, 3}}, {{4, 4}, {5, 4}}, {{2, 0}, {5, 0}}, {{2, 2}, {5, 2}},
      {{3, 1}, {5, 1}}, {{3, 2}, {4, 2}}, {{1, 1}, {4, 1}}};
  static constexpr int kWeight[5] = {16, 8, 4, 2, 1};

  cplx total{0.0, 0.0};
  for (unsigned mask = 0; mask < (1u << 15); ++mask) {
    int idx[6] = {0, 0, 0, 0, 0, 0};
    for (int p = 0; p < 15; ++p) {
      const int bit = (mask >> p) & 1;  // epsilon pair value (bit, 1-bit)
      idx[kPairs[p][0].factor] += kWeight[kPairs[p][0].pos] * bit;
      idx[kPairs[p][1].factor] += kWeight[kPairs[p][1].pos] * (1 - bit);
    }
    cplx term = (__builtin_popcount(mask) % 2 == 0) ? cplx{1.0, 0.0} : cplx{-1.0, 0.0};
    for (int f = 0; f < 6; ++f) term *= psi.amp[static_cast<std::size_t>(idx[f])];
    total += term;
  }
  return total;
}

}  // namespace stellar
