#include "stellar/acin.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>

#include "stellar/errors.hpp"

namespace stellar {

namespace {

double frob2(const Mat2& m) {
  return std::norm(m.a) + std::norm(m.b) + std::norm(m.c) + std::norm(m.d);
}

// Phase wrapped into (-pi, pi], with values within 1e-9 of -pi mapped to +pi.
double wrap_phase(double v) {
  double r = std::remainder(v, 2.0 * kPi);
  if (r <= -kPi + 1e-9) r += 2.0 * kPi;
  return r;
}

struct Candidate {
  AcinForm form;
  LocalOpChain chain;
  bool phi_in_window = false;
  double phi_distance = 0.0;  // distance of phi to [0, pi] when outside
};

std::array<cplx, 2> unit_pair(cplx x, cplx y) {
  const double n = std::sqrt(std::norm(x) + std::norm(y));
  return {x / n, y / n};
}

// Builds the full candidate form for first-row (x, y) of the slot-0 unitary.
Candidate build_candidate(const Mat2& T0, const Mat2& T1, const std::array<cplx, 2>& xy,
                          const Tolerances& tol) {
  const cplx x = xy[0], y = xy[1];
  const Mat2 T0p = mat2_scale(x, T0) + mat2_scale(y, T1);
  const Mat2 T1p = mat2_scale(-std::conj(y), T0) + mat2_scale(std::conj(x), T1);

  Eigen::Matrix2cd m;
  m << T0p.a, T0p.b, T0p.c, T0p.d;
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd{m, Eigen::ComputeFullU | Eigen::ComputeFullV};
  const double lambda0 = svd.singularValues()(0);
  const Eigen::Matrix2cd W = svd.matrixU();
  const Eigen::Matrix2cd V = svd.matrixV();

  const Mat2 Wdag{std::conj(W(0, 0)), std::conj(W(1, 0)), std::conj(W(0, 1)), std::conj(W(1, 1))};
  const Mat2 Vm{V(0, 0), V(0, 1), V(1, 0), V(1, 1)};
  const Mat2 t = Wdag * T1p * Vm;

  auto arg0 = [&](const cplx& z) { return std::abs(z) <= tol.tiny_entry ? 0.0 : std::arg(z); };
  const double nu = arg0(t.d) - arg0(t.b) - arg0(t.c);
  const double alpha1 = arg0(t.c) + nu;
  const double beta1 = -arg0(t.b) - nu;

  Candidate cand;
  AcinForm& f = cand.form;
  f.lambda[0] = lambda0;
  f.lambda[1] = std::abs(t.a);
  f.lambda[2] = std::abs(t.b);
  f.lambda[3] = std::abs(t.c);
  f.lambda[4] = std::abs(t.d);
  f.phi = f.lambda[1] <= tol.phase_gauge ? 0.0 : wrap_phase(arg0(t.a) + nu);

  cand.phi_in_window = f.phi >= -1e-9 && f.phi <= kPi + 1e-9;
  if (cand.phi_in_window)
    f.phi = std::clamp(f.phi, 0.0, kPi);
  else
    cand.phi_distance = f.phi < 0.0 ? -f.phi : f.phi - kPi;

  const cplx ephase_nu{std::cos(nu), std::sin(nu)};
  const cplx ephase_ma{std::cos(alpha1), -std::sin(alpha1)};
  const cplx ephase_b{std::cos(beta1), std::sin(beta1)};
  const Mat2 U1dag{x, y, -std::conj(y), std::conj(x)};
  const Mat2 V1 = mat2_diag(1.0, ephase_nu) * U1dag;
  const Mat2 V2 = mat2_diag(1.0, ephase_ma) * Wdag;
  const Mat2 Vt{Vm.a, Vm.c, Vm.b, Vm.d};
  const Mat2 V3 = mat2_diag(1.0, ephase_b) * Vt;
  cand.chain = {LocalOp{0, V1}, LocalOp{1, V2}, LocalOp{2, V3}};
  return cand;
}

bool better(const Candidate& a, const Candidate& b) {
  if (a.phi_in_window != b.phi_in_window) return a.phi_in_window;
  if (!a.phi_in_window && std::abs(a.phi_distance - b.phi_distance) > 1e-12)
    return a.phi_distance < b.phi_distance;
  if (std::abs(a.form.lambda[0] - b.form.lambda[0]) > 1e-12)
    return a.form.lambda[0] > b.form.lambda[0];
  if (std::abs(a.form.lambda[1] - b.form.lambda[1]) > 1e-12)
    return a.form.lambda[1] < b.form.lambda[1];
  return false;  // keep earlier candidate on ties
}

}  // namespace

PureState reconstruct(const AcinForm& f) {
  cvec amp(8, 0.0);
  amp[0b000] = f.lambda[0];
  amp[0b100] = f.lambda[1] * cplx{std::cos(f.phi), std::sin(f.phi)};
  amp[0b101] = f.lambda[2];
  amp[0b110] = f.lambda[3];
  amp[0b111] = f.lambda[4];
  return {3, std::move(amp)};
}

double tangle_from_acin(const AcinForm& f) {
  const double v = 2.0 * f.lambda[0] * f.lambda[4];
  return v * v;
}

cplx acin_delta(const AcinForm& f) {
  return f.lambda[1] * f.lambda[4] * cplx{std::cos(f.phi), std::sin(f.phi)} -
         f.lambda[2] * f.lambda[3];
}

AcinResult acin_canonical(const PureState& s, const Tolerances& tol) {
  require_qubits(s, 3, "acin_canonical");
  require_normalized(s, tol.norm_gate, "acin_canonical");

  const cvec& g = s.amp;
  const Mat2 T0{g[0b000], g[0b001], g[0b010], g[0b011]};
  const Mat2 T1{g[0b100], g[0b101], g[0b110], g[0b111]};

  // det(x T0 + y T1) = qa x^2 + qb xy + qc y^2.
  const cplx qa = T0.det();
  const cplx qc = T1.det();
  const cplx qb = (T0 + T1).det() - qa - qc;
  const double scale = frob2(T0) + frob2(T1);
  const double eps = tol.pencil * scale;

  std::vector<std::array<cplx, 2>> roots;
  if (std::abs(qa) <= eps && std::abs(qb) <= eps && std::abs(qc) <= eps) {
    // Degenerate pencil: every combination is singular. Try both axes plus,
    // when the slices are proportional, the combination putting all weight in
    // the first slice.
    roots.push_back({cplx{1.0}, cplx{0.0}});
    roots.push_back({cplx{0.0}, cplx{1.0}});
    const double n0 = frob2(T0), n1 = frob2(T1);
    if (n0 >= n1 && n0 > 0.0) {
      const cplx ctil = (std::conj(T0.a) * T1.a + std::conj(T0.b) * T1.b +
                         std::conj(T0.c) * T1.c + std::conj(T0.d) * T1.d) /
                        n0;
      const Mat2 resid = T1 + mat2_scale(-ctil, T0);
      if (frob2(resid) <= 1e-20 * scale) roots.push_back(unit_pair(1.0, std::conj(ctil)));
    } else if (n1 > 0.0) {
      const cplx dtil = (std::conj(T1.a) * T0.a + std::conj(T1.b) * T0.b +
                         std::conj(T1.c) * T0.c + std::conj(T1.d) * T0.d) /
                        n1;
      const Mat2 resid = T0 + mat2_scale(-dtil, T1);
      if (frob2(resid) <= 1e-20 * scale) roots.push_back(unit_pair(std::conj(dtil), 1.0));
    }
  } else if (std::abs(qa) <= eps && std::abs(qc) <= eps) {
    roots.push_back({cplx{1.0}, cplx{0.0}});
    roots.push_back({cplx{0.0}, cplx{1.0}});
  } else if (std::abs(qa) <= eps) {
    roots.push_back({cplx{1.0}, cplx{0.0}});
    roots.push_back(unit_pair(-qc, qb));
  } else if (std::abs(qc) <= eps) {
    roots.push_back({cplx{0.0}, cplx{1.0}});
    roots.push_back(unit_pair(-qb, qa));
  } else {
    const cplx disc = std::sqrt(qb * qb - 4.0 * qa * qc);
    const cplx q = std::abs(qb + disc) >= std::abs(qb - disc) ? -(qb + disc) / 2.0
                                                              : -(qb - disc) / 2.0;
    roots.push_back(unit_pair(q, qa));
    roots.push_back(unit_pair(qc, q));
    // Double root: the two candidates coincide projectively.
    const cplx cross = roots[0][0] * roots[1][1] - roots[0][1] * roots[1][0];
    if (std::abs(cross) <= 1e-12) roots.pop_back();
  }

  bool have = false;
  Candidate best;
  for (const auto& xy : roots) {
    Candidate cand = build_candidate(T0, T1, xy, tol);
    if (!have || better(cand, best)) {
      best = std::move(cand);
      have = true;
    }
  }
  return {best.form, best.chain};
}

}  // namespace stellar
