#include "stellar/symmetrize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stellar/errors.hpp"

namespace stellar {

namespace {

void require_ghz_lambdas(const AcinForm& f, const char* where) {
  if (f.lambda[4] <= 0.0)
    throw wrong_class(std::string(where) + ": lambda4 vanishes (W-class form)");
  if (f.lambda[0] <= 0.0)
    throw wrong_class(std::string(where) + ": lambda0 vanishes (first qubit factors)");
}

PureState symmetric_w_state() {
  cvec amp(8, 0.0);
  const double v = 1.0 / std::sqrt(3.0);
  amp[0b001] = v;
  amp[0b010] = v;
  amp[0b100] = v;
  return {3, std::move(amp)};
}

// Unit-determinant copy of a unitary: V / sqrt(det V). Returns the phase the
// correction multiplies the transformed state by, i.e. det(V)^{-1/2}.
cplx sl_correct(Mat2& v) {
  const cplx s = 1.0 / std::sqrt(det_refined(v));
  v = mat2_scale(s, v);
  return s;
}

}  // namespace

LocalOpChain build_M(const AcinForm& f, double gamma) {
  if (!(gamma > 0.0)) throw bad_argument("build_M: gamma must be positive");
  if (f.lambda[4] <= 0.0) throw wrong_class("build_M: lambda4 vanishes (W-class form)");
  const double g = (f.lambda[2] / gamma - f.lambda[3] * gamma) / f.lambda[4];
  return {LocalOp{2, Mat2{gamma, g, 0.0, 1.0 / gamma}}};
}

LocalOpChain build_Mprime(const AcinForm& f) {
  require_ghz_lambdas(f, "build_Mprime");
  const cplx delta = acin_delta(f);
  const double l0 = f.lambda[0], l2 = f.lambda[2], l4 = f.lambda[4];
  const cplx a = 1.0 / (l4 * l4) - delta * l2 / l0;
  const cplx b = -delta * l4 / l0;
  const cplx c = l2 * l4;
  const cplx d = l4 * l4;
  return {LocalOp{0, Mat2{a, c, b, d}}};
}

LocalOpChain build_Mdoubleprime(const AcinForm& f) {
  if (f.lambda[4] <= 0.0)
    throw wrong_class("build_Mdoubleprime: lambda4 vanishes (W-class form)");
  const double g = -f.lambda[2] / f.lambda[4];
  const Mat2 shear{1.0, g, 0.0, 1.0};
  return {LocalOp{0, shear}, LocalOp{1, shear}, LocalOp{2, shear}};
}

GammaNu gamma_and_nu(const AcinForm& f) {
  require_ghz_lambdas(f, "gamma_and_nu");
  // Extended precision: u cancels catastrophically near maximal tangle.
  const long double prod = 2.0L * f.lambda[0] * f.lambda[4];
  const double u = static_cast<double>(1.0L - prod * prod);
  if (u < -1e-12)
    throw bad_argument("gamma_and_nu: 1 - 4 lambda0^2 lambda4^2 = " + std::to_string(u));
  const double sq = std::sqrt(std::max(0.0, u));
  GammaNu out;
  out.nu1 = std::sqrt(0.5 + 0.5 * sq);
  out.nu2 = std::sqrt(std::max(0.0, 0.5 - 0.5 * sq));
  out.gamma = f.lambda[4] * f.lambda[4] * out.nu1 / f.lambda[0];
  return out;
}

SymmetrizationResult symmetrize_ghz_class(const AcinForm& f, const Tolerances& tol) {
  if (tangle_from_acin(f) <= tol.tau_min)
    throw wrong_class("symmetrize_ghz_class: tau3 of the form is below threshold");
  const GammaNu gn = gamma_and_nu(f);

  SymmetrizationResult out;
  out.input_form = f;
  out.class_tag = StateClass::GHZ_CLASS;
  for (const LocalOpChain& part : {build_M(f, gn.gamma), build_Mprime(f), build_Mdoubleprime(f)})
    out.chain.insert(out.chain.end(), part.begin(), part.end());

  const double nrm = std::sqrt(gn.nu1 * gn.nu1 + gn.nu2 * gn.nu2);
  cvec amp(8, 0.0);
  amp[0b000] = gn.nu1 / nrm;
  amp[0b111] = gn.nu2 / nrm;
  out.output = {3, std::move(amp)};
  out.vartheta = std::atan2(gn.nu2, gn.nu1);
  out.scale = cplx{nrm, 0.0};
  out.renormalized = std::abs(nrm - 1.0) > 1e-9;
  return out;
}

SymmetrizationResult symmetrize_w_class(double c, double d, double e, const Tolerances&) {
  if (!(c > 0.0) || !(d > 0.0) || !(e > 0.0))
    throw bad_argument("symmetrize_w_class: amplitudes must be positive");
  const double alpha = std::sqrt(e / d);
  const double beta = std::sqrt(c / d);

  SymmetrizationResult out;
  out.input_form.lambda[0] = e;
  out.input_form.lambda[1] = 0.0;
  out.input_form.lambda[2] = c;
  out.input_form.lambda[3] = d;
  out.input_form.lambda[4] = 0.0;
  out.input_form.phi = 0.0;
  out.chain = {LocalOp{0, mat2_diag(alpha, 1.0 / alpha)},
               LocalOp{2, mat2_diag(beta, 1.0 / beta)}};
  out.output = symmetric_w_state();
  out.vartheta = 0.0;
  out.class_tag = StateClass::W_CLASS;
  out.scale = cplx{std::sqrt(3.0 * c * e), 0.0};
  out.renormalized = std::abs(std::abs(out.scale) - 1.0) > 1e-9;
  return out;
}

SymmetrizationResult symmetrize(const PureState& s, const Tolerances& tol) {
  require_qubits(s, 3, "symmetrize");
  require_normalized(s, tol.norm_gate, "symmetrize");

  AcinResult ar = acin_canonical(s, tol);
  cplx phase{1.0, 0.0};
  for (LocalOp& op : ar.chain) phase *= sl_correct(op.mat);
  const AcinForm& f = ar.form;

  if (tangle_from_acin(f) > tol.tau_min) {
    SymmetrizationResult ghz = symmetrize_ghz_class(f, tol);
    SymmetrizationResult out = std::move(ghz);
    out.chain.insert(out.chain.begin(), ar.chain.begin(), ar.chain.end());
    out.scale *= phase;
    out.input_form = f;
    return out;
  }

  const double l0 = f.lambda[0], l2 = f.lambda[2], l3 = f.lambda[3], l4 = f.lambda[4];
  if (l4 <= tol.w_amp && l0 > tol.w_amp && l2 > tol.w_amp && l3 > tol.w_amp) {
    SymmetrizationResult out;
    out.input_form = f;
    out.class_tag = StateClass::W_CLASS;
    out.chain = ar.chain;
    const cplx shear = f.lambda[1] * cplx{std::cos(f.phi), std::sin(f.phi)} / l0;
    out.chain.push_back(LocalOp{0, Mat2{1.0, 0.0, -shear, 1.0}});
    out.chain.push_back(LocalOp{0, Mat2{0.0, cplx{0.0, 1.0}, cplx{0.0, 1.0}, 0.0}});
    const double alpha = std::sqrt(l0 / l3);
    const double beta = std::sqrt(l2 / l3);
    out.chain.push_back(LocalOp{0, mat2_diag(alpha, 1.0 / alpha)});
    out.chain.push_back(LocalOp{2, mat2_diag(beta, 1.0 / beta)});
    out.output = symmetric_w_state();
    out.vartheta = 0.0;
    out.scale = phase * cplx{0.0, 1.0} * std::sqrt(3.0 * l0 * l2);
    out.renormalized = std::abs(std::abs(out.scale) - 1.0) > 1e-9;
    return out;
  }

  // tau3 ~ 0 and outside the W pattern: name the structure seen in the form.
  std::string msg = "state is not symmetrizable by this pipeline: ";
  if (l4 <= tol.w_amp) {
    std::vector<std::string> parts;
    if (l0 <= tol.w_amp) parts.push_back("the first qubit factors");
    if (l2 <= tol.w_amp) parts.push_back("the third qubit factors");
    if (l3 <= tol.w_amp) parts.push_back("the second qubit factors");
    if (parts.size() > 1)
      msg += "product-like structure (";
    else
      msg += "biseparable structure (";
    for (size_t i = 0; i < parts.size(); ++i) msg += (i ? "; " : "") + parts[i];
    msg += ")";
  } else if (l0 <= tol.w_amp) {
    msg += "biseparable structure (the first qubit factors)";
  } else {
    msg += "canonical form between the generalized-GHZ and W patterns "
           "(lambda0 * lambda4 below threshold with neither negligible)";
  }
  throw not_symmetrizable(msg);
}

}  // namespace stellar
