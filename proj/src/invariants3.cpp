#include "stellar/invariants3.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "stellar/errors.hpp"

namespace stellar {

cplx hyperdet3(const PureState& s) {
  require_qubits(s, 3, "hyperdet3");
  const cvec& g = s.amp;  // g[4i + 2j + k] = Gamma_{ijk}
  auto det2 = [](const cplx& a, const cplx& b, const cplx& c, const cplx& d) {
    return a * d - b * c;
  };
  const cplx d1 = det2(g[0b000], g[0b011], g[0b100], g[0b111]);
  const cplx d2 = det2(g[0b010], g[0b001], g[0b110], g[0b101]);
  const cplx d3 = det2(g[0b000], g[0b001], g[0b100], g[0b101]);
  const cplx d4 = det2(g[0b010], g[0b011], g[0b110], g[0b111]);
  const cplx sum = d1 + d2;
  return sum * sum - 4.0 * d3 * d4;
}

double three_tangle(const PureState& s, const Tolerances& tol) {
  require_qubits(s, 3, "three_tangle");
  require_normalized(s, tol.norm_gate, "three_tangle");
  return std::min(1.0, 4.0 * std::abs(hyperdet3(s)));
}

cplx covariance_factor(const LocalOpChain& chain) {
  cplx acc{1.0, 0.0};
  for (const LocalOp& op : chain) {
    if (op.slot < 0 || op.slot > 2)
      throw bad_argument("covariance_factor: chain touches a slot outside 0..2");
    const cplx d = op.mat.det();
    acc *= d * d;
  }
  return acc;
}

double concurrence2(const PureState& s, const Tolerances& tol) {
  require_qubits(s, 2, "concurrence2");
  require_normalized(s, tol.norm_gate, "concurrence2");
  const cvec& g = s.amp;
  return std::min(1.0, 2.0 * std::abs(g[0b00] * g[0b11] - g[0b01] * g[0b10]));
}

SchmidtPair schmidt2(const PureState& s, const Tolerances& tol) {
  require_qubits(s, 2, "schmidt2");
  require_normalized(s, tol.norm_gate, "schmidt2");
  Eigen::Matrix2cd m;
  m << s.amp[0b00], s.amp[0b01], s.amp[0b10], s.amp[0b11];
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd{m};
  SchmidtPair out;
  out.mu1 = svd.singularValues()(0);
  out.mu2 = svd.singularValues()(1);
  out.chi = std::atan2(out.mu2, out.mu1);
  return out;
}

}  // namespace stellar
