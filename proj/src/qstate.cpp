#include "stellar/qstate.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "stellar/errors.hpp"

namespace stellar {

namespace {

bool finite(const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

int require_valid_n(int n, const char* where) {
  if (n < 1 || n > 12)
    throw wrong_qubit_count(std::string(where) + ": qubit count must be in 1..12, got " +
                            std::to_string(n));
  return n;
}

}  // namespace

PureState make_pure(int n, cvec amp) {
  require_valid_n(n, "make_pure");
  if (amp.size() != (size_t{1} << n))
    throw bad_argument("make_pure: amplitude count " + std::to_string(amp.size()) +
                       " does not match 2^" + std::to_string(n));
  for (const cplx& a : amp)
    if (!finite(a)) throw bad_argument("make_pure: non-finite amplitude");
  return {n, std::move(amp)};
}

PureState basis_state(int n, unsigned bits) {
  require_valid_n(n, "basis_state");
  if (bits >= (1u << n)) throw bad_argument("basis_state: bit pattern out of range");
  cvec amp(size_t{1} << n, 0.0);
  amp[bits] = 1.0;
  return {n, std::move(amp)};
}

double state_norm(const PureState& s) {
  double acc = 0.0;
  for (const cplx& a : s.amp) acc += std::norm(a);
  return std::sqrt(acc);
}

PureState normalized_copy(PureState s) {
  double nrm = state_norm(s);
  if (nrm <= 0.0) throw norm_underflow("normalized_copy: zero state");
  for (cplx& a : s.amp) a /= nrm;
  return s;
}

cplx state_inner(const PureState& a, const PureState& b) {
  if (a.n != b.n) throw wrong_qubit_count("state_inner: mismatched qubit counts");
  cplx acc = 0.0;
  for (size_t i = 0; i < a.amp.size(); ++i) acc += std::conj(a.amp[i]) * b.amp[i];
  return acc;
}

double state_distance(const PureState& a, const PureState& b) {
  if (a.n != b.n) throw wrong_qubit_count("state_distance: mismatched qubit counts");
  double acc = 0.0;
  for (size_t i = 0; i < a.amp.size(); ++i) acc += std::norm(a.amp[i] - b.amp[i]);
  return std::sqrt(acc);
}

void require_qubits(const PureState& s, int n, const char* where) {
  if (s.n != n)
    throw wrong_qubit_count(std::string(where) + ": expected " + std::to_string(n) +
                            " qubits, got " + std::to_string(s.n));
}

void require_normalized(const PureState& s, double gate, const char* where) {
  double nrm2 = 0.0;
  for (const cplx& a : s.amp) nrm2 += std::norm(a);
  if (std::abs(nrm2 - 1.0) > gate)
    throw not_normalized(std::string(where) + ": |psi|^2 deviates from 1 by " +
                         std::to_string(std::abs(nrm2 - 1.0)));
}

PureState apply_local(const PureState& s, const LocalOpChain& chain) {
  PureState out = s;
  const size_t dim = out.amp.size();
  for (const LocalOp& op : chain) {
    if (op.slot < 0 || op.slot >= s.n)
      throw bad_argument("apply_local: slot " + std::to_string(op.slot) +
                         " out of range for " + std::to_string(s.n) + " qubits");
    if (!finite(op.mat.a) || !finite(op.mat.b) || !finite(op.mat.c) || !finite(op.mat.d))
      throw bad_argument("apply_local: non-finite matrix entry");
    const size_t stride = size_t{1} << (s.n - 1 - op.slot);
    for (size_t base = 0; base < dim; ++base) {
      if (base & stride) continue;
      const cplx lo = out.amp[base], hi = out.amp[base | stride];
      out.amp[base] = op.mat.a * lo + op.mat.b * hi;
      out.amp[base | stride] = op.mat.c * lo + op.mat.d * hi;
    }
  }
  return out;
}

PureState permute_qubits(const PureState& s, const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != s.n)
    throw bad_argument("permute_qubits: permutation length does not match qubit count");
  std::vector<int> seen(s.n, 0);
  for (int v : sigma) {
    if (v < 0 || v >= s.n || seen[v]++)
      throw bad_argument("permute_qubits: not a bijection on 0..n-1");
  }
  PureState out = s;
  const size_t dim = s.amp.size();
  for (size_t m = 0; m < dim; ++m) {
    size_t target = 0;
    for (int k = 0; k < s.n; ++k) {
      const size_t bit = (m >> (s.n - 1 - k)) & 1u;
      target |= bit << (s.n - 1 - sigma[k]);
    }
    out.amp[target] = s.amp[m];
  }
  return out;
}

double symmetry_defect(const PureState& s) {
  double worst = 0.0;
  const size_t dim = s.amp.size();
  for (int i = 0; i < s.n; ++i) {
    for (int j = i + 1; j < s.n; ++j) {
      const size_t bi = size_t{1} << (s.n - 1 - i);
      const size_t bj = size_t{1} << (s.n - 1 - j);
      double acc = 0.0;
      for (size_t m = 0; m < dim; ++m) {
        const bool vi = m & bi, vj = m & bj;
        if (vi == vj) continue;
        const size_t swapped = (m ^ bi) ^ bj;
        acc += std::norm(s.amp[m] - s.amp[swapped]);
      }
      worst = std::max(worst, std::sqrt(acc));
    }
  }
  return worst;
}

double spin_norm(const SpinState& s) {
  double acc = 0.0;
  for (const cplx& a : s.c) acc += std::norm(a);
  return std::sqrt(acc);
}

SpinState symmetric_to_spin(const PureState& s, const Tolerances& tol) {
  const double defect = symmetry_defect(s);
  if (defect > tol.symmetry)
    throw not_symmetric("symmetric_to_spin: permutation defect " + std::to_string(defect) +
                        " exceeds " + std::to_string(tol.symmetry));
  SpinState out;
  out.two_j = s.n;
  out.c.assign(s.n + 1, 0.0);
  for (size_t m = 0; m < s.amp.size(); ++m)
    out.c[std::popcount(m)] += s.amp[m];
  for (int k = 0; k <= s.n; ++k) out.c[k] /= sqrt_binom(s.n, k);
  return out;
}

PureState spin_to_symmetric(const SpinState& s) {
  if (s.two_j < 1 || s.two_j > 12)
    throw bad_argument("spin_to_symmetric: two_j must be in 1..12, got " +
                       std::to_string(s.two_j));
  if (s.c.size() != static_cast<size_t>(s.two_j) + 1)
    throw bad_argument("spin_to_symmetric: component count does not match two_j + 1");
  cvec amp(size_t{1} << s.two_j, 0.0);
  for (size_t m = 0; m < amp.size(); ++m) {
    const int k = std::popcount(m);
    amp[m] = s.c[k] / sqrt_binom(s.two_j, k);
  }
  return {s.two_j, std::move(amp)};
}

cplx coherent_overlap(const SpinState& s, double theta, double phi) {
  if (s.c.size() != static_cast<size_t>(s.two_j) + 1)
    throw bad_argument("coherent_overlap: component count does not match two_j + 1");
  const int n = s.two_j;
  const double co = std::cos(theta / 2.0);
  const cplx w = std::sin(theta / 2.0) * cplx{std::cos(phi), std::sin(phi)};
  // Index k stores m = j - k, so the exponent j + m equals n - k.
  std::vector<double> cop(n + 1, 1.0);
  cvec wp(n + 1, 1.0);
  for (int r = 1; r <= n; ++r) {
    cop[r] = cop[r - 1] * co;
    wp[r] = wp[r - 1] * w;
  }
  cplx acc = 0.0;
  for (int k = 0; k <= n; ++k)
    acc += sqrt_binom(n, n - k) * cop[k] * wp[n - k] * s.c[k];
  return acc;
}

DensityMatrix make_density(int dim, cvec entries) {
  if (dim < 1 || dim > 25)
    throw bad_argument("make_density: dimension must be in 1..25, got " + std::to_string(dim));
  if (entries.size() != static_cast<size_t>(dim) * dim)
    throw bad_argument("make_density: entry count does not match dim^2");
  DensityMatrix rho{dim, std::move(entries)};
  double herm = 0.0;
  cplx trace = 0.0;
  for (int r = 0; r < dim; ++r) {
    trace += rho.at(r, r);
    for (int c = 0; c < dim; ++c) {
      if (!finite(rho.at(r, c))) throw bad_argument("make_density: non-finite entry");
      herm = std::max(herm, std::abs(rho.at(r, c) - std::conj(rho.at(c, r))));
    }
  }
  if (herm > 1e-12)
    throw bad_argument("make_density: Hermiticity violated by " + std::to_string(herm));
  if (std::abs(trace - cplx{1.0, 0.0}) > 1e-12)
    throw bad_argument("make_density: trace deviates from 1 by " +
                       std::to_string(std::abs(trace - cplx{1.0, 0.0})));
  Eigen::MatrixXcd m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = rho.at(r, c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es{m};
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw bad_argument("make_density: negative eigenvalue " +
                       std::to_string(es.eigenvalues().minCoeff()));
  return rho;
}

DensityMatrix reduced_density(const PureState& s, const std::vector<int>& keep) {
  if (keep.empty() || static_cast<int>(keep.size()) >= s.n)
    throw bad_argument("reduced_density: kept set must be a nonempty proper subset");
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= s.n)
      throw bad_argument("reduced_density: qubit index out of range");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw bad_argument("reduced_density: repeated qubit index");
  }
  const int k = static_cast<int>(sorted.size());
  std::vector<int> env;
  for (int q = 0; q < s.n; ++q)
    if (!std::binary_search(sorted.begin(), sorted.end(), q)) env.push_back(q);

  const int dim = 1 << k;
  const size_t envdim = size_t{1} << env.size();
  auto full_index = [&](size_t kept_bits, size_t env_bits) {
    size_t m = 0;
    for (int i = 0; i < k; ++i)
      m |= ((kept_bits >> (k - 1 - i)) & 1u) << (s.n - 1 - sorted[i]);
    for (size_t i = 0; i < env.size(); ++i)
      m |= ((env_bits >> (env.size() - 1 - i)) & 1u) << (s.n - 1 - env[i]);
    return m;
  };

  DensityMatrix rho{dim, cvec(static_cast<size_t>(dim) * dim, 0.0)};
  for (size_t e = 0; e < envdim; ++e) {
    for (int r = 0; r < dim; ++r) {
      const cplx ar = s.amp[full_index(r, e)];
      if (ar == cplx{0.0, 0.0}) continue;
      for (int c = 0; c < dim; ++c)
        rho.at(r, c) += ar * std::conj(s.amp[full_index(c, e)]);
    }
  }
  return rho;
}

}  // namespace stellar
