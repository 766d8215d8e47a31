#include "stellar/mixed.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>

#include "stellar/errors.hpp"

namespace stellar {

namespace {

const mpz_class& factorial(int n) {
  static const std::vector<mpz_class> table = [] {
    std::vector<mpz_class> t(201);
    t[0] = 1;
    for (int i = 1; i <= 200; ++i) t[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i - 1)] * i;
    return t;
  }();
  return table[static_cast<std::size_t>(n)];
}

}  // namespace

double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2, int two_j, int two_m) {
  const auto valid = [](int tj, int tm) {
    return tj >= 0 && tj <= 60 && std::abs(tm) <= tj && (tj + tm) % 2 == 0;
  };
  if (!valid(two_j1, two_m1) || !valid(two_j2, two_m2) || !valid(two_j, two_m))
    throw bad_argument("malformed angular momentum quantum numbers");

  if (two_m1 + two_m2 != two_m) return 0.0;
  if (two_j < std::abs(two_j1 - two_j2) || two_j > two_j1 + two_j2) return 0.0;
  if ((two_j1 + two_j2 + two_j) % 2 != 0) return 0.0;

  const int a = (two_j1 + two_j2 - two_j) / 2;
  const int b = (two_j1 - two_j2 + two_j) / 2;
  const int c = (-two_j1 + two_j2 + two_j) / 2;
  const int jm = (two_j + two_m) / 2, jmm = (two_j - two_m) / 2;
  const int j1m = (two_j1 + two_m1) / 2, j1mm = (two_j1 - two_m1) / 2;
  const int j2m = (two_j2 + two_m2) / 2, j2mm = (two_j2 - two_m2) / 2;
  const int d1 = (two_j - two_j2 + two_m1) / 2;
  const int d2 = (two_j - two_j1 - two_m2) / 2;

  mpq_class pre(mpz_class(two_j + 1) * factorial(a) * factorial(b) * factorial(c) *
                    factorial(jm) * factorial(jmm) * factorial(j1m) * factorial(j1mm) *
                    factorial(j2m) * factorial(j2mm),
                factorial((two_j1 + two_j2 + two_j) / 2 + 1));
  pre.canonicalize();

  const int tmin = std::max({0, -d1, -d2});
  const int tmax = std::min({a, j1mm, j2m});
  if (tmax < tmin) return 0.0;
  mpq_class sum = 0;
  for (int t = tmin; t <= tmax; ++t) {
    mpq_class term(mpz_class((t % 2 == 0) ? 1 : -1),
                   factorial(t) * factorial(a - t) * factorial(j1mm - t) * factorial(j2m - t) *
                       factorial(d1 + t) * factorial(d2 + t));
    sum += term;
  }
  return std::sqrt(pre.get_d()) * sum.get_d();
}

cvec tensor_op(int two_j, int k, int q) {
  if (two_j < 0 || two_j > 24) throw bad_argument("operator spin must satisfy 0 <= 2j <= 24");
  if (k < 0 || k > two_j) throw bad_argument("tensor rank must lie in [0, 2j]");
  if (std::abs(q) > k) throw bad_argument("tensor component must satisfy |q| <= k");
  const int dim = two_j + 1;
  cvec m(static_cast<std::size_t>(dim) * dim, cplx{0.0, 0.0});
  for (int a = 0; a < dim; ++a) {
    const int col = a + q;
    if (col < 0 || col >= dim) continue;
    const double sign = (col % 2 == 0) ? 1.0 : -1.0;
    const double cg =
        clebsch_gordan(two_j, two_j - 2 * a, two_j, -(two_j - 2 * col), 2 * k, 2 * q);
    m[static_cast<std::size_t>(a) * dim + col] = sign * cg;
  }
  return m;
}

SphericalDecomp spherical_decompose(const DensityMatrix& rho) {
  SphericalDecomp d;
  d.two_j = rho.dim - 1;
  d.components.resize(static_cast<std::size_t>(d.two_j) + 1);
  d.radii.resize(static_cast<std::size_t>(d.two_j) + 1, 0.0);
  for (int k = 0; k <= d.two_j; ++k) {
    cvec comp(static_cast<std::size_t>(2 * k) + 1);
    double r2 = 0.0;
    for (int q = -k; q <= k; ++q) {
      const cvec t = tensor_op(d.two_j, k, q);
      cplx val{0.0, 0.0};
      for (int a = 0; a < rho.dim; ++a)
        for (int b = 0; b < rho.dim; ++b)
          val += rho.at(a, b) * std::conj(t[static_cast<std::size_t>(a) * rho.dim + b]);
      comp[static_cast<std::size_t>(q + k)] = val;
      r2 += std::norm(val);
    }
    d.components[static_cast<std::size_t>(k)] = std::move(comp);
    d.radii[static_cast<std::size_t>(k)] = std::sqrt(r2);
  }
  return d;
}

cvec rank_polynomial(const SphericalDecomp& d, int k) {
  if (k < 1 || k > d.two_j) throw bad_argument("rank must lie in [1, 2j]");
  const cvec& comp = d.components[static_cast<std::size_t>(k)];
  cvec coeff(static_cast<std::size_t>(2 * k) + 1);
  for (int r = 0; r <= 2 * k; ++r) {
    const double sign = (r % 2 == 0) ? 1.0 : -1.0;
    coeff[static_cast<std::size_t>(r)] = sign * sqrt_binom(2 * k, r) * comp[static_cast<std::size_t>(r)];
  }
  return coeff;
}

std::vector<MixedConstellation> mixed_constellations(const SphericalDecomp& d,
                                                     const Tolerances& tol) {
  std::vector<MixedConstellation> out;
  for (int k = 1; k <= d.two_j; ++k) {
    if (d.radii[static_cast<std::size_t>(k)] <= tol.sphere_min) continue;
    MixedConstellation mc;
    mc.k = k;
    mc.radius = d.radii[static_cast<std::size_t>(k)];
    mc.constellation = constellation_from_coeffs(rank_polynomial(d, k), 2 * k, tol);
    mc.antipodal_defect = antipodal_defect(mc.constellation);
    out.push_back(std::move(mc));
  }
  return out;
}

double purity(const DensityMatrix& rho) {
  double p = 0.0;
  for (const cplx& v : rho.rho) p += std::norm(v);
  return p;
}

DensityMatrix nghz_density(int n) {
  if (n < 1 || n > 24) throw bad_argument("qubit count must lie in [1, 24]");
  const int dim = n + 1;
  cvec r(static_cast<std::size_t>(dim) * dim, cplx{0.0, 0.0});
  const std::size_t d = static_cast<std::size_t>(dim);
  r[0] = r[d - 1] = r[(d - 1) * d] = r[(d - 1) * d + (d - 1)] = cplx{0.5, 0.0};
  return make_density(dim, std::move(r));
}

}  // namespace stellar
