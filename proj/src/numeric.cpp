#include "stellar/numeric.hpp"

#include <array>
#include <cmath>
#include <string>

#include "stellar/errors.hpp"

namespace stellar {

namespace {

constexpr int kMaxBinomRow = 48;

const std::array<std::array<double, kMaxBinomRow + 1>, kMaxBinomRow + 1>& pascal_table() {
  static const auto table = [] {
    std::array<std::array<double, kMaxBinomRow + 1>, kMaxBinomRow + 1> t{};
    for (int n = 0; n <= kMaxBinomRow; ++n) {
      t[n][0] = 1.0;
      for (int k = 1; k <= n; ++k)
        t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0.0);
    }
    return t;
  }();
  return table;
}

using lcplx = std::complex<long double>;

lcplx widen(const cplx& z) { return {static_cast<long double>(z.real()), static_cast<long double>(z.imag())}; }

cplx narrow(const lcplx& z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

}  // namespace

double binom(int n, int k) {
  if (n < 0 || n > kMaxBinomRow)
    throw bad_argument("binomial row out of supported range: n = " + std::to_string(n));
  if (k < 0 || k > n) return 0.0;
  return pascal_table()[n][k];
}

double sqrt_binom(int n, int k) { return std::sqrt(binom(n, k)); }

Mat2 operator*(const Mat2& lhs, const Mat2& rhs) {
  return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
          lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

Mat2 operator+(const Mat2& lhs, const Mat2& rhs) {
  return {lhs.a + rhs.a, lhs.b + rhs.b, lhs.c + rhs.c, lhs.d + rhs.d};
}

Mat2 mat2_scale(const cplx& s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }

Mat2 mat2_diag(const cplx& top, const cplx& bottom) { return {top, 0.0, 0.0, bottom}; }

cplx det_refined(const Mat2& m) {
  return narrow(widen(m.a) * widen(m.d) - widen(m.b) * widen(m.c));
}

Mat2 slot_composite(const LocalOpChain& chain, int slot) {
  Mat2 acc;
  for (const LocalOp& op : chain)
    if (op.slot == slot) acc = op.mat * acc;
  return acc;
}

cplx slot_composite_det(const LocalOpChain& chain, int slot) {
  lcplx acc{1.0L, 0.0L};
  for (const LocalOp& op : chain)
    if (op.slot == slot)
      acc *= widen(op.mat.a) * widen(op.mat.d) - widen(op.mat.b) * widen(op.mat.c);
  return narrow(acc);
}

}  // namespace stellar
