// Shared numeric types: complex vectors, 2x2 complex matrices, local-operation
// chains, binomial tables, and the tolerance knobs used across the library.
#pragma once

#include <complex>
#include <vector>

namespace stellar {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

inline constexpr double kPi = 3.14159265358979323846;

// Binomial coefficient, exact in double precision for n <= 48.
double binom(int n, int k);
double sqrt_binom(int n, int k);

// Tolerance knobs; defaults match the documented contracts.
struct Tolerances {
  double norm_gate = 1e-8;       // acceptable | |psi|^2 - 1 | on inputs that must be normalized
  double symmetry = 1e-8;        // permutation-defect gate for spin conversion
  double tau_min = 1e-10;        // three-tangle threshold for the GHZ-class branch
  double w_amp = 1e-9;           // amplitude floor recognizing the W-class pattern
  double coeff_cutoff = 1e-12;   // relative cutoff deciding polynomial degree deficiency
  double cluster_radius = 1e-6;  // root clustering radius for star multiplicities
  double zero_poly = 1e-14;      // below this max |coeff| a polynomial counts as zero
  double pencil = 1e-14;         // degenerate-pencil threshold (relative to slice norm)
  double sphere_min = 1e-12;     // minimum multipole radius that emits a sphere
  double antipodal = 1e-7;       // pairing radius for antipodal-closure checks
  double phase_gauge = 1e-12;    // lambda1 below this reports phi = 0
  double tiny_entry = 1e-13;     // matrix entries below this carry no phase information
};

struct Mat2 {
  // Row-major [[a, b], [c, d]].
  cplx a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};
  cplx det() const { return a * d - b * c; }
};

Mat2 operator*(const Mat2& lhs, const Mat2& rhs);
Mat2 operator+(const Mat2& lhs, const Mat2& rhs);
Mat2 mat2_scale(const cplx& s, const Mat2& m);
Mat2 mat2_diag(const cplx& top, const cplx& bottom);

// Determinant evaluated in extended precision.
cplx det_refined(const Mat2& m);

struct LocalOp {
  int slot = 0;  // 0-based qubit index; qubit 0 is the most significant index bit
  Mat2 mat;
};
using LocalOpChain = std::vector<LocalOp>;

// Product of all chain entries acting on `slot`, in application order
// (later entries multiply from the left). Identity if the slot is untouched.
Mat2 slot_composite(const LocalOpChain& chain, int slot);

// Determinant of that composite, accumulated entry-by-entry in extended
// precision; mathematically identical to det(slot_composite) and the value
// the |det - 1| <= 1e-9 chain contract is checked against.
cplx slot_composite_det(const LocalOpChain& chain, int slot);

}  // namespace stellar
