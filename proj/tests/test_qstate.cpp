#include <doctest.h>

#include "properties.hpp"
#include "stellar/errors.hpp"
#include "stellar/qstate.hpp"
#include "support.hpp"

using namespace stellar;

TEST_CASE("pure-state constructors validate their input") {
  CHECK_THROWS_AS(make_pure(0, cvec(1)), wrong_qubit_count);
  CHECK_THROWS_AS(make_pure(13, cvec(8192)), wrong_qubit_count);
  CHECK_THROWS_AS(make_pure(2, cvec(3)), bad_argument);
  cvec nan(2);
  nan[0] = cplx{std::numeric_limits<double>::quiet_NaN(), 0.0};
  CHECK_THROWS_AS(make_pure(1, nan), bad_argument);
  const auto b = basis_state(3, 5);
  CHECK(b.amp[5] == cplx{1.0, 0.0});
  CHECK(state_norm(b) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("norms, inner products, and normalized copies") {
  std::mt19937_64 rng(11);
  const auto s = ts::random_state(rng, 3);
  CHECK(state_norm(s) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(state_inner(s, s) - cplx{1.0, 0.0}) <= 1e-14);
  auto scaled = s;
  for (auto& z : scaled.amp) z *= cplx{0.0, 2.0};
  CHECK(state_distance(normalized_copy(scaled), s) <= 2.0);  // equal up to phase i
  CHECK(state_norm(normalized_copy(scaled)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(require_normalized(scaled, 1e-8, "test"), not_normalized);
  CHECK_THROWS_AS(require_qubits(s, 2, "test"), wrong_qubit_count);
}

TEST_CASE("apply_local acts on the most-significant qubit first") {
  const Mat2 X{cplx{0, 0}, cplx{1, 0}, cplx{1, 0}, cplx{0, 0}};
  const auto flipped = apply_local(basis_state(3, 0), {{0, X}});
  CHECK(std::abs(flipped.amp[4] - cplx{1.0, 0.0}) <= 1e-15);  // |000> -> |100>
  const auto low = apply_local(basis_state(3, 0), {{2, X}});
  CHECK(std::abs(low.amp[1] - cplx{1.0, 0.0}) <= 1e-15);  // |000> -> |001>
}

TEST_CASE("permute_qubits moves qubit k to slot sigma[k]") {
  const auto s = basis_state(3, 4);  // |100>
  const auto p = permute_qubits(s, {1, 2, 0});
  CHECK(std::abs(p.amp[2] - cplx{1.0, 0.0}) <= 1e-15);  // |010>
  CHECK_THROWS_AS(permute_qubits(s, {0, 0, 1}), bad_argument);
}

TEST_CASE("symmetry defect separates symmetric from asymmetric states") {
  CHECK(symmetry_defect(ts::w3()) <= 1e-15);
  CHECK(symmetry_defect(ts::ghz3()) <= 1e-15);
  CHECK(symmetry_defect(basis_state(3, 1)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("symmetric states map to spin states and back") {
  const auto sp = symmetric_to_spin(ts::w3());
  REQUIRE(sp.two_j == 3);
  CHECK(std::abs(sp.c[1] - cplx{1.0, 0.0}) <= 1e-15);
  CHECK(std::abs(sp.c[0]) + std::abs(sp.c[2]) + std::abs(sp.c[3]) <= 1e-15);
  CHECK(state_distance(spin_to_symmetric(sp), ts::w3()) <= 1e-15);
  CHECK_THROWS_AS(symmetric_to_spin(basis_state(3, 1)), not_symmetric);
}

TEST_CASE("coherent overlap matches the closed form on basis spins") {
  SpinState up;  // |j = 1/2, m = +1/2>
  up.two_j = 1;
  up.c = {cplx{1.0, 0.0}, cplx{0.0, 0.0}};
  CHECK(std::abs(coherent_overlap(up, 0.0, 0.0)) <= 1e-15);
  CHECK(std::abs(coherent_overlap(up, kPi, 0.0) - cplx{1.0, 0.0}) <= 1e-15);
  const cplx mid = coherent_overlap(up, kPi / 2, kPi / 3);
  CHECK(std::abs(mid - std::polar(std::sqrt(0.5), kPi / 3)) <= 1e-15);
}

TEST_CASE("density constructors enforce physicality") {
  CHECK_THROWS_AS(make_density(2, {cplx{1, 0}, cplx{0.3, 0}, cplx{0, 0}, cplx{0, 0}}),
                  bad_argument);  // not Hermitian
  CHECK_THROWS_AS(make_density(2, {cplx{1.5, 0}, cplx{0, 0}, cplx{0, 0}, cplx{-0.5, 0}}),
                  bad_argument);  // negative eigenvalue
  CHECK_THROWS_AS(make_density(2, {cplx{0.6, 0}, cplx{0, 0}, cplx{0, 0}, cplx{0.6, 0}}),
                  bad_argument);  // trace 1.2
  const auto ok = make_density(2, {cplx{0.5, 0}, cplx{0, 0}, cplx{0, 0}, cplx{0.5, 0}});
  CHECK(ok.at(0, 0).real() == doctest::Approx(0.5));
}

TEST_CASE("reduced density of a Bell pair is maximally mixed") {
  const auto rho = reduced_density(ts::schmidt_pair(kPi / 4), {0});
  CHECK(std::abs(rho.at(0, 0) - cplx{0.5, 0.0}) <= 1e-14);
  CHECK(std::abs(rho.at(1, 1) - cplx{0.5, 0.0}) <= 1e-14);
  CHECK(std::abs(rho.at(0, 1)) <= 1e-14);
  CHECK_THROWS_AS(reduced_density(ts::schmidt_pair(0.3), {0, 1}), bad_argument);  // keeps all
}

TEST_CASE("state-space properties hold on random data") {
  for (const auto& p : {props::prop_apply_composition(), props::prop_permute_action(),
                        props::prop_symmetric_norm(), props::prop_antipode_vanishing()}) {
    INFO(p.name, ": worst ", p.worst, " gate ", p.gate);
    CHECK(p.failures == 0);
  }
}
