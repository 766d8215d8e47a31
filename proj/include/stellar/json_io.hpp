// JSON parsing of states and density matrices plus deterministic serializers:
// JSON numbers carry 17 significant digits (roundtrip fidelity), CSV 12.
#pragma once

#include <iosfwd>
#include <string>

#include "stellar/majorana.hpp"
#include "stellar/numeric.hpp"
#include "stellar/qstate.hpp"

namespace stellar {

std::string read_stream(std::istream& in);

// {"n": int, "amps": [[re, im], ...]} with 2^n entries, bitstring ascending.
PureState parse_state_json(const std::string& text);
// {"dim": int, "rho": [[[re, im], ...], ...]} row-major.
DensityMatrix parse_density_json(const std::string& text);

std::string g17(double x);
std::string g12(double x);

std::string json_complex(const cplx& z);
std::string json_state(const PureState& psi);
std::string json_density(const DensityMatrix& rho);
std::string json_constellation(const Constellation& c);
std::string json_chain(const LocalOpChain& chain);

// CSV plot data: header theta,phi,mult,x,y,z then one row per star in
// canonical order; header only for an empty constellation.
std::string emit_plot_csv(const Constellation& c);

}  // namespace stellar
