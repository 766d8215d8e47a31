#include "stellar/json_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <istream>
#include <sstream>

#include "stellar/errors.hpp"

namespace stellar {

std::string read_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

nlohmann::json parse_or_throw(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

cplx read_complex(const nlohmann::json& j, const char* where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw parse_error(std::string(where) + " entries must be [re, im] number pairs");
  return cplx{j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

PureState parse_state_json(const std::string& text) {
  const nlohmann::json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("amps"))
    throw parse_error("state JSON must be an object with fields n and amps");
  if (!j["n"].is_number_integer()) throw parse_error("field n must be an integer");
  const int n = j["n"].get<int>();
  if (n < 1 || n > 12) throw parse_error("field n must lie in [1, 12]");
  const nlohmann::json& arr = j["amps"];
  if (!arr.is_array() || arr.size() != (std::size_t{1} << n))
    throw parse_error("amps must hold exactly 2^n entries");
  cvec amp(arr.size());
  for (std::size_t i = 0; i < amp.size(); ++i) amp[i] = read_complex(arr[i], "amps");
  try {
    return make_pure(n, std::move(amp));
  } catch (const error& e) {
    throw parse_error(e.what());
  }
}

DensityMatrix parse_density_json(const std::string& text) {
  const nlohmann::json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("dim") || !j.contains("rho"))
    throw parse_error("density JSON must be an object with fields dim and rho");
  if (!j["dim"].is_number_integer()) throw parse_error("field dim must be an integer");
  const int dim = j["dim"].get<int>();
  if (dim < 1 || dim > 25) throw parse_error("field dim must lie in [1, 25]");
  const nlohmann::json& rows = j["rho"];
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(dim))
    throw parse_error("rho must hold dim rows");
  cvec entries(static_cast<std::size_t>(dim) * dim);
  for (int r = 0; r < dim; ++r) {
    const nlohmann::json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim))
      throw parse_error("each rho row must hold dim entries");
    for (int c = 0; c < dim; ++c)
      entries[static_cast<std::size_t>(r) * dim + c] = read_complex(row[static_cast<std::size_t>(c)], "rho");
  }
  return make_density(dim, std::move(entries));
}

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x + 0.0);
  return buf;
}

std::string g12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x + 0.0);
  return buf;
}

std::string json_complex(const cplx& z) {
  return "[" + g17(z.real()) + "," + g17(z.imag()) + "]";
}

std::string json_state(const PureState& psi) {
  std::string s = "{\"n\":" + std::to_string(psi.n) + ",\"amps\":[";
  for (std::size_t i = 0; i < psi.amp.size(); ++i) {
    if (i) s += ",";
    s += json_complex(psi.amp[i]);
  }
  return s + "]}";
}

std::string json_density(const DensityMatrix& rho) {
  std::string s = "{\"dim\":" + std::to_string(rho.dim) + ",\"rho\":[";
  for (int r = 0; r < rho.dim; ++r) {
    if (r) s += ",";
    s += "[";
    for (int c = 0; c < rho.dim; ++c) {
      if (c) s += ",";
      s += json_complex(rho.at(r, c));
    }
    s += "]";
  }
  return s + "]}";
}

std::string json_constellation(const Constellation& c) {
  std::string s = "{\"degree\":" + std::to_string(c.degree) + ",\"stars\":[";
  for (std::size_t i = 0; i < c.stars.size(); ++i) {
    if (i) s += ",";
    s += "{\"theta\":" + g17(c.stars[i].theta) + ",\"phi\":" + g17(c.stars[i].phi) +
         ",\"mult\":" + std::to_string(c.stars[i].mult) + "}";
  }
  return s + "]}";
}

std::string json_chain(const LocalOpChain& chain) {
  std::string s = "[";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) s += ",";
    const Mat2& m = chain[i].mat;
    s += "{\"slot\":" + std::to_string(chain[i].slot) + ",\"matrix\":[[" + json_complex(m.a) +
         "," + json_complex(m.b) + "],[" + json_complex(m.c) + "," + json_complex(m.d) + "]]}";
  }
  return s + "]";
}

std::string emit_plot_csv(const Constellation& c) {
  std::string s = "theta,phi,mult,x,y,z\n";
  for (const Star& st : c.stars) {
    const auto v = star_vec(st);
    s += g12(st.theta) + "," + g12(st.phi) + "," + std::to_string(st.mult) + "," + g12(v[0]) +
         "," + g12(v[1]) + "," + g12(v[2]) + "\n";
  }
  return s;
}

}  // namespace stellar
