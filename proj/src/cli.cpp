#include "stellar/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "stellar/acin.hpp"
#include "stellar/errors.hpp"
#include "stellar/invariants3.hpp"
#include "stellar/invariants_n.hpp"
#include "stellar/json_io.hpp"
#include "stellar/majorana.hpp"
#include "stellar/mixed.hpp"
#include "stellar/qstate.hpp"
#include "stellar/symmetrize.hpp"

namespace stellar {

namespace {

double parse_number(const std::string& tok) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw parse_error("bad fixture parameter '" + tok + "'");
  }
  if (pos != tok.size()) throw parse_error("bad fixture parameter '" + tok + "'");
  return v;
}

std::string scalar_report(const char* key, double v, int n, bool csv) {
  if (csv) return std::string("name,value\n") + key + "," + g12(v) + "\n";
  return "{\"n\":" + std::to_string(n) + ",\"" + key + "\":" + g17(v) + "}\n";
}

std::string complex_report(const char* key, const cplx& v, int n, bool csv) {
  if (csv)
    return std::string("name,re,im\n") + key + "," + g12(v.real()) + "," + g12(v.imag()) + "\n";
  return "{\"n\":" + std::to_string(n) + ",\"" + key + "\":" + json_complex(v) + "}\n";
}

std::string inv4_report(const FourInvariants& f, bool csv) {
  if (csv) {
    std::string s = "name,re,im\n";
    const std::pair<const char*, cplx> rows[] = {{"H", f.H}, {"L", f.L}, {"M", f.M}, {"D", f.D}};
    for (const auto& [k, v] : rows) s += std::string(k) + "," + g12(v.real()) + "," + g12(v.imag()) + "\n";
    return s;
  }
  return "{\"n\":4,\"H\":" + json_complex(f.H) + ",\"L\":" + json_complex(f.L) +
         ",\"M\":" + json_complex(f.M) + ",\"D\":" + json_complex(f.D) + "}\n";
}

std::string acin_body(const AcinForm& f) {
  std::string s = "\"lambda\":[";
  for (int i = 0; i < 5; ++i) {
    if (i) s += ",";
    s += g17(f.lambda[i]);
  }
  return s + "],\"phi\":" + g17(f.phi);
}

std::string acin_csv(const AcinForm& f) {
  std::string s = "name,value\n";
  for (int i = 0; i < 5; ++i) s += "lambda" + std::to_string(i) + "," + g12(f.lambda[i]) + "\n";
  return s + "phi," + g12(f.phi) + "\n";
}

std::string stars_report(const Constellation& c, const std::string& note, bool csv) {
  if (csv) return emit_plot_csv(c);
  std::string s = "{\"degree\":" + std::to_string(c.degree);
  if (!note.empty()) s += ",\"note\":\"" + note + "\"";
  s += ",\"stars\":[";
  for (std::size_t i = 0; i < c.stars.size(); ++i) {
    if (i) s += ",";
    s += "{\"theta\":" + g17(c.stars[i].theta) + ",\"phi\":" + g17(c.stars[i].phi) +
         ",\"mult\":" + std::to_string(c.stars[i].mult) + "}";
  }
  return s + "]}\n";
}

std::string run_fixtures(const std::string& spec) {
  if (spec.empty()) throw parse_error("fixtures needs a name, e.g. ghz3 or gghz:0.314");
  std::string name = spec;
  std::vector<double> v;
  if (const std::size_t colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    std::string params = spec.substr(colon + 1);
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = params.find(',', start);
      v.push_back(parse_number(params.substr(start, comma == std::string::npos ? std::string::npos
                                                                               : comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  const auto want = [&](std::size_t k) {
    if (v.size() != k)
      throw parse_error("fixture " + name + " needs " + std::to_string(k) + " parameter(s)");
  };

  if (name == "nghz") {
    want(1);
    if (v[0] != std::floor(v[0])) throw parse_error("nghz needs an integer qubit count");
    return json_density(nghz_density(static_cast<int>(v[0]))) + "\n";
  }

  PureState psi;
  if (name == "ghz3") {
    want(0);
    cvec a(8, cplx{0.0, 0.0});
    a[0] = a[7] = 1.0;
    psi = make_pure(3, std::move(a));
  } else if (name == "w3") {
    want(0);
    cvec a(8, cplx{0.0, 0.0});
    a[1] = a[2] = a[4] = 1.0;
    psi = make_pure(3, std::move(a));
  } else if (name == "gghz") {
    want(1);
    cvec a(8, cplx{0.0, 0.0});
    a[0] = std::cos(v[0]);
    a[7] = std::sin(v[0]);
    psi = make_pure(3, std::move(a));
  } else if (name == "gw") {
    want(3);
    cvec a(8, cplx{0.0, 0.0});
    a[1] = v[0];
    a[2] = v[1];
    a[4] = v[2];
    psi = make_pure(3, std::move(a));
  } else if (name == "ghz4") {
    want(0);
    cvec a(16, cplx{0.0, 0.0});
    a[0] = a[15] = 1.0;
    psi = make_pure(4, std::move(a));
  } else if (name == "cluster4") {
    want(0);
    cvec a(16, cplx{0.0, 0.0});
    a[0b0000] = a[0b0011] = a[0b1100] = 1.0;
    a[0b1111] = -1.0;
    psi = make_pure(4, std::move(a));
  } else if (name == "l4") {
    want(0);
    psi = l_state();
  } else if (name == "gabcd") {
    if (v.size() == 4)
      psi = g_abcd(v[0], v[1], v[2], v[3]);
    else if (v.size() == 8)
      psi = g_abcd(cplx{v[0], v[1]}, cplx{v[2], v[3]}, cplx{v[4], v[5]}, cplx{v[6], v[7]});
    else
      throw parse_error("fixture gabcd needs 4 real or 8 re,im parameters");
  } else {
    throw parse_error("unknown fixture '" + name + "'");
  }
  return json_state(normalized_copy(std::move(psi))) + "\n";
}

std::string run_state_verb(const std::string& verb, const PureState& psi, const Tolerances& tol,
                           bool csv) {
  if (verb == "tangle") {
    switch (psi.n) {
      case 2:
        return scalar_report("concurrence", concurrence2(psi, tol), 2, csv);
      case 3:
        return scalar_report("tau3", three_tangle(psi, tol), 3, csv);
      case 4:
        return inv4_report(invariants4(psi), csv);
      case 5:
        return complex_report("F", inv5_F(psi), 5, csv);
      default:
        throw wrong_qubit_count("tangle handles 2 to 5 qubits");
    }
  }
  if (verb == "invariants4") return inv4_report(invariants4(psi), csv);
  if (verb == "invariant5") return complex_report("F", inv5_F(psi), 5, csv);

  if (verb == "acin") {
    const AcinResult r = acin_canonical(psi, tol);
    if (csv) return acin_csv(r.form);
    return "{" + acin_body(r.form) + ",\"chain\":" + json_chain(r.chain) + "}\n";
  }

  if (verb == "symmetrize") {
    const SymmetrizationResult r = symmetrize(psi, tol);
    const char* cls = r.class_tag == StateClass::GHZ_CLASS ? "GHZ" : "W";
    if (csv) {
      std::string s = "name,value\nclass," + std::string(cls) + "\n";
      for (int i = 0; i < 5; ++i)
        s += "lambda" + std::to_string(i) + "," + g12(r.input_form.lambda[i]) + "\n";
      s += "phi," + g12(r.input_form.phi) + "\n";
      s += "vartheta," + g12(r.vartheta) + "\n";
      s += "scale_re," + g12(r.scale.real()) + "\nscale_im," + g12(r.scale.imag()) + "\n";
      return s;
    }
    return std::string("{\"class\":\"") + cls + "\"," + acin_body(r.input_form) +
           ",\"vartheta\":" + g17(r.vartheta) + ",\"scale\":" + json_complex(r.scale) +
           ",\"renormalized\":" + (r.renormalized ? "true" : "false") +
           ",\"output\":" + json_state(r.output) + ",\"chain\":" + json_chain(r.chain) + "}\n";
  }

  if (verb == "stars") {
    require_normalized(psi, tol.norm_gate, "stars");
    std::string note;
    Constellation c;
    if (symmetry_defect(psi) <= tol.symmetry) {
      c = constellation_of(symmetric_to_spin(psi, tol), tol);
    } else if (psi.n == 3) {
      const SymmetrizationResult r = symmetrize(psi, tol);
      c = constellation_of(symmetric_to_spin(r.output, tol), tol);
      note = "non-symmetric input symmetrized by a determinant-preserving local chain";
    } else if (psi.n == 2) {
      const SchmidtPair sp = schmidt2(psi, tol);
      const PureState sym = make_pure(2, {sp.mu1, 0.0, 0.0, sp.mu2});
      c = constellation_of(symmetric_to_spin(sym, tol), tol);
      note = "two-qubit input replaced by its Schmidt-diagonal symmetric form";
    } else {
      throw not_symmetric("stars needs a permutation-symmetric state when n is not 2 or 3");
    }
    return stars_report(c, note, csv);
  }

  throw parse_error("unhandled verb '" + verb + "'");
}

std::string run_mixed(const DensityMatrix& rho, const Tolerances& tol, bool csv) {
  const SphericalDecomp d = spherical_decompose(rho);
  const std::vector<MixedConstellation> spheres = mixed_constellations(d, tol);
  if (csv) {
    std::string s = "k,r,theta,phi,mult,x,y,z\n";
    for (const MixedConstellation& mc : spheres)
      for (const Star& st : mc.constellation.stars) {
        const auto v = star_vec(st);
        s += std::to_string(mc.k) + "," + g12(mc.radius) + "," + g12(st.theta) + "," +
             g12(st.phi) + "," + std::to_string(st.mult) + "," + g12(v[0]) + "," + g12(v[1]) +
             "," + g12(v[2]) + "\n";
      }
    return s;
  }
  std::string s = "{\"j\":" + g17(0.5 * d.two_j) + ",\"spheres\":[";
  for (std::size_t i = 0; i < spheres.size(); ++i) {
    if (i) s += ",";
    const MixedConstellation& mc = spheres[i];
    std::string cj = json_constellation(mc.constellation);
    s += "{\"k\":" + std::to_string(mc.k) + ",\"r\":" + g17(mc.radius) +
         ",\"antipodal_defect\":" + g17(mc.antipodal_defect) + ",\"constellation\":" + cj + "}";
  }
  return s + "]}\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"entanglement invariants and Majorana star constellations of small multiqubit states"};
  app.name("stellar");
  std::string verb, spec, input = "-", format = "json";
  double tol_override = 0.0, cluster_override = 0.0;
  app.add_option("verb", verb,
                 "tangle | acin | symmetrize | stars | invariants4 | invariant5 | mixed-stars | "
                 "fixtures")
      ->required();
  app.add_option("spec", spec, "fixture name for the fixtures verb, e.g. gghz:0.314");
  app.add_option("--input", input, "input JSON path, or - for stdin (default)");
  app.add_option("--format", format, "output format (fixtures always emits JSON)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tol", tol_override, "override the normalization/symmetry gates");
  app.add_option("--cluster-radius", cluster_override, "override the root clustering radius");

  std::vector<const char*> argv;
  argv.push_back("stellar");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  static const char* kVerbs[] = {"tangle",      "acin",       "symmetrize",  "stars",
                                 "invariants4", "invariant5", "mixed-stars", "fixtures"};
  bool known = false;
  for (const char* k : kVerbs) known = known || verb == k;
  if (!known) {
    err << "unknown verb '" << verb << "'\n" << app.help();
    return 2;
  }

  Tolerances tol;
  if (tol_override > 0.0) {
    tol.norm_gate = tol_override;
    tol.symmetry = tol_override;
  }
  if (cluster_override > 0.0) tol.cluster_radius = cluster_override;

  try {
    if (verb == "fixtures") {
      out << run_fixtures(spec);
      return 0;
    }
    std::string text;
    if (input == "-") {
      text = read_stream(in);
    } else {
      std::ifstream file(input);
      if (!file) {
        err << "cannot open input file: " << input << "\n";
        return 2;
      }
      text = read_stream(file);
    }
    const bool csv = format == "csv";
    if (verb == "mixed-stars")
      out << run_mixed(parse_density_json(text), tol, csv);
    else
      out << run_state_verb(verb, parse_state_json(text), tol, csv);
    return 0;
  } catch (const parse_error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

}  // namespace stellar
