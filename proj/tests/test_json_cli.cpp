#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "stellar/cli.hpp"
#include "stellar/invariants_n.hpp"
#include "stellar/json_io.hpp"
#include "stellar/majorana.hpp"
#include "support.hpp"

using namespace stellar;
using nlohmann::json;

namespace {

struct RunResult {
  int rc = -1;
  std::string out, err;
};

RunResult run_cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  RunResult r;
  r.rc = stellar::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

double vec_norm(const json& amps) {
  double n2 = 0.0;
  for (const auto& a : amps) n2 += a[0].get<double>() * a[0].get<double>() + a[1].get<double>() * a[1].get<double>();
  return std::sqrt(n2);
}

}  // namespace

TEST_CASE("fixtures emit normalized states, byte-deterministically") {
  const std::vector<std::string> specs = {"ghz3",     "w3", "gghz:0.6", "gw:0.3,0.5,0.4",
                                          "ghz4",     "l4", "cluster4", "gabcd:1,0,0,0",
                                          "gabcd:1,0,0.5,0,0,0,0.25,0"};
  for (const auto& spec : specs) {
    const auto r1 = run_cli({"fixtures", spec});
    const auto r2 = run_cli({"fixtures", spec});
    INFO("fixture ", spec);
    REQUIRE(r1.rc == 0);
    CHECK(r1.out == r2.out);
    const json j = json::parse(r1.out);
    CHECK(std::abs(vec_norm(j["amps"]) - 1.0) <= 1e-12);
    CHECK((1 << j["n"].get<int>()) == static_cast<int>(j["amps"].size()));
  }
  const auto rd = run_cli({"fixtures", "nghz:3"});
  REQUIRE(rd.rc == 0);
  const json jd = json::parse(rd.out);
  CHECK(jd["dim"] == 4);
  cplx tr{0.0, 0.0};
  for (int a = 0; a < 4; ++a)
    tr += cplx{jd["rho"][a][a][0].get<double>(), jd["rho"][a][a][1].get<double>()};
  CHECK(std::abs(tr - cplx{1.0, 0.0}) <= 1e-15);
}

TEST_CASE("tangle verb dispatches on qubit count") {
  auto pipe = [](const std::string& spec) {
    const auto fx = run_cli({"fixtures", spec});
    REQUIRE(fx.rc == 0);
    const auto r = run_cli({"tangle"}, fx.out);
    REQUIRE(r.rc == 0);
    return json::parse(r.out);
  };

  CHECK(pipe("ghz3")["tau3"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pipe("gghz:0.6")["tau3"].get<double>() ==
        doctest::Approx(std::pow(std::sin(1.2), 2)).epsilon(1e-12));
  CHECK(pipe("w3")["tau3"].get<double>() <= 1e-10);

  const auto j2 = [&] {
    const auto r = run_cli({"tangle"}, json_state(ts::schmidt_pair(0.4)));
    REQUIRE(r.rc == 0);
    return json::parse(r.out);
  }();
  CHECK(j2["n"] == 2);
  CHECK(j2["concurrence"].get<double>() == doctest::Approx(std::sin(0.8)).epsilon(1e-12));

  const json j4 = pipe("l4");
  for (const char* k : {"H", "L", "M"}) {
    CHECK(std::abs(j4[k][0].get<double>()) <= 1e-12);
    CHECK(std::abs(j4[k][1].get<double>()) <= 1e-12);
  }
  CHECK(j4["D"][0].get<double>() == doctest::Approx(1.0 / 108.0).epsilon(1e-10));
  CHECK(std::abs(j4["D"][1].get<double>()) <= 1e-12);

  std::mt19937_64 rng(424242);
  const auto s5 = ts::random_state(rng, 5);
  const auto r5 = run_cli({"tangle"}, json_state(s5));
  REQUIRE(r5.rc == 0);
  const json j5 = json::parse(r5.out);
  const cplx f{j5["F"][0].get<double>(), j5["F"][1].get<double>()};
  CHECK(std::abs(f - inv5_F(s5)) <= 1e-15);
  CHECK(std::abs(f) > 1e-3);
}

TEST_CASE("acin verb reports the canonical five-amplitude form") {
  const auto fx = run_cli({"fixtures", "gw:0.4,0.8,0.4472135954999579"});
  const auto r = run_cli({"acin"}, fx.out);
  REQUIRE(r.rc == 0);
  const json j = json::parse(r.out);
  const double want[5] = {std::sqrt(0.2), 0.0, 0.4, 0.8, 0.0};
  for (int i = 0; i < 5; ++i) CHECK(std::abs(j["lambda"][i].get<double>() - want[i]) <= 1e-12);
  CHECK(j["phi"].get<double>() == 0.0);
  REQUIRE(j["chain"].is_array());
  CHECK(!j["chain"].empty());
  for (const auto& op : j["chain"]) {
    CHECK(op.contains("slot"));
    REQUIRE(op["matrix"].size() == 2);  // two rows of [re, im] pairs
    REQUIRE(op["matrix"][0].size() == 2);
  }
}

TEST_CASE("symmetrize verb reports class, angle, and the mapped state") {
  const auto r = run_cli({"symmetrize"}, run_cli({"fixtures", "ghz3"}).out);
  REQUIRE(r.rc == 0);
  const json j = json::parse(r.out);
  CHECK(j["class"] == "GHZ");
  CHECK(std::abs(j["vartheta"].get<double>() - kPi / 4.0) <= 2e-8);
  CHECK(j["renormalized"] == false);
  CHECK(j["output"]["n"] == 3);
  CHECK(std::abs(j["output"]["amps"][0][0].get<double>() - 1.0 / std::sqrt(2.0)) <= 1e-7);

  const auto rw = run_cli({"symmetrize"}, run_cli({"fixtures", "w3"}).out);
  REQUIRE(rw.rc == 0);
  const json jw = json::parse(rw.out);
  CHECK(jw["class"] == "W");
  const cplx scale{jw["scale"][0].get<double>(), jw["scale"][1].get<double>()};
  CHECK(std::abs(std::abs(scale) - 1.0) <= 1e-12);
}

TEST_CASE("stars verb: symmetric inputs pass through, others are adapted with a note") {
  const auto rw = run_cli({"stars"}, run_cli({"fixtures", "w3"}).out);
  REQUIRE(rw.rc == 0);
  const json jw = json::parse(rw.out);
  CHECK(!jw.contains("note"));
  CHECK(jw["degree"] == 3);
  REQUIRE(jw["stars"].size() == 2);
  CHECK(jw["stars"][0]["theta"].get<double>() <= 1e-12);
  CHECK(jw["stars"][0]["mult"] == 1);
  CHECK(jw["stars"][1]["theta"].get<double>() == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(jw["stars"][1]["mult"] == 2);
  CHECK(run_cli({"stars"}, run_cli({"fixtures", "w3"}).out).out == rw.out);

  // GHZ-class state with one spin flipped: still three distinct stars
  auto g = ts::gghz(0.6);
  std::swap(g.amp[0], g.amp[4]);
  std::swap(g.amp[7], g.amp[3]);
  const auto r3 = run_cli({"stars"}, json_state(g));
  REQUIRE(r3.rc == 0);
  const json j3 = json::parse(r3.out);
  CHECK(j3["note"] == "non-symmetric input symmetrized by a determinant-preserving local chain");
  CHECK(j3["stars"].size() == 3);

  const auto r2 = run_cli({"stars"}, json_state(make_pure(2, {{0, 0}, cplx{0.6, 0}, cplx{0.8, 0}, {0, 0}})));
  REQUIRE(r2.rc == 0);
  const json j2 = json::parse(r2.out);
  CHECK(j2["note"] == "two-qubit input replaced by its Schmidt-diagonal symmetric form");
  CHECK(j2["stars"].size() == 2);

  const auto r4 = run_cli({"stars"}, json_state(basis_state(4, 1)));
  CHECK(r4.rc == 1);
  CHECK(r4.err.find("NotSymmetric") != std::string::npos);
  CHECK(r4.err.find("permutation-symmetric") != std::string::npos);
}

TEST_CASE("mixed-stars verb reads a density and lists multipole spheres") {
  const auto r = run_cli({"mixed-stars"}, run_cli({"fixtures", "nghz:3"}).out);
  REQUIRE(r.rc == 0);
  const json j = json::parse(r.out);
  CHECK(j["j"].get<double>() == 1.5);
  REQUIRE(j["spheres"].size() == 2);
  CHECK(j["spheres"][0]["k"] == 2);
  CHECK(j["spheres"][0]["r"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(j["spheres"][1]["k"] == 3);
  CHECK(j["spheres"][1]["constellation"]["stars"].size() == 6);
  for (const auto& sp : j["spheres"]) CHECK(sp["antipodal_defect"].get<double>() <= 1e-8);

  const auto rc = run_cli({"mixed-stars", "--format", "csv"}, run_cli({"fixtures", "nghz:3"}).out);
  REQUIRE(rc.rc == 0);
  CHECK(rc.out.rfind("k,r,theta,phi,mult,x,y,z\n", 0) == 0);
  CHECK(std::count(rc.out.begin(), rc.out.end(), '\n') == 9);  // header + 2 + 6 stars
}

TEST_CASE("csv format for scalar, form, and star reports") {
  const auto rt = run_cli({"tangle", "--format", "csv"}, run_cli({"fixtures", "ghz3"}).out);
  REQUIRE(rt.rc == 0);
  CHECK(rt.out.rfind("name,value\ntau3,", 0) == 0);
  CHECK(std::stod(rt.out.substr(rt.out.rfind(',') + 1)) == doctest::Approx(1.0).epsilon(1e-11));

  const auto ra = run_cli({"acin", "--format", "csv"}, run_cli({"fixtures", "ghz3"}).out);
  REQUIRE(ra.rc == 0);
  CHECK(ra.out.rfind("name,value\nlambda0,", 0) == 0);
  CHECK(std::count(ra.out.begin(), ra.out.end(), '\n') == 7);  // header + 5 lambdas + phi

  const auto rs = run_cli({"stars", "--format", "csv"}, run_cli({"fixtures", "w3"}).out);
  REQUIRE(rs.rc == 0);
  CHECK(rs.out.rfind("theta,phi,mult,x,y,z\n", 0) == 0);
  CHECK(std::count(rs.out.begin(), rs.out.end(), '\n') == 3);
}

TEST_CASE("tolerance knobs reach the library") {
  cvec a(8, cplx{0.0, 0.0});
  a[0] = a[7] = 0.8;  // norm^2 = 1.28
  const std::string text = json_state(make_pure(3, std::move(a)));
  const auto strict = run_cli({"tangle"}, text);
  CHECK(strict.rc == 1);
  CHECK(strict.err.find("NotNormalized") != std::string::npos);
  const auto loose = run_cli({"tangle", "--tol", "0.5"}, text);
  CHECK(loose.rc == 0);

  // two stars 1e-4 apart: separate by default, one double star when the
  // clustering radius is widened
  const auto near = symmetric_state_from_stars(
      ts::constellation_from({Star{1.0, 0.0, 1}, Star{1.0001, 0.0, 1}}));
  const auto split = run_cli({"stars"}, json_state(near));
  REQUIRE(split.rc == 0);
  CHECK(json::parse(split.out)["stars"].size() == 2);
  const auto merged = run_cli({"stars", "--cluster-radius", "0.01"}, json_state(near));
  REQUIRE(merged.rc == 0);
  const json jm = json::parse(merged.out);
  REQUIRE(jm["stars"].size() == 1);
  CHECK(jm["stars"][0]["mult"] == 2);
}

TEST_CASE("usage errors and exit codes") {
  const auto help = run_cli({"--help"});
  CHECK(help.rc == 0);
  CHECK(help.out.find("stars") != std::string::npos);

  CHECK(run_cli({}).rc == 2);
  const auto unknown = run_cli({"frobnicate"});
  CHECK(unknown.rc == 2);
  CHECK(unknown.err.find("unknown verb") != std::string::npos);

  CHECK(run_cli({"tangle"}, "{ not json").rc == 2);
  CHECK(run_cli({"tangle"}, R"({"n":3,"amps":[[1,0]]})").rc == 2);  // wrong amp count
  CHECK(run_cli({"fixtures", "bogus"}).rc == 2);
  CHECK(run_cli({"fixtures", "gghz:abc"}).rc == 2);
  CHECK(run_cli({"fixtures", "nghz:2.5"}).rc == 2);
  CHECK(run_cli({"fixtures", "gw:0.3"}).rc == 2);  // wrong parameter count
  const auto nofile = run_cli({"tangle", "--input", "/nonexistent/state.json"});
  CHECK(nofile.rc == 2);
  CHECK(nofile.err.find("cannot open") != std::string::npos);
  CHECK(run_cli({"tangle", "--format", "yaml"}).rc == 2);
}
