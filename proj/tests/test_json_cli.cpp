#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "entrec/cli.hpp"
#include "entrec/json_io.hpp"
#include "support/generators.hpp"

using namespace entrec;
using testgen::Rng;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    static std::mt19937_64 suffix(std::random_device{}());
    path = std::filesystem::temp_directory_path() /
           ("entrec_test_" + std::to_string(suffix()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }

  std::string write(const std::string& name, const Json& content) {
    std::filesystem::path file = path / name;
    std::ofstream out(file);
    out << content.dump();
    return file.string();
  }
};

struct CliResult {
  int code;
  Json out;
  std::string raw_out;
  std::string raw_err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  CliResult result{code, Json(), out.str(), err.str()};
  result.out = Json::parse(result.raw_out, nullptr, false);  // discarded for non-JSON
  return result;
}

Json state_json(const std::vector<std::string>& coeffs, bool normalized = true) {
  return Json{{"dim", coeffs.size()}, {"coefficients", coeffs}, {"normalized", normalized}};
}

}  // namespace

TEST_CASE("state JSON round trip") {
  Rng rng(701);
  for (int trial = 0; trial < 60; ++trial) {
    SchmidtVector v = testgen::rand_state(rng, testgen::rand_int(rng, 1, 6), true);
    CHECK(state_from_json(state_to_json(v)) == v);
  }
}

TEST_CASE("state JSON validation") {
  CHECK(state_from_json(state_json({"0.3", "0.7"})) ==
        SchmidtVector::parse({"7/10", "3/10"}, 2));
  CHECK_THROWS_AS(state_from_json(Json{{"dim", 2}, {"coefficients", {0.33, 0.67}}}), Error);
  CHECK_THROWS_AS(state_from_json(Json{{"coefficients", {"1"}}}), Error);
  CHECK_THROWS_AS(state_from_json(state_json({"0.3", "0.6"})), Error);
  CHECK_NOTHROW(state_from_json(state_json({"0.3", "0.6"}, false)));
  // Integer coefficients are exact and allowed.
  CHECK(state_from_json(Json{{"dim", 1}, {"coefficients", {1}}}) ==
        SchmidtVector({Rational(1)}));
}

TEST_CASE("cli majorize and indices") {
  TempDir dir;
  std::string x = dir.write("x.json", state_json({"0.5", "0.3", "0.2"}));
  std::string y = dir.write("y.json", state_json({"0.6", "0.3", "0.1"}));

  CliResult maj = run({"majorize", x, y});
  CHECK(maj.code == 0);
  CHECK(maj.out["majorized"] == true);
  CHECK(maj.out["strict"] == true);

  CliResult same = run({"majorize", x, x});
  CHECK(same.code == 0);
  CHECK(same.out["majorized"] == true);
  CHECK(same.out["strict"] == false);
  CHECK(same.out["delta"] == Json({1, 2}));

  CliResult ind = run({"indices", dir.write("chi.json", state_json({"0.5", "0.25", "0.25"}))});
  CHECK(ind.code == 0);
  CHECK(ind.out["l_u"] == "1/2");
  CHECK(ind.out["L_u"] == "1/2");
  CHECK(ind.out["g_u"] == "1/2");
  CHECK(ind.out["compact"]["values"][0] == "1/2");
  CHECK(ind.out["compact"]["multiplicities"][1] == 2);
  CHECK(ind.out.contains("entropy"));
}

TEST_CASE("cli recover routes and verdicts") {
  TempDir dir;
  std::string psi = dir.write("psi.json", state_json({"0.33", "0.32", "0.3", "0.05"}));
  std::string phi = dir.write("phi.json", state_json({"0.46", "0.46", "0.08", "0"}));
  std::string chi = dir.write("chi.json", state_json({"0.6", "0.3", "0.1", "0"}));

  // The pair is strictly majorized, so auto takes the strict decision.
  CliResult autod = run({"recover", psi, phi, chi, "--method", "auto"});
  CHECK(autod.code == 0);
  CHECK(autod.out["method"] == "strict");
  CHECK(autod.out["feasible"] == true);
  CHECK(autod.out["witness"]["epsilon"].is_string());

  CliResult sweep = run({"recover", psi, phi, chi, "--method", "algorithm2"});
  CHECK(sweep.code == 0);
  CHECK(sweep.out["feasible"] == true);
  CHECK(sweep.out["witness"]["omega"].is_array());
  CHECK(sweep.out["entropy_gain"].is_number());

  // Emitted witness state re-parses to the same exact vector.
  Json omega_state = Json{{"dim", sweep.out["witness"]["omega"].size()},
                          {"coefficients", sweep.out["witness"]["omega"]},
                          {"normalized", false}};
  SchmidtVector omega = state_from_json(omega_state);
  std::vector<std::string> round;
  for (const Rational& c : omega.coefficients()) round.push_back(c.str());
  CHECK(sweep.out["witness"]["omega"] == Json(round));

  CliResult grid = run({"recover", psi, phi, chi, "--method", "oracle", "--grid-depth", "12"});
  CHECK(grid.code == 0);
  CHECK(grid.out["feasible"] == true);

  CliResult infeasible =
      run({"recover", dir.write("p2.json", state_json({"7/20", "7/20", "3/10"})),
           dir.write("f2.json", state_json({"3/8", "3/8", "1/4"})),
           dir.write("c2.json", state_json({"3/5", "2/5"})), "--method", "auto"});
  CHECK(infeasible.code == 0);
  CHECK(infeasible.out["feasible"] == false);
  CHECK(infeasible.out["witness"].is_null());
}

TEST_CASE("cli recover general is three-valued") {
  TempDir dir;
  std::string psi = dir.write("psi.json", state_json({"2/5", "29/100", "1/5", "11/100"}));
  std::string phi = dir.write("phi.json", state_json({"2/5", "3/10", "1/5", "1/10"}));

  // Construct a suitable auxiliary first, then feed it back through recover.
  CliResult built = run({"construct-aux", psi, phi});
  CHECK(built.code == 0);
  CHECK(built.out["scheme"] == "delta1");
  TempDir dir2;
  std::string chi = dir2.write("chi.json", built.out["chi"]);

  CliResult ok = run({"recover", psi, phi, chi, "--method", "general"});
  CHECK(ok.code == 0);
  CHECK(ok.out["feasible"] == true);
  CHECK(ok.out["witness"]["omega"].is_array());

  // An auxiliary failing the sufficient conditions is inconclusive, not
  // infeasible.
  std::string flat = dir.write("flat.json", state_json({"2/5", "3/10", "3/10"}));
  CliResult maybe = run({"recover", psi, phi, flat, "--method", "general"});
  CHECK(maybe.code == 0);
  CHECK(maybe.out["feasible"].is_null());
  CHECK(maybe.out["outcome"] == "inconclusive");
}

TEST_CASE("cli batch mode") {
  TempDir dir;
  Json instance = {{"psi", state_json({"11/20", "9/20"})},
                   {"phi", state_json({"7/10", "3/10"})},
                   {"chi", state_json({"3/5", "2/5"})}};
  Json bad = {{"psi", state_json({"11/20", "8/20"}, false)},
              {"phi", state_json({"7/10", "3/10"})},
              {"chi", state_json({"3/5", "2/5"})}};
  std::string batch = dir.write("batch.json", Json::array({instance, bad}));

  CliResult result = run({"recover", "--batch", batch});
  CHECK(result.code == 2);  // second instance has mismatched totals
  REQUIRE(result.out.is_array());
  CHECK(result.out[0]["feasible"] == true);
  CHECK(result.out[1].contains("error"));
  CHECK(result.out[1]["error"]["kind"] == "sum_mismatch");
}

TEST_CASE("cli exit codes") {
  TempDir dir;
  CliResult missing = run({"indices", (dir.path / "absent.json").string()});
  CHECK(missing.code == 2);
  CHECK(!missing.raw_err.empty());

  std::string unnormalized = dir.write("u.json", state_json({"0.5", "0.4"}));
  CHECK(run({"indices", unnormalized}).code == 2);

  std::string fine = dir.write("f.json", state_json({"0.5", "0.4"}, false));
  CHECK(run({"indices", fine}).code == 0);

  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"selftest"}).code == 0);
}

TEST_CASE("cli applications commands") {
  TempDir dir;
  CliResult bounds = run({"concentrate", "--a", "3/5", "--b", "4/5", "--k", "2"});
  CHECK(bounds.code == 0);
  CHECK(bounds.out["gamma_max"] == "2/3");
  CHECK(bounds.out["feasible"] == true);

  CliResult verify = run({"concentrate", dir.write("p.json", state_json({"3/5", "2/5"})),
                          dir.write("f.json", state_json({"4/5", "1/5"})),
                          dir.write("c.json", state_json({"2/3", "1/3"})), "--k", "2"});
  CHECK(verify.code == 0);
  CHECK(verify.out["feasible"] == true);

  CliResult mutual = run({"mutual-catalysis",
                          dir.write("m1.json", state_json({"0.33", "0.32", "0.3", "0.05"})),
                          dir.write("m2.json", state_json({"0.6", "0.2", "0.14", "0.06"})),
                          dir.write("m3.json", state_json({"0.6", "0.3", "0.1", "0"})),
                          dir.write("m4.json", state_json({"0.46", "0.46", "0.08", "0"}))});
  CHECK(mutual.code == 0);
  CHECK(mutual.out["is_mutual_catalysis"] == true);

  CliResult k0 = run({"multicopy-k0", dir.write("k1.json", state_json({"2/3", "1/3"})),
                      dir.write("k2.json", state_json({"5/9", "4/9"}))});
  CHECK(k0.code == 0);
  CHECK(k0.out["k0"] == 4);

  CliResult multi = run({"multicopy-recover",
                         dir.write("q1.json", state_json({"0.55", "0.45"})),
                         dir.write("q2.json", state_json({"0.7", "0.3"})),
                         dir.write("q3.json", state_json({"0.6", "0.4"})), "--copies", "2"});
  CHECK(multi.code == 0);
  CHECK(multi.out["copies"] == 2);
  CHECK(multi.out.contains("case"));

  // Two auxiliary copies flip the two-valued critical target to feasible.
  std::string psi6 = dir.write(
      "m5.json", state_json({"71/384", "71/384", "71/384", "71/384", "25/192", "25/192"}));
  std::string phi6 = dir.write("m6.json",
                               state_json({"3/16", "3/16", "3/16", "3/16", "1/8", "1/8"}));
  std::string chi6 = dir.write("m7.json", state_json({"3/5", "2/5"}));
  CliResult aux1 = run({"multicopy-recover", psi6, phi6, chi6, "--copies", "1", "--mode", "aux"});
  CHECK(aux1.code == 0);
  CHECK(aux1.out["feasible"] == false);
  CliResult aux2 = run({"multicopy-recover", psi6, phi6, chi6, "--copies", "2", "--mode", "aux"});
  CHECK(aux2.code == 0);
  CHECK(aux2.out["feasible"] == true);
  CHECK(aux2.out["case"] == "critical_pattern");

  CliResult ent = run({"entropy", chi6});
  CHECK(ent.code == 0);
  CHECK(std::abs(ent.out["entropy"].get<double>() - 0.97095) < 1e-4);

  CliResult forced = run({"construct-aux",
                          dir.write("f5.json", state_json({"2/5", "29/100", "21/100", "1/10"})),
                          dir.write("f6.json", state_json({"2/5", "3/10", "1/5", "1/10"})),
                          "--scheme", "delta1n1"});
  CHECK(forced.code == 0);
  CHECK(forced.out["scheme"] == "delta1n1");
  CHECK(forced.out["chi"]["dim"] == 4);
}
