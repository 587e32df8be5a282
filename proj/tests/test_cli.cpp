// End-to-end tests of the command line tool: each case drives the installed
// binary through std::system into a scratch directory and inspects files,
// stdout, and exit codes.

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "zygmund/io.hpp"
#include "zygmund/signal.hpp"

using namespace zygmund;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "zygmund_cli_test" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

RunResult run(const std::string& args, const fs::path& dir) {
  const fs::path log = dir / "stdout.txt";
  const std::string cmd =
      std::string(TOOL_PATH) + " " + args + " > " + log.string() + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream is(log);
  std::ostringstream os;
  os << is.rdbuf();
  r.out = os.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("generate writes a staircase with its ground truth sidecar") {
  const fs::path dir = fresh_dir("gen_cantor");
  const auto r = run("--out " + dir.string() +
                         " generate cantor --pieces 2 --ratio 0.3333333 --depth 12 -n 4096",
                     dir);
  CHECK(r.code == 0);
  GroundTruth truth;
  Signal f = io::signal_from_csv(io::read_file(dir / "cantor.csv"), &truth);
  CHECK(f.size() == 4096);
  REQUIRE(truth.exponent.has_value());
  CHECK(*truth.exponent == doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(1e-5));
  const auto sidecar = nlohmann::json::parse(slurp(dir / "cantor.truth.json"));
  CHECK(sidecar.at("exponent").get<double>() ==
        doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(1e-5));
}

TEST_CASE("generate emits json signals on request") {
  const fs::path dir = fresh_dir("gen_poly");
  const auto r = run("--out " + dir.string() + " --format json generate polynomial "
                     "--coeffs 0,0,1 -n 257 --x-lo -2 --x-hi 2",
                     dir);
  CHECK(r.code == 0);
  Signal f = io::signal_from_json(io::read_file(dir / "polynomial.json"));
  CHECK(f.eval(1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f.eval(-1.5) == doctest::Approx(2.25).epsilon(1e-12));
}

TEST_CASE("generate refuses a signal format it cannot round trip") {
  const fs::path dir = fresh_dir("gen_ndjson");
  const auto r = run("--out " + dir.string() + " --format ndjson generate heaviside -n 64",
                     dir);
  CHECK(r.code != 0);
}

TEST_CASE("identical seeds reproduce byte-identical signal files") {
  const fs::path a = fresh_dir("brownian_a");
  const fs::path b = fresh_dir("brownian_b");
  const fs::path c = fresh_dir("brownian_c");
  CHECK(run("--out " + a.string() + " --seed 7 generate brownian -n 2048", a).code == 0);
  CHECK(run("--out " + b.string() + " --seed 7 generate brownian -n 2048", b).code == 0);
  CHECK(run("--out " + c.string() + " --seed 8 generate brownian -n 2048", c).code == 0);
  const std::string bytes_a = slurp(a / "brownian.csv");
  CHECK(bytes_a == slurp(b / "brownian.csv"));
  CHECK(bytes_a != slurp(c / "brownian.csv"));
}

TEST_CASE("transform writes a parseable scale field in ndjson") {
  const fs::path dir = fresh_dir("transform");
  const auto r = run("--out " + dir.string() + " --format ndjson transform --signal cantor "
                     "--depth 10 -n 2048 --r-max 0.2 --per-octave 2 --stride 64",
                     dir);
  CHECK(r.code == 0);
  ScaleField field = io::scale_field_from_ndjson(io::read_file(dir / "field.ndjson"));
  REQUIRE(field.n_scales() >= 2);
  CHECK(field.scales.front() > field.scales.back());
  CHECK(field.n_positions() == field.rows.front().size());
  double peak = 0.0;
  for (double s : field.sup_per_scale) peak = std::max(peak, s);
  CHECK(peak > 0.0);
}

TEST_CASE("estimate prints the fit summary and writes report plus curve") {
  const fs::path dir = fresh_dir("estimate");
  const auto r = run("--out " + dir.string() + " --manifest estimate --signal cantor "
                     "--depth 14 -n 16384",
                     dir);
  CHECK(r.code == 0);
  double s_hat = 0.0, se = 0.0, lo = 0.0, hi = 0.0;
  REQUIRE(std::sscanf(r.out.c_str(), "s_hat=%lf stderr=%lf window=[%lf,%lf]", &s_hat, &se,
                      &lo, &hi) == 4);
  CHECK(s_hat == doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(0.2));
  CHECK(lo < hi);
  const auto report = nlohmann::json::parse(slurp(dir / "report.json"));
  CHECK(report.at("outcome") == "fit");
  CHECK(report.at("fitted_s").get<double>() == doctest::Approx(s_hat));
  const std::string curve = slurp(dir / "scales.csv");
  CHECK(curve.find("# method=wavelet_sup") == 0);
  CHECK(curve.find("scale,sup") != std::string::npos);
  const auto manifest = nlohmann::json::parse(slurp(dir / "manifest.json"));
  CHECK(manifest.at("subcommand") == "estimate");
  CHECK(manifest.at("parameters").at("preset") == "cantor");
}

TEST_CASE("identical estimate configs produce byte-identical outputs") {
  const fs::path a = fresh_dir("det_a");
  const fs::path b = fresh_dir("det_b");
  const std::string args = " --manifest estimate --signal cantor --depth 10 -n 2048";
  CHECK(run("--out " + a.string() + args, a).code == 0);
  const std::string manifest_first = slurp(a / "manifest.json");
  CHECK(run("--out " + a.string() + args, a).code == 0);  // rerun in place
  CHECK(slurp(a / "manifest.json") == manifest_first);
  CHECK(run("--out " + b.string() + args, b).code == 0);
  CHECK(slurp(a / "report.json") == slurp(b / "report.json"));
  CHECK(slurp(a / "scales.csv") == slurp(b / "scales.csv"));
}

TEST_CASE("verify identities passes on a band-limited signal") {
  const fs::path dir = fresh_dir("verify_identities");
  const auto r = run("--out " + dir.string() + " verify identities --signal bandlimited "
                     "-n 4097 --gamma 32 --quad-nodes 300",
                     dir);
  CHECK(r.code == 0);
  CHECK(r.out.find("reconstruction_identity") != std::string::npos);
  CHECK(r.out.find("derivative_identity_alpha1") != std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify calderon defaults to the band-limited preset and passes") {
  const fs::path dir = fresh_dir("verify_calderon");
  const auto r = run("--out " + dir.string() + " verify calderon -n 4097", dir);
  CHECK(r.code == 0);
  CHECK(r.out.find("calderon_reconstruction") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify moments passes every kernel construction") {
  const fs::path dir = fresh_dir("verify_moments");
  const auto r = run("--out " + dir.string() + " verify moments", dir);
  CHECK(r.code == 0);
  CHECK(r.out.find("mollifier_mass") != std::string::npos);
  CHECK(r.out.find("wavelet_order") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify admissible separates admissible from inadmissible scalings") {
  const fs::path dir = fresh_dir("verify_adm");
  const auto good = run("--out " + dir.string() + " verify admissible --scaling log", dir);
  CHECK(good.code == 0);
  CHECK(good.out.find("PASS") != std::string::npos);
  const auto bad = run("--out " + dir.string() + " verify admissible --scaling pow:2", dir);
  CHECK(bad.code != 0);
  CHECK(bad.out.find("scaling_admissible") != std::string::npos);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("tolerance overrides change verify thresholds") {
  const fs::path dir = fresh_dir("verify_override");
  io::write_file(dir / "tol.json", "{\"scaling_admissible\": 10.0}\n");
  const auto r = run("--out " + dir.string() + " --tolerance-overrides " +
                         (dir / "tol.json").string() + " verify admissible --scaling pow:2",
                     dir);
  CHECK(r.code == 0);
}

TEST_CASE("unknown suites and presets exit nonzero") {
  const fs::path dir = fresh_dir("unknown");
  CHECK(run("--out " + dir.string() + " verify nosuchsuite", dir).code != 0);
  CHECK(run("--out " + dir.string() + " generate nosuchpreset", dir).code != 0);
  CHECK(run("--out " + dir.string() + " estimate --signal cantor --method nosuchmethod",
            dir)
            .code != 0);
}
