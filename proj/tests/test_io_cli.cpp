#include "kkbounds/cli.hpp"
#include "kkbounds/errors.hpp"
#include "kkbounds/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace kkbounds;
using io::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "kkbounds_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(io::format_number(6.0) == "6");
  CHECK(io::format_number(1 / std::sqrt(5.0)) == "0.4472135955");
  CHECK(io::round12(1.0 / 3) == doctest::Approx(0.333333333333).epsilon(1e-15));
}

TEST_CASE("code JSON round trip") {
  auto code = construct(Construction::icosahedron_half, 3);
  json doc = io::code_to_json(code);
  CHECK(doc["dimension"] == 3);
  CHECK(doc["points"].size() == 6);
  auto back = io::code_from_json(doc);
  CHECK((back.gram() - code.gram()).cwiseAbs().maxCoeff() < 1e-15);

  CHECK_THROWS_AS(io::code_from_json(json{{"dimension", 3}}), FormatError);
  CHECK_THROWS_AS(io::code_from_json(json{{"dimension", 2}, {"points", {{3.0, 4.0}}}}), FormatError);
  auto scaled = io::code_from_json(json{{"dimension", 2}, {"points", {{3.0, 4.0}}}}, SphericalCode::Normalize::yes);
  CHECK(scaled.points()(0, 0) == doctest::Approx(0.6));
}

TEST_CASE("polynomial JSON forms") {
  json mono = {{"monomial", {"1/5", "0", "0", "0", "1"}}};
  Polynomial p = io::polynomial_from_json(mono);
  CHECK(p == Polynomial{Rational(1, 5), 0, 0, 0, 1});
  CHECK(io::monomial_to_json(p) == mono);

  auto ex = io::expansion_from_json(mono, 3);
  CHECK(ex.to_polynomial() == p);
  auto again = io::expansion_from_json(io::expansion_to_json(ex), 3);
  CHECK(again == ex);
  // A Gegenbauer input in another dimension is re-expanded.
  auto other = io::expansion_from_json(io::expansion_to_json(expand(p, 5)), 3);
  CHECK(other == ex);

  CHECK_THROWS_AS(io::polynomial_from_json(json{{"monomial", {"1/0"}}}), FormatError);
  CHECK_THROWS_AS(io::polynomial_from_json(json{{"other", 1}}), FormatError);
}

TEST_CASE("potential specs") {
  auto r = io::parse_potential("riesz:1");
  CHECK(r(0.0) == doctest::Approx(1 / std::sqrt(2.0)));
  auto g = io::parse_potential("gaussian:2");
  CHECK(g(1.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(io::parse_potential("coulomb:1"), FormatError);
  CHECK_THROWS_AS(io::parse_potential("riesz:abc"), FormatError);

  fs::path file = scratch("h.json");
  io::write_json_file(file, json{{"monomial", {"1", "0", "1"}}});
  auto h = io::parse_potential("poly:" + file.filename().string(), file.parent_path());
  CHECK(h.is_polynomial());
  CHECK(h(0.5) == doctest::Approx(1.25));
}

TEST_CASE("certificate round trip and recheck") {
  auto f = universal_bound(3, 2).polynomial;
  json doc = io::certificate_to_json(cardinality_bound(f, 2));
  CHECK(doc["bound_kind"] == "cardinality");
  CHECK(doc["value"] == "6");
  CHECK(io::recheck_certificate(doc));

  auto parsed = io::certificate_from_json(doc);
  CHECK(parsed.certificate.value == 6);
  CHECK(parsed.certificate.expansion == f);

  json tampered = doc;
  tampered["value"] = "7";
  CHECK_FALSE(io::recheck_certificate(tampered));
  tampered = doc;
  tampered["expansion"]["coeffs"][1] = "1";
  CHECK_FALSE(io::recheck_certificate(tampered));

  Potential h = Potential::polynomial(Polynomial{1, 0, 1});
  auto lower = energy_lower_bound(GegenbauerExpansion(3, {Rational(1)}), 1, 4, h);
  json edoc = io::certificate_to_json(lower, &h);
  CHECK(io::recheck_certificate(edoc));
}

TEST_CASE("cli bound") {
  auto r = run_cli({"bound", "--n", "3", "--k", "2"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.rfind("6\n", 0) == 0);
  CHECK(r.out.find("0.4472135955") != std::string::npos);
  CHECK(r.out.find("7 points") != std::string::npos);

  auto j = run_cli({"bound", "--n", "24", "--k", "5", "--json"});
  CHECK(j.code == cli::kOk);
  json doc = json::parse(j.out);
  CHECK(doc["bound"] == "98280");

  CHECK(run_cli({"bound", "--n", "3"}).code == cli::kUsage);
  CHECK(run_cli({"bound", "--n", "1", "--k", "2"}).code == cli::kUsage);
  auto bad = run_cli({"frobnicate"});
  CHECK(bad.code == cli::kUsage);
  CHECK(bad.err.rfind("error: ", 0) == 0);
  CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);
}

TEST_CASE("cli construct, verify and energy") {
  fs::path file = scratch("ico.json");
  auto c = run_cli({"construct", "--name", "icosahedron_half", "--n", "3", "--out", file.string()});
  REQUIRE(c.code == cli::kOk);
  auto v = run_cli({"verify", "--code", file.string(), "--k", "2"});
  CHECK(v.code == cli::kOk);
  CHECK(json::parse(v.out)["verdicts"][0]["holds"] == true);
  CHECK(run_cli({"verify", "--code", file.string(), "--k", "3"}).code == cli::kNegative);

  fs::path single = scratch("single.json");
  io::write_json_file(single, json{{"dimension", 3}, {"points", {{1.0, 0.0, 0.0}}}});
  CHECK(run_cli({"verify", "--code", single.string(), "--k", "1"}).code == cli::kNegative);

  auto e = run_cli({"energy", "--code", file.string(), "--potential", "gaussian:1"});
  CHECK(e.code == cli::kOk);

  fs::path dup = scratch("dup.json");
  io::write_json_file(dup, json{{"dimension", 2}, {"points", {{1.0, 0.0}, {1.0, 0.0}}}});
  auto inf = run_cli({"energy", "--code", dup.string(), "--potential", "riesz:1"});
  CHECK(inf.code == cli::kNegative);
  CHECK(inf.out == "inf\n");

  CHECK(run_cli({"verify", "--code", scratch("missing.json").string(), "--k", "1"}).code == cli::kUsage);
  CHECK(run_cli({"construct", "--name", "dodecahedron", "--n", "3", "--out", file.string()}).code == cli::kUsage);
}

TEST_CASE("cli certify") {
  fs::path good = scratch("good.json");
  io::write_json_file(good, io::expansion_to_json(universal_bound(3, 2).polynomial));
  auto ok = run_cli({"certify", "--poly", good.string(), "--n", "3", "--k", "2"});
  CHECK(ok.code == cli::kOk);
  CHECK(io::recheck_certificate(json::parse(ok.out)));

  fs::path bad = scratch("bad.json");
  io::write_json_file(bad, json{{"monomial", {"0", "1"}}});
  auto no = run_cli({"certify", "--poly", bad.string(), "--n", "3", "--k", "2"});
  CHECK(no.code == cli::kNegative);
  CHECK(json::parse(no.out)["error"] == "cone_violation");

  CHECK(run_cli({"certify", "--poly", good.string(), "--n", "3", "--k", "2", "--energy"}).code == cli::kUsage);
}

TEST_CASE("cli optimality and search") {
  auto o = run_cli({"optimality", "--n", "3", "--k", "2"});
  CHECK(o.code == cli::kOk);
  CHECK(o.out.rfind("j,Q_j,classification\n", 0) == 0);
  CHECK(o.out.find("# no improvement possible with degree <= 4") != std::string::npos);

  auto s = run_cli({"search", "--n", "3", "--k", "2", "--degree", "4"});
  CHECK(s.code == cli::kOk);
  json doc = json::parse(s.out);
  CHECK(doc["search"]["certified"] == true);
  CHECK(io::recheck_certificate(doc));
}

TEST_CASE("cli output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"bound", "--n", "8", "--k", "3", "--json"},
           {"optimality", "--n", "5", "--k", "2"},
           {"search", "--n", "4", "--k", "2", "--degree", "6"}}) {
    CHECK(run_cli(args).out == run_cli(args).out);
  }
}
