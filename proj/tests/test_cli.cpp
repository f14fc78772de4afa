#include <doctest.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <nlohmann/json.hpp>
#include <sstream>

#include "rfun/analysis.hpp"
#include "rfun/cli.hpp"
#include "rfun/io.hpp"
#include "rfun/rfunc.hpp"

using namespace rfun;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  REQUIRE(res.ec == std::errc());
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / name; }

}  // namespace

TEST_CASE("eval") {
  auto r = run({"eval", "--m", "5", "--lambda", "5", "--which", "R"});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out == "2.32192809488736\n");

  r = run({"eval", "--m", "5", "--lambda", "4", "--which", "R2", "--log", "natural"});
  CHECK(r.code == cli::exit_ok);
  CHECK(parse_double(r.out) == doctest::Approx(-0.0047926867470684407859).epsilon(1e-13));

  r = run({"eval", "--m", "5", "--lambda", "0.5", "--which", "R"});
  CHECK(r.code == cli::exit_usage);
  CHECK(r.err.find("lambda below domain [1, m]") != std::string::npos);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);

  r = run({"eval", "--m", "4", "--lambda", "4", "--which", "g"});
  CHECK(r.code == cli::exit_ok);
  r = run({"eval", "--m", "4", "--lambda", "1", "--which", "g"});
  CHECK(r.code == cli::exit_usage);
  r = run({"eval", "--m", "4", "--lambda", "2", "--which", "bogus"});
  CHECK(r.code == cli::exit_usage);
  r = run({"eval", "--m", "1", "--lambda", "1", "--which", "R"});
  CHECK(r.code == cli::exit_usage);

  for (const char* which : {"R1", "gamma", "f", "hull"}) {
    CHECK(run({"eval", "--m", "6", "--lambda", "3.5", "--which", which}).code == cli::exit_ok);
  }
}

TEST_CASE("log base from the environment") {
  ::setenv("RFUN_LOG_BASE", "natural", 1);
  auto r = run({"eval", "--m", "5", "--lambda", "5", "--which", "R"});
  CHECK(parse_double(r.out) == doctest::Approx(std::log(5.0)).epsilon(1e-14));
  r = run({"eval", "--m", "5", "--lambda", "5", "--which", "R", "--log", "two"});
  CHECK(parse_double(r.out) == doctest::Approx(std::log2(5.0)).epsilon(1e-14));
  ::setenv("RFUN_LOG_BASE", "ten", 1);
  CHECK(run({"eval", "--m", "5", "--lambda", "5", "--which", "R"}).code == cli::exit_usage);
  ::unsetenv("RFUN_LOG_BASE");
}

TEST_CASE("certify") {
  auto r = run({"certify", "--m", "5..64"});
  CHECK(r.code == cli::exit_ok);
  const auto docs = nlohmann::json::parse(r.out);
  REQUIRE(docs.is_array());
  CHECK(docs.size() == 60);
  for (const auto& doc : docs) {
    CHECK(doc["overall"] == true);
    CHECK(doc.contains("m"));
    for (const auto& c : doc["checks"]) {
      CHECK(c.contains("name"));
      CHECK(c.contains("claim"));
      CHECK(c["measured"].is_number());
      CHECK(c["threshold"].is_number());
      CHECK(c["pass"].is_boolean());
    }
  }

  r = run({"certify", "--m", "2"});
  CHECK(r.code == cli::exit_ok);
  const auto two = nlohmann::json::parse(r.out);
  CHECK(two["m"] == 2);
  bool noted = false;
  for (const auto& c : two["checks"]) {
    if (c["name"] == "inflection_point") {
      noted = c["claim"].get<std::string>().find("no inflection") != std::string::npos;
    }
  }
  CHECK(noted);

  CHECK(run({"certify", "--m", "1"}).code == cli::exit_usage);
  CHECK(run({"certify", "--m", "7..5"}).code == cli::exit_usage);
  CHECK(run({"certify", "--m", "abc"}).code == cli::exit_usage);
  CHECK(run({"certify", "--m", "5", "--grid", "100"}).code == cli::exit_usage);

  // Deterministic output.
  CHECK(run({"certify", "--m", "3..6"}).out == run({"certify", "--m", "3..6"}).out);
}

TEST_CASE("table") {
  auto r = run({"table", "--m", "4", "--grid", "1000"});
  REQUIRE(r.code == cli::exit_ok);
  CHECK(r.out.find('\r') == std::string::npos);
  const auto lines = split(r.out, '\n');
  REQUIRE(lines.size() == 1001);
  CHECK(lines[0] == "lambda,R,R_second,hull");

  const Dimension dim(4);
  const ConvexEnvelope env(dim);
  int sign_changes = 0;
  double prev = 0.0;
  double worst = 0.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cols = split(lines[i], ',');
    REQUIRE(cols.size() == 4);
    const double l = parse_double(cols[0]);
    const RPoint p(dim, l);
    const double want[] = {r_value(p), r_second(p) * std::numbers::log2e, env.value(l)};
    for (int k = 0; k < 3; ++k) {
      const double got = parse_double(cols[static_cast<std::size_t>(k) + 1]);
      worst = std::max(worst, std::abs(got - want[k]) / std::max(std::abs(want[k]), 1e-300));
    }
    const double r2 = parse_double(cols[2]);
    if (i > 1 && (r2 > 0) != (prev > 0)) ++sign_changes;
    prev = r2;
  }
  CHECK(worst <= 1e-15);
  CHECK(sign_changes == 1);
  CHECK(parse_double(split(lines[1], ',')[1]) < 1e-10);

  r = run({"table", "--m", "2", "--grid", "500"});
  REQUIRE(r.code == cli::exit_ok);
  const auto rows = split(r.out, '\n');
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto cols = split(rows[i], ',');
    CHECK(std::abs(parse_double(cols[1]) - parse_double(cols[3])) <= 1e-12);
  }

  r = run({"table", "--m", "3", "--grid", "20", "--format", "json"});
  CHECK(r.code == cli::exit_ok);
  CHECK(nlohmann::json::parse(r.out).size() == 20);

  const auto path = temp_file("rfun_table_test.csv");
  CHECK(run({"table", "--m", "3", "--grid", "50", "--output", path.string()}).code == cli::exit_ok);
  CHECK(fs::file_size(path) > 0);
  fs::remove(path);

  CHECK(run({"table", "--m", "3", "--output", "/nonexistent-dir/x.csv"}).code == cli::exit_io);
  CHECK(run({"table", "--m", "3", "--grid", "5"}).code == cli::exit_usage);
  CHECK(run({"table", "--m", "3", "--format", "xml"}).code == cli::exit_usage);
}

TEST_CASE("eof") {
  auto r = run({"eof", "isotropic", "--d", "2", "--F", "1"});
  CHECK(r.code == cli::exit_ok);
  CHECK(parse_double(r.out) == doctest::Approx(1.0).epsilon(1e-14));
  r = run({"eof", "isotropic", "--d", "3", "--F", "0.2"});
  CHECK(r.out == "0\n");
  CHECK(run({"eof", "isotropic", "--d", "3", "--F", "1.5"}).code == cli::exit_usage);
  CHECK(run({"eof"}).code == cli::exit_usage);

  const auto bell = temp_file("rfun_bell33.json");
  std::ofstream(bell) << state_to_json(maximally_entangled_state(3), 3, 3).dump();
  r = run({"eof", "bound", "--state", bell.string()});
  CHECK(r.code == cli::exit_ok);
  CHECK(parse_double(r.out) == doctest::Approx(std::log2(3.0)).epsilon(1e-10));
  fs::remove(bell);

  const auto bad = temp_file("rfun_bad_state.json");
  ComplexMatrix half = ComplexMatrix::Identity(4, 4) / 8.0;
  std::ofstream(bad) << state_to_json(half, 2, 2).dump();
  r = run({"eof", "bound", "--state", bad.string()});
  CHECK(r.code == cli::exit_usage);
  CHECK(r.err.find("trace not 1") != std::string::npos);
  std::ofstream(bad) << R"({"dims": [2, 2], "matrix": [[[1, 0]], [[0, 0], [0, 0]]]})";
  r = run({"eof", "bound", "--state", bad.string()});
  CHECK(r.code == cli::exit_usage);
  CHECK(r.err.find("ragged") != std::string::npos);
  fs::remove(bad);

  CHECK(run({"eof", "bound", "--state", "/nonexistent/state.json"}).code == cli::exit_io);
}

TEST_CASE("usage") {
  CHECK(run({}).code == cli::exit_usage);
  CHECK(run({"frobnicate"}).code == cli::exit_usage);
  CHECK(run({"--help"}).code == cli::exit_ok);
  CHECK(run({"eval", "--m", "3", "--lambda", "2", "--which", "R", "--tol", "0"}).code ==
        cli::exit_usage);
}

TEST_CASE("range parsing") {
  CHECK(cli::parse_m_range("5") == std::vector<int>{5});
  CHECK(cli::parse_m_range("3..5") == std::vector<int>{3, 4, 5});
  CHECK_THROWS(cli::parse_m_range("1..3"));
  CHECK_THROWS(cli::parse_m_range("3.."));
}

TEST_CASE("number formatting") {
  CHECK(cli::format_significant(std::log2(5.0)) == "2.32192809488736");
  CHECK(cli::format_significant(1.0) == "1");
  for (double v : {0.1, 1.0 / 3.0, -0.0047926867470684407, 1e-300, 123456789.123456789}) {
    CHECK(parse_double(cli::format_roundtrip(v)) == v);
  }
}
