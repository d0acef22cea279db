#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include <unistd.h>

#include "hh3/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hh3");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = hh3::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream l(line);
    while (std::getline(l, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / ("hh3_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

bool one_error_line(const std::string& err) {
  return err.rfind("error: ", 0) == 0 && err.find('\n') == err.size() - 1;
}

}  // namespace

TEST_CASE("generate spacelike-horizontal") {
  const Run r = run({"generate", "--family", "spacelike-horizontal", "--branch", "+", "--range", "0:1:0.1"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0] == std::vector<std::string>{"s", "x", "y", "z", "T1", "T2", "T3"});
  CHECK(rows[1] == std::vector<std::string>{"0", "0", "0.5", "0", "1", "0", "0"});
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::abs(std::stod(rows[i][6])) <= 1e-12);
  // 17 significant digits.
  CHECK(rows[2][0] == "0.10000000000000001");
}

TEST_CASE("generate error paths") {
  const Run geo = run({"generate", "--family", "timelike", "--nu0", "0"});
  CHECK(geo.code == 2);
  CHECK(one_error_line(geo.err));
  CHECK(geo.err.find("geodesic") != std::string::npos);
  CHECK(run({"generate", "--family", "nope"}).code == 2);
  CHECK(run({"generate"}).code == 2);
  CHECK(run({"generate", "--family", "spacelike"}).code == 2);
  CHECK(run({"generate", "--family", "spacelike", "--alpha0", "x"}).code == 2);
  CHECK(run({"generate", "--family", "spacelike", "--alpha0", "0.5", "--range", "0:1"}).code == 2);
  CHECK(run({"generate", "--family", "spacelike", "--alpha0", "0.5", "--range", "0:1:-0.1"}).code == 2);
  CHECK(run({"generate", "--family", "spacelike", "--alpha0", "0.5", "--range", "1:0:0.1"}).code == 2);
  CHECK(run({"generate", "--family", "spacelike", "--nu0", "0.5"}).code == 2);
  CHECK(run({"generate", "--family", "geodesic", "--as-printed"}).code == 2);
  CHECK(run({"generate", "--family", "spacelike-horizontal", "--format", "xml"}).code == 2);
  const Run unknown = run({"generate", "--bogus"});
  CHECK(unknown.code == 2);
  CHECK(one_error_line(unknown.err));
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("generate frame-defined families by integration") {
  const Run r = run({"generate", "--family", "timelike-horizontal", "--m", "1", "--range", "0:1:0.5"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 4);
  // x' = sinh s, y' = cosh s from the origin: x(1) = cosh 1 - 1, y(1) = sinh 1.
  CHECK(std::stod(rows[3][1]) == doctest::Approx(std::cosh(1.0) - 1).epsilon(1e-10));
  CHECK(std::stod(rows[3][2]) == doctest::Approx(std::sinh(1.0)).epsilon(1e-10));
  const Run shifted =
      run({"generate", "--family", "timelike-horizontal", "--m", "1", "--range", "0:1:0.5", "--start", "1:0:0"});
  CHECK(parse_csv(shifted.out)[1][1] == "1");
  CHECK(run({"generate", "--family", "spacelike-horizontal", "--start", "1:0:0"}).code == 2);
  CHECK(run({"generate", "--family", "b3zero-spacelike", "--range=-1:1:0.25"}).code == 0);
}

TEST_CASE("frenet and residual tables") {
  const Run r = run({"frenet", "--family", "spacelike-horizontal", "--range=-1:1:0.5"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == std::vector<std::string>{"s", "k1", "k2", "eps1", "eps2", "eps3", "N3", "B3", "res_direct",
                                            "res_frenet", "degenerate"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::stod(rows[i][1]) == doctest::Approx(2));
    CHECK(std::stod(rows[i][2]) == doctest::Approx(-1));
    CHECK(std::stod(rows[i][8]) <= 1e-9);
    CHECK(rows[i][10] == "0");
  }

  const Run printed = run({"residual", "--family", "spacelike-horizontal", "--as-printed", "--range=-1:1:0.5"});
  REQUIRE(printed.code == 0);
  const auto prow = parse_csv(printed.out);
  for (std::size_t i = 1; i < prow.size(); ++i) {
    const double s = std::stod(prow[i][0]);
    const double expected = 3 * std::sqrt(std::cosh(s) * std::cosh(s) + std::sinh(s) * std::sinh(s));
    CHECK(std::stod(prow[i][8]) == doctest::Approx(expected).epsilon(1e-12));
  }

  const Run geo = run({"frenet", "--family", "geodesic", "--axis", "3", "--range", "0:1:0.25"});
  REQUIRE(geo.code == 0);
  const auto grows = parse_csv(geo.out);
  REQUIRE(grows.size() == 6);
  for (std::size_t i = 1; i < grows.size(); ++i) {
    CHECK(grows[i].size() == 11);
    CHECK(grows[i][10] == "1");
    CHECK(grows[i][1].empty());
  }

  const Run fd = run({"frenet", "--family", "spacelike", "--alpha0", "0.5", "--fd-step", "1e-4", "--range=-1:1:0.5"});
  REQUIRE(fd.code == 0);
  const auto fd_rows = parse_csv(fd.out);
  for (std::size_t i = 1; i < fd_rows.size(); ++i) CHECK(std::stod(fd_rows[i][8]) <= 1e-6);
  CHECK(run({"frenet", "--family", "timelike-horizontal", "--m", "1", "--fd-step", "1e-4"}).code == 2);
}

TEST_CASE("json tables") {
  const Run r = run({"frenet", "--family", "geodesic", "--range", "0:1:0.5", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["degenerate"] == 1.0);
  CHECK(j[0]["k1"].is_null());
}

TEST_CASE("sampled input") {
  const auto dir = temp_dir();
  const auto path = (dir / "curve.csv").string();
  std::ofstream(path) << "s,x,y,z\n";
  {
    std::ofstream f(path, std::ios::app);
    f.precision(17);
    for (int i = 0; i <= 100; ++i) {
      const double s = -1 + i * 0.02;
      f << s << "," << std::sinh(2 * s) / 2 << "," << std::cosh(2 * s) / 2 << "," << -s << "\n";
    }
  }
  const Run r = run({"frenet", "--input", path});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  CHECK(rows.size() == 102);
  CHECK(std::stod(rows[50][1]) == doctest::Approx(2).epsilon(1e-6));

  CHECK(run({"frenet", "--input", (dir / "missing.csv").string()}).code == 2);
  std::ofstream(dir / "bad.csv") << "a,b\n1,2\n";
  const Run bad = run({"frenet", "--input", (dir / "bad.csv").string()});
  CHECK(bad.code == 2);
  CHECK(one_error_line(bad.err));
  CHECK(run({"frenet", "--input", path, "--family", "geodesic"}).code == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("atomic output files and determinism") {
  const auto dir = temp_dir();
  const auto out = (dir / "a.csv").string();
  const std::vector<std::string> args{"generate", "--family", "spacelike", "--alpha0", "0.5", "--b", "0.3",
                                      "--range=-2:2:0.01", "--output", out};
  REQUIRE(run(args).code == 0);
  std::stringstream first;
  first << std::ifstream(out).rdbuf();
  REQUIRE(run(args).code == 0);
  std::stringstream second;
  second << std::ifstream(out).rdbuf();
  CHECK(first.str() == second.str());
  const std::string text = first.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 402);
  int files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
  CHECK(files == 1);

  const Run io = run({"verify", "--claim", "cross-properties", "--output", (dir / "no" / "such" / "r.json").string()});
  CHECK(io.code == 3);
  CHECK(one_error_line(io.err));
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify") {
  const Run single = run({"verify", "--claim", "cross-properties"});
  REQUIRE(single.code == 0);
  const auto j = nlohmann::json::parse(single.out);
  CHECK(j["checks"].size() == 1);
  CHECK(j["checks"][0]["status"] == "Confirmed");

  const Run tampered = run({"verify", "--tamper-connection", "--claim", "connection-table"});
  CHECK(tampered.code == 1);
  CHECK(tampered.err.find("connection-table") != std::string::npos);

  CHECK(run({"verify", "--claim", "unknown"}).code == 2);

  const Run all = run({"verify"});
  CHECK(all.code == 0);
  CHECK(nlohmann::json::parse(all.out)["checks"].size() == 13);
  CHECK(run({"verify"}).out == all.out);

  const Run csv = run({"verify", "--claim", "horizontal-as-printed", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("claim_id,status,max_residual\nhorizontal-as-printed,Refuted-as-printed,", 0) == 0);
}
