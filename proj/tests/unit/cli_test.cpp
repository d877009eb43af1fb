#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "trigimpl/cli/cli.hpp"
#include "trigimpl/trig/support_file.hpp"

using namespace trigimpl;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("trigimpl_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string file(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

bool contains(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

}  // namespace

TEST(Cli, CurveTextAndExitCodes) {
  auto r = run({"curve", "--input", file("circle.txt", "a0 = 1\n")});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(contains(r.out, "polynomial: x^2 + y^2 - 1"));
  EXPECT_TRUE(contains(r.out, "seed: 1"));

  r = run({"curve", "--input", file("empty.txt", "# nothing\n")});
  EXPECT_EQ(r.code, cli::kDegenerate);
  EXPECT_TRUE(contains(r.err, "empty support function"));

  r = run({"curve", "--input", file("bad.txt", "a0 = 1\ncos 2 = x\n")});
  EXPECT_EQ(r.code, cli::kParseError);
  EXPECT_TRUE(contains(r.err, "line 2"));

  EXPECT_EQ(run({"curve", "--input", (scratch() / "missing.txt").string()}).code, cli::kParseError);
  EXPECT_EQ(run({"curve", "--format", "svg"}).code, cli::kParseError);
  EXPECT_EQ(run({}).code, cli::kParseError);
}

TEST(Cli, RabinowitzReportJson) {
  const auto r = run({"curve", "--format", "json", "--seed", "7", "--input", file("rab.txt", "a0 = 1/2\ncos 3 = 1/16\n")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["total_degree"], 8);
  EXPECT_EQ(j["tracing_index"], 1);
  EXPECT_EQ(j["classification"]["kind"], "constant_width");
  EXPECT_EQ(j["seed"], 7);
}

TEST(Cli, ImplicitReportRoundTrips) {
  for (const char* text : {"a0 = 1/2\ncos 3 = 1/16\n", "a0 = 1/2\ncos 2 = 1/6\n", "cos 3 = 1\nsin 5 = -2/7\n", "a0 = 2\ncos 1 = 1\n"}) {
    const ImplicitReport r = implicitize(parse_support(text));
    const auto j = cli::implicit_json(r, 3);
    EXPECT_EQ(cli::implicit_json(cli::implicit_from_json(nlohmann::ordered_json::parse(j.dump())), 3), j) << text;
  }
}

TEST(Cli, DegreeReportRoundTrips) {
  const DegreeReport r = sendra_degrees(revolution_surface(TrigPoly::cosine(2)), {5});
  const auto j = cli::degree_json(r, "cos2");
  EXPECT_EQ(cli::degree_json(cli::degree_from_json(nlohmann::ordered_json::parse(j.dump())), "cos2"), j);
}

TEST(Cli, CheckExamples) {
  auto r = run({"check", "--input", file("c3.txt", "cos 3 = 1\n")});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(contains(r.out, "odd_only: yes"));
  EXPECT_TRUE(contains(r.out, "convex: no"));
  EXPECT_TRUE(contains(r.out, "witness: t = 0 (theta = 0)"));

  r = run({"check", "--input", file("rab.txt", "a0 = 1/2\ncos 3 = 1/16\n")});
  EXPECT_TRUE(contains(r.out, "kind: constant_width (alpha = 1)"));
  EXPECT_TRUE(contains(r.out, "convex: yes"));

  r = run({"check", "--input", file("rot.txt", "a0 = 1/2\ncos 2 = 1/6\n"), "--format", "json"});
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["kind"], "rotor");
  EXPECT_EQ(j["rotor"]["n"], 3);
  EXPECT_EQ(j["rotor"]["rho"], "1/2");
  EXPECT_EQ(j["convexity"]["convex"], true);
}

TEST(Cli, SurfaceCommand) {
  auto r = run({"surface", "--revolve", "--format", "json", "--input", file("c2.txt", "cos 2 = 1\n")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["map_degree"], 2);
  EXPECT_EQ(j["table_ratio"], nlohmann::ordered_json({"6", "6", "6"}));
  EXPECT_TRUE(contains(r.err, "wall-time"));

  r = run({"surface", "--format", "json", "--input", file("y20.txt", "Y 2 0 a = 1\n")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["map_degree"], 2);
  EXPECT_EQ(j["table_ratio"], nlohmann::ordered_json({"6", "6", "6"}));

  r = run({"surface", "--input", file("y43.txt", "Y 4 3 a = 1\nY 4 3 b = 1\n")});
  EXPECT_EQ(r.code, cli::kRefused);
  EXPECT_TRUE(contains(r.err, "estimated cost"));
}

TEST(Cli, SurfaceOutputIsByteIdentical) {
  const std::string in = file("c3.txt", "cos 3 = 1\n");
  const auto a = run({"surface", "--revolve", "--format", "json", "--input", in});
  const auto b = run({"surface", "--revolve", "--format", "json", "--input", in});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, TableRowsAndMismatchExit) {
  auto r = run({"table", "--rows", "cos3θ"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(contains(r.out, "MATCH"));
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);  // header, row, seed

  r = run({"table", "--rows", "P_4^0", "--format", "csv"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(contains(r.out, "SKIPPED"));

  EXPECT_EQ(run({"table", "--rows", "no such row"}).code, cli::kParseError);

  // a golden file with a wrong printed value
  const fs::path data = scratch() / "data";
  fs::create_directories(data);
  std::ofstream(data / "table1.txt") << "cos3θ | cos3 = 1 | yes | 2 | 4 | 4 | 4 | default\n";
  std::ofstream(data / "table2.txt") << "# none\n";
  ::setenv("TRIGIMPL_DATA_DIR", data.c_str(), 1);
  r = run({"table"});
  ::unsetenv("TRIGIMPL_DATA_DIR");
  EXPECT_EQ(r.code, cli::kMismatch);
  EXPECT_TRUE(contains(r.out, "MISMATCH"));
  EXPECT_TRUE(contains(r.out, "4/2!"));
}

TEST(Cli, PlotCircleIsExact) {
  TrigPoly p(Rational(1));
  double worst = 0;
  for (const auto& s : cli::sample_curve(p, 10000)) worst = std::max(worst, std::abs(std::hypot(s[1], s[2]) - 1));
  EXPECT_LT(worst, 1e-9);
}

TEST(Cli, PlotSvgViewport) {
  TrigPoly p(ratio(1, 2));
  p.set_cos(3, ratio(1, 16));
  const std::string svg = cli::render_svg(p, 360);
  EXPECT_EQ(svg, cli::render_svg(p, 360));
  EXPECT_TRUE(contains(svg, "width=\"800\" height=\"800\""));
  EXPECT_TRUE(contains(svg, " Z\""));
  // the wider extent spans 800 / 1.1 pixels, centered
  double lo = 800, hi = 0;
  std::istringstream in(svg.substr(svg.find("d=\"M") + 4));
  for (std::string tok; in >> tok && tok != "Z\"/>";) {
    if (tok[0] == 'L') tok = tok.substr(1);
    const double x = std::stod(tok.substr(0, tok.find(','))), y = std::stod(tok.substr(tok.find(',') + 1));
    lo = std::min({lo, x, y});
    hi = std::max({hi, x, y});
  }
  EXPECT_NEAR(lo, 400 - 400 / 1.1, 1e-3);
  EXPECT_NEAR(hi, 400 + 400 / 1.1, 1e-3);
}

TEST(Cli, PlotWritesSvgAndCsv) {
  const std::string out = (scratch() / "rot.svg").string();
  const auto r = run({"plot", "--input", file("rot.txt", "a0 = 1/2\ncos 2 = 1/6\n"), "--samples", "100", "--out", out});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(fs::exists(out));
  std::ifstream csv(scratch() / "rot.csv");
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "theta,x,y");
  int lines = 0;
  for (std::string l; std::getline(csv, l);) ++lines;
  EXPECT_EQ(lines, 100);
  EXPECT_EQ(run({"plot", "--input", file("rot.txt", "a0 = 1/2\n"), "--samples", "0"}).code, cli::kParseError);
}
