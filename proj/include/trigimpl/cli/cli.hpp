#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "trigimpl/curve/curve.hpp"
#include "trigimpl/surface/surface.hpp"

namespace trigimpl::cli {

enum Exit : int {
  kOk = 0,
  kParseError = 1,
  kDegenerate = 2,
  kAssumption = 3,
  kMismatch = 4,
  /// Refused by the tier guard, or the slow-tier timeout expired.
  kRefused = 5,
};

struct RunConfig {
  std::string command;
  std::string input;
  std::string format = "text";
  bool revolve = false;
  bool slow = false;
  int samples = 720;
  std::uint64_t seed = 1;
  std::string rows;
  std::string out;
  /// Seconds; 0 waits forever.
  double timeout = 0;
};

nlohmann::ordered_json implicit_json(const ImplicitReport& r, std::uint64_t seed);
ImplicitReport implicit_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json degree_json(const DegreeReport& r, const std::string& input);
DegreeReport degree_from_json(const nlohmann::ordered_json& j);

/// (θ, x, y) at `samples` uniform angles in [0, 2π).
std::vector<std::array<double, 3>> sample_curve(const TrigPoly& p, int samples);
/// Closed path in a fixed 800x800 viewport, bounding box plus 5% margin.
std::string render_svg(const TrigPoly& p, int samples);
std::string render_csv(const TrigPoly& p, int samples);

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trigimpl::cli
