#include "trigimpl/cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "trigimpl/errors.hpp"
#include "trigimpl/surface/tables.hpp"
#include "trigimpl/trig/classify.hpp"
#include "trigimpl/trig/support_file.hpp"

namespace trigimpl::cli {

using json = nlohmann::ordered_json;

namespace {

class TimedOut : public Error {
 public:
  using Error::Error;
};

/// Bad command line or unreadable input file; exits like a parse error.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Left-aligned in `width` code points.
std::string pad(const std::string& s, std::size_t width) {
  const auto points = static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
  return s + std::string(points < width ? width - points : 1, ' ');
}

std::string str(const Rational& r) { return r.get_str(); }
Rational rat(const json& j) {
  Rational r(j.get<std::string>());
  r.canonicalize();
  return r;
}

json support_json(const TrigPoly& p) {
  json cos = json::object(), sin = json::object();
  for (int k = 1; k <= p.degree(); ++k) {
    if (p.a(k) != 0) cos[std::to_string(k)] = str(p.a(k));
    if (p.b(k) != 0) sin[std::to_string(k)] = str(p.b(k));
  }
  return {{"a0", str(p.a0())}, {"cos", cos}, {"sin", sin}};
}

TrigPoly support_from_json(const json& j) {
  TrigPoly p(rat(j.at("a0")));
  for (const auto& [k, v] : j.at("cos").items()) p.set_cos(std::stoi(k), rat(v));
  for (const auto& [k, v] : j.at("sin").items()) p.set_sin(std::stoi(k), rat(v));
  return p;
}

CurveKind kind_from_string(const std::string& s) {
  for (CurveKind k : {CurveKind::circle, CurveKind::constant_width, CurveKind::rotor, CurveKind::generic})
    if (s == to_string(k)) return k;
  throw Error("unknown curve kind '" + s + "'");
}

template <class T>
T with_timeout(double seconds, std::function<T()> f) {
  if (seconds <= 0) return f();
  auto task = std::make_shared<std::packaged_task<T()>>(std::move(f));
  auto result = task->get_future();
  std::thread([task] { (*task)(); }).detach();
  if (result.wait_for(std::chrono::duration<double>(seconds)) == std::future_status::timeout)
    throw TimedOut("slow-tier timeout of " + std::to_string(seconds) + " s expired");
  return result.get();
}

std::string read_input(const std::string& path) {
  if (path.empty()) throw UsageError("no --input given");
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw Error("cannot write " + cfg.out);
  f << text;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string curve_text(const ImplicitReport& r, std::uint64_t seed) {
  std::ostringstream o;
  o << "support: " << r.support.to_string() << "\n";
  o << "classification: " << to_string(r.classification.kind) << "\n";
  o << "tracing_index: " << r.tracing_index << "\n";
  o << "predicted_total_degree: " << r.predicted.degree << "\n";
  o << "total_degree: " << r.total_degree << "\n";
  o << "deg_x: " << r.deg_x << "\n";
  o << "deg_y: " << r.deg_y << "\n";
  o << "seed: " << seed << "\n";
  o << "polynomial: " << r.f.to_string() << "\n";
  return o.str();
}

std::string degree_text(const DegreeReport& r, const std::string& input) {
  std::ostringstream o;
  auto row = [&](const char* name, const auto& v) {
    o << name << ":";
    for (const auto& x : v) o << " " << x;
    o << "\n";
  };
  o << "input: " << input << "\n";
  row("permutation", r.permutation);
  o << "c: " << r.c_S << " (T side: " << r.c_T << ")\n";
  o << "map_degree: " << r.map_degree << " (T side: " << r.map_degree_T << ")\n";
  row("deg_S_pairs", r.deg_S_pairs);
  row("deg_T_pairs", r.deg_T_pairs);
  row("deg_x deg_y deg_z", r.deg);
  row("table_ratio", r.table_ratio);
  row("section_ratio", r.section_ratio);
  o << "seed: " << r.seed << "\n";
  return o.str();
}

int cmd_curve(const RunConfig& cfg, std::ostream& out) {
  const ImplicitReport r = implicitize(parse_support(read_input(cfg.input)));
  emit(cfg, cfg.format == "json" ? implicit_json(r, cfg.seed).dump(2) + "\n" : curve_text(r, cfg.seed), out);
  return kOk;
}

int cmd_surface(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string text = read_input(cfg.input);
  SurfaceParam P;
  std::string input;
  if (cfg.revolve) {
    const TrigPoly p = parse_support(text);
    require_tier(p, cfg.slow);
    P = revolution_surface(p);
    input = "revolution of " + p.to_string();
  } else {
    const SphericalSupport h = parse_spherical(text);
    require_tier(h, cfg.slow);
    P = harmonic_surface(h);
    input = format_spherical(h);
    std::replace(input.begin(), input.end(), '\n', ';');
    while (!input.empty() && input.back() == ';') input.pop_back();
  }
  const DegreeOptions options{cfg.seed};
  const DegreeReport r = with_timeout<DegreeReport>(cfg.slow ? cfg.timeout : 0, [P, options] { return sendra_degrees(P, options); });
  err << "wall-time: " << fmt("%.3f", r.seconds) << " s\n";
  emit(cfg, cfg.format == "json" ? degree_json(r, input).dump(2) + "\n" : degree_text(r, input), out);
  return kOk;
}

std::vector<TableRow> selected_rows(const std::string& filter) {
  std::vector<TableRow> rows = load_table(1);
  for (auto& r : load_table(2)) rows.push_back(std::move(r));
  if (filter.find_first_not_of(" ,") == std::string::npos) return rows;
  std::vector<std::string> queries;
  std::stringstream ss(filter);
  for (std::string q; std::getline(ss, q, ',');)
    if (q.find_first_not_of(' ') != std::string::npos) queries.push_back(q);
  for (const auto& q : queries)
    if (std::none_of(rows.begin(), rows.end(), [&](const TableRow& r) { return label_matches(r.label, q); }))
      throw UsageError("unknown table row '" + q + "'");
  std::vector<TableRow> picked;
  for (const auto& r : rows)
    if (std::any_of(queries.begin(), queries.end(), [&](const std::string& q) { return label_matches(r.label, q); }))
      picked.push_back(r);
  return picked;
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::vector<TableRow> rows = selected_rows(cfg.rows);
  json all = json::array();
  std::ostringstream text, csv;
  csv << "table,label,status,deg_P,deg_P_printed,x,x_printed,y,y_printed,z,z_printed,symmetric,symmetric_printed\n";
  text << "table  label                  status    deg P    x        y        z        symmetric\n";
  bool mismatch = false;
  for (const TableRow& row : rows) {
    const bool slow = row.slow || row_needs_slow(row);
    std::string status = "SKIPPED";
    std::optional<RowOutcome> o;
    if (!slow || cfg.slow) {
      try {
        const DegreeOptions options{cfg.seed};
        o = with_timeout<RowOutcome>(slow ? cfg.timeout : 0, [row, options] { return run_row(row, options); });
        status = !o->error.empty() ? "ERROR" : o->match ? "MATCH" : "MISMATCH";
      } catch (const TimedOut& e) {
        o = RowOutcome{row, std::nullopt, std::nullopt, false, e.what()};
        status = "ERROR";
      }
      if (status != "MATCH") mismatch = true;
      if (o->report) err << row.label << ": " << fmt("%.3f", o->report->seconds) << " s\n";
      if (!o->error.empty()) err << row.label << ": " << o->error << "\n";
    }
    const DegreeReport* r = o && o->report ? &*o->report : nullptr;
    auto cell = [&](int k) -> std::string {  // k = -1 is deg P
      if (!r) return "-";
      return k < 0 ? std::to_string(r->map_degree) : r->table_ratio[static_cast<std::size_t>(k)].get_str();
    };
    auto printed = [&](int k) { return std::to_string(k < 0 ? row.map_degree : row.ratio[static_cast<std::size_t>(k)]); };
    auto yesno = [](const std::optional<bool>& b) -> std::string { return b ? (*b ? "yes" : "no") : "-"; };
    const std::string sym = o ? yesno(o->symmetric) : "-";

    auto pair = [&](int k) {
      const std::string c = cell(k), p = printed(k);
      return c + "/" + p + (c == "-" || c == p ? "" : "!");
    };
    text << pad(std::to_string(row.table), 7) << pad(row.label, 23) << pad(status, 10);
    for (int k = -1; k < 3; ++k) text << pad(pair(k), 9);
    text << sym << "/" << yesno(row.symmetric) << "\n";
    csv << row.table << ",\"" << row.label << "\"," << status;
    for (int k = -1; k < 3; ++k) csv << "," << cell(k) << "," << printed(k);
    csv << "," << sym << "," << yesno(row.symmetric) << "\n";

    json j{{"table", row.table}, {"label", row.label}, {"status", status}};
    j["printed"] = {{"map_degree", row.map_degree}, {"ratio", row.ratio}, {"symmetric", yesno(row.symmetric)}};
    if (r) j["computed"] = {{"map_degree", r->map_degree}, {"ratio", {cell(0), cell(1), cell(2)}}, {"symmetric", sym}};
    j["seed"] = cfg.seed;
    all.push_back(j);
  }
  if (cfg.format == "json") emit(cfg, all.dump(2) + "\n", out);
  else if (cfg.format == "csv") emit(cfg, csv.str(), out);
  else emit(cfg, text.str() + "seed: " + std::to_string(cfg.seed) + "\n", out);
  return mismatch ? kMismatch : kOk;
}

int cmd_plot(const RunConfig& cfg, std::ostream& out) {
  const TrigPoly p = parse_support(read_input(cfg.input));
  if (p.is_zero()) throw DegenerateInput("empty support function");
  if (cfg.format == "csv") {
    emit(cfg, render_csv(p, cfg.samples), out);
    return kOk;
  }
  emit(cfg, render_svg(p, cfg.samples), out);
  if (!cfg.out.empty()) {
    RunConfig side = cfg;
    const auto dot = side.out.find_last_of('.');
    side.out = (dot == std::string::npos ? side.out : side.out.substr(0, dot)) + ".csv";
    emit(side, render_csv(p, cfg.samples), out);
  }
  return kOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const TrigPoly p = parse_support(read_input(cfg.input));
  if (p.is_zero()) throw DegenerateInput("empty support function");
  const Classification c = classify(p);
  const ConvexityCertificate v = is_convex(p);
  const bool odd_only = tracing_index(p) == 2;
  std::string witness = "-";
  if (v.witness_t) {
    witness = "t = " + str(*v.witness_t) + " (theta = " + fmt("%.12g", 2 * std::atan(v.witness_t->get_d())) + ")";
  } else if (v.witness_at_pi) {
    witness = "theta = pi";
  }
  if (cfg.format == "json") {
    json j{{"support", support_json(p)}, {"kind", to_string(c.kind)}, {"odd_only", odd_only}};
    if (c.kind == CurveKind::constant_width) j["alpha"] = str(c.alpha);
    if (c.kind == CurveKind::rotor) j["rotor"] = {{"n", c.n}, {"rho", str(c.rho)}};
    j["admissible_n"] = c.admissible_n;
    json signs = json::array();
    for (const auto& s : v.sign_table) signs.push_back({{"t", str(s.t)}, {"sign", s.sign}});
    json num = json::array();
    for (const auto& x : v.numerator.coefficients()) num.push_back(x.get_str());
    j["convexity"] = {{"convex", v.convex}, {"numerator", num}, {"real_roots", v.real_roots},
                      {"sign_table", signs}, {"rho_at_pi", str(v.rho_at_pi)}, {"witness", witness}};
    j["seed"] = cfg.seed;
    emit(cfg, j.dump(2) + "\n", out);
    return kOk;
  }
  std::ostringstream o;
  o << "support: " << p.to_string() << "\n";
  o << "kind: " << to_string(c.kind);
  if (c.kind == CurveKind::constant_width) o << " (alpha = " << c.alpha << ")";
  if (c.kind == CurveKind::rotor) o << " (n = " << c.n << ", rho = " << c.rho << ")";
  o << "\nodd_only: " << (odd_only ? "yes" : "no") << "\n";
  if (!c.admissible_n.empty()) {
    o << "admissible_n:";
    for (int n : c.admissible_n) o << " " << n;
    o << "\n";
  }
  o << "convex: " << (v.convex ? "yes" : "no") << "\n";
  o << "rho numerator: " << v.numerator.degree() << " degree, " << v.real_roots << " real roots\n";
  o << "signs:";
  for (const auto& s : v.sign_table) o << " " << s.t << (s.sign > 0 ? ":+" : s.sign < 0 ? ":-" : ":0");
  o << "\nrho(pi): " << v.rho_at_pi << "\n";
  o << "witness: " << witness << "\n";
  o << "seed: " << cfg.seed << "\n";
  emit(cfg, o.str(), out);
  return kOk;
}

}  // namespace

json implicit_json(const ImplicitReport& r, std::uint64_t seed) {
  const Classification& c = r.classification;
  json cls{{"kind", to_string(c.kind)},       {"alpha", str(c.alpha)},        {"n", c.n},
           {"rho", str(c.rho)},               {"witness", c.witness},         {"admissible_n", c.admissible_n},
           {"antipodal_identity", c.antipodal_identity}};
  return {{"support", support_json(r.support)},
          {"classification", cls},
          {"tracing_index", r.tracing_index},
          {"predicted_total_degree", r.predicted.degree},
          {"circle", r.predicted.circle},
          {"total_degree", r.total_degree},
          {"deg_x", r.deg_x},
          {"deg_y", r.deg_y},
          {"polynomial", r.f.to_string()},
          {"seed", seed}};
}

ImplicitReport implicit_from_json(const json& j) {
  ImplicitReport r;
  r.support = support_from_json(j.at("support"));
  const json& c = j.at("classification");
  r.classification.kind = kind_from_string(c.at("kind").get<std::string>());
  r.classification.alpha = rat(c.at("alpha"));
  r.classification.n = c.at("n").get<int>();
  r.classification.rho = rat(c.at("rho"));
  r.classification.witness = c.at("witness").get<std::vector<int>>();
  r.classification.admissible_n = c.at("admissible_n").get<std::vector<int>>();
  r.classification.antipodal_identity = c.at("antipodal_identity").get<bool>();
  r.tracing_index = j.at("tracing_index").get<int>();
  r.predicted.degree = j.at("predicted_total_degree").get<int>();
  r.predicted.circle = j.at("circle").get<bool>();
  r.total_degree = j.at("total_degree").get<int>();
  r.deg_x = j.at("deg_x").get<int>();
  r.deg_y = j.at("deg_y").get<int>();
  r.f = MultiPoly::parse(j.at("polynomial").get<std::string>(), xy_variables());
  return r;
}

json degree_json(const DegreeReport& r, const std::string& input) {
  auto strs = [](const std::array<Rational, 3>& a) { return json{str(a[0]), str(a[1]), str(a[2])}; };
  return {{"input", input},
          {"permutation", r.permutation},
          {"c", r.c_S},
          {"map_degree", r.map_degree},
          {"raw", {{"c_T", r.c_T}, {"map_degree_T", r.map_degree_T}, {"deg_S_pairs", r.deg_S_pairs}, {"deg_T_pairs", r.deg_T_pairs}}},
          {"deg_x", r.deg[0]},
          {"deg_y", r.deg[1]},
          {"deg_z", r.deg[2]},
          {"table_ratio", strs(r.table_ratio)},
          {"section_ratio", strs(r.section_ratio)},
          {"seed", r.seed}};
}

DegreeReport degree_from_json(const json& j) {
  DegreeReport r;
  r.permutation = j.at("permutation").get<std::array<int, 3>>();
  r.c_S = j.at("c").get<int>();
  r.map_degree = j.at("map_degree").get<int>();
  const json& raw = j.at("raw");
  r.c_T = raw.at("c_T").get<int>();
  r.map_degree_T = raw.at("map_degree_T").get<int>();
  r.deg_S_pairs = raw.at("deg_S_pairs").get<std::array<int, 3>>();
  r.deg_T_pairs = raw.at("deg_T_pairs").get<std::array<int, 3>>();
  r.deg = {j.at("deg_x").get<int>(), j.at("deg_y").get<int>(), j.at("deg_z").get<int>()};
  for (std::size_t k = 0; k < 3; ++k) {
    r.table_ratio[k] = rat(j.at("table_ratio")[k]);
    r.section_ratio[k] = rat(j.at("section_ratio")[k]);
  }
  r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

std::vector<std::array<double, 3>> sample_curve(const TrigPoly& p, int samples) {
  const TrigPoly dp = p.derivative();
  std::vector<std::array<double, 3>> pts;
  pts.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const double th = 2 * std::numbers::pi * k / samples;
    const double v = p(th), d = dp(th);
    pts.push_back({th, v * std::cos(th) - d * std::sin(th), v * std::sin(th) + d * std::cos(th)});
  }
  return pts;
}

std::string render_svg(const TrigPoly& p, int samples) {
  const auto pts = sample_curve(p, samples);
  double x0 = pts[0][1], x1 = x0, y0 = pts[0][2], y1 = y0;
  for (const auto& q : pts) {
    x0 = std::min(x0, q[1]), x1 = std::max(x1, q[1]);
    y0 = std::min(y0, q[2]), y1 = std::max(y1, q[2]);
  }
  double span = std::max(x1 - x0, y1 - y0) * 1.1;
  if (span <= 0) span = 1;
  const double scale = 800 / span, cx = (x0 + x1) / 2, cy = (y0 + y1) / 2;
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  o << "<path fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" d=\"";
  for (std::size_t i = 0; i < pts.size(); ++i)
    o << (i ? " L" : "M") << fmt("%.3f", 400 + (pts[i][1] - cx) * scale) << "," << fmt("%.3f", 400 - (pts[i][2] - cy) * scale);
  o << " Z\"/>\n</svg>\n";
  return o.str();
}

std::string render_csv(const TrigPoly& p, int samples) {
  std::ostringstream o;
  o << "theta,x,y\n";
  for (const auto& q : sample_curve(p, samples))
    o << fmt("%.17g", q[0]) << "," << fmt("%.17g", q[1]) << "," << fmt("%.17g", q[2]) << "\n";
  return o.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact implicitization of support-function curves and surfaces"};
  app.name("trigimpl");
  app.require_subcommand(1, 1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--input", cfg.input, "Support file ('-' for stdin)");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", cfg.out, "Write the output to this path");
    sub->add_option("--seed", cfg.seed, "Seed recorded in the report and used for sampling");
  };
  CLI::App* curve = app.add_subcommand("curve", "Implicitize a planar support-function curve");
  common(curve, {"text", "json"});
  CLI::App* surface = app.add_subcommand("surface", "Degree report of a surface");
  common(surface, {"text", "json"});
  surface->add_flag("--revolve", cfg.revolve, "Input is a curve file; use its surface of revolution");
  CLI::App* table = app.add_subcommand("table", "Reproduce the partial-degree tables");
  common(table, {"text", "csv", "json"});
  table->add_option("--rows", cfg.rows, "Comma-separated row labels (default: all)");
  CLI::App* plot = app.add_subcommand("plot", "Sample a curve to SVG or CSV");
  common(plot, {"svg", "csv"});
  plot->add_option("--samples", cfg.samples, "Number of uniform samples")->check(CLI::PositiveNumber);
  CLI::App* check = app.add_subcommand("check", "Classification and convexity certificate");
  common(check, {"text", "json"});
  for (CLI::App* sub : {surface, table}) {
    sub->add_flag("--slow", cfg.slow, "Unlock slow-tier inputs");
    sub->add_option("--timeout", cfg.timeout, "Slow-tier limit in seconds (0: none)")->capture_default_str();
  }
  cfg.timeout = 3600;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  if (plot->parsed() && plot->count("--format") == 0) cfg.format = "svg";

  try {
    if (curve->parsed()) return cmd_curve(cfg, out);
    if (surface->parsed()) return cmd_surface(cfg, out, err);
    if (table->parsed()) return cmd_table(cfg, out, err);
    if (plot->parsed()) return cmd_plot(cfg, out);
    return cmd_check(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const DegenerateInput& e) {
    err << "degenerate input: " << e.what() << "\n";
    return kDegenerate;
  } catch (const AssumptionViolation& e) {
    err << e.what() << "\n";
    return kAssumption;
  } catch (const TooLarge& e) {
    err << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const TimedOut& e) {
    err << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDegenerate;
  }
}

}  // namespace trigimpl::cli
