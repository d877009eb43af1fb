// Acceptance gate: one PASS/FAIL line per criterion.
// Usage: acceptance [--slow]   (--slow adds the l = 4 harmonic rows)

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../common/random_support.hpp"
#include "../unit/test_support.hpp"
#include "trigimpl/curve/curve.hpp"
#include "trigimpl/errors.hpp"
#include "trigimpl/exact/gcd.hpp"
#include "trigimpl/exact/resultant.hpp"
#include "trigimpl/surface/surface.hpp"
#include "trigimpl/surface/tables.hpp"
#include "trigimpl/trig/support_file.hpp"

using namespace trigimpl;
using Clock = std::chrono::steady_clock;

namespace {

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
  /// Failure that matches a documented discrepancy in the printed source data.
  bool known = false;
};

int unexpected_failures = 0;
int known_failures = 0;

void report(int id, const char* name, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const char* tag = o.pass ? "PASS" : "FAIL";
  std::printf("[%s] criterion %d: %s: %s (%.2f s)\n", tag, id, name, o.detail.c_str(), since(start));
  std::fflush(stdout);
  if (!o.pass) ++(o.known ? known_failures : unexpected_failures);
}

void note(const std::string& line) {
  std::printf("    %s\n", line.c_str());
  std::fflush(stdout);
}

MultiPoly golden(const std::string& name) {
  std::ifstream in(data_dir() + "/golden/" + name);
  if (!in) throw std::runtime_error("missing golden file " + name);
  std::string line, text;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') text += line + "\n";
  return normalized(MultiPoly::parse(text, xy_variables()));
}

/// Left-justified to `width` code points.
std::string pad(const std::string& s, std::size_t width) {
  const auto points = static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
  return s + std::string(width > points ? width - points : 0, ' ');
}

TrigPoly support(const char* text) { return parse_support(text); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome rabinowitz() {
  const auto start = Clock::now();
  const auto rep = implicitize(support("a0 = 1/2\ncos 3 = 1/16\n"));
  const double secs = since(start);
  const MultiPoly printed = golden("rabinowitz_deg8.txt");
  const bool shape = rep.total_degree == 8 && rep.tracing_index == 1 && rep.f.size() == 24 && secs < 5;
  if (shape && rep.f == printed) return {true, "24 terms, degree 8, r = 1"};
  Outcome o{false, fmt("degree %d, r = %d, %zu terms, %.2f s", rep.total_degree, rep.tracing_index, rep.f.size(), secs)};
  const MultiPoly two_x = MultiPoly::variable(xy_variables(), 0) * Rational(2);
  if (shape && normalized(printed.substitute(0, two_x)) == rep.f) {
    o.detail += "; printed polynomial g satisfies g(2x, y) = f(x, y), so it does not vanish on the curve";
    o.known = verify_vanishing(printed, rep.support, vanishing_samples()).has_value() &&
              !verify_vanishing(rep.f, rep.support, vanishing_samples()).has_value();
  } else {
    o.detail += "; differs from the printed polynomial";
  }
  return o;
}

Outcome rotor() {
  const auto start = Clock::now();
  const auto rep = implicitize(support("a0 = 1/2\ncos 2 = 1/6\n"));
  const double secs = since(start);
  const bool ok = rep.f == golden("rotor3_deg6.txt") && rep.total_degree == 6 && secs < 2;
  return {ok, fmt("degree %d, %zu terms, %s printed polynomial", rep.total_degree, rep.f.size(),
                  rep.f == golden("rotor3_deg6.txt") ? "equals" : "differs from")};
}

/// γ(θ + π) == γ(θ) at t, where θ + π has half-angle -1/t.
bool antipodal_equal(const TrigPoly& p, const RationalCurveParam& c, const Rational& t) {
  return c.point(t) == (t == 0 ? point_at_pi(p) : c.point(Rational(-1) / t));
}

struct SuiteResult {
  int degree_law = 0, partial = 0, partial_checked = 0, parity = 0, odd = 0;
  double seconds = 0;
};

const SuiteResult& suite() {
  static const SuiteResult result = [] {
    SuiteResult s;
    const auto start = Clock::now();
    for (int i = 0; i < testutil::kSuiteSize; ++i) {
      const TrigPoly p = testutil::suite_member(testutil::kSuiteSeed, i);
      const int n = p.degree();
      const auto rep = implicitize(p);
      const bool odd = parity_class(p) == Parity::odd_only;
      s.odd += odd;
      s.degree_law += rep.total_degree == (odd ? n + 1 : 2 * n + 2);
      const auto c = rational_parametrization(p);
      if (rep.tracing_index == 1) {
        ++s.partial_checked;
        s.partial += rep.deg_y == std::max(c.P1.degree(0), c.Q.degree(0));
      }
      int equal = 0;
      const auto samples = vanishing_samples();
      for (std::size_t k = 0; k < 20; ++k) equal += antipodal_equal(p, c, samples[k]);
      const bool predicted_two = rep.tracing_index == 2;
      s.parity += predicted_two == (equal == 20);
    }
    s.seconds = since(start);
    return s;
  }();
  return result;
}

Outcome degree_law() {
  const auto& s = suite();
  const int n = testutil::kSuiteSize;
  const bool ok = s.degree_law == n && s.partial == s.partial_checked && s.seconds < 180;
  return {ok, fmt("%d/%d total degrees, %d/%d deg_y with r = 1, %d odd-only members, suite %.1f s", s.degree_law, n,
                  s.partial, s.partial_checked, s.odd, s.seconds)};
}

Outcome tracing() {
  const auto& s = suite();
  return {s.parity == testutil::kSuiteSize, fmt("%d/%d members agree with the 20-point antipodal check", s.parity,
                                                testutil::kSuiteSize)};
}

Outcome width_and_rotors() {
  const auto start = Clock::now();
  int good = 0, total = 0;
  auto check = [&](const TrigPoly& p, CurveKind kind, int n, int expected) {
    ++total;
    const auto rep = implicitize(p);
    const bool ok = rep.classification.kind == kind && (n == 0 || rep.classification.n == n) && rep.total_degree == expected;
    good += ok;
    note(fmt("%-14s degree %2d, expected %2d%s  %s", to_string(rep.classification.kind), rep.total_degree, expected,
             ok ? "" : " (mismatch)", p.to_string().c_str()));
  };
  for (int m = 1; m <= 3; ++m) {
    TrigPoly p(Rational(1));
    for (int k : {3, 2 * m + 1}) p.set_cos(k, Rational(1, 4 * k * k));
    p.set_sin(2 * m + 1, Rational(1, 8 * (2 * m + 1) * (2 * m + 1)));
    check(p, CurveKind::constant_width, 0, 4 * m + 4);
  }
  for (auto [n, m] : {std::pair{3, 1}, {3, 2}, {5, 1}}) {
    TrigPoly p(Rational(1));
    for (int h : {n - 1, n * m + 1}) p.set_cos(h, Rational(1, 4 * h * h));
    p.set_sin(n * m + 1, Rational(1, 8 * (n * m + 1) * (n * m + 1)));
    check(p, CurveKind::rotor, n, 2 * n * m + 4);
  }
  const double secs = since(start);
  return {good == total && secs < 60, fmt("%d/%d degrees as predicted", good, total)};
}

struct TableRun {
  std::vector<RowOutcome> rows;
  std::vector<double> seconds;
};

TableRun run_table(int table, bool slow) {
  TableRun run;
  for (const auto& row : load_table(table)) {
    if (row.slow && !slow) {
      note(pad(row.label, 24) + "skipped (slow tier, pass --slow)");
      continue;
    }
    const auto start = Clock::now();
    run.rows.push_back(run_row(row));
    run.seconds.push_back(since(start));
    const auto& o = run.rows.back();
    std::string cells = o.report ? fmt("%d, %s, %s, %s", o.report->map_degree, o.report->table_ratio[0].get_str().c_str(),
                                       o.report->table_ratio[1].get_str().c_str(), o.report->table_ratio[2].get_str().c_str())
                                 : o.error;
    note(pad(row.label, 24) + fmt("%-16s printed %d, %d, %d, %d  %s  %.1f s", cells.c_str(), row.map_degree, row.ratio[0],
             row.ratio[1], row.ratio[2], o.match ? "MATCH" : "MISMATCH", run.seconds.back()));
  }
  return run;
}

const TableRun& table1() {
  static const TableRun run = run_table(1, true);
  return run;
}

Outcome table_one() {
  const auto& run = table1();
  int match = 0;
  double fast = 0, slow = 0;
  for (std::size_t i = 0; i < run.rows.size(); ++i) {
    match += run.rows[i].match;
    (parse_support(run.rows[i].row.input).degree() <= 4 ? fast : slow) += run.seconds[i];
  }
  const bool ok = match == 9 && run.rows.size() == 9 && fast < 600 && slow < 3600;
  return {ok, fmt("%d/%zu rows match; N <= 4 rows %.1f s, N = 5 rows %.1f s", match, run.rows.size(), fast, slow)};
}

Outcome table_two(bool slow) {
  const auto run = run_table(2, slow);
  int match = 0;
  for (const auto& o : run.rows) match += o.match;
  const int expected = slow ? 15 : 10;
  return {match == expected && static_cast<int>(run.rows.size()) == expected,
          fmt("%d/%zu rows match%s", match, run.rows.size(), slow ? " including l = 4" : " (l = 4 rows need --slow)")};
}

Outcome four_n_plus_four() {
  int good = 0, total = 0;
  for (const auto& o : table1().rows) {
    if (!o.report) continue;
    ++total;
    const int n = parse_support(o.row.input).degree();
    good += o.report->map_degree * o.report->table_ratio[0] == 4 * n + 4;
  }
  return {good == 9 && total == 9, fmt("%d/%d rows satisfy map_degree * ratio_x = 4N + 4", good, total)};
}

Outcome spheres() {
  const auto start = Clock::now();
  const Variables& v = xyz_variables();
  int good = 0, total = 0;
  const std::vector<std::array<Rational, 4>> cases = {
      {1, 0, 0, 0}, {3, 0, 0, 0}, {5, ratio(1, 2), -2, 3}, {2, -1, 0, ratio(1, 3)}, {ratio(1, 2), 0, 1, 0}};
  for (const auto& [a00, a10, a11, b11] : cases) {
    SphericalSupport h;
    h.set(0, 0, a00);
    h.set(1, 0, a10);
    h.set(1, 1, a11, b11);
    const MultiPoly x = MultiPoly::variable(v, 0) + MultiPoly(v, a11);
    const MultiPoly y = MultiPoly::variable(v, 1) + MultiPoly(v, b11);
    const MultiPoly z = MultiPoly::variable(v, 2) - MultiPoly(v, a10);
    const MultiPoly expected = normalized(x * x + y * y + z * z - MultiPoly(v, a00 * a00));
    ++total;
    good += surface_implicitize_small(harmonic_surface(h)) == expected;
  }
  const double secs = since(start);
  return {good == total && secs < 5, fmt("%d/%d spheres exact", good, total)};
}

Outcome kernel() {
  const auto start = Clock::now();
  std::mt19937_64 rng(2025);
  const Variables xyt{"x", "y", "t"}, xy{"x", "y"}, xt{"x", "t"};

  int agree = 0, pairs = 0;
  while (pairs < 100) {
    const MultiPoly p = testutil::random_poly(xyt, 6, 0.15, 7, rng);
    const MultiPoly q = testutil::random_poly(xyt, 5, 0.2, 7, rng);
    if (p.degree(2) < 1 || q.degree(2) < 1) continue;
    ++pairs;
    const MultiPoly s = determinant(sylvester_matrix(p, q, 2));
    const MultiPoly b = determinant(bezout_matrix(p, q, 2));
    bool ok = resultant(p, q, 2, ResultantMethod::bezout) == s;
    // raw determinants agree up to sign when the degrees are equal
    if (p.degree(2) == q.degree(2)) ok = ok && (b == s || b == -s);
    agree += ok;
  }

  int roots = 0, tried = 0;
  while (tried < 50) {
    const MultiPoly f = testutil::random_poly(xy, 4, 0.5, 6, rng);
    if (f.total_degree() < 1 || !gcd(gcd(f, f.derivative(0)), f.derivative(1)).is_constant()) continue;
    ++tried;
    const unsigned r = 2 + tried % 2;
    roots += rth_root(f.pow(r) * Rational(-5, 3), r) == normalized(f);
  }

  int content_ok = 0;
  for (int i = 0; i < 50; ++i) {
    MultiPoly q = testutil::random_poly(xt, 5, 0.4, 9, rng) * testutil::random_poly(xt, 1, 1.0, 3, rng);
    if (q.is_zero()) q = MultiPoly::parse("x*t + 2", xt);
    content_ok += content(q, 1) * primitive_part(q, 1) == q;
  }

  int cheb = 0;
  const std::map<std::string, GaussianRational> at_i{{"t", GaussianRational::i()}};
  for (int n = 1; n <= 8; ++n) {
    const Rational v(Integer(1) << (2 * n - 1));
    cheb += cheb_C(n).evaluate(at_i) == GaussianRational(v) && cheb_S(n).evaluate(at_i) == GaussianRational(Rational(0), v);
  }

  const bool ok = agree == 100 && roots == 50 && content_ok == 50 && cheb == 8 && since(start) < 60;
  return {ok, fmt("resultants %d/100, rth_root %d/50, content*pp %d/50, Chebyshev at i %d/8", agree, roots, content_ok, cheb)};
}

}  // namespace

int main(int argc, char** argv) {
  bool slow = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--slow") == 0) {
      slow = true;
    } else {
      std::fprintf(stderr, "usage: %s [--slow]\n", argv[0]);
      return 2;
    }
  }
  const auto start = Clock::now();
  report(1, "Rabinowitz polynomial", rabinowitz);
  report(2, "rotor polynomial", rotor);
  report(3, "degree-law suite", degree_law);
  report(4, "tracing index parity", tracing);
  report(5, "constant width and rotor degrees", width_and_rotors);
  report(6, "revolution table", table_one);
  report(7, "harmonic table", [slow] { return table_two(slow); });
  report(8, "4N + 4 on the revolution table", four_n_plus_four);
  report(9, "sphere identities", spheres);
  report(10, "kernel properties", kernel);
  std::printf("summary: %d unexpected failure(s), %d known discrepancy(ies), %.1f s\n", unexpected_failures, known_failures,
              since(start));
  return unexpected_failures == 0 ? 0 : 1;
}
