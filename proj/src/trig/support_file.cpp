#include "trigimpl/trig/support_file.hpp"

#include <cctype>
#include <set>
#include <string>
#include <tuple>

#include "trigimpl/errors.hpp"

namespace trigimpl {

namespace {

/// Cursor over one line; columns are 1-based.
class LineScanner {
 public:
  LineScanner(std::string_view line, std::size_t number) : s_(line), line_(number) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= s_.size();
  }
  std::size_t column() const { return pos_ + 1; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column()); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t column) const { throw ParseError(what, line_, column); }

  std::string word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  int integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer");
    if (pos_ - start > 4) {
      pos_ = start;
      fail("index too large");
    }
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Rational value() {
    skip_space();
    std::size_t start = pos_;
    std::string_view rest = s_.substr(pos_);
    if (rest.empty()) fail("expected a number");
    try {
      Rational v = parse_rational(rest);
      pos_ = s_.size();
      return v;
    } catch (const MathError& e) {
      pos_ = start;
      fail(e.what());
    }
  }

 private:
  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

template <class Handler>
void for_each_line(std::string_view text, Handler&& handle) {
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    LineScanner sc(line, number);
    if (!sc.at_end()) handle(sc);
    if (text.empty()) break;
  }
}

}  // namespace

TrigPoly parse_support(std::string_view text) {
  TrigPoly p;
  std::set<std::pair<int, int>> seen;  // (kind, k), kind 0 = cos/a0, 1 = sin
  for_each_line(text, [&](LineScanner& sc) {
    const std::size_t key_column = (sc.skip_space(), sc.column());
    std::string key = sc.word();
    int kind, k;
    if (key == "a") {
      k = sc.integer();
      if (k != 0) sc.fail_at("unknown key 'a" + std::to_string(k) + "'", key_column);
      kind = 0;
    } else if (key == "cos" || key == "sin") {
      kind = key == "sin";
      k = sc.integer();
      if (k < 1) sc.fail("harmonic index must be >= 1");
    } else {
      sc.fail_at("unknown key '" + key + "'", key_column);
    }
    if (!seen.insert({kind, k}).second) sc.fail_at("duplicate key", key_column);
    sc.expect('=');
    Rational v = sc.value();
    if (!sc.at_end()) sc.fail("trailing characters");
    if (kind == 1) {
      p.set_sin(k, v);
    } else if (k == 0) {
      p.set_a0(v);
    } else {
      p.set_cos(k, v);
    }
  });
  return p;
}

SphericalSupport parse_spherical(std::string_view text) {
  SphericalSupport h;
  std::set<std::tuple<int, int, char>> seen;
  for_each_line(text, [&](LineScanner& sc) {
    const std::size_t key_column = (sc.skip_space(), sc.column());
    if (sc.word() != "Y") sc.fail_at("unknown key", key_column);
    int l = sc.integer();
    int m = sc.integer();
    if (m > l) sc.fail("m must not exceed l");
    std::string ab = sc.word();
    if (ab != "a" && ab != "b") sc.fail("expected 'a' or 'b'");
    if (!seen.insert({l, m, ab[0]}).second) sc.fail_at("duplicate key", key_column);
    sc.expect('=');
    Rational v = sc.value();
    if (!sc.at_end()) sc.fail("trailing characters");
    if (ab == "a") {
      h.set_a(l, m, v);
    } else {
      if (m == 0 && v != 0) sc.fail_at("b coefficient with m = 0 must be zero", key_column);
      h.set_b(l, m, v);
    }
  });
  return h;
}

std::string format_support(const TrigPoly& p) {
  std::string out;
  if (p.a0() != 0) out += "a0 = " + to_string(p.a0()) + "\n";
  for (int k = 1; k <= p.degree(); ++k) {
    if (p.a(k) != 0) out += "cos " + std::to_string(k) + " = " + to_string(p.a(k)) + "\n";
    if (p.b(k) != 0) out += "sin " + std::to_string(k) + " = " + to_string(p.b(k)) + "\n";
  }
  return out;
}

std::string format_spherical(const SphericalSupport& h) {
  std::string out;
  for (const auto& [key, ab] : h.coefficients()) {
    const std::string tag = "Y " + std::to_string(key.first) + " " + std::to_string(key.second);
    if (ab.first != 0) out += tag + " a = " + to_string(ab.first) + "\n";
    if (ab.second != 0) out += tag + " b = " + to_string(ab.second) + "\n";
  }
  return out;
}

}  // namespace trigimpl
