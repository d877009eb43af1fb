#include "trigimpl/exact/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "trigimpl/errors.hpp"

namespace trigimpl {

namespace {

struct ExponentHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto v : e) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned s = unsigned(a[i]) + b[i];
    if (s > 0xffffu) throw MathError("exponent overflow");
    r[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

bool divides(const Exponents& d, const Exponents& e) {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (d[i] > e[i]) return false;
  return true;
}

Exponents sub(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < kMaxVariables; ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  return r;
}

void sort_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.exponents, b.exponents); });
}

}  // namespace

int total_degree(const Exponents& e) {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

bool grlex_greater(const Exponents& a, const Exponents& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

// ---------------------------------------------------------------- Variables

Variables::Variables() : names_(std::make_shared<const std::vector<std::string>>()) {}

Variables::Variables(std::initializer_list<std::string> names) : Variables(std::vector<std::string>(names)) {}

Variables::Variables(std::vector<std::string> names) {
  if (names.size() > kMaxVariables) throw MathError("too many variables (max " + std::to_string(kMaxVariables) + ")");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw MathError("empty variable name");
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw MathError("duplicate variable '" + names[i] + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> Variables::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

std::size_t Variables::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw MathError("unknown variable '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(Variables vars) : vars_(std::move(vars)) {}

MultiPoly::MultiPoly(Variables vars, Rational constant) : vars_(std::move(vars)) {
  constant.canonicalize();
  if (constant != 0) terms_.push_back({Exponents{}, std::move(constant)});
}

MultiPoly MultiPoly::variable(const Variables& vars, std::string_view name) {
  return variable(vars, vars.index(name));
}

MultiPoly MultiPoly::variable(const Variables& vars, std::size_t index) {
  if (index >= vars.size()) throw MathError("variable index out of range");
  Exponents e{};
  e[index] = 1;
  return monomial(vars, e, Rational(1));
}

MultiPoly MultiPoly::monomial(const Variables& vars, const Exponents& exponents, Rational coefficient) {
  for (std::size_t i = vars.size(); i < kMaxVariables; ++i)
    if (exponents[i] != 0) throw MathError("exponent beyond variable count");
  MultiPoly p(vars);
  coefficient.canonicalize();
  if (coefficient != 0) p.terms_.push_back({exponents, std::move(coefficient)});
  return p;
}

MultiPoly MultiPoly::from_terms(const Variables& vars, std::vector<Term> terms) {
  MultiPoly p(vars);
  for (const auto& t : terms)
    for (std::size_t i = vars.size(); i < kMaxVariables; ++i)
      if (t.exponents[i] != 0) throw MathError("exponent beyond variable count");
  for (auto& t : terms) t.coefficient.canonicalize();
  sort_terms(terms);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponents == t.exponents) {
      p.terms_.back().coefficient += t.coefficient;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
  return p;
}

MultiPoly MultiPoly::from_coefficients(const Variables& vars, std::size_t var, std::span<const MultiPoly> coeffs) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    if (!(coeffs[k].variables() == vars)) throw MathError("coefficient ring mismatch");
    if (coeffs[k].depends_on(var)) throw MathError("coefficient depends on the main variable");
    for (const auto& t : coeffs[k].terms()) {
      Term nt = t;
      nt.exponents[var] = static_cast<std::uint16_t>(k);
      terms.push_back(std::move(nt));
    }
  }
  return from_terms(vars, std::move(terms));
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw MathError("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_.front().coefficient;
}

const Rational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw MathError("zero polynomial");
  return terms_.front().coefficient;
}

const Exponents& MultiPoly::leading_exponents() const {
  if (terms_.empty()) throw MathError("zero polynomial");
  return terms_.front().exponents;
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : trigimpl::total_degree(terms_.front().exponents);
}

int MultiPoly::degree(std::size_t var) const {
  if (var >= vars_.size()) throw MathError("variable index out of range");
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, t.exponents[var]);
  return d;
}

std::vector<std::size_t> MultiPoly::support() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vars_.size(); ++v)
    if (depends_on(v)) out.push_back(v);
  return out;
}

void MultiPoly::require_same_ring(const MultiPoly& o) const {
  if (!(vars_ == o.vars_)) throw MathError("polynomials over different variable sets");
}

void MultiPoly::add_scaled(const MultiPoly& o, bool negate) {
  if (o.terms_.empty()) return;
  if (terms_.empty() && vars_.size() == 0 && o.vars_.size() != 0) vars_ = o.vars_;
  require_same_ring(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && grlex_greater(a->exponents, b->exponents))) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == terms_.end() || grlex_greater(b->exponents, a->exponents)) {
      out.push_back(negate ? Term{b->exponents, -b->coefficient} : *b);
      ++b;
    } else {
      Rational c = negate ? Rational(a->coefficient - b->coefficient) : Rational(a->coefficient + b->coefficient);
      if (c != 0) out.push_back({a->exponents, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  add_scaled(o, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  add_scaled(o, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) {
    return MultiPoly(a.vars_.size() >= b.vars_.size() ? a.vars_ : b.vars_);
  }
  a.require_same_ring(b);
  MultiPoly r(a.vars_);
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const MultiPoly& mono = a.terms_.size() == 1 ? a : b;
    const MultiPoly& other = a.terms_.size() == 1 ? b : a;
    const Term& m = mono.terms_.front();
    r.terms_.reserve(other.terms_.size());
    // Multiplying by a monomial preserves the term order.
    for (const auto& t : other.terms_) r.terms_.push_back({add(t.exponents, m.exponents), t.coefficient * m.coefficient});
    return r;
  }
  std::unordered_map<Exponents, Rational, ExponentHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Rational prod;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      mpq_mul(prod.get_mpq_t(), ta.coefficient.get_mpq_t(), tb.coefficient.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(add(ta.exponents, tb.exponents), prod);
      if (!inserted) it->second += prod;
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.push_back({e, std::move(c)});
  sort_terms(r.terms_);
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

MultiPoly operator-(MultiPoly a) {
  for (auto& t : a.terms_) t.coefficient = -t.coefficient;
  return a;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  if (!(a.vars_ == b.vars_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exponents != b.terms_[i].exponents || a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  return true;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result(vars_, Rational(1));
  MultiPoly base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= vars_.size()) throw MathError("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exponents[var] == 0) continue;
    Term d = t;
    d.coefficient *= t.exponents[var];
    d.exponents[var] -= 1;
    out.push_back(std::move(d));
  }
  return from_terms(vars_, std::move(out));
}

MultiPoly MultiPoly::shifted(std::size_t var, unsigned k) const {
  Exponents e{};
  e[var] = static_cast<std::uint16_t>(k);
  return *this * monomial(vars_, e, Rational(1));
}

std::vector<MultiPoly> MultiPoly::coefficients(std::size_t var) const {
  int d = degree(var);
  std::vector<std::vector<Term>> buckets(d + 1);
  for (const auto& t : terms_) {
    Term c = t;
    c.exponents[var] = 0;
    buckets[t.exponents[var]].push_back(std::move(c));
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    out.push_back(from_terms(vars_, std::move(b)));
  }
  return out;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
  if (!value.is_zero()) require_same_ring(value);
  auto coeffs = coefficients(var);
  MultiPoly result(vars_);
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    result = result * value;
    result += coeffs[k];
  }
  return result;
}

MultiPoly MultiPoly::evaluate_at(std::size_t var, const Rational& value) const {
  if (var >= vars_.size()) throw MathError("variable index out of range");
  int d = degree(var);
  std::vector<Rational> powers(std::max(d, 0) + 1);
  powers[0] = 1;
  for (int k = 1; k <= d; ++k) powers[k] = powers[k - 1] * value;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term n = t;
    n.coefficient *= powers[t.exponents[var]];
    n.exponents[var] = 0;
    out.push_back(std::move(n));
  }
  return from_terms(vars_, std::move(out));
}

namespace {

template <class Value>
Value evaluate_terms(const std::vector<Term>& terms, std::size_t nvars, std::span<const Value> point) {
  if (point.size() != nvars) throw MathError("evaluation point has wrong dimension");
  std::vector<std::vector<Value>> powers(nvars);
  for (std::size_t v = 0; v < nvars; ++v) powers[v].push_back(Value(Rational(1)));
  Value sum(Rational(0));
  for (const auto& t : terms) {
    Value term(t.coefficient);
    for (std::size_t v = 0; v < nvars; ++v) {
      auto e = t.exponents[v];
      if (e == 0) continue;
      auto& pw = powers[v];
      while (pw.size() <= e) pw.push_back(pw.back() * point[v]);
      term = term * pw[e];
    }
    sum = sum + term;
  }
  return sum;
}

template <class Value>
std::vector<Value> point_from_map(const Variables& vars, const std::map<std::string, Value>& point) {
  std::vector<Value> values;
  for (const auto& name : vars) {
    auto it = point.find(name);
    if (it == point.end()) throw MathError("no value assigned to variable '" + name + "'");
    values.push_back(it->second);
  }
  return values;
}

}  // namespace

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  return evaluate_terms<Rational>(terms_, vars_.size(), point);
}

GaussianRational MultiPoly::evaluate(std::span<const GaussianRational> point) const {
  return evaluate_terms<GaussianRational>(terms_, vars_.size(), point);
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& point) const {
  auto values = point_from_map(vars_, point);
  return evaluate(std::span<const Rational>(values));
}

GaussianRational MultiPoly::evaluate(const std::map<std::string, GaussianRational>& point) const {
  auto values = point_from_map(vars_, point);
  return evaluate(std::span<const GaussianRational>(values));
}

MultiPoly MultiPoly::with_variables(const Variables& target) const {
  if (vars_ == target) return *this;
  std::vector<std::optional<std::size_t>> map(vars_.size());
  for (std::size_t v = 0; v < vars_.size(); ++v) map[v] = target.find(vars_[v]);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term n{Exponents{}, t.coefficient};
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (t.exponents[v] == 0) continue;
      if (!map[v]) throw MathError("variable '" + vars_[v] + "' missing from target ring");
      n.exponents[*map[v]] = t.exponents[v];
    }
    out.push_back(std::move(n));
  }
  return from_terms(target, std::move(out));
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coefficient < 0;
    Rational magnitude = abs(t.coefficient);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string monomial;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (t.exponents[v] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += vars_[v];
      if (t.exponents[v] > 1) monomial += "^" + std::to_string(t.exponents[v]);
    }
    if (monomial.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += monomial;
    } else {
      out += magnitude.get_str() + "*" + monomial;
    }
  }
  return out;
}

MultiPoly MultiPoly::parse(std::string_view text, const Variables& vars) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) -> MathError {
    return MathError("polynomial parse error at offset " + std::to_string(pos) + ": " + msg);
  };
  std::vector<Term> terms;
  skip();
  if (pos == text.size()) throw fail("empty input");
  bool expect_term = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    bool negative = false;
    bool saw_sign = false;
    while (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      negative ^= text[pos] == '-';
      saw_sign = true;
      ++pos;
      skip();
    }
    if (!expect_term && !saw_sign) throw fail("expected '+' or '-'");
    expect_term = false;
    Term term{Exponents{}, Rational(1)};
    bool any = false;
    // coefficient
    if (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) {
      std::size_t start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.' ||
                                   text[pos] == '/'))
        ++pos;
      term.coefficient = parse_rational(text.substr(start, pos - start));
      any = true;
    }
    while (true) {
      skip();
      std::size_t save = pos;
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
      }
      if (pos >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
        if (save != pos) throw fail("dangling '*'");
        break;
      }
      // longest variable name that matches here
      std::optional<std::size_t> best;
      for (std::size_t v = 0; v < vars.size(); ++v) {
        const auto& name = vars[v];
        if (text.substr(pos, name.size()) == name && (!best || name.size() > vars[*best].size())) best = v;
      }
      if (!best) throw fail("unknown variable");
      pos += vars[*best].size();
      unsigned exponent = 1;
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw fail("missing exponent");
        exponent = static_cast<unsigned>(std::stoul(std::string(text.substr(start, pos - start))));
      }
      unsigned e = term.exponents[*best] + exponent;
      if (e > 0xffffu) throw fail("exponent too large");
      term.exponents[*best] = static_cast<std::uint16_t>(e);
      any = true;
    }
    if (!any) throw fail("expected a term");
    if (negative) term.coefficient = -term.coefficient;
    terms.push_back(std::move(term));
  }
  if (expect_term) throw fail("expected a term");
  return from_terms(vars, std::move(terms));
}

// ---------------------------------------------------------------- division

std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw MathError("division by zero polynomial");
  if (a.is_zero()) return MultiPoly(b.variables());
  if (!(a.variables() == b.variables())) throw MathError("polynomials over different variable sets");
  const Variables& vars = a.variables();
  const Term& lead = b.terms().front();
  if (b.size() == 1) {
    std::vector<Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!divides(lead.exponents, t.exponents)) return std::nullopt;
      out.push_back({sub(t.exponents, lead.exponents), t.coefficient / lead.coefficient});
    }
    return MultiPoly::from_terms(vars, std::move(out));
  }
  std::map<Exponents, Rational, GrlexGreater> rem;
  for (const auto& t : a.terms()) rem.emplace(t.exponents, t.coefficient);
  std::vector<Term> quotient;
  const int lead_degree = total_degree(lead.exponents);
  Rational scaled;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (total_degree(it->first) < lead_degree || !divides(lead.exponents, it->first)) return std::nullopt;
    Term q{sub(it->first, lead.exponents), it->second / lead.coefficient};
    rem.erase(it);
    for (std::size_t i = 1; i < b.size(); ++i) {
      const Term& t = b.terms()[i];
      mpq_mul(scaled.get_mpq_t(), q.coefficient.get_mpq_t(), t.coefficient.get_mpq_t());
      auto [pos, inserted] = rem.try_emplace(add(t.exponents, q.exponents), -scaled);
      if (!inserted) {
        pos->second -= scaled;
        if (pos->second == 0) rem.erase(pos);
      }
    }
    quotient.push_back(std::move(q));
  }
  return MultiPoly::from_terms(vars, std::move(quotient));
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw MathError("inexact division");
  return std::move(*q);
}

Rational rational_content(const MultiPoly& p) {
  if (p.is_zero()) return Rational(0);
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coefficient.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.get_den_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

MultiPoly normalized(const MultiPoly& p) {
  if (p.is_zero()) return p;
  Rational c = rational_content(p);
  if (p.leading_coefficient() < 0) c = -c;
  Rational inv = 1 / c;
  return p * inv;
}

}  // namespace trigimpl
