#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trigimpl/exact/rational.hpp"

namespace trigimpl {

inline constexpr std::size_t kMaxVariables = 8;

/// Exponent vector indexed by variable position; slots past the variable
/// count stay zero.
using Exponents = std::array<std::uint16_t, kMaxVariables>;

int total_degree(const Exponents& e);

/// Graded lexicographic order: total degree first, ties broken
/// lexicographically with the first declared variable most significant.
bool grlex_greater(const Exponents& a, const Exponents& b);

struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const { return grlex_greater(a, b); }
};

/// Ordered list of variable names shared between polynomials of the same
/// ring. Cheap to copy.
class Variables {
 public:
  Variables();
  Variables(std::initializer_list<std::string> names);
  explicit Variables(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Position of `name`; throws MathError when absent.
  std::size_t index(std::string_view name) const;
  const std::vector<std::string>& names() const { return *names_; }

  auto begin() const { return names_->begin(); }
  auto end() const { return names_->end(); }

  friend bool operator==(const Variables& a, const Variables& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

struct Term {
  Exponents exponents{};
  Rational coefficient;
};

/// Sparse multivariate polynomial with rational coefficients over a named,
/// ordered variable set. Terms are kept in descending graded-lex order with
/// no stored zeros, so equal polynomials have identical representations.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(Variables vars);
  MultiPoly(Variables vars, Rational constant);

  static MultiPoly variable(const Variables& vars, std::string_view name);
  static MultiPoly variable(const Variables& vars, std::size_t index);
  static MultiPoly monomial(const Variables& vars, const Exponents& exponents, Rational coefficient);
  /// Merges duplicate exponents and drops zeros.
  static MultiPoly from_terms(const Variables& vars, std::vector<Term> terms);
  /// sum_k coeffs[k] * var^k; each coefficient must be free of `var`.
  static MultiPoly from_coefficients(const Variables& vars, std::size_t var, std::span<const MultiPoly> coeffs);

  /// Parses text such as "16777216*x^8 - 3/2*x*y + 7" or the juxtaposed
  /// form "-469762048y^6+1269789696y^2". Throws MathError on unknown
  /// variables or malformed input.
  static MultiPoly parse(std::string_view text, const Variables& vars);

  const Variables& variables() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (0 for zero); throws when not constant.
  Rational constant_value() const;
  const Rational& leading_coefficient() const;
  const Exponents& leading_exponents() const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree(std::size_t var) const;
  int degree(std::string_view name) const { return degree(vars_.index(name)); }
  bool depends_on(std::size_t var) const { return degree(var) > 0; }
  /// Variables that occur with positive exponent.
  std::vector<std::size_t> support() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator-(MultiPoly a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned exponent) const;
  MultiPoly derivative(std::size_t var) const;
  /// Multiplies by the monomial var^k.
  MultiPoly shifted(std::size_t var, unsigned k) const;

  /// Coefficients with respect to `var`, indexed by power (empty for zero).
  std::vector<MultiPoly> coefficients(std::size_t var) const;
  /// Replaces `var` by `value` (same variable set).
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
  /// Replaces `var` by a number, keeping the variable set.
  MultiPoly evaluate_at(std::size_t var, const Rational& value) const;
  Rational evaluate(std::span<const Rational> point) const;
  GaussianRational evaluate(std::span<const GaussianRational> point) const;
  Rational evaluate(const std::map<std::string, Rational>& point) const;
  GaussianRational evaluate(const std::map<std::string, GaussianRational>& point) const;

  /// Re-expresses the polynomial over another variable list; every
  /// variable that occurs must be present in `target`.
  MultiPoly with_variables(const Variables& target) const;

  /// Canonical text: descending graded-lex, explicit '*' and '^'.
  std::string to_string() const;

 private:
  void require_same_ring(const MultiPoly& o) const;
  void add_scaled(const MultiPoly& o, bool negate);

  Variables vars_;
  std::vector<Term> terms_;
};

/// a / b when b divides a exactly, std::nullopt otherwise.
std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b);
/// a / b; throws MathError("inexact division") when b does not divide a.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

/// Canonical representative of the class {c * p : c != 0}: integer
/// coefficients with gcd 1 and a positive graded-lex leading coefficient.
/// The zero polynomial is returned unchanged.
MultiPoly normalized(const MultiPoly& p);

/// Positive rational c such that p / c has coprime integer coefficients.
Rational rational_content(const MultiPoly& p);

}  // namespace trigimpl
