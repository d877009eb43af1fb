#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "trigimpl/exact/multipoly.hpp"

namespace trigimpl {

/// Greatest common divisor over Q in all variables, normalized (integer
/// coefficients, content 1, positive leading coefficient). gcd(0, 0)
/// throws MathError("gcd undefined").
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// gcd of p and q in `var` over the fraction field of the other
/// variables: the full gcd with every factor free of `var` removed.
MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q, std::size_t var);
MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q, std::string_view var);

/// Content with respect to `var`, scaled so that p = content * primitive
/// part holds exactly with a normalized primitive part. Throws
/// MathError("zero polynomial") for p = 0.
MultiPoly content(const MultiPoly& p, std::size_t var);
MultiPoly primitive_part(const MultiPoly& p, std::size_t var);

/// Content of p viewed as a polynomial in `vars` with coefficients in the
/// remaining variables: the normalized gcd of those coefficients.
MultiPoly content_in(const MultiPoly& p, std::span<const std::size_t> vars);
/// p divided by content_in(p, vars), normalized.
MultiPoly primitive_part_in(const MultiPoly& p, std::span<const std::size_t> vars);

MultiPoly lcm(const MultiPoly& a, const MultiPoly& b);

/// Square-free g with g^r = c * p for a rational c != 0, normalized.
/// Throws MathError("not a perfect power") otherwise.
MultiPoly rth_root(const MultiPoly& p, unsigned r);

}  // namespace trigimpl
