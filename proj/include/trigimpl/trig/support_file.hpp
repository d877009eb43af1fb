#pragma once

#include <string_view>

#include "trigimpl/trig/legendre.hpp"
#include "trigimpl/trig/trigpoly.hpp"

namespace trigimpl {

/// Curve support file, one assignment per line:
///   a0 = 1/2
///   cos 3 = 1/16
///   sin 5 = -2/7
/// Blank lines and '#' comments are ignored; whitespace is free ("cos3=1").
/// Throws ParseError with a 1-based line and column.
TrigPoly parse_support(std::string_view text);

/// Spherical support file: lines "Y l m a = value" / "Y l m b = value".
SphericalSupport parse_spherical(std::string_view text);

/// Inverse of the parsers (canonical order, zero entries omitted).
std::string format_support(const TrigPoly& p);
std::string format_spherical(const SphericalSupport& h);

}  // namespace trigimpl
