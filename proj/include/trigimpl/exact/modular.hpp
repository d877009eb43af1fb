#pragma once

#include <cstdint>
#include <vector>

#include "trigimpl/exact/upoly.hpp"

namespace trigimpl {

/// Primes just below 2^62, in decreasing order, generated on first use.
std::uint64_t modular_prime(std::size_t index);

/// Polynomial in an outer variable with coefficients in Z[t]; entry k
/// multiplies the k-th power.
using ZPolyCoeffs = std::vector<ZPoly>;

/// Upper bound on deg_t Res(a, b) for the Sylvester matrix read at formal
/// degrees fa, fb.
int resultant_degree_bound(const ZPolyCoeffs& a, const ZPolyCoeffs& b, int fa, int fb);

/// Res(a, b) in the outer variable at formal degrees fa, fb, as an exact
/// element of Z[t]. Determinants are taken modulo word-size primes at
/// enough points to fix the degree, and the coefficients are lifted by
/// Chinese remaindering past a Hadamard bound, so the result is exact.
ZPoly modular_resultant(const ZPolyCoeffs& a, const ZPolyCoeffs& b, int fa, int fb);

}  // namespace trigimpl
