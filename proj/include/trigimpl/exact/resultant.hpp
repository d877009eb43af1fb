#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "trigimpl/exact/matrix.hpp"
#include "trigimpl/exact/multipoly.hpp"

namespace trigimpl {

enum class ResultantMethod { sylvester, bezout };

/// Sylvester matrix of p and q in `var`: deg(q) rows of p coefficients
/// followed by deg(p) rows of q coefficients, leading coefficients first.
/// Formal degrees may exceed the actual ones (leading zero coefficients),
/// which keeps the matrix shape stable under later specialization.
Matrix<MultiPoly> sylvester_matrix(const MultiPoly& p, const MultiPoly& q, std::size_t var,
                                   std::optional<int> formal_degree_p = std::nullopt,
                                   std::optional<int> formal_degree_q = std::nullopt);

/// Bezout matrix B with (p(s)q(t) - p(t)q(s)) / (s - t) = sum B[i][j] s^i t^j,
/// of size max(deg p, deg q).
Matrix<MultiPoly> bezout_matrix(const MultiPoly& p, const MultiPoly& q, std::size_t var);

/// Determinant of a polynomial matrix. Entries involving at most one
/// variable go through a dense Z[t] elimination; otherwise the sparse
/// multivariate one.
MultiPoly determinant(const Matrix<MultiPoly>& m);

/// Resultant eliminating `var`. Both methods return the Sylvester
/// determinant (rows p-block then q-block); the Bezout route rescales its
/// determinant by the known sign and leading-coefficient factor.
/// Throws MathError for zero inputs or when an input has degree 0 in `var`.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::size_t var,
                    ResultantMethod method = ResultantMethod::sylvester);
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var,
                    ResultantMethod method = ResultantMethod::sylvester);

}  // namespace trigimpl
