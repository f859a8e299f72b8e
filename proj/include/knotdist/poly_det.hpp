#pragma once

// Exact determinants and adjugates of integer and Laurent-polynomial matrices.

#include <cstddef>

#include "knotdist/matrix.hpp"

namespace knotdist {

// Fraction-free (Bareiss) elimination over Z. The 0x0 determinant is 1.
Integer determinant(const IntMatrix& m);

enum class DetMethod {
    // Evaluate at deg+1 integer points, interpolate exactly over Q.
    Interpolation,
    // Fraction-free elimination over Z[t, t^-1] with exact Laurent division.
    Bareiss,
    // Cofactor (Laplace) expansion along the first row.
    Laplace,
};

LaurentPoly determinant(const PolyMatrix& m, DetMethod method = DetMethod::Interpolation);

// Largest size for which adjugate() uses cofactor expansion by default.
inline constexpr std::size_t kLaplaceAdjugateLimit = 6;

// Transpose of the cofactor matrix, so adjugate(m) * m == det(m) * I.
PolyMatrix adjugate(const PolyMatrix& m, DetMethod method);
PolyMatrix adjugate(const PolyMatrix& m);

// (-1)^(i+j) det(minor(i, j)).
LaurentPoly cofactor(const PolyMatrix& m, std::size_t i, std::size_t j, DetMethod method);

}  // namespace knotdist
