#pragma once

#include <vector>

#include "heaporth/multipoly.hpp"
#include "heaporth/unipoly.hpp"

namespace heaporth {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

// Fraction-free (Bareiss) elimination with row pivoting. Every division is
// exact in the polynomial ring. The empty matrix has determinant 1.
MultiPoly bareiss_determinant(PolyMatrix m);

// Determinant of `top` (n rows, n+1 columns) bordered by the row
// (1, x, ..., x^n), by cofactor expansion along that row.
UniPoly bordered_determinant(const PolyMatrix& top);

// Plain cofactor expansion; the independent route used by tests.
MultiPoly laplace_determinant(const PolyMatrix& m);

}  // namespace heaporth
