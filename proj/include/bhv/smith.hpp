#pragma once

#include <vector>

#include "bhv/poly_matrix.hpp"

namespace bhv {

/// U * G * V = D with U, V unimodular over k[z] (constant nonzero
/// determinants) and D diagonal with monic invariant factors
/// d1 | d2 | ... | ds.
struct SmithForm {
    PolyMatrix U, D, V;
    std::vector<Poly> invariant_factors;
};

/// Euclidean diagonalization over k[z]; requires a univariate ring.
SmithForm smith_normal_form(const PolyMatrix& G);

/// Rank of G over the fraction field k(z1..zn), by fraction-free
/// (Bareiss) elimination. Exact for any number of variables.
int generic_rank(const PolyMatrix& G);

/// Determinant of a square polynomial matrix, fraction-free.
Poly poly_mat_det(const PolyMatrix& G);

/// Quotient and remainder of univariate division.
std::pair<Poly, Poly> poly_divrem_1d(const Poly& a, const Poly& b);

}  // namespace bhv
