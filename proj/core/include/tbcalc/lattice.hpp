#pragma once

// Exact integer linear algebra over arbitrary-precision integers.
//
// Everything here is a pure function of its arguments. Zero-dimensional
// matrices are accepted throughout and yield vacuous results.

#include <optional>
#include <vector>

#include "tbcalc/integer_matrix.hpp"

namespace tbcalc {

/// D = U * M * V with U, V unimodular and D in Smith normal form:
/// diagonal, nonnegative, each diagonal entry divides the next, and exactly
/// the first `rank` diagonal entries are nonzero.
struct SmithDecomposition {
    IntegerMatrix U;  // rows x rows
    IntegerMatrix V;  // cols x cols
    IntegerMatrix D;  // rows x cols
    std::size_t rank = 0;
};

/// A certificate that A has order d modulo the column image of C:
/// C * solution == order * A, and no smaller positive order admits a solution.
struct OrderCertificate {
    Integer order;
    IntegerVector solution;
};

/// Pivots on the smallest nonzero absolute value; quotients are truncating
/// and signs are normalized on rows of U. For -M this yields the same D and
/// V, with the first `rank` rows of U negated.
SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// Some E with C * E == b, or nullopt when b is not in the integer column
/// span of C. The particular solution has zero kernel component in the
/// transformed basis. Throws InputError when b.size() != C.rows().
std::optional<IntegerVector> solve_integer(const IntegerMatrix& c, const IntegerVector& b);

/// Basis of the integer kernel lattice {x in Z^cols : C x = 0}.
std::vector<IntegerVector> kernel_basis(const IntegerMatrix& c);

/// Minimal d > 0 with d * A in the column image of C, together with a
/// solution. nullopt when A has infinite order in coker C.
std::optional<OrderCertificate> minimal_order(const IntegerMatrix& c, const IntegerVector& a);

/// Diagonal of the Smith form padded with zeros to length rows(M). The
/// cokernel of M is the sum of Z/f over the returned factors f.
std::vector<Integer> invariant_factors(const IntegerMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntegerMatrix& m);

}  // namespace tbcalc
