#pragma once

#include "tbcalc/integer_matrix.hpp"

namespace tbcalc {

/// Outcome of a Thurston-Bennequin computation for a knot of finite order.
struct TbResult {
    /// Order d of the knot class modulo the relations.
    Integer order;
    /// tb for d = 1, tb_Q otherwise. Always canonical (lowest terms).
    Rational tb;
    /// E with C * E = d * A.
    IntegerVector certificate;
    /// The pairing vector is orthogonal to ker C, so tb does not depend on
    /// the choice of E.
    bool kernel_orthogonal = false;

    Integer tb_numerator() const { return tb.get_num(); }
    Integer tb_denominator() const { return tb.get_den(); }
    bool is_integral() const { return tb.get_den() == 1; }
};

/// "p/q", or "p" when q = 1.
std::string format_fraction(const Rational& q);

}  // namespace tbcalc
