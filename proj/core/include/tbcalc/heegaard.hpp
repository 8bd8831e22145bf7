#pragma once

#include <optional>

#include "tbcalc/integer_matrix.hpp"
#include "tbcalc/tb_result.hpp"

namespace tbcalc {

/// A knot on a genus-n convex Heegaard surface, described by intersection
/// numbers. Entry (i, j) of the relation matrix is c'_j . g*_i, so column j
/// expresses the j-th Heegaard curve in the generators g_i.
class HeegaardData {
public:
    /// Throws InputError when C is not genus x genus, a vector has the wrong
    /// length, or the dividing-set count is negative or odd.
    HeegaardData(std::size_t genus, IntegerMatrix relations, IntegerVector knot_generators,
                 IntegerVector knot_relations, Integer dividing_intersections = 0);

    std::size_t genus() const noexcept { return genus_; }
    const IntegerMatrix& relations() const noexcept { return relations_; }
    /// A_i = K . g*_i
    const IntegerVector& knot_generators() const noexcept { return knot_generators_; }
    /// I_i = K . c'_i
    const IntegerVector& knot_relations() const noexcept { return knot_relations_; }
    /// |K cap Gamma|
    const Integer& dividing_intersections() const noexcept { return dividing_; }

    friend bool operator==(const HeegaardData&, const HeegaardData&) = default;

private:
    std::size_t genus_;
    IntegerMatrix relations_;
    IntegerVector knot_generators_;
    IntegerVector knot_relations_;
    Integer dividing_;
};

/// Throws InputError unless C is genus x genus.
void validate_relations(std::size_t genus, const IntegerMatrix& relations);

/// Some E with A = C E; nullopt when the knot is not nullhomologous.
std::optional<IntegerVector> nullhomologous_check(const HeegaardData& h);

/// tb_Q = -|K cap Gamma|/2 + <E, I>/d for the minimal order d; nullopt when
/// the knot has infinite order in H_1.
std::optional<TbResult> tb_heegaard(const HeegaardData& h);

}  // namespace tbcalc
