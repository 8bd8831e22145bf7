#pragma once

// Open books whose monodromy is a product of signed Dehn twists, described
// purely by algebraic intersection numbers on the page S (with its own
// orientation). Twist k meets arc j in T_k . a_j and twist m in T_k . T_m.

#include <optional>
#include <utility>
#include <vector>

#include "tbcalc/heegaard.hpp"
#include "tbcalc/integer_matrix.hpp"
#include "tbcalc/tb_result.hpp"

namespace tbcalc {

class PageSurface {
public:
    /// Throws InputError unless boundary_components >= 1.
    PageSurface(std::size_t genus, std::size_t boundary_components);

    std::size_t genus() const noexcept { return genus_; }
    std::size_t boundary_components() const noexcept { return boundary_; }
    /// Size of an arc basis: 2 genus + r - 1.
    std::size_t arc_count() const noexcept { return 2 * genus_ + boundary_ - 1; }

    friend bool operator==(const PageSurface&, const PageSurface&) = default;

private:
    std::size_t genus_;
    std::size_t boundary_;
};

struct DehnTwist {
    int sign = 1;                 // +1 or -1
    IntegerVector arc_pairings;   // entry j = T . a_j

    friend bool operator==(const DehnTwist&, const DehnTwist&) = default;
};

struct PageKnot {
    IntegerVector arc_pairings;   // A, entry i = K . a_i

    friend bool operator==(const PageKnot&, const PageKnot&) = default;
};

/// (S, phi = T_l^{e_l} o ... o T_1^{e_1}). Twists are listed in application
/// order: twists[0] acts first.
class OpenBookPresentation {
public:
    /// Validates sign values, arc-pairing lengths, and skew-symmetry of the
    /// l x l twist pairing matrix. Throws InputError naming the field.
    OpenBookPresentation(PageSurface page, std::vector<DehnTwist> twists, IntegerMatrix twist_pairings);

    const PageSurface& page() const noexcept { return page_; }
    const std::vector<DehnTwist>& twists() const noexcept { return twists_; }
    /// Entry (k, m) = T_k . T_m
    const IntegerMatrix& twist_pairings() const noexcept { return twist_pairings_; }
    std::size_t arc_count() const noexcept { return page_.arc_count(); }
    std::size_t twist_count() const noexcept { return twists_.size(); }

    friend bool operator==(const OpenBookPresentation&, const OpenBookPresentation&) = default;

private:
    PageSurface page_;
    std::vector<DehnTwist> twists_;
    IntegerMatrix twist_pairings_;
};

/// Homology class a_j + sum_m v_m T_m of a partially twisted basis arc.
struct ArcImage {
    std::size_t base_arc = 0;
    IntegerVector twist_coefficients;  // v, one per twist curve
};

/// Applies twist `twist_index` (0-based) to the class: alpha + e (T . alpha) T.
ArcImage twist_image(const ArcImage& image, std::size_t twist_index, const OpenBookPresentation& ob);

/// C with c_ij = phi(a_j) . a_i on S, obtained by pushing every basis arc
/// through the twists in order. O(l (l + n)) per arc.
IntegerMatrix monodromy_matrix(const OpenBookPresentation& ob);

/// Largest twist count accepted by monodromy_matrix_reference.
inline constexpr std::size_t kReferenceTwistLimit = 20;

/// Direct evaluation of the nested sum over increasing index chains
/// k_1 < ... < k_m. Exponential in l; throws InputError for l > 20.
IntegerMatrix monodromy_matrix_reference(const OpenBookPresentation& ob);

/// tb_Q(K) = -<E, A>/d, with d the order of A modulo the image of C.
/// nullopt for infinite order. Throws InputError on a length mismatch.
std::optional<TbResult> tb_open_book(const OpenBookPresentation& ob, const PageKnot& knot);

/// Positive (sign = +1) or negative Hopf-band stabilization: one more
/// boundary component and arc, one boundary-parallel twist disjoint from the
/// others meeting only the new arc, and the knot crossing the new arc once.
std::pair<OpenBookPresentation, PageKnot> stabilize(const OpenBookPresentation& ob, const PageKnot& knot,
                                                   int sign);

/// Heegaard diagram on the double of the page. Relations are -C because
/// the second copy of S carries the opposite orientation; I = A and the
/// knot misses the dividing set.
HeegaardData to_heegaard(const OpenBookPresentation& ob, const PageKnot& knot);

}  // namespace tbcalc
