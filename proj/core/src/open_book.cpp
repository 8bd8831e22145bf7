#include "tbcalc/open_book.hpp"

#include <string>

#include "tbcalc/error.hpp"
#include "tbcalc/lattice.hpp"

namespace tbcalc {
namespace {

std::string index_path(const char* field, std::size_t k) {
    return std::string(field) + "[" + std::to_string(k) + "]";
}

void check_knot(const OpenBookPresentation& ob, const PageKnot& knot) {
    if (knot.arc_pairings.size() != ob.arc_count())
        throw InputError("knot.arcs: expected length " + std::to_string(ob.arc_count()) + ", got " +
                         std::to_string(knot.arc_pairings.size()));
}

}  // namespace

PageSurface::PageSurface(std::size_t genus, std::size_t boundary_components)
    : genus_(genus), boundary_(boundary_components) {
    if (boundary_ == 0) throw InputError("page.boundary: a page needs at least one boundary component");
}

OpenBookPresentation::OpenBookPresentation(PageSurface page, std::vector<DehnTwist> twists,
                                           IntegerMatrix twist_pairings)
    : page_(page), twists_(std::move(twists)), twist_pairings_(std::move(twist_pairings)) {
    const std::size_t n = page_.arc_count();
    const std::size_t l = twists_.size();
    for (std::size_t k = 0; k < l; ++k) {
        const DehnTwist& t = twists_[k];
        if (t.sign != 1 && t.sign != -1)
            throw InputError(index_path("twists", k) + ".sign: must be +1 or -1");
        if (t.arc_pairings.size() != n)
            throw InputError(index_path("twists", k) + ".arcs: expected length " + std::to_string(n) +
                             ", got " + std::to_string(t.arc_pairings.size()));
    }
    if (twist_pairings_.rows() != l || twist_pairings_.cols() != l)
        throw InputError("twist_pairings: expected a " + std::to_string(l) + "x" + std::to_string(l) +
                         " matrix, got " + std::to_string(twist_pairings_.rows()) + "x" +
                         std::to_string(twist_pairings_.cols()));
    for (std::size_t k = 0; k < l; ++k)
        for (std::size_t m = k; m < l; ++m)
            if (twist_pairings_(k, m) != -twist_pairings_(m, k))
                throw InputError(index_path("twist_pairings", k) + "[" + std::to_string(m) +
                                 "]: skew-symmetry violated" +
                                 (k == m ? " (diagonal entries must be 0)" : ""));
}

ArcImage twist_image(const ArcImage& image, std::size_t twist_index, const OpenBookPresentation& ob) {
    if (twist_index >= ob.twist_count())
        throw InputError("twist_image: twist index " + std::to_string(twist_index) + " out of range");
    if (image.twist_coefficients.size() != ob.twist_count() || image.base_arc >= ob.arc_count())
        throw InputError("twist_image: class does not match the open book");

    const DehnTwist& twist = ob.twists()[twist_index];
    Integer pairing = twist.arc_pairings[image.base_arc];
    for (std::size_t m = 0; m < ob.twist_count(); ++m)
        pairing += image.twist_coefficients[m] * ob.twist_pairings()(twist_index, m);

    ArcImage out = image;
    out.twist_coefficients[twist_index] += twist.sign * pairing;
    return out;
}

IntegerMatrix monodromy_matrix(const OpenBookPresentation& ob) {
    const std::size_t n = ob.arc_count();
    const std::size_t l = ob.twist_count();
    IntegerMatrix c(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        ArcImage image{j, IntegerVector(l)};
        for (std::size_t k = 0; k < l; ++k) image = twist_image(image, k, ob);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t m = 0; m < l; ++m)
                c(i, j) += image.twist_coefficients[m] * ob.twists()[m].arc_pairings[i];
    }
    return c;
}

IntegerMatrix monodromy_matrix_reference(const OpenBookPresentation& ob) {
    const std::size_t n = ob.arc_count();
    const std::size_t l = ob.twist_count();
    if (l > kReferenceTwistLimit)
        throw InputError("monodromy_matrix_reference: " + std::to_string(l) + " twists exceed the limit of " +
                         std::to_string(kReferenceTwistLimit));

    const auto& twists = ob.twists();
    const auto& tt = ob.twist_pairings();
    IntegerMatrix c(n, n);
    std::vector<std::size_t> chain;
    for (unsigned long mask = 1; mask < (1UL << l); ++mask) {
        chain.clear();
        for (std::size_t k = 0; k < l; ++k)
            if (mask & (1UL << k)) chain.push_back(k);

        // e_{k_1} ... e_{k_m} (T_{k_m} . T_{k_{m-1}}) ... (T_{k_2} . T_{k_1})
        Integer weight = 1;
        for (std::size_t k : chain) weight *= twists[k].sign;
        for (std::size_t s = 1; s < chain.size() && weight != 0; ++s) weight *= tt(chain[s], chain[s - 1]);
        if (weight == 0) continue;

        const DehnTwist& first = twists[chain.front()];
        const DehnTwist& last = twists[chain.back()];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) c(i, j) += weight * first.arc_pairings[j] * last.arc_pairings[i];
    }
    return c;
}

std::optional<TbResult> tb_open_book(const OpenBookPresentation& ob, const PageKnot& knot) {
    check_knot(ob, knot);
    const IntegerMatrix c = monodromy_matrix(ob);
    const IntegerVector& a = knot.arc_pairings;
    auto cert = minimal_order(c, a);
    if (!cert) return std::nullopt;

    TbResult result;
    result.order = cert->order;
    result.tb = Rational(Integer(-dot(cert->solution, a)), cert->order);
    result.tb.canonicalize();
    result.certificate = std::move(cert->solution);
    result.kernel_orthogonal = true;
    for (const auto& k : kernel_basis(c))
        if (dot(k, a) != 0) result.kernel_orthogonal = false;
    return result;
}

std::pair<OpenBookPresentation, PageKnot> stabilize(const OpenBookPresentation& ob, const PageKnot& knot,
                                                   int sign) {
    if (sign != 1 && sign != -1) throw InputError("stabilize: sign must be +1 or -1");
    check_knot(ob, knot);

    const std::size_t l = ob.twist_count();
    PageSurface page(ob.page().genus(), ob.page().boundary_components() + 1);
    const std::size_t n = page.arc_count();

    std::vector<DehnTwist> twists = ob.twists();
    for (auto& t : twists) t.arc_pairings.emplace_back(0);
    DehnTwist added{sign, IntegerVector(n)};
    added.arc_pairings.back() = 1;
    twists.push_back(std::move(added));

    IntegerMatrix pairings(l + 1, l + 1);
    for (std::size_t k = 0; k < l; ++k)
        for (std::size_t m = 0; m < l; ++m) pairings(k, m) = ob.twist_pairings()(k, m);

    PageKnot stabilized = knot;
    stabilized.arc_pairings.emplace_back(1);
    return {OpenBookPresentation(page, std::move(twists), std::move(pairings)), std::move(stabilized)};
}

HeegaardData to_heegaard(const OpenBookPresentation& ob, const PageKnot& knot) {
    check_knot(ob, knot);
    return HeegaardData(ob.arc_count(), -monodromy_matrix(ob), knot.arc_pairings, knot.arc_pairings, 0);
}

}  // namespace tbcalc
