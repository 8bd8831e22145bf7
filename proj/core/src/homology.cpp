#include "tbcalc/homology.hpp"

#include <sstream>

#include "tbcalc/lattice.hpp"

namespace tbcalc {

AbelianGroup AbelianGroup::from_invariant_factors(const std::vector<Integer>& factors) {
    AbelianGroup g;
    for (const auto& f : factors) {
        Integer a = abs(f);
        if (a == 0)
            ++g.free_rank;
        else if (a != 1)
            g.torsion.push_back(a);
    }
    return g;
}

AbelianGroup AbelianGroup::cokernel(const IntegerMatrix& presentation) {
    return from_invariant_factors(invariant_factors(presentation));
}

std::string AbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "ℤ";
        if (free_rank > 1) os << '^' << free_rank;
        first = false;
    }
    for (const auto& t : torsion) {
        os << (first ? "" : " ⊕ ") << "ℤ/" << t;
        first = false;
    }
    return os.str();
}

AbelianGroup h1_manifold(const IntegerMatrix& relations) { return AbelianGroup::cokernel(relations); }

AbelianGroup h1_manifold(const HeegaardData& h) { return h1_manifold(h.relations()); }

IntegerMatrix complement_presentation(const HeegaardData& h) {
    const std::size_t n = h.genus();
    IntegerMatrix p(n + 1, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p(i, j) = h.relations()(i, j);
    for (std::size_t j = 0; j < n; ++j) p(n, j) = -h.knot_relations()[j];
    return p;
}

AbelianGroup h1_complement(const HeegaardData& h) { return AbelianGroup::cokernel(complement_presentation(h)); }

LemmaVerdict verify_complement_lemma(const HeegaardData& h) {
    if (!nullhomologous_check(h)) return LemmaVerdict::not_applicable;
    const AbelianGroup manifold = h1_manifold(h);
    const AbelianGroup complement = h1_complement(h);
    const bool ok = complement.torsion == manifold.torsion && complement.free_rank == manifold.free_rank + 1;
    return ok ? LemmaVerdict::holds : LemmaVerdict::fails;
}

const char* to_string(LemmaVerdict v) {
    switch (v) {
        case LemmaVerdict::holds: return "holds";
        case LemmaVerdict::fails: return "fails";
        case LemmaVerdict::not_applicable: return "not applicable";
    }
    return "unknown";
}

}  // namespace tbcalc
