#pragma once

#include <string>
#include <vector>

#include "tbcalc/heegaard.hpp"
#include "tbcalc/integer_matrix.hpp"

namespace tbcalc {

/// Finitely generated abelian group Z^free_rank + Z/t_1 + ... + Z/t_k with
/// t_i >= 2 and t_i | t_{i+1}.
struct AbelianGroup {
    std::vector<Integer> torsion;
    std::size_t free_rank = 0;

    /// Canonical form from invariant factors: units dropped, zeros counted
    /// as free rank. Factors are taken up to sign.
    static AbelianGroup from_invariant_factors(const std::vector<Integer>& factors);
    /// Cokernel of a presentation matrix (rows = generators, cols = relations).
    static AbelianGroup cokernel(const IntegerMatrix& presentation);

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    /// "0", "ℤ", "ℤ^2 ⊕ ℤ/2 ⊕ ℤ/6", ...
    std::string to_string() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// H_1(M) = < g_1..g_n | c'_1..c'_n >, the cokernel of C.
AbelianGroup h1_manifold(const IntegerMatrix& relations);
AbelianGroup h1_manifold(const HeegaardData& h);

/// Presentation of H_1(M \ nu K): generators g~_1..g~_n, mu; relation j is
/// c~'_j - (K . c'_j) mu. Returns the (n+1) x n matrix [C; -I^T].
IntegerMatrix complement_presentation(const HeegaardData& h);
AbelianGroup h1_complement(const HeegaardData& h);

enum class LemmaVerdict { holds, fails, not_applicable };

/// For a nullhomologous knot, checks H_1(M \ K) = H_1(M) + Z: identical
/// torsion and free rank one larger. not_applicable when A is not in the
/// image of C.
LemmaVerdict verify_complement_lemma(const HeegaardData& h);

const char* to_string(LemmaVerdict v);

}  // namespace tbcalc
