#include "tbcalc/heegaard.hpp"

#include <string>
#include <utility>

#include "tbcalc/error.hpp"
#include "tbcalc/lattice.hpp"

namespace tbcalc {
namespace {

void check_vector(const char* field, const IntegerVector& v, std::size_t genus) {
    if (v.size() != genus)
        throw InputError(std::string(field) + ": expected length " + std::to_string(genus) + ", got " +
                         std::to_string(v.size()));
}

bool orthogonal_to_kernel(const IntegerMatrix& c, const IntegerVector& pairing) {
    for (const auto& k : kernel_basis(c))
        if (dot(k, pairing) != 0) return false;
    return true;
}

}  // namespace

std::string format_fraction(const Rational& q) {
    Rational canon = q;
    canon.canonicalize();
    if (canon.get_den() == 1) return canon.get_num().get_str();
    return canon.get_num().get_str() + "/" + canon.get_den().get_str();
}

void validate_relations(std::size_t genus, const IntegerMatrix& relations) {
    if (relations.rows() != genus || relations.cols() != genus)
        throw InputError("C: expected a " + std::to_string(genus) + "x" + std::to_string(genus) +
                         " matrix, got " + std::to_string(relations.rows()) + "x" +
                         std::to_string(relations.cols()));
}

HeegaardData::HeegaardData(std::size_t genus, IntegerMatrix relations, IntegerVector knot_generators,
                           IntegerVector knot_relations, Integer dividing_intersections)
    : genus_(genus),
      relations_(std::move(relations)),
      knot_generators_(std::move(knot_generators)),
      knot_relations_(std::move(knot_relations)),
      dividing_(std::move(dividing_intersections)) {
    validate_relations(genus_, relations_);
    check_vector("A", knot_generators_, genus_);
    check_vector("I", knot_relations_, genus_);
    if (dividing_ < 0) throw InputError("dividing: dividing-set count must be nonnegative");
    if (mpz_odd_p(dividing_.get_mpz_t())) throw InputError("dividing: dividing-set count must be even");
}

std::optional<IntegerVector> nullhomologous_check(const HeegaardData& h) {
    return solve_integer(h.relations(), h.knot_generators());
}

std::optional<TbResult> tb_heegaard(const HeegaardData& h) {
    auto cert = minimal_order(h.relations(), h.knot_generators());
    if (!cert) return std::nullopt;

    TbResult result;
    result.order = cert->order;
    Rational dividing_term(Integer(-h.dividing_intersections()), Integer(2));
    dividing_term.canonicalize();
    Rational pairing_term(dot(cert->solution, h.knot_relations()), cert->order);
    pairing_term.canonicalize();
    result.tb = dividing_term + pairing_term;
    result.certificate = std::move(cert->solution);
    result.kernel_orthogonal = orthogonal_to_kernel(h.relations(), h.knot_relations());
    return result;
}

}  // namespace tbcalc
