#include "doctest.h"

#include "oracles.hpp"
#include "tbcalc/error.hpp"
#include "tbcalc/lattice.hpp"
#include "tbcalc/open_book.hpp"

using namespace tbcalc;
using tbcalc::testing::brute_force_solve;
using tbcalc::testing::Generator;

namespace {

IntegerVector vec(std::initializer_list<long> xs) {
    IntegerVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

OpenBookPresentation annulus(int sign) {
    return {PageSurface(0, 2), {DehnTwist{sign, vec({-1})}}, IntegerMatrix{{0}}};
}

// Two positive twists on the annulus meeting once: T_1 . T_2 = 1.
OpenBookPresentation crossing_pair() {
    return {PageSurface(0, 2), {DehnTwist{1, vec({1})}, DehnTwist{1, vec({1})}}, IntegerMatrix{{0, 1}, {-1, 0}}};
}

OpenBookPresentation nonunique() { return {PageSurface(0, 3), {DehnTwist{1, vec({2, 1})}}, IntegerMatrix{{0}}}; }

}  // namespace

TEST_CASE("page surface arc count") {
    CHECK(PageSurface(0, 1).arc_count() == 0);
    CHECK(PageSurface(0, 2).arc_count() == 1);
    CHECK(PageSurface(1, 1).arc_count() == 2);
    CHECK(PageSurface(2, 3).arc_count() == 6);
    CHECK_THROWS_AS(PageSurface(1, 0), InputError);
}

TEST_CASE("open book validation") {
    CHECK_THROWS_WITH_AS(OpenBookPresentation(PageSurface(0, 2), {DehnTwist{1, vec({1})}}, IntegerMatrix{{1}}),
                         doctest::Contains("skew-symmetry violated"), InputError);
    CHECK_THROWS_WITH_AS(OpenBookPresentation(PageSurface(0, 2), {DehnTwist{1, vec({1}), }, DehnTwist{1, vec({1})}},
                                              IntegerMatrix{{0, 1}, {1, 0}}),
                         doctest::Contains("twist_pairings[0][1]"), InputError);
    CHECK_THROWS_WITH_AS(OpenBookPresentation(PageSurface(0, 2), {DehnTwist{2, vec({1})}}, IntegerMatrix{{0}}),
                         doctest::Contains("twists[0].sign"), InputError);
    CHECK_THROWS_WITH_AS(OpenBookPresentation(PageSurface(0, 2), {DehnTwist{1, vec({1, 0})}}, IntegerMatrix{{0}}),
                         doctest::Contains("twists[0].arcs"), InputError);
    CHECK_THROWS_AS(OpenBookPresentation(PageSurface(0, 2), {DehnTwist{1, vec({1})}}, IntegerMatrix(2, 2)),
                    InputError);
}

TEST_CASE("twist_image") {
    SUBCASE("positive twist on the annulus") {
        auto out = twist_image({0, vec({0})}, 0, annulus(1));
        CHECK(out.twist_coefficients == vec({-1}));
    }
    SUBCASE("disjoint curve leaves the class alone") {
        OpenBookPresentation ob(PageSurface(0, 2), {DehnTwist{1, vec({0})}}, IntegerMatrix{{0}});
        CHECK(twist_image({0, vec({0})}, 0, ob).twist_coefficients == vec({0}));
    }
    SUBCASE("second twist sees the first") {
        auto ob = crossing_pair();
        auto first = twist_image({0, vec({0, 0})}, 0, ob);
        CHECK(first.twist_coefficients == vec({1, 0}));
        // t = T_2 . a + 1 * (T_2 . T_1) = 1 - 1 = 0
        auto second = twist_image(first, 1, ob);
        CHECK(second.twist_coefficients == vec({1, 0}));
    }
    SUBCASE("index out of range") { CHECK_THROWS_AS(twist_image({0, vec({0})}, 1, annulus(1)), InputError); }
}

TEST_CASE("monodromy matrix examples") {
    CHECK(monodromy_matrix(annulus(1)) == IntegerMatrix{{1}});
    CHECK(monodromy_matrix(annulus(-1)) == IntegerMatrix{{-1}});
    CHECK(monodromy_matrix(OpenBookPresentation(PageSurface(1, 2), {}, IntegerMatrix())) == IntegerMatrix(3, 3));
    CHECK(monodromy_matrix(crossing_pair()) == IntegerMatrix{{1}});
    CHECK(monodromy_matrix(nonunique()) == IntegerMatrix{{4, 2}, {2, 1}});

    CHECK(monodromy_matrix_reference(annulus(1)) == IntegerMatrix{{1}});
    CHECK(monodromy_matrix_reference(crossing_pair()) == IntegerMatrix{{1}});
    CHECK(monodromy_matrix_reference(OpenBookPresentation(PageSurface(0, 2), {}, IntegerMatrix())) ==
          IntegerMatrix(1, 1));
}

TEST_CASE("reference formula refuses long twist words") {
    std::vector<DehnTwist> twists(21, DehnTwist{1, vec({1})});
    OpenBookPresentation ob(PageSurface(0, 2), twists, IntegerMatrix(21, 21));
    CHECK_THROWS_AS(monodromy_matrix_reference(ob), InputError);
    CHECK(monodromy_matrix(ob) == IntegerMatrix{{21}});
}

TEST_CASE("iterative twist action equals the nested sum") {
    Generator gen(31337);
    for (int trial = 0; trial < 300; ++trial) {
        auto ob = gen.open_book(4, 8, 2);
        CHECK(monodromy_matrix(ob) == monodromy_matrix_reference(ob));
    }
}

TEST_CASE("disjoint twists give a symmetric sum of rank-one terms") {
    Generator gen(8);
    for (int trial = 0; trial < 100; ++trial) {
        auto random = gen.open_book(4, 6, 3);
        OpenBookPresentation ob(random.page(), random.twists(),
                                IntegerMatrix(random.twist_count(), random.twist_count()));
        const std::size_t n = ob.arc_count();
        IntegerMatrix expected(n, n);
        for (const auto& t : ob.twists())
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) expected(i, j) += t.sign * t.arc_pairings[j] * t.arc_pairings[i];
        const IntegerMatrix c = monodromy_matrix(ob);
        CHECK(c == expected);
        CHECK(c == c.transposed());
    }
}

TEST_CASE("tb on open book pages") {
    SUBCASE("standard unknot") {
        auto r = tb_open_book(annulus(1), PageKnot{vec({-1})});
        REQUIRE(r);
        CHECK(r->order == 1);
        CHECK(r->tb == -1);
        CHECK(r->certificate == vec({-1}));
        CHECK(r->kernel_orthogonal);
    }
    SUBCASE("overtwisted unknot") {
        auto r = tb_open_book(annulus(-1), PageKnot{vec({-1})});
        REQUIRE(r);
        CHECK(r->order == 1);
        CHECK(r->tb == 1);
        CHECK(r->certificate == vec({1}));
    }
    SUBCASE("zero class") {
        auto r = tb_open_book(nonunique(), PageKnot{vec({0, 0})});
        REQUIRE(r);
        CHECK(r->order == 1);
        CHECK(is_zero(r->certificate));
        CHECK(r->tb == 0);
    }
    SUBCASE("disk page") {
        OpenBookPresentation disk(PageSurface(0, 1), {}, IntegerMatrix());
        auto r = tb_open_book(disk, PageKnot{{}});
        REQUIRE(r);
        CHECK(r->order == 1);
        CHECK(r->tb == 0);
    }
    SUBCASE("non-unique certificate") {
        auto r = tb_open_book(nonunique(), PageKnot{vec({2, 1})});
        REQUIRE(r);
        CHECK(r->order == 1);
        CHECK(r->kernel_orthogonal);
        // brute-force certificate, independent of the Smith form
        auto e = brute_force_solve(IntegerMatrix{{4, 2}, {2, 1}}, vec({2, 1}));
        REQUIRE(e);
        CHECK(dot(*e, vec({2, 1})) == 1);
        CHECK(r->tb == -1);
        // the family (2,1) + n(1,-2) pairs to 5 with A but does not solve A = C E
        CHECK(dot(vec({2, 1}), vec({2, 1})) == 5);
        CHECK(IntegerMatrix({{4, 2}, {2, 1}}) * vec({2, 1}) != vec({2, 1}));
    }
    SUBCASE("infinite order") {
        OpenBookPresentation ob(PageSurface(0, 2), {}, IntegerMatrix());
        CHECK_FALSE(tb_open_book(ob, PageKnot{vec({1})}));
    }
    SUBCASE("length mismatch") { CHECK_THROWS_AS(tb_open_book(annulus(1), PageKnot{vec({1, 1})}), InputError); }
}

TEST_CASE("rational tb on a page") {
    // single twist T . a = 2 on the annulus: C = [2], A = (1) has order 2
    OpenBookPresentation ob(PageSurface(0, 2), {DehnTwist{1, vec({2})}}, IntegerMatrix{{0}});
    CHECK(monodromy_matrix(ob) == IntegerMatrix{{4}});
    auto r = tb_open_book(ob, PageKnot{vec({2})});
    REQUIRE(r);
    CHECK(r->order == 2);
    CHECK(r->certificate == vec({1}));
    CHECK(r->tb == Rational(-1, 1));
    auto q = tb_open_book(ob, PageKnot{vec({1})});
    REQUIRE(q);
    CHECK(q->order == 4);
    CHECK(q->tb == Rational(-1, 4));
    CHECK(q->tb_denominator() == 4);
}

TEST_CASE("solution choice does not matter when A is orthogonal to the kernel") {
    Generator gen(404);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto ob = gen.open_book(3, 4, 2);
        PageKnot knot{gen.vector(ob.arc_count(), 2)};
        auto r = tb_open_book(ob, knot);
        if (!r) continue;
        const IntegerMatrix c = monodromy_matrix(ob);
        for (const auto& k : kernel_basis(c)) {
            const bool orth = dot(k, knot.arc_pairings) == 0;
            if (r->kernel_orthogonal) {
                CHECK(orth);
                auto shifted = add(r->certificate, scaled(k, 3));
                CHECK(c * shifted == scaled(knot.arc_pairings, r->order));
                CHECK(dot(shifted, knot.arc_pairings) == dot(r->certificate, knot.arc_pairings));
                ++checked;
            }
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("stabilization") {
    auto [ob, knot] = stabilize(annulus(1), PageKnot{vec({-1})}, 1);
    CHECK(ob.page().boundary_components() == 3);
    CHECK(ob.arc_count() == 2);
    CHECK(ob.twists().back().arc_pairings == vec({0, 1}));
    CHECK(ob.twists().front().arc_pairings == vec({-1, 0}));
    CHECK(knot.arc_pairings == vec({-1, 1}));
    CHECK(monodromy_matrix(ob) == IntegerMatrix{{1, 0}, {0, 1}});
    CHECK(tb_open_book(ob, knot)->tb == -2);

    auto [neg_ob, neg_knot] = stabilize(annulus(1), PageKnot{vec({-1})}, -1);
    CHECK(monodromy_matrix(neg_ob) == IntegerMatrix{{1, 0}, {0, -1}});
    CHECK(tb_open_book(neg_ob, neg_knot)->tb == 0);

    auto [twice_ob, twice_knot] = stabilize(ob, knot, -1);
    CHECK(tb_open_book(twice_ob, twice_knot)->tb == -1);

    CHECK_THROWS_AS(stabilize(annulus(1), PageKnot{vec({-1})}, 0), InputError);
}

TEST_CASE("stabilization shifts tb by minus the sign") {
    Generator gen(77);
    for (int trial = 0; trial < 200; ++trial) {
        auto ob = gen.open_book(3, 5, 2);
        PageKnot knot{gen.vector(ob.arc_count(), 2)};
        auto before = tb_open_book(ob, knot);
        for (int sign : {1, -1}) {
            auto [sob, sknot] = stabilize(ob, knot, sign);
            auto after = tb_open_book(sob, sknot);
            REQUIRE(before.has_value() == after.has_value());
            if (!before) continue;
            CHECK(after->order == before->order);
            if (before->kernel_orthogonal) CHECK(after->tb == before->tb - sign);
        }
    }
}

TEST_CASE("to_heegaard") {
    auto h = to_heegaard(annulus(1), PageKnot{vec({-1})});
    CHECK(h.genus() == 1);
    CHECK(h.relations() == IntegerMatrix{{-1}});
    CHECK(h.knot_generators() == vec({-1}));
    CHECK(h.knot_relations() == vec({-1}));
    CHECK(h.dividing_intersections() == 0);
    CHECK(tb_heegaard(h)->tb == -1);

    OpenBookPresentation trivial(PageSurface(1, 1), {}, IntegerMatrix());
    CHECK(to_heegaard(trivial, PageKnot{vec({0, 0})}).relations() == IntegerMatrix(2, 2));
}

TEST_CASE("open book and Heegaard pipelines agree") {
    Generator gen(2718);
    for (int trial = 0; trial < 300; ++trial) {
        auto ob = gen.open_book(4, 6, 2);
        PageKnot knot{gen.vector(ob.arc_count(), 3)};
        auto direct = tb_open_book(ob, knot);
        auto via = tb_heegaard(to_heegaard(ob, knot));
        REQUIRE(direct.has_value() == via.has_value());
        if (!direct) continue;
        CHECK(direct->order == via->order);
        CHECK(direct->tb == via->tb);
        CHECK(direct->kernel_orthogonal == via->kernel_orthogonal);
        CHECK(via->certificate == scaled(direct->certificate, -1));
    }
}

TEST_CASE("order scaling") {
    Generator gen(55);
    for (int trial = 0; trial < 100; ++trial) {
        auto ob = gen.open_book(3, 4, 2);
        PageKnot knot{gen.vector(ob.arc_count(), 2)};
        auto base = tb_open_book(ob, knot);
        if (!base) continue;
        for (long c = 1; c <= 4; ++c) {
            auto multiple = tb_open_book(ob, PageKnot{scaled(knot.arc_pairings, c)});
            REQUIRE(multiple);
            CHECK((c * base->order) % multiple->order == 0);
            if (base->kernel_orthogonal) CHECK(multiple->tb == base->tb * c * c);
        }
    }
}
