#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <equivalg/tubular.hpp>

#include "fixtures.hpp"

using namespace equivalg;

TEST_CASE("grading groups and dualizing elements") {
    auto L442 = grading_group({4, 4, 2});
    CHECK(L442.order(L442.omega()) == 4);
    auto L632 = grading_group({6, 3, 2});
    CHECK(L632.order(L632.omega()) == 6);
    auto L333 = grading_group({3, 3, 3});
    CHECK(L333.order(L333.omega()) == 3);

    auto L = grading_group({2, 2, 2, 2});
    CHECK(L.order(L.omega()) == 2);
    // defining relations in normal form
    for (std::size_t i = 0; i + 1 < 4; ++i) {
        auto a = L.gen(i);
        auto b = L.gen(i + 1);
        for (auto& v : a) v *= 2;
        for (auto& v : b) v *= 2;
        CHECK(L.equal(a, b));
    }
    CHECK(!L.equal(L.gen(0), L.gen(1)));
    // c has infinite order; normal forms are idempotent
    CHECK(L.order(L.cvec()) == 0);
    CHECK(L.normal_form(L.omega()) == L.normal_form(L.omega()));
    CHECK(L.equal(L.add(L.omega(), L.cvec()), L.add(L.cvec(), L.omega())));
}

TEST_CASE("coordinate algebra truncations reduce and grade correctly") {
    auto f = Field::prime(13);
    Scalar lam = Scalar::from_int(f, 3);
    auto A = coordinate_algebra_truncation(f, {2, 2, 2, 2}, lam);

    // x3^2 -> x2^2 - x1^2
    auto p = A.monomial({0, 0, 2, 0}, Scalar::one(f));
    CHECK(!p.overflow);
    REQUIRE(p.terms.size() == 2);
    CHECK(p.terms.at({0, 2, 0, 0}).is_one());
    CHECK(p.terms.at({2, 0, 0, 0}) == -Scalar::one(f));
    // x4^2 -> x2^2 - lambda x1^2
    auto q = A.monomial({0, 0, 0, 2}, Scalar::one(f));
    CHECK(q.terms.at({2, 0, 0, 0}) == -lam);

    // degree-0 component is spanned by 1
    auto deg0 = A.component(A.grading.zero());
    REQUIRE(deg0.size() == 1);
    CHECK(CoordinateTruncation::total(deg0[0]) == 0);

    // S(3,3,3): the degree-c component is {y1^3, y2^3} after rewriting y3^3
    auto S = coordinate_algebra_truncation(f, {3, 3, 3});
    auto comp = S.component(S.grading.cvec());
    REQUIRE(comp.size() == 2);
    CHECK(comp[0] == Monomial{0, 3, 0});
    CHECK(comp[1] == Monomial{3, 0, 0});

    // degree additivity on a sample of in-bound products
    auto m1 = S.monomial({1, 1, 0}, Scalar::one(f));
    auto m2 = S.monomial({0, 1, 2}, Scalar::one(f));
    auto prod = S.multiply(m1, m2);
    CHECK(!prod.overflow);
    for (const auto& [m, s] : prod.terms)
        CHECK(S.grading.equal(S.degree(m),
                              S.grading.add(S.degree({1, 1, 0}), S.degree({0, 1, 2}))));

    // rewriting past the bound is flagged, not dropped silently
    auto tight = coordinate_algebra_truncation(f, {4, 4, 2}, std::nullopt, 3);
    auto over = tight.monomial({0, 0, 2}, Scalar::one(f));
    CHECK(over.overflow);
    CHECK(over.terms.empty());

    // parameter restrictions for type (2,2,2,2)
    CHECK_THROWS_AS(coordinate_algebra_truncation(f, {2, 2, 2, 2}, Scalar::one(f)),
                    std::invalid_argument);
    CHECK_THROWS_AS(coordinate_algebra_truncation(f, {5, 5, 5}), std::invalid_argument);
}

TEST_CASE("Table 1 automorphisms validate on their coordinate algebras") {
    auto f = Field::prime(13);
    auto entries = table1_data(f);
    REQUIRE(entries.size() == 3);
    for (const auto& e : entries) CHECK(validate_graded_automorphism(e.algebra, e.aut).ok);

    // dropping the sqrt(-1) scale of g1 breaks relation preservation
    auto bad = entries[0].aut;
    bad.scale[0] = Scalar::one(f);
    CHECK(!validate_graded_automorphism(entries[0].algebra, bad).ok);
    // g2 needs lambda = eps: on S(2,2,2,2;-1) its relations are not preserved
    CHECK(!validate_graded_automorphism(entries[0].algebra, entries[1].aut).ok);
    // weight mismatch is rejected
    auto s442 = coordinate_algebra_truncation(f, {4, 4, 2});
    GradedAutomorphism wrong{{2, 1, 0}, {Scalar::one(f), Scalar::one(f), Scalar::one(f)}};
    CHECK(!validate_graded_automorphism(s442, wrong).ok);
}

TEST_CASE("scaling powers and their characters") {
    auto f = Field::prime(13);
    Scalar i4 = primitive_root_of_unity(f, 4);
    Scalar eps = primitive_root_of_unity(f, 6);
    Scalar one = Scalar::one(f);
    auto reports = table1_compatible_pairs(f);
    REQUIRE(reports.size() == 3);

    // g1^2 = scaling by gamma with gamma(x1) = -1, the rest 1
    CHECK(reports[0].order == 2);
    CHECK(reports[0].gamma[0] == -one);
    for (std::size_t i = 1; i < 4; ++i) CHECK(reports[0].gamma[i].is_one());

    // g2^3 = scaling by sqrt(-1) on all four generators
    CHECK(reports[1].order == 3);
    for (const auto& s : reports[1].gamma) CHECK(s == i4);

    // g3^2 fixes y1, y2 and scales y3 by eps^2
    CHECK(reports[2].order == 2);
    CHECK(reports[2].gamma[0].is_one());
    CHECK(reports[2].gamma[1].is_one());
    CHECK(reports[2].gamma[2] == eps * eps);

    for (const auto& r : reports) {
        CHECK(r.character_well_defined);
        CHECK(r.psi_invariant);
    }
}

TEST_CASE("each Table 1 row induces a validated cyclic weak action") {
    auto f = Field::prime(13);
    auto entries = table1_data(f);
    std::vector<std::size_t> expect_order{2, 3, 2};
    for (std::size_t i = 0; i < entries.size(); ++i) {
        auto bridge = induced_weak_action(entries[i].algebra, entries[i].aut,
                                          entries[i].shift);
        CHECK(bridge.scaling.order == expect_order[i]);
        CHECK(bridge.endo->dim() == 3);
        CHECK(bridge.sigma.is_automorphism());
        CHECK(bridge.sigma.apply(bridge.witness) == bridge.witness);
        CHECK(bridge.action.validate().ok);
        CHECK(bridge.action.group()->order() == expect_order[i]);
    }

    // the g1 action is genuinely weak: its cocycle entry at (g, g) is not
    // the unit, but its square is
    auto b1 = induced_weak_action(entries[0].algebra, entries[0].aut, entries[0].shift);
    const Vec& cgg = b1.action.c({1}, {1});
    CHECK(!(cgg == b1.endo->unit()));
    CHECK(b1.endo->multiply(cgg, cgg) == b1.endo->unit());

    // the induced C3 action passes the appendix identity suite downstream
    auto b2 = induced_weak_action(entries[1].algebra, entries[1].aut, entries[1].shift);
    ModuleCategoryAction act(b2.action);
    CHECK(appendix_a_suite(act, act.default_probes()).ok);

    // a psi-unstable shift is rejected
    CHECK_THROWS_AS(
        induced_weak_action(entries[0].algebra, entries[0].aut,
                            entries[0].algebra.grading.gen(2)),
        std::invalid_argument);
}
