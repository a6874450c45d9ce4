#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <equivalg/equivariant.hpp>

#include "fixtures.hpp"

using namespace equivalg;
using namespace fixtures;

namespace {

GroupPtr cyclic(std::uint64_t d) {
    return std::make_shared<AbGroup>(std::vector<std::uint64_t>{d});
}

WeakAction swap_action(const FieldPtr& f) {
    auto kxk = product_algebra(f, 2);
    std::vector<AlgebraMap> rho{AlgebraMap::identity(kxk), swap_map(kxk)};
    std::vector<std::vector<Vec>> c(2, std::vector<Vec>(2, kxk->unit()));
    return WeakAction(cyclic(2), kxk, rho, c);
}

/// (S1 + S2, alpha_g = swap) over the swap action.
EquivariantModule swap_equivariant(const ModuleCategoryAction& act) {
    const FieldPtr& f = act.algebra()->field();
    ModuleRep X = simple_of_product(act.algebra(), 0).direct_sum(simple_of_product(act.algebra(), 1));
    Matrix sw(f, 2, 2);
    sw.at(0, 1) = Scalar::one(f);
    sw.at(1, 0) = Scalar::one(f);
    return EquivariantModule{X, {Matrix::identity(f, 2), sw}};
}

/// One-dimensional equivariant module for the trivial C2-action on k,
/// with alpha_g given by a character value.
EquivariantModule character_line(const ModuleCategoryAction& act, long chi_g) {
    const FieldPtr& f = act.algebra()->field();
    ModuleRep X(act.algebra(), {Matrix::identity(f, 1)});
    Matrix m(f, 1, 1);
    m.at(0, 0) = Scalar::from_int(f, chi_g);
    return EquivariantModule{X, {Matrix::identity(f, 1), m}};
}

}  // namespace

TEST_CASE("equivariant validation") {
    auto f = Field::prime(5);
    ModuleCategoryAction act(swap_action(f));
    auto E = swap_equivariant(act);
    CHECK(validate_equivariant(act, E).ok);

    // alpha_g = swap composed with diag(1, -1) breaks alpha_g^2 = id
    EquivariantModule bad = E;
    Matrix d = Matrix::identity(f, 2);
    d.at(1, 1) = Scalar::from_int(f, -1);
    bad.alpha[1] = bad.alpha[1] * d;
    auto rep = validate_equivariant(act, bad);
    CHECK(!rep.ok);
    CHECK(!rep.violations.empty());
}

TEST_CASE("equivariant hom via averaging") {
    auto f5 = Field::prime(5);

    // trivial action on k x k, regular carrier: End is all of End_A(A)
    auto f = Field::prime(13);
    auto kxk = product_algebra(f, 2);
    ModuleCategoryAction triv(WeakAction::trivial(cyclic(2), kxk));
    EquivariantModule reg{ModuleRep::regular(kxk),
                          {Matrix::identity(f, 2), Matrix::identity(f, 2)}};
    REQUIRE(validate_equivariant(triv, reg).ok);
    CHECK(hom_equivariant(triv, reg, reg).size() == 2);

    // two distinct characters on the trivial line have no equivariant homs
    auto k = product_algebra(f5, 1);
    ModuleCategoryAction tk(WeakAction::trivial(cyclic(2), k));
    auto chi0 = character_line(tk, 1);
    auto chi1 = character_line(tk, -1);
    REQUIRE(validate_equivariant(tk, chi0).ok);
    REQUIRE(validate_equivariant(tk, chi1).ok);
    CHECK(hom_equivariant(tk, chi0, chi1).empty());
    CHECK(hom_equivariant(tk, chi0, chi0).size() == 1);

    // the swap-equivariant structure on S1 + S2 transports to the simple
    // M2-module, so its End is one-dimensional: only the scalar diagonal
    // survives the swap-conjugation
    ModuleCategoryAction act(swap_action(f5));
    auto E = swap_equivariant(act);
    CHECK(hom_equivariant(act, E, E).size() == 1);
}

TEST_CASE("crossed module transport round trips on the nose") {
    auto f = Field::prime(5);
    ModuleCategoryAction act(swap_action(f));
    auto cp = crossed_product(act.weak());
    auto E = swap_equivariant(act);

    ModuleRep M = to_crossed_module(act, cp, E);
    CHECK(M.validate().ok);
    auto back = from_crossed_module(act, cp, M);
    CHECK(back.base == E.base);
    for (std::size_t i = 0; i < E.alpha.size(); ++i) CHECK(back.alpha[i] == E.alpha[i]);
    CHECK(to_crossed_module(act, cp, back) == M);

    // hom dimensions agree across the transport
    CHECK(hom_space(M, M).size() == hom_equivariant(act, E, E).size());

    // the swap example transports to the 2-dimensional simple over M2
    CHECK(M.dim() == 2);
    CHECK(is_indecomposable(M) == std::optional<bool>(true));
    CHECK(hom_space(M, M).size() == 1);
}

TEST_CASE("induction produces valid equivariant modules") {
    auto f = Field::prime(5);
    ModuleCategoryAction act(swap_action(f));
    for (const auto& X : act.default_probes()) {
        auto ind = induction(act, X);
        CHECK(ind.base.dim() == act.group()->order() * X.dim());
        CHECK(validate_equivariant(act, ind).ok);
    }

    // nontrivial cocycle, d = 3: induction still validates
    auto f13 = Field::prime(13);
    auto k = product_algebra(f13, 1);
    Vec b{Scalar::from_int(f13, 3)};
    ModuleCategoryAction act3(induced_cyclic_action(AlgebraMap::identity(k), b, 3));
    auto ind = induction(act3, ModuleRep::regular(k));
    CHECK(ind.base.dim() == 3);
    CHECK(validate_equivariant(act3, ind).ok);
}

TEST_CASE("End of an induced module matches the orbit hom sum") {
    auto f = Field::prime(5);
    ModuleCategoryAction act(swap_action(f));
    for (const auto& X : act.default_probes()) {
        auto ind = induction(act, X);
        std::size_t expect = 0;
        for (const auto& g : act.group()->elements())
            expect += hom_space(X, act.F(g, X)).size();
        CHECK(hom_equivariant(act, ind, ind).size() == expect);
    }
}

TEST_CASE("adjunctions") {
    auto f = Field::prime(5);
    ModuleCategoryAction act(swap_action(f));
    auto probes = act.default_probes();
    std::vector<EquivariantModule> eprobes{swap_equivariant(act)};
    for (const auto& X : probes) eprobes.push_back(induction(act, X));
    CHECK(verify_adjunctions(act, probes, eprobes).ok);

    // nontrivial cocycle, d = 3
    auto f13 = Field::prime(13);
    auto k = product_algebra(f13, 1);
    Vec b{Scalar::from_int(f13, 3)};
    ModuleCategoryAction act3(induced_cyclic_action(AlgebraMap::identity(k), b, 3));
    std::vector<ModuleRep> probes3{ModuleRep::regular(k)};
    std::vector<EquivariantModule> eprobes3{induction(act3, probes3[0])};
    CHECK(verify_adjunctions(act3, probes3, eprobes3).ok);
}

TEST_CASE("monad laws") {
    auto f = Field::prime(5);
    ModuleCategoryAction act(swap_action(f));
    auto probes = act.default_probes();
    std::vector<EquivariantModule> eprobes{swap_equivariant(act)};
    for (const auto& X : probes) eprobes.push_back(induction(act, X));
    CHECK(verify_monad_laws(act, probes, eprobes).ok);

    auto f13 = Field::prime(13);
    auto k = product_algebra(f13, 1);
    Vec b{Scalar::from_int(f13, 3)};
    ModuleCategoryAction act3(induced_cyclic_action(AlgebraMap::identity(k), b, 3));
    std::vector<ModuleRep> probes3{ModuleRep::regular(k)};
    std::vector<EquivariantModule> eprobes3{induction(act3, probes3[0])};
    CHECK(verify_monad_laws(act3, probes3, eprobes3).ok);
}
