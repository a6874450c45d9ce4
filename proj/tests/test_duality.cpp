#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <equivalg/duality.hpp>

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

EquivariantModule swap_equivariant(const ModuleCategoryAction& act) {
    const FieldPtr& f = act.algebra()->field();
    ModuleRep X =
        simple_of_product(act.algebra(), 0).direct_sum(simple_of_product(act.algebra(), 1));
    Matrix sw(f, 2, 2);
    sw.at(0, 1) = Scalar::one(f);
    sw.at(1, 0) = Scalar::one(f);
    return EquivariantModule{X, {Matrix::identity(f, 2), sw}};
}

EquivariantModule character_line(const ModuleCategoryAction& act, long chi_g) {
    const FieldPtr& f = act.algebra()->field();
    ModuleRep X(act.algebra(), {Matrix::identity(f, 1)});
    Matrix m(f, 1, 1);
    m.at(0, 0) = Scalar::from_int(f, chi_g);
    return EquivariantModule{X, {Matrix::identity(f, 1), m}};
}

}  // namespace

TEST_CASE("dual twist rescales the equivariant structure") {
    auto f = Field::prime(5);
    auto k = product_algebra(f, 1);
    ModuleCategoryAction act(WeakAction::trivial(cyclic(2), k));
    auto chars = character_group(*act.group(), f);
    auto E = character_line(act, 1);
    // trivial character leaves E unchanged
    auto same = dual_twist(act, chars[0], E);
    CHECK(same.alpha[1] == E.alpha[1]);
    // chi_1(g) = -1 = 4 over F_5
    auto tw = dual_twist(act, chars[1], E);
    CHECK(validate_equivariant(act, tw).ok);
    CHECK(tw.alpha[1].at(0, 0).residue() == 4);
    // F_chi F_chi' = F_{chi chi'} strictly
    auto twice = dual_twist(act, chars[1], tw);
    CHECK(twice.alpha[1] == E.alpha[1]);
}

TEST_CASE("theta produces valid nested objects") {
    auto f = Field::prime(5);
    ModuleCategoryAction act(swap_action(f));
    ModuleRep s1 = simple_of_product(act.algebra(), 0);
    auto T = theta(act, s1);
    CHECK(validate_nested(act, T).ok);
    // can(S1)_chi = diag(1, chi(g))
    auto chars = character_group(*act.group(), f);
    for (std::size_t ci = 0; ci < chars.size(); ++ci) {
        CHECK(T.beta[ci].at(0, 0).is_one());
        CHECK(T.beta[ci].at(1, 1) == chars[ci]({1}));
    }

    // nontrivial cocycle C3 action over F_13
    auto f13 = Field::prime(13);
    auto k = product_algebra(f13, 1);
    ModuleCategoryAction act3(
        induced_cyclic_action(AlgebraMap::identity(k), Vec{Scalar::from_int(f13, 3)}, 3));
    CHECK(validate_nested(act3, theta(act3, ModuleRep::regular(k))).ok);
}

TEST_CASE("monad isomorphism") {
    auto f = Field::prime(13);
    ModuleCategoryAction act(swap_action(f));
    auto E = swap_equivariant(act);
    auto iso = monad_isomorphism(act, E);
    CHECK(iso.fwd.rows() == 4);
    CHECK(verify_monad_isomorphism(act, E).ok);
    // naturality in an equivariant endomorphism
    for (const auto& phi : hom_equivariant(act, E, E))
        CHECK(monad_isomorphism_natural(act, E, E, phi));

    auto f5 = Field::prime(5);
    auto k = product_algebra(f5, 1);
    ModuleCategoryAction tk(WeakAction::trivial(cyclic(2), k));
    CHECK(verify_monad_isomorphism(tk, character_line(tk, -1)).ok);

    auto k1 = product_algebra(f, 1);
    ModuleCategoryAction act3(
        induced_cyclic_action(AlgebraMap::identity(k1), Vec{Scalar::from_int(f, 3)}, 3));
    CHECK(verify_monad_isomorphism(act3, induction(act3, ModuleRep::regular(k1))).ok);
}

TEST_CASE("theta is an equivalence on probes") {
    auto f = Field::prime(5);
    ModuleCategoryAction act(swap_action(f));
    ModuleRep s1 = simple_of_product(act.algebra(), 0);
    ModuleRep s2 = simple_of_product(act.algebra(), 1);
    CHECK(verify_theta_equivalence(act, {s1, s2, s1.direct_sum(s2)}).ok);

    // trivial action on kC2 over F_5, probes = the two simples
    auto kc2 = group_algebra_c2(f);
    ModuleCategoryAction tk(WeakAction::trivial(cyclic(2), kc2));
    auto parts = decompose_module(ModuleRep::regular(kc2));
    REQUIRE(parts);
    REQUIRE(parts->size() == 2);
    CHECK(verify_theta_equivalence(tk, {parts->at(0).module, parts->at(1).module}).ok);

    // nontrivial cocycle C3 datum
    auto f13 = Field::prime(13);
    auto k = product_algebra(f13, 1);
    ModuleCategoryAction act3(
        induced_cyclic_action(AlgebraMap::identity(k), Vec{Scalar::from_int(f13, 3)}, 3));
    CHECK(verify_theta_equivalence(act3, {ModuleRep::regular(k)}).ok);
}

TEST_CASE("equivariantized functors") {
    auto f = Field::prime(5);
    ModuleCategoryAction act(swap_action(f));
    auto E = swap_equivariant(act);
    std::vector<ModuleRep> probes = act.default_probes();
    std::vector<EquivariantModule> eprobes{E, induction(act, probes[0])};

    // (Id, delta = 1) is the identity functor
    EquivariantFunctorData idf{AlgebraMap::identity(act.algebra()),
                               {act.algebra()->unit(), act.algebra()->unit()}};
    CHECK(validate_equivariant_functor(act, idf).ok);
    auto img = equivariantize_functor(act, idf, E);
    CHECK(img.base == E.base);
    CHECK(img.alpha[1] == E.alpha[1]);
    CHECK(verify_equivariantized_functor(act, idf, probes, eprobes).ok);

    // (Id, delta_g = chi(g)^{-1}) equals the dual twist F_chi
    auto chars = character_group(*act.group(), f);
    Vec u = act.algebra()->unit();
    Vec minus_u = u;
    for (auto& x : minus_u) x = x * chars[1]({1});
    EquivariantFunctorData chif{AlgebraMap::identity(act.algebra()), {u, minus_u}};
    CHECK(validate_equivariant_functor(act, chif).ok);
    auto img2 = equivariantize_functor(act, chif, E);
    auto tw = dual_twist(act, chars[1], E);
    CHECK(img2.base == tw.base);
    CHECK(img2.alpha[1] == tw.alpha[1]);
    CHECK(verify_equivariantized_functor(act, chif, probes, eprobes).ok);

    // Example 4.10: (F_a, c_a) for a = g, isomorphic to the identity via alpha_a
    auto fd = inner_functor_datum(act, {1});
    CHECK(validate_equivariant_functor(act, fd).ok);
    CHECK(verify_equivariantized_functor(act, fd, probes, eprobes).ok);
    for (const auto& Ep : eprobes) {
        auto imgE = equivariantize_functor(act, fd, Ep);
        const Matrix& psi = Ep.alpha[1];
        bool morph = psi.inverse().has_value();
        for (std::size_t b = 0; b < act.algebra()->dim(); ++b)
            morph = morph && Ep.base.action()[b] * psi == psi * imgE.base.action()[b];
        for (std::size_t gi = 0; gi < 2; ++gi)
            morph = morph && psi * imgE.alpha[gi] == Ep.alpha[gi] * psi;
        CHECK(morph);
    }

    // nontrivial cocycle C3: the inner datum still validates
    auto f13 = Field::prime(13);
    auto k = product_algebra(f13, 1);
    ModuleCategoryAction act3(
        induced_cyclic_action(AlgebraMap::identity(k), Vec{Scalar::from_int(f13, 3)}, 3));
    auto fd3 = inner_functor_datum(act3, {1});
    CHECK(validate_equivariant_functor(act3, fd3).ok);
    std::vector<ModuleRep> probes3{ModuleRep::regular(k)};
    std::vector<EquivariantModule> eprobes3{induction(act3, probes3[0])};
    CHECK(verify_equivariantized_functor(act3, fd3, probes3, eprobes3).ok);
}

TEST_CASE("stable bijection iota") {
    auto f = Field::prime(5);
    ModuleCategoryAction act(swap_action(f));
    ModuleRep M =
        simple_of_product(act.algebra(), 0).direct_sum(simple_of_product(act.algebra(), 1));
    auto sb = stable_bijection_iota(act, M);
    REQUIRE(sb);
    // Ind(M) has a 4-dim End splitting as M2; the basic representative is one
    // 2-dim equivariant indecomposable
    CHECK(hom_equivariant(act, induction(act, M), induction(act, M)).size() == 4);
    CHECK(sb->iota.base.dim() == 2);
    CHECK(sb->dual_stable);

    // trivial action on kC2 over F_5, M = regular: four character-decorated
    // simples, pairwise non-isomorphic
    auto kc2 = group_algebra_c2(f);
    ModuleCategoryAction tk(WeakAction::trivial(cyclic(2), kc2));
    auto sb2 = stable_bijection_iota(tk, ModuleRep::regular(kc2));
    REQUIRE(sb2);
    CHECK(sb2->iota.base.dim() == 4);
    CHECK(sb2->dual_stable);
    auto parts = decompose_equivariant(tk, induction(tk, ModuleRep::regular(kc2)));
    REQUIRE(parts);
    CHECK(parts->size() == 4);
}

TEST_CASE("orbit census") {
    auto f = Field::prime(5);
    ModuleCategoryAction act(swap_action(f));
    ModuleRep s1 = simple_of_product(act.algebra(), 0);
    ModuleRep s2 = simple_of_product(act.algebra(), 1);
    auto census = orbit_census(act, {s1, s2});
    REQUIRE(census);
    CHECK(census->module_probes_closed);
    CHECK(census->module_orbits == 1);
    CHECK(census->equivariant_orbits == 1);
    CHECK(census->counts_match);

    auto kc2 = group_algebra_c2(f);
    ModuleCategoryAction tk(WeakAction::trivial(cyclic(2), kc2));
    auto parts = decompose_module(ModuleRep::regular(kc2));
    REQUIRE(parts);
    auto census2 = orbit_census(tk, {parts->at(0).module, parts->at(1).module});
    REQUIRE(census2);
    CHECK(census2->module_orbits == 2);
    CHECK(census2->equivariant_orbits == 2);
    CHECK(census2->counts_match);
}

TEST_CASE("End(Ind M) is the crossed product of End(M)") {
    auto f = Field::prime(5);
    ModuleCategoryAction act(swap_action(f));
    ModuleRep M =
        simple_of_product(act.algebra(), 0).direct_sum(simple_of_product(act.algebra(), 1));
    Matrix sw(f, 2, 2);
    sw.at(0, 1) = Scalar::one(f);
    sw.at(1, 0) = Scalar::one(f);
    CHECK(end_ind_check(act, M, {Matrix::identity(f, 2), sw}).ok);

    auto kc2 = group_algebra_c2(f);
    ModuleCategoryAction tk(WeakAction::trivial(cyclic(2), kc2));
    CHECK(end_ind_check(tk, ModuleRep::regular(kc2),
                        {Matrix::identity(f, 2), Matrix::identity(f, 2)})
              .ok);
}
