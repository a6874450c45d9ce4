#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <equivalg/algebra.hpp>

#include "fixtures.hpp"

using namespace equivalg;
using namespace fixtures;

TEST_CASE("validate_algebra on the standard fixtures") {
    auto f = Field::prime(13);
    CHECK(product_algebra(f, 2)->validate().ok);
    CHECK(group_algebra_c2(f)->validate().ok);
    CHECK(matrix2_algebra(f)->validate().ok);
    CHECK(dual_numbers(f)->validate().ok);
}

TEST_CASE("validate_algebra names a violating triple") {
    auto f = Field::prime(13);
    auto good = product_algebra(f, 2);
    // tamper: e1*e2 = e1 breaks associativity
    std::vector<std::vector<Vec>> mul(2, std::vector<Vec>(2, Vec(2, Scalar::zero(f))));
    mul[0][0][0] = mul[1][1][1] = Scalar::one(f);
    mul[0][1][0] = Scalar::one(f);
    Vec unit(2, Scalar::one(f));
    Algebra bad(f, {"e1", "e2"}, mul, unit);
    auto rep = bad.validate();
    CHECK(!rep.ok);
    CHECK(!rep.violations.empty());
}

TEST_CASE("center dimensions") {
    auto f = Field::prime(13);
    CHECK(product_algebra(f, 2)->center_basis().size() == 2);
    CHECK(group_algebra_c2(f)->center_basis().size() == 2);
    CHECK(matrix2_algebra(f)->center_basis().size() == 1);
}

TEST_CASE("invert_element") {
    auto f5 = Field::prime(5);
    auto kc2 = group_algebra_c2(f5);
    auto inv_unit = kc2->invert_element(kc2->unit());
    REQUIRE(inv_unit);
    CHECK(*inv_unit == kc2->unit());
    auto s = kc2->basis_elem(1);
    auto inv_s = kc2->invert_element(s);
    REQUIRE(inv_s);
    CHECK(*inv_s == s);

    auto dn = dual_numbers(f5);
    CHECK(!dn->invert_element(dn->basis_elem(1)));
}

TEST_CASE("is_inner") {
    auto f5 = Field::prime(5);
    auto kxk = product_algebra(f5, 2);
    auto id = AlgebraMap::identity(kxk);
    auto r = is_inner(id);
    REQUIRE(r.status == InnerResult::Inner);

    auto sw = swap_map(kxk);
    REQUIRE(sw.is_automorphism());
    CHECK(is_inner(sw).status == InnerResult::NotInner);

    auto f13 = Field::prime(13);
    auto m2 = matrix2_algebra(f13);
    // conjugation by diag(1,-1): fixes e11, e22, negates e12, e21
    Matrix cm = Matrix::identity(f13, 4);
    cm.at(1, 1) = Scalar::from_int(f13, -1);
    cm.at(2, 2) = Scalar::from_int(f13, -1);
    AlgebraMap conj(m2, m2, cm);
    REQUIRE(conj.is_automorphism());
    auto r2 = is_inner(conj);
    REQUIRE(r2.status == InnerResult::Inner);
    // witness verified inside is_inner; double-check the defining identity
    auto a = r2.witness;
    auto ainv = m2->invert_element(a);
    REQUIRE(ainv);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(conj.apply(m2->basis_elem(i)) ==
              m2->multiply(*ainv, m2->multiply(m2->basis_elem(i), a)));
}

TEST_CASE("twisted modules") {
    auto f = Field::prime(13);
    auto kxk = product_algebra(f, 2);
    auto sw = swap_map(kxk);
    ModuleRep s1 = simple_of_product(kxk, 0);
    ModuleRep s2 = simple_of_product(kxk, 1);
    CHECK(s1.twisted(AlgebraMap::identity(kxk)) == s1);
    ModuleRep tw = s1.twisted(sw);
    CHECK(tw.validate().ok);
    CHECK(hom_space(tw, s2).size() == 1);
    CHECK(hom_space(tw, s1).empty());

    // composition identity: twist by sigma' then sigma equals twist by sigma sigma'
    auto f3 = Field::prime(13);
    auto k3 = product_algebra(f3, 3);
    auto cyc = cycle_map(k3);
    REQUIRE(cyc.is_automorphism());
    ModuleRep m = ModuleRep::regular(k3);
    ModuleRep lhs = m.twisted(cyc).twisted(cyc.power(2));
    ModuleRep rhs = m.twisted(cyc.power(2).then(cyc));
    CHECK(lhs == rhs);

    // regular module: r -> sigma(r) is an isomorphism R -> twisted R
    ModuleRep reg = ModuleRep::regular(k3);
    ModuleRep treg = reg.twisted(cyc);
    auto iso = module_isomorphism(reg, treg);
    REQUIRE(iso);
    // twisting preserves hom dimensions
    CHECK(hom_space(reg, reg).size() == hom_space(treg, treg).size());
}

TEST_CASE("hom spaces and end algebra") {
    auto f = Field::prime(13);
    auto kxk = product_algebra(f, 2);
    ModuleRep s1 = simple_of_product(kxk, 0);
    ModuleRep m = s1.direct_sum(simple_of_product(kxk, 1));
    CHECK(m.validate().ok);
    CHECK(hom_space(m, m).size() == 2);
    CHECK(hom_space(s1, m).size() == 1);
    auto E = end_algebra(m);
    CHECK(E.alg->dim() == 2);
    CHECK(E.alg->validate().ok);

    ModuleRep reg = ModuleRep::regular(kxk);
    CHECK(hom_space(reg, reg).size() == 2);
}

TEST_CASE("express_in_basis") {
    auto f = Field::prime(13);
    Matrix a = Matrix::identity(f, 2);
    Matrix b(f, 2, 2);
    b.at(0, 1) = Scalar::one(f);
    Matrix target = a.scaled(Scalar::from_int(f, 3)) + b.scaled(Scalar::from_int(f, 7));
    auto coords = express_in_basis({a, b}, target);
    REQUIRE(coords);
    CHECK((*coords)[0].residue() == 3);
    CHECK((*coords)[1].residue() == 7);
    Matrix c(f, 2, 2);
    c.at(1, 0) = Scalar::one(f);
    CHECK(!express_in_basis({a, b}, c));
}
