#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <equivalg/decompose.hpp>

#include "fixtures.hpp"

using namespace equivalg;
using namespace fixtures;

TEST_CASE("radical of semisimple and local algebras") {
    auto f = Field::prime(13);
    auto rad1 = radical_basis(*product_algebra(f, 2));
    REQUIRE(rad1);
    CHECK(rad1->empty());
    auto rad2 = radical_basis(*matrix2_algebra(f));
    REQUIRE(rad2);
    CHECK(rad2->empty());
    auto rad3 = radical_basis(*dual_numbers(f));
    REQUIRE(rad3);
    CHECK(rad3->size() == 1);
    auto rad4 = radical_basis(*group_algebra_c2(Field::prime(5)));
    REQUIRE(rad4);
    CHECK(rad4->empty());
}

TEST_CASE("primitive idempotents: k x k") {
    auto f = Field::prime(13);
    auto A = product_algebra(f, 2);
    auto dec = primitive_idempotents(*A);
    REQUIRE(dec.conclusive);
    REQUIRE(dec.idempotents.size() == 2);
    // the two coordinate idempotents, in some order
    for (const auto& e : dec.idempotents) {
        CHECK(A->multiply(e, e) == e);
        bool coord = (e[0].is_one() && e[1].is_zero()) || (e[0].is_zero() && e[1].is_one());
        CHECK(coord);
    }
}

TEST_CASE("primitive idempotents: kC2 over F_5") {
    auto f = Field::prime(5);
    auto A = group_algebra_c2(f);
    auto dec = primitive_idempotents(*A);
    REQUIRE(dec.conclusive);
    REQUIRE(dec.idempotents.size() == 2);
    // (1+s)/2 and (1-s)/2; 1/2 = 3 mod 5
    for (const auto& e : dec.idempotents) {
        CHECK(e[0].residue() == 3);
        CHECK((e[1].residue() == 3 || e[1].residue() == 2));
    }
}

TEST_CASE("primitive idempotents: local algebra and M2") {
    auto f = Field::prime(13);
    auto dn = dual_numbers(f);
    auto dec = primitive_idempotents(*dn);
    REQUIRE(dec.conclusive);
    REQUIRE(dec.idempotents.size() == 1);
    CHECK(dec.idempotents[0] == dn->unit());

    auto m2 = matrix2_algebra(f);
    auto dec2 = primitive_idempotents(*m2);
    REQUIRE(dec2.conclusive);
    CHECK(dec2.idempotents.size() == 2);
}

TEST_CASE("K0 basis and projectives") {
    auto f = Field::prime(13);
    auto A = product_algebra(f, 2);
    auto k0 = k0_basis(A);
    REQUIRE(k0.conclusive);
    CHECK(k0.class_reps.size() == 2);  // K0 rank 2
    for (const auto& p : k0.projectives) {
        CHECK(p.module.validate().ok);
        CHECK(p.module.dim() == 1);
    }

    auto m2 = matrix2_algebra(f);
    auto k0m = k0_basis(m2);
    REQUIRE(k0m.conclusive);
    CHECK(k0m.idempotents.size() == 2);
    CHECK(k0m.class_reps.size() == 1);  // both columns isomorphic

    auto dn = dual_numbers(f);
    auto k0d = k0_basis(dn);
    REQUIRE(k0d.conclusive);
    CHECK(k0d.class_reps.size() == 1);  // K0 rank 1

    auto kc2 = group_algebra_c2(Field::prime(5));
    auto k0c = k0_basis(kc2);
    REQUIRE(k0c.conclusive);
    CHECK(k0c.class_reps.size() == 2);
}

TEST_CASE("K0 permutations: swap is a transposition, identity is trivial") {
    auto f = Field::prime(13);
    auto A = product_algebra(f, 2);
    auto k0 = k0_basis(A);
    REQUIRE(k0.conclusive);
    auto sw = swap_map(A);
    auto perm = k0_permutation(A, k0, sw);
    REQUIRE(perm);
    CHECK((*perm)[0] == 1);
    CHECK((*perm)[1] == 0);
    auto perm_id = k0_permutation(A, k0, AlgebraMap::identity(A));
    REQUIRE(perm_id);
    CHECK((*perm_id)[0] == 0);
    CHECK((*perm_id)[1] == 1);
}

TEST_CASE("module decomposition") {
    auto f = Field::prime(13);
    auto A = product_algebra(f, 2);
    ModuleRep m = simple_of_product(A, 0).direct_sum(simple_of_product(A, 1));
    auto parts = decompose_module(m);
    REQUIRE(parts);
    REQUIRE(parts->size() == 2);
    for (const auto& p : *parts) {
        CHECK(p.module.dim() == 1);
        CHECK(p.module.validate().ok);
        // projection then inclusion is an idempotent, inclusion then projection the identity
        CHECK((p.inclusion * p.projection).is_identity());
    }
    CHECK(is_indecomposable(parts->at(0).module) == std::optional<bool>(true));
    CHECK(is_indecomposable(m) == std::optional<bool>(false));

    // regular module of M2 splits into two isomorphic 2-dim columns
    auto m2 = matrix2_algebra(f);
    ModuleRep reg = ModuleRep::regular(m2);
    auto parts2 = decompose_module(reg);
    REQUIRE(parts2);
    REQUIRE(parts2->size() == 2);
    CHECK(parts2->at(0).module.dim() == 2);
    CHECK(module_isomorphism(parts2->at(0).module, parts2->at(1).module).has_value());
}

TEST_CASE("minimal polynomial") {
    auto f = Field::prime(13);
    auto A = product_algebra(f, 2);
    Vec a = A->zero();
    a[0] = Scalar::from_int(f, 2);
    a[1] = Scalar::from_int(f, 5);
    auto mu = minimal_polynomial(*A, a);
    // (x-2)(x-5) = x^2 - 7x + 10
    REQUIRE(mu.size() == 3);
    CHECK(mu[0].residue() == 10);
    CHECK(mu[1] == Scalar::from_int(f, -7));
    CHECK(mu[2].is_one());
}
