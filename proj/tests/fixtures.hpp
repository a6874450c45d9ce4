// Shared small algebras and modules used across the test suites.
#pragma once

#include <equivalg/algebra.hpp>

namespace fixtures {

using namespace equivalg;

/// k^n with the coordinatewise product.
inline AlgebraPtr product_algebra(const FieldPtr& f, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
    std::vector<std::vector<Vec>> mul(n, std::vector<Vec>(n, Vec(n, Scalar::zero(f))));
    for (std::size_t i = 0; i < n; ++i) mul[i][i][i] = Scalar::one(f);
    Vec unit(n, Scalar::one(f));
    return std::make_shared<Algebra>(f, names, mul, unit);
}

/// Group algebra kC2 = span{1, s}, s^2 = 1.
inline AlgebraPtr group_algebra_c2(const FieldPtr& f) {
    Vec z(2, Scalar::zero(f));
    Vec one = z, s = z;
    one[0] = Scalar::one(f);
    s[1] = Scalar::one(f);
    std::vector<std::vector<Vec>> mul{{one, s}, {s, one}};
    return std::make_shared<Algebra>(f, std::vector<std::string>{"1", "s"}, mul, one);
}

/// M2(k) on the elementary-matrix basis e11, e12, e21, e22.
inline AlgebraPtr matrix2_algebra(const FieldPtr& f) {
    auto idx = [](std::size_t a, std::size_t b) { return a * 2 + b; };
    std::vector<std::vector<Vec>> mul(4, std::vector<Vec>(4, Vec(4, Scalar::zero(f))));
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t d = 0; d < 2; ++d)
                    if (b == c) mul[idx(a, b)][idx(c, d)][idx(a, d)] = Scalar::one(f);
    Vec unit(4, Scalar::zero(f));
    unit[idx(0, 0)] = unit[idx(1, 1)] = Scalar::one(f);
    return std::make_shared<Algebra>(
        f, std::vector<std::string>{"e11", "e12", "e21", "e22"}, mul, unit);
}

/// k[x]/(x^2) on the basis 1, x.
inline AlgebraPtr dual_numbers(const FieldPtr& f) {
    Vec z(2, Scalar::zero(f));
    Vec one = z, x = z;
    one[0] = Scalar::one(f);
    x[1] = Scalar::one(f);
    std::vector<std::vector<Vec>> mul{{one, x}, {x, z}};
    return std::make_shared<Algebra>(f, std::vector<std::string>{"1", "x"}, mul, one);
}

/// The one-dimensional module of k^n on which e_i acts by 1 and the rest by 0.
inline ModuleRep simple_of_product(const AlgebraPtr& a, std::size_t i) {
    const FieldPtr& f = a->field();
    std::vector<Matrix> act;
    for (std::size_t j = 0; j < a->dim(); ++j) {
        Matrix m(f, 1, 1);
        if (i == j) m.at(0, 0) = Scalar::one(f);
        act.push_back(m);
    }
    return ModuleRep(a, act);
}

/// Coordinate-swap automorphism of k x k.
inline AlgebraMap swap_map(const AlgebraPtr& kxk) {
    Matrix m(kxk->field(), 2, 2);
    m.at(0, 1) = m.at(1, 0) = Scalar::one(kxk->field());
    return AlgebraMap(kxk, kxk, m);
}

/// Cyclic coordinate shift e_i -> e_{i+1} on k^n.
inline AlgebraMap cycle_map(const AlgebraPtr& kn) {
    std::size_t n = kn->dim();
    Matrix m(kn->field(), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, (i + 1) % n) = Scalar::one(kn->field());
    return AlgebraMap(kn, kn, m);
}

}  // namespace fixtures
