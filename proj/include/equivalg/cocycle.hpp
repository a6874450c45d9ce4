/**
 * @file cocycle.hpp
 * @brief Scalar 2-cocycles on a finite abelian group with root-of-unity
 *        values, the cocycle identity, and the coboundary decision.
 *
 * Coboundary testing normalizes lambda(e) = 1, then searches exhaustively in
 * increasing canonical order when the space of maps is small (this makes the
 * returned witness deterministic), and otherwise decides by discrete
 * logarithm into Z/M followed by a Smith-form linear solve mod M.
 */
#pragma once

#include <algorithm>
#include <map>

#include "group.hpp"
#include "smith.hpp"

namespace equivalg {

/// Table sigma: G x G -> k^*, stored by element index.
struct Cocycle2 {
    const AbGroup* group = nullptr;
    FieldPtr field;
    std::vector<std::vector<Scalar>> table;  // table[i][j] = sigma(g_i, g_j)

    const Scalar& at(const AbGroup::Elem& g, const AbGroup::Elem& h) const {
        return table[group->index_of(g)][group->index_of(h)];
    }

    static Cocycle2 constant_one(const AbGroup& g, const FieldPtr& f) {
        Cocycle2 c;
        c.group = &g;
        c.field = f;
        c.table.assign(g.order(), std::vector<Scalar>(g.order(), Scalar::one(f)));
        return c;
    }

    Cocycle2 pointwise_product(const Cocycle2& o) const {
        Cocycle2 c = *this;
        for (std::size_t i = 0; i < table.size(); ++i)
            for (std::size_t j = 0; j < table.size(); ++j)
                c.table[i][j] = c.table[i][j] * o.table[i][j];
        return c;
    }
    Cocycle2 pointwise_inverse() const {
        Cocycle2 c = *this;
        for (auto& row : c.table)
            for (auto& v : row) v = v.inverse();
        return c;
    }
};

/// Coboundary of lambda: (d lambda)(g,h) = lambda(gh) lambda(g)^{-1} lambda(h)^{-1}.
inline Cocycle2 coboundary_of(const AbGroup& g, const FieldPtr& f,
                              const std::vector<Scalar>& lambda) {
    Cocycle2 c = Cocycle2::constant_one(g, f);
    auto elems = g.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j) {
            std::size_t ij = g.index_of(g.add(elems[i], elems[j]));
            c.table[i][j] = lambda[ij] * lambda[i].inverse() * lambda[j].inverse();
        }
    return c;
}

inline bool is_2cocycle(const Cocycle2& s) {
    const AbGroup& g = *s.group;
    auto elems = g.elements();
    for (const auto& a : elems)
        for (const auto& b : elems)
            for (const auto& c : elems) {
                Scalar lhs = s.at(g.add(a, b), c) * s.at(a, b);
                Scalar rhs = s.at(a, g.add(b, c)) * s.at(b, c);
                if (lhs != rhs) return false;
            }
    return true;
}

/// Torsion subgroup of k^* as an ordered power list of one generator.
inline std::vector<Scalar> torsion_elements(const FieldPtr& f) {
    Scalar gen = f->kind() == FieldKind::Prime
                     ? primitive_root_of_unity(f, f->torsion_order())
                     : (f->cyclotomic_index() % 2 == 0 ? Scalar::generator(f)
                                                       : -Scalar::generator(f));
    std::vector<Scalar> out;
    Scalar cur = Scalar::one(f);
    for (std::uint64_t k = 0; k < f->torsion_order(); ++k, cur = cur * gen) out.push_back(cur);
    return out;
}

struct CoboundaryResult {
    enum Status { Trivial, Nontrivial, Undecidable } status;
    std::vector<Scalar> witness;  // lambda by element index; valid when Trivial
};

inline CoboundaryResult is_coboundary(const Cocycle2& s) {
    const AbGroup& g = *s.group;
    const FieldPtr& f = s.field;
    std::uint64_t M = f->torsion_order();
    auto mu = torsion_elements(f);
    auto dlog = [&](const Scalar& v) -> std::optional<std::uint64_t> {
        for (std::uint64_t k = 0; k < mu.size(); ++k)
            if (mu[k] == v) return k;
        return std::nullopt;
    };
    std::size_t n = g.order();
    std::vector<std::vector<std::uint64_t>> t(n, std::vector<std::uint64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto d = dlog(s.table[i][j]);
            if (!d) return {CoboundaryResult::Undecidable, {}};
            t[i][j] = *d;
        }
    auto verify = [&](const std::vector<Scalar>& lam) {
        Cocycle2 d = coboundary_of(g, f, lam);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!(d.table[i][j] == s.table[i][j])) return false;
        return true;
    };
    // exhaustive in increasing canonical order when small, for a deterministic
    // smallest witness
    double space = 1;
    for (std::size_t i = 1; i < n; ++i) space *= static_cast<double>(M);
    if (space <= 300000.0) {
        // enumeration order: prime fields by residue value, cyclotomic by
        // generator exponent
        std::vector<Scalar> order = mu;
        if (f->kind() == FieldKind::Prime)
            std::sort(order.begin(), order.end(), [](const Scalar& a, const Scalar& b) {
                return a.residue() < b.residue();
            });
        std::vector<std::size_t> idx(n, 0);  // idx[0] unused; lambda(e) = 1
        while (true) {
            std::vector<Scalar> lam(n, Scalar::one(f));
            for (std::size_t i = 1; i < n; ++i) lam[i] = order[idx[i]];
            if (verify(lam)) return {CoboundaryResult::Trivial, lam};
            std::size_t i = 1;
            for (; i < n; ++i) {
                idx[i] = (idx[i] + 1) % M;
                if (idx[i] != 0) break;
            }
            if (i == n) break;
        }
        return {CoboundaryResult::Nontrivial, {}};
    }
    // linear system over Z/M in unknowns lambda-hat(g), g != e
    auto elems = g.elements();
    ZMat A(n * n, std::vector<mpz_class>(n - 1, 0));
    std::vector<mpz_class> b(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t row = i * n + j;
            std::size_t ij = g.index_of(g.add(elems[i], elems[j]));
            if (ij != 0) A[row][ij - 1] += 1;
            if (i != 0) A[row][i - 1] -= 1;
            if (j != 0) A[row][j - 1] -= 1;
            b[row] = static_cast<long>(t[i][j]);
        }
    auto x = solve_mod(A, b, mpz_class(static_cast<unsigned long>(M)));
    if (!x) return {CoboundaryResult::Nontrivial, {}};
    std::vector<Scalar> lam(n, Scalar::one(f));
    for (std::size_t i = 1; i < n; ++i) lam[i] = mu[(*x)[i - 1].get_ui() % M];
    if (!verify(lam)) return {CoboundaryResult::Nontrivial, {}};
    return {CoboundaryResult::Trivial, lam};
}

}  // namespace equivalg
