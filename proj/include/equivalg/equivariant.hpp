/**
 * @file equivariant.hpp
 * @brief Equivariant modules over a weak G-action, hom spaces via the
 *        averaging projector, the crossed-product correspondence, induction,
 *        both adjunctions, and the two associated monads.
 *
 * All functor-level statements are certified as exact matrix identities on
 * explicit probe modules. The carrier of Ind(X) is the direct sum of the
 * twists F_h(X) in the enumeration order of the group elements.
 */
#pragma once

#include "action.hpp"

namespace equivalg {

/// (X, alpha) with alpha_g: X -> F_g(X) stored per group-element index.
struct EquivariantModule {
    ModuleRep base;
    std::vector<Matrix> alpha;

    const Matrix& a(const AbGroup& G, const AbGroup::Elem& g) const {
        return alpha[G.index_of(g)];
    }
};

inline ValidationReport validate_equivariant(const ModuleCategoryAction& act,
                                             const EquivariantModule& E) {
    ValidationReport rep;
    const AbGroup& G = *act.group();
    const Algebra& A = *act.algebra();
    auto elems = G.elements();
    for (const auto& g : elems) {
        const Matrix& Ag = E.a(G, g);
        if (!Ag.inverse()) {
            rep.fail("alpha" + AbGroup::elem_str(g) + " is not invertible");
            continue;
        }
        ModuleRep tgt = act.F(g, E.base);
        for (std::size_t b = 0; b < A.dim(); ++b)
            if (!(E.base.action()[b] * Ag == Ag * tgt.action()[b])) {
                rep.fail("alpha" + AbGroup::elem_str(g) + " is not a module morphism to the twist");
                break;
            }
    }
    for (const auto& g : elems)
        for (const auto& h : elems) {
            Matrix rhs = E.a(G, g) * E.a(G, h) * act.eps(g, h, E.base);
            if (!(E.a(G, G.add(g, h)) == rhs))
                rep.fail("equivariance relation fails at (" + AbGroup::elem_str(g) + "," +
                         AbGroup::elem_str(h) + ")");
        }
    auto uinv = act.unit_u(E.base).inverse();
    if (!uinv || !(E.a(G, G.identity()) == *uinv))
        rep.fail("alpha at the identity is not the inverse unit");
    return rep;
}

/// g.f = beta_g^{-1} o F_g(f) o alpha_g on Hom(X, Y).
inline Matrix hom_g_action(const ModuleCategoryAction& act, const EquivariantModule& E1,
                           const EquivariantModule& E2, const AbGroup::Elem& g,
                           const Matrix& f) {
    const AbGroup& G = *act.group();
    return E1.a(G, g) * f * *E2.a(G, g).inverse();
}

/// Basis of Hom_{C^G}(E1, E2) as the image of the averaging projector.
inline std::vector<Matrix> hom_equivariant(const ModuleCategoryAction& act,
                                           const EquivariantModule& E1,
                                           const EquivariantModule& E2) {
    const FieldPtr& f = act.algebra()->field();
    const AbGroup& G = *act.group();
    Scalar n = Scalar::from_int(f, static_cast<long>(G.order()));
    if (n.is_zero()) throw std::domain_error("group order vanishes in the field");
    auto homs = hom_space(E1.base, E2.base);
    std::vector<Matrix> averaged;
    for (const auto& h : homs) {
        Matrix acc(f, E1.base.dim(), E2.base.dim());
        for (const auto& g : G.elements()) acc = acc + hom_g_action(act, E1, E2, g, h);
        averaged.push_back(acc.scaled(Scalar::one(f) / n));
    }
    // echelonize the averaged family to a basis of the fixed subspace
    std::vector<Vec> rows;
    for (const auto& m : averaged) rows.push_back(vectorize(m));
    auto basis_rows = echelon_basis(f, rows, E1.base.dim() * E2.base.dim());
    std::vector<Matrix> out;
    for (const auto& r : basis_rows)
        out.push_back(devectorize(f, r, E1.base.dim(), E2.base.dim()));
    // every basis element is fixed by construction; assert on one element
    for (const auto& m : out)
        for (const auto& g : G.elements())
            if (!(hom_g_action(act, E1, E2, g, m) == m))
                throw std::logic_error("averaged morphism is not fixed");
    return out;
}

/// Equivariant isomorphism search.
inline std::optional<Matrix> equivariant_isomorphism(const ModuleCategoryAction& act,
                                                     const EquivariantModule& E1,
                                                     const EquivariantModule& E2,
                                                     std::uint64_t seed = 0) {
    if (E1.base.dim() != E2.base.dim()) return std::nullopt;
    return find_invertible_in_span(hom_equivariant(act, E1, E2), seed);
}

inline EquivariantModule direct_sum_equivariant(const EquivariantModule& E1,
                                                const EquivariantModule& E2) {
    EquivariantModule out;
    out.base = E1.base.direct_sum(E2.base);
    const FieldPtr& f = E1.base.algebra()->field();
    std::size_t n = E1.base.dim(), m = E2.base.dim();
    for (std::size_t i = 0; i < E1.alpha.size(); ++i) {
        Matrix blk(f, n + m, n + m);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) blk.at(r, c) = E1.alpha[i].at(r, c);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) blk.at(n + r, n + c) = E2.alpha[i].at(r, c);
        out.alpha.push_back(blk);
    }
    return out;
}

/// Transport to a right module over the crossed product:
/// m.(r g-bar) = (alpha_{g^{-1}})^{-1}(m.r).
inline ModuleRep to_crossed_module(const ModuleCategoryAction& act, const CrossedProduct& cp,
                                   const EquivariantModule& E) {
    const AbGroup& G = *act.group();
    const Algebra& R = *act.algebra();
    std::vector<Matrix> mats;
    for (const auto& g : G.elements()) {
        Matrix ainv = *E.a(G, G.neg(g)).inverse();
        for (std::size_t i = 0; i < R.dim(); ++i)
            mats.push_back(E.base.act_elem(R.basis_elem(i)) * ainv);
    }
    // reorder to the crossed-product basis layout (g-block, base index)
    ModuleRep out(cp.result, std::move(mats));
    auto rep = out.validate();
    if (!rep.ok) throw std::logic_error("crossed transport broke the module axioms");
    return out;
}

/// Inverse transport: restrict along the embedding and read beta_g off the
/// action of g-bar, via beta_g(x.bar(g^{-1})) = x.
inline EquivariantModule from_crossed_module(const ModuleCategoryAction& act,
                                             const CrossedProduct& cp, const ModuleRep& M) {
    const AbGroup& G = *act.group();
    const Algebra& R = *act.algebra();
    EquivariantModule out;
    std::vector<Matrix> base_act;
    for (std::size_t i = 0; i < R.dim(); ++i)
        base_act.push_back(M.act_elem(cp.embed(R.basis_elem(i))));
    out.base = ModuleRep(act.algebra(), std::move(base_act));
    for (const auto& g : G.elements()) {
        Matrix bar = M.act_elem(cp.element(R.unit(), G.neg(g)));
        auto inv = bar.inverse();
        if (!inv) throw std::invalid_argument("bar element does not act invertibly");
        out.alpha.push_back(*inv);
    }
    return out;
}

/// Ind(X) = (direct sum of F_h(X), eps(X)) with the alpha-block from summand h
/// to the position of g^{-1}h given by the inverse of (eps_{g, g^{-1}h})_X.
inline EquivariantModule induction(const ModuleCategoryAction& act, const ModuleRep& X) {
    const AbGroup& G = *act.group();
    const FieldPtr& f = act.algebra()->field();
    auto elems = G.elements();
    std::size_t n = X.dim(), N = n * elems.size();
    EquivariantModule out;
    std::vector<ModuleRep> twists;
    for (const auto& h : elems) twists.push_back(act.F(h, X));
    std::vector<Matrix> base_act;
    for (std::size_t b = 0; b < act.algebra()->dim(); ++b) {
        Matrix blk(f, N, N);
        for (std::size_t hi = 0; hi < elems.size(); ++hi)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    blk.at(hi * n + r, hi * n + c) = twists[hi].action()[b].at(r, c);
        base_act.push_back(blk);
    }
    out.base = ModuleRep(act.algebra(), std::move(base_act));
    for (const auto& g : elems) {
        Matrix ag(f, N, N);
        for (const auto& h : elems) {
            auto pos = G.add(G.neg(g), h);
            Matrix blk = *act.eps(g, pos, X).inverse();
            std::size_t hi = G.index_of(h), pi = G.index_of(pos);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) ag.at(hi * n + r, pi * n + c) = blk.at(r, c);
        }
        out.alpha.push_back(ag);
    }
    return out;
}

// --- block-matrix helpers for the adjunction and monad data ---

namespace detail {
inline void put_block(Matrix& big, std::size_t r0, std::size_t c0, const Matrix& blk) {
    for (std::size_t r = 0; r < blk.rows(); ++r)
        for (std::size_t c = 0; c < blk.cols(); ++c) big.at(r0 + r, c0 + c) = blk.at(r, c);
}
inline Matrix block_diag(const FieldPtr& f, const Matrix& blk, std::size_t copies) {
    Matrix big(f, blk.rows() * copies, blk.cols() * copies);
    for (std::size_t i = 0; i < copies; ++i) put_block(big, i * blk.rows(), i * blk.cols(), blk);
    return big;
}
}  // namespace detail

/// The carrier of M(X) = U Ind(X): the direct sum of the twists F_h(X).
inline ModuleRep monad_m_carrier(const ModuleCategoryAction& act, const ModuleRep& X) {
    return induction(act, X).base;
}

/// eta_X = (u_X^{-1}, 0, ..., 0)^t as a map X -> M(X).
inline Matrix monad_m_unit(const ModuleCategoryAction& act, const ModuleRep& X) {
    const FieldPtr& f = act.algebra()->field();
    const AbGroup& G = *act.group();
    Matrix eta(f, X.dim(), X.dim() * G.order());
    detail::put_block(eta, 0, G.index_of(G.identity()) * X.dim(), *act.unit_u(X).inverse());
    return eta;
}

/// mu_X: M^2(X) -> M(X) with entry F_h F_g(X) -> F_{h'}(X) equal to
/// delta_{hg, h'} (eps_{h,g})_X. Outer blocks indexed by h, inner by g.
inline Matrix monad_m_mult(const ModuleCategoryAction& act, const ModuleRep& X) {
    const FieldPtr& f = act.algebra()->field();
    const AbGroup& G = *act.group();
    auto elems = G.elements();
    std::size_t n = X.dim(), m = elems.size();
    Matrix mu(f, n * m * m, n * m);
    for (const auto& h : elems)
        for (const auto& g : elems) {
            std::size_t row = (G.index_of(h) * m + G.index_of(g)) * n;
            std::size_t col = G.index_of(G.add(h, g)) * n;
            detail::put_block(mu, row, col, act.eps(h, g, X));
        }
    return mu;
}

/// Counit component epsilon_{(Y,beta)} = sum_h beta_h^{-1}: Ind(Y) -> (Y, beta).
inline Matrix counit_eps(const ModuleCategoryAction& act, const EquivariantModule& E) {
    const FieldPtr& f = act.algebra()->field();
    const AbGroup& G = *act.group();
    std::size_t n = E.base.dim();
    Matrix eps(f, n * G.order(), n);
    for (std::size_t hi = 0; hi < G.order(); ++hi)
        detail::put_block(eps, hi * n, 0, *E.alpha[hi].inverse());
    return eps;
}

/// Unit component eta'_{(Y,beta)} = (beta_h)_h: (Y, beta) -> Ind(Y).
inline Matrix unit_eta_prime(const ModuleCategoryAction& act, const EquivariantModule& E) {
    const FieldPtr& f = act.algebra()->field();
    const AbGroup& G = *act.group();
    std::size_t n = E.base.dim();
    Matrix eta(f, n, n * G.order());
    for (std::size_t hi = 0; hi < G.order(); ++hi) detail::put_block(eta, 0, hi * n, E.alpha[hi]);
    return eta;
}

/// Counit component epsilon'_X = (u_X, 0, ..., 0): U Ind(X) -> X.
inline Matrix counit_eps_prime(const ModuleCategoryAction& act, const ModuleRep& X) {
    const FieldPtr& f = act.algebra()->field();
    const AbGroup& G = *act.group();
    Matrix eps(f, X.dim() * G.order(), X.dim());
    detail::put_block(eps, G.index_of(G.identity()) * X.dim(), 0, act.unit_u(X));
    return eps;
}

/// The adj1 bijection Hom_{C^G}(Ind X, E) -> Hom_C(X, U E): T -> theta_e o u_X^{-1}.
inline Matrix adj1_forward(const ModuleCategoryAction& act, const ModuleRep& X,
                           const EquivariantModule& E, const Matrix& T) {
    return monad_m_unit(act, X) * T;
}

/// Its inverse: f: X -> U E goes to epsilon_E o Ind(f).
inline Matrix adj1_backward(const ModuleCategoryAction& act, const ModuleRep& X,
                            const EquivariantModule& E, const Matrix& f) {
    const AbGroup& G = *act.group();
    return detail::block_diag(act.algebra()->field(), f, G.order()) * counit_eps(act, E);
}

/// The adj2 bijection Hom_C(U E, X) -> Hom_{C^G}(E, Ind X): f -> (F_h(f) o beta_h)_h.
inline Matrix adj2_forward(const ModuleCategoryAction& act, const EquivariantModule& E,
                           const ModuleRep& X, const Matrix& f) {
    const AbGroup& G = *act.group();
    return unit_eta_prime(act, E) * detail::block_diag(act.algebra()->field(), f, G.order());
}

/// Its inverse: theta: E -> Ind X goes to epsilon'_X applied after theta.
inline Matrix adj2_backward(const ModuleCategoryAction& act, const EquivariantModule& E,
                            const ModuleRep& X, const Matrix& theta) {
    return theta * counit_eps_prime(act, X);
}

inline ValidationReport verify_adjunctions(const ModuleCategoryAction& act,
                                           const std::vector<ModuleRep>& module_probes,
                                           const std::vector<EquivariantModule>& equi_probes) {
    ValidationReport rep;
    const FieldPtr& f = act.algebra()->field();
    const AbGroup& G = *act.group();
    Scalar n = Scalar::from_int(f, static_cast<long>(G.order()));
    if (n.is_zero()) {
        rep.fail("group order vanishes in the field");
        return rep;
    }
    for (const auto& X : module_probes) {
        EquivariantModule indX = induction(act, X);
        for (const auto& E : equi_probes) {
            auto lhs = hom_equivariant(act, indX, E);
            auto rhs = hom_space(X, E.base);
            if (lhs.size() != rhs.size()) {
                rep.fail("adj1 dimension mismatch");
                continue;
            }
            // adj1 forward is injective on the hom basis and inverts backward
            std::vector<Vec> imgs;
            for (const auto& T : lhs) {
                Matrix img = adj1_forward(act, X, E, T);
                imgs.push_back(vectorize(img));
                if (!(adj1_backward(act, X, E, img) == T)) rep.fail("adj1 round trip fails");
            }
            if (echelon_basis(f, imgs, X.dim() * E.base.dim()).size() != lhs.size())
                rep.fail("adj1 forward is not injective");
            // adj2
            auto lhs2 = hom_space(E.base, X);
            auto rhs2 = hom_equivariant(act, E, indX);
            if (lhs2.size() != rhs2.size()) {
                rep.fail("adj2 dimension mismatch");
                continue;
            }
            std::vector<Vec> imgs2;
            for (const auto& ff : lhs2) {
                Matrix img = adj2_forward(act, E, X, ff);
                imgs2.push_back(vectorize(img));
                if (!(adj2_backward(act, E, X, img) == ff)) rep.fail("adj2 round trip fails");
                // image must be equivariant
                bool fixed = true;
                for (const auto& g : G.elements())
                    fixed = fixed && hom_g_action(act, E, indX, g, img) == img;
                if (!fixed) rep.fail("adj2 image is not equivariant");
            }
            if (echelon_basis(f, imgs2, E.base.dim() * indX.base.dim()).size() != lhs2.size())
                rep.fail("adj2 forward is not injective");
        }
    }
    // triangle identities and the Lemma 4.5 splittings
    for (const auto& X : module_probes) {
        EquivariantModule indX = induction(act, X);
        // (Ind, U): eps Ind o Ind eta = Id_Ind
        Matrix t1 = detail::block_diag(f, monad_m_unit(act, X), G.order()) * counit_eps(act, indX);
        if (!t1.is_identity()) rep.fail("triangle identity (Ind,U) on Ind fails");
        // (U, Ind): Ind eps' o eta' Ind = Id_Ind
        Matrix t2 = unit_eta_prime(act, indX) *
                    detail::block_diag(f, counit_eps_prime(act, X), G.order());
        if (!t2.is_identity()) rep.fail("triangle identity (U,Ind) on Ind fails");
    }
    for (const auto& E : equi_probes) {
        // (Ind, U): U eps o eta U = Id_U
        Matrix t3 = monad_m_unit(act, E.base) * counit_eps(act, E);
        if (!t3.is_identity()) rep.fail("triangle identity (Ind,U) on U fails");
        // (U, Ind): eps' U o U eta' = Id_U
        Matrix t4 = unit_eta_prime(act, E) * counit_eps_prime(act, E.base);
        if (!t4.is_identity()) rep.fail("triangle identity (U,Ind) on U fails");
        // Lemma 4.5 splittings
        Scalar inv_n = Scalar::one(f) / n;
        Matrix sec = unit_eta_prime(act, E).scaled(inv_n) * counit_eps(act, E);
        if (!sec.is_identity()) rep.fail("split counit section fails");
        Matrix ret = unit_eta_prime(act, E) * counit_eps(act, E).scaled(inv_n);
        if (!ret.is_identity()) rep.fail("split unit retraction fails");
    }
    return rep;
}

inline ValidationReport verify_monad_laws(const ModuleCategoryAction& act,
                                          const std::vector<ModuleRep>& module_probes,
                                          const std::vector<EquivariantModule>& equi_probes) {
    ValidationReport rep;
    const FieldPtr& f = act.algebra()->field();
    const AbGroup& G = *act.group();
    std::size_t m = G.order();
    for (const auto& X : module_probes) {
        ModuleRep MX = monad_m_carrier(act, X);
        Matrix mu = monad_m_mult(act, X);
        Matrix eta = monad_m_unit(act, X);
        // mu o M eta = Id = mu o eta M
        Matrix meta = detail::block_diag(f, eta, m);
        if (!(meta * mu).is_identity()) rep.fail("monad M law mu o M eta = Id fails");
        Matrix etam = monad_m_unit(act, MX);
        if (!(etam * mu).is_identity()) rep.fail("monad M law mu o eta M = Id fails");
        // associativity: mu o M mu = mu o mu M on M^3(X)
        Matrix mmu = detail::block_diag(f, mu, m);
        Matrix mum = monad_m_mult(act, MX);
        if (!(mmu * mu == mum * mu)) rep.fail("monad M associativity fails");
        // mu equals U eps Ind, recomputed from the counit
        EquivariantModule indX = induction(act, X);
        if (!(mu == counit_eps(act, indX))) rep.fail("mu differs from U eps Ind");
    }
    for (const auto& E : equi_probes) {
        // N = Ind U on C^G
        EquivariantModule NE = induction(act, E.base);
        EquivariantModule NNE = induction(act, NE.base);
        Matrix etap = unit_eta_prime(act, E);
        Matrix mup = detail::block_diag(f, counit_eps_prime(act, E.base), m);
        // mu' o N eta' = Id: N eta' = Ind(eta'_E) = block diag
        Matrix netap = detail::block_diag(f, etap, m);
        if (!(netap * mup).is_identity()) rep.fail("monad N law mu' o N eta' = Id fails");
        // mu' o eta' N = Id
        Matrix etapn = unit_eta_prime(act, NE);
        if (!(etapn * mup).is_identity()) rep.fail("monad N law mu' o eta' N = Id fails");
        // associativity on N^3
        Matrix nmup = detail::block_diag(f, mup, m);
        Matrix mupn = detail::block_diag(f, counit_eps_prime(act, NE.base), m);
        if (!(nmup * mup == mupn * mup)) rep.fail("monad N associativity fails");
        // mu' is a morphism in C^G from N^2(E) to N(E)
        bool morph = true;
        for (const auto& g : G.elements())
            morph = morph && hom_g_action(act, NNE, NE, g, mup) == mup;
        if (!morph) rep.fail("mu' is not an equivariant morphism");
        // comparison functor: K(E) = (Y, sum alpha_h^{-1}) is an M-module
        Matrix lambda = counit_eps(act, E);
        Matrix eta = monad_m_unit(act, E.base);
        if (!(eta * lambda).is_identity()) rep.fail("comparison module unit law fails");
        Matrix mlambda = detail::block_diag(f, lambda, m);
        Matrix mu = monad_m_mult(act, E.base);
        if (!(mlambda * lambda == mu * lambda)) rep.fail("comparison module action law fails");
    }
    return rep;
}

}  // namespace equivalg
