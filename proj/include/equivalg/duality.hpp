/**
 * @file duality.hpp
 * @brief The dual character-group action on equivariant modules, the Theta
 *        construction, the monad isomorphism, equivariantized functors, and
 *        the stable-object bijection with its orbit census.
 *
 * Characters of G are indexed by elements of G itself (group.hpp fixes the
 * roots of unity), so all chi-indexed blocks reuse the group enumeration.
 */
#pragma once

#include "equivariant.hpp"

namespace equivalg {

/// F_chi(X, alpha) = (X, chi (x) alpha) with (chi (x) alpha)_g = chi(g^{-1}) alpha_g.
inline EquivariantModule dual_twist(const ModuleCategoryAction& act, const Character& chi,
                                    EquivariantModule E) {
    const AbGroup& G = *act.group();
    for (const auto& g : G.elements())
        E.alpha[G.index_of(g)] = E.alpha[G.index_of(g)].scaled(chi(G.neg(g)));
    return E;
}

/// A G-hat-equivariant object over C^G: (E, beta) with beta_chi: E -> F_chi(E),
/// indexed by the exponent vector of chi. The dual action is strict.
struct NestedEquivariant {
    EquivariantModule e;
    std::vector<Matrix> beta;
};

inline ValidationReport validate_nested(const ModuleCategoryAction& act,
                                        const NestedEquivariant& N) {
    ValidationReport rep;
    const AbGroup& G = *act.group();
    const FieldPtr& f = act.algebra()->field();
    auto chars = character_group(G, f);
    auto elems = G.elements();
    if (!validate_equivariant(act, N.e).ok) rep.fail("underlying equivariant module invalid");
    for (std::size_t ci = 0; ci < chars.size(); ++ci) {
        const Matrix& b = N.beta[ci];
        if (!b.inverse()) rep.fail("beta is not invertible");
        // morphism in C^G from E to the chi-twist
        EquivariantModule tgt = dual_twist(act, chars[ci], N.e);
        for (std::size_t bi = 0; bi < act.algebra()->dim(); ++bi)
            if (!(N.e.base.action()[bi] * b == b * tgt.base.action()[bi])) {
                rep.fail("beta is not a module morphism");
                break;
            }
        for (const auto& g : elems)
            if (!(b * tgt.a(G, g) == N.e.a(G, g) * b)) {
                rep.fail("beta is not equivariant");
                break;
            }
    }
    // strictness: beta at the trivial character is the identity, and
    // beta_{chi chi'} = F_chi(beta_{chi'}) o beta_chi = beta_chi . beta_{chi'}
    if (!N.beta[G.index_of(G.identity())].is_identity())
        rep.fail("beta at the trivial character is not the identity");
    for (const auto& x : elems)
        for (const auto& y : elems) {
            const Matrix& lhs = N.beta[G.index_of(G.add(x, y))];
            if (!(lhs == N.beta[G.index_of(x)] * N.beta[G.index_of(y)]))
                rep.fail("beta is not multiplicative");
        }
    return rep;
}

/// Theta(X) = (Ind(X), can(X)) with can(X)_chi = (+)_h chi(h).
inline NestedEquivariant theta(const ModuleCategoryAction& act, const ModuleRep& X) {
    const AbGroup& G = *act.group();
    const FieldPtr& f = act.algebra()->field();
    NestedEquivariant out{induction(act, X), {}};
    auto chars = character_group(G, f);
    for (const auto& chi : chars) {
        Matrix b(f, out.e.base.dim(), out.e.base.dim());
        for (const auto& h : G.elements()) {
            Scalar v = chi(h);
            std::size_t off = G.index_of(h) * X.dim();
            for (std::size_t i = 0; i < X.dim(); ++i) b.at(off + i, off + i) = v;
        }
        out.beta.push_back(b);
    }
    return out;
}

/// chi.f = beta_chi^{-1} o F_chi(f) o beta'_chi on Hom_{C^G}; fixed points give
/// the hom space in the double-equivariant category.
inline std::vector<Matrix> hom_nested(const ModuleCategoryAction& act,
                                      const NestedEquivariant& N1,
                                      const NestedEquivariant& N2) {
    const FieldPtr& f = act.algebra()->field();
    const AbGroup& G = *act.group();
    Scalar n = Scalar::from_int(f, static_cast<long>(G.order()));
    if (n.is_zero()) throw std::domain_error("group order vanishes in the field");
    auto homs = hom_equivariant(act, N1.e, N2.e);
    std::vector<Vec> rows;
    for (const auto& h : homs) {
        Matrix acc(f, N1.e.base.dim(), N2.e.base.dim());
        for (std::size_t ci = 0; ci < G.order(); ++ci)
            acc = acc + N1.beta[ci] * h * *N2.beta[ci].inverse();
        rows.push_back(vectorize(acc.scaled(Scalar::one(f) / n)));
    }
    auto basis_rows = echelon_basis(f, rows, N1.e.base.dim() * N2.e.base.dim());
    std::vector<Matrix> out;
    for (const auto& r : basis_rows)
        out.push_back(devectorize(f, r, N1.e.base.dim(), N2.e.base.dim()));
    return out;
}

inline std::optional<Matrix> nested_isomorphism(const ModuleCategoryAction& act,
                                                const NestedEquivariant& N1,
                                                const NestedEquivariant& N2,
                                                std::uint64_t seed = 0) {
    if (N1.e.base.dim() != N2.e.base.dim()) return std::nullopt;
    return find_invertible_in_span(hom_nested(act, N1, N2), seed);
}

/// The monad isomorphism f: M-hat(E) -> N(E) of Lemma 4.8, with the
/// chi-row/h-column block chi(h^{-1}) alpha_h, and its explicit inverse.
struct MonadIso {
    Matrix fwd;
    Matrix inv;
};

inline MonadIso monad_isomorphism(const ModuleCategoryAction& act, const EquivariantModule& E) {
    const AbGroup& G = *act.group();
    const FieldPtr& f = act.algebra()->field();
    auto chars = character_group(G, f);
    std::size_t n = E.base.dim(), m = G.order();
    Scalar inv_m = Scalar::one(f) / Scalar::from_int(f, static_cast<long>(m));
    MonadIso out{Matrix(f, n * m, n * m), Matrix(f, n * m, n * m)};
    for (std::size_t ci = 0; ci < m; ++ci)
        for (const auto& h : G.elements()) {
            std::size_t hi = G.index_of(h);
            detail::put_block(out.fwd, ci * n, hi * n,
                              E.alpha[hi].scaled(chars[ci](G.neg(h))));
            detail::put_block(out.inv, hi * n, ci * n,
                              E.alpha[hi].inverse()->scaled(chars[ci](h) * inv_m));
        }
    return out;
}

inline ValidationReport verify_monad_isomorphism(const ModuleCategoryAction& act,
                                                 const EquivariantModule& E) {
    ValidationReport rep;
    const AbGroup& G = *act.group();
    const FieldPtr& f = act.algebra()->field();
    std::size_t n = E.base.dim(), m = G.order();
    auto iso = monad_isomorphism(act, E);
    if (!(iso.fwd * iso.inv).is_identity() || !(iso.inv * iso.fwd).is_identity())
        rep.fail("stated inverse is not inverse");
    // units: eta-hat (identity into the trivial-character block) then f
    // equals eta' of the monad N
    Matrix etahat(f, n, n * m);
    detail::put_block(etahat, 0, G.index_of(G.identity()) * n, Matrix::identity(f, n));
    if (!(etahat * iso.fwd == unit_eta_prime(act, E))) rep.fail("units do not match");
    // multiplications: f o mu-hat = mu' o (f at N(E)) o M-hat(f)
    Matrix muhat(f, n * m * m, n * m);
    for (std::size_t ci = 0; ci < m; ++ci)
        for (std::size_t cj = 0; cj < m; ++cj) {
            std::size_t ck = G.index_of(G.add(G.elem_at(ci), G.elem_at(cj)));
            detail::put_block(muhat, (ci * m + cj) * n, ck * n, Matrix::identity(f, n));
        }
    EquivariantModule NE = induction(act, E.base);
    Matrix f_at_NE = monad_isomorphism(act, NE).fwd;
    Matrix mup = detail::block_diag(f, counit_eps_prime(act, E.base), m);
    Matrix lhs = muhat * iso.fwd;
    Matrix rhs = detail::block_diag(f, iso.fwd, m) * f_at_NE * mup;
    if (!(lhs == rhs)) rep.fail("multiplications do not match");
    return rep;
}

/// Naturality of the monad isomorphism in a C^G morphism phi: E -> E2.
inline bool monad_isomorphism_natural(const ModuleCategoryAction& act, const EquivariantModule& E,
                                      const EquivariantModule& E2, const Matrix& phi) {
    const FieldPtr& f = act.algebra()->field();
    std::size_t m = act.group()->order();
    Matrix lhs = detail::block_diag(f, phi, m) * monad_isomorphism(act, E2).fwd;
    Matrix rhs = monad_isomorphism(act, E).fwd * detail::block_diag(f, phi, m);
    return lhs == rhs;
}

/// The G-equivariance witness of Theta: the block of partial_g from the
/// h-summand of Ind(F_g X) to the hg-summand of Ind(X) is (eps_{h,g})_X.
inline Matrix theta_partial(const ModuleCategoryAction& act, const AbGroup::Elem& g,
                            const ModuleRep& X) {
    const AbGroup& G = *act.group();
    const FieldPtr& f = act.algebra()->field();
    std::size_t n = X.dim(), m = G.order();
    Matrix d(f, n * m, n * m);
    for (const auto& h : G.elements())
        detail::put_block(d, G.index_of(h) * n, G.index_of(G.add(h, g)) * n,
                          act.eps(h, g, X));
    return d;
}

inline ValidationReport verify_theta_equivalence(const ModuleCategoryAction& act,
                                                 const std::vector<ModuleRep>& probes) {
    ValidationReport rep;
    const AbGroup& G = *act.group();
    const FieldPtr& f = act.algebra()->field();
    auto chars = character_group(G, f);
    // (i) fully faithful on probes: Theta(f) = Ind(f) is a bijection onto the
    // nested hom space
    for (const auto& X : probes)
        for (const auto& Y : probes) {
            auto base_homs = hom_space(X, Y);
            auto TX = theta(act, X);
            auto TY = theta(act, Y);
            auto nested = hom_nested(act, TX, TY);
            if (base_homs.size() != nested.size()) {
                rep.fail("hom dimension mismatch under Theta");
                continue;
            }
            std::vector<Vec> imgs;
            for (const auto& h : base_homs) {
                Matrix img = detail::block_diag(f, h, G.order());
                imgs.push_back(vectorize(img));
                // image lies in the nested hom space: fixed and equivariant
                bool ok = true;
                for (const auto& g : G.elements())
                    ok = ok && hom_g_action(act, TX.e, TY.e, g, img) == img;
                for (std::size_t ci = 0; ci < chars.size() && ok; ++ci)
                    ok = TX.beta[ci] * img == img * TY.beta[ci];
                if (!ok) rep.fail("Theta image is not a nested morphism");
            }
            if (echelon_basis(f, imgs, TX.e.base.dim() * TY.e.base.dim()).size() !=
                base_homs.size())
                rep.fail("Theta is not injective on homs");
        }
    // (ii) density relative to the probes: End of the total probe corresponds
    // to nested End of its Theta image as an algebra, so idempotent splittings
    // match summand by summand
    if (!probes.empty()) {
        ModuleRep total = probes[0];
        for (std::size_t i = 1; i < probes.size(); ++i) total = total.direct_sum(probes[i]);
        auto TT = theta(act, total);
        auto base_end = hom_space(total, total);
        auto nested_end = hom_nested(act, TT, TT);
        if (base_end.size() != nested_end.size()) rep.fail("density dimension mismatch");
        auto dec1 = primitive_idempotents(*matrix_algebra(f, base_end).alg);
        auto dec2 = primitive_idempotents(*matrix_algebra(f, nested_end).alg);
        if (!dec1.conclusive || !dec2.conclusive)
            rep.fail("density check inconclusive: idempotent splitting failed");
        else if (dec1.idempotents.size() != dec2.idempotents.size())
            rep.fail("density fails: summand counts differ");
    }
    // (iii) partial_g is a nested isomorphism Theta(F_g X) -> F-hat_g Theta(X)
    // and satisfies Lemma 4.9
    for (const auto& X : probes)
        for (const auto& g : G.elements()) {
            Matrix d = theta_partial(act, g, X);
            auto TFX = theta(act, act.F(g, X));
            auto TX = theta(act, X);
            if (!d.inverse()) rep.fail("partial is not invertible");
            // C^G morphism between the underlying induced modules
            bool ok = true;
            for (std::size_t bi = 0; bi < act.algebra()->dim(); ++bi)
                ok = ok && TFX.e.base.action()[bi] * d == d * TX.e.base.action()[bi];
            for (const auto& h : G.elements())
                ok = ok && hom_g_action(act, TFX.e, TX.e, h, d) == d;
            if (!ok) rep.fail("partial is not an equivariant morphism");
            // nested structure: target is ev(g)-twisted, (ev(g) (x) can)_chi =
            // chi(g^{-1}) can_chi
            for (std::size_t ci = 0; ci < chars.size(); ++ci) {
                Matrix tgt_beta = TX.beta[ci].scaled(chars[ci](G.neg(g)));
                if (!(TFX.beta[ci] * d == d * tgt_beta))
                    rep.fail("partial does not intertwine the dual structures");
            }
        }
    for (const auto& X : probes)
        for (const auto& g : G.elements())
            for (const auto& h : G.elements()) {
                // partial_{gh} o Theta(eps_{g,h}) = F-hat_g(partial_h) o partial_g F_h
                Matrix theta_eps =
                    detail::block_diag(f, act.eps(g, h, X), G.order());
                Matrix lhs = theta_eps * theta_partial(act, G.add(g, h), X);
                Matrix rhs = theta_partial(act, g, act.F(h, X)) * theta_partial(act, h, X);
                if (!(lhs == rhs)) rep.fail("Lemma 4.9 identity fails");
            }
    return rep;
}

/// (F, delta): F is the twist by phi, delta_g: F F_g -> F_g F is stored by its
/// unit element.
struct EquivariantFunctorData {
    AlgebraMap phi;
    std::vector<Vec> delta;
};

inline ValidationReport validate_equivariant_functor(const ModuleCategoryAction& act,
                                                     const EquivariantFunctorData& Fd) {
    ValidationReport rep;
    const AbGroup& G = *act.group();
    const Algebra& A = *act.algebra();
    if (!Fd.phi.is_automorphism()) rep.fail("F is not a twist automorphism");
    auto elems = G.elements();
    for (const auto& g : elems) {
        const Vec& d = Fd.delta[G.index_of(g)];
        if (!A.is_unit_element(d)) {
            rep.fail("delta element is not a unit");
            continue;
        }
        // delta_g must be a natural transformation between the two composite
        // twists: phi(rho(g^{-1})(x)) = d^{-1} rho(g^{-1})(phi(x)) d
        Vec dinv = *A.invert_element(d);
        const AlgebraMap& r = act.weak().rho(act.inv(g));
        for (std::size_t i = 0; i < A.dim(); ++i) {
            Vec x = A.basis_elem(i);
            Vec lhs = Fd.phi.apply(r.apply(x));
            Vec rhs = A.multiply(A.multiply(dinv, r.apply(Fd.phi.apply(x))), d);
            if (!(lhs == rhs)) {
                rep.fail("delta is not a natural transformation");
                break;
            }
        }
    }
    // equ:equi-fun, elementwise: c(h^{-1},g^{-1}) d_{gh} =
    //   rho(h^{-1})(d_g) . d_h . phi(c(h^{-1},g^{-1}))
    for (const auto& g : elems)
        for (const auto& h : elems) {
            Vec ce = act.eps_elem(g, h);
            Vec lhs = A.multiply(ce, Fd.delta[G.index_of(G.add(g, h))]);
            Vec rhs = A.multiply(
                A.multiply(act.weak().rho(act.inv(h)).apply(Fd.delta[G.index_of(g)]),
                           Fd.delta[G.index_of(h)]),
                Fd.phi.apply(ce));
            if (!(lhs == rhs)) rep.fail("equivariant-functor identity fails");
        }
    return rep;
}

/// (F, delta)^G(X, alpha) = (F(X), alpha~) with alpha~_g = (delta_g)_X o F(alpha_g).
inline EquivariantModule equivariantize_functor(const ModuleCategoryAction& act,
                                                const EquivariantFunctorData& Fd,
                                                const EquivariantModule& E) {
    EquivariantModule out;
    out.base = E.base.twisted(Fd.phi);
    for (std::size_t i = 0; i < E.alpha.size(); ++i)
        out.alpha.push_back(E.alpha[i] * E.base.act_elem(Fd.delta[i]));
    return out;
}

/// xi_X: (F, delta)^G Ind(X) -> Ind(F(X)), blockwise the components (delta_h)_X.
inline Matrix xi_witness(const ModuleCategoryAction& act, const EquivariantFunctorData& Fd,
                         const ModuleRep& X) {
    const AbGroup& G = *act.group();
    const FieldPtr& f = act.algebra()->field();
    std::size_t n = X.dim();
    Matrix xi(f, n * G.order(), n * G.order());
    for (std::size_t hi = 0; hi < G.order(); ++hi)
        detail::put_block(xi, hi * n, hi * n, X.act_elem(Fd.delta[hi]));
    return xi;
}

/// Example 4.10: the datum (F_a, c_a) with (c_a)_g = (eps_{g,a})^{-1} o eps_{a,g}.
inline EquivariantFunctorData inner_functor_datum(const ModuleCategoryAction& act,
                                                  const AbGroup::Elem& a) {
    const AbGroup& G = *act.group();
    const Algebra& A = *act.algebra();
    EquivariantFunctorData out{act.weak().rho(act.inv(a)), {}};
    for (const auto& g : G.elements())
        out.delta.push_back(
            A.multiply(act.eps_elem(a, g), *A.invert_element(act.eps_elem(g, a))));
    return out;
}

inline ValidationReport verify_equivariantized_functor(
    const ModuleCategoryAction& act, const EquivariantFunctorData& Fd,
    const std::vector<ModuleRep>& probes, const std::vector<EquivariantModule>& eprobes) {
    ValidationReport rep;
    const AbGroup& G = *act.group();
    const FieldPtr& f = act.algebra()->field();
    auto fd_rep = validate_equivariant_functor(act, Fd);
    if (!fd_rep.ok) {
        rep.fail("functor datum invalid");
        return rep;
    }
    auto chars = character_group(G, f);
    for (const auto& E : eprobes) {
        auto img = equivariantize_functor(act, Fd, E);
        if (!validate_equivariant(act, img).ok) rep.fail("equivariantized module invalid");
        // strict commutation with every dual twist
        for (const auto& chi : chars) {
            auto lhs = equivariantize_functor(act, Fd, dual_twist(act, chi, E));
            auto rhs = dual_twist(act, chi, img);
            bool same = lhs.base == rhs.base;
            for (std::size_t i = 0; i < lhs.alpha.size() && same; ++i)
                same = lhs.alpha[i] == rhs.alpha[i];
            if (!same) rep.fail("dual twists do not commute with the functor");
        }
    }
    for (const auto& X : probes) {
        // xi is an isomorphism in C^G and natural in X
        Matrix xi = xi_witness(act, Fd, X);
        ModuleRep FX = X.twisted(Fd.phi);
        auto src = equivariantize_functor(act, Fd, induction(act, X));
        auto dst = induction(act, FX);
        bool ok = xi.inverse().has_value();
        for (std::size_t bi = 0; bi < act.algebra()->dim(); ++bi)
            ok = ok && src.base.action()[bi] * xi == xi * dst.base.action()[bi];
        for (const auto& g : G.elements())
            ok = ok && hom_g_action(act, src, dst, g, xi) == xi;
        if (!ok) rep.fail("xi is not an equivariant isomorphism");
        // equ:triangle on the nested level: xi intertwines can(X) with can(F X)
        auto TX = theta(act, X);
        auto TFX = theta(act, FX);
        for (std::size_t ci = 0; ci < chars.size(); ++ci)
            if (!(TX.beta[ci] * xi == xi * TFX.beta[ci]))
                rep.fail("xi does not commute with the canonical dual structure");
        for (const auto& Y : probes)
            for (const auto& h : hom_space(X, Y)) {
                Matrix lhs = xi * detail::block_diag(f, h, G.order());
                Matrix rhs = detail::block_diag(f, h, G.order()) * xi_witness(act, Fd, Y);
                if (!(lhs == rhs)) rep.fail("xi is not natural");
            }
    }
    return rep;
}

/// Decomposition of an equivariant module through idempotent splitting of its
/// equivariant endomorphism algebra.
inline std::optional<std::vector<EquivariantModule>> decompose_equivariant(
    const ModuleCategoryAction& act, const EquivariantModule& E) {
    const FieldPtr& f = act.algebra()->field();
    auto ends = hom_equivariant(act, E, E);
    auto EA = matrix_algebra(f, ends);
    auto dec = primitive_idempotents(*EA.alg);
    if (!dec.conclusive) return std::nullopt;
    std::vector<EquivariantModule> out;
    for (const auto& idem : dec.idempotents) {
        Matrix e(f, E.base.dim(), E.base.dim());
        for (std::size_t i = 0; i < idem.size(); ++i)
            e = e + EA.basis[i].scaled(idem[i]);
        auto [C, R] = e.rank_factorization();
        EquivariantModule part;
        std::vector<Matrix> mats;
        for (std::size_t bi = 0; bi < act.algebra()->dim(); ++bi)
            mats.push_back(R * E.base.action()[bi] * C);
        part.base = ModuleRep(act.algebra(), std::move(mats));
        for (const auto& a : E.alpha) part.alpha.push_back(R * a * C);
        if (!validate_equivariant(act, part).ok)
            throw std::logic_error("equivariant summand invalid");
        out.push_back(std::move(part));
    }
    return out;
}

/// iota(M): the basic representative of add Ind(M) for a G-stable basic M.
struct StableBijection {
    EquivariantModule iota;
    bool dual_stable = false;
};

inline std::optional<StableBijection> stable_bijection_iota(const ModuleCategoryAction& act,
                                                            const ModuleRep& M,
                                                            std::uint64_t seed = 0) {
    const AbGroup& G = *act.group();
    const FieldPtr& f = act.algebra()->field();
    // M must be G-stable and basic
    for (const auto& g : G.elements())
        if (!module_isomorphism(M, act.F(g, M), seed)) return std::nullopt;
    auto base_parts = decompose_module(M);
    if (!base_parts) return std::nullopt;
    for (std::size_t i = 0; i < base_parts->size(); ++i)
        for (std::size_t j = i + 1; j < base_parts->size(); ++j)
            if (module_isomorphism(base_parts->at(i).module, base_parts->at(j).module, seed))
                return std::nullopt;
    auto parts = decompose_equivariant(act, induction(act, M));
    if (!parts) return std::nullopt;
    // keep one representative per isomorphism class
    std::vector<EquivariantModule> reps;
    for (const auto& p : *parts) {
        bool seen = false;
        for (const auto& r : reps)
            seen = seen || equivariant_isomorphism(act, p, r, seed).has_value();
        if (!seen) reps.push_back(p);
    }
    StableBijection out{reps[0], true};
    for (std::size_t i = 1; i < reps.size(); ++i)
        out.iota = direct_sum_equivariant(out.iota, reps[i]);
    for (const auto& chi : character_group(G, f)) {
        auto twisted = dual_twist(act, chi, out.iota);
        if (!equivariant_isomorphism(act, out.iota, twisted, seed)) out.dual_stable = false;
    }
    return out;
}

/// Orbit counts on both sides of the bijection, restricted to probe lists.
struct OrbitCensus {
    std::size_t module_orbits = 0;
    std::size_t equivariant_orbits = 0;
    bool module_probes_closed = true;
    bool counts_match = false;
};

inline std::optional<OrbitCensus> orbit_census(const ModuleCategoryAction& act,
                                               const std::vector<ModuleRep>& probes,
                                               std::uint64_t seed = 0) {
    OrbitCensus out;
    const AbGroup& G = *act.group();
    const FieldPtr& f = act.algebra()->field();
    for (const auto& M : probes)
        if (is_indecomposable(M) != std::optional<bool>(true)) return std::nullopt;
    // twist closure and G-orbits on the module side
    std::vector<long> orbit(probes.size(), -1);
    long next = 0;
    for (std::size_t i = 0; i < probes.size(); ++i) {
        if (orbit[i] >= 0) continue;
        orbit[i] = next++;
        for (const auto& g : G.elements()) {
            ModuleRep t = act.F(g, probes[i]);
            bool found = false;
            for (std::size_t j = 0; j < probes.size(); ++j)
                if (module_isomorphism(t, probes[j], seed)) {
                    found = true;
                    if (orbit[j] < 0) orbit[j] = orbit[i];
                }
            if (!found) out.module_probes_closed = false;
        }
    }
    out.module_orbits = static_cast<std::size_t>(next);
    // equivariant side: indecomposable summands of the inductions, up to iso,
    // then orbits under the dual twists
    std::vector<EquivariantModule> inds;
    for (const auto& M : probes) {
        auto parts = decompose_equivariant(act, induction(act, M));
        if (!parts) return std::nullopt;
        for (auto& p : *parts) {
            bool seen = false;
            for (const auto& r : inds)
                seen = seen || equivariant_isomorphism(act, p, r, seed).has_value();
            if (!seen) inds.push_back(std::move(p));
        }
    }
    auto chars = character_group(G, f);
    std::vector<long> eorbit(inds.size(), -1);
    long enext = 0;
    for (std::size_t i = 0; i < inds.size(); ++i) {
        if (eorbit[i] >= 0) continue;
        eorbit[i] = enext++;
        for (const auto& chi : chars) {
            auto t = dual_twist(act, chi, inds[i]);
            for (std::size_t j = 0; j < inds.size(); ++j)
                if (eorbit[j] < 0 && equivariant_isomorphism(act, t, inds[j], seed))
                    eorbit[j] = eorbit[i];
        }
    }
    out.equivariant_orbits = static_cast<std::size_t>(enext);
    out.counts_match = out.module_probes_closed && out.module_orbits == out.equivariant_orbits;
    return out;
}

/// End(Ind M) = End(M) * G through Phi(a g-bar) = inc_g o F_g(a) o alpha_g,
/// extended along the first adjunction. In the left-to-right composition
/// convention used throughout, the block of a g-bar reads a . alpha_g.
inline ValidationReport end_ind_check(const ModuleCategoryAction& act, const ModuleRep& M,
                                      const std::vector<Matrix>& alpha) {
    ValidationReport rep;
    const AbGroup& G = *act.group();
    const FieldPtr& f = act.algebra()->field();
    auto sys = crossed_system_from_stable_module(act, M, alpha);
    auto cp = crossed_product(sys.action);
    EquivariantModule ind = induction(act, M);
    auto ends = hom_equivariant(act, ind, ind);
    if (ends.size() != cp.result->dim()) {
        rep.fail("dimension mismatch between End(Ind M) and End(M)*G");
        return rep;
    }
    std::size_t n = M.dim(), m = G.order();
    auto phi_of = [&](const Vec& v) {
        // v in coordinates of the crossed product: sum over (g, i) blocks
        Matrix f0(f, n, n * m);
        for (const auto& g : G.elements()) {
            std::size_t gi = G.index_of(g);
            Matrix blk(f, n, n);
            for (std::size_t i = 0; i < sys.end.basis.size(); ++i)
                blk = blk + sys.end.basis[i].scaled(v[cp.index(g, i)]);
            detail::put_block(f0, 0, gi * n, blk * alpha[gi]);
        }
        return adj1_backward(act, M, ind, f0);
    };
    // linear bijection: images of the basis span the full End space
    std::vector<Vec> imgs;
    for (std::size_t b = 0; b < cp.result->dim(); ++b)
        imgs.push_back(vectorize(phi_of(cp.result->basis_elem(b))));
    if (echelon_basis(f, imgs, n * m * n * m).size() != ends.size())
        rep.fail("the comparison map is not bijective");
    // multiplicativity on all basis pairs
    for (std::size_t b1 = 0; b1 < cp.result->dim(); ++b1)
        for (std::size_t b2 = 0; b2 < cp.result->dim(); ++b2) {
            Vec prod = cp.result->multiply(cp.result->basis_elem(b1), cp.result->basis_elem(b2));
            Matrix lhs = phi_of(prod);
            Matrix rhs = phi_of(cp.result->basis_elem(b1)) * phi_of(cp.result->basis_elem(b2));
            if (!(lhs == rhs)) rep.fail("the comparison map is not multiplicative");
        }
    if (!(phi_of(cp.result->unit()).is_identity())) rep.fail("unit is not preserved");
    return rep;
}

}  // namespace equivalg
