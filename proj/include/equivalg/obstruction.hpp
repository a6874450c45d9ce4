/**
 * @file obstruction.hpp
 * @brief The obstruction 2-cocycle of an autoequivalence commuting with a
 *        weak action, its cohomology class, and the kernel of the lifting
 *        sequence on character-twist instances.
 *
 * A commuting datum is a twist automorphism F together with chosen unit
 * elements delta_g realizing isomorphisms F F_g -> F_g F.  The failure of
 * the deltas to satisfy the equivariant-functor identity is measured by a
 * scalar sigma_F(g, h), read off by evaluating both sides on probe modules.
 * The class of sigma_F in H^2 vanishes exactly when the deltas can be
 * rescaled into a genuine equivariant structure on F.
 */
#pragma once

#include <random>

#include "cocycle.hpp"
#include "duality.hpp"

namespace equivalg {

/// A twist automorphism F with unit elements delta_g: F F_g -> F_g F.
/// Unlike EquivariantFunctorData the deltas are only required to be natural
/// isomorphisms; they need not be coherent.
struct CommutingFunctorDatum {
    AlgebraMap phi;
    std::vector<Vec> delta;  // by group element index
};

/// Each delta_g must be a unit and natural between the composite twists:
/// phi(rho(g^{-1})(x)) = d^{-1} rho(g^{-1})(phi(x)) d.
inline ValidationReport validate_commuting_datum(const ModuleCategoryAction& act,
                                                 const CommutingFunctorDatum& d) {
    ValidationReport rep;
    const AbGroup& G = *act.group();
    const Algebra& A = *act.algebra();
    if (!d.phi.is_automorphism()) rep.fail("F is not a twist automorphism");
    if (d.delta.size() != G.order()) {
        rep.fail("delta table size does not match the group order");
        return rep;
    }
    for (const auto& g : G.elements()) {
        const Vec& e = d.delta[G.index_of(g)];
        if (!A.is_unit_element(e)) {
            rep.fail("delta element is not a unit");
            continue;
        }
        Vec einv = *A.invert_element(e);
        const AlgebraMap& r = act.weak().rho(act.inv(g));
        for (std::size_t i = 0; i < A.dim(); ++i) {
            Vec x = A.basis_elem(i);
            Vec lhs = d.phi.apply(r.apply(x));
            Vec rhs = A.multiply(A.multiply(einv, r.apply(d.phi.apply(x))), e);
            if (!(lhs == rhs)) {
                rep.fail("delta is not a natural transformation");
                break;
            }
        }
    }
    return rep;
}

namespace detail {

/// Solve L = sigma R on every probe for one scalar; the two sides are the
/// components of the natural transformations at each probe.  Any
/// disagreement, across entries or across probes, is a violation of the
/// standing assumption Z(C) = k.
inline Scalar extract_scalar(const Vec& l, const Vec& r,
                             const std::vector<ModuleRep>& probes) {
    std::optional<Scalar> sigma;
    for (const auto& M : probes) {
        Matrix ml = M.act_elem(l);
        Matrix mr = M.act_elem(r);
        for (std::size_t i = 0; i < mr.rows(); ++i)
            for (std::size_t j = 0; j < mr.cols(); ++j) {
                if (mr.at(i, j).is_zero()) {
                    if (!ml.at(i, j).is_zero())
                        throw std::domain_error(
                            "center larger than k; obstruction undefined");
                    continue;
                }
                Scalar s = ml.at(i, j) / mr.at(i, j);
                if (sigma && !(*sigma == s))
                    throw std::domain_error(
                        "center larger than k; obstruction undefined");
                sigma = s;
            }
    }
    if (!sigma) throw std::domain_error("probe set acts by zero; no scalar to extract");
    return *sigma;
}

}  // namespace detail

/// sigma_F(g, h) from delta_{gh} o F(eps_{g,h}) = sigma . eps_{g,h}F o
/// F_g(delta_h) o delta_g F_h, evaluated on each probe module.  In elements:
///   L = c(h^{-1}, g^{-1}) . d_{gh}
///   R = rho(h^{-1})(d_g) . d_h . phi(c(h^{-1}, g^{-1}))
inline Cocycle2 obstruction_cocycle(const ModuleCategoryAction& act,
                                    const CommutingFunctorDatum& d,
                                    const std::vector<ModuleRep>& probes) {
    const AbGroup& G = *act.group();
    const Algebra& A = *act.algebra();
    Cocycle2 sigma = Cocycle2::constant_one(G, A.field());
    sigma.group = act.group().get();
    auto elems = G.elements();
    for (const auto& g : elems)
        for (const auto& h : elems) {
            Vec ce = act.eps_elem(g, h);
            Vec l = A.multiply(ce, d.delta[G.index_of(G.add(g, h))]);
            Vec r = A.multiply(
                A.multiply(act.weak().rho(act.inv(h)).apply(d.delta[G.index_of(g)]),
                           d.delta[G.index_of(h)]),
                d.phi.apply(ce));
            sigma.table[G.index_of(g)][G.index_of(h)] = detail::extract_scalar(l, r, probes);
        }
    return sigma;
}

/// Regauge the datum: delta_g -> lambda(g) delta_g.  The cocycle moves by
/// the coboundary of lambda.
inline CommutingFunctorDatum scale_datum(const ModuleCategoryAction& act,
                                         const CommutingFunctorDatum& d,
                                         const std::vector<Scalar>& lambda) {
    CommutingFunctorDatum out = d;
    for (std::size_t i = 0; i < act.group()->order(); ++i)
        out.delta[i] = vec_scale(d.delta[i], lambda[i]);
    return out;
}

struct ObstructionClass {
    Cocycle2 sigma;
    CoboundaryResult::Status status;
    // present when the class is trivial: the corrected datum with
    // delta'_g = lambda(g)^{-1} delta_g, verified coherent
    std::optional<EquivariantFunctorData> lift;
};

inline ObstructionClass obstruction_class(const ModuleCategoryAction& act,
                                          const CommutingFunctorDatum& d,
                                          const std::vector<ModuleRep>& probes) {
    ObstructionClass out{obstruction_cocycle(act, d, probes),
                         CoboundaryResult::Nontrivial, std::nullopt};
    auto cb = is_coboundary(out.sigma);
    out.status = cb.status;
    if (cb.status != CoboundaryResult::Trivial) return out;
    EquivariantFunctorData lift{d.phi, d.delta};
    for (std::size_t i = 0; i < lift.delta.size(); ++i)
        lift.delta[i] = vec_scale(lift.delta[i], cb.witness[i].inverse());
    if (validate_equivariant_functor(act, lift).ok) out.lift = lift;
    return out;
}

/// Composite of two commuting data: the twist composes left to right and
/// the delta elements interleave through the second twist.
inline CommutingFunctorDatum compose_data(const ModuleCategoryAction& act,
                                          const CommutingFunctorDatum& d1,
                                          const CommutingFunctorDatum& d2) {
    const AbGroup& G = *act.group();
    const Algebra& A = *act.algebra();
    CommutingFunctorDatum out{d1.phi.then(d2.phi), {}};
    for (const auto& g : G.elements()) {
        std::size_t i = G.index_of(g);
        out.delta.push_back(A.multiply(d2.delta[i], d2.phi.apply(d1.delta[i])));
    }
    return out;
}

/// The character twist (Id, delta_g = chi(g) . 1): the image of chi under
/// the kernel embedding of the lifting sequence.
template <typename Character>
inline CommutingFunctorDatum character_datum(const ModuleCategoryAction& act,
                                             const Character& chi) {
    CommutingFunctorDatum out{AlgebraMap::identity(act.algebra()), {}};
    for (const auto& g : act.group()->elements())
        out.delta.push_back(vec_scale(act.algebra()->unit(), chi(g)));
    return out;
}

struct FunctorIsoResult {
    enum Status { Isomorphic, NotIsomorphic, Undetermined } status;
    Vec witness;
};

/// Search for a unit b with phi1(x) b = b phi2(x) for all x and
/// d_g b = rho(g^{-1})(b) d'_g for all g; such a b is exactly a natural
/// isomorphism of equivariant functors.
inline FunctorIsoResult functor_data_isomorphic(const ModuleCategoryAction& act,
                                                const CommutingFunctorDatum& d1,
                                                const CommutingFunctorDatum& d2,
                                                std::uint64_t seed = 0) {
    const AbGroup& G = *act.group();
    const Algebra& A = *act.algebra();
    const FieldPtr& f = A.field();
    std::size_t n = A.dim();
    std::size_t m = G.order();
    // stacked linear conditions on the unknown row vector b
    Matrix sys(f, (n + m) * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix rel = A.left_mult(d1.phi.apply(A.basis_elem(i))) -
                     A.right_mult(d2.phi.apply(A.basis_elem(i)));
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) sys.at(i * n + k, j) = rel.at(j, k);
    }
    for (const auto& g : G.elements()) {
        std::size_t gi = G.index_of(g);
        Matrix rel = A.left_mult(d1.delta[gi]) -
                     act.weak().rho(act.inv(g)).matrix() * A.right_mult(d2.delta[gi]);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                sys.at((n + gi) * n + k, j) = rel.at(j, k);
    }
    Matrix ker = sys.kernel();
    std::vector<Vec> space;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        Vec v;
        for (std::size_t c = 0; c < n; ++c) v.push_back(ker.at(r, c));
        space.push_back(v);
    }
    if (space.empty()) return {FunctorIsoResult::NotIsomorphic, {}};
    auto verify = [&](const Vec& b) { return A.is_unit_element(b); };
    if (f->kind() == FieldKind::Prime) {
        double size = 1;
        for (std::size_t i = 0; i < space.size(); ++i)
            size *= static_cast<double>(f->characteristic());
        if (size <= 100000.0) {
            std::vector<std::uint64_t> idx(space.size(), 0);
            std::uint64_t p = f->characteristic();
            while (true) {
                Vec b(n, Scalar::zero(f));
                for (std::size_t i = 0; i < space.size(); ++i)
                    b = vec_add(b, vec_scale(space[i],
                                             Scalar::from_int(f, static_cast<long>(idx[i]))));
                if (verify(b)) return {FunctorIsoResult::Isomorphic, b};
                std::size_t i = 0;
                for (; i < idx.size(); ++i) {
                    idx[i] = (idx[i] + 1) % p;
                    if (idx[i] != 0) break;
                }
                if (i == idx.size()) break;
            }
            return {FunctorIsoResult::NotIsomorphic, {}};
        }
    }
    std::mt19937_64 rng(seed);
    std::uint64_t range = f->kind() == FieldKind::Prime ? f->characteristic() : 11;
    for (std::size_t t = 0; t < 500; ++t) {
        Vec b(n, Scalar::zero(f));
        for (const auto& v : space)
            b = vec_add(b, vec_scale(v, Scalar::from_int(f, static_cast<long>(rng() % range))));
        if (verify(b)) return {FunctorIsoResult::Isomorphic, b};
    }
    return {FunctorIsoResult::Undetermined, {}};
}

/// Identify a datum with identity twist as a character twist by scalar
/// readout on the probes.  Returns the character index, or nullopt when the
/// deltas are not scalar or match no character.
inline std::optional<std::size_t> match_character(const ModuleCategoryAction& act,
                                                  const CommutingFunctorDatum& d,
                                                  const std::vector<ModuleRep>& probes) {
    const AbGroup& G = *act.group();
    const Algebra& A = *act.algebra();
    const FieldPtr& f = A.field();
    if (!d.phi.matrix().is_identity()) return std::nullopt;
    std::vector<Scalar> vals;
    for (const auto& g : G.elements()) {
        try {
            vals.push_back(
                detail::extract_scalar(d.delta[G.index_of(g)], A.unit(), probes));
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
    }
    auto chars = character_group(G, f);
    for (std::size_t ci = 0; ci < chars.size(); ++ci) {
        bool all = true;
        for (const auto& g : G.elements())
            all = all && vals[G.index_of(g)] == chars[ci](g);
        if (all) return ci;
    }
    return std::nullopt;
}

/// Exactness at the kernel on instances: the character twists are pairwise
/// non-isomorphic as equivariant functors.  Holds whenever Z(A) = k; a
/// larger center genuinely merges characters and is reported, not hidden.
inline ValidationReport kernel_check(const ModuleCategoryAction& act,
                                     std::uint64_t seed = 0) {
    ValidationReport rep;
    const AbGroup& G = *act.group();
    auto chars = character_group(G, act.algebra()->field());
    std::vector<CommutingFunctorDatum> data;
    for (const auto& chi : chars) data.push_back(character_datum(act, chi));
    for (std::size_t i = 0; i < data.size(); ++i)
        for (std::size_t j = i + 1; j < data.size(); ++j) {
            auto res = functor_data_isomorphic(act, data[i], data[j], seed);
            if (res.status == FunctorIsoResult::Isomorphic)
                rep.fail("distinct characters give isomorphic functor data");
            else if (res.status == FunctorIsoResult::Undetermined)
                rep.fail("character separation undetermined: search space too large");
        }
    return rep;
}

}  // namespace equivalg
