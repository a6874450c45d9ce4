/**
 * @file tubular.hpp
 * @brief Grading groups L(p_1,...,p_t), truncated homogeneous coordinate
 *        algebras of the four tubular weight types, graded automorphisms,
 *        and the bridge from a scaling power to a cyclic weak action.
 *
 * The grading group has rank one plus torsion; elements are exponent tuples
 * on the generators and equality goes through canonical coordinates computed
 * once from the Smith normal form of the relation lattice.  The coordinate
 * algebras are handled as commutative monomial rewrite systems truncated at
 * a total-degree bound; products that leave the bound are tracked as
 * overflow and never silently compared.
 */
#pragma once

#include <map>
#include <numeric>

#include "action.hpp"
#include "smith.hpp"

namespace equivalg {

/// L(p_1,...,p_t) = <x_1,...,x_t | p_1 x_1 = ... = p_t x_t>.  Elements are
/// integer exponent tuples on the generators; canonical coordinates are
/// y = U e with the torsion moduli from the Smith form of the relations.
struct GradingGroup {
    using Elem = std::vector<long>;

    std::vector<std::uint64_t> weights;
    std::vector<std::vector<long>> u;  // unimodular change of coordinates
    std::vector<long> moduli;          // torsion moduli for coordinates 0..t-2

    std::size_t rank() const { return weights.size(); }

    Elem zero() const { return Elem(rank(), 0); }
    Elem gen(std::size_t i) const {
        Elem e = zero();
        e[i] = 1;
        return e;
    }
    /// The common value c = p_i x_i.
    Elem cvec() const {
        Elem e = zero();
        e[0] = static_cast<long>(weights[0]);
        return e;
    }
    /// Dualizing element omega = (t - 2) c - x_1 - ... - x_t; for three
    /// weights this is c - x_1 - x_2 - x_3.
    Elem omega() const {
        Elem e = cvec();
        for (auto& v : e) v *= static_cast<long>(rank()) - 2;
        for (auto& v : e) v -= 1;
        return e;
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem c = a;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
        return c;
    }
    Elem neg(const Elem& a) const {
        Elem c = a;
        for (auto& v : c) v = -v;
        return c;
    }

    std::vector<long> normal_form(const Elem& e) const {
        std::size_t t = rank();
        std::vector<long> y(t, 0);
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j) y[i] += u[i][j] * e[j];
        for (std::size_t i = 0; i < moduli.size(); ++i)
            y[i] = ((y[i] % moduli[i]) + moduli[i]) % moduli[i];
        return y;
    }
    bool equal(const Elem& a, const Elem& b) const { return normal_form(a) == normal_form(b); }
    bool is_zero(const Elem& a) const { return equal(a, zero()); }

    /// Order of the class of e; 0 when infinite.
    std::uint64_t order(const Elem& e) const {
        auto y = normal_form(e);
        if (y.back() != 0 && moduli.size() < rank()) return 0;
        long ord = 1;
        for (std::size_t i = 0; i < moduli.size(); ++i)
            if (y[i] != 0) ord = std::lcm(ord, moduli[i] / std::gcd(moduli[i], y[i]));
        return static_cast<std::uint64_t>(ord);
    }
};

inline GradingGroup grading_group(const std::vector<std::uint64_t>& weights) {
    if (weights.empty()) throw std::invalid_argument("empty weight sequence");
    for (auto p : weights)
        if (p == 0) throw std::invalid_argument("weights must be positive");
    std::size_t t = weights.size();
    GradingGroup L;
    L.weights = weights;
    if (t == 1) {
        L.u = {{1}};
        return L;
    }
    // relation lattice: columns p_j e_j - p_{j+1} e_{j+1}
    ZMat rel(t, std::vector<mpz_class>(t - 1, 0));
    for (std::size_t j = 0; j + 1 < t; ++j) {
        rel[j][j] = static_cast<long>(weights[j]);
        rel[j + 1][j] = -static_cast<long>(weights[j + 1]);
    }
    auto snf = smith_normal_form(rel);
    L.u.assign(t, std::vector<long>(t, 0));
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) L.u[i][j] = snf.U[i][j].get_si();
    for (std::size_t i = 0; i + 1 < t; ++i) {
        long d = snf.D[i][i].get_si();
        if (d == 0) throw std::logic_error("relation lattice is not of full column rank");
        L.moduli.push_back(d < 0 ? -d : d);
    }
    return L;
}

/// Commutative monomial as an exponent tuple on the generators.
using Monomial = std::vector<unsigned>;

struct GradedPoly {
    std::map<Monomial, Scalar> terms;
    bool overflow = false;
};

namespace detail {

inline void add_term(std::map<Monomial, Scalar>& terms, const Monomial& m, const Scalar& s) {
    auto it = terms.find(m);
    if (it == terms.end()) {
        if (!s.is_zero()) terms.emplace(m, s);
        return;
    }
    it->second = it->second + s;
    if (it->second.is_zero()) terms.erase(it);
}

}  // namespace detail

/// A truncation of one of the homogeneous coordinate algebras: free
/// commutative generators plus one rewrite z_i^{cap_i} -> polynomial per
/// capped generator, cut off at a total-exponent bound.
struct CoordinateTruncation {
    FieldPtr field;
    GradingGroup grading;
    unsigned bound = 8;
    std::vector<unsigned> cap;      // 0 = no rewrite for that generator
    std::vector<GradedPoly> rhs;    // rewrite targets, indexed by generator

    std::size_t gens() const { return grading.rank(); }

    GradingGroup::Elem degree(const Monomial& m) const {
        GradingGroup::Elem e = grading.zero();
        for (std::size_t i = 0; i < m.size(); ++i) e[i] = static_cast<long>(m[i]);
        return e;
    }
    static unsigned total(const Monomial& m) {
        unsigned t = 0;
        for (auto v : m) t += v;
        return t;
    }

    /// Rewrite to normal form.  Out-of-bound monomials are dropped and
    /// flagged, never compared.
    GradedPoly reduce(const GradedPoly& p) const {
        GradedPoly out;
        out.overflow = p.overflow;
        std::map<Monomial, Scalar> work = p.terms;
        while (!work.empty()) {
            auto [m, s] = *work.begin();
            work.erase(work.begin());
            if (s.is_zero()) continue;
            if (total(m) > bound) {
                out.overflow = true;
                continue;
            }
            std::size_t i = 0;
            for (; i < cap.size(); ++i)
                if (cap[i] > 0 && m[i] >= cap[i]) break;
            if (i == cap.size()) {
                detail::add_term(out.terms, m, s);
                continue;
            }
            Monomial rest = m;
            rest[i] -= cap[i];
            for (const auto& [rm, rs] : rhs[i].terms) {
                Monomial prod = rest;
                for (std::size_t j = 0; j < prod.size(); ++j) prod[j] += rm[j];
                detail::add_term(work, prod, s * rs);
            }
        }
        return out;
    }

    GradedPoly multiply(const GradedPoly& a, const GradedPoly& b) const {
        GradedPoly out;
        out.overflow = a.overflow || b.overflow;
        for (const auto& [ma, sa] : a.terms)
            for (const auto& [mb, sb] : b.terms) {
                Monomial m = ma;
                for (std::size_t j = 0; j < m.size(); ++j) m[j] += mb[j];
                detail::add_term(out.terms, m, sa * sb);
            }
        return reduce(out);
    }

    GradedPoly monomial(const Monomial& m, const Scalar& s) const {
        GradedPoly p;
        p.terms.emplace(m, s);
        return reduce(p);
    }
    GradedPoly one() const { return monomial(Monomial(gens(), 0), Scalar::one(field)); }

    /// All in-bound normal-form monomials.
    std::vector<Monomial> normal_monomials() const {
        std::vector<Monomial> out;
        Monomial m(gens(), 0);
        enumerate(m, 0, 0, out);
        return out;
    }
    /// Basis of the graded component of the given degree.
    std::vector<Monomial> component(const GradingGroup::Elem& d) const {
        std::vector<Monomial> out;
        for (const auto& m : normal_monomials())
            if (grading.equal(degree(m), d)) out.push_back(m);
        return out;
    }

  private:
    void enumerate(Monomial& m, std::size_t i, unsigned used, std::vector<Monomial>& out) const {
        if (i == gens()) {
            out.push_back(m);
            return;
        }
        unsigned hi = bound - used;
        if (cap[i] > 0) hi = std::min(hi, cap[i] - 1);
        for (unsigned e = 0; e <= hi; ++e) {
            m[i] = e;
            enumerate(m, i + 1, used + e, out);
        }
        m[i] = 0;
    }
};

/// Build the truncated coordinate algebra of a tubular weight type.  The
/// lambda parameter is consumed by type (2,2,2,2) and must avoid 0 and 1.
inline CoordinateTruncation coordinate_algebra_truncation(
    const FieldPtr& f, const std::vector<std::uint64_t>& weights,
    std::optional<Scalar> lambda = std::nullopt, unsigned bound = 8) {
    CoordinateTruncation A;
    A.field = f;
    A.grading = grading_group(weights);
    A.bound = bound;
    std::size_t t = weights.size();
    A.cap.assign(t, 0);
    A.rhs.assign(t, GradedPoly{});
    Scalar one = Scalar::one(f);
    auto mono = [&](std::initializer_list<unsigned> exps, const Scalar& s) {
        return std::pair<Monomial, Scalar>(Monomial(exps), s);
    };
    auto set_rhs = [&](std::size_t i, unsigned c,
                       std::initializer_list<std::pair<Monomial, Scalar>> ts) {
        A.cap[i] = c;
        for (const auto& [m, s] : ts) detail::add_term(A.rhs[i].terms, m, s);
    };
    if (weights == std::vector<std::uint64_t>{2, 2, 2, 2}) {
        if (!lambda || lambda->is_zero() || lambda->is_one())
            throw std::invalid_argument("type (2,2,2,2) needs a parameter not in {0, 1}");
        set_rhs(2, 2, {mono({0, 2, 0, 0}, one), mono({2, 0, 0, 0}, -one)});
        set_rhs(3, 2, {mono({0, 2, 0, 0}, one), mono({2, 0, 0, 0}, -*lambda)});
    } else if (weights == std::vector<std::uint64_t>{3, 3, 3}) {
        set_rhs(2, 3, {mono({0, 3, 0}, one), mono({3, 0, 0}, -one)});
    } else if (weights == std::vector<std::uint64_t>{4, 4, 2}) {
        set_rhs(2, 2, {mono({0, 4, 0}, one), mono({4, 0, 0}, -one)});
    } else if (weights == std::vector<std::uint64_t>{6, 3, 2}) {
        set_rhs(2, 2, {mono({0, 3, 0}, one), mono({6, 0, 0}, -one)});
    } else {
        throw std::invalid_argument("not a tubular weight type");
    }
    // homogeneity of each rewrite, and no capped generator on a right side
    for (std::size_t i = 0; i < t; ++i) {
        if (A.cap[i] == 0) continue;
        Monomial lhs(t, 0);
        lhs[i] = A.cap[i];
        for (const auto& [m, s] : A.rhs[i].terms) {
            if (!A.grading.equal(A.degree(m), A.degree(lhs)))
                throw std::logic_error("rewrite relation is not homogeneous");
            for (std::size_t j = 0; j < t; ++j)
                if (A.cap[j] > 0 && m[j] > 0)
                    throw std::logic_error("rewrite right side is not reduced");
        }
    }
    // confluence: both resolution orders of every critical monomial agree
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i; j < t; ++j) {
            if (A.cap[i] == 0 || A.cap[j] == 0) continue;
            Monomial crit(t, 0);
            crit[i] += A.cap[i];
            crit[j] += A.cap[j];
            Monomial resti = crit, restj = crit;
            resti[i] -= A.cap[i];
            restj[j] -= A.cap[j];
            GradedPoly via_i = A.multiply(A.rhs[i], A.monomial(resti, one));
            GradedPoly via_j = A.multiply(A.rhs[j], A.monomial(restj, one));
            // an overflowing critical pair is outside the certified range
            if (!via_i.overflow && !via_j.overflow && !(via_i.terms == via_j.terms))
                throw std::logic_error("rewriting system is not confluent");
        }
    return A;
}

/// A graded automorphism datum: generator i maps to scale[i] times the
/// generator target[i]; the degree map psi permutes the generators the same
/// way.
struct GradedAutomorphism {
    std::vector<std::size_t> target;
    std::vector<Scalar> scale;
};

inline GradedPoly apply_graded(const CoordinateTruncation& A, const GradedAutomorphism& g,
                               const GradedPoly& p) {
    GradedPoly out;
    out.overflow = p.overflow;
    for (const auto& [m, s] : p.terms) {
        Monomial img(m.size(), 0);
        Scalar c = s;
        for (std::size_t i = 0; i < m.size(); ++i) {
            img[g.target[i]] += m[i];
            c = c * g.scale[i].pow(static_cast<long>(m[i]));
        }
        detail::add_term(out.terms, img, c);
    }
    return A.reduce(out);
}

inline GradingGroup::Elem psi_apply(const GradedAutomorphism& g, const GradingGroup::Elem& e) {
    GradingGroup::Elem out(e.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) out[g.target[i]] += e[i];
    return out;
}

/// g1 then g2 on generators.
inline GradedAutomorphism compose_graded(const GradedAutomorphism& g1,
                                         const GradedAutomorphism& g2) {
    GradedAutomorphism out{std::vector<std::size_t>(g1.target.size()), {}};
    for (std::size_t i = 0; i < g1.target.size(); ++i) {
        out.target[i] = g2.target[g1.target[i]];
        out.scale.push_back(g1.scale[i] * g2.scale[g1.target[i]]);
    }
    return out;
}

inline ValidationReport validate_graded_automorphism(const CoordinateTruncation& A,
                                                     const GradedAutomorphism& g) {
    ValidationReport rep;
    std::size_t t = A.gens();
    if (g.target.size() != t || g.scale.size() != t) {
        rep.fail("substitution size does not match the generators");
        return rep;
    }
    std::vector<bool> hit(t, false);
    for (auto j : g.target) {
        if (j >= t || hit[j]) {
            rep.fail("substitution is not a permutation of the generators");
            return rep;
        }
        hit[j] = true;
    }
    for (const auto& s : g.scale)
        if (s.is_zero()) rep.fail("substitution scale vanishes");
    // psi is degree-compatible iff it permutes generators of equal weight
    for (std::size_t i = 0; i < t; ++i)
        if (A.grading.weights[g.target[i]] != A.grading.weights[i])
            rep.fail("degree map does not respect the weights");
    // each relation maps into the relation ideal
    Scalar one = Scalar::one(A.field);
    for (std::size_t i = 0; i < t; ++i) {
        if (A.cap[i] == 0) continue;
        Monomial lhs(t, 0);
        lhs[i] = A.cap[i];
        GradedPoly rel;
        rel.terms.emplace(lhs, one);
        for (const auto& [m, s] : A.rhs[i].terms) detail::add_term(rel.terms, m, -s);
        GradedPoly img = apply_graded(A, g, rel);
        if (img.overflow) rep.fail("relation image leaves the truncation bound");
        if (!img.terms.empty()) rep.fail("relation is not preserved");
    }
    return rep;
}

/// The smallest power of g that scales every generator in place, together
/// with the induced character gamma on L.
struct ScalingReport {
    std::size_t order = 0;  // 0 when no power within the cap is a scaling
    std::vector<Scalar> gamma;
    bool character_well_defined = false;
    bool psi_invariant = false;
};

inline ScalingReport scaling_character(const CoordinateTruncation& A,
                                       const GradedAutomorphism& g,
                                       std::size_t max_power = 24) {
    ScalingReport out;
    GradedAutomorphism p = g;
    for (std::size_t m = 1; m <= max_power; ++m) {
        bool diag = true;
        for (std::size_t i = 0; i < p.target.size(); ++i) diag = diag && p.target[i] == i;
        if (diag) {
            out.order = m;
            out.gamma = p.scale;
            break;
        }
        p = compose_graded(p, g);
    }
    if (out.order == 0) return out;
    // well-defined on L: gamma_i^{p_i} agree across i
    out.character_well_defined = true;
    Scalar common = out.gamma[0].pow(static_cast<long>(A.grading.weights[0]));
    for (std::size_t i = 1; i < out.gamma.size(); ++i)
        if (!(out.gamma[i].pow(static_cast<long>(A.grading.weights[i])) == common))
            out.character_well_defined = false;
    out.psi_invariant = true;
    for (std::size_t i = 0; i < out.gamma.size(); ++i)
        if (!(out.gamma[g.target[i]] == out.gamma[i])) out.psi_invariant = false;
    return out;
}

/// Evaluate the scaling character on an exponent tuple.
inline Scalar gamma_eval(const std::vector<Scalar>& gamma, const GradingGroup::Elem& e) {
    Scalar v = Scalar::one(gamma[0].field());
    for (std::size_t i = 0; i < e.size(); ++i) v = v * gamma[i].pow(e[i]);
    return v;
}

struct Table1Entry {
    std::string name;
    CoordinateTruncation algebra;
    GradedAutomorphism aut;
    GradingGroup::Elem shift;  // a psi-fixed degree for the endomorphism bridge
};

/// The three graded automorphisms of Table 1 over a field containing
/// sqrt(-1) and a primitive sixth root eps (so eps^2 - eps + 1 = 0).
inline std::vector<Table1Entry> table1_data(const FieldPtr& f, unsigned bound = 8) {
    Scalar i4 = primitive_root_of_unity(f, 4);
    Scalar eps = primitive_root_of_unity(f, 6);
    Scalar one = Scalar::one(f);
    std::vector<Table1Entry> out;
    auto s2222m = coordinate_algebra_truncation(f, {2, 2, 2, 2}, -one, bound);
    out.push_back({"g1 on S(2,2,2,2;-1)", s2222m,
                   {{0, 1, 3, 2}, {i4, one, one, one}}, s2222m.grading.gen(0)});
    auto s2222e = coordinate_algebra_truncation(f, {2, 2, 2, 2}, eps, bound);
    out.push_back({"g2 on S(2,2,2,2;eps)", s2222e,
                   {{1, 2, 0, 3}, {one, one, i4, i4 * eps}}, s2222e.grading.gen(3)});
    auto s333 = coordinate_algebra_truncation(f, {3, 3, 3}, std::nullopt, bound);
    out.push_back({"g3 on S(3,3,3)", s333, {{1, 0, 2}, {one, one, eps}},
                   s333.grading.gen(2)});
    return out;
}

/// The scaling data of the three Table-1 rows, each validated first.
inline std::vector<ScalingReport> table1_compatible_pairs(const FieldPtr& f,
                                                          unsigned bound = 8) {
    std::vector<ScalingReport> out;
    for (const auto& e : table1_data(f, bound)) {
        auto rep = validate_graded_automorphism(e.algebra, e.aut);
        if (!rep.ok) throw std::logic_error("Table 1 datum fails validation: " + rep.violations[0]);
        out.push_back(scaling_character(e.algebra, e.aut));
    }
    return out;
}

/// Cor 3.6 bridge.  B is the graded endomorphism algebra of S + S(shift)
/// inside the truncation; the automorphism acts on B, its scaling power is
/// certified d-compatible, and the induced cyclic weak action is returned.
struct CyclicActionBridge {
    ScalingReport scaling;
    AlgebraPtr endo;
    AlgebraMap sigma;
    Vec witness;  // a with sigma(a) = a and sigma^d = a^{-1}(-)a
    WeakAction action;
};

inline CyclicActionBridge induced_weak_action(const CoordinateTruncation& A,
                                              const GradedAutomorphism& g,
                                              const GradingGroup::Elem& shift,
                                              std::uint64_t seed = 0) {
    const FieldPtr& f = A.field;
    auto rep = validate_graded_automorphism(A, g);
    if (!rep.ok) throw std::invalid_argument("invalid graded automorphism: " + rep.violations[0]);
    if (!A.grading.equal(psi_apply(g, shift), shift))
        throw std::invalid_argument("shift degree is not psi-stable");
    ScalingReport sc = scaling_character(A, g);
    if (sc.order == 0 || !sc.character_well_defined)
        throw std::invalid_argument("automorphism has no scaling power on the grading group");

    // basis of B: component (a, b) is the graded piece of degree l_b - l_a
    std::vector<GradingGroup::Elem> shifts{A.grading.zero(), shift};
    struct BasisElem {
        std::size_t row, col;
        Monomial mon;
    };
    std::vector<BasisElem> basis;
    std::vector<std::string> names;
    for (std::size_t a = 0; a < shifts.size(); ++a)
        for (std::size_t b = 0; b < shifts.size(); ++b) {
            auto d = A.grading.add(shifts[b], A.grading.neg(shifts[a]));
            for (const auto& m : A.component(d)) {
                basis.push_back({a, b, m});
                std::string n = "h" + std::to_string(a) + std::to_string(b);
                for (std::size_t i = 0; i < m.size(); ++i)
                    for (unsigned e = 0; e < m[i]; ++e) n += "z" + std::to_string(i + 1);
                names.push_back(n);
            }
        }
    std::size_t n = basis.size();
    auto express = [&](std::size_t row, std::size_t col, const GradedPoly& p) -> Vec {
        if (p.overflow)
            throw std::logic_error("truncation bound too small for the shift algebra");
        Vec v(n, Scalar::zero(f));
        for (const auto& [m, s] : p.terms) {
            bool found = false;
            for (std::size_t k = 0; k < n; ++k)
                if (basis[k].row == row && basis[k].col == col && basis[k].mon == m) {
                    v[k] = s;
                    found = true;
                    break;
                }
            if (!found) throw std::logic_error("product leaves the graded components");
        }
        return v;
    };
    std::vector<std::vector<Vec>> mul(n, std::vector<Vec>(n, Vec(n, Scalar::zero(f))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (basis[i].col != basis[j].row) continue;
            auto p = A.multiply(A.monomial(basis[i].mon, Scalar::one(f)),
                                A.monomial(basis[j].mon, Scalar::one(f)));
            mul[i][j] = express(basis[i].row, basis[j].col, p);
        }
    Vec unit(n, Scalar::zero(f));
    for (std::size_t k = 0; k < n; ++k)
        if (basis[k].row == basis[k].col && CoordinateTruncation::total(basis[k].mon) == 0)
            unit[k] = Scalar::one(f);
    auto B = std::make_shared<Algebra>(f, names, mul, unit);

    Matrix sm(f, n, n);
    for (std::size_t k = 0; k < n; ++k) {
        auto img = apply_graded(A, g, A.monomial(basis[k].mon, Scalar::one(f)));
        Vec v = express(basis[k].row, basis[k].col, img);
        for (std::size_t c = 0; c < n; ++c) sm.at(k, c) = v[c];
    }
    AlgebraMap sigma(B, B, sm);
    auto dc = is_d_compatible(sigma, sc.order, seed);
    if (dc.status != DCompatibleResult::Compatible)
        throw std::logic_error("scaling power is not certified d-compatible");
    Vec b = *B->invert_element(dc.witness);
    return {sc, B, sigma, dc.witness, induced_cyclic_action(sigma, b, sc.order)};
}

}  // namespace equivalg
