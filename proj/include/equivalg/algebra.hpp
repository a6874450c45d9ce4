/**
 * @file algebra.hpp
 * @brief Finite-dimensional unital associative algebras by structure constants,
 *        algebra maps, and right modules.
 *
 * Conventions. Elements are coefficient row vectors over the chosen basis.
 * Linear maps act on the right of row vectors, so the matrix of a composite
 * f then g is F*G. A right module of dimension m assigns to each basis
 * element b_i a matrix rho(b_i), and m.r = m * rho(r) with rho(rs) =
 * rho(r)*rho(s).
 */
#pragma once

#include <cassert>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace equivalg {

using Vec = std::vector<Scalar>;

inline Vec vec_add(const Vec& a, const Vec& b) {
    Vec c = a;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] + b[i];
    return c;
}
inline Vec vec_scale(const Vec& a, const Scalar& s) {
    Vec c = a;
    for (auto& x : c) x = x * s;
    return c;
}
inline bool vec_is_zero(const Vec& a) {
    for (const auto& x : a) if (!x.is_zero()) return false;
    return true;
}

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
    void fail(std::string msg) {
        ok = false;
        violations.push_back(std::move(msg));
    }
};

class Algebra {
public:
    Algebra() = default;
    Algebra(FieldPtr f, std::vector<std::string> names,
            std::vector<std::vector<Vec>> mul, Vec unit)
        : field_(std::move(f)), names_(std::move(names)),
          mul_(std::move(mul)), unit_(std::move(unit)) {}

    const FieldPtr& field() const { return field_; }
    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& basis_names() const { return names_; }
    const Vec& unit() const { return unit_; }
    const Vec& table(std::size_t i, std::size_t j) const { return mul_[i][j]; }

    Vec zero() const { return Vec(dim(), Scalar::zero(field_)); }
    Vec basis_elem(std::size_t i) const {
        Vec v = zero();
        v[i] = Scalar::one(field_);
        return v;
    }

    Vec multiply(const Vec& a, const Vec& b) const {
        Vec c = zero();
        for (std::size_t i = 0; i < dim(); ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (b[j].is_zero()) continue;
                Scalar s = a[i] * b[j];
                for (std::size_t k = 0; k < dim(); ++k)
                    c[k] = c[k] + s * mul_[i][j][k];
            }
        }
        return c;
    }

    /// coeffs(x*a) = x_row * right_mult(a)
    Matrix right_mult(const Vec& a) const {
        Matrix m(field_, dim(), dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            Vec row = multiply(basis_elem(i), a);
            for (std::size_t k = 0; k < dim(); ++k) m.at(i, k) = row[k];
        }
        return m;
    }
    /// coeffs(a*x) = x_row * left_mult(a)
    Matrix left_mult(const Vec& a) const {
        Matrix m(field_, dim(), dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            Vec row = multiply(a, basis_elem(i));
            for (std::size_t k = 0; k < dim(); ++k) m.at(i, k) = row[k];
        }
        return m;
    }

    std::optional<Vec> invert_element(const Vec& a) const {
        // solve a*x = unit, then confirm x*a = unit
        Matrix L = left_mult(a).transpose();
        auto x = L.solve(unit_);
        if (!x) return std::nullopt;
        if (!(multiply(*x, a) == unit_) || !(multiply(a, *x) == unit_)) return std::nullopt;
        return x;
    }
    bool is_unit_element(const Vec& a) const { return invert_element(a).has_value(); }

    ValidationReport validate() const {
        ValidationReport rep;
        std::size_t n = dim();
        for (std::size_t i = 0; i < n; ++i) {
            if (!(multiply(unit_, basis_elem(i)) == basis_elem(i)))
                rep.fail("unit fails on the left of " + names_[i]);
            if (!(multiply(basis_elem(i), unit_) == basis_elem(i)))
                rep.fail("unit fails on the right of " + names_[i]);
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    Vec lhs = multiply(multiply(basis_elem(i), basis_elem(j)), basis_elem(k));
                    Vec rhs = multiply(basis_elem(i), multiply(basis_elem(j), basis_elem(k)));
                    if (!(lhs == rhs))
                        rep.fail("associativity fails on (" + names_[i] + "," +
                                 names_[j] + "," + names_[k] + ")");
                }
        return rep;
    }

    std::vector<Vec> center_basis() const {
        // z b_i = b_i z for all i: rows of the kernel of the stacked system
        std::size_t n = dim();
        Matrix sys(field_, n * n, n);
        for (std::size_t i = 0; i < n; ++i) {
            Matrix d = left_mult(basis_elem(i)) - right_mult(basis_elem(i));
            // z * d = 0: z_j d_{jk}
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t j = 0; j < n; ++j)
                    sys.at(i * n + k, j) = d.at(j, k);
        }
        Matrix ker = sys.kernel();
        std::vector<Vec> out;
        for (std::size_t r = 0; r < ker.rows(); ++r) {
            Vec v;
            for (std::size_t c = 0; c < n; ++c) v.push_back(ker.at(r, c));
            out.push_back(v);
        }
        return out;
    }

    bool operator==(const Algebra& o) const {
        return names_.size() == o.names_.size() && mul_ == o.mul_ && unit_ == o.unit_;
    }

private:
    FieldPtr field_;
    std::vector<std::string> names_;
    std::vector<std::vector<Vec>> mul_;
    Vec unit_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// k-linear map between algebras, stored as its matrix on basis coordinates.
class AlgebraMap {
public:
    AlgebraMap() = default;
    AlgebraMap(AlgebraPtr src, AlgebraPtr tgt, Matrix m)
        : src_(std::move(src)), tgt_(std::move(tgt)), m_(std::move(m)) {}

    static AlgebraMap identity(const AlgebraPtr& a) {
        return AlgebraMap(a, a, Matrix::identity(a->field(), a->dim()));
    }

    const AlgebraPtr& source() const { return src_; }
    const AlgebraPtr& target() const { return tgt_; }
    const Matrix& matrix() const { return m_; }

    Vec apply(const Vec& a) const {
        Vec out(tgt_->dim(), Scalar::zero(tgt_->field()));
        for (std::size_t i = 0; i < src_->dim(); ++i)
            for (std::size_t k = 0; k < tgt_->dim(); ++k)
                out[k] = out[k] + a[i] * m_.at(i, k);
        return out;
    }

    /// this followed by o
    AlgebraMap then(const AlgebraMap& o) const {
        return AlgebraMap(src_, o.tgt_, m_ * o.m_);
    }
    std::optional<AlgebraMap> inverse() const {
        auto inv = m_.inverse();
        if (!inv) return std::nullopt;
        return AlgebraMap(tgt_, src_, *inv);
    }

    ValidationReport validate_homomorphism() const {
        ValidationReport rep;
        if (!(apply(src_->unit()) == tgt_->unit())) rep.fail("unit not preserved");
        for (std::size_t i = 0; i < src_->dim(); ++i)
            for (std::size_t j = 0; j < src_->dim(); ++j) {
                Vec lhs = apply(src_->multiply(src_->basis_elem(i), src_->basis_elem(j)));
                Vec rhs = tgt_->multiply(apply(src_->basis_elem(i)), apply(src_->basis_elem(j)));
                if (!(lhs == rhs))
                    rep.fail("multiplicativity fails on (" + src_->basis_names()[i] +
                             "," + src_->basis_names()[j] + ")");
            }
        return rep;
    }
    bool is_automorphism() const {
        return src_ == tgt_ && m_.inverse().has_value() && validate_homomorphism().ok;
    }

    AlgebraMap power(long e) const {
        assert(src_ == tgt_);
        if (e < 0) return inverse()->power(-e);
        AlgebraMap acc = identity(src_);
        for (long i = 0; i < e; ++i) acc = acc.then(*this);
        return acc;
    }

    bool operator==(const AlgebraMap& o) const { return m_ == o.m_; }

private:
    AlgebraPtr src_, tgt_;
    Matrix m_;
};

/// Right module over an algebra: one action matrix per basis element.
class ModuleRep {
public:
    ModuleRep() = default;
    ModuleRep(AlgebraPtr a, std::vector<Matrix> action)
        : alg_(std::move(a)), act_(std::move(action)) {}

    const AlgebraPtr& algebra() const { return alg_; }
    std::size_t dim() const { return act_.empty() ? 0 : act_[0].rows(); }
    const std::vector<Matrix>& action() const { return act_; }

    Matrix act_elem(const Vec& r) const {
        Matrix m(alg_->field(), dim(), dim());
        for (std::size_t i = 0; i < act_.size(); ++i)
            if (!r[i].is_zero()) m = m + act_[i].scaled(r[i]);
        return m;
    }

    ValidationReport validate() const {
        ValidationReport rep;
        if (!(act_elem(alg_->unit()) == Matrix::identity(alg_->field(), dim())))
            rep.fail("unit does not act as identity");
        for (std::size_t i = 0; i < alg_->dim(); ++i)
            for (std::size_t j = 0; j < alg_->dim(); ++j) {
                Matrix lhs = act_[i] * act_[j];
                Matrix rhs = act_elem(alg_->table(i, j));
                if (!(lhs == rhs))
                    rep.fail("action not multiplicative on (" + alg_->basis_names()[i] +
                             "," + alg_->basis_names()[j] + ")");
            }
        return rep;
    }

    ModuleRep twisted(const AlgebraMap& sigma) const {
        std::vector<Matrix> act;
        for (std::size_t i = 0; i < alg_->dim(); ++i)
            act.push_back(act_elem(sigma.apply(alg_->basis_elem(i))));
        return ModuleRep(alg_, std::move(act));
    }

    ModuleRep direct_sum(const ModuleRep& o) const {
        std::size_t n = dim(), m = o.dim();
        std::vector<Matrix> act;
        for (std::size_t i = 0; i < alg_->dim(); ++i) {
            Matrix blk(alg_->field(), n + m, n + m);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) blk.at(r, c) = act_[i].at(r, c);
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < m; ++c) blk.at(n + r, n + c) = o.act_[i].at(r, c);
            act.push_back(blk);
        }
        return ModuleRep(alg_, std::move(act));
    }

    static ModuleRep regular(const AlgebraPtr& a) {
        std::vector<Matrix> act;
        for (std::size_t i = 0; i < a->dim(); ++i) act.push_back(a->right_mult(a->basis_elem(i)));
        return ModuleRep(a, std::move(act));
    }

    bool operator==(const ModuleRep& o) const { return act_ == o.act_; }

private:
    AlgebraPtr alg_;
    std::vector<Matrix> act_;
};

/// Basis of Hom_A(M, N): matrices F with rho_M(b) F = F rho_N(b).
inline std::vector<Matrix> hom_space(const ModuleRep& M, const ModuleRep& N) {
    return intertwiner_space(M.algebra()->field(), M.action(), N.action(), M.dim(), N.dim());
}

/// Coordinates of m in the span of the given matrices, if it lies there.
inline std::optional<Vec> express_in_basis(const std::vector<Matrix>& basis, const Matrix& m) {
    if (basis.empty()) return m.is_zero() ? std::optional<Vec>(Vec{}) : std::nullopt;
    const FieldPtr& f = basis[0].field();
    std::size_t nv = basis[0].rows() * basis[0].cols();
    Matrix sys(f, nv, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        auto v = vectorize(basis[j]);
        for (std::size_t i = 0; i < nv; ++i) sys.at(i, j) = v[i];
    }
    return sys.solve(vectorize(m));
}

/// Deterministic search for an invertible element of the span of the given
/// matrices: basis elements, pairwise sums, then seeded random combinations.
inline std::optional<Matrix> find_invertible_in_span(const std::vector<Matrix>& basis,
                                                     std::uint64_t seed,
                                                     std::size_t budget = 200) {
    if (basis.empty()) return std::nullopt;
    const FieldPtr& f = basis[0].field();
    auto try_mat = [&](const Matrix& m) -> std::optional<Matrix> {
        if (m.rows() == m.cols() && m.inverse().has_value()) return m;
        return std::nullopt;
    };
    for (const auto& b : basis)
        if (auto r = try_mat(b)) return r;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (auto r = try_mat(basis[i] + basis[j])) return r;
    std::mt19937_64 rng(seed);
    std::uint64_t range = f->kind() == FieldKind::Prime
                              ? std::min<std::uint64_t>(f->characteristic(), 1024)
                              : 7;
    for (std::size_t t = 0; t < budget; ++t) {
        Matrix acc(f, basis[0].rows(), basis[0].cols());
        for (const auto& b : basis) {
            long c = static_cast<long>(rng() % range);
            acc = acc + b.scaled(Scalar::from_int(f, c));
        }
        if (auto r = try_mat(acc)) return r;
    }
    return std::nullopt;
}

/// Explicit module isomorphism M -> N if one is found.
inline std::optional<Matrix> module_isomorphism(const ModuleRep& M, const ModuleRep& N,
                                                std::uint64_t seed = 0) {
    if (M.dim() != N.dim()) return std::nullopt;
    auto homs = hom_space(M, N);
    return find_invertible_in_span(homs, seed);
}

/// End_A(M) as an abstract algebra plus its basis of matrices.
struct EndAlgebra {
    AlgebraPtr alg;                 // abstract endomorphism algebra
    std::vector<Matrix> basis;      // basis[i] realizes alg basis element i
};

/// Build an abstract algebra from a family of matrices closed under product
/// and containing the identity (e.g. a hom-space basis of End).
inline EndAlgebra matrix_algebra(const FieldPtr& f, const std::vector<Matrix>& basis,
                                 std::vector<std::string> names = {}) {
    std::size_t n = basis.size();
    if (names.empty())
        for (std::size_t i = 0; i < n; ++i) names.push_back("E" + std::to_string(i));
    std::vector<std::vector<Vec>> mul(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto coords = express_in_basis(basis, basis[i] * basis[j]);
            if (!coords) throw std::logic_error("matrix family not closed under product");
            mul[i][j] = *coords;
        }
    auto id = express_in_basis(basis, Matrix::identity(f, basis[0].rows()));
    if (!id) throw std::logic_error("matrix family does not contain the identity");
    EndAlgebra out;
    out.alg = std::make_shared<Algebra>(f, std::move(names), std::move(mul), *id);
    out.basis = basis;
    return out;
}

inline EndAlgebra end_algebra(const ModuleRep& M) {
    return matrix_algebra(M.algebra()->field(), hom_space(M, M));
}

/// Witness a in A^x with sigma(x) = a^{-1} x a, searched in the exact solution
/// space of a sigma(x) = x a.
struct InnerResult {
    enum Status { Inner, NotInner, Undetermined } status;
    Vec witness;
};

inline InnerResult is_inner(const AlgebraMap& sigma, std::uint64_t seed = 0) {
    const Algebra& A = *sigma.source();
    const FieldPtr& f = A.field();
    std::size_t n = A.dim();
    // a * sigma(b_i) = b_i * a: rows of the kernel, a as unknown row vector
    Matrix sys(f, n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix d = A.right_mult(sigma.apply(A.basis_elem(i))) - A.left_mult(A.basis_elem(i));
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                sys.at(i * n + k, j) = d.at(j, k);
    }
    Matrix ker = sys.kernel();
    std::vector<Vec> space;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        Vec v;
        for (std::size_t c = 0; c < n; ++c) v.push_back(ker.at(r, c));
        space.push_back(v);
    }
    if (space.empty()) return {InnerResult::NotInner, {}};
    auto verify = [&](const Vec& a) -> bool {
        auto inv = A.invert_element(a);
        if (!inv) return false;
        for (std::size_t i = 0; i < n; ++i)
            if (!(sigma.apply(A.basis_elem(i)) ==
                  A.multiply(*inv, A.multiply(A.basis_elem(i), a))))
                return false;
        return true;
    };
    if (f->kind() == FieldKind::Prime) {
        // exhaustive when the search space is small, else sampled
        double size = 1;
        for (std::size_t i = 0; i < space.size(); ++i) size *= static_cast<double>(f->characteristic());
        if (size <= 100000.0) {
            std::vector<std::uint64_t> idx(space.size(), 0);
            std::uint64_t p = f->characteristic();
            while (true) {
                Vec a(n, Scalar::zero(f));
                for (std::size_t i = 0; i < space.size(); ++i)
                    a = vec_add(a, vec_scale(space[i], Scalar::from_int(f, static_cast<long>(idx[i]))));
                if (verify(a)) return {InnerResult::Inner, a};
                std::size_t i = 0;
                for (; i < idx.size(); ++i) {
                    idx[i] = (idx[i] + 1) % p;
                    if (idx[i] != 0) break;
                }
                if (i == idx.size()) break;
            }
            return {InnerResult::NotInner, {}};
        }
    }
    std::mt19937_64 rng(seed);
    std::uint64_t range = f->kind() == FieldKind::Prime ? f->characteristic() : 11;
    for (std::size_t t = 0; t < 500; ++t) {
        Vec a(n, Scalar::zero(f));
        for (const auto& v : space)
            a = vec_add(a, vec_scale(v, Scalar::from_int(f, static_cast<long>(rng() % range))));
        if (verify(a)) return {InnerResult::Inner, a};
    }
    return {InnerResult::Undetermined, {}};
}

}  // namespace equivalg
