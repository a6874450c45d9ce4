/**
 * @file field.hpp
 * @brief Exact scalar arithmetic over prime fields F_p and cyclotomic rationals Q(zeta_n).
 *
 * Every scalar is stored in a unique canonical form (residue mod p, or a
 * polynomial reduced modulo the n-th cyclotomic polynomial), so equality is
 * structural and all downstream checks are literal equalities.
 */
#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace equivalg {

enum class FieldKind { Prime, Cyclotomic };

namespace detail {

inline bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Cyclotomic polynomial Phi_n as a monic integer polynomial, computed by
// dividing x^n - 1 by the product of Phi_d over proper divisors d of n.
inline std::vector<mpz_class> cyclotomic_poly(unsigned n) {
    std::vector<std::vector<mpz_class>> phi(n + 1);
    for (unsigned m = 1; m <= n; ++m) {
        if (n % m != 0) continue;
        std::vector<mpz_class> num(m + 1, 0);  // x^m - 1
        num[0] = -1;
        num[m] = 1;
        for (unsigned d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            const auto& q = phi[d];
            // exact polynomial division num /= q (q is monic)
            std::vector<mpz_class> quot(num.size() - q.size() + 1, 0);
            for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
                mpz_class c = num[i + q.size() - 1];
                quot[i] = c;
                for (std::size_t j = 0; j < q.size(); ++j) num[i + j] -= c * q[j];
            }
            num = quot;
        }
        phi[m] = num;
    }
    return phi[n];
}

}  // namespace detail

/// Shared immutable description of a ground field.
class Field {
public:
    static std::shared_ptr<const Field> prime(std::uint64_t p) {
        if (!detail::is_prime_u64(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
        return std::shared_ptr<const Field>(new Field(p));
    }
    static std::shared_ptr<const Field> cyclotomic(unsigned n) {
        if (n == 0) throw std::invalid_argument("cyclotomic index must be positive");
        return std::shared_ptr<const Field>(new Field(FieldKind::Cyclotomic, n));
    }

    FieldKind kind() const { return kind_; }
    std::uint64_t characteristic() const { return kind_ == FieldKind::Prime ? p_ : 0; }
    unsigned cyclotomic_index() const { return n_; }
    std::size_t degree() const { return kind_ == FieldKind::Prime ? 1 : modulus_.size() - 1; }

    /// Order of the torsion subgroup of the multiplicative group.
    std::uint64_t torsion_order() const {
        if (kind_ == FieldKind::Prime) return p_ - 1;
        return n_ % 2 == 0 ? n_ : 2u * n_;
    }

    const std::vector<mpz_class>& modulus() const { return modulus_; }

    bool operator==(const Field& o) const {
        return kind_ == o.kind_ && p_ == o.p_ && n_ == o.n_;
    }

    std::string describe() const {
        if (kind_ == FieldKind::Prime) return "F_" + std::to_string(p_);
        return "Q(zeta_" + std::to_string(n_) + ")";
    }

private:
    explicit Field(std::uint64_t p) : kind_(FieldKind::Prime), p_(p) {}
    Field(FieldKind, unsigned n) : kind_(FieldKind::Cyclotomic), n_(n), modulus_(detail::cyclotomic_poly(n)) {}

    FieldKind kind_;
    std::uint64_t p_ = 0;
    unsigned n_ = 0;
    std::vector<mpz_class> modulus_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Exact field element in canonical form.
class Scalar {
public:
    Scalar() = default;

    static Scalar zero(const FieldPtr& f) { return from_int(f, 0); }
    static Scalar one(const FieldPtr& f) { return from_int(f, 1); }

    static Scalar from_int(const FieldPtr& f, long v) {
        Scalar s;
        s.field_ = f;
        if (f->kind() == FieldKind::Prime) {
            long long p = static_cast<long long>(f->characteristic());
            long long r = v % p;
            if (r < 0) r += p;
            s.r_ = static_cast<std::uint64_t>(r);
        } else {
            s.c_.assign(f->degree(), mpq_class(0));
            if (f->degree() > 0) s.c_[0] = v;
        }
        return s;
    }

    static Scalar from_rational(const FieldPtr& f, mpq_class q) {
        q.canonicalize();
        if (f->kind() == FieldKind::Prime) {
            mpz_class p(static_cast<unsigned long>(f->characteristic()));
            mpz_class den = q.get_den() % p;
            if (den == 0) throw std::invalid_argument("denominator divisible by characteristic");
            mpz_class inv;
            if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
                throw std::invalid_argument("denominator not invertible");
            mpz_class r = (q.get_num() % p * inv) % p;
            if (r < 0) r += p;
            return from_int(f, r.get_si());
        }
        Scalar s;
        s.field_ = f;
        s.c_.assign(f->degree(), mpq_class(0));
        s.c_[0] = q;
        return s;
    }

    /// Residue class of the polynomial with the given rational coefficients.
    static Scalar from_coeffs(const FieldPtr& f, std::vector<mpq_class> coeffs) {
        if (f->kind() != FieldKind::Cyclotomic) throw std::invalid_argument("coefficient form requires a cyclotomic field");
        for (auto& q : coeffs) q.canonicalize();
        Scalar s;
        s.field_ = f;
        s.c_ = reduce(f, std::move(coeffs));
        return s;
    }

    /// The class of x, a primitive n-th root of unity.
    static Scalar generator(const FieldPtr& f) {
        if (f->kind() != FieldKind::Cyclotomic) throw std::invalid_argument("generator requires a cyclotomic field");
        std::vector<mpq_class> c(f->degree(), mpq_class(0));
        if (f->degree() > 1) c[1] = 1; else c = reduce(f, {mpq_class(0), mpq_class(1)});
        Scalar s;
        s.field_ = f;
        s.c_ = c.size() == f->degree() ? c : reduce(f, std::move(c));
        return s;
    }

    const FieldPtr& field() const { return field_; }
    bool is_zero() const {
        if (field_->kind() == FieldKind::Prime) return r_ == 0;
        for (const auto& q : c_) if (q != 0) return false;
        return true;
    }
    bool is_one() const { return *this == one(field_); }

    std::uint64_t residue() const { return r_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    bool is_rational() const {
        if (field_->kind() == FieldKind::Prime) return true;
        for (std::size_t i = 1; i < c_.size(); ++i) if (c_[i] != 0) return false;
        return true;
    }
    mpq_class rational_part() const { return c_.empty() ? mpq_class(static_cast<long>(r_)) : c_[0]; }

    Scalar operator+(const Scalar& o) const {
        check(o);
        Scalar s = *this;
        if (field_->kind() == FieldKind::Prime) {
            s.r_ = (r_ + o.r_) % field_->characteristic();
        } else {
            for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i] += o.c_[i];
        }
        return s;
    }
    Scalar operator-() const {
        Scalar s = *this;
        if (field_->kind() == FieldKind::Prime) {
            s.r_ = r_ == 0 ? 0 : field_->characteristic() - r_;
        } else {
            for (auto& q : s.c_) q = -q;
        }
        return s;
    }
    Scalar operator-(const Scalar& o) const { return *this + (-o); }
    Scalar operator*(const Scalar& o) const {
        check(o);
        Scalar s;
        s.field_ = field_;
        if (field_->kind() == FieldKind::Prime) {
            // 64-bit safe via 128-bit intermediate
            unsigned __int128 prod = static_cast<unsigned __int128>(r_) * o.r_;
            s.r_ = static_cast<std::uint64_t>(prod % field_->characteristic());
        } else {
            std::vector<mpq_class> prod(c_.size() + o.c_.size() - 1, mpq_class(0));
            for (std::size_t i = 0; i < c_.size(); ++i) {
                if (c_[i] == 0) continue;
                for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
            }
            s.c_ = reduce(field_, std::move(prod));
        }
        return s;
    }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        if (field_->kind() == FieldKind::Prime) {
            return pow(static_cast<long>(field_->characteristic() - 2));
        }
        // extended Euclid in Q[x] against the cyclotomic modulus
        std::vector<mpq_class> r0(field_->modulus().begin(), field_->modulus().end());
        std::vector<mpq_class> r1 = c_;
        trim(r1);
        std::vector<mpq_class> s0{mpq_class(0)}, s1{mpq_class(1)};
        while (!(r1.size() == 1)) {
            auto [q, rem] = divmod(r0, r1);
            auto s2 = sub(s0, mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            trim(r1);
            s0 = std::move(s1);
            s1 = std::move(s2);
            if (r1.empty()) throw std::domain_error("element not invertible");
        }
        mpq_class lead = r1[0];
        for (auto& q : s1) q /= lead;
        return from_coeffs(field_, s1);
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar acc = one(field_);
        Scalar base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const Scalar& o) const {
        if (!(*field_ == *o.field_)) return false;
        return field_->kind() == FieldKind::Prime ? r_ == o.r_ : c_ == o.c_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const {
        if (field_->kind() == FieldKind::Prime) return std::to_string(r_);
        std::string out = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) out += ",";
            out += c_[i].get_str();
        }
        return out + "]";
    }

private:
    void check(const Scalar& o) const {
        if (!(*field_ == *o.field_)) throw std::invalid_argument("mixed fields");
    }

    static void trim(std::vector<mpq_class>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    }
    static std::vector<mpq_class> sub(std::vector<mpq_class> a, const std::vector<mpq_class>& b) {
        if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
        for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
        return a;
    }
    static std::vector<mpq_class> mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<mpq_class> p(a.size() + b.size() - 1, mpq_class(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
        return p;
    }
    static std::pair<std::vector<mpq_class>, std::vector<mpq_class>> divmod(
        std::vector<mpq_class> num, const std::vector<mpq_class>& den) {
        std::vector<mpq_class> quot;
        if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, mpq_class(0));
        while (num.size() >= den.size() && !num.empty()) {
            mpq_class c = num.back() / den.back();
            std::size_t shift = num.size() - den.size();
            quot[shift] = c;
            for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
            trim(num);
            if (!num.empty() && num.size() >= den.size() && num.back() == 0) trim(num);
        }
        return {quot, num};
    }
    static std::vector<mpq_class> reduce(const FieldPtr& f, std::vector<mpq_class> v) {
        const auto& m = f->modulus();
        std::size_t deg = m.size() - 1;
        while (v.size() > deg) {
            mpq_class c = v.back();
            std::size_t shift = v.size() - 1 - deg;
            if (c != 0)
                for (std::size_t j = 0; j < deg; ++j) v[shift + j] -= c * m[j];
            v.pop_back();
        }
        v.resize(deg, mpq_class(0));
        return v;
    }

    FieldPtr field_;
    std::uint64_t r_ = 0;
    std::vector<mpq_class> c_;
};

/// Multiplicative order of a nonzero scalar, or 0 if it is not a root of unity.
inline std::uint64_t multiplicative_order(const Scalar& x, std::uint64_t bound) {
    Scalar acc = x;
    for (std::uint64_t k = 1; k <= bound; ++k) {
        if (acc.is_one()) return k;
        acc = acc * x;
    }
    return 0;
}

/// Deterministic primitive d-th root of unity, or an error if the field has none.
inline Scalar primitive_root_of_unity(const FieldPtr& f, std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("order must be positive");
    if (f->torsion_order() % d != 0) throw std::domain_error("group does not split over field");
    if (d == 1) return Scalar::one(f);
    if (f->kind() == FieldKind::Prime) {
        for (std::uint64_t v = 2; v < f->characteristic(); ++v) {
            Scalar x = Scalar::from_int(f, static_cast<long>(v));
            if (multiplicative_order(x, d) == d) return x;
        }
        throw std::logic_error("no primitive root found in prime field");
    }
    unsigned n = f->cyclotomic_index();
    Scalar zeta = Scalar::generator(f);
    if (n % d == 0) return zeta.pow(static_cast<long>(n / d));
    // n odd, d | 2n: use -zeta, of order 2n
    Scalar mz = -zeta;
    return mz.pow(static_cast<long>(2ull * n / d));
}

struct RootResult {
    enum Status { Found, NoRoot, Undetermined } status;
    Scalar value;  // valid only when status == Found
};

/// Deterministic d-th root. Over F_p the search is exhaustive, hence decisive.
/// Over Q(zeta_n) the search covers rational multiples of roots of unity and
/// reports Undetermined otherwise.
inline RootResult nth_root(const Scalar& x, std::uint64_t d) {
    const FieldPtr& f = x.field();
    if (x.is_zero()) throw std::invalid_argument("nth_root of zero");
    if (d == 0) throw std::invalid_argument("root order must be positive");
    if (f->kind() == FieldKind::Prime) {
        for (std::uint64_t v = 0; v < f->characteristic(); ++v) {
            Scalar y = Scalar::from_int(f, static_cast<long>(v));
            if (y.pow(static_cast<long>(d)) == x) return {RootResult::Found, y};
        }
        return {RootResult::NoRoot, Scalar()};
    }
    // candidates y = t * u with u a torsion element and t a positive rational
    std::uint64_t T = f->torsion_order();
    Scalar zeta = f->cyclotomic_index() % 2 == 0 ? Scalar::generator(f) : -Scalar::generator(f);
    Scalar u = Scalar::one(f);
    for (std::uint64_t k = 0; k < T; ++k, u = u * zeta) {
        Scalar q = x / u.pow(static_cast<long>(d));
        if (!q.is_rational()) continue;
        mpq_class r = q.rational_part();
        if (r <= 0) continue;
        mpz_class num = r.get_num(), den = r.get_den(), rn, rd;
        if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(d)) &&
            mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(d))) {
            Scalar y = Scalar::from_rational(f, mpq_class(rn, rd)) * u;
            if (y.pow(static_cast<long>(d)) == x) return {RootResult::Found, y};
        }
    }
    return {RootResult::Undetermined, Scalar()};
}

}  // namespace equivalg
