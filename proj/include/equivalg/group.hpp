/**
 * @file group.hpp
 * @brief Finite abelian groups as explicit products of cyclic groups, with
 *        element enumeration and the character group.
 */
#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "field.hpp"

namespace equivalg {

/// Z/d1 x ... x Z/dk. Elements are coordinate vectors with 0 <= x_i < d_i.
class AbGroup {
public:
    using Elem = std::vector<std::uint64_t>;

    explicit AbGroup(std::vector<std::uint64_t> orders) : orders_(std::move(orders)) {
        for (auto d : orders_)
            if (d == 0) throw std::invalid_argument("cyclic factor order must be positive");
        order_ = 1;
        for (auto d : orders_) order_ *= d;
    }

    const std::vector<std::uint64_t>& cyclic_orders() const { return orders_; }
    std::size_t num_factors() const { return orders_.size(); }
    std::uint64_t order() const { return order_; }

    Elem identity() const { return Elem(orders_.size(), 0); }
    Elem add(const Elem& a, const Elem& b) const {
        Elem c(orders_.size());
        for (std::size_t i = 0; i < orders_.size(); ++i) c[i] = (a[i] + b[i]) % orders_[i];
        return c;
    }
    Elem neg(const Elem& a) const {
        Elem c(orders_.size());
        for (std::size_t i = 0; i < orders_.size(); ++i) c[i] = a[i] == 0 ? 0 : orders_[i] - a[i];
        return c;
    }
    bool is_identity(const Elem& a) const {
        for (auto x : a) if (x != 0) return false;
        return true;
    }
    std::uint64_t elem_order(const Elem& a) const {
        Elem acc = a;
        std::uint64_t k = 1;
        while (!is_identity(acc)) { acc = add(acc, a); ++k; }
        return k;
    }

    /// All elements in lexicographic order; the identity comes first.
    std::vector<Elem> elements() const {
        std::vector<Elem> out;
        Elem cur = identity();
        out.push_back(cur);
        for (std::uint64_t c = 1; c < order_; ++c) {
            for (std::size_t i = orders_.size(); i-- > 0;) {
                cur[i] = (cur[i] + 1) % orders_[i];
                if (cur[i] != 0) break;
            }
            out.push_back(cur);
        }
        return out;
    }

    std::size_t index_of(const Elem& a) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < orders_.size(); ++i) idx = idx * orders_[i] + a[i];
        return idx;
    }
    Elem elem_at(std::size_t idx) const {
        Elem a(orders_.size());
        for (std::size_t i = orders_.size(); i-- > 0;) {
            a[i] = idx % orders_[i];
            idx /= orders_[i];
        }
        return a;
    }

    /// Exponent: lcm of the cyclic orders.
    std::uint64_t exponent() const {
        std::uint64_t e = 1;
        for (auto d : orders_) e = std::lcm(e, d);
        return e;
    }

    static std::string elem_str(const Elem& a) {
        std::string s = "(";
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(a[i]);
        }
        return s + ")";
    }

    bool operator==(const AbGroup& o) const { return orders_ == o.orders_; }

private:
    std::vector<std::uint64_t> orders_;
    std::uint64_t order_;
};

/// A character of G with values in k: chi(g) = prod_i zeta_{d_i}^{e_i g_i}.
/// Characters of G are indexed by elements of the same coordinate shape, so
/// the dual group is identified with G itself once roots of unity are fixed.
class Character {
public:
    Character(const AbGroup& g, const FieldPtr& f, AbGroup::Elem exps)
        : field_(f), exps_(std::move(exps)) {
        for (auto d : g.cyclic_orders()) roots_.push_back(primitive_root_of_unity(f, d));
    }

    const AbGroup::Elem& exponents() const { return exps_; }

    Scalar operator()(const AbGroup::Elem& a) const {
        Scalar v = Scalar::one(field_);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            v = v * roots_[i].pow(static_cast<long>(exps_[i] * a[i]));
        return v;
    }

private:
    FieldPtr field_;
    AbGroup::Elem exps_;
    std::vector<Scalar> roots_;
};

/// Full list of characters of G over f. Requires exponent(G) | torsion(f).
inline std::vector<Character> character_group(const AbGroup& g, const FieldPtr& f) {
    std::vector<Character> out;
    for (const auto& e : g.elements()) out.emplace_back(g, f, e);
    return out;
}

}  // namespace equivalg
