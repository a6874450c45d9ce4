/**
 * @file io.hpp
 * @brief JSON file formats for fields, groups, algebras, modules, weak
 *        actions, equivariant data, and commuting-functor data.
 *
 * All numeric payloads are exact: prime-field scalars are residues, and
 * cyclotomic scalars are arrays of rational strings of length deg Phi_n.
 * Group elements used as object keys are comma-joined coordinate strings.
 */
#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "obstruction.hpp"

namespace equivalg::io {

using nlohmann::json;

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return j;
}

inline void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

// ---- fields and scalars ----

inline json field_to_json(const FieldPtr& f) {
    if (f->kind() == FieldKind::Prime) return {{"prime", f->characteristic()}};
    return {{"cyclotomic", f->cyclotomic_index()}};
}

inline FieldPtr field_from_json(const json& j) {
    const json& spec = j.contains("field") ? j.at("field") : j;
    if (spec.contains("prime")) return Field::prime(spec.at("prime").get<std::uint64_t>());
    if (spec.contains("cyclotomic")) return Field::cyclotomic(spec.at("cyclotomic").get<unsigned>());
    throw std::runtime_error("field must specify \"prime\" or \"cyclotomic\"");
}

/// "prime:13" or "cyclotomic:12", as accepted by the --field flag.
inline FieldPtr parse_field_spec(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::runtime_error("field spec must look like prime:13 or cyclotomic:12");
    std::string kind = s.substr(0, colon);
    unsigned long v = std::stoul(s.substr(colon + 1));
    if (kind == "prime") return Field::prime(v);
    if (kind == "cyclotomic") return Field::cyclotomic(static_cast<unsigned>(v));
    throw std::runtime_error("unknown field kind: " + kind);
}

inline json scalar_to_json(const Scalar& s) {
    if (s.field()->kind() == FieldKind::Prime) return s.residue();
    json arr = json::array();
    for (const auto& q : s.coeffs()) arr.push_back(q.get_str());
    return arr;
}

inline Scalar scalar_from_json(const FieldPtr& f, const json& j) {
    if (j.is_number_integer()) return Scalar::from_int(f, j.get<long>());
    if (j.is_string()) {
        mpq_class q(j.get<std::string>());
        q.canonicalize();
        return Scalar::from_rational(f, q);
    }
    if (j.is_array()) {
        std::vector<mpq_class> coeffs;
        for (const auto& e : j) {
            mpq_class q(e.is_string() ? e.get<std::string>() : std::to_string(e.get<long>()));
            q.canonicalize();
            coeffs.push_back(q);
        }
        return Scalar::from_coeffs(f, std::move(coeffs));
    }
    throw std::runtime_error("scalar must be an integer, rational string, or coefficient array");
}

inline json vec_to_json(const Vec& v) {
    json arr = json::array();
    for (const auto& s : v) arr.push_back(scalar_to_json(s));
    return arr;
}

inline Vec vec_from_json(const FieldPtr& f, const json& j) {
    Vec v;
    for (const auto& e : j) v.push_back(scalar_from_json(f, e));
    return v;
}

inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(m.at(i, k)));
        rows.push_back(row);
    }
    return rows;
}

inline Matrix matrix_from_json(const FieldPtr& f, const json& j) {
    std::size_t rows = j.size();
    std::size_t cols = rows == 0 ? 0 : j.at(0).size();
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j.at(i).size() != cols) throw std::runtime_error("ragged matrix rows");
        for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = scalar_from_json(f, j.at(i).at(k));
    }
    return m;
}

// ---- groups ----

inline json group_to_json(const GroupPtr& g) {
    return {{"cyclic_orders", g->cyclic_orders()}};
}

inline GroupPtr group_from_json(const json& j) {
    const json& spec = j.contains("group") ? j.at("group") : j;
    auto orders = spec.at("cyclic_orders").get<std::vector<std::uint64_t>>();
    return std::make_shared<AbGroup>(std::move(orders));
}

/// Comma-joined coordinates, e.g. "0" or "1,2"; used as JSON object keys.
inline std::string elem_key(const AbGroup::Elem& g) {
    std::string s;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(g[i]);
    }
    return s;
}

inline AbGroup::Elem elem_from_key(const AbGroup& G, const std::string& key) {
    AbGroup::Elem g;
    std::istringstream in(key);
    std::string part;
    while (std::getline(in, part, ',')) g.push_back(std::stoull(part));
    if (g.size() != G.num_factors()) throw std::runtime_error("group element key has wrong arity: " + key);
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] >= G.cyclic_orders()[i]) throw std::runtime_error("group element coordinate out of range: " + key);
    return g;
}

// ---- algebras and modules ----

inline json algebra_to_json(const Algebra& A) {
    json mul = json::array();
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            const Vec& row = A.table(i, j);
            for (std::size_t k = 0; k < A.dim(); ++k)
                if (!row[k].is_zero()) mul.push_back(json{i, j, k, scalar_to_json(row[k])});
        }
    return {{"field", field_to_json(A.field())},
            {"dim", A.dim()},
            {"basis", A.basis_names()},
            {"mul", mul},
            {"unit", vec_to_json(A.unit())}};
}

inline AlgebraPtr algebra_from_json(const json& j, FieldPtr f = nullptr) {
    if (!f) f = field_from_json(j);
    std::size_t n = j.at("dim").get<std::size_t>();
    std::vector<std::string> names;
    if (j.contains("basis")) {
        names = j.at("basis").get<std::vector<std::string>>();
        if (names.size() != n) throw std::runtime_error("basis name count does not match dim");
    } else {
        for (std::size_t i = 0; i < n; ++i) names.push_back("b" + std::to_string(i));
    }
    std::vector<std::vector<Vec>> mul(n, std::vector<Vec>(n, Vec(n, Scalar::zero(f))));
    for (const auto& entry : j.at("mul")) {
        if (entry.size() != 4) throw std::runtime_error("mul entries must be [i, j, k, scalar]");
        std::size_t i = entry.at(0).get<std::size_t>();
        std::size_t jj = entry.at(1).get<std::size_t>();
        std::size_t k = entry.at(2).get<std::size_t>();
        if (i >= n || jj >= n || k >= n) throw std::runtime_error("mul index out of range");
        mul[i][jj][k] = scalar_from_json(f, entry.at(3));
    }
    Vec unit = vec_from_json(f, j.at("unit"));
    if (unit.size() != n) throw std::runtime_error("unit has wrong length");
    return std::make_shared<Algebra>(f, std::move(names), std::move(mul), std::move(unit));
}

inline json module_to_json(const ModuleRep& M) {
    json act = json::array();
    for (const auto& m : M.action()) act.push_back(matrix_to_json(m));
    return {{"dim", M.dim()}, {"action", act}};
}

inline ModuleRep module_from_json(const AlgebraPtr& A, const json& j) {
    std::size_t d = j.at("dim").get<std::size_t>();
    std::vector<Matrix> act;
    for (const auto& m : j.at("action")) {
        Matrix mat = matrix_from_json(A->field(), m);
        if (mat.rows() != d || mat.cols() != d) throw std::runtime_error("module action matrix has wrong shape");
        act.push_back(std::move(mat));
    }
    if (act.size() != A->dim()) throw std::runtime_error("module needs one action matrix per algebra basis element");
    return ModuleRep(A, std::move(act));
}

// ---- weak actions ----

inline json weak_action_to_json(const WeakAction& w) {
    const AbGroup& G = *w.group();
    json rho = json::object();
    for (const auto& g : G.elements()) rho[elem_key(g)] = matrix_to_json(w.rho(g).matrix());
    json c = json::array();
    for (const auto& g : G.elements())
        for (const auto& h : G.elements())
            c.push_back(json{json(g), json(h), vec_to_json(w.c(g, h))});
    return {{"field", field_to_json(w.algebra()->field())},
            {"group", group_to_json(w.group())},
            {"algebra", algebra_to_json(*w.algebra())},
            {"rho", rho},
            {"c", c}};
}

inline WeakAction weak_action_from_json(const json& j) {
    FieldPtr f = field_from_json(j);
    GroupPtr G = group_from_json(j);
    AlgebraPtr A = algebra_from_json(j.at("algebra"), f);
    std::vector<AlgebraMap> rho(G->order(), AlgebraMap::identity(A));
    std::vector<bool> seen(G->order(), false);
    for (const auto& [key, m] : j.at("rho").items()) {
        auto g = elem_from_key(*G, key);
        Matrix mat = matrix_from_json(f, m);
        if (mat.rows() != A->dim() || mat.cols() != A->dim()) throw std::runtime_error("rho matrix has wrong shape");
        rho[G->index_of(g)] = AlgebraMap(A, A, std::move(mat));
        seen[G->index_of(g)] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) throw std::runtime_error("rho missing for group element " + AbGroup::elem_str(G->elem_at(i)));
    std::vector<std::vector<Vec>> c(G->order(), std::vector<Vec>(G->order(), A->unit()));
    for (const auto& entry : j.at("c")) {
        if (entry.size() != 3) throw std::runtime_error("c entries must be [g, h, coeffs]");
        auto g = entry.at(0).get<AbGroup::Elem>();
        auto h = entry.at(1).get<AbGroup::Elem>();
        Vec u = vec_from_json(f, entry.at(2));
        if (u.size() != A->dim()) throw std::runtime_error("c value has wrong length");
        c[G->index_of(g)][G->index_of(h)] = std::move(u);
    }
    return WeakAction(std::move(G), std::move(A), std::move(rho), std::move(c));
}

// ---- equivariant data ----

inline json equivariant_to_json(const AbGroup& G, const EquivariantModule& E) {
    json alpha = json::object();
    for (const auto& g : G.elements()) alpha[elem_key(g)] = matrix_to_json(E.a(G, g));
    return {{"module", module_to_json(E.base)}, {"alpha", alpha}};
}

inline EquivariantModule equivariant_from_json(const AlgebraPtr& A, const AbGroup& G, const json& j) {
    EquivariantModule E;
    E.base = module_from_json(A, j.at("module"));
    E.alpha.assign(G.order(), Matrix());
    for (const auto& [key, m] : j.at("alpha").items())
        E.alpha[G.index_of(elem_from_key(G, key))] = matrix_from_json(A->field(), m);
    for (const auto& m : E.alpha)
        if (m.rows() != E.base.dim()) throw std::runtime_error("alpha missing or malformed for some group element");
    return E;
}

inline json nested_to_json(const AbGroup& G, const NestedEquivariant& N) {
    json beta = json::object();
    for (std::size_t i = 0; i < N.beta.size(); ++i) beta[std::to_string(i)] = matrix_to_json(N.beta[i]);
    return {{"equivariant", equivariant_to_json(G, N.e)}, {"beta", beta}};
}

inline NestedEquivariant nested_from_json(const AlgebraPtr& A, const AbGroup& G, const json& j) {
    NestedEquivariant N;
    N.e = equivariant_from_json(A, G, j.at("equivariant"));
    N.beta.assign(G.order(), Matrix());
    for (const auto& [key, m] : j.at("beta").items()) {
        std::size_t i = std::stoul(key);
        if (i >= G.order()) throw std::runtime_error("beta character index out of range");
        N.beta[i] = matrix_from_json(A->field(), m);
    }
    return N;
}

// ---- commuting-functor data ----

inline json functor_datum_to_json(const AbGroup& G, const CommutingFunctorDatum& d) {
    json delta = json::object();
    for (const auto& g : G.elements()) delta[elem_key(g)] = vec_to_json(d.delta[G.index_of(g)]);
    return {{"F", matrix_to_json(d.phi.matrix())}, {"delta", delta}};
}

inline CommutingFunctorDatum functor_datum_from_json(const AlgebraPtr& A, const AbGroup& G,
                                                     const json& j) {
    CommutingFunctorDatum d;
    Matrix m = matrix_from_json(A->field(), j.at("F"));
    if (m.rows() != A->dim() || m.cols() != A->dim()) throw std::runtime_error("F matrix has wrong shape");
    d.phi = AlgebraMap(A, A, std::move(m));
    d.delta.assign(G.order(), A->unit());
    std::vector<bool> seen(G.order(), false);
    for (const auto& [key, v] : j.at("delta").items()) {
        auto g = elem_from_key(G, key);
        Vec u = vec_from_json(A->field(), v);
        if (u.size() != A->dim()) throw std::runtime_error("delta value has wrong length");
        d.delta[G.index_of(g)] = std::move(u);
        seen[G.index_of(g)] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) throw std::runtime_error("delta missing for group element " + AbGroup::elem_str(G.elem_at(i)));
    return d;
}

}  // namespace equivalg::io
