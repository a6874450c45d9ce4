/**
 * @file smith.hpp
 * @brief Smith normal form over Z with unimodular transforms, plus a modular
 *        linear solver built on top of it.
 */
#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace equivalg {

using ZMat = std::vector<std::vector<mpz_class>>;

inline ZMat z_identity(std::size_t n) {
    ZMat m(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline ZMat z_mul(const ZMat& a, const ZMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    ZMat c(n, std::vector<mpz_class>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

struct SmithResult {
    ZMat U, D, V;  // U * A * V = D, U and V unimodular, D diagonal with d_i | d_{i+1}
};

inline SmithResult smith_normal_form(ZMat A) {
    std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    SmithResult res{z_identity(rows), {}, z_identity(cols)};
    ZMat& U = res.U;
    ZMat& V = res.V;

    auto row_op = [&](std::size_t i, std::size_t j, const mpz_class& q) {
        // row_i -= q * row_j
        for (std::size_t c = 0; c < cols; ++c) A[i][c] -= q * A[j][c];
        for (std::size_t c = 0; c < rows; ++c) U[i][c] -= q * U[j][c];
    };
    auto col_op = [&](std::size_t i, std::size_t j, const mpz_class& q) {
        // col_i -= q * col_j
        for (std::size_t r = 0; r < rows; ++r) A[r][i] -= q * A[r][j];
        for (std::size_t r = 0; r < cols; ++r) V[r][i] -= q * V[r][j];
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        std::swap(A[i], A[j]);
        std::swap(U[i], U[j]);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(A[r][i], A[r][j]);
        for (std::size_t r = 0; r < cols; ++r) std::swap(V[r][i], V[r][j]);
    };
    auto row_negate = [&](std::size_t i) {
        for (auto& x : A[i]) x = -x;
        for (auto& x : U[i]) x = -x;
    };

    auto diagonalize = [&]() {
        std::size_t t = 0;
        while (t < rows && t < cols) {
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows && pi == rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (A[i][j] != 0) { pi = i; pj = j; break; }
            if (pi == rows) break;
            if (pi != t) row_swap(pi, t);
            if (pj != t) col_swap(pj, t);
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (std::size_t i = t + 1; i < rows; ++i) {
                    while (A[i][t] != 0) {
                        mpz_class q = A[i][t] / A[t][t];
                        row_op(i, t, q);
                        if (A[i][t] != 0) { row_swap(i, t); dirty = true; }
                    }
                }
                for (std::size_t j = t + 1; j < cols; ++j) {
                    while (A[t][j] != 0) {
                        mpz_class q = A[t][j] / A[t][t];
                        col_op(j, t, q);
                        if (A[t][j] != 0) { col_swap(j, t); dirty = true; }
                    }
                }
            }
            if (A[t][t] < 0) row_negate(t);
            ++t;
        }
        return t;
    };

    std::size_t t = diagonalize();
    // enforce divisibility d_i | d_{i+1} by folding the offender into the
    // earlier column and re-diagonalizing
    for (bool again = true; again;) {
        again = false;
        for (std::size_t i = 0; i + 1 < t; ++i) {
            if (A[i][i] != 0 && A[i + 1][i + 1] % A[i][i] != 0) {
                for (std::size_t r = 0; r < rows; ++r) A[r][i] += A[r][i + 1];
                for (std::size_t r = 0; r < cols; ++r) V[r][i] += V[r][i + 1];
                t = diagonalize();
                again = true;
                break;
            }
        }
    }
    res.D = A;
    return res;
}

/// Solve A x = b (mod M) for integer x; nullopt when no solution exists.
inline std::optional<std::vector<mpz_class>> solve_mod(const ZMat& A,
                                                       const std::vector<mpz_class>& b,
                                                       const mpz_class& M) {
    std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    assert(b.size() == rows);
    SmithResult s = smith_normal_form(A);
    // A = U^{-1} D V^{-1}; A x = b  <=>  D y = U b with x = V y
    std::vector<mpz_class> ub(rows, 0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j) ub[i] += s.U[i][j] * b[j];
    std::vector<mpz_class> y(cols, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class d = i < cols ? s.D[i][i] : mpz_class(0);
        mpz_class rhs = ub[i] % M;
        if (rhs < 0) rhs += M;
        if (d == 0) {
            if (rhs != 0) return std::nullopt;
            continue;
        }
        // solve d * y_i = rhs (mod M): solvable iff gcd(d, M) | rhs
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), M.get_mpz_t());
        if (rhs % g != 0) return std::nullopt;
        mpz_class d2 = d / g, M2 = M / g, r2 = rhs / g, inv;
        if (M2 == 1) {
            y[i] = 0;
        } else {
            mpz_invert(inv.get_mpz_t(), d2.get_mpz_t(), M2.get_mpz_t());
            y[i] = (r2 * inv) % M2;
        }
    }
    std::vector<mpz_class> x(cols, 0);
    for (std::size_t i = 0; i < cols; ++i) {
        for (std::size_t j = 0; j < cols; ++j) x[i] += s.V[i][j] * y[j];
        x[i] %= M;
        if (x[i] < 0) x[i] += M;
    }
    return x;
}

}  // namespace equivalg
