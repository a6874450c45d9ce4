/**
 * @file matrix.hpp
 * @brief Dense exact matrices with Gaussian elimination over a Field.
 */
#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "field.hpp"

namespace equivalg {

class Matrix {
public:
    Matrix() = default;
    Matrix(const FieldPtr& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(const FieldPtr& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }
    static Matrix scalar_mat(const FieldPtr& f, std::size_t n, const Scalar& s) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = s;
        return m;
    }

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator+(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix m = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = m.data_[i] + o.data_[i];
        return m;
    }
    Matrix operator-(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix m = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = m.data_[i] - o.data_[i];
        return m;
    }
    Matrix operator*(const Matrix& o) const {
        assert(cols_ == o.rows_);
        Matrix m(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    m.at(i, j) = m.at(i, j) + at(i, k) * o.at(k, j);
            }
        return m;
    }
    Matrix scaled(const Scalar& s) const {
        Matrix m = *this;
        for (auto& x : m.data_) x = x * s;
        return m;
    }
    Matrix transpose() const {
        Matrix m(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const {
        for (const auto& x : data_) if (!x.is_zero()) return false;
        return true;
    }
    bool is_identity() const {
        if (rows_ != cols_) return false;
        return *this == identity(field_, rows_);
    }

    Scalar trace() const {
        Scalar t = Scalar::zero(field_);
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t = t + at(i, i);
        return t;
    }

    /// Reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = rows_;
            for (std::size_t i = r; i < rows_; ++i)
                if (!at(i, c).is_zero()) { sel = i; break; }
            if (sel == rows_) continue;
            if (sel != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
            Scalar inv = at(r, c).inverse();
            for (std::size_t j = 0; j < cols_; ++j) at(r, j) = at(r, j) * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || at(i, c).is_zero()) continue;
                Scalar fct = at(i, c);
                for (std::size_t j = 0; j < cols_; ++j)
                    at(i, j) = at(i, j) - fct * at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) return std::nullopt;
        Matrix aug(field_, rows_, 2 * cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_ + i) = Scalar::one(field_);
        }
        auto piv = aug.rref();
        if (piv.size() != rows_ || piv.back() >= cols_) return std::nullopt;
        Matrix inv(field_, rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
        return inv;
    }

    /// Rows form a basis of the null space of A acting on row vectors (x A = 0
    /// is obtained by passing the transpose; this solves A x = 0, columns x,
    /// returned as rows of the result).
    Matrix kernel() const {
        Matrix m = *this;
        auto piv = m.rref();
        std::vector<bool> is_piv(cols_, false);
        for (auto c : piv) is_piv[c] = true;
        std::vector<std::size_t> free;
        for (std::size_t c = 0; c < cols_; ++c)
            if (!is_piv[c]) free.push_back(c);
        Matrix basis(field_, free.size(), cols_);
        for (std::size_t k = 0; k < free.size(); ++k) {
            basis.at(k, free[k]) = Scalar::one(field_);
            for (std::size_t r = 0; r < piv.size(); ++r)
                basis.at(k, piv[r]) = -m.at(r, free[k]);
        }
        return basis;
    }

    /// Solve A x = b for a single column b; nullopt when inconsistent.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const {
        assert(b.size() == rows_);
        Matrix aug(field_, rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b[i];
        }
        auto piv = aug.rref();
        if (!piv.empty() && piv.back() == cols_) return std::nullopt;
        std::vector<Scalar> x(cols_, Scalar::zero(field_));
        for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(r, cols_);
        return x;
    }

    /// Rank factorization A = C * R with C of full column rank and R of full
    /// row rank; R consists of the nonzero rows of rref(A).
    std::pair<Matrix, Matrix> rank_factorization() const {
        Matrix m = *this;
        auto piv = m.rref();
        std::size_t r = piv.size();
        Matrix R(field_, r, cols_);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < cols_; ++j) R.at(i, j) = m.at(i, j);
        Matrix C(field_, rows_, r);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < r; ++k) C.at(i, k) = at(i, piv[k]);
        return {C, R};
    }

    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            out += i ? ";" : "";
            for (std::size_t j = 0; j < cols_; ++j) {
                out += j ? "," : "";
                out += at(i, j).str();
            }
        }
        return out + "]";
    }

private:
    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

/// Horizontal stack of the rows of each matrix in a flat row vector.
inline std::vector<Scalar> vectorize(const Matrix& m) {
    std::vector<Scalar> v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

inline Matrix devectorize(const FieldPtr& f, const std::vector<Scalar>& v,
                          std::size_t rows, std::size_t cols) {
    assert(v.size() == rows * cols);
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = v[i * cols + j];
    return m;
}

/// Basis of the solution space of a family of homogeneous matrix equations
/// P_i X = X Q_i, X of shape rows x cols. Each solution is returned as a matrix.
inline std::vector<Matrix> intertwiner_space(const FieldPtr& f,
                                             const std::vector<Matrix>& P,
                                             const std::vector<Matrix>& Q,
                                             std::size_t rows, std::size_t cols) {
    assert(P.size() == Q.size());
    std::size_t nvar = rows * cols;
    std::size_t neq = P.size() * nvar;
    Matrix sys(f, neq == 0 ? 1 : neq, nvar);
    std::size_t eq = 0;
    for (std::size_t t = 0; t < P.size(); ++t) {
        const Matrix& A = P[t];
        const Matrix& B = Q[t];
        assert(A.rows() == rows && A.cols() == rows);
        assert(B.rows() == cols && B.cols() == cols);
        // (A X - X B)_{ij} = sum_k A_{ik} X_{kj} - sum_k X_{ik} B_{kj}
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                for (std::size_t k = 0; k < rows; ++k)
                    sys.at(eq, k * cols + j) = sys.at(eq, k * cols + j) + A.at(i, k);
                for (std::size_t k = 0; k < cols; ++k)
                    sys.at(eq, i * cols + k) = sys.at(eq, i * cols + k) - B.at(k, j);
                ++eq;
            }
    }
    Matrix ker = sys.kernel();
    std::vector<Matrix> out;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        std::vector<Scalar> v;
        for (std::size_t c = 0; c < nvar; ++c) v.push_back(ker.at(r, c));
        out.push_back(devectorize(f, v, rows, cols));
    }
    return out;
}

}  // namespace equivalg
