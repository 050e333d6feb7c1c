#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewlab/errors.hpp"

namespace skewlab {

// Dense matrix over a division-ring element type T. T must provide the field
// operations, is_zero, zero_like/one_like prototypes and (for pivoting) a
// degree_measure(). 0 x n and m x 0 matrices are allowed; `proto` keeps the
// ring reachable even then.
template <typename T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, T proto_zero)
        : rows_(rows), cols_(cols), proto_(std::move(proto_zero)), a_(rows * cols, proto_) {}

    static Matrix identity(std::size_t n, const T& proto) {
        Matrix m(n, n, proto.zero_like());
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = proto.one_like();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const T& proto() const { return proto_; }

    T& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw Error(ErrorClass::Input, "matrix dimension mismatch");
        Matrix r(rows_, o.cols_, proto_.zero_like());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& x = at(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    if (o.at(k, j).is_zero()) continue;
                    r.at(i, j) = r.at(i, j) + x * o.at(k, j);
                }
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw Error(ErrorClass::Input, "matrix dimension mismatch");
        Matrix r(rows_, cols_, proto_.zero_like());
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    Matrix operator-() const {
        Matrix r(rows_, cols_, proto_.zero_like());
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const { return *this + (-o); }

    bool is_zero() const {
        for (const T& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

private:
    std::size_t rows_, cols_;
    T proto_;
    std::vector<T> a_;
};

// Block diagonal A + I_s.
template <typename T>
Matrix<T> diag_sum(const Matrix<T>& a, std::size_t s) {
    if (s == 0) return a;
    Matrix<T> r(a.rows() + s, a.cols() + s, a.proto().zero_like());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t k = 0; k < s; ++k) r.at(a.rows() + k, a.cols() + k) = a.proto().one_like();
    return r;
}

struct RankResultMeta {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;   // strictly increasing
    std::vector<std::size_t> pivot_rows;   // original row indices, in pivot order
};

template <typename T>
struct RankResult : RankResultMeta {
    std::optional<Matrix<T>> echelon;  // row echelon witness, unit pivots
};

namespace detail {

template <typename T>
int pivot_measure(const T& x) {
    if constexpr (requires { x.degree_measure(); })
        return x.degree_measure();
    else
        return 0;
}

// Row echelon form by left row operations (multipliers act on the left of the
// pivot row). Among the nonzero candidates of a column the entry of minimal
// degree measure wins, ties broken by row index; this is deterministic and
// limits coefficient growth.
template <typename T>
RankResult<T> echelonize(Matrix<T> m, bool want_witness) {
    RankResult<T> res;
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> origin(rows);
    for (std::size_t i = 0; i < rows; ++i) origin[i] = i;

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        int best_measure = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (m.at(i, c).is_zero()) continue;
            int meas = pivot_measure(m.at(i, c));
            if (best == rows || meas < best_measure) {
                best = i;
                best_measure = meas;
            }
        }
        if (best == rows) continue;
        if (best != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(best, j), m.at(r, j));
            std::swap(origin[best], origin[r]);
        }
        // normalize pivot row to a unit pivot: row <- pivot^{-1} * row
        T pinv = m.at(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j)
            if (!m.at(r, j).is_zero() || j == c) m.at(r, j) = pinv * m.at(r, j);
        // eliminate below: row_i <- row_i - a_ic * row_r
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m.at(i, c).is_zero()) continue;
            T mult = m.at(i, c);
            m.at(i, c) = m.proto().zero_like();
            for (std::size_t j = c + 1; j < cols; ++j) {
                if (m.at(r, j).is_zero()) continue;
                m.at(i, j) = m.at(i, j) - mult * m.at(r, j);
            }
        }
        res.pivot_cols.push_back(c);
        res.pivot_rows.push_back(origin[r]);
        ++r;
    }
    res.rank = r;
    if (want_witness) res.echelon = std::move(m);
    return res;
}

}  // namespace detail

template <typename T>
RankResult<T> rank_over_skewfield(const Matrix<T>& a, bool want_witness = false) {
    return detail::echelonize(a, want_witness);
}

// Inverse of a square full-rank matrix via Gauss-Jordan with left row
// operations on [A | I]; the result U satisfies U*A = A*U = I (verified by
// re-multiplication in the tests).
template <typename T>
Matrix<T> invert_matrix(const Matrix<T>& a) {
    if (a.rows() != a.cols()) throw Error(ErrorClass::Input, "invert_matrix: matrix not square");
    std::size_t n = a.rows();
    Matrix<T> work = a;
    Matrix<T> inv = Matrix<T>::identity(n, a.proto().is_zero() ? a.proto().one_like() : a.proto());

    for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = n;
        int best_measure = 0;
        for (std::size_t i = c; i < n; ++i) {
            if (work.at(i, c).is_zero()) continue;
            int meas = detail::pivot_measure(work.at(i, c));
            if (best == n || meas < best_measure) {
                best = i;
                best_measure = meas;
            }
        }
        if (best == n) throw SingularMatrixError();
        if (best != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work.at(best, j), work.at(c, j));
                std::swap(inv.at(best, j), inv.at(c, j));
            }
        T pinv = work.at(c, c).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            work.at(c, j) = pinv * work.at(c, j);
            inv.at(c, j) = pinv * inv.at(c, j);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || work.at(i, c).is_zero()) continue;
            T mult = work.at(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                if (!work.at(c, j).is_zero()) work.at(i, j) = work.at(i, j) - mult * work.at(c, j);
                if (!inv.at(c, j).is_zero()) inv.at(i, j) = inv.at(i, j) - mult * inv.at(c, j);
            }
        }
    }
    return inv;
}

// Basis of the right kernel {v : A v = 0} as matrix columns. Columns are
// scaled so their first nonzero entry is 1; there are cols - rank of them.
template <typename T>
Matrix<T> kernel_basis(const Matrix<T>& a) {
    auto res = rank_over_skewfield(a, true);
    const Matrix<T>& e = *res.echelon;
    std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : res.pivot_cols) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    Matrix<T> k(n, free_cols.size(), a.proto().zero_like());
    for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
        std::size_t f = free_cols[idx];
        std::vector<T> v(n, a.proto().zero_like());
        v[f] = a.proto().one_like();
        // pivots are unit, so back-substitution reads straight off the rows
        for (std::size_t pi = res.pivot_cols.size(); pi-- > 0;) {
            std::size_t pc = res.pivot_cols[pi];
            T acc = a.proto().zero_like();
            for (std::size_t j = pc + 1; j < n; ++j) {
                if (e.at(pi, j).is_zero() || v[j].is_zero()) continue;
                acc = acc + e.at(pi, j) * v[j];
            }
            v[pc] = -acc;
        }
        // normalize: first nonzero entry becomes 1 (right scaling keeps A v = 0)
        for (std::size_t i = 0; i < n; ++i) {
            if (!v[i].is_zero()) {
                T s = v[i].inverse();
                for (std::size_t j = i; j < n; ++j)
                    if (!v[j].is_zero()) v[j] = v[j] * s;
                break;
            }
        }
        for (std::size_t i = 0; i < n; ++i) k.at(i, idx) = v[i];
    }
    return k;
}

}  // namespace skewlab
