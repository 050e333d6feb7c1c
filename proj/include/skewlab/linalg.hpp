#pragma once

#include <vector>

#include "skewlab/matrix.hpp"
#include "skewlab/ore_fraction.hpp"

namespace skewlab {

namespace detail {

// Guarded content strip: left-scale the row by the inverse of the collective
// coefficient content, kept only when it shrinks the row.
template <typename K>
void strip_row(std::vector<SkewLaurent<K>>& row) {
    Poly<K> gn;
    Poly<K> ld;
    bool any = false;
    for (const auto& e : row) {
        if (e.is_zero()) continue;
        auto c = e.left_content();
        if (!any) {
            gn = c.num();
            ld = c.den();
            any = true;
        } else {
            gn = Poly<K>::gcd(gn, c.num());
            Poly<K> g = Poly<K>::gcd(ld, c.den());
            ld = Poly<K>::divmod(ld * c.den(), g).first;
        }
    }
    if (!any) return;
    RatFunc<K> gamma(gn, ld);
    if (gamma.is_one()) return;
    auto gi = gamma.inverse();
    std::vector<SkewLaurent<K>> stripped;
    stripped.reserve(row.size());
    int before = 0, after = 0;
    for (const auto& e : row) {
        before += e.complexity();
        stripped.push_back(e.lscale(gi));
        after += stripped.back().complexity();
    }
    if (after < before) row = std::move(stripped);
}

// Fraction-free rank of a matrix with skew Laurent entries. Row operations
// row_k <- lam*row_k - mu*row_i with (lam, mu) from left_lcm(a_kj, a_ij) keep
// every entry integral; left multiplication by a nonzero element of the
// domain is invertible over the Ore field, so the rank is unchanged.
template <typename K>
RankResultMeta integral_rank(std::vector<std::vector<SkewLaurent<K>>> m) {
    RankResultMeta res;
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<std::size_t> origin(rows);
    for (std::size_t i = 0; i < rows; ++i) origin[i] = i;

    auto normalize_row = [](std::vector<SkewLaurent<K>>& row) {
        int lo = 0;
        bool any = false;
        for (const auto& e : row)
            if (!e.is_zero()) lo = any ? std::min(lo, e.lo()) : (any = true, e.lo());
        if (any && lo != 0)
            for (auto& e : row)
                if (!e.is_zero()) e = e.lshift(-lo);
        strip_row(row);
    };
    for (auto& row : m) normalize_row(row);

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        int best_measure = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            int meas = m[i][c].complexity();
            if (best == rows || meas < best_measure) {
                best = i;
                best_measure = meas;
            }
        }
        if (best == rows) continue;
        std::swap(m[best], m[r]);
        std::swap(origin[best], origin[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            auto [lam, mu, l] = left_lcm(m[i][c], m[r][c]);
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == c) {
                    m[i][j] = m[i][j].zero_like();
                    continue;
                }
                m[i][j] = lam * m[i][j] - mu * m[r][j];
            }
            normalize_row(m[i]);
        }
        res.pivot_cols.push_back(c);
        res.pivot_rows.push_back(origin[r]);
        ++r;
    }
    res.rank = r;
    return res;
}

}  // namespace detail

// Rank over the Ore division ring. Matrices whose entries are all integral
// (denominator 1) take the fraction-free path; the row echelon witness, when
// requested, comes from the generic division-based elimination.
template <typename K>
RankResult<OreFraction<K>> rank_over_skewfield(const Matrix<OreFraction<K>>& a,
                                               bool want_witness = false) {
    bool integral = true;
    for (std::size_t i = 0; i < a.rows() && integral; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a.at(i, j).is_integral()) {
                integral = false;
                break;
            }
    if (integral && !want_witness && a.rows() > 0 && a.cols() > 0) {
        std::vector<std::vector<SkewLaurent<K>>> rows;
        rows.reserve(a.rows());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            std::vector<SkewLaurent<K>> row;
            row.reserve(a.cols());
            for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a.at(i, j).num());
            rows.push_back(std::move(row));
        }
        RankResult<OreFraction<K>> res;
        static_cast<RankResultMeta&>(res) = detail::integral_rank(std::move(rows));
        return res;
    }
    return detail::echelonize(a, want_witness);
}

}  // namespace skewlab
