/*
   Copyright 2026 The intval authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef INTVAL_LINALG_HPP
#define INTVAL_LINALG_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "intval/rings.hpp"

namespace intval {

/**
 * Incremental echelon basis over a field that remembers how each stored row
 * was formed from the inserted vectors. Feeding it v_0, v_1, ... yields, at
 * the first dependent vector v_k, coefficients a_0..a_(k-1) with
 * v_k = sum a_j v_j. This is the engine behind minimal polynomials and
 * coordinates-in-a-basis.
 */
template <Ring R>
class DependencyFinder {
   public:
    using elem = typename R::elem;

    explicit DependencyFinder(R ring) : ring_(std::move(ring)) {
        if (!ring_.is_field()) fail(ErrorCode::NotAField, ring_.name() + " is not a field");
    }

    std::size_t inserted() const { return inserted_; }

    std::optional<std::vector<elem>> insert(std::vector<elem> v) {
        std::vector<elem> comb(inserted_ + 1, ring_.zero());
        comb[inserted_] = ring_.one();
        for (const Row& row : rows_) {
            const elem& factor = v[row.pivot];
            if (ring_.is_zero(factor)) continue;
            elem f = factor;  // row.v[pivot] == 1
            axpy_neg(v, f, row.v);
            axpy_neg(comb, f, row.comb);
        }
        std::size_t pivot = 0;
        while (pivot < v.size() && ring_.is_zero(v[pivot])) ++pivot;
        if (pivot == v.size()) {
            // v_k = -sum_{j<k} comb_j v_j
            std::vector<elem> alpha(inserted_, ring_.zero());
            for (std::size_t j = 0; j < inserted_; ++j) alpha[j] = ring_.neg(comb[j]);
            ++inserted_;
            return alpha;
        }
        elem inv = ring_.inv(v[pivot]);
        for (auto& x : v) x = ring_.mul(x, inv);
        for (auto& x : comb) x = ring_.mul(x, inv);
        rows_.push_back(Row{std::move(v), std::move(comb), pivot});
        ++inserted_;
        return std::nullopt;
    }

   private:
    struct Row {
        std::vector<elem> v;
        std::vector<elem> comb;
        std::size_t pivot;
    };

    void axpy_neg(std::vector<elem>& dst, const elem& f, const std::vector<elem>& src) const {
        for (std::size_t i = 0; i < src.size() && i < dst.size(); ++i)
            dst[i] = ring_.sub(dst[i], ring_.mul(f, src[i]));
    }

    R ring_;
    std::vector<Row> rows_;
    std::size_t inserted_ = 0;
};

// Coordinates of v in a given independent spanning set, if it lies in the span.
template <Ring R>
std::optional<std::vector<typename R::elem>> coordinates_in_basis(
    const R& ring, const std::vector<std::vector<typename R::elem>>& basis,
    const std::vector<typename R::elem>& v) {
    DependencyFinder<R> finder(ring);
    for (const auto& b : basis)
        if (finder.insert(b)) fail(ErrorCode::InvalidInput, "basis vectors are dependent");
    return finder.insert(v);
}

// Basis of {x : A x = 0} over a field, by reduced row echelon form.
template <Ring R>
std::vector<std::vector<typename R::elem>> nullspace_field(const R& ring,
                                                           std::vector<std::vector<typename R::elem>> rows,
                                                           std::size_t ncols) {
    using elem = typename R::elem;
    if (!ring.is_field()) fail(ErrorCode::NotAField, ring.name() + " is not a field");
    std::vector<std::size_t> pivot_of_row;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && ring.is_zero(rows[sel][col])) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        elem inv = ring.inv(rows[rank][col]);
        for (auto& x : rows[rank]) x = ring.mul(x, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || ring.is_zero(rows[i][col])) continue;
            elem f = rows[i][col];
            for (std::size_t j = 0; j < ncols; ++j) rows[i][j] = ring.sub(rows[i][j], ring.mul(f, rows[rank][j]));
        }
        pivot_of_row.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivot_of_row) is_pivot[c] = true;
    std::vector<std::vector<elem>> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<elem> x(ncols, ring.zero());
        x[free] = ring.one();
        for (std::size_t r = 0; r < rank; ++r) x[pivot_of_row[r]] = ring.neg(rows[r][free]);
        basis.push_back(std::move(x));
    }
    return basis;
}

/**
 * Linear algebra over Z/p^e. Every element is a unit times a power of p;
 * rows are kept in echelon form with pivots normalized to exactly p^v, so
 * eliminations are exact divisions.
 */
namespace modpe {

inline unsigned valuation(std::uint64_t x, std::uint64_t p, unsigned e) {
    if (x == 0) return e;
    unsigned v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// Generating set, in echelon form, of the row module spanned by inserted rows.
class RowEchelon {
   public:
    RowEchelon(std::size_t ncols, std::uint64_t p, unsigned e)
        : ncols_(ncols), p_(p), e_(e), ring_(checked_pow_u64(p, e)) {}

    const ModRing& ring() const { return ring_; }

    void insert(std::vector<std::uint64_t> v) {
        for (std::size_t col = 0; col < ncols_;) {
            if (v[col] == 0) {
                ++col;
                continue;
            }
            unsigned val = valuation(v[col], p_, e_);
            auto it = pivot_row_.find(col);
            if (it == pivot_row_.end()) {
                normalize(v, col, val);
                pivot_row_[col] = rows_.size();
                rows_.push_back(Row{std::move(v), col, val});
                return;
            }
            Row& row = rows_[it->second];
            if (row.val > val) {
                normalize(v, col, val);
                std::swap(v, row.v);
                std::swap(val, row.val);
            }
            // v[col] is a multiple of p^row.val and row pivot is exactly p^row.val
            std::uint64_t q = v[col] / checked_pow_u64(p_, row.val);
            for (std::size_t j = col; j < ncols_; ++j) v[j] = ring_.sub(v[j], ring_.mul(q, row.v[j]));
        }
    }

    std::vector<std::vector<std::uint64_t>> rows() const {
        std::vector<std::vector<std::uint64_t>> out;
        out.reserve(rows_.size());
        for (const auto& r : rows_) out.push_back(r.v);
        return out;
    }

   private:
    struct Row {
        std::vector<std::uint64_t> v;
        std::size_t pivot;
        unsigned val;
    };

    void normalize(std::vector<std::uint64_t>& v, std::size_t col, unsigned val) {
        std::uint64_t unit = v[col] / checked_pow_u64(p_, val);
        std::uint64_t inv = ring_.inv(unit);
        for (auto& x : v) x = ring_.mul(x, inv);
    }

    std::size_t ncols_;
    std::uint64_t p_;
    unsigned e_;
    ModRing ring_;
    std::map<std::size_t, std::size_t> pivot_row_;
    std::vector<Row> rows_;
};

/**
 * Generators of {x in (Z/p^e)^n : H x = 0}, via a Smith-style diagonalization
 * D = U H V with column operations accumulated in V. Kernel(D) is read off the
 * diagonal valuations a_i (y_i ranges over p^(e-a_i) Z/p^e) and mapped back
 * through V.
 */
inline std::vector<std::vector<std::uint64_t>> kernel(std::vector<std::vector<std::uint64_t>> H, std::size_t ncols,
                                                      std::uint64_t p, unsigned e) {
    const std::uint64_t pe = checked_pow_u64(p, e);
    ModRing ring(pe);
    std::size_t m = H.size();
    // V starts as the identity; columns are tracked as V[r][c].
    std::vector<std::vector<std::uint64_t>> V(ncols, std::vector<std::uint64_t>(ncols, 0));
    for (std::size_t i = 0; i < ncols; ++i) V[i][i] = 1;

    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < m; ++r) std::swap(H[r][a], H[r][b]);
        for (std::size_t r = 0; r < ncols; ++r) std::swap(V[r][a], V[r][b]);
    };
    auto add_col = [&](std::size_t dst, std::uint64_t factor, std::size_t src) {
        // col_dst -= factor * col_src
        for (std::size_t r = 0; r < m; ++r) H[r][dst] = ring.sub(H[r][dst], ring.mul(factor, H[r][src]));
        for (std::size_t r = 0; r < ncols; ++r) V[r][dst] = ring.sub(V[r][dst], ring.mul(factor, V[r][src]));
    };

    std::vector<unsigned> diag_val;
    std::size_t s = 0;
    while (s < m && s < ncols) {
        std::size_t bi = s, bj = s;
        unsigned best = e;
        for (std::size_t i = s; i < m; ++i)
            for (std::size_t j = s; j < ncols; ++j) {
                unsigned v = valuation(H[i][j], p, e);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (best == e) break;  // submatrix is zero
        std::swap(H[s], H[bi]);
        swap_cols(s, bj);
        const std::uint64_t pa = checked_pow_u64(p, best);
        std::uint64_t unit_inv = ring.inv(H[s][s] / pa);
        for (std::size_t j = s; j < ncols; ++j) H[s][j] = ring.mul(H[s][j], unit_inv);
        for (std::size_t i = s + 1; i < m; ++i) {
            if (H[i][s] == 0) continue;
            std::uint64_t q = H[i][s] / pa;
            for (std::size_t j = s; j < ncols; ++j) H[i][j] = ring.sub(H[i][j], ring.mul(q, H[s][j]));
        }
        for (std::size_t j = s + 1; j < ncols; ++j) {
            if (H[s][j] == 0) continue;
            add_col(j, H[s][j] / pa, s);
        }
        diag_val.push_back(best);
        ++s;
    }

    std::vector<std::vector<std::uint64_t>> gens;
    for (std::size_t i = 0; i < diag_val.size(); ++i) {
        if (diag_val[i] == 0) continue;
        std::uint64_t scale = checked_pow_u64(p, e - diag_val[i]);
        std::vector<std::uint64_t> x(ncols);
        for (std::size_t r = 0; r < ncols; ++r) x[r] = ring.mul(scale, V[r][i]);
        gens.push_back(std::move(x));
    }
    for (std::size_t j = diag_val.size(); j < ncols; ++j) {
        std::vector<std::uint64_t> x(ncols);
        for (std::size_t r = 0; r < ncols; ++r) x[r] = V[r][j];
        gens.push_back(std::move(x));
    }
    return gens;
}

}  // namespace modpe

}  // namespace intval

#endif
