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

#ifndef INTVAL_MATRIX_HPP
#define INTVAL_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "intval/linalg.hpp"
#include "intval/poly.hpp"
#include "intval/rings.hpp"

namespace intval {

template <Ring R>
class Matrix {
   public:
    using elem = typename R::elem;

    Matrix(R ring, std::size_t n) : ring_(std::move(ring)), n_(n), a_(n * n, ring_.zero()) {
        if (n == 0) fail(ErrorCode::BadDimension, "matrix dimension must be positive");
    }
    Matrix(R ring, std::size_t n, std::vector<elem> entries) : ring_(std::move(ring)), n_(n), a_(std::move(entries)) {
        if (n == 0 || a_.size() != n * n) fail(ErrorCode::BadDimension, "entry count does not match dimension");
    }

    static Matrix identity(R ring, std::size_t n) {
        Matrix m(ring, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.ring_.one();
        return m;
    }

    const R& ring() const { return ring_; }
    std::size_t dim() const { return n_; }
    elem& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const elem& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    const std::vector<elem>& entries() const { return a_; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!ring_.is_zero(x)) return false;
        return true;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        if (!x.ring_.same(y.ring_) || x.n_ != y.n_) return false;
        for (std::size_t i = 0; i < x.a_.size(); ++i)
            if (!x.ring_.eq(x.a_[i], y.a_[i])) return false;
        return true;
    }

    Matrix operator+(const Matrix& o) const {
        check(o);
        Matrix r(ring_, n_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.add(a_[i], o.a_[i]);
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check(o);
        Matrix r(ring_, n_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.sub(a_[i], o.a_[i]);
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        check(o);
        Matrix r(ring_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const elem& f = at(i, k);
                if (ring_.is_zero(f)) continue;
                for (std::size_t j = 0; j < n_; ++j) r.at(i, j) = ring_.add(r.at(i, j), ring_.mul(f, o.at(k, j)));
            }
        return r;
    }
    Matrix scale(const elem& s) const {
        Matrix r = *this;
        for (auto& x : r.a_) x = ring_.mul(x, s);
        return r;
    }

    Matrix pow(std::uint64_t k) const {
        Matrix r = identity(ring_, n_);
        Matrix b = *this;
        while (k) {
            if (k & 1) r = r * b;
            b = b * b;
            k >>= 1;
        }
        return r;
    }

   private:
    void check(const Matrix& o) const {
        require_same_ring(ring_, o.ring_);
        if (n_ != o.n_) fail(ErrorCode::BadDimension, "matrix dimensions differ");
    }

    R ring_;
    std::size_t n_;
    std::vector<elem> a_;
};

// Horner evaluation of a polynomial at a matrix; scalars act through the identity.
template <Ring R>
Matrix<R> mat_eval(const Poly<R>& f, const Matrix<R>& M) {
    require_same_ring(f.ring(), M.ring());
    Matrix<R> acc(M.ring(), M.dim());
    const Matrix<R> id = Matrix<R>::identity(M.ring(), M.dim());
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * M + id.scale(f.coeff(i));
    return acc;
}

// Integer coefficients map into any coefficient ring.
template <Ring R>
    requires(!std::same_as<R, IntegerRing>)
Matrix<R> mat_eval(const IntPoly& f, const Matrix<R>& M) {
    return mat_eval(map_coeffs(f, M.ring()), M);
}

/**
 * Characteristic polynomial by the Berkowitz iteration: entirely
 * division-free, so it is valid over Z/m and any other commutative ring.
 * Cayley-Hamilton holds for the result, and the sign convention is
 * det(XI - M) (monic).
 */
template <Ring R>
Poly<R> char_poly(const Matrix<R>& M) {
    const R& ring = M.ring();
    const std::size_t n = M.dim();
    using elem = typename R::elem;
    // descending coefficients of the char poly of the leading r x r block
    std::vector<elem> p = {ring.one(), ring.neg(M.at(0, 0))};
    for (std::size_t r = 2; r <= n; ++r) {
        // Toeplitz column: 1, -a_rr, -(row * col), -(row * A * col), ...
        std::vector<elem> t(r + 1, ring.zero());
        t[0] = ring.one();
        t[1] = ring.neg(M.at(r - 1, r - 1));
        std::vector<elem> w(r - 1);
        for (std::size_t i = 0; i < r - 1; ++i) w[i] = M.at(i, r - 1);
        for (std::size_t i = 2; i <= r; ++i) {
            elem dot = ring.zero();
            for (std::size_t j = 0; j < r - 1; ++j) dot = ring.add(dot, ring.mul(M.at(r - 1, j), w[j]));
            t[i] = ring.neg(dot);
            if (i == r) break;
            std::vector<elem> w2(r - 1, ring.zero());
            for (std::size_t a = 0; a < r - 1; ++a)
                for (std::size_t b = 0; b < r - 1; ++b) w2[a] = ring.add(w2[a], ring.mul(M.at(a, b), w[b]));
            w = std::move(w2);
        }
        std::vector<elem> np(r + 1, ring.zero());
        for (std::size_t i = 0; i <= r; ++i)
            for (std::size_t j = 0; j < p.size() && j <= i; ++j) np[i] = ring.add(np[i], ring.mul(t[i - j], p[j]));
        p = std::move(np);
    }
    std::vector<elem> ascending(p.rbegin(), p.rend());
    return Poly<R>(ring, std::move(ascending));
}

/**
 * Minimal polynomial over a field: the least-degree monic annihilator, found
 * as the first linear dependency among I, M, M^2, ...
 */
template <Ring R>
Poly<R> min_poly_field(const Matrix<R>& M) {
    const R& ring = M.ring();
    DependencyFinder<R> finder(ring);
    Matrix<R> power = Matrix<R>::identity(ring, M.dim());
    while (true) {
        auto dep = finder.insert(power.entries());
        if (dep) {
            std::vector<typename R::elem> cs(dep->size() + 1, ring.zero());
            for (std::size_t j = 0; j < dep->size(); ++j) cs[j] = ring.neg((*dep)[j]);
            cs[dep->size()] = ring.one();
            return Poly<R>(ring, std::move(cs));
        }
        power = power * M;
    }
}

template <FiniteRing R>
std::uint64_t matrix_count(const R& ring, std::size_t n, std::uint64_t max_enum = kDefaultEnumBound) {
    ZZ count = zz_pow(ring.cardinality(), static_cast<std::uint64_t>(n * n));
    if (count > max_enum)
        fail(ErrorCode::EnumerationTooLarge, count.str() + " matrices exceed cap " + std::to_string(max_enum));
    return count.convert_to<std::uint64_t>();
}

// Deterministic exhaustive order: entries are base-|R| digits of idx, row-major.
template <FiniteRing R>
Matrix<R> matrix_at(const R& ring, std::size_t n, std::uint64_t idx) {
    std::uint64_t card = checked_cardinality(ring);
    std::vector<typename R::elem> entries(n * n, ring.zero());
    for (std::size_t t = 0; t < n * n; ++t) {
        entries[t] = ring.element_at(idx % card);
        idx /= card;
    }
    return Matrix<R>(ring, n, std::move(entries));
}

template <FiniteRing R>
std::vector<Matrix<R>> enumerate_matrices(const R& ring, std::size_t n, std::uint64_t max_enum = kDefaultEnumBound) {
    std::uint64_t count = matrix_count(ring, n, max_enum);
    std::vector<Matrix<R>> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(matrix_at(ring, n, i));
    return out;
}

/**
 * Least k >= 1 with M^k = 0, if one exists below the search bound
 * n * nu_max. Entries lying in a nilpotent ideal of nilpotency nu give
 * index at most min(n * nu, the bound); nu_max defaults to the modulus.
 */
inline std::optional<unsigned> nilpotency_index(const Matrix<ModRing>& M,
                                                std::optional<std::uint64_t> nu_max = std::nullopt) {
    std::uint64_t nu = nu_max.value_or(M.ring().modulus());
    std::uint64_t bound = static_cast<std::uint64_t>(M.dim()) * nu;
    Matrix<ModRing> power = M;
    for (std::uint64_t k = 1; k <= bound; ++k) {
        if (power.is_zero()) return static_cast<unsigned>(k);
        power = power * M;
    }
    return std::nullopt;
}

// Row-major text form "a,b;c,d".
template <Ring R>
std::string format_matrix(const Matrix<R>& M) {
    std::string s;
    for (std::size_t i = 0; i < M.dim(); ++i) {
        if (i) s += ";";
        for (std::size_t j = 0; j < M.dim(); ++j) {
            if (j) s += ",";
            s += M.ring().to_str(M.at(i, j));
        }
    }
    return s;
}

inline std::vector<std::vector<ZZ>> parse_int_matrix_rows(const std::string& text) {
    std::vector<std::vector<ZZ>> rows(1);
    std::size_t i = 0;
    while (true) {
        rows.back().push_back(detail::parse_zz(text, i));
        detail::skip_ws(text, i);
        if (i == text.size()) break;
        if (text[i] == ',') {
            ++i;
        } else if (text[i] == ';') {
            ++i;
            rows.emplace_back();
        } else {
            fail(ErrorCode::InvalidInput, "expected ',' or ';' in matrix");
        }
    }
    for (const auto& r : rows)
        if (r.size() != rows.size()) fail(ErrorCode::BadDimension, "matrix text is not square");
    return rows;
}

template <Ring R>
Matrix<R> parse_matrix(const std::string& text, const R& ring) {
    auto rows = parse_int_matrix_rows(text);
    std::size_t n = rows.size();
    Matrix<R> M(ring, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) M.at(i, j) = ring.from_int(rows[i][j]);
    return M;
}

}  // namespace intval

#endif
