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

#ifndef INTVAL_ALGEBRA_HPP
#define INTVAL_ALGEBRA_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "intval/linalg.hpp"
#include "intval/matrix.hpp"
#include "intval/poly.hpp"
#include "intval/rings.hpp"

namespace intval {

/**
 * Finite-rank associative unital algebra presented by structure constants on
 * a free basis: b_i * b_j = sum_k c[i][j][k] b_k. Elements are coordinate
 * vectors. Associativity and the unit laws are checked on all basis triples
 * at construction; over the integers the unit must be primitive, so that the
 * scalars meet the algebra exactly in multiples of the unit.
 */
template <Ring R>
class StructAlgebra {
   public:
    using elem = typename R::elem;
    using vec = std::vector<elem>;

    StructAlgebra(R ring, std::size_t rank, std::vector<elem> constants, vec unit, std::string desc,
                  std::size_t matrix_dim = 0)
        : ring_(std::move(ring)),
          rank_(rank),
          c_(std::move(constants)),
          unit_(std::move(unit)),
          desc_(std::move(desc)),
          matrix_dim_(matrix_dim) {
        if (rank_ == 0) fail(ErrorCode::BadDimension, "algebra rank must be positive");
        if (c_.size() != rank_ * rank_ * rank_ || unit_.size() != rank_)
            fail(ErrorCode::InvalidInput, "structure data does not match rank");
        verify();
    }

    const R& ring() const { return ring_; }
    std::size_t rank() const { return rank_; }
    const std::string& describe() const { return desc_; }
    std::size_t matrix_dim() const { return matrix_dim_; }
    const elem& constant(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * rank_ + j) * rank_ + k]; }
    const vec& unit_vec() const { return unit_; }

    vec zero_vec() const { return vec(rank_, ring_.zero()); }
    vec basis_vec(std::size_t i) const {
        vec v = zero_vec();
        v[i] = ring_.one();
        return v;
    }

    vec add(const vec& a, const vec& b) const {
        vec r = a;
        for (std::size_t i = 0; i < rank_; ++i) r[i] = ring_.add(r[i], b[i]);
        return r;
    }
    vec sub(const vec& a, const vec& b) const {
        vec r = a;
        for (std::size_t i = 0; i < rank_; ++i) r[i] = ring_.sub(r[i], b[i]);
        return r;
    }
    vec neg(const vec& a) const {
        vec r = a;
        for (auto& x : r) x = ring_.neg(x);
        return r;
    }
    vec scale(const elem& s, const vec& a) const {
        vec r = a;
        for (auto& x : r) x = ring_.mul(s, x);
        return r;
    }

    vec mul(const vec& a, const vec& b) const {
        vec r = zero_vec();
        for (std::size_t i = 0; i < rank_; ++i) {
            if (ring_.is_zero(a[i])) continue;
            for (std::size_t j = 0; j < rank_; ++j) {
                if (ring_.is_zero(b[j])) continue;
                elem f = ring_.mul(a[i], b[j]);
                const elem* row = &c_[(i * rank_ + j) * rank_];
                for (std::size_t k = 0; k < rank_; ++k) r[k] = ring_.add(r[k], ring_.mul(f, row[k]));
            }
        }
        return r;
    }

    vec pow(const vec& a, std::uint64_t k) const {
        vec r = unit_;
        vec b = a;
        while (k) {
            if (k & 1) r = mul(r, b);
            b = mul(b, b);
            k >>= 1;
        }
        return r;
    }

    bool eq(const vec& a, const vec& b) const {
        for (std::size_t i = 0; i < rank_; ++i)
            if (!ring_.eq(a[i], b[i])) return false;
        return true;
    }
    bool is_zero_vec(const vec& a) const {
        for (const auto& x : a)
            if (!ring_.is_zero(x)) return false;
        return true;
    }

    bool is_commutative() const {
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = i + 1; j < rank_; ++j)
                for (std::size_t k = 0; k < rank_; ++k)
                    if (!ring_.eq(constant(i, j, k), constant(j, i, k))) return false;
        return true;
    }

    ZZ cardinality() const
        requires FiniteRing<R>
    {
        return zz_pow(ring_.cardinality(), static_cast<std::uint64_t>(rank_));
    }

    std::uint64_t checked_element_count(std::uint64_t max_enum = kDefaultEnumBound) const
        requires FiniteRing<R>
    {
        ZZ c = cardinality();
        if (c > max_enum)
            fail(ErrorCode::EnumerationTooLarge,
                 desc_ + " has " + c.str() + " elements; cap is " + std::to_string(max_enum));
        return c.convert_to<std::uint64_t>();
    }

    vec element_at(std::uint64_t idx) const
        requires FiniteRing<R>
    {
        std::uint64_t card = checked_cardinality(ring_);
        vec v = zero_vec();
        for (std::size_t i = 0; i < rank_; ++i) {
            v[i] = ring_.element_at(idx % card);
            idx /= card;
        }
        return v;
    }

    // Coordinates as text; matrix-unit coordinate systems print in matrix form.
    std::string elem_str(const vec& a) const {
        std::string s;
        if (matrix_dim_ > 0) {
            for (std::size_t i = 0; i < matrix_dim_; ++i) {
                if (i) s += ";";
                for (std::size_t j = 0; j < matrix_dim_; ++j) {
                    if (j) s += ",";
                    s += ring_.to_str(a[i * matrix_dim_ + j]);
                }
            }
            return s;
        }
        for (std::size_t i = 0; i < rank_; ++i) {
            if (i) s += ",";
            s += ring_.to_str(a[i]);
        }
        return s;
    }

   private:
    void verify() const {
        for (std::size_t i = 0; i < rank_; ++i) {
            vec bi = basis_vec(i);
            if (!eq(mul(unit_, bi), bi) || !eq(mul(bi, unit_), bi))
                fail(ErrorCode::InvalidInput, desc_ + ": unit vector is not a two-sided identity");
        }
        for (std::size_t i = 0; i < rank_; ++i) {
            vec bi = basis_vec(i);
            for (std::size_t j = 0; j < rank_; ++j) {
                vec bij(c_.begin() + (i * rank_ + j) * rank_, c_.begin() + (i * rank_ + j + 1) * rank_);
                for (std::size_t k = 0; k < rank_; ++k) {
                    vec bk = basis_vec(k);
                    vec bjk(c_.begin() + (j * rank_ + k) * rank_, c_.begin() + (j * rank_ + k + 1) * rank_);
                    if (!eq(mul(bij, bk), mul(bi, bjk)))
                        fail(ErrorCode::InvalidInput, desc_ + ": structure constants are not associative");
                }
            }
        }
        if constexpr (std::same_as<R, IntegerRing>) {
            ZZ g = 0;
            for (const auto& u : unit_) g = zz_gcd(g, u);
            if (g != 1)
                fail(ErrorCode::InvalidInput, desc_ + ": unit is not primitive, scalars would exceed the base ring");
        }
    }

    R ring_;
    std::size_t rank_;
    std::vector<elem> c_;
    vec unit_;
    std::string desc_;
    std::size_t matrix_dim_;
};

using ZAlgebra = StructAlgebra<IntegerRing>;

// n x n matrix algebra on the matrix-unit basis e_{ij}, row-major.
template <Ring R>
StructAlgebra<R> alg_matrix(const R& ring, std::size_t n) {
    if (n < 1) fail(ErrorCode::BadDimension, "matrix dimension must be positive");
    std::size_t r = n * n;
    std::vector<typename R::elem> c(r * r * r, ring.zero());
    auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (j == k) c[(idx(i, j) * r + idx(k, l)) * r + idx(i, l)] = ring.one();
    typename StructAlgebra<R>::vec unit(r, ring.zero());
    for (std::size_t i = 0; i < n; ++i) unit[idx(i, i)] = ring.one();
    return StructAlgebra<R>(ring, r, std::move(c), std::move(unit), "matrix:" + std::to_string(n), n);
}

// Quaternions 1, i, j, k with i^2 = j^2 = -1 and ij = k = -ji.
template <Ring R>
StructAlgebra<R> alg_quaternion(const R& ring) {
    const std::size_t r = 4;
    auto one = ring.one(), neg = ring.neg(ring.one()), zero = ring.zero();
    std::vector<typename R::elem> c(r * r * r, zero);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, const typename R::elem& v) {
        c[(i * r + j) * r + k] = v;
    };
    // basis order: 1, i, j, k
    set(0, 0, 0, one);
    set(0, 1, 1, one);
    set(0, 2, 2, one);
    set(0, 3, 3, one);
    set(1, 0, 1, one);
    set(2, 0, 2, one);
    set(3, 0, 3, one);
    set(1, 1, 0, neg);
    set(2, 2, 0, neg);
    set(3, 3, 0, neg);
    set(1, 2, 3, one);   // ij = k
    set(2, 1, 3, neg);   // ji = -k
    set(2, 3, 1, one);   // jk = i
    set(3, 2, 1, neg);   // kj = -i
    set(3, 1, 2, one);   // ki = j
    set(1, 3, 2, neg);   // ik = -j
    typename StructAlgebra<R>::vec unit = {one, zero, zero, zero};
    return StructAlgebra<R>(ring, r, std::move(c), std::move(unit), "quaternion");
}

// Z[X]/(mu) on the power basis, mu monic.
inline ZAlgebra alg_quotient_ring(const IntPoly& mu) {
    if (mu.is_zero() || !mu.is_monic()) fail(ErrorCode::NonMonic, "quotient modulus must be monic");
    std::size_t d = *mu.degree();
    if (d < 1) fail(ErrorCode::NonMonic, "quotient modulus must have degree at least 1");
    IntegerRing Z;
    // x^t mod mu for t up to 2d-2
    std::vector<IntPoly> powers;
    for (std::size_t t = 0; t <= 2 * d - 2; ++t)
        powers.push_back(monic_divmod(IntPoly::monomial(Z, t), mu).second);
    std::vector<ZZ> c(d * d * d, ZZ(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = powers[i + j].coeff(k);
    std::vector<ZZ> unit(d, ZZ(0));
    unit[0] = 1;
    return ZAlgebra(Z, d, std::move(c), std::move(unit), "quotient:" + format_poly(mu));
}

template <Ring R>
StructAlgebra<R> alg_direct_sum(const StructAlgebra<R>& A, const StructAlgebra<R>& B) {
    require_same_ring(A.ring(), B.ring());
    const R& ring = A.ring();
    std::size_t ra = A.rank(), rb = B.rank(), r = ra + rb;
    std::vector<typename R::elem> c(r * r * r, ring.zero());
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ra; ++j)
            for (std::size_t k = 0; k < ra; ++k) c[(i * r + j) * r + k] = A.constant(i, j, k);
    for (std::size_t i = 0; i < rb; ++i)
        for (std::size_t j = 0; j < rb; ++j)
            for (std::size_t k = 0; k < rb; ++k) c[((ra + i) * r + (ra + j)) * r + (ra + k)] = B.constant(i, j, k);
    typename StructAlgebra<R>::vec unit(r, ring.zero());
    for (std::size_t i = 0; i < ra; ++i) unit[i] = A.unit_vec()[i];
    for (std::size_t i = 0; i < rb; ++i) unit[ra + i] = B.unit_vec()[i];
    return StructAlgebra<R>(ring, r, std::move(c), std::move(unit), A.describe() + "+" + B.describe());
}

/**
 * Stabilizer of the coordinate subspace spanned by the first m basis vectors:
 * block upper-triangular matrices. Basis is the allowed matrix units,
 * row-major; rank is m^2 + m(n-m) + (n-m)^2.
 */
template <Ring R>
StructAlgebra<R> alg_stabilizer(const R& ring, std::size_t n, std::size_t m) {
    if (!(0 < m && m < n)) fail(ErrorCode::BadDimension, "need 0 < m < n");
    std::vector<std::pair<std::size_t, std::size_t>> units;
    std::vector<std::size_t> unit_index(n * n, SIZE_MAX);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(i >= m && j < m)) {
                unit_index[i * n + j] = units.size();
                units.emplace_back(i, j);
            }
    std::size_t r = units.size();
    std::vector<typename R::elem> c(r * r * r, ring.zero());
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            auto [i, j] = units[a];
            auto [k, l] = units[b];
            if (j != k) continue;
            std::size_t target = unit_index[i * n + l];  // always allowed: the units are closed under products
            c[(a * r + b) * r + target] = ring.one();
        }
    typename StructAlgebra<R>::vec unit(r, ring.zero());
    for (std::size_t i = 0; i < n; ++i) unit[unit_index[i * n + i]] = ring.one();
    return StructAlgebra<R>(ring, r, std::move(c), std::move(unit),
                            "stabilizer:" + std::to_string(n) + "," + std::to_string(m));
}

// Least monic irreducible of the given degree, in enumeration order.
template <FiniteRing R>
Poly<R> least_irreducible(const R& field, unsigned deg, std::uint64_t max_enum = kDefaultEnumBound) {
    if (!field.is_field()) fail(ErrorCode::NotAField, field.name() + " is not a field");
    std::uint64_t count = monic_count(field, deg, max_enum);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly<R> f = monic_at(field, deg, idx);
        bool reducible = false;
        for (unsigned d = 1; !reducible && 2 * d <= deg; ++d) {
            std::uint64_t dc = monic_count(field, d, max_enum);
            for (std::uint64_t h = 0; h < dc; ++h)
                if (monic_divmod(f, monic_at(field, d, h)).second.is_zero()) {
                    reducible = true;
                    break;
                }
        }
        if (!reducible) return f;
    }
    fail(ErrorCode::InvalidInput, "no irreducible polynomial found");  // unreachable
}

/**
 * Centralizer of an embedded degree-l field extension inside the n x n
 * matrices over a finite field: the commutant of the block-diagonal companion
 * matrix of the chosen degree-l irreducible. Isomorphic to the (n/l) x (n/l)
 * matrices over the extension field; rank n^2 / l. Any other embedding is
 * conjugate and has the same null ideal, so fixing this one keeps output
 * deterministic.
 */
// The embedded field generator: block-diagonal companion matrix of the
// chosen degree-l irreducible.
template <FiniteRing R>
Matrix<R> centralizer_field_generator(const R& field, std::size_t n, std::size_t l,
                                      std::uint64_t max_enum = kDefaultEnumBound) {
    if (!field.is_field()) fail(ErrorCode::NotAField, field.name() + " is not a field");
    if (l < 2 || !is_prime_u64(l) || n % l != 0)
        fail(ErrorCode::BadDivisor, "l must be a prime dividing n");
    Poly<R> mu = least_irreducible(field, static_cast<unsigned>(l), max_enum);
    Matrix<R> D(field, n);
    for (std::size_t b = 0; b < n / l; ++b) {
        for (std::size_t i = 0; i + 1 < l; ++i) D.at(b * l + i + 1, b * l + i) = field.one();
        for (std::size_t i = 0; i < l; ++i) D.at(b * l + i, b * l + l - 1) = field.neg(mu.coeff(i));
    }
    return D;
}

// Matrix basis of the commutant of the embedded field, by solving MD = DM.
template <FiniteRing R>
std::vector<Matrix<R>> centralizer_basis(const R& field, std::size_t n, std::size_t l,
                                         std::uint64_t max_enum = kDefaultEnumBound) {
    using elem = typename R::elem;
    Matrix<R> D = centralizer_field_generator(field, n, l, max_enum);
    std::vector<std::vector<elem>> rows;
    rows.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<elem> row(n * n, field.zero());
            for (std::size_t k = 0; k < n; ++k) {
                row[i * n + k] = field.add(row[i * n + k], D.at(k, j));
                row[k * n + j] = field.sub(row[k * n + j], D.at(i, k));
            }
            rows.push_back(std::move(row));
        }
    auto vecs = nullspace_field(field, std::move(rows), n * n);
    if (vecs.size() != n * n / l) fail(ErrorCode::InvalidInput, "centralizer has unexpected dimension");
    std::vector<Matrix<R>> basis;
    basis.reserve(vecs.size());
    for (auto& v : vecs) basis.emplace_back(field, n, std::move(v));
    return basis;
}

template <FiniteRing R>
StructAlgebra<R> alg_centralizer(const R& field, std::size_t n, std::size_t l,
                                 std::uint64_t max_enum = kDefaultEnumBound) {
    using elem = typename R::elem;
    auto basis = centralizer_basis(field, n, l, max_enum);
    std::size_t r = basis.size();
    std::vector<std::vector<elem>> basis_vecs;
    basis_vecs.reserve(r);
    for (const auto& B : basis) basis_vecs.push_back(B.entries());
    // structure constants: express basis products in the basis
    std::vector<elem> c(r * r * r, field.zero());
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            Matrix<R> prod = basis[a] * basis[b];
            auto coords = coordinates_in_basis(field, basis_vecs, prod.entries());
            if (!coords) fail(ErrorCode::InvalidInput, "centralizer is not multiplicatively closed");  // unreachable
            for (std::size_t k = 0; k < r; ++k) c[(a * r + b) * r + k] = (*coords)[k];
        }
    auto unit_coords = coordinates_in_basis(field, basis_vecs, Matrix<R>::identity(field, n).entries());
    if (!unit_coords) fail(ErrorCode::InvalidInput, "identity not in centralizer");  // unreachable
    return StructAlgebra<R>(field, r, std::move(c), std::move(*unit_coords),
                            "centralizer:" + std::to_string(n) + "," + std::to_string(l));
}

// A/dA: same basis, constants and unit reduced mod d.
inline StructAlgebra<ModRing> reduce_algebra(const ZAlgebra& A, std::uint64_t d) {
    if (d < 2) fail(ErrorCode::BadModulus, "modulus must be at least 2");
    ModRing ring(d);
    std::size_t r = A.rank();
    std::vector<std::uint64_t> c;
    c.reserve(r * r * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) c.push_back(ring.from_int(A.constant(i, j, k)));
    std::vector<std::uint64_t> unit;
    unit.reserve(r);
    for (const auto& u : A.unit_vec()) unit.push_back(ring.from_int(u));
    return StructAlgebra<ModRing>(ring, r, std::move(c), std::move(unit),
                                  A.describe() + " mod " + std::to_string(d), A.matrix_dim());
}

// Base change through the integers (constants must lie in the prime ring image).
template <Ring Src, Ring Dst>
StructAlgebra<Dst> map_algebra(const StructAlgebra<Src>& A, const Dst& target) {
    std::size_t r = A.rank();
    std::vector<typename Dst::elem> c;
    c.reserve(r * r * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) c.push_back(target.from_int(A.ring().to_int(A.constant(i, j, k))));
    typename StructAlgebra<Dst>::vec unit;
    unit.reserve(r);
    for (const auto& u : A.unit_vec()) unit.push_back(target.from_int(A.ring().to_int(u)));
    return StructAlgebra<Dst>(target, r, std::move(c), std::move(unit),
                              A.describe() + " over " + target.name(), A.matrix_dim());
}

// Horner evaluation in the algebra; scalar coefficients act through the unit.
template <Ring R>
typename StructAlgebra<R>::vec elem_eval(const Poly<R>& f, const typename StructAlgebra<R>::vec& a,
                                         const StructAlgebra<R>& A) {
    require_same_ring(f.ring(), A.ring());
    auto acc = A.zero_vec();
    for (std::size_t i = f.size(); i-- > 0;) acc = A.add(A.mul(acc, a), A.scale(f.coeff(i), A.unit_vec()));
    return acc;
}

template <Ring R>
    requires(!std::same_as<R, IntegerRing>)
typename StructAlgebra<R>::vec elem_eval(const IntPoly& f, const typename StructAlgebra<R>::vec& a,
                                         const StructAlgebra<R>& A) {
    return elem_eval(map_coeffs(f, A.ring()), a, A);
}

// Monic least-degree annihilator of an element, over a field coefficient ring.
template <Ring R>
Poly<R> min_poly_elem(const typename StructAlgebra<R>::vec& a, const StructAlgebra<R>& A) {
    const R& ring = A.ring();
    DependencyFinder<R> finder(ring);
    auto power = A.unit_vec();
    while (true) {
        auto dep = finder.insert(power);
        if (dep) {
            std::vector<typename R::elem> cs(dep->size() + 1, ring.zero());
            for (std::size_t j = 0; j < dep->size(); ++j) cs[j] = ring.neg((*dep)[j]);
            cs[dep->size()] = ring.one();
            return Poly<R>(ring, std::move(cs));
        }
        power = A.mul(power, a);
    }
}

}  // namespace intval

#endif
