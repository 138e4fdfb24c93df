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

#ifndef INTVAL_RINGS_HPP
#define INTVAL_RINGS_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "intval/error.hpp"
#include "intval/integer.hpp"

namespace intval {

/**
 * Coefficient rings. A ring is a small value object carrying its context
 * (modulus, field presentation); elements are plain values that only make
 * sense relative to a context. All arithmetic is exact and canonical:
 * residues live in [0, m), field coordinates in [0, p).
 */

struct IntegerRing {
    using elem = ZZ;

    elem zero() const { return ZZ(0); }
    elem one() const { return ZZ(1); }
    elem add(const elem& a, const elem& b) const { return a + b; }
    elem sub(const elem& a, const elem& b) const { return a - b; }
    elem neg(const elem& a) const { return -a; }
    elem mul(const elem& a, const elem& b) const { return a * b; }
    bool eq(const elem& a, const elem& b) const { return a == b; }
    bool is_zero(const elem& a) const { return a == 0; }
    elem from_int(const ZZ& z) const { return z; }
    ZZ to_int(const elem& a) const { return a; }
    std::string to_str(const elem& a) const { return a.str(); }

    bool is_field() const { return false; }
    bool is_finite() const { return false; }
    bool same(const IntegerRing&) const { return true; }
    std::string name() const { return "Z"; }
};

// Z/mZ with canonical residues. Prime moduli behave as fields.
class ModRing {
   public:
    using elem = std::uint64_t;

    explicit ModRing(std::uint64_t m) : m_(m) {
        if (m < 2) fail(ErrorCode::BadModulus, "modulus must be at least 2");
        prime_ = is_prime_u64(m);
    }

    std::uint64_t modulus() const { return m_; }

    elem zero() const { return 0; }
    elem one() const { return 1 % m_; }
    elem add(elem a, elem b) const {
        std::uint64_t r = a + b;
        if (r < a || r >= m_) r -= m_;
        return r;
    }
    elem sub(elem a, elem b) const { return a >= b ? a - b : a + (m_ - b); }
    elem neg(elem a) const { return a == 0 ? 0 : m_ - a; }
    elem mul(elem a, elem b) const { return mulmod_u64(a, b, m_); }
    bool eq(elem a, elem b) const { return a == b; }
    bool is_zero(elem a) const { return a == 0; }

    elem inv(elem a) const {
        // extended Euclid; a must be coprime to the modulus
        std::int64_t t = 0, nt = 1;
        std::uint64_t r = m_, nr = a;
        while (nr != 0) {
            std::uint64_t q = r / nr;
            std::int64_t tmp = t - static_cast<std::int64_t>(q) * nt;
            t = nt;
            nt = tmp;
            std::uint64_t rr = r - q * nr;
            r = nr;
            nr = rr;
        }
        if (r != 1) fail(ErrorCode::NonInvertible, std::to_string(a) + " not invertible mod " + std::to_string(m_));
        return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(m_)) : static_cast<std::uint64_t>(t);
    }

    elem from_int(const ZZ& z) const { return zz_mod_u64(z, m_); }
    ZZ to_int(elem a) const { return ZZ(a); }
    std::string to_str(elem a) const { return std::to_string(a); }

    bool is_field() const { return prime_; }
    bool is_finite() const { return true; }
    ZZ cardinality() const { return ZZ(m_); }
    elem element_at(std::uint64_t i) const { return i; }
    std::uint64_t index_of(elem a) const { return a; }

    bool same(const ModRing& o) const { return m_ == o.m_; }
    std::string name() const { return "Z/" + std::to_string(m_); }

   private:
    std::uint64_t m_;
    bool prime_;
};

// Element of F_q as a coordinate vector of length e over residues mod p.
struct FqElem {
    std::vector<std::uint64_t> c;
    friend bool operator==(const FqElem&, const FqElem&) = default;
};

namespace detail {

// Minimal polynomial arithmetic over F_p on raw coefficient vectors,
// used only to pick the field modulus before Poly<> exists.
inline std::vector<std::uint64_t> fp_polymod(std::vector<std::uint64_t> f, const std::vector<std::uint64_t>& g,
                                             std::uint64_t p) {
    // g monic
    while (f.size() >= g.size()) {
        std::uint64_t lead = f.back();
        if (lead != 0) {
            std::size_t shift = f.size() - g.size();
            for (std::size_t i = 0; i + 1 < g.size(); ++i) {
                std::uint64_t s = mulmod_u64(lead, g[i], p);
                std::uint64_t& t = f[shift + i];
                t = (t >= s) ? t - s : t + (p - s);
            }
        }
        f.pop_back();
        while (!f.empty() && f.back() == 0) f.pop_back();
        if (f.size() < g.size()) break;
    }
    return f;
}

inline bool fp_irreducible(const std::vector<std::uint64_t>& f, std::uint64_t p) {
    // trial division by every monic polynomial of degree 1..deg/2
    std::size_t e = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= e; ++d) {
        std::uint64_t count = checked_pow_u64(p, static_cast<unsigned>(d));
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<std::uint64_t> g(d + 1);
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = t % p;
                t /= p;
            }
            g[d] = 1;
            if (fp_polymod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/**
 * F_q presented as F_p[t]/(m(t)) for a fixed monic irreducible m of degree e.
 * The two-argument constructor picks m deterministically: the least monic
 * irreducible of degree e in the coordinate enumeration order (base-p digits
 * of a counter, lowest coefficient varying fastest).
 */
class FqCtx {
   public:
    using elem = FqElem;

    FqCtx(std::uint64_t p, unsigned e, std::uint64_t max_card = kDefaultEnumBound) : p_(p), e_(e) {
        validate(p, e, max_card);
        if (e == 1) {
            mod_ = {0, 1};  // t
        } else {
            std::uint64_t count = checked_pow_u64(p, e);
            mod_.assign(e + 1, 0);
            mod_[e] = 1;
            bool found = false;
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                std::uint64_t t = idx;
                for (unsigned i = 0; i < e; ++i) {
                    mod_[i] = t % p;
                    t /= p;
                }
                if (detail::fp_irreducible(mod_, p)) {
                    found = true;
                    break;
                }
            }
            if (!found) fail(ErrorCode::InvalidInput, "no irreducible modulus found");  // cannot happen
        }
    }

    // Explicit presentation; the modulus must be monic irreducible of degree e.
    FqCtx(std::uint64_t p, unsigned e, std::vector<std::uint64_t> modulus, std::uint64_t max_card = kDefaultEnumBound)
        : p_(p), e_(e), mod_(std::move(modulus)) {
        validate(p, e, max_card);
        if (mod_.size() != e + 1 || mod_[e] != 1) fail(ErrorCode::InvalidInput, "modulus must be monic of degree e");
        for (auto& c : mod_)
            if (c >= p) fail(ErrorCode::InvalidInput, "modulus coefficients must be canonical residues");
        if (e > 1 && !detail::fp_irreducible(mod_, p)) fail(ErrorCode::InvalidInput, "modulus is reducible");
    }

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return e_; }
    const std::vector<std::uint64_t>& modulus() const { return mod_; }

    elem zero() const { return {std::vector<std::uint64_t>(e_, 0)}; }
    elem one() const {
        auto z = zero();
        z.c[0] = 1 % p_;
        return z;
    }

    elem add(const elem& a, const elem& b) const {
        elem r = a;
        for (unsigned i = 0; i < e_; ++i) {
            r.c[i] += b.c[i];
            if (r.c[i] >= p_) r.c[i] -= p_;
        }
        return r;
    }
    elem sub(const elem& a, const elem& b) const {
        elem r = a;
        for (unsigned i = 0; i < e_; ++i) r.c[i] = r.c[i] >= b.c[i] ? r.c[i] - b.c[i] : r.c[i] + (p_ - b.c[i]);
        return r;
    }
    elem neg(const elem& a) const {
        elem r = a;
        for (unsigned i = 0; i < e_; ++i) r.c[i] = r.c[i] == 0 ? 0 : p_ - r.c[i];
        return r;
    }

    elem mul(const elem& a, const elem& b) const {
        std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
        for (unsigned i = 0; i < e_; ++i) {
            if (a.c[i] == 0) continue;
            for (unsigned j = 0; j < e_; ++j) {
                if (b.c[j] == 0) continue;
                prod[i + j] = (prod[i + j] + mulmod_u64(a.c[i], b.c[j], p_)) % p_;
            }
        }
        // reduce by the monic modulus
        for (unsigned k = 2 * e_ - 2; k >= e_; --k) {
            std::uint64_t lead = prod[k];
            if (lead != 0) {
                prod[k] = 0;
                for (unsigned i = 0; i < e_; ++i) {
                    std::uint64_t s = mulmod_u64(lead, mod_[i], p_);
                    std::uint64_t& t = prod[k - e_ + i];
                    t = (t >= s) ? t - s : t + (p_ - s);
                }
            }
            if (k == e_) break;
        }
        elem r = zero();
        for (unsigned i = 0; i < e_ && i < prod.size(); ++i) r.c[i] = prod[i];
        return r;
    }

    bool eq(const elem& a, const elem& b) const { return a.c == b.c; }
    bool is_zero(const elem& a) const {
        for (auto v : a.c)
            if (v) return false;
        return true;
    }

    elem pow(const elem& a, ZZ k) const {
        elem r = one(), b = a;
        while (k > 0) {
            if ((k & 1) != 0) r = mul(r, b);
            b = mul(b, b);
            k >>= 1;
        }
        return r;
    }

    elem inv(const elem& a) const {
        if (is_zero(a)) fail(ErrorCode::NonInvertible, "zero is not invertible");
        return pow(a, cardinality() - 2);
    }

    elem from_int(const ZZ& z) const {
        auto r = zero();
        r.c[0] = zz_mod_u64(z, p_);
        return r;
    }
    // Defined only for prime-field images; general elements have no integer preimage.
    ZZ to_int(const elem& a) const {
        for (unsigned i = 1; i < e_; ++i)
            if (a.c[i]) fail(ErrorCode::InvalidInput, "element lies outside the prime field");
        return ZZ(a.c[0]);
    }

    std::string to_str(const elem& a) const {
        std::string s;
        for (unsigned i = e_; i-- > 0;) {
            if (a.c[i] == 0) continue;
            if (!s.empty()) s += "+";
            if (i == 0) {
                s += std::to_string(a.c[i]);
            } else {
                if (a.c[i] != 1) s += std::to_string(a.c[i]);
                s += "t";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

    bool is_field() const { return true; }
    bool is_finite() const { return true; }
    ZZ cardinality() const { return zz_pow(ZZ(p_), e_); }

    elem element_at(std::uint64_t i) const {
        auto r = zero();
        for (unsigned k = 0; k < e_; ++k) {
            r.c[k] = i % p_;
            i /= p_;
        }
        return r;
    }
    std::uint64_t index_of(const elem& a) const {
        std::uint64_t idx = 0;
        for (unsigned k = e_; k-- > 0;) idx = idx * p_ + a.c[k];
        return idx;
    }

    bool same(const FqCtx& o) const { return p_ == o.p_ && e_ == o.e_ && mod_ == o.mod_; }
    std::string name() const { return "F_" + std::to_string(checked_pow_u64(p_, e_)); }

   private:
    static void validate(std::uint64_t p, unsigned e, std::uint64_t max_card) {
        if (!is_prime_u64(p)) fail(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
        if (e < 1) fail(ErrorCode::InvalidInput, "extension degree must be at least 1");
        std::uint64_t q = checked_pow_u64(p, e);
        if (q > max_card) fail(ErrorCode::DegreeTooLarge, "field with " + std::to_string(q) + " elements exceeds bound");
    }

    std::uint64_t p_;
    unsigned e_;
    std::vector<std::uint64_t> mod_;
};

inline FqCtx make_fq(std::uint64_t p, unsigned e, std::uint64_t max_card = kDefaultEnumBound) {
    return FqCtx(p, e, max_card);
}

// x^(p^k); Frobenius iterated k times, reduced by the period e.
inline FqElem frobenius_power(const FqCtx& F, const FqElem& x, std::uint64_t k) {
    FqElem r = x;
    for (std::uint64_t i = 0, n = k % F.degree(); i < n; ++i) r = F.pow(r, ZZ(F.characteristic()));
    return r;
}

template <typename R>
concept Ring = std::copyable<R> && requires(const R r, const typename R::elem& a, const typename R::elem& b,
                                            const ZZ& z) {
    typename R::elem;
    { r.zero() } -> std::convertible_to<typename R::elem>;
    { r.one() } -> std::convertible_to<typename R::elem>;
    { r.add(a, b) } -> std::convertible_to<typename R::elem>;
    { r.sub(a, b) } -> std::convertible_to<typename R::elem>;
    { r.neg(a) } -> std::convertible_to<typename R::elem>;
    { r.mul(a, b) } -> std::convertible_to<typename R::elem>;
    { r.eq(a, b) } -> std::convertible_to<bool>;
    { r.is_zero(a) } -> std::convertible_to<bool>;
    { r.from_int(z) } -> std::convertible_to<typename R::elem>;
    { r.to_str(a) } -> std::convertible_to<std::string>;
    { r.is_field() } -> std::convertible_to<bool>;
    { r.is_finite() } -> std::convertible_to<bool>;
    { r.same(r) } -> std::convertible_to<bool>;
    { r.name() } -> std::convertible_to<std::string>;
};

template <typename R>
concept FiniteRing = Ring<R> && requires(const R r, std::uint64_t i, const typename R::elem& a) {
    { r.cardinality() } -> std::convertible_to<ZZ>;
    { r.element_at(i) } -> std::convertible_to<typename R::elem>;
    { r.index_of(a) } -> std::convertible_to<std::uint64_t>;
};

template <Ring R>
void require_same_ring(const R& a, const R& b) {
    if (!a.same(b)) fail(ErrorCode::RingMismatch, "operands live in different rings");
}

// Number of elements, guarded by the enumeration cap.
template <FiniteRing R>
std::uint64_t checked_cardinality(const R& r, std::uint64_t max_enum = kDefaultEnumBound) {
    ZZ c = r.cardinality();
    if (c > max_enum)
        fail(ErrorCode::EnumerationTooLarge, r.name() + " has " + c.str() + " elements; cap is " + std::to_string(max_enum));
    return c.convert_to<std::uint64_t>();
}

// All elements, in the deterministic coordinate order.
template <FiniteRing R>
std::vector<typename R::elem> enumerate_elements(const R& r, std::uint64_t max_enum = kDefaultEnumBound) {
    std::uint64_t n = checked_cardinality(r, max_enum);
    std::vector<typename R::elem> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(r.element_at(i));
    return out;
}

}  // namespace intval

#endif
