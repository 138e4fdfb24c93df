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

#ifndef INTVAL_POLY_HPP
#define INTVAL_POLY_HPP

#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "intval/rings.hpp"

namespace intval {

/**
 * Univariate polynomial over a runtime ring context. Coefficients are stored
 * ascending with no trailing zero; the zero polynomial has an empty
 * coefficient vector and no degree (degree() is disengaged rather than a
 * sentinel integer).
 */
template <Ring R>
class Poly {
   public:
    using elem = typename R::elem;

    explicit Poly(R ring) : ring_(std::move(ring)) {}
    Poly(R ring, std::vector<elem> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) { prune(); }

    static Poly constant(R ring, const elem& v) { return Poly(ring, {v}); }
    static Poly from_ints(R ring, const std::vector<ZZ>& zs) {
        std::vector<elem> cs;
        cs.reserve(zs.size());
        for (const auto& z : zs) cs.push_back(ring.from_int(z));
        return Poly(std::move(ring), std::move(cs));
    }
    // X^k
    static Poly monomial(R ring, std::size_t k) {
        std::vector<elem> cs(k + 1, ring.zero());
        cs[k] = ring.one();
        return Poly(std::move(ring), std::move(cs));
    }

    const R& ring() const { return ring_; }
    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }
    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    std::size_t degree_or_zero() const { return c_.empty() ? 0 : c_.size() - 1; }

    elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ring_.zero(); }
    const std::vector<elem>& coeffs() const { return c_; }
    const elem& leading() const {
        if (c_.empty()) fail(ErrorCode::InvalidInput, "zero polynomial has no leading coefficient");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && ring_.eq(c_.back(), ring_.one()); }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (!a.ring_.same(b.ring_) || a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!a.ring_.eq(a.c_[i], b.c_[i])) return false;
        return true;
    }

    Poly operator+(const Poly& o) const {
        require_same_ring(ring_, o.ring_);
        std::vector<elem> r(std::max(c_.size(), o.c_.size()), ring_.zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = ring_.add(coeff(i), o.coeff(i));
        return Poly(ring_, std::move(r));
    }
    Poly operator-(const Poly& o) const {
        require_same_ring(ring_, o.ring_);
        std::vector<elem> r(std::max(c_.size(), o.c_.size()), ring_.zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = ring_.sub(coeff(i), o.coeff(i));
        return Poly(ring_, std::move(r));
    }
    Poly operator-() const {
        std::vector<elem> r = c_;
        for (auto& v : r) v = ring_.neg(v);
        return Poly(ring_, std::move(r));
    }
    Poly operator*(const Poly& o) const {
        require_same_ring(ring_, o.ring_);
        if (is_zero() || o.is_zero()) return Poly(ring_);
        std::vector<elem> r(c_.size() + o.c_.size() - 1, ring_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (ring_.is_zero(c_[i])) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = ring_.add(r[i + j], ring_.mul(c_[i], o.c_[j]));
        }
        return Poly(ring_, std::move(r));
    }
    Poly scale(const elem& s) const {
        std::vector<elem> r = c_;
        for (auto& v : r) v = ring_.mul(v, s);
        return Poly(ring_, std::move(r));
    }
    // Multiply by X^k.
    Poly shift(std::size_t k) const {
        if (is_zero()) return *this;
        std::vector<elem> r(c_.size() + k, ring_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return Poly(ring_, std::move(r));
    }

    Poly pow(std::uint64_t k) const {
        Poly r = Poly::constant(ring_, ring_.one());
        Poly b = *this;
        while (k) {
            if (k & 1) r = r * b;
            b = b * b;
            k >>= 1;
        }
        return r;
    }

    elem eval(const elem& x) const {
        elem acc = ring_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = ring_.add(ring_.mul(acc, x), c_[i]);
        return acc;
    }

    // f(g(X))
    Poly compose(const Poly& g) const {
        require_same_ring(ring_, g.ring_);
        Poly acc(ring_);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + Poly::constant(ring_, c_[i]);
        return acc;
    }

   private:
    void prune() {
        while (!c_.empty() && ring_.is_zero(c_.back())) c_.pop_back();
    }

    R ring_;
    std::vector<elem> c_;
};

using IntPoly = Poly<IntegerRing>;

/**
 * Quotient with a monic divisor. Exact over every coefficient ring: no
 * division by a leading coefficient ever happens.
 */
template <Ring R>
std::pair<Poly<R>, Poly<R>> monic_divmod(const Poly<R>& f, const Poly<R>& g) {
    require_same_ring(f.ring(), g.ring());
    const R& ring = f.ring();
    if (!g.is_monic()) fail(ErrorCode::NonMonicDivisor, "divisor must be monic");
    std::size_t dg = *g.degree();
    std::vector<typename R::elem> rem(f.coeffs());
    std::vector<typename R::elem> quo;
    if (f.size() >= g.size()) quo.assign(f.size() - dg, ring.zero());
    for (std::size_t k = rem.size(); k-- > 0;) {
        if (k < dg) break;
        typename R::elem lead = rem[k];
        if (ring.is_zero(lead)) continue;
        quo[k - dg] = lead;
        for (std::size_t i = 0; i <= dg; ++i)
            rem[k - dg + i] = ring.sub(rem[k - dg + i], ring.mul(lead, g.coeff(i)));
    }
    return {Poly<R>(ring, std::move(quo)), Poly<R>(ring, std::move(rem))};
}

template <Ring R>
Poly<R> make_monic(const Poly<R>& f) {
    if (f.is_zero()) return f;
    const R& ring = f.ring();
    if (!ring.is_field()) fail(ErrorCode::NotAField, "cannot normalize over " + ring.name());
    if (f.is_monic()) return f;
    return f.scale(ring.inv(f.leading()));
}

// General long division over a field (divisor need not be monic).
template <Ring R>
std::pair<Poly<R>, Poly<R>> field_divmod(const Poly<R>& f, const Poly<R>& g) {
    const R& ring = f.ring();
    if (!ring.is_field()) fail(ErrorCode::NotAField, ring.name() + " is not a field");
    if (g.is_zero()) fail(ErrorCode::InvalidInput, "division by zero polynomial");
    typename R::elem lead_inv = ring.inv(g.leading());
    Poly<R> gm = g.scale(lead_inv);
    auto [q, r] = monic_divmod(f, gm);
    return {q.scale(lead_inv), r};
}

// Monic gcd and lcm over a field; gcd * lcm = f * g up to a unit.
template <Ring R>
std::pair<Poly<R>, Poly<R>> gcd_lcm(const Poly<R>& f, const Poly<R>& g) {
    require_same_ring(f.ring(), g.ring());
    const R& ring = f.ring();
    if (!ring.is_field()) fail(ErrorCode::NotAField, ring.name() + " is not a field");
    if (f.is_zero() && g.is_zero()) fail(ErrorCode::InvalidInput, "gcd(0, 0) is undefined");
    Poly<R> a = f, b = g;
    while (!b.is_zero()) {
        auto [q, r] = field_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    Poly<R> d = make_monic(a);
    if (f.is_zero() || g.is_zero()) return {d, Poly<R>(ring)};
    Poly<R> l = make_monic(field_divmod(f * g, d).first);
    return {d, l};
}

template <Ring R>
Poly<R> poly_gcd(const Poly<R>& f, const Poly<R>& g) {
    if (f.is_zero() && g.is_zero()) return f;
    return gcd_lcm(f, g).first;
}

template <Ring R>
Poly<R> poly_lcm(const Poly<R>& f, const Poly<R>& g) {
    return gcd_lcm(f, g).second;
}

template <Ring Src, Ring Dst>
Poly<Dst> map_coeffs(const Poly<Src>& f, const Dst& target) {
    std::vector<typename Dst::elem> cs;
    cs.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) cs.push_back(target.from_int(f.ring().to_int(f.coeff(i))));
    return Poly<Dst>(target, std::move(cs));
}

// Coefficientwise residue of an integer polynomial.
inline Poly<ModRing> reduce_mod(const IntPoly& g, std::uint64_t m) {
    if (m < 2) fail(ErrorCode::BadModulus, "modulus must be at least 2");
    return map_coeffs(g, ModRing(m));
}

// Integer pullback with coefficients in [0, m).
inline IntPoly lift_canonical(const Poly<ModRing>& f) { return map_coeffs(f, IntegerRing{}); }

// Integer pullback with symmetric residues: r > m/2 lifts to r - m.
inline IntPoly lift_balanced(const Poly<ModRing>& f) {
    std::uint64_t m = f.ring().modulus();
    std::vector<ZZ> cs;
    cs.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::uint64_t r = f.coeff(i);
        cs.push_back(2 * r > m ? ZZ(r) - ZZ(m) : ZZ(r));
    }
    return IntPoly(IntegerRing{}, std::move(cs));
}

inline ZZ content(const IntPoly& f) {
    ZZ c = 0;
    for (std::size_t i = 0; i < f.size(); ++i) c = zz_gcd(c, f.coeff(i));
    return c;
}

/**
 * phi(q, n) = (X^(q^n) - X)(X^(q^(n-1)) - X) ... (X^q - X), expanded over the
 * integers. Monic of degree q + q^2 + ... + q^n; for a field of size q it
 * annihilates every n x n matrix and equals the lcm of all monic degree-n
 * polynomials over that field.
 */
inline IntPoly phi(std::uint64_t q, unsigned n, std::uint64_t degree_bound = kDefaultDegreeBound) {
    auto pp = prime_power_u64(q);
    if (!pp) fail(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
    if (n < 1) fail(ErrorCode::InvalidInput, "n must be at least 1");
    ZZ deg = 0, qi = 1;
    for (unsigned i = 1; i <= n; ++i) {
        qi *= q;
        deg += qi;
    }
    if (deg > degree_bound)
        fail(ErrorCode::DegreeTooLarge, "phi degree " + deg.str() + " exceeds bound " + std::to_string(degree_bound));
    IntegerRing Z;
    IntPoly acc = IntPoly::constant(Z, ZZ(1));
    std::uint64_t power = 1;
    for (unsigned i = 1; i <= n; ++i) {
        power = checked_pow_u64(q, i);
        // acc * (X^(q^i) - X), kept sparse
        acc = acc.shift(power) - acc.shift(1);
    }
    return acc;
}

// Monic polynomial of degree n over a finite ring, indexed by the base-|R|
// digits of idx (lower coefficients vary fastest). There are |R|^n of them.
template <FiniteRing R>
Poly<R> monic_at(const R& ring, unsigned n, std::uint64_t idx) {
    std::uint64_t card = checked_cardinality(ring);
    std::vector<typename R::elem> cs(n + 1, ring.zero());
    for (unsigned i = 0; i < n; ++i) {
        cs[i] = ring.element_at(idx % card);
        idx /= card;
    }
    cs[n] = ring.one();
    return Poly<R>(ring, std::move(cs));
}

template <FiniteRing R>
std::uint64_t monic_count(const R& ring, unsigned n, std::uint64_t max_enum = kDefaultEnumBound) {
    ZZ count = zz_pow(ring.cardinality(), n);
    if (count > max_enum)
        fail(ErrorCode::EnumerationTooLarge,
             count.str() + " monic polynomials of degree " + std::to_string(n) + " exceed cap");
    return count.convert_to<std::uint64_t>();
}

/**
 * Brute-force lcm of all monic polynomials of degree n over a finite field.
 * Independent route to the phi polynomial: reduce_mod(phi(q, n), p) must
 * agree with this over F_q.
 */
template <FiniteRing R>
Poly<R> all_monic_lcm_oracle(const R& ring, unsigned n, std::uint64_t max_enum = kDefaultEnumBound) {
    if (!ring.is_field()) fail(ErrorCode::NotAField, ring.name() + " is not a field");
    std::uint64_t count = monic_count(ring, n, max_enum);
    Poly<R> acc = monic_at(ring, n, 0);
    for (std::uint64_t i = 1; i < count; ++i) acc = poly_lcm(acc, monic_at(ring, n, i));
    return acc;
}

/**
 * Text formats. The pretty form writes descending terms ("X^6 - X^5 + 2"),
 * the list form writes ascending coefficients ("0,0,1,-1"). The parser
 * accepts both; parse(format(f)) == f exactly.
 */
template <Ring R>
std::string format_poly(const Poly<R>& f, const std::string& var = "X") {
    if (f.is_zero()) return "0";
    const R& ring = f.ring();
    std::string s;
    for (std::size_t i = f.size(); i-- > 0;) {
        auto c = f.coeff(i);
        if (ring.is_zero(c)) continue;
        std::string cs;
        bool negative = false;
        if constexpr (std::same_as<R, IntegerRing>) {
            negative = c < 0;
            cs = zz_abs(c).str();
        } else {
            cs = ring.to_str(c);
        }
        if (!s.empty())
            s += negative ? " - " : " + ";
        else if (negative)
            s += "-";
        bool unit_coeff = (cs == "1");
        if (i == 0) {
            if (cs.find('+') != std::string::npos || cs.find('-') != std::string::npos) cs = "(" + cs + ")";
            s += cs;
        } else {
            if (!unit_coeff) {
                if (cs.find('+') != std::string::npos || cs.find('-') != std::string::npos) cs = "(" + cs + ")";
                s += cs;
            }
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

template <Ring R>
std::string format_poly_list(const Poly<R>& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += f.ring().to_str(f.coeff(i));
    }
    return s;
}

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline ZZ parse_zz(const std::string& s, std::size_t& i) {
    skip_ws(s, i);
    std::size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        fail(ErrorCode::InvalidInput, "expected integer in polynomial at position " + std::to_string(start));
    return ZZ(s.substr(start, i - start));
}

}  // namespace detail

inline IntPoly parse_int_poly(const std::string& text) {
    IntegerRing Z;
    std::string s = text;
    if (s.find(',') != std::string::npos) {
        std::vector<ZZ> cs;
        std::size_t i = 0;
        while (true) {
            cs.push_back(detail::parse_zz(s, i));
            detail::skip_ws(s, i);
            if (i == s.size()) break;
            if (s[i] != ',') fail(ErrorCode::InvalidInput, "expected ',' in coefficient list");
            ++i;
        }
        return IntPoly(Z, std::move(cs));
    }
    std::vector<ZZ> cs;
    std::size_t i = 0;
    detail::skip_ws(s, i);
    if (i == s.size()) fail(ErrorCode::InvalidInput, "empty polynomial");
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        detail::skip_ws(s, i);
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            detail::skip_ws(s, i);
        } else if (!first) {
            fail(ErrorCode::InvalidInput, "expected '+' or '-' between terms");
        }
        first = false;
        ZZ coeff = 1;
        bool saw_coeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff = detail::parse_zz(s, i);
            saw_coeff = true;
            detail::skip_ws(s, i);
            if (i < s.size() && s[i] == '*') {
                ++i;
                detail::skip_ws(s, i);
            }
        }
        std::size_t exp = 0;
        if (i < s.size() && (s[i] == 'X' || s[i] == 'x')) {
            ++i;
            exp = 1;
            detail::skip_ws(s, i);
            if (i < s.size() && s[i] == '^') {
                ++i;
                ZZ e = detail::parse_zz(s, i);
                if (e < 0 || e > 1'000'000) fail(ErrorCode::InvalidInput, "bad exponent");
                exp = e.convert_to<std::size_t>();
            }
        } else if (!saw_coeff) {
            fail(ErrorCode::InvalidInput, "expected term at position " + std::to_string(i));
        }
        if (cs.size() < exp + 1) cs.resize(exp + 1, ZZ(0));
        cs[exp] += sign * coeff;
        detail::skip_ws(s, i);
    }
    return IntPoly(Z, std::move(cs));
}

/**
 * A rational polynomial g/d in lowest terms: d >= 1 and gcd(content(g), d) = 1.
 * Equality of values is therefore syntactic equality of (g, d).
 */
class RatPoly {
   public:
    RatPoly(IntPoly numerator, ZZ denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_ == 0) fail(ErrorCode::InvalidInput, "denominator must be nonzero");
        if (den_ < 0) {
            den_ = -den_;
            num_ = -num_;
        }
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        ZZ g = zz_gcd(content(num_), den_);
        if (g > 1) {
            std::vector<ZZ> cs;
            cs.reserve(num_.size());
            for (std::size_t i = 0; i < num_.size(); ++i) cs.push_back(num_.coeff(i) / g);
            num_ = IntPoly(IntegerRing{}, std::move(cs));
            den_ /= g;
        }
    }

    explicit RatPoly(IntPoly numerator) : RatPoly(std::move(numerator), ZZ(1)) {}

    const IntPoly& numerator() const { return num_; }
    const ZZ& denominator() const { return den_; }
    bool is_integral() const { return den_ == 1; }

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.den_ == b.den_ && a.num_ == b.num_; }

    std::string str() const {
        if (den_ == 1) return format_poly(num_);
        return "(" + format_poly(num_) + ")/" + den_.str();
    }

   private:
    IntPoly num_;
    ZZ den_;
};

inline RatPoly parse_rat_poly(const std::string& text) {
    auto slash = text.rfind('/');
    if (slash == std::string::npos) return RatPoly(parse_int_poly(text));
    std::string num = text.substr(0, slash);
    // strip one matching pair of parentheses
    std::size_t a = 0, b = num.size();
    detail::skip_ws(num, a);
    while (b > a && std::isspace(static_cast<unsigned char>(num[b - 1]))) --b;
    if (b > a && num[a] == '(' && num[b - 1] == ')') {
        ++a;
        --b;
    }
    std::size_t i = slash + 1;
    ZZ d = detail::parse_zz(text, i);
    return RatPoly(parse_int_poly(num.substr(a, b - a)), d);
}

}  // namespace intval

#endif
