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

#ifndef INTVAL_INTEGER_HPP
#define INTVAL_INTEGER_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "intval/error.hpp"

namespace intval {

// Exact arbitrary-precision integer.
using ZZ = boost::multiprecision::cpp_int;

inline ZZ zz_gcd(const ZZ& a, const ZZ& b) { return boost::multiprecision::gcd(a, b); }
inline ZZ zz_abs(const ZZ& a) { return boost::multiprecision::abs(a); }

inline ZZ zz_pow(const ZZ& base, std::uint64_t e) {
    ZZ r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Canonical residue in [0, m).
inline std::uint64_t zz_mod_u64(const ZZ& z, std::uint64_t m) {
    ZZ r = z % m;
    if (r < 0) r += m;
    return r.convert_to<std::uint64_t>();
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller–Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Factorization by trial division (desk-scale moduli). Smooth parts up to 10^6
// are peeled off; a remaining cofactor must be prime or we give up.
inline std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n) {
    if (n < 2) fail(ErrorCode::InvalidInput, "cannot factor " + std::to_string(n));
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    auto peel = [&](std::uint64_t p) {
        if (n % p) return;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    };
    peel(2);
    for (std::uint64_t p = 3; p <= 1'000'000 && p * p <= n; p += 2) peel(p);
    if (n > 1) {
        if (!is_prime_u64(n))
            fail(ErrorCode::EnumerationTooLarge, "modulus has a large composite cofactor " + std::to_string(n));
        out.emplace_back(n, 1u);
    }
    return out;
}

// q = p^e with p prime, if q is a prime power.
inline std::optional<std::pair<std::uint64_t, unsigned>> prime_power_u64(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    if (is_prime_u64(q)) return std::make_pair(q, 1u);
    auto fs = factor_u64(q);
    if (fs.size() != 1) return std::nullopt;
    return fs.front();
}

// p^e, reporting overflow instead of wrapping.
inline std::uint64_t checked_pow_u64(std::uint64_t p, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (p != 0 && r > UINT64_MAX / p) fail(ErrorCode::DegreeTooLarge, "power overflows 64 bits");
        r *= p;
    }
    return r;
}

}  // namespace intval

#endif
