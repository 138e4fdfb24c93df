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

#ifndef INTVAL_HENSEL_HPP
#define INTVAL_HENSEL_HPP

#include <cstdint>
#include <vector>

#include "intval/algebra.hpp"
#include "intval/matrix.hpp"
#include "intval/nullideal.hpp"

namespace intval {

/**
 * Explicit isomorphism from the quaternions mod p^k onto the 2 x 2 matrices
 * over Z/p^k, for odd p: from a solution of a^2 + b^2 = -1 mod p, Hensel-
 * lifted to mod p^k, the unit i maps to [[a,b],[b,-a]] and j to [[0,1],[-1,0]].
 * The construction is verified on all sixteen basis products and for
 * bijectivity before it is returned.
 */
struct QuatSplit {
    std::uint64_t p;
    unsigned k;
    std::uint64_t modulus;  // p^k
    std::uint64_t a, b;     // a^2 + b^2 = -1 mod p^k
    std::vector<Matrix<ModRing>> images;  // of 1, i, j, k
    std::uint64_t checked_products;
};

inline QuatSplit hensel_split_quaternion(std::uint64_t p, unsigned k) {
    if (p == 2)
        fail(ErrorCode::EvenPrime, "the quaternions do not split mod powers of 2");
    if (!is_prime_u64(p)) fail(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
    if (k < 1) fail(ErrorCode::InvalidInput, "k must be at least 1");
    if (p > kDefaultEnumBound) fail(ErrorCode::EnumerationTooLarge, "base solution scan is capped at p <= 10^7");
    std::uint64_t pk = checked_pow_u64(p, k);

    // base solution of a^2 + b^2 + 1 = 0 over F_p, first in scan order
    std::uint64_t a = 0, b = 0;
    bool found = false;
    for (std::uint64_t bb = 0; bb < p && !found; ++bb)
        for (std::uint64_t aa = 0; aa < p; ++aa)
            if ((aa * aa + bb * bb + 1) % p == 0) {
                a = aa;
                b = bb;
                found = true;
                break;
            }
    if (!found) fail(ErrorCode::InvalidInput, "no solution mod p");  // impossible for odd p

    // Newton steps in the coordinate with invertible derivative: a and b
    // cannot both vanish mod p, and 2 is a unit.
    std::uint64_t cur = p;
    for (unsigned step = 1; step < k; ++step) {
        std::uint64_t next = cur * p;
        ZZ f = (ZZ(a) * a + ZZ(b) * b + 1) % next;
        std::uint64_t f_over_cur = (f / cur).convert_to<std::uint64_t>();
        ModRing Fp(p);
        if (a % p != 0) {
            std::uint64_t t = Fp.mul(Fp.neg(f_over_cur % p), Fp.inv((2 * a) % p));
            a += cur * t;
        } else {
            std::uint64_t t = Fp.mul(Fp.neg(f_over_cur % p), Fp.inv((2 * b) % p));
            b += cur * t;
        }
        cur = next;
    }

    ModRing ring(pk);
    auto img_one = Matrix<ModRing>::identity(ring, 2);
    Matrix<ModRing> img_i(ring, 2, {a % pk, b % pk, b % pk, ring.neg(a % pk)});
    Matrix<ModRing> img_j(ring, 2, {0, 1, ring.neg(1), 0});
    Matrix<ModRing> img_k = img_i * img_j;
    std::vector<Matrix<ModRing>> images = {img_one, img_i, img_j, img_k};

    // the map respects every structure-constant product
    auto H = reduce_algebra(alg_quaternion(IntegerRing{}), pk);
    std::uint64_t checked = 0;
    for (std::size_t u = 0; u < 4; ++u)
        for (std::size_t v = 0; v < 4; ++v) {
            Matrix<ModRing> lhs = images[u] * images[v];
            Matrix<ModRing> rhs(ring, 2);
            for (std::size_t w = 0; w < 4; ++w) rhs = rhs + images[w].scale(H.constant(u, v, w));
            if (!(lhs == rhs)) fail(ErrorCode::InvalidInput, "image does not respect the multiplication table");
            ++checked;
        }

    // bijectivity: the coordinate matrix of the four images is invertible,
    // i.e. its determinant (constant char poly coefficient, n = 4) is a unit
    Matrix<ModRing> coords(ring, 4);
    for (std::size_t w = 0; w < 4; ++w)
        for (std::size_t t = 0; t < 4; ++t) coords.at(w, t) = images[w].entries()[t];
    std::uint64_t det = char_poly(coords).coeff(0);
    if (det % p == 0) fail(ErrorCode::InvalidInput, "images do not form a basis mod p^k");

    return {p, k, pk, a % pk, b % pk, std::move(images), checked};
}

}  // namespace intval

#endif
