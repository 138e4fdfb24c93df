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

#include <gtest/gtest.h>

#include <random>

#include "intval/poly.hpp"

using namespace intval;

namespace {

IntPoly ip(const std::string& s) { return parse_int_poly(s); }

template <Ring R>
Poly<R> random_poly(const R& ring, std::size_t max_deg, std::uint64_t card, std::mt19937_64& rng) {
    std::vector<typename R::elem> cs;
    std::size_t deg = rng() % (max_deg + 1);
    for (std::size_t i = 0; i <= deg; ++i) cs.push_back(ring.element_at(rng() % card));
    return Poly<R>(ring, std::move(cs));
}

}  // namespace

TEST(Poly, ArithmeticExamples) {
    EXPECT_EQ(ip("X+1") * ip("X-1"), ip("X^2-1"));
    // (X^2) o (X+1) over F_2 = X^2 + 1
    ModRing F2(2);
    auto x2 = map_coeffs(ip("X^2"), F2);
    auto xp1 = map_coeffs(ip("X+1"), F2);
    EXPECT_EQ(x2.compose(xp1), map_coeffs(ip("X^2+1"), F2));
    EXPECT_EQ(ip("X^4-X") * ip("X^2-X"), ip("X^6-X^5-X^3+X^2"));
}

TEST(Poly, RingMismatchIsRejected) {
    auto f = map_coeffs(ip("X"), ModRing(2));
    auto g = map_coeffs(ip("X"), ModRing(3));
    try {
        auto h = f + g;
        FAIL() << "expected RingMismatch";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::RingMismatch);
    }
}

TEST(Poly, MonicDivmodExamples) {
    ModRing F2(2);
    auto f = map_coeffs(ip("X^6+X^5+X^3+X^2"), F2);
    auto g = map_coeffs(ip("X^2+X"), F2);
    EXPECT_TRUE(monic_divmod(f, g).second.is_zero());

    auto [q, r] = monic_divmod(map_coeffs(ip("X^2"), F2), map_coeffs(ip("X+1"), F2));
    EXPECT_EQ(q, map_coeffs(ip("X+1"), F2));
    EXPECT_EQ(r, map_coeffs(ip("1"), F2));

    auto [qz, rz] = monic_divmod(Poly<ModRing>(F2), g);
    EXPECT_TRUE(qz.is_zero());
    EXPECT_TRUE(rz.is_zero());

    try {
        monic_divmod(map_coeffs(f, ModRing(4)), map_coeffs(ip("2X+1"), ModRing(4)));
        FAIL() << "expected NonMonicDivisor";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonMonicDivisor);
    }
}

TEST(Poly, GcdLcmExamples) {
    ModRing F2(2);
    auto [g1, l1] = gcd_lcm(map_coeffs(ip("X^2"), F2), map_coeffs(ip("X^2+X"), F2));
    EXPECT_EQ(g1, map_coeffs(ip("X"), F2));
    EXPECT_EQ(l1, map_coeffs(ip("X^3+X^2"), F2));

    auto f = map_coeffs(ip("X^3+X+1"), F2);
    auto [g2, l2] = gcd_lcm(f, f);
    EXPECT_EQ(g2, f);
    EXPECT_EQ(l2, f);

    auto [g3, l3] = gcd_lcm(map_coeffs(ip("X^2+X+1"), F2), map_coeffs(ip("X^2+X"), F2));
    EXPECT_EQ(g3, map_coeffs(ip("1"), F2));
    EXPECT_EQ(l3, map_coeffs(ip("X^4+X"), F2));

    try {
        gcd_lcm(map_coeffs(ip("X"), ModRing(4)), map_coeffs(ip("X+1"), ModRing(4)));
        FAIL() << "expected NotAField";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAField);
    }
}

TEST(Poly, ReduceModExamples) {
    EXPECT_EQ(reduce_mod(ip("X^6-X^5-X^3+X^2"), 2), map_coeffs(ip("X^6+X^5+X^3+X^2"), ModRing(2)));
    EXPECT_TRUE(reduce_mod(ip("2X+4"), 2).is_zero());
    EXPECT_EQ(reduce_mod(ip("X^2-5X-2"), 3), map_coeffs(ip("X^2+X+1"), ModRing(3)));
    try {
        reduce_mod(ip("X"), 1);
        FAIL() << "expected BadModulus";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BadModulus);
    }
}

TEST(Poly, PhiExamples) {
    EXPECT_EQ(phi(2, 1), ip("X^2-X"));
    EXPECT_EQ(phi(2, 2), ip("X^6-X^5-X^3+X^2"));
    EXPECT_EQ(phi(3, 1), ip("X^3-X"));
    try {
        phi(6, 1);
        FAIL() << "expected NotPrimePower";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotPrimePower);
    }
    try {
        phi(2, 30);
        FAIL() << "expected DegreeTooLarge";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegreeTooLarge);
    }
}

TEST(Poly, PhiShape) {
    for (auto [q, n] : {std::pair<std::uint64_t, unsigned>{2, 1}, {2, 2}, {2, 3}, {3, 2}, {4, 2}, {5, 1}, {9, 1}}) {
        IntPoly f = phi(q, n);
        ZZ expected_deg = 0;
        for (unsigned i = 1; i <= n; ++i) expected_deg += zz_pow(ZZ(q), i);
        EXPECT_TRUE(f.is_monic());
        EXPECT_EQ(ZZ(*f.degree()), expected_deg);
        EXPECT_EQ(content(f), 1);
    }
}

TEST(Poly, AllMonicLcmOracleExamples) {
    ModRing F2(2), F3(3);
    EXPECT_EQ(all_monic_lcm_oracle(F2, 2), reduce_mod(phi(2, 2), 2));
    EXPECT_EQ(all_monic_lcm_oracle(F2, 1), map_coeffs(ip("X^2+X"), F2));
    EXPECT_EQ(all_monic_lcm_oracle(F3, 1), map_coeffs(ip("X^3+2X"), F3));
}

TEST(Poly, PhiMatchesOracleOnAllFeasiblePairs) {
    // q in {2,3,4,5}, n in {1,2,3}, q^n <= 64
    for (std::uint64_t q : {2, 3, 4, 5}) {
        for (unsigned n = 1; n <= 3; ++n) {
            if (zz_pow(ZZ(q), n) > 64) continue;
            auto [p, e] = *prime_power_u64(q);
            IntPoly f = phi(q, n);
            if (e == 1) {
                EXPECT_EQ(reduce_mod(f, p), all_monic_lcm_oracle(ModRing(p), n)) << "q=" << q << " n=" << n;
            } else {
                FqCtx F = make_fq(p, e);
                EXPECT_EQ(map_coeffs(f, F), all_monic_lcm_oracle(F, n)) << "q=" << q << " n=" << n;
            }
        }
    }
}

TEST(Poly, MonicDivmodRoundTrip) {
    std::mt19937_64 rng(987654);
    for (std::uint64_t m : {2, 3, 4, 9}) {
        ModRing ring(m);
        for (int iter = 0; iter < 200; ++iter) {
            auto f = random_poly(ring, 8, m, rng);
            // monic divisor of random degree
            unsigned d = 1 + static_cast<unsigned>(rng() % 4);
            auto g = monic_at(ring, d, rng() % checked_pow_u64(m, d));
            auto [q, r] = monic_divmod(f, g);
            EXPECT_EQ(q * g + r, f);
            if (!r.is_zero()) {
                EXPECT_LT(*r.degree(), *g.degree());
            }
        }
    }
}

TEST(Poly, GcdLcmInvariants) {
    std::mt19937_64 rng(13579);
    for (std::uint64_t p : {2, 3, 5}) {
        ModRing F(p);
        for (int iter = 0; iter < 150; ++iter) {
            auto f = random_poly(F, 6, p, rng);
            auto g = random_poly(F, 6, p, rng);
            if (f.is_zero() || g.is_zero()) continue;
            auto [d, l] = gcd_lcm(f, g);
            EXPECT_TRUE(monic_divmod(f, d).second.is_zero());
            EXPECT_TRUE(monic_divmod(g, d).second.is_zero());
            EXPECT_TRUE(monic_divmod(l, f.scale(F.inv(f.leading()))).second.is_zero());
            EXPECT_TRUE(monic_divmod(l, g.scale(F.inv(g.leading()))).second.is_zero());
            EXPECT_EQ(*d.degree() + *l.degree(), *f.degree() + *g.degree());
        }
    }
}

TEST(Poly, RatPolyNormalization) {
    RatPoly f(ip("2X^2-2X"), ZZ(4));
    EXPECT_EQ(f.numerator(), ip("X^2-X"));
    EXPECT_EQ(f.denominator(), 2);
    EXPECT_EQ(f.str(), "(X^2 - X)/2");

    RatPoly g(ip("X"), ZZ(-3));
    EXPECT_EQ(g.denominator(), 3);
    EXPECT_EQ(g.numerator(), ip("-X"));

    RatPoly z(IntPoly(IntegerRing{}), ZZ(7));
    EXPECT_TRUE(z.is_integral());

    EXPECT_EQ(RatPoly(ip("3X+3"), ZZ(6)), RatPoly(ip("X+1"), ZZ(2)));
    try {
        RatPoly bad(ip("X"), ZZ(0));
        FAIL() << "expected InvalidInput";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
    }
}

TEST(Poly, TextFormatsRoundTripExactly) {
    std::mt19937_64 rng(24680);
    IntegerRing Z;
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<ZZ> cs;
        std::size_t deg = rng() % 7;
        for (std::size_t i = 0; i <= deg; ++i) cs.push_back(ZZ(static_cast<std::int64_t>(rng() % 2001) - 1000));
        IntPoly f(Z, std::move(cs));
        EXPECT_EQ(parse_int_poly(format_poly(f)), f);
        EXPECT_EQ(parse_int_poly(format_poly_list(f)), f);
    }
    EXPECT_EQ(format_poly(ip("X^6-X^5-X^3+X^2")), "X^6 - X^5 - X^3 + X^2");
    EXPECT_EQ(format_poly(IntPoly(Z)), "0");
    EXPECT_EQ(format_poly_list(ip("X^2-X")), "0,-1,1");
    EXPECT_EQ(ip("0,-1,1"), ip("X^2 - X"));
    EXPECT_EQ(ip("3*X^2 + 2"), ip("3X^2+2"));
    EXPECT_EQ(parse_rat_poly("(X^2 - X)/2").str(), "(X^2 - X)/2");
    EXPECT_EQ(parse_rat_poly("X^2 - X").str(), "X^2 - X");
}

TEST(Poly, ZeroPolynomialHasNoDegree) {
    IntegerRing Z;
    IntPoly zero(Z);
    EXPECT_TRUE(zero.is_zero());
    EXPECT_FALSE(zero.degree().has_value());
    EXPECT_EQ(ip("0"), zero);
    EXPECT_FALSE(ip("X").degree() == std::nullopt);
}
