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

#ifndef INTVAL_NULLIDEAL_HPP
#define INTVAL_NULLIDEAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "intval/algebra.hpp"
#include "intval/linalg.hpp"
#include "intval/poly.hpp"

namespace intval {

/**
 * Null-ideal and integer-valuedness computations on algebras over the
 * integers and their finite quotients. Throughout, "g/d maps A into A" is
 * decided at the finite level: g/d is integer-valued on A exactly when the
 * residue of g kills A/dA, and a modulus d is handled one prime power at a
 * time.
 */

template <Ring R>
struct NullIdealGen {
    Poly<R> generator;       // monic; kills the algebra, no proper monic divisor does
    std::string algebra;
    std::uint64_t enum_count = 0;
};

// Monic generator of the polynomials over a finite field killing the whole
// algebra: the lcm of the minimal polynomials of all elements.
template <Ring R>
NullIdealGen<R> null_ideal_field(const StructAlgebra<R>& A, std::uint64_t max_enum = kDefaultEnumBound)
    requires FiniteRing<R>
{
    if (!A.ring().is_field()) fail(ErrorCode::NotAField, A.ring().name() + " is not a field");
    std::uint64_t count = A.checked_element_count(max_enum);
    Poly<R> gen = min_poly_elem(A.zero_vec(), A);  // X
    for (std::uint64_t idx = 1; idx < count; ++idx)
        gen = poly_lcm(gen, min_poly_elem(A.element_at(idx), A));
    return {std::move(gen), A.describe(), count};
}

struct MembershipVerdict {
    bool member = true;
    // residue coordinates of a failing element and its exact integer evaluation
    std::optional<std::vector<ZZ>> counterexample;
    std::optional<std::vector<ZZ>> evaluation;
    ZZ modulus = 1;
    std::uint64_t enum_count = 0;
};

// Does g kill A/dA? Decided prime power by prime power: g vanishes mod d
// exactly when it vanishes mod every p^e dividing d, which caps enumeration
// at the largest p^(e * rank) instead of d^rank.
inline MembershipVerdict is_null_mod(const IntPoly& g, const ZAlgebra& A, std::uint64_t d,
                                     std::uint64_t max_enum = kDefaultEnumBound) {
    if (d < 2) fail(ErrorCode::BadModulus, "modulus must be at least 2");
    MembershipVerdict verdict;
    verdict.modulus = d;
    for (auto [p, e] : factor_u64(d)) {
        std::uint64_t pe = checked_pow_u64(p, e);
        auto Ar = reduce_algebra(A, pe);
        std::uint64_t count = Ar.checked_element_count(max_enum);
        auto gbar = reduce_mod(g, pe);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            auto a = Ar.element_at(idx);
            ++verdict.enum_count;
            if (Ar.is_zero_vec(elem_eval(gbar, a, Ar))) continue;
            // a failing residue mod p^e fails mod d as well: lift coordinates
            std::vector<ZZ> lift;
            lift.reserve(a.size());
            for (auto x : a) lift.push_back(ZZ(x));
            std::vector<ZZ> value = elem_eval(map_coeffs(g, IntegerRing{}), lift, A);
            verdict.member = false;
            verdict.counterexample = std::move(lift);
            verdict.evaluation = std::move(value);
            return verdict;
        }
    }
    return verdict;
}

// Integer-valuedness of f = g/d on A. Integral polynomials qualify at once;
// otherwise delegate to the null test at the denominator.
inline MembershipVerdict int_member(const RatPoly& f, const ZAlgebra& A,
                                    std::uint64_t max_enum = kDefaultEnumBound) {
    if (f.is_integral()) return {};
    if (f.denominator() > max_enum)
        fail(ErrorCode::EnumerationTooLarge, "denominator " + f.denominator().str() + " exceeds enumeration cap");
    return is_null_mod(f.numerator(), A, f.denominator().convert_to<std::uint64_t>(), max_enum);
}

/**
 * Data for a nontriviality witness at a prime power: the conductor is
 * (p^e Z : 1) = p^e Z, its radical is pZ, and every nilpotent of Z/p^e has
 * nilpotency at most t = e.
 */
struct WitnessSpec {
    std::uint64_t p;
    unsigned e;
    unsigned n;

    unsigned t() const { return e; }

    WitnessSpec(std::uint64_t p_, unsigned e_, unsigned n_) : p(p_), e(e_), n(n_) {
        if (!is_prime_u64(p)) fail(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
        if (e < 1 || n < 1) fail(ErrorCode::InvalidInput, "need e >= 1 and n >= 1");
    }
};

struct WitnessResult {
    RatPoly certificate;
    std::uint64_t enum_count;
};

/**
 * phi(p, n)^t / p^e with t = e: phi sends every n x n integer matrix into the
 * matrices over pZ, a t-fold product of such matrices lands in p^t Z = p^e Z,
 * so the quotient is integer-valued on the matrix algebra but is not an
 * integer polynomial. Verified here by exhausting M_n(Z/p^e).
 */
inline WitnessResult witness(const WitnessSpec& spec, std::uint64_t max_enum = kDefaultEnumBound,
                             std::uint64_t degree_bound = kDefaultDegreeBound) {
    IntPoly base = phi(spec.p, spec.n, degree_bound);
    ZZ deg = ZZ(*base.degree()) * spec.t();
    if (deg > degree_bound)
        fail(ErrorCode::DegreeTooLarge, "witness degree " + deg.str() + " exceeds bound");
    IntPoly g = base.pow(spec.t());
    ZZ pe = zz_pow(ZZ(spec.p), spec.e);
    RatPoly cert(g, pe);
    if (cert.is_integral()) fail(ErrorCode::InvalidInput, "witness collapsed to an integer polynomial");
    auto Mn = alg_matrix(IntegerRing{}, spec.n);
    auto check = int_member(cert, Mn, max_enum);
    if (!check.member) fail(ErrorCode::InvalidInput, "witness failed its own verification");
    return {std::move(cert), check.enum_count};
}

// Is g, taken mod d, divisible by every monic polynomial of degree n over Z/d?
inline bool divisible_by_all_monics(const IntPoly& g, std::uint64_t d, unsigned n,
                                    std::uint64_t max_enum = kDefaultEnumBound) {
    if (d < 2) fail(ErrorCode::BadModulus, "modulus must be at least 2");
    ModRing ring(d);
    auto gbar = reduce_mod(g, d);
    std::uint64_t count = monic_count(ring, n, max_enum);
    for (std::uint64_t idx = 0; idx < count; ++idx)
        if (!monic_divmod(gbar, monic_at(ring, n, idx)).second.is_zero()) return false;
    return true;
}

struct SplitVerdict {
    bool split = true;
    std::uint64_t enum_count = 0;
    // why not: either a pair of non-commuting basis indices, or an element with x^p != x
    std::optional<std::vector<ZZ>> witness_elem;
    std::string reason;
};

/**
 * Is A/pA a finite direct sum of copies of the prime field? Equivalent to:
 * A/pA commutative and x^p = x for every element (such an algebra is reduced
 * and commutative over F_p, hence a product of fields in which every element
 * is a Fermat fixed point, i.e. copies of F_p).
 */
inline SplitVerdict is_split_at(const ZAlgebra& A, std::uint64_t p, std::uint64_t max_enum = kDefaultEnumBound) {
    if (!is_prime_u64(p)) fail(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
    auto Ar = reduce_algebra(A, p);
    SplitVerdict verdict;
    if (!Ar.is_commutative()) {
        verdict.split = false;
        verdict.reason = "A/" + std::to_string(p) + "A is not commutative";
        return verdict;
    }
    std::uint64_t count = Ar.checked_element_count(max_enum);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        auto a = Ar.element_at(idx);
        ++verdict.enum_count;
        if (Ar.eq(Ar.pow(a, p), a)) continue;
        verdict.split = false;
        verdict.reason = "element fails x^p = x";
        std::vector<ZZ> lift;
        for (auto x : a) lift.push_back(ZZ(x));
        verdict.witness_elem = std::move(lift);
        return verdict;
    }
    return verdict;
}

namespace detail {

// Recognize a monic polynomial over F_p as phi(p^l, n) mod p; used to return
// the canonical integer form of a null-ideal generator when one exists.
inline std::optional<IntPoly> recognize_phi(const Poly<ModRing>& gen) {
    std::uint64_t p = gen.ring().modulus();
    if (gen.is_zero() || !gen.is_monic()) return std::nullopt;
    std::uint64_t D = *gen.degree();
    // q runs over p, p^2, p^3, ... up to D
    for (std::uint64_t q = p;;) {
        ZZ sum = q;
        unsigned n = 1;
        while (sum < D) {
            sum = sum * q + q;
            ++n;
        }
        if (sum == D) {
            IntPoly cand = phi(q, n);
            if (reduce_mod(cand, p) == gen) return cand;
        }
        if (q > D / p) break;
        q *= p;
    }
    return std::nullopt;
}

}  // namespace detail

struct NontrivialityCertificate {
    bool nontrivial;
    RatPoly certificate;
    std::uint64_t enum_count;
};

/**
 * Certificate that polynomials with denominator p already exceed Z[X] on A:
 * a monic integer pullback g of the null-ideal generator of A/pA gives
 * g/p integer-valued on A. The pullback is the integer phi polynomial when
 * the generator is one mod p, else the symmetric-residue lift.
 */
inline NontrivialityCertificate nontriviality_check(const ZAlgebra& A, std::uint64_t p,
                                                    std::uint64_t max_enum = kDefaultEnumBound) {
    if (!is_prime_u64(p)) fail(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
    auto Ar = reduce_algebra(A, p);
    auto gen = null_ideal_field(Ar, max_enum);
    IntPoly g = [&] {
        if (auto known = detail::recognize_phi(gen.generator)) return *known;
        return lift_balanced(gen.generator);
    }();
    RatPoly cert(g, ZZ(p));
    if (cert.is_integral()) fail(ErrorCode::InvalidInput, "certificate collapsed to an integer polynomial");
    auto check = int_member(cert, A, max_enum);
    if (!check.member) fail(ErrorCode::InvalidInput, "certificate failed its own verification");
    return {true, std::move(cert), gen.enum_count + check.enum_count};
}

/**
 * Comparison of null sets of two integer algebras at each given modulus. At a
 * prime the null ideal is principal over the residue field and the monic
 * generators are compared outright. At a proper prime power the null set is
 * only a module; the polynomials of degree up to a caller-supplied bound that
 * kill each algebra are computed exactly (as the kernel of the evaluation
 * constraints over Z/p^e) and the two kernels are cross-checked by evaluation.
 */
struct NullCompareFactor {
    std::uint64_t p;
    unsigned e;
    unsigned degree_bound;
    bool equal;
    std::optional<IntPoly> separator;   // kills exactly one side, mod p^e
    std::string separator_side;         // "A" or "B": the side it kills
};

struct NullComparePerModulus {
    std::uint64_t d;
    bool equal;
    unsigned degree_bound;              // largest bound used among factors
    std::optional<IntPoly> separator;   // mod-d separating polynomial
    std::string separator_side;
    std::vector<NullCompareFactor> factors;
};

struct NullCompareReport {
    std::vector<NullComparePerModulus> per_modulus;
    bool all_equal = true;
};

namespace detail {

// All polynomials of degree <= bound killing A/(p^e), as canonical integer
// lifts of a generating set of the kernel module.
inline std::vector<IntPoly> null_kernel_mod_pe(const ZAlgebra& A, std::uint64_t p, unsigned e, unsigned bound,
                                               std::uint64_t max_enum) {
    std::uint64_t pe = checked_pow_u64(p, e);
    auto Ar = reduce_algebra(A, pe);
    std::uint64_t count = Ar.checked_element_count(max_enum);
    const std::size_t ncols = bound + 1;
    modpe::RowEchelon echelon(ncols, p, e);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        auto a = Ar.element_at(idx);
        // coordinates of a^j for j = 0..bound, one constraint row per coordinate
        std::vector<std::vector<std::uint64_t>> rows(Ar.rank(), std::vector<std::uint64_t>(ncols, 0));
        auto power = Ar.unit_vec();
        for (std::size_t j = 0; j < ncols; ++j) {
            for (std::size_t c = 0; c < Ar.rank(); ++c) rows[c][j] = power[c];
            if (j + 1 < ncols) power = Ar.mul(power, a);
        }
        for (auto& row : rows) echelon.insert(std::move(row));
    }
    auto gens = modpe::kernel(echelon.rows(), ncols, p, e);
    std::vector<IntPoly> out;
    for (const auto& gvec : gens) {
        std::vector<ZZ> cs;
        cs.reserve(gvec.size());
        for (auto x : gvec) cs.push_back(ZZ(x));
        IntPoly g(IntegerRing{}, std::move(cs));
        if (!g.is_zero()) out.push_back(std::move(g));
    }
    return out;
}

inline bool kills_mod(const IntPoly& g, const ZAlgebra& A, std::uint64_t pe, std::uint64_t max_enum) {
    auto Ar = reduce_algebra(A, pe);
    std::uint64_t count = Ar.checked_element_count(max_enum);
    auto gbar = reduce_mod(g, pe);
    if (gbar.is_zero()) return true;
    for (std::uint64_t idx = 0; idx < count; ++idx)
        if (!Ar.is_zero_vec(elem_eval(gbar, Ar.element_at(idx), Ar))) return false;
    return true;
}

}  // namespace detail

inline NullCompareReport compare_null_ideals(const ZAlgebra& A, const ZAlgebra& B,
                                             const std::vector<std::uint64_t>& moduli,
                                             std::optional<unsigned> degree_bound = std::nullopt,
                                             std::uint64_t max_enum = kDefaultEnumBound) {
    NullCompareReport report;
    for (std::uint64_t d : moduli) {
        if (d < 2) fail(ErrorCode::BadModulus, "modulus must be at least 2");
        NullComparePerModulus per{d, true, 0, std::nullopt, "", {}};
        for (auto [p, e] : factor_u64(d)) {
            NullCompareFactor factor{p, e, 0, true, std::nullopt, ""};
            std::uint64_t pe = checked_pow_u64(p, e);
            if (e == 1) {
                auto genA = null_ideal_field(reduce_algebra(A, p), max_enum);
                auto genB = null_ideal_field(reduce_algebra(B, p), max_enum);
                factor.degree_bound =
                    static_cast<unsigned>(std::max(genA.generator.degree_or_zero(), genB.generator.degree_or_zero()));
                if (!(genA.generator == genB.generator)) {
                    factor.equal = false;
                    // one generator must fail on the other side
                    IntPoly ga = lift_canonical(genA.generator);
                    if (!detail::kills_mod(ga, B, p, max_enum)) {
                        factor.separator = std::move(ga);
                        factor.separator_side = "A";
                    } else {
                        factor.separator = lift_canonical(genB.generator);
                        factor.separator_side = "B";
                    }
                }
            } else {
                if (!degree_bound)
                    fail(ErrorCode::InvalidInput,
                         "a degree bound is required to compare null sets at non-prime modulus " + std::to_string(pe));
                factor.degree_bound = *degree_bound;
                auto kerA = detail::null_kernel_mod_pe(A, p, e, *degree_bound, max_enum);
                auto kerB = detail::null_kernel_mod_pe(B, p, e, *degree_bound, max_enum);
                for (const auto& g : kerA) {
                    if (!detail::kills_mod(g, B, pe, max_enum)) {
                        factor.equal = false;
                        factor.separator = g;
                        factor.separator_side = "A";
                        break;
                    }
                }
                if (factor.equal) {
                    for (const auto& g : kerB) {
                        if (!detail::kills_mod(g, A, pe, max_enum)) {
                            factor.equal = false;
                            factor.separator = g;
                            factor.separator_side = "B";
                            break;
                        }
                    }
                }
            }
            per.degree_bound = std::max(per.degree_bound, factor.degree_bound);
            if (!factor.equal && per.equal) {
                per.equal = false;
                // lift the mod-p^e separator to a mod-d one: keep it mod p^e, zero mod d/p^e
                IntPoly sep = *factor.separator;
                if (pe != d) {
                    std::uint64_t rest = d / pe;
                    ModRing mod_pe(pe);
                    std::uint64_t unit = mod_pe.inv(rest % pe);
                    ZZ scale = ZZ(rest) * unit;
                    std::vector<ZZ> cs;
                    for (std::size_t i = 0; i < sep.size(); ++i) {
                        ZZ c = sep.coeff(i) * scale % d;
                        if (c < 0) c += d;
                        cs.push_back(c);
                    }
                    sep = IntPoly(IntegerRing{}, std::move(cs));
                }
                per.separator = std::move(sep);
                per.separator_side = factor.separator_side;
            }
            per.factors.push_back(std::move(factor));
        }
        if (!per.equal) report.all_equal = false;
        report.per_modulus.push_back(std::move(per));
    }
    return report;
}

}  // namespace intval

#endif
