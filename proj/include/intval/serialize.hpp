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

#ifndef INTVAL_SERIALIZE_HPP
#define INTVAL_SERIALIZE_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "intval/algebra.hpp"

namespace intval {

/**
 * Algebra-spec file format:
 *
 *   {
 *     "rank": r,
 *     "ring": "Z" | "Zmod:m" | "Fq:p,e",
 *     "unit": [u0, ..., u_{r-1}],
 *     "constants": [[i, j, k, c], ...]   // sparse nonzero entries
 *   }
 *
 * Coefficients are integers for "Z", canonical residues for "Zmod:m", and
 * element enumeration indices (base-p digit encoding) for "Fq:p,e". Large
 * integer coefficients may be written as decimal strings.
 */

using AnyAlgebra = std::variant<StructAlgebra<IntegerRing>, StructAlgebra<ModRing>, StructAlgebra<FqCtx>>;

namespace detail {

inline ZZ json_to_zz(const nlohmann::json& v) {
    if (v.is_string()) return ZZ(v.get<std::string>());
    if (v.is_number_integer()) return ZZ(v.get<long long>());
    fail(ErrorCode::InvalidInput, "expected an integer or decimal string in algebra spec");
}

inline nlohmann::json zz_to_json(const ZZ& z) {
    if (z >= -ZZ(1) * (1ll << 53) && z <= ZZ(1) << 53) return z.convert_to<long long>();
    return z.str();
}

template <Ring R>
nlohmann::json coeff_to_json(const R& ring, const typename R::elem& c) {
    if constexpr (std::same_as<R, FqCtx>) {
        return ring.index_of(c);
    } else {
        return zz_to_json(ring.to_int(c));
    }
}

template <Ring R>
typename R::elem coeff_from_json(const R& ring, const nlohmann::json& v) {
    if constexpr (std::same_as<R, FqCtx>) {
        std::uint64_t idx = v.get<std::uint64_t>();
        if (ZZ(idx) >= ring.cardinality()) fail(ErrorCode::InvalidInput, "field element index out of range");
        return ring.element_at(idx);
    } else {
        return ring.from_int(json_to_zz(v));
    }
}

}  // namespace detail

template <Ring R>
nlohmann::json algebra_to_json(const StructAlgebra<R>& A) {
    nlohmann::json j;
    j["rank"] = A.rank();
    if constexpr (std::same_as<R, IntegerRing>) {
        j["ring"] = "Z";
    } else if constexpr (std::same_as<R, ModRing>) {
        j["ring"] = "Zmod:" + std::to_string(A.ring().modulus());
    } else {
        j["ring"] = "Fq:" + std::to_string(A.ring().characteristic()) + "," + std::to_string(A.ring().degree());
    }
    nlohmann::json unit = nlohmann::json::array();
    for (const auto& u : A.unit_vec()) unit.push_back(detail::coeff_to_json(A.ring(), u));
    j["unit"] = unit;
    nlohmann::json constants = nlohmann::json::array();
    for (std::size_t i = 0; i < A.rank(); ++i)
        for (std::size_t jj = 0; jj < A.rank(); ++jj)
            for (std::size_t k = 0; k < A.rank(); ++k) {
                const auto& c = A.constant(i, jj, k);
                if (A.ring().is_zero(c)) continue;
                constants.push_back({i, jj, k, detail::coeff_to_json(A.ring(), c)});
            }
    j["constants"] = constants;
    if (A.matrix_dim() > 0) j["matrix_dim"] = A.matrix_dim();
    if (!A.describe().empty()) j["name"] = A.describe();
    return j;
}

namespace detail {

template <Ring R>
StructAlgebra<R> algebra_from_json_with_ring(const nlohmann::json& j, const R& ring) {
    std::size_t rank = j.at("rank").get<std::size_t>();
    if (rank == 0 || rank > 4096) fail(ErrorCode::InvalidInput, "bad rank in algebra spec");
    std::vector<typename R::elem> c(rank * rank * rank, ring.zero());
    for (const auto& entry : j.at("constants")) {
        if (!entry.is_array() || entry.size() != 4) fail(ErrorCode::InvalidInput, "constants must be [i,j,k,c] rows");
        std::size_t i = entry[0].get<std::size_t>(), jj = entry[1].get<std::size_t>(), k = entry[2].get<std::size_t>();
        if (i >= rank || jj >= rank || k >= rank) fail(ErrorCode::InvalidInput, "constant index out of range");
        c[(i * rank + jj) * rank + k] = coeff_from_json(ring, entry[3]);
    }
    typename StructAlgebra<R>::vec unit;
    for (const auto& u : j.at("unit")) unit.push_back(coeff_from_json(ring, u));
    if (unit.size() != rank) fail(ErrorCode::InvalidInput, "unit length does not match rank");
    std::size_t matrix_dim = j.value("matrix_dim", std::size_t{0});
    std::string name = j.value("name", std::string("algebra"));
    return StructAlgebra<R>(ring, rank, std::move(c), std::move(unit), name, matrix_dim);
}

}  // namespace detail

inline AnyAlgebra algebra_from_json(const nlohmann::json& j) {
    std::string ring = j.at("ring").get<std::string>();
    if (ring == "Z") return detail::algebra_from_json_with_ring(j, IntegerRing{});
    if (ring.rfind("Zmod:", 0) == 0) {
        std::uint64_t m = std::stoull(ring.substr(5));
        return detail::algebra_from_json_with_ring(j, ModRing(m));
    }
    if (ring.rfind("Fq:", 0) == 0) {
        auto rest = ring.substr(3);
        auto comma = rest.find(',');
        if (comma == std::string::npos) fail(ErrorCode::InvalidInput, "Fq ring tag must be Fq:p,e");
        std::uint64_t p = std::stoull(rest.substr(0, comma));
        unsigned e = static_cast<unsigned>(std::stoul(rest.substr(comma + 1)));
        return detail::algebra_from_json_with_ring(j, make_fq(p, e));
    }
    fail(ErrorCode::InvalidInput, "unknown ring tag '" + ring + "'");
}

}  // namespace intval

#endif
