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

#ifndef INTVAL_ERROR_HPP
#define INTVAL_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace intval {

enum class ErrorCode {
    NonPrime,
    NotPrimePower,
    DegreeTooLarge,
    EnumerationTooLarge,
    RingMismatch,
    NonMonicDivisor,
    NonMonic,
    NotAField,
    NonInvertible,
    BadModulus,
    BadDimension,
    BadDivisor,
    EvenPrime,
    InvalidInput,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NonPrime: return "NonPrime";
        case ErrorCode::NotPrimePower: return "NotPrimePower";
        case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
        case ErrorCode::RingMismatch: return "RingMismatch";
        case ErrorCode::NonMonicDivisor: return "NonMonicDivisor";
        case ErrorCode::NonMonic: return "NonMonic";
        case ErrorCode::NotAField: return "NotAField";
        case ErrorCode::NonInvertible: return "NonInvertible";
        case ErrorCode::BadModulus: return "BadModulus";
        case ErrorCode::BadDimension: return "BadDimension";
        case ErrorCode::BadDivisor: return "BadDivisor";
        case ErrorCode::EvenPrime: return "EvenPrime";
        case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

// Default cap on exhaustive sweeps (elements, matrices, monic polynomials).
inline constexpr std::uint64_t kDefaultEnumBound = 10'000'000;

// Default cap on the degree of constructed polynomials (phi products, witnesses).
inline constexpr std::uint64_t kDefaultDegreeBound = 1'000'000;

}  // namespace intval

#endif
