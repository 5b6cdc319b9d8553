#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cstdlib>
#include <string>

namespace grassmann {

using BigInt = boost::multiprecision::cpp_int;

// 100 decimal digits, well above the 80 bits the bound evaluations need.
using BigFloat = boost::multiprecision::cpp_bin_float_100;

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

/// Ceiling on the number of subspaces any single enumeration may produce.
/// GRASSMANN_BUDGET overrides the default when set to a positive integer.
inline std::uint64_t enumeration_budget() {
    if (const char* env = std::getenv("GRASSMANN_BUDGET")) {
        try {
            const auto value = std::stoull(env);
            if (value > 0) return value;
        } catch (const std::exception&) {
        }
    }
    return kDefaultEnumerationBudget;
}

/// Exact integer power; callers keep results inside 64 bits.
constexpr std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

inline BigInt big_pow(std::uint64_t base, unsigned exp) {
    return boost::multiprecision::pow(BigInt(base), exp);
}

} // namespace grassmann
