#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace posetblock {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt ipow(const BigInt& base, std::uint64_t exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1U) result *= b;
        exp >>= 1U;
        if (exp > 0) b *= b;
    }
    return result;
}

inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline BigInt factorial(std::int64_t n) {
    BigInt result = 1;
    for (std::int64_t i = 2; i <= n; ++i) result *= i;
    return result;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt from_decimal(const std::string& s) { return BigInt(s); }

/// Saturating q^e in 64 bits; returns UINT64_MAX on overflow. Used for cap checks only.
inline std::uint64_t pow_saturating(std::uint64_t q, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (q != 0 && r > UINT64_MAX / q) return UINT64_MAX;
        r *= q;
    }
    return r;
}

}  // namespace posetblock
