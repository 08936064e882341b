#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace wreath {

// Exact arithmetic used throughout the verification paths. Floating point
// only enters after the final conversion in the simulation observables.
using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const BigInt& z) { return z.convert_to<double>(); }

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

// m! / prod(parts!) with sum(parts) == m.
inline BigInt multinomial(unsigned m, const std::vector<unsigned>& parts) {
    BigInt r = factorial(m);
    for (unsigned p : parts) r /= factorial(p);
    return r;
}

// n(n-1)...(n-k+1)
inline BigInt falling_factorial(const BigInt& n, unsigned k) {
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) r *= n - i;
    return r;
}

inline BigInt pow_int(const BigInt& base, unsigned e) {
    BigInt r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Rational pow_rat(const Rational& base, unsigned e) {
    Rational r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// SplitMix64 step; used to derive per-path RNG streams from (seed, index)
// so results do not depend on worker scheduling.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace wreath
