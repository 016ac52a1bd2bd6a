#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sdeg {

using Int = boost::multiprecision::cpp_int;
using Ratio = boost::multiprecision::cpp_rational;

// Thrown when a requested computation exceeds the configured enumeration
// budget. Carries the exact count the computation would have produced.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::string what, Int count)
        : std::runtime_error(std::move(what)), count_(std::move(count)) {}
    const Int& count() const { return count_; }

private:
    Int count_;
};

inline Int ipow(const Int& base, std::uint64_t exp) {
    Int result = 1;
    Int b = base;
    while (exp) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::string ratio_string(const Ratio& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Fixed-point decimal rendering of an exact rational, rounded to nearest
// (ties away from zero). Display-only; never fed back into computation.
inline std::string decimal_string(const Ratio& r, int places = 6) {
    Int num = numerator(r);
    Int den = denominator(r);
    bool neg = num < 0;
    if (neg) num = -num;
    Int scaled = num * ipow(10, places);
    Int q = scaled / den;
    Int rem = scaled % den;
    if (2 * rem >= den) ++q;
    Int whole = q / ipow(10, places);
    Int frac = q % ipow(10, places);
    std::string fs = frac.str();
    fs.insert(fs.begin(), places - fs.size(), '0');
    return (neg ? "-" : "") + whole.str() + "." + fs;
}

}  // namespace sdeg
