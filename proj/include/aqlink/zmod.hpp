#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aqlink {

/// Base error type for all invalid inputs and violated preconditions.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// An odd prime p >= 3, validated by trial division (desk-scale moduli).
/// Carries the basic mod-p arithmetic used by every polynomial routine.
struct PrimeModulus {
    uint32_t p = 0;

    PrimeModulus() = default;
    explicit PrimeModulus(uint32_t prime) : p(prime) {
        if (prime < 3 || prime % 2 == 0 || !is_prime_u64(prime))
            throw error("modulus must be an odd prime >= 3, got " + std::to_string(prime));
    }

    uint32_t reduce(long long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += p;
        return static_cast<uint32_t>(r);
    }
    uint32_t add(uint32_t a, uint32_t b) const {
        uint64_t s = static_cast<uint64_t>(a) + b;
        return static_cast<uint32_t>(s >= p ? s - p : s);
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
    }
    uint32_t pow(uint32_t a, uint64_t e) const {
        uint64_t base = a % p, acc = 1;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<uint32_t>(acc);
    }
    uint32_t inv(uint32_t a) const {
        if (a % p == 0) throw error("division by zero mod " + std::to_string(p));
        return pow(a % p, p - 2);
    }
    bool operator==(const PrimeModulus& o) const { return p == o.p; }
    bool operator!=(const PrimeModulus& o) const { return p != o.p; }
};

} // namespace aqlink
