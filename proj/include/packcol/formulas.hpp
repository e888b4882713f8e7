#pragma once

#include <cstdint>
#include <vector>

namespace packcol {

struct PrimePower {
    std::uint64_t prime;
    int exponent;
    friend bool operator==(const PrimePower &, const PrimePower &) = default;
};

/// Prime factorization with primes strictly increasing.
struct Factorization {
    std::vector<PrimePower> factors;

    int distinct_primes() const { return static_cast<int>(factors.size()); }
    std::uint64_t value() const;
    friend bool operator==(const Factorization &, const Factorization &) = default;
};

bool is_prime(std::uint64_t n);

/// Trial division. Throws std::invalid_argument for n < 2 or n > 2^63 - 1.
Factorization factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

// Closed forms for the unitary Cayley graph of Z_n (u ~ v iff gcd(u - v, n) = 1).
// All throw std::invalid_argument for n < 2.

/// 1 for prime n, 2 for prime powers and for odd n with at least two distinct
/// primes, 3 for even n with at least two distinct primes.
int diameter_formula(std::uint64_t n);

/// n / p where p is the smallest prime factor of n.
std::uint64_t independence_formula(std::uint64_t n);

/// n for prime n, otherwise n - n/p + 1 with p the smallest prime factor.
std::uint64_t packing_chromatic_formula(std::uint64_t n);

} // namespace packcol
