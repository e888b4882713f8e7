#include "packcol/formulas.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace packcol {

namespace {

constexpr std::uint64_t kMaxInput = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());

void require_modulus(std::uint64_t n) {
    if (n < 2 || n > kMaxInput)
        throw std::invalid_argument("modulus must lie in 2..2^63-1, got " + std::to_string(n));
}

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

} // namespace

std::uint64_t Factorization::value() const {
    std::uint64_t v = 1;
    for (const auto &f : factors)
        v *= ipow(f.prime, f.exponent);
    return v;
}

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

Factorization factorize(std::uint64_t n) {
    require_modulus(n);
    Factorization f;
    for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0)
            continue;
        int r = 0;
        while (n % p == 0) {
            n /= p;
            ++r;
        }
        f.factors.push_back({p, r});
    }
    if (n > 1)
        f.factors.push_back({n, 1});
    return f;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 1)
        return 1;
    std::uint64_t phi = n;
    for (const auto &[p, r] : factorize(n).factors)
        phi = phi / p * (p - 1);
    return phi;
}

int diameter_formula(std::uint64_t n) {
    auto f = factorize(n);
    if (f.distinct_primes() == 1)
        return f.factors[0].exponent == 1 ? 1 : 2;
    return f.factors[0].prime == 2 ? 3 : 2;
}

std::uint64_t independence_formula(std::uint64_t n) {
    auto f = factorize(n);
    return n / f.factors[0].prime;
}

std::uint64_t packing_chromatic_formula(std::uint64_t n) {
    auto f = factorize(n);
    const auto p1 = f.factors[0].prime;
    if (f.distinct_primes() == 1 && f.factors[0].exponent == 1)
        return n; // complete graph
    // n - alpha colors on the non-independent part, one shared color for a
    // maximum independent set
    return n - n / p1 + 1;
}

} // namespace packcol
