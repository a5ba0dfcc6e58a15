#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace edf {

struct PrimePower {
    std::uint32_t prime;
    std::uint32_t exponent;
};

bool is_prime(std::uint64_t n);

/// Returns (p, k) with n = p^k, or nullopt when n is not a prime power (n < 2 included).
std::optional<PrimePower> prime_power(std::uint64_t n);

/// Distinct prime divisors in ascending order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Positive divisors in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

} // namespace edf
