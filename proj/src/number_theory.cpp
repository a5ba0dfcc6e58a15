#include "edf/number_theory.hpp"
#include "edf/errors.hpp"

#include <numeric>

namespace edf {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column)
{
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::optional<PrimePower> prime_power(std::uint64_t n)
{
    if (n < 2)
        return std::nullopt;
    auto primes = prime_factors(n);
    if (primes.size() != 1)
        return std::nullopt;
    std::uint32_t k = 0;
    while (n > 1) {
        n /= primes.front();
        ++k;
    }
    return PrimePower{static_cast<std::uint32_t>(primes.front()), k};
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

std::uint64_t euler_phi(std::uint64_t n)
{
    std::uint64_t result = n;
    for (auto p : prime_factors(n))
        result = result / p * (p - 1);
    return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d)
                large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod)
{
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1)
            result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

} // namespace edf
