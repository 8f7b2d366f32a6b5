#pragma once

#include <cstdint>
#include <vector>

namespace largeness {

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n in increasing order (empty for n <= 1).
/// Trial division up to 10^6, then Pollard-rho on the cofactor.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace largeness
