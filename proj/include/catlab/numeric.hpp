#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace catlab {

using u64 = std::uint64_t;

// Overflow-checked lcm; throws InvariantViolation when the result exceeds 64 bits.
u64 checked_lcm(u64 a, u64 b);

// Divisors of n in increasing order (trial division up to sqrt(n)).
std::vector<u64> divisors(u64 n);

bool is_prime(u64 n);

} // namespace catlab
