#include "catlab/numeric.hpp"

#include "catlab/errors.hpp"

#include <algorithm>
#include <limits>

namespace catlab {

u64 checked_lcm(u64 a, u64 b) {
    if (a == 0 || b == 0) return 0;
    const u64 step = a / std::gcd(a, b);
    if (step > std::numeric_limits<u64>::max() / b) {
        throw InvariantViolation("lcm overflows 64 bits");
    }
    return step * b;
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> low, high;
    for (u64 d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

} // namespace catlab
