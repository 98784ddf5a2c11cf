#pragma once

// Independent brute-force oracles used only by tests. Nothing here calls into
// the code paths it is used to check.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

struct M2 {
    std::int64_t a, b, c, d;
    bool operator==(const M2&) const = default;
};

inline M2 mul(M2 l, M2 r, std::int64_t n) {
    return {(l.a * r.a + l.b * r.c) % n, (l.a * r.b + l.b * r.d) % n, (l.c * r.a + l.d * r.c) % n,
            (l.c * r.b + l.d * r.d) % n};
}

// m^k by k - 1 plain multiplications.
inline M2 naive_power(M2 m, std::uint64_t k, std::int64_t n) {
    M2 r{1 % n, 0, 0, 1 % n};
    for (std::uint64_t i = 0; i < k; ++i) r = mul(r, m, n);
    return r;
}

// Least m >= 1 with [1 1; 1 2]^m = I mod n, no cap other than 6n (never reached for n >= 1).
inline std::uint64_t naive_period(std::int64_t n) {
    if (n == 1) return 1;
    const M2 cat{1, 1, 1, 2}, id{1, 0, 0, 1};
    M2 p = cat;
    for (std::uint64_t m = 1; m <= 6 * static_cast<std::uint64_t>(n); ++m) {
        if (p == id) return m;
        p = mul(p, cat, n);
    }
    return 0;
}

// lcm of all point orbit lengths, enumerated point by point.
inline std::uint64_t orbit_lcm(std::int64_t n) {
    std::uint64_t l = 1;
    for (std::int64_t y = 0; y < n; ++y) {
        for (std::int64_t x = 0; x < n; ++x) {
            std::int64_t px = x, py = y;
            std::uint64_t len = 0;
            do {
                const std::int64_t nx = (px + py) % n;
                py = (px + 2 * py) % n;
                px = nx;
                ++len;
            } while (px != x || py != y);
            l = std::lcm(l, len);
        }
    }
    return l;
}

// One scatter step on a row-major grid: value at (x, y) moves to (x + y, x + 2y).
inline std::vector<std::uint8_t> step_grid(const std::vector<std::uint8_t>& g, std::int64_t n) {
    std::vector<std::uint8_t> out(g.size());
    for (std::int64_t y = 0; y < n; ++y) {
        for (std::int64_t x = 0; x < n; ++x) {
            out[static_cast<std::size_t>(((x + 2 * y) % n) * n + (x + y) % n)] = g[static_cast<std::size_t>(y * n + x)];
        }
    }
    return out;
}

// Smallest m >= 1 restoring the grid, by repeated single steps.
inline std::uint64_t brute_recurrence(const std::vector<std::uint8_t>& g, std::int64_t n) {
    auto cur = step_grid(g, n);
    std::uint64_t m = 1;
    while (cur != g) {
        cur = step_grid(cur, n);
        ++m;
    }
    return m;
}

inline std::vector<std::uint8_t> random_grid(std::int64_t n, std::mt19937_64& rng, int levels = 256) {
    std::uniform_int_distribution<int> dist(0, levels - 1);
    std::vector<std::uint8_t> g(static_cast<std::size_t>(n * n));
    for (auto& v : g) v = static_cast<std::uint8_t>(dist(rng) * (255 / std::max(1, levels - 1)));
    return g;
}

} // namespace oracle
