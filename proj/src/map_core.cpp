#include "catlab/map_core.hpp"

#include "catlab/errors.hpp"
#include "catlab/numeric.hpp"
#include "catlab/period_analysis.hpp"

#include <string>

namespace catlab {

Modulus::Modulus(std::int64_t n) : n_(n) {
    if (n < 1 || n > max_value) {
        throw DomainError("modulus must be in [1, 2147483647], got " + std::to_string(n));
    }
}

bool is_valid(LatticePoint p, Modulus mod) noexcept {
    return p.x >= 0 && p.y >= 0 && p.x < mod.value() && p.y < mod.value();
}

LatticePoint make_point(std::int64_t x, std::int64_t y, Modulus mod) {
    LatticePoint p{x, y};
    if (!is_valid(p, mod)) {
        throw DomainError("point (" + std::to_string(x) + ", " + std::to_string(y) +
                          ") lies outside the " + std::to_string(mod.value()) + "x" +
                          std::to_string(mod.value()) + " lattice");
    }
    return p;
}

CatMatrix::CatMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : m_{a, b, c, d} {
    // Entries beyond 2^31 could overflow the determinant.
    constexpr std::int64_t limit = std::int64_t{1} << 31;
    for (auto e : {a, b, c, d}) {
        if (e <= -limit || e >= limit) throw DomainError("matrix entry out of range");
    }
    if (m_.determinant() != 1) {
        throw DomainError("cat matrix must have determinant 1, got " +
                          std::to_string(m_.determinant()));
    }
}

Mat2 reduce(const Mat2& m, Modulus mod) {
    return {mod.reduce(m.a), mod.reduce(m.b), mod.reduce(m.c), mod.reduce(m.d)};
}

// Operands must already be reduced; n < 2^31 keeps each sum of two products below 2^63.
Mat2 mul_mod(const Mat2& l, const Mat2& r, Modulus mod) {
    const std::int64_t n = mod.value();
    return {(l.a * r.a + l.b * r.c) % n, (l.a * r.b + l.b * r.d) % n,
            (l.c * r.a + l.d * r.c) % n, (l.c * r.b + l.d * r.d) % n};
}

Mat2 matrix_pow_mod(const Mat2& m, std::uint64_t k, Modulus mod) {
    Mat2 result = reduce(Mat2::identity(), mod);
    Mat2 base = reduce(m, mod);
    while (k > 0) {
        if (k & 1U) result = mul_mod(result, base, mod);
        base = mul_mod(base, base, mod);
        k >>= 1U;
    }
    return result;
}

Mat2 matrix_pow_mod(const CatMatrix& m, std::uint64_t k, Modulus mod) {
    return matrix_pow_mod(m.entries(), k, mod);
}

bool is_identity_mod(const Mat2& m, Modulus mod) {
    return reduce(m, mod) == reduce(Mat2::identity(), mod);
}

LatticePoint apply_mat(LatticePoint p, const Mat2& m, Modulus mod) noexcept {
    const std::int64_t n = mod.value();
    return {(m.a * p.x + m.b * p.y) % n, (m.c * p.x + m.d * p.y) % n};
}

LatticePoint apply_point(LatticePoint p, const CatMatrix& m, Modulus mod) {
    return apply_mat(p, reduce(m.entries(), mod), mod);
}

LatticePoint invert_point(LatticePoint p, const CatMatrix& m, Modulus mod) {
    return apply_point(p, m.inverse(), mod);
}

Orbit orbit_of(LatticePoint p, Modulus mod) {
    if (!is_valid(p, mod)) make_point(p.x, p.y, mod);
    Orbit orbit{p, {p}, 1};
    for (LatticePoint q = canonical_step(p, mod); !(q == p); q = canonical_step(q, mod)) {
        orbit.points.push_back(q);
    }
    orbit.length = orbit.points.size();
    return orbit;
}

std::uint64_t orbit_length(LatticePoint p, Modulus mod) {
    if (!is_valid(p, mod)) make_point(p.x, p.y, mod);
    std::uint64_t length = 1;
    for (LatticePoint q = canonical_step(p, mod); !(q == p); q = canonical_step(q, mod)) {
        ++length;
    }
    return length;
}

std::uint64_t exact_period(Modulus mod) {
    const std::int64_t n = mod.value();
    if (n == 1) return 1;
    const std::uint64_t cap = dyson_falk_bound(static_cast<std::uint64_t>(n));

    // power = canonical^m; right-multiplying by [1 1; 1 2] needs only additions.
    Mat2 power = reduce(CatMatrix::canonical().entries(), mod);
    for (std::uint64_t m = 1; m <= cap; ++m) {
        if (power.a == 1 && power.b == 0 && power.c == 0 && power.d == 1) return m;
        const std::int64_t b = (power.a + power.b) % n;
        const std::int64_t d = (power.c + power.d) % n;
        power = {b, (b + power.b) % n, d, (d + power.d) % n};
    }
    throw InvariantViolation("no period found within the Dyson-Falk bound " +
                             std::to_string(cap) + " for n = " + std::to_string(n));
}

std::uint64_t exact_period_factored(Modulus mod) {
    if (mod.value() == 1) return 1;
    const Factorization f = factorize(static_cast<std::uint64_t>(mod.value()));
    std::uint64_t result = 1;
    for (const auto& [prime, exponent] : f.factors) {
        std::int64_t prime_power = 1;
        for (std::uint32_t i = 0; i < exponent; ++i) prime_power *= static_cast<std::int64_t>(prime);
        result = checked_lcm(result, exact_period(Modulus(prime_power)));
    }
    return result;
}

} // namespace catlab
