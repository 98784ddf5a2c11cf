#pragma once

/**
 * @file map_core.hpp
 * @brief The discrete cat map on the N x N torus lattice.
 *
 * Points (x, y) with 0 <= x, y < n are mapped by a unimodular 2x2 integer
 * matrix with all arithmetic reduced mod n. The canonical matrix is
 *
 *     [1 1]
 *     [1 2]
 *
 * i.e. (x, y) -> (x + y, x + 2y) mod n. Because the determinant is 1 the
 * induced map is a bijection of the lattice for every n, so every point lies
 * on a closed orbit and some power of the matrix is the identity mod n. The
 * least such power is the exact period m_N.
 *
 * Convention: x is the column index, y the row index.
 */

#include <cstdint>
#include <vector>

namespace catlab {

/// Side length of the lattice. Always 1 <= n <= 2^31 - 1.
class Modulus {
public:
    static constexpr std::int64_t max_value = 2147483647;

    explicit Modulus(std::int64_t n);

    std::int64_t value() const noexcept { return n_; }
    std::uint64_t cell_count() const noexcept {
        return static_cast<std::uint64_t>(n_) * static_cast<std::uint64_t>(n_);
    }

    // Least non-negative residue of v.
    std::int64_t reduce(std::int64_t v) const noexcept {
        const std::int64_t r = v % n_;
        return r < 0 ? r + n_ : r;
    }

    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    std::int64_t n_;
};

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Throws DomainError unless 0 <= x, y < n.
LatticePoint make_point(std::int64_t x, std::int64_t y, Modulus mod);
bool is_valid(LatticePoint p, Modulus mod) noexcept;

/// Row-major index y * n + x, the layout used by configurations.
inline std::uint64_t linear_index(LatticePoint p, Modulus mod) noexcept {
    return static_cast<std::uint64_t>(p.y) * static_cast<std::uint64_t>(mod.value()) +
           static_cast<std::uint64_t>(p.x);
}
inline LatticePoint point_at(std::uint64_t index, Modulus mod) noexcept {
    const auto n = static_cast<std::uint64_t>(mod.value());
    return {static_cast<std::int64_t>(index % n), static_cast<std::int64_t>(index / n)};
}

/// 2x2 integer matrix [a b; c d]. Entries are unrestricted; see CatMatrix for the unimodular kind.
struct Mat2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    static constexpr Mat2 identity() { return {1, 0, 0, 1}; }
    std::int64_t determinant() const noexcept { return a * d - b * c; }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Unimodular matrix (determinant exactly 1). Construction rejects anything else.
class CatMatrix {
public:
    CatMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    static CatMatrix canonical() { return {1, 1, 1, 2}; }

    const Mat2& entries() const noexcept { return m_; }
    /// The inverse [d -b; -c a], also unimodular.
    CatMatrix inverse() const { return {m_.d, -m_.b, -m_.c, m_.a}; }

    friend bool operator==(const CatMatrix&, const CatMatrix&) = default;

private:
    Mat2 m_;
};

LatticePoint apply_point(LatticePoint p, const CatMatrix& m, Modulus mod);
LatticePoint invert_point(LatticePoint p, const CatMatrix& m, Modulus mod);

/// Entries reduced into [0, n).
Mat2 reduce(const Mat2& m, Modulus mod);
Mat2 mul_mod(const Mat2& lhs, const Mat2& rhs, Modulus mod);
/// m^k mod n by repeated squaring; k = 0 gives the identity (reduced, so mod 1 gives all zeros).
Mat2 matrix_pow_mod(const Mat2& m, std::uint64_t k, Modulus mod);
Mat2 matrix_pow_mod(const CatMatrix& m, std::uint64_t k, Modulus mod);
bool is_identity_mod(const Mat2& m, Modulus mod);

/// (x, y) -> (x + y, x + 2y) mod n without the generic matrix path.
inline LatticePoint canonical_step(LatticePoint p, Modulus mod) noexcept {
    const std::int64_t n = mod.value();
    const std::int64_t x = (p.x + p.y) % n;
    return {x, (x + p.y) % n};
}

/// Image of p under an arbitrary (already reduced) matrix.
LatticePoint apply_mat(LatticePoint p, const Mat2& m, Modulus mod) noexcept;

struct Orbit {
    LatticePoint start;
    std::vector<LatticePoint> points; // points[0] == start; canonical map of points.back() is start
    std::uint64_t length = 0;
};

/// Full orbit of p under the canonical map. Allocates one entry per point.
Orbit orbit_of(LatticePoint p, Modulus mod);
/// Orbit length only; constant memory.
std::uint64_t orbit_length(LatticePoint p, Modulus mod);

/// Smallest m >= 1 with canonical^m = I (mod n). n = 1 gives 1.
/// The search stops at the Dyson-Falk bound; overrunning it throws InvariantViolation.
std::uint64_t exact_period(Modulus mod);

/// Same value as exact_period, computed per prime-power factor and combined by lcm.
std::uint64_t exact_period_factored(Modulus mod);

} // namespace catlab
