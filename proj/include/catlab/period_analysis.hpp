#pragma once

// Prime factorization of the lattice size and the Dyson-Falk upper bound on
// the cat map period:
//
//   N = (prod p^alpha)(prod q^beta) 5^gamma 2^delta
//   2 m* = lcm[(p-1)p^(alpha-1), 2(q+1)q^(beta-1), 2*10*5^(gamma-1), 3*2^eps],
//   eps = max(delta - 1, 1)
//
// p ranges over primes = +-1 (mod 5), q over primes = +-2 (mod 5).

#include <cstdint>
#include <string_view>
#include <vector>

namespace catlab {

struct PrimePower {
    std::uint64_t prime = 0;
    std::uint32_t exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    std::uint64_t n = 0;
    std::vector<PrimePower> factors; // increasing prime order

    std::uint64_t product() const;
};

/// Trial division. Throws DomainError for n < 2.
Factorization factorize(std::uint64_t n);

enum class PrimeClass { PType, QType, Five, Two };

std::string_view to_string(PrimeClass c) noexcept;

/// Throws DomainError if the argument is not prime.
PrimeClass classify_prime(std::uint64_t prime);

struct BoundTerm {
    std::uint64_t prime = 0;
    std::uint32_t exponent = 0;
    PrimeClass prime_class = PrimeClass::PType;
    std::uint64_t value = 0;

    friend bool operator==(const BoundTerm&, const BoundTerm&) = default;
};

BoundTerm bound_term(PrimePower factor);
/// One term per prime-power factor, in factor order.
std::vector<BoundTerm> bound_terms(const Factorization& f);

struct BoundResult {
    std::uint64_t lcm = 0;      // 2 m* when even
    std::uint64_t m_star = 0;
    bool odd_lcm = false;       // lcm was odd and m* was rounded up
};

BoundResult bound_from_terms(const std::vector<BoundTerm>& terms);

/// m*. Throws DomainError for n < 2.
std::uint64_t dyson_falk_bound(std::uint64_t n);

struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// Reduced fraction num/den.
Ratio make_ratio(std::uint64_t num, std::uint64_t den);

struct PeriodReport {
    std::uint64_t n = 0;
    std::uint64_t exact_period = 0;
    std::uint64_t bound = 0;
    std::uint64_t bound_lcm = 0;
    bool odd_lcm = false;
    std::vector<BoundTerm> terms;
    Ratio ratio;
};

/// Throws DomainError for n < 2 or n beyond the lattice modulus range.
PeriodReport period_report(std::uint64_t n);

} // namespace catlab
