#include "catlab/period_analysis.hpp"

#include "catlab/errors.hpp"
#include "catlab/map_core.hpp"
#include "catlab/numeric.hpp"

#include <string>

namespace catlab {

namespace {

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace

std::uint64_t Factorization::product() const {
    std::uint64_t r = 1;
    for (const auto& f : factors) r *= ipow(f.prime, f.exponent);
    return r;
}

Factorization factorize(std::uint64_t n) {
    if (n < 2) throw DomainError("factorize requires n >= 2, got " + std::to_string(n));
    Factorization f{n, {}};
    std::uint64_t rest = n;
    for (std::uint64_t d = 2; d * d <= rest; d += (d == 2 ? 1 : 2)) {
        std::uint32_t e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        if (e > 0) f.factors.push_back({d, e});
    }
    if (rest > 1) f.factors.push_back({rest, 1});
    return f;
}

std::string_view to_string(PrimeClass c) noexcept {
    switch (c) {
    case PrimeClass::PType: return "P";
    case PrimeClass::QType: return "Q";
    case PrimeClass::Five: return "five";
    case PrimeClass::Two: return "two";
    }
    return "?";
}

PrimeClass classify_prime(std::uint64_t prime) {
    if (!is_prime(prime)) throw DomainError(std::to_string(prime) + " is not prime");
    if (prime == 2) return PrimeClass::Two;
    if (prime == 5) return PrimeClass::Five;
    const auto r = prime % 5;
    return (r == 1 || r == 4) ? PrimeClass::PType : PrimeClass::QType;
}

BoundTerm bound_term(PrimePower factor) {
    const auto [p, e] = factor;
    if (e == 0) throw DomainError("prime power exponent must be >= 1");
    BoundTerm t{p, e, classify_prime(p), 0};
    switch (t.prime_class) {
    case PrimeClass::PType: t.value = (p - 1) * ipow(p, e - 1); break;
    case PrimeClass::QType: t.value = 2 * (p + 1) * ipow(p, e - 1); break;
    case PrimeClass::Five: t.value = 2 * 10 * ipow(5, e - 1); break;
    case PrimeClass::Two: {
        const std::uint32_t eps = e - 1 > 1 ? e - 1 : 1;
        t.value = 3 * ipow(2, eps);
        break;
    }
    }
    return t;
}

std::vector<BoundTerm> bound_terms(const Factorization& f) {
    std::vector<BoundTerm> terms;
    terms.reserve(f.factors.size());
    for (const auto& pp : f.factors) terms.push_back(bound_term(pp));
    return terms;
}

BoundResult bound_from_terms(const std::vector<BoundTerm>& terms) {
    BoundResult r;
    r.lcm = 1;
    for (const auto& t : terms) r.lcm = checked_lcm(r.lcm, t.value);
    r.odd_lcm = (r.lcm % 2) != 0;
    r.m_star = (r.lcm + 1) / 2;
    return r;
}

std::uint64_t dyson_falk_bound(std::uint64_t n) {
    return bound_from_terms(bound_terms(factorize(n))).m_star;
}

Ratio make_ratio(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw DomainError("ratio denominator is zero");
    const auto g = std::gcd(num, den);
    return {num / g, den / g};
}

PeriodReport period_report(std::uint64_t n) {
    if (n < 2) throw DomainError("the period bound requires n >= 2, got " + std::to_string(n));
    if (n > static_cast<std::uint64_t>(Modulus::max_value)) {
        throw DomainError("n exceeds the supported lattice size");
    }
    PeriodReport r;
    r.n = n;
    r.terms = bound_terms(factorize(n));
    const BoundResult b = bound_from_terms(r.terms);
    r.bound = b.m_star;
    r.bound_lcm = b.lcm;
    r.odd_lcm = b.odd_lcm;
    r.exact_period = exact_period(Modulus(static_cast<std::int64_t>(n)));
    if (r.exact_period > r.bound) {
        throw InvariantViolation("exact period exceeds the bound for n = " + std::to_string(n));
    }
    r.ratio = make_ratio(r.exact_period, r.bound);
    return r;
}

} // namespace catlab
