#include "catlab/image_lab.hpp"

#include "catlab/errors.hpp"
#include "catlab/numeric.hpp"
#include "catlab/period_analysis.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <thread>
#include <utility>

namespace catlab {

namespace {

void check_image_side(Modulus mod) {
    if (mod.value() > max_image_side) {
        throw DomainError("image side " + std::to_string(mod.value()) + " exceeds " +
                          std::to_string(max_image_side));
    }
}

} // namespace

Configuration::Configuration(Modulus mod) : mod_(mod) {
    check_image_side(mod);
    cells_.assign(mod.cell_count(), 0);
}

Configuration::Configuration(Modulus mod, std::vector<std::uint8_t> cells)
    : mod_(mod), cells_(std::move(cells)) {
    check_image_side(mod);
    if (cells_.size() != mod.cell_count()) {
        throw DomainError("configuration needs " + std::to_string(mod.cell_count()) +
                          " cells, got " + std::to_string(cells_.size()));
    }
}

Configuration iterate_configuration(const Configuration& c, std::uint64_t k, unsigned workers) {
    if (k == 0) return c;
    const Modulus mod = c.modulus();
    const std::int64_t n = mod.value();
    const Mat2 power = matrix_pow_mod(CatMatrix::canonical(), k, mod);

    Configuration out(mod);
    const auto src = c.cells();
    auto dst = out.cells();
    // map^k is a bijection, so row bands write disjoint destination cells.
    auto scatter_rows = [&](std::int64_t y_begin, std::int64_t y_end) {
        for (std::int64_t y = y_begin; y < y_end; ++y) {
            for (std::int64_t x = 0; x < n; ++x) {
                const LatticePoint from{x, y};
                dst[linear_index(apply_mat(from, power, mod), mod)] = src[linear_index(from, mod)];
            }
        }
    };

    const auto bands = static_cast<std::int64_t>(std::clamp<unsigned>(workers, 1U, 64U));
    if (bands == 1 || n < 2 * bands) {
        scatter_rows(0, n);
        return out;
    }
    std::vector<std::jthread> threads;
    threads.reserve(static_cast<std::size_t>(bands));
    for (std::int64_t b = 0; b < bands; ++b) {
        threads.emplace_back(scatter_rows, n * b / bands, n * (b + 1) / bands);
    }
    threads.clear();
    return out;
}

CycleDecomposition::CycleDecomposition(Modulus mod) : mod_(mod) {
    check_image_side(mod);
    const std::uint64_t total = mod.cell_count();
    std::vector<bool> visited(total, false);
    points_.reserve(total);
    for (std::uint64_t start = 0; start < total; ++start) {
        if (visited[start]) continue;
        offsets_.push_back(points_.size());
        std::uint64_t idx = start;
        do {
            visited[idx] = true;
            points_.push_back(static_cast<std::uint32_t>(idx));
            idx = linear_index(canonical_step(point_at(idx, mod), mod), mod);
        } while (idx != start);
        lengths_.push_back(points_.size() - offsets_.back());
    }
    if (points_.size() != total) {
        throw InvariantViolation("cycle decomposition does not cover the lattice");
    }
}

std::span<const std::uint32_t> CycleDecomposition::cycle(std::size_t i) const {
    return std::span<const std::uint32_t>(points_).subspan(offsets_.at(i), lengths_.at(i));
}

std::uint64_t CycleDecomposition::lcm_of_lengths() const {
    std::uint64_t r = 1;
    for (auto len : lengths_) r = checked_lcm(r, len);
    return r;
}

CycleDecomposition cycle_decomposition(Modulus mod) { return CycleDecomposition(mod); }

RecurrenceReport configuration_recurrence(const Configuration& c) {
    return configuration_recurrence(c, CycleDecomposition(c.modulus()));
}

RecurrenceReport configuration_recurrence(const Configuration& c, const CycleDecomposition& cycles) {
    if (!(cycles.modulus() == c.modulus())) {
        throw DomainError("cycle decomposition was built for a different lattice size");
    }
    const auto cells = c.cells();
    std::map<std::uint64_t, std::vector<std::uint64_t>> divisor_cache;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> groups;
    std::vector<std::uint8_t> values;

    RecurrenceReport report;
    report.n = c.side();
    report.recurrence_time = 1;
    for (std::size_t i = 0; i < cycles.cycle_count(); ++i) {
        const auto cyc = cycles.cycle(i);
        const std::uint64_t len = cyc.size();
        values.clear();
        for (auto idx : cyc) values.push_back(cells[idx]);

        auto [it, inserted] = divisor_cache.try_emplace(len);
        if (inserted) it->second = divisors(len);
        std::uint64_t period = len;
        for (auto d : it->second) {
            bool periodic = true;
            for (std::uint64_t j = 0; j + d < len && periodic; ++j) {
                periodic = values[j] == values[j + d];
            }
            if (periodic) {
                period = d;
                break;
            }
        }
        ++groups[{len, period}];
        report.recurrence_time = checked_lcm(report.recurrence_time, period);
    }
    for (const auto& [key, count] : groups) {
        report.cycles.push_back({key.first, key.second, count});
    }

    report.exact_period = exact_period(c.modulus());
    if (c.side() >= 2) report.bound = dyson_falk_bound(static_cast<std::uint64_t>(c.side()));
    if (report.exact_period % report.recurrence_time != 0) {
        throw InvariantViolation("recurrence time does not divide the exact period");
    }
    return report;
}

std::int64_t toroidal_l1(LatticePoint a, LatticePoint b, Modulus mod) noexcept {
    const std::int64_t n = mod.value();
    auto axis = [n](std::int64_t u, std::int64_t v) {
        const std::int64_t d = u > v ? u - v : v - u;
        return std::min(d, n - d);
    };
    return axis(a.x, b.x) + axis(a.y, b.y);
}

std::vector<DispersionSample> dispersion_curve(Modulus mod, std::uint64_t k_max) {
    if (mod.value() < 2) throw DomainError("dispersion needs n >= 2");
    constexpr std::uint64_t full_limit = 256ULL * 256ULL;
    const std::uint64_t total = mod.cell_count();
    const std::uint64_t stride = total <= full_limit ? 1 : (total + full_limit - 1) / full_limit;

    std::vector<std::pair<LatticePoint, LatticePoint>> pairs;
    pairs.reserve(total / stride + 1);
    for (std::uint64_t idx = 0; idx < total; idx += stride) {
        const LatticePoint p = point_at(idx, mod);
        pairs.emplace_back(p, LatticePoint{(p.x + 1) % mod.value(), p.y});
    }

    std::vector<DispersionSample> curve;
    curve.reserve(k_max + 1);
    for (std::uint64_t k = 0;; ++k) {
        std::uint64_t sum = 0;
        for (const auto& [a, b] : pairs) sum += static_cast<std::uint64_t>(toroidal_l1(a, b, mod));
        curve.push_back({k, static_cast<double>(sum) / static_cast<double>(pairs.size())});
        if (k == k_max) break;
        for (auto& [a, b] : pairs) {
            a = canonical_step(a, mod);
            b = canonical_step(b, mod);
        }
    }
    return curve;
}

std::string snapshot_filename(std::uint64_t step) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "step_%04llu.pgm", static_cast<unsigned long long>(step));
    return buf;
}

} // namespace catlab
