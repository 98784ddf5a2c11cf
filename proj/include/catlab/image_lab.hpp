#pragma once

// Configurations (N x N grayscale grids) moved around by the cat map.
//
// Iterating a configuration scatters: the value at p moves to map(p). After
// k steps the value found at p' is the one that started at map^-k(p').

#include "catlab/map_core.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace catlab {

class Configuration {
public:
    /// All cells zero.
    explicit Configuration(Modulus mod);
    /// Throws DomainError unless cells.size() == n^2.
    Configuration(Modulus mod, std::vector<std::uint8_t> cells);

    Modulus modulus() const noexcept { return mod_; }
    std::int64_t side() const noexcept { return mod_.value(); }

    std::uint8_t at(LatticePoint p) const { return cells_[linear_index(p, mod_)]; }
    void set(LatticePoint p, std::uint8_t v) { cells_[linear_index(p, mod_)] = v; }

    std::span<const std::uint8_t> cells() const noexcept { return cells_; }
    std::span<std::uint8_t> cells() noexcept { return cells_; }

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    Modulus mod_;
    std::vector<std::uint8_t> cells_;
};

/// Lattice sides above this are rejected by the cycle and image operations
/// (cell indices are stored as 32-bit values).
inline constexpr std::int64_t max_image_side = 65535;

/// The configuration after k applications of the canonical map. Single pass
/// through map^k; workers > 1 splits the rows across threads with identical output.
Configuration iterate_configuration(const Configuration& c, std::uint64_t k, unsigned workers = 1);

/// Disjoint cycles of the canonical map covering every lattice point.
/// Cycles are discovered in row-major order of their first point; each cycle
/// lists start, map(start), map^2(start), ...
class CycleDecomposition {
public:
    explicit CycleDecomposition(Modulus mod);

    Modulus modulus() const noexcept { return mod_; }
    std::size_t cycle_count() const noexcept { return lengths_.size(); }
    std::span<const std::uint32_t> cycle(std::size_t i) const;
    std::span<const std::uint64_t> cycle_lengths() const noexcept { return lengths_; }
    /// lcm of all cycle lengths.
    std::uint64_t lcm_of_lengths() const;

private:
    Modulus mod_;
    std::vector<std::uint32_t> points_; // linear indices, concatenated cycle by cycle
    std::vector<std::uint64_t> offsets_;
    std::vector<std::uint64_t> lengths_;
};

CycleDecomposition cycle_decomposition(Modulus mod);

struct CycleRecurrence {
    std::uint64_t cycle_length = 0;
    std::uint64_t minimal_period = 0; // smallest d | length with values d-periodic along the cycle
    std::uint64_t count = 0;

    friend bool operator==(const CycleRecurrence&, const CycleRecurrence&) = default;
};

struct RecurrenceReport {
    std::int64_t n = 0;
    std::uint64_t recurrence_time = 0;
    std::uint64_t exact_period = 0;
    std::optional<std::uint64_t> bound; // absent for n = 1
    std::vector<CycleRecurrence> cycles; // grouped, sorted by (cycle_length, minimal_period)
};

/// Smallest m >= 1 with iterate_configuration(c, m) == c, from the cycle structure.
RecurrenceReport configuration_recurrence(const Configuration& c);
RecurrenceReport configuration_recurrence(const Configuration& c, const CycleDecomposition& cycles);

/// min(|dx|, n-|dx|) + min(|dy|, n-|dy|)
std::int64_t toroidal_l1(LatticePoint a, LatticePoint b, Modulus mod) noexcept;

struct DispersionSample {
    std::uint64_t step = 0;
    double mean_distance = 0.0;
};

/// Mean toroidal distance between the images of horizontally adjacent pairs
/// for steps 0..k_max. All pairs for n <= 256, a fixed stride of pairs above.
/// Throws DomainError for n < 2.
std::vector<DispersionSample> dispersion_curve(Modulus mod, std::uint64_t k_max);

enum class PgmMode { Strict, Lenient };

/// Reads P2 or P5. Square images only. Strict mode requires maxval 255;
/// lenient mode rescales other maxvals to 0..255 and appends a warning.
Configuration load_pgm(std::string_view bytes, PgmMode mode = PgmMode::Strict,
                       std::vector<std::string>* warnings = nullptr);
/// Always P5, maxval 255.
std::string save_pgm(const Configuration& c);

/// step_0000.pgm, step_0001.pgm, ...; wider past 9999.
std::string snapshot_filename(std::uint64_t step);

} // namespace catlab
