#pragma once

/**
 * @file qualia.hpp
 * @brief Finite matching calculus over qualia.
 *
 * A match graph is a finite set of opaque quale identifiers together with a
 * symmetric "matches" relation. Matching is reflexive by convention (every
 * quale matches itself, self-pairs are never stored) and is NOT transitive.
 * Everything here that needs the ancestral of the relation (M-paths, clans,
 * categories) computes the transitive closure explicitly; manors use the raw
 * relation only.
 *
 * Set-valued results list their members in the graph's quale order.
 */

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace catlab {

using QualeId = std::string;
using MatchPair = std::pair<QualeId, QualeId>;

class MatchGraph {
public:
    MatchGraph() = default;
    /// Throws FormatError on duplicate qualia, self-pairs, or duplicate pairs
    /// (in either orientation) and UnknownQuale for pairs naming unknown qualia.
    MatchGraph(std::vector<QualeId> qualia, std::vector<MatchPair> matches);

    std::size_t size() const noexcept { return qualia_.size(); }
    const std::vector<QualeId>& qualia() const noexcept { return qualia_; }
    /// Stored pairs in input order.
    const std::vector<MatchPair>& match_pairs() const noexcept { return matches_; }

    bool contains(std::string_view id) const;
    /// Throws UnknownQuale.
    std::size_t index_of(std::string_view id) const;
    /// Indices of qualia matching qualia_[i], excluding i itself, ascending.
    const std::vector<std::size_t>& neighbours(std::size_t i) const { return adjacency_.at(i); }
    /// The relation M with the reflexive convention applied.
    bool matches(std::string_view a, std::string_view b) const;

private:
    std::vector<QualeId> qualia_;
    std::vector<MatchPair> matches_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

struct Manor {
    QualeId center;
    std::vector<QualeId> members;
};

/// center plus every quale matching it. Throws UnknownQuale.
Manor manor_of(const MatchGraph& g, std::string_view quale);

/// True iff a chain of matches joins a and b (a == b counts). Throws UnknownQuale.
bool is_m_path(const MatchGraph& g, std::string_view a, std::string_view b);

struct ClanPartition {
    std::vector<std::vector<QualeId>> clans; // ordered by first member
};

/// Connected components of the match relation.
ClanPartition clan_partition(const MatchGraph& g);

/// Categories are the maximal clans, i.e. the same components as clan_partition.
std::vector<std::vector<QualeId>> categories(const MatchGraph& g);

/// Non-empty and connected under M using only members of the subset.
bool is_clan(const MatchGraph& g, std::span<const QualeId> members);
/// A clan that already contains every quale matching any of its members.
bool is_category(const MatchGraph& g, std::span<const QualeId> members);
/// Union of the selected categories; throws DomainError if any selection is not a category.
std::vector<QualeId> realm(const MatchGraph& g, std::span<const std::vector<QualeId>> selected);

/// Qualia "1".."count"; i matches j iff |i - j| <= span.
struct LinearSpanArray {
    std::uint64_t count = 1;
    std::uint64_t span = 0;
};

/// Throws DomainError for count == 0.
MatchGraph expand_linear_span(const LinearSpanArray& arr);

enum class NetworkKind { SquareCell, TriangularCell, CubicalCell };

std::string_view to_string(NetworkKind k) noexcept;
/// Accepts "square", "triangular", "cubical". Throws DomainError otherwise.
NetworkKind parse_network_kind(std::string_view name);

/// Closed forms: 1+2n(n+1), 1+3n(n+1), 1+2n+2n(n+1)(2n+1)/3.
std::uint64_t max_manor_size(NetworkKind kind, std::uint64_t n);

/// Breadth-first count of cells within n adjacency steps of a centre cell:
/// 4-neighbour square lattice, 6-neighbour triangular (axial hex) lattice,
/// 6-neighbour cubic lattice. Throws DomainError unless 0 <= n <= 20.
std::uint64_t brute_force_max_manor(NetworkKind kind, std::int64_t n);

/// Hex distance between axial coordinates: (|dq| + |dr| + |dq + dr|) / 2.
std::int64_t axial_distance(std::int64_t dq, std::int64_t dr) noexcept;

/// JSON document {"qualia": [...], "matches": [[a, b], ...]}. Unknown keys,
/// self-pairs and duplicate pairs are FormatErrors.
MatchGraph match_graph_from_json(std::string_view text);
std::string match_graph_to_json(const MatchGraph& g);

} // namespace catlab
