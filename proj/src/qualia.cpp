#include "catlab/qualia.hpp"

#include "catlab/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace catlab {

namespace {

class DisjointSet {
public:
    explicit DisjointSet(std::size_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> rank_;
};

std::string describe(const MatchPair& p) { return "[\"" + p.first + "\", \"" + p.second + "\"]"; }

// Components as index lists, ordered by smallest member index, members ascending.
std::vector<std::vector<std::size_t>> components(const MatchGraph& g) {
    DisjointSet ds(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (auto j : g.neighbours(i)) ds.unite(i, j);
    }
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> slot(g.size(), g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto root = ds.find(i);
        if (slot[root] == g.size()) {
            slot[root] = out.size();
            out.emplace_back();
        }
        out[slot[root]].push_back(i);
    }
    return out;
}

std::vector<QualeId> names(const MatchGraph& g, const std::vector<std::size_t>& idx) {
    std::vector<QualeId> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(g.qualia()[i]);
    return out;
}

std::vector<bool> membership(const MatchGraph& g, std::span<const QualeId> members) {
    std::vector<bool> in(g.size(), false);
    for (const auto& m : members) in[g.index_of(m)] = true;
    return in;
}

} // namespace

MatchGraph::MatchGraph(std::vector<QualeId> qualia, std::vector<MatchPair> matches)
    : qualia_(std::move(qualia)), matches_(std::move(matches)) {
    for (std::size_t i = 0; i < qualia_.size(); ++i) {
        if (!index_.emplace(qualia_[i], i).second) {
            throw FormatError("duplicate quale '" + qualia_[i] + "'");
        }
    }
    adjacency_.resize(qualia_.size());
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& pair : matches_) {
        const auto a = index_of(pair.first);
        const auto b = index_of(pair.second);
        if (a == b) throw FormatError("self-pair " + describe(pair) + " is not allowed");
        if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
            throw FormatError("duplicate match pair " + describe(pair));
        }
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool MatchGraph::contains(std::string_view id) const { return index_.count(std::string(id)) != 0; }

std::size_t MatchGraph::index_of(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) throw UnknownQuale(std::string(id));
    return it->second;
}

bool MatchGraph::matches(std::string_view a, std::string_view b) const {
    const auto i = index_of(a);
    const auto j = index_of(b);
    if (i == j) return true;
    const auto& adj = adjacency_[i];
    return std::binary_search(adj.begin(), adj.end(), j);
}

Manor manor_of(const MatchGraph& g, std::string_view quale) {
    const auto c = g.index_of(quale);
    std::vector<std::size_t> idx = g.neighbours(c);
    idx.insert(std::upper_bound(idx.begin(), idx.end(), c), c);
    return {g.qualia()[c], names(g, idx)};
}

bool is_m_path(const MatchGraph& g, std::string_view a, std::string_view b) {
    const auto from = g.index_of(a);
    const auto to = g.index_of(b);
    if (from == to) return true;
    std::vector<bool> seen(g.size(), false);
    std::deque<std::size_t> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
        const auto cur = queue.front();
        queue.pop_front();
        for (auto next : g.neighbours(cur)) {
            if (next == to) return true;
            if (!seen[next]) {
                seen[next] = true;
                queue.push_back(next);
            }
        }
    }
    return false;
}

ClanPartition clan_partition(const MatchGraph& g) {
    ClanPartition p;
    for (const auto& comp : components(g)) p.clans.push_back(names(g, comp));
    return p;
}

std::vector<std::vector<QualeId>> categories(const MatchGraph& g) { return clan_partition(g).clans; }

bool is_clan(const MatchGraph& g, std::span<const QualeId> members) {
    if (members.empty()) return false;
    const auto in = membership(g, members);
    const auto start = g.index_of(members.front());
    std::vector<bool> seen(g.size(), false);
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const auto cur = queue.front();
        queue.pop_front();
        for (auto next : g.neighbours(cur)) {
            if (in[next] && !seen[next]) {
                seen[next] = true;
                ++reached;
                queue.push_back(next);
            }
        }
    }
    return reached == static_cast<std::size_t>(std::count(in.begin(), in.end(), true));
}

bool is_category(const MatchGraph& g, std::span<const QualeId> members) {
    if (!is_clan(g, members)) return false;
    const auto in = membership(g, members);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!in[i]) continue;
        for (auto j : g.neighbours(i)) {
            if (!in[j]) return false;
        }
    }
    return true;
}

std::vector<QualeId> realm(const MatchGraph& g, std::span<const std::vector<QualeId>> selected) {
    std::vector<bool> in(g.size(), false);
    for (const auto& cat : selected) {
        if (!is_category(g, cat)) throw DomainError("realm parts must be categories");
        for (const auto& q : cat) in[g.index_of(q)] = true;
    }
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (in[i]) idx.push_back(i);
    }
    return names(g, idx);
}

MatchGraph expand_linear_span(const LinearSpanArray& arr) {
    if (arr.count == 0) throw DomainError("linear array needs at least one quale");
    std::vector<QualeId> qualia;
    qualia.reserve(arr.count);
    for (std::uint64_t i = 1; i <= arr.count; ++i) qualia.push_back(std::to_string(i));
    std::vector<MatchPair> pairs;
    for (std::uint64_t i = 1; i <= arr.count; ++i) {
        for (std::uint64_t j = i + 1; j <= arr.count && j - i <= arr.span; ++j) {
            pairs.emplace_back(qualia[i - 1], qualia[j - 1]);
        }
    }
    return MatchGraph(std::move(qualia), std::move(pairs));
}

std::string_view to_string(NetworkKind k) noexcept {
    switch (k) {
    case NetworkKind::SquareCell: return "square";
    case NetworkKind::TriangularCell: return "triangular";
    case NetworkKind::CubicalCell: return "cubical";
    }
    return "?";
}

NetworkKind parse_network_kind(std::string_view name) {
    for (auto k : {NetworkKind::SquareCell, NetworkKind::TriangularCell, NetworkKind::CubicalCell}) {
        if (name == to_string(k)) return k;
    }
    throw DomainError("unknown network kind '" + std::string(name) +
                      "' (expected square, triangular or cubical)");
}

std::uint64_t max_manor_size(NetworkKind kind, std::uint64_t n) {
    switch (kind) {
    case NetworkKind::SquareCell: return 1 + 2 * n * (n + 1);
    case NetworkKind::TriangularCell: return 1 + 3 * n * (n + 1);
    case NetworkKind::CubicalCell: return 1 + 2 * n + 2 * n * (n + 1) * (2 * n + 1) / 3;
    }
    return 0;
}

std::int64_t axial_distance(std::int64_t dq, std::int64_t dr) noexcept {
    const auto abs = [](std::int64_t v) { return v < 0 ? -v : v; };
    return (abs(dq) + abs(dr) + abs(dq + dr)) / 2;
}

std::uint64_t brute_force_max_manor(NetworkKind kind, std::int64_t n) {
    if (n < 0 || n > 20) throw DomainError("brute-force manor radius must be in [0, 20]");
    using Cell = std::array<std::int64_t, 3>;
    std::vector<Cell> steps;
    switch (kind) {
    case NetworkKind::SquareCell: steps = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}}; break;
    case NetworkKind::TriangularCell:
        // Axial (q, r) neighbours.
        steps = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {1, -1, 0}, {-1, 1, 0}};
        break;
    case NetworkKind::CubicalCell:
        steps = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
        break;
    }
    std::set<Cell> seen{{0, 0, 0}};
    std::vector<Cell> frontier{{0, 0, 0}};
    for (std::int64_t depth = 0; depth < n; ++depth) {
        std::vector<Cell> next;
        for (const auto& c : frontier) {
            for (const auto& s : steps) {
                const Cell nb{c[0] + s[0], c[1] + s[1], c[2] + s[2]};
                if (seen.insert(nb).second) next.push_back(nb);
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

MatchGraph match_graph_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("match graph is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("match graph must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "qualia" && key != "matches") throw FormatError("unknown key '" + key + "' in match graph");
    }
    if (!doc.contains("qualia") || !doc["qualia"].is_array()) {
        throw FormatError("match graph needs a \"qualia\" array");
    }
    if (!doc.contains("matches") || !doc["matches"].is_array()) {
        throw FormatError("match graph needs a \"matches\" array");
    }

    std::vector<QualeId> qualia;
    for (const auto& q : doc["qualia"]) {
        if (!q.is_string()) throw FormatError("quale identifiers must be strings");
        qualia.push_back(q.get<std::string>());
    }
    std::vector<MatchPair> pairs;
    for (const auto& m : doc["matches"]) {
        if (!m.is_array() || m.size() != 2 || !m[0].is_string() || !m[1].is_string()) {
            throw FormatError("each match must be a two-element list of identifiers, got " + m.dump());
        }
        pairs.emplace_back(m[0].get<std::string>(), m[1].get<std::string>());
    }
    try {
        return MatchGraph(std::move(qualia), std::move(pairs));
    } catch (const UnknownQuale& e) {
        throw FormatError(std::string("match references ") + e.what());
    }
}

std::string match_graph_to_json(const MatchGraph& g) {
    nlohmann::ordered_json doc;
    doc["qualia"] = g.qualia();
    doc["matches"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : g.match_pairs()) doc["matches"].push_back({a, b});
    return doc.dump(2) + "\n";
}

} // namespace catlab
