#include "graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <sstream>

namespace qdm {

Graph::Graph(int n) : n_(n), rows_(size_t(std::max(n, 0)), 0) {
    if (n < 0 || n > kMaxVertices) fail(errc::invalid_parameter, "vertex count out of range");
}

int Graph::edge_count() const {
    int total = 0;
    for (int u = 0; u < n_; ++u) total += std::popcount(rows_[u]);
    return total / 2;
}

int Graph::degree(int u) const { return std::popcount(rows_[u]); }

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) fail(errc::invalid_parameter, "edge endpoint out of range");
    if (u == v) fail(errc::invalid_parameter, "loops are not allowed");
    rows_[u] |= uint64_t(1) << v;
    rows_[v] |= uint64_t(1) << u;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int u = 0; u < n_; ++u) d[u] = degree(u);
    std::sort(d.begin(), d.end());
    return d;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.order();
    DistanceMatrix dm;
    dm.n = n;
    dm.d.assign(size_t(n) * n, kUnreachable);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        int* row = dm.d.data() + size_t(s) * n;
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            uint64_t nb = g.neighbors(u);
            while (nb) {
                int v = std::countr_zero(nb);
                nb &= nb - 1;
                if (row[v] == kUnreachable) {
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    return dm;
}

ComponentProfile components(const Graph& g) {
    const int n = g.order();
    std::vector<int> comp(n, -1);
    ComponentProfile out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int size = 0;
        std::deque<int> queue{s};
        comp[s] = s;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            ++size;
            uint64_t nb = g.neighbors(u);
            while (nb) {
                int v = std::countr_zero(nb);
                nb &= nb - 1;
                if (comp[v] < 0) {
                    comp[v] = s;
                    queue.push_back(v);
                }
            }
        }
        out.sizes.push_back(size);
    }
    std::sort(out.sizes.rbegin(), out.sizes.rend());
    return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).count() == 1; }

int diameter(const Graph& g) {
    DistanceMatrix dm = all_pairs_distances(g);
    int d = 0;
    for (int v : dm.d)
        if (v != kUnreachable) d = std::max(d, v);
    return d;
}

// ---------------------------------------------------------------------------
// graph6

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) fail(errc::invalid_parameter, "graph6 short form only covers n <= 62");
    std::string out;
    out.push_back(char(n + 63));
    int bitpos = 5;
    int acc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (g.adjacent(i, j)) acc |= 1 << bitpos;
            if (--bitpos < 0) {
                out.push_back(char(acc + 63));
                acc = 0;
                bitpos = 5;
            }
        }
    }
    if (bitpos != 5) out.push_back(char(acc + 63));
    return out;
}

Graph parse_graph6(const std::string& line) {
    std::string s = line;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) fail(errc::malformed_graph6, "empty graph6 string");
    int n = int(s[0]) - 63;
    if (n < 0 || n > 62) fail(errc::malformed_graph6, "unsupported graph6 order byte");
    size_t need = (size_t(n) * (n - 1) / 2 + 5) / 6;
    if (s.size() != 1 + need)
        fail(errc::malformed_graph6, "graph6 length mismatch (expected " +
                                         std::to_string(1 + need) + " bytes, got " +
                                         std::to_string(s.size()) + ")");
    Graph g(n);
    size_t byte = 1;
    int bitpos = 5;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            int c = int(s[byte]) - 63;
            if (c < 0 || c > 63) fail(errc::malformed_graph6, "graph6 byte out of range");
            if (c >> bitpos & 1) g.add_edge(i, j);
            if (--bitpos < 0) {
                bitpos = 5;
                ++byte;
            }
        }
    }
    if (bitpos != 5) {
        int c = int(s[byte]) - 63;
        if (c < 0 || c > 63) fail(errc::malformed_graph6, "graph6 byte out of range");
        if (c & ((1 << (bitpos + 1)) - 1)) fail(errc::malformed_graph6, "nonzero padding bits");
    }
    return g;
}

std::vector<Graph> parse_graph6_stream(const std::string& text) {
    std::vector<Graph> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

// ---------------------------------------------------------------------------
// families

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) fail(errc::invalid_parameter, "cycle needs n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph hypercube_graph(int n) {
    if (n < 1 || n > 6) fail(errc::invalid_parameter, "hypercube dimension out of range (1..6)");
    Graph g(1 << n);
    for (int i = 0; i < (1 << n); ++i)
        for (int b = 0; b < n; ++b)
            if (!(i >> b & 1)) g.add_edge(i, i | (1 << b));
    return g;
}

Graph wheel_graph(int n) {
    if (n < 3) fail(errc::invalid_parameter, "wheel needs cycle length >= 3");
    return join_graphs(cycle_graph(n), complete_graph(1));
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph kneser_graph(int n, int r) {
    if (r < 1 || n < 2 * r + 1) fail(errc::invalid_parameter, "kneser requires n >= 2r+1, r >= 1");
    std::vector<uint32_t> subsets;
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask)
        if (std::popcount(mask) == r) subsets.push_back(mask);
    if (int(subsets.size()) > kMaxVertices) fail(errc::invalid_parameter, "kneser graph too large");
    Graph g(int(subsets.size()));
    for (size_t i = 0; i < subsets.size(); ++i)
        for (size_t j = i + 1; j < subsets.size(); ++j)
            if ((subsets[i] & subsets[j]) == 0) g.add_edge(int(i), int(j));
    return g;
}

// ---------------------------------------------------------------------------
// operations

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph out(g.order() + h.order());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(u + g.order(), v + g.order());
    return out;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int m = h.order();
    Graph out(g.order() * m);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < m; ++v) {
            for (int w = v + 1; w < m; ++w)
                if (h.adjacent(v, w)) out.add_edge(u * m + v, u * m + w);
            for (int w = u + 1; w < g.order(); ++w)
                if (g.adjacent(u, w)) out.add_edge(u * m + v, w * m + v);
        }
    return out;
}

Graph join_graphs(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
    return out;
}

Graph complement(const Graph& g) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

Graph vertex_identification(const Graph& g, int u, const Graph& h, int v) {
    if (u < 0 || u >= g.order() || v < 0 || v >= h.order())
        fail(errc::invalid_parameter, "identification vertex out of range");
    Graph out(g.order() + h.order() - 1);
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    auto remap = [&](int w) { return w == v ? u : g.order() + w - (w > v ? 1 : 0); };
    for (auto [a, b] : h.edges()) out.add_edge(remap(a), remap(b));
    return out;
}

Graph attach(const Graph& g, int u, AttachKind kind, int k) {
    if (u < 0 || u >= g.order()) fail(errc::invalid_parameter, "attach vertex out of range");
    if (k < 0) fail(errc::invalid_parameter, "attach count must be nonnegative");
    Graph out(g.order() + k);
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    int base = g.order();
    switch (kind) {
    case AttachKind::pendant_path: {
        int prev = u;
        for (int i = 0; i < k; ++i) {
            out.add_edge(prev, base + i);
            prev = base + i;
        }
        break;
    }
    case AttachKind::pendant_leaves:
        for (int i = 0; i < k; ++i) out.add_edge(u, base + i);
        break;
    case AttachKind::pendant_clique:
        for (int i = 0; i < k; ++i) {
            out.add_edge(u, base + i);
            for (int j = i + 1; j < k; ++j) out.add_edge(base + i, base + j);
        }
        break;
    }
    return out;
}

std::vector<TwinPair> find_twins(const Graph& g) {
    std::vector<TwinPair> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            uint64_t mask = ~((uint64_t(1) << u) | (uint64_t(1) << v));
            if ((g.neighbors(u) & mask) == (g.neighbors(v) & mask))
                out.push_back(TwinPair{u, v, g.adjacent(u, v)});
        }
    return out;
}

// ---------------------------------------------------------------------------
// enumeration: grow one vertex at a time keeping one canonical representative
// (minimum upper-triangle bitmask over all vertex permutations) per class

namespace {

uint64_t canonical_mask(uint64_t mask, int n, const std::vector<std::vector<int>>& perms,
                        const std::vector<std::pair<int, int>>& pairs,
                        const std::vector<std::vector<int>>& pair_index) {
    uint64_t best = ~uint64_t(0);
    for (const auto& perm : perms) {
        uint64_t m = 0;
        uint64_t rest = mask;
        while (rest) {
            int bit = std::countr_zero(rest);
            rest &= rest - 1;
            auto [i, j] = pairs[bit];
            int a = perm[i], b = perm[j];
            m |= uint64_t(1) << pair_index[std::min(a, b)][std::max(a, b)];
        }
        best = std::min(best, m);
    }
    return best;
}

Graph mask_to_graph(uint64_t mask, int n, const std::vector<std::pair<int, int>>& pairs) {
    Graph g(n);
    (void)n;
    while (mask) {
        int bit = std::countr_zero(mask);
        mask &= mask - 1;
        g.add_edge(pairs[bit].first, pairs[bit].second);
    }
    return g;
}

} // namespace

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
    if (n < 1 || n > 7) fail(errc::invalid_parameter, "enumeration supported for 1 <= n <= 7");
    std::vector<uint64_t> level = {0}; // the 1-vertex graph
    for (int m = 2; m <= n; ++m) {
        std::vector<std::pair<int, int>> pairs;
        for (int j = 1; j < m; ++j)
            for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
        std::vector<std::vector<int>> pair_index(m, std::vector<int>(m, -1));
        for (size_t k = 0; k < pairs.size(); ++k) pair_index[pairs[k].first][pairs[k].second] = int(k);
        std::vector<std::vector<int>> perms;
        std::vector<int> p(m);
        std::iota(p.begin(), p.end(), 0);
        do
            perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));

        // pairs not touching the new vertex keep their indices from level m-1
        std::vector<uint64_t> next;
        for (uint64_t base : level) {
            for (uint64_t nb = 0; nb < (uint64_t(1) << (m - 1)); ++nb) {
                uint64_t mask = base;
                for (int i = 0; i < m - 1; ++i)
                    if (nb >> i & 1) mask |= uint64_t(1) << pair_index[i][m - 1];
                next.push_back(canonical_mask(mask, m, perms, pairs, pair_index));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        level = std::move(next);
    }
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    std::vector<Graph> out;
    for (uint64_t mask : level) {
        Graph g = mask_to_graph(mask, n, pairs);
        if (!connected_only || is_connected(g)) out.push_back(g);
    }
    return out;
}

} // namespace qdm
