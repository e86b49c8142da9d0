#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace qdm {

constexpr int kUnreachable = -1;
constexpr int kMaxVertices = 64; // graph6 I/O additionally caps at 62

// Simple undirected graph on vertices 0..n-1, adjacency as bitset rows.
// Immutable once built; the mutating helpers are private to the builders.
class Graph {
  public:
    explicit Graph(int n = 0);

    int order() const { return n_; }
    int edge_count() const;
    bool adjacent(int u, int v) const { return u != v && (rows_[u] >> v & 1); }
    uint64_t neighbors(int u) const { return rows_[u]; }
    int degree(int u) const;
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> degree_sequence() const; // sorted ascending

    void add_edge(int u, int v);
    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

  private:
    int n_;
    std::vector<uint64_t> rows_;
};

// n x n matrix of BFS distances, kUnreachable across components.
struct DistanceMatrix {
    int n = 0;
    std::vector<int> d; // row-major
    int at(int u, int v) const { return d[u * n + v]; }
};

struct ComponentProfile {
    std::vector<int> sizes; // sorted descending
    int count() const { return int(sizes.size()); }
    bool operator==(const ComponentProfile& o) const { return sizes == o.sizes; }
};

DistanceMatrix all_pairs_distances(const Graph& g);
ComponentProfile components(const Graph& g);
bool is_connected(const Graph& g);
// Maximum finite distance; 0 for edgeless graphs. The paper only needs the
// diameter of connected graphs, the finite-max extension is ours.
int diameter(const Graph& g);

// ---------------------------------------------------------------------------
// graph6 (short form, n <= 62); optional >>graph6<< header tolerated

std::string emit_graph6(const Graph& g);
Graph parse_graph6(const std::string& line);
// One graph per non-empty line.
std::vector<Graph> parse_graph6_stream(const std::string& text);

// ---------------------------------------------------------------------------
// family constructors (vertex labelings documented per builder)

Graph empty_graph(int n);
Graph path_graph(int n);      // vertices 0..n-1 in path order
Graph cycle_graph(int n);     // i ~ i+1 mod n, n >= 3
Graph complete_graph(int n);
Graph hypercube_graph(int n); // vertex = bitstring, i ~ j iff popcount(i^j)=1
Graph wheel_graph(int n);     // C_n on 0..n-1 joined with hub n
Graph kneser_graph(int n, int r); // r-subsets of [n] in colex order; n >= 2r+1
Graph star_graph(int leaves); // center 0

// ---------------------------------------------------------------------------
// operations

Graph disjoint_union(const Graph& g, const Graph& h); // h's vertices shifted by |g|
Graph cartesian_product(const Graph& g, const Graph& h); // (u,v) -> u*|h|+v
Graph join_graphs(const Graph& g, const Graph& h);
Graph complement(const Graph& g);
// u in g merged with v in h; merged vertex keeps u's index, h's other
// vertices are appended in order.
Graph vertex_identification(const Graph& g, int u, const Graph& h, int v);

enum class AttachKind { pendant_path, pendant_leaves, pendant_clique };
// k new vertices in the named configuration at u, labeled |g|..|g|+k-1
// (paths in walk order).
Graph attach(const Graph& g, int u, AttachKind kind, int k);

struct TwinPair {
    int u, v;
    bool connected;
};
std::vector<TwinPair> find_twins(const Graph& g);

// ---------------------------------------------------------------------------
// exhaustive enumeration (one representative per isomorphism class), used to
// feed the census; n <= 7 keeps the canonical-form search cheap

std::vector<Graph> enumerate_graphs(int n, bool connected_only);

} // namespace qdm
