#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace thetakit {

// Simple undirected graph on {0..n-1}, n <= 62, adjacency kept as one
// bitmask row per vertex.
class Graph {
public:
    static constexpr int max_vertices = 62;

    explicit Graph(int n);

    int n() const { return static_cast<int>(rows_.size()); }
    bool has_edge(int u, int v) const { return u != v && ((rows_[u] >> v) & 1u); }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    std::uint64_t neighbors(int v) const { return rows_[v]; }
    int degree(int v) const;
    int max_degree() const;
    long long edge_count() const;

    Graph complement() const;
    Graph induced_subgraph(const std::vector<int>& vertices) const;

    bool has_isolated_vertex() const;
    bool is_twin_free() const;
    std::vector<std::vector<int>> components() const;

    // Greedy max-back-degree vertex order (first vertex of max degree, then
    // repeatedly the vertex with most already-ordered neighbors).
    std::vector<int> assignment_order() const;

    bool operator==(const Graph& other) const { return rows_ == other.rows_; }

private:
    std::vector<std::uint64_t> rows_;
};

struct TwinReduction {
    Graph graph;
    // representative[v] = surviving original vertex of v's twin class
    std::vector<int> representative;
    // reduced_index[v] = index of representative[v] in the reduced graph
    std::vector<int> reduced_index;
};

// Repeatedly deletes the higher-indexed vertex of the lexicographically first
// twin pair until the graph is twin-free.
TwinReduction twin_reduce(const Graph& g);

// All 2^C(n,2) labeled graphs on n vertices, n <= 7.
void enumerate_graphs(int n, const std::function<void(const Graph&)>& yield);
// One representative per isomorphism class (the lexicographically least
// labeled form), n <= 7.
void enumerate_graphs_canonical(int n, const std::function<void(const Graph&)>& yield);

class BipartiteGraph {
public:
    BipartiteGraph(int n1, int n2);

    int n1() const { return n1_; }
    int n2() const { return n2_; }
    bool has_edge(int i, int j) const { return (rows_[i] >> j) & 1u; }
    void add_edge(int i, int j);
    std::uint64_t row(int i) const { return rows_[i]; }
    int degree_v1(int i) const;
    int degree_v2(int j) const;
    int max_degree() const;
    long long edge_count() const;

    BipartiteGraph bipartite_complement() const;
    // Union graph on n1+n2 vertices; V1 keeps its indices, V2 shifted by n1.
    Graph to_graph() const;
    bool has_isolated_v1() const;
    bool has_isolated_v2() const;

    bool operator==(const BipartiteGraph& other) const {
        return n2_ == other.n2_ && rows_ == other.rows_;
    }

private:
    int n1_, n2_;
    std::vector<std::uint64_t> rows_;
};

struct BipartiteTwinReduction {
    BipartiteGraph graph;
    std::vector<int> v1_representative;
    std::vector<int> v2_representative;
};

// Collapses equal rows within V1 and equal columns within V2 (same-part
// twins); cross-part pairs are never merged.
BipartiteTwinReduction reduce_same_part_twins(const BipartiteGraph& g);

// Greedy increasing-subgraph extraction: requires n1 == n2 and no isolated
// V1 vertex; returns pairs (x_i, y_i) with x_i y_i an edge and x_i y_j a
// non-edge for all i > j; length >= ceil(n / max_degree).
std::vector<std::pair<int, int>> find_increasing_subgraph(const BipartiteGraph& g);

void enumerate_bipartite(int n1, int n2, const std::function<void(const BipartiteGraph&)>& yield);

// Text form: header "n1 n2" then n1 rows of 0/1 characters.
BipartiteGraph parse_bipartite(const std::string& text);
std::string to_text(const BipartiteGraph& g);

}  // namespace thetakit
