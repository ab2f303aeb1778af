#include "thetakit/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace thetakit {

namespace {

int popcount(std::uint64_t x) { return std::popcount(x); }

}  // namespace

Graph::Graph(int n) {
    if (n < 1 || n > max_vertices)
        throw std::invalid_argument("graph order must be in 1..62");
    rows_.assign(n, 0);
}

void Graph::add_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= n() || v >= n())
        throw std::invalid_argument("bad edge endpoints");
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= n() || v >= n())
        throw std::invalid_argument("bad edge endpoints");
    rows_[u] &= ~(std::uint64_t{1} << v);
    rows_[v] &= ~(std::uint64_t{1} << u);
}

int Graph::degree(int v) const { return popcount(rows_[v]); }

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n(); ++v) best = std::max(best, degree(v));
    return best;
}

long long Graph::edge_count() const {
    long long total = 0;
    for (int v = 0; v < n(); ++v) total += degree(v);
    return total / 2;
}

Graph Graph::complement() const {
    Graph out(n());
    const std::uint64_t all = (n() == 64) ? ~std::uint64_t{0}
                                          : ((std::uint64_t{1} << n()) - 1);
    for (int v = 0; v < n(); ++v)
        out.rows_[v] = (~rows_[v] & all) & ~(std::uint64_t{1} << v);
    return out;
}

Graph Graph::induced_subgraph(const std::vector<int>& vertices) const {
    if (vertices.empty()) throw std::invalid_argument("empty vertex set");
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        throw std::invalid_argument("repeated vertex");
    if (vs.front() < 0 || vs.back() >= n())
        throw std::invalid_argument("vertex out of range");
    Graph out(static_cast<int>(vs.size()));
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (has_edge(vs[a], vs[b])) out.add_edge(static_cast<int>(a), static_cast<int>(b));
    return out;
}

bool Graph::has_isolated_vertex() const {
    for (int v = 0; v < n(); ++v)
        if (rows_[v] == 0) return true;
    return false;
}

bool Graph::is_twin_free() const {
    for (int u = 0; u < n(); ++u)
        for (int v = u + 1; v < n(); ++v) {
            const std::uint64_t mask =
                ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
            if ((rows_[u] & mask) == (rows_[v] & mask)) return false;
        }
    return true;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> out;
    std::uint64_t seen = 0;
    for (int s = 0; s < n(); ++s) {
        if ((seen >> s) & 1u) continue;
        std::uint64_t comp = std::uint64_t{1} << s;
        for (;;) {
            std::uint64_t grown = comp;
            for (int v = 0; v < n(); ++v)
                if ((comp >> v) & 1u) grown |= rows_[v];
            if (grown == comp) break;
            comp = grown;
        }
        seen |= comp;
        std::vector<int> vs;
        for (int v = 0; v < n(); ++v)
            if ((comp >> v) & 1u) vs.push_back(v);
        out.push_back(std::move(vs));
    }
    return out;
}

std::vector<int> Graph::assignment_order() const {
    std::vector<int> order;
    std::vector<bool> placed(n(), false);
    for (int step = 0; step < n(); ++step) {
        int best = -1, best_back = -1, best_deg = -1;
        for (int v = 0; v < n(); ++v) {
            if (placed[v]) continue;
            int back = 0;
            for (int u : order)
                if (has_edge(u, v)) ++back;
            const int deg = degree(v);
            if (back > best_back || (back == best_back && deg > best_deg)) {
                best = v;
                best_back = back;
                best_deg = deg;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }
    return order;
}

TwinReduction twin_reduce(const Graph& g) {
    const int n = g.n();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<bool> alive(n, true);

    auto current_rows = [&](std::vector<std::uint64_t>& rows, std::uint64_t& alive_mask) {
        alive_mask = 0;
        for (int v = 0; v < n; ++v)
            if (alive[v]) alive_mask |= std::uint64_t{1} << v;
        rows.assign(n, 0);
        for (int v = 0; v < n; ++v)
            if (alive[v]) rows[v] = g.neighbors(v) & alive_mask;
    };

    for (bool changed = true; changed;) {
        changed = false;
        std::vector<std::uint64_t> rows;
        std::uint64_t alive_mask;
        current_rows(rows, alive_mask);
        for (int u = 0; u < n && !changed; ++u) {
            if (!alive[u]) continue;
            for (int v = u + 1; v < n && !changed; ++v) {
                if (!alive[v]) continue;
                const std::uint64_t mask =
                    ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
                if ((rows[u] & mask) == (rows[v] & mask)) {
                    alive[v] = false;
                    parent[v] = u;
                    changed = true;
                }
            }
        }
    }

    std::vector<int> representative(n);
    for (int v = 0; v < n; ++v) {
        int r = v;
        while (parent[r] != r) r = parent[r];
        representative[v] = r;
    }

    std::vector<int> survivors;
    for (int v = 0; v < n; ++v)
        if (alive[v]) survivors.push_back(v);
    std::vector<int> index_of(n, -1);
    for (std::size_t i = 0; i < survivors.size(); ++i) index_of[survivors[i]] = static_cast<int>(i);

    std::vector<int> reduced_index(n);
    for (int v = 0; v < n; ++v) reduced_index[v] = index_of[representative[v]];

    return TwinReduction{g.induced_subgraph(survivors), std::move(representative),
                         std::move(reduced_index)};
}

namespace {

constexpr int enumeration_limit = 7;

Graph graph_from_pair_bits(int n, std::uint64_t bits) {
    Graph g(n);
    int idx = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++idx)
            if ((bits >> idx) & 1u) g.add_edge(u, v);
    return g;
}

std::uint64_t pair_bits(const Graph& g) {
    std::uint64_t bits = 0;
    int idx = 0;
    for (int v = 1; v < g.n(); ++v)
        for (int u = 0; u < v; ++u, ++idx)
            if (g.has_edge(u, v)) bits |= std::uint64_t{1} << idx;
    return bits;
}

std::uint64_t relabeled_pair_bits(const Graph& g, const std::vector<int>& perm) {
    std::uint64_t bits = 0;
    int idx = 0;
    for (int v = 1; v < g.n(); ++v)
        for (int u = 0; u < v; ++u, ++idx)
            if (g.has_edge(perm[u], perm[v])) bits |= std::uint64_t{1} << idx;
    return bits;
}

}  // namespace

void enumerate_graphs(int n, const std::function<void(const Graph&)>& yield) {
    if (n < 1 || n > enumeration_limit)
        throw std::invalid_argument("labeled enumeration supports n in 1..7");
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits)
        yield(graph_from_pair_bits(n, bits));
}

void enumerate_graphs_canonical(int n, const std::function<void(const Graph&)>& yield) {
    if (n < 1 || n > enumeration_limit)
        throw std::invalid_argument("canonical enumeration supports n in 1..7");
    const int pairs = n * (n - 1) / 2;
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
        const Graph g = graph_from_pair_bits(n, bits);
        std::vector<int> perm = base;
        bool canonical = true;
        while (std::next_permutation(perm.begin(), perm.end())) {
            if (relabeled_pair_bits(g, perm) < bits) {
                canonical = false;
                break;
            }
        }
        if (canonical) yield(g);
    }
}

BipartiteGraph::BipartiteGraph(int n1, int n2) : n1_(n1), n2_(n2) {
    if (n1 < 1 || n2 < 1 || n1 + n2 > Graph::max_vertices)
        throw std::invalid_argument("part sizes must be >= 1 with n1+n2 <= 62");
    rows_.assign(n1, 0);
}

void BipartiteGraph::add_edge(int i, int j) {
    if (i < 0 || j < 0 || i >= n1_ || j >= n2_)
        throw std::invalid_argument("bad bipartite edge");
    rows_[i] |= std::uint64_t{1} << j;
}

int BipartiteGraph::degree_v1(int i) const { return popcount(rows_[i]); }

int BipartiteGraph::degree_v2(int j) const {
    int d = 0;
    for (int i = 0; i < n1_; ++i) d += (rows_[i] >> j) & 1u;
    return d;
}

int BipartiteGraph::max_degree() const {
    int best = 0;
    for (int i = 0; i < n1_; ++i) best = std::max(best, degree_v1(i));
    for (int j = 0; j < n2_; ++j) best = std::max(best, degree_v2(j));
    return best;
}

long long BipartiteGraph::edge_count() const {
    long long total = 0;
    for (int i = 0; i < n1_; ++i) total += degree_v1(i);
    return total;
}

BipartiteGraph BipartiteGraph::bipartite_complement() const {
    BipartiteGraph out(n1_, n2_);
    const std::uint64_t all = (std::uint64_t{1} << n2_) - 1;
    for (int i = 0; i < n1_; ++i) out.rows_[i] = ~rows_[i] & all;
    return out;
}

Graph BipartiteGraph::to_graph() const {
    Graph g(n1_ + n2_);
    for (int i = 0; i < n1_; ++i)
        for (int j = 0; j < n2_; ++j)
            if (has_edge(i, j)) g.add_edge(i, n1_ + j);
    return g;
}

bool BipartiteGraph::has_isolated_v1() const {
    for (int i = 0; i < n1_; ++i)
        if (rows_[i] == 0) return true;
    return false;
}

bool BipartiteGraph::has_isolated_v2() const {
    for (int j = 0; j < n2_; ++j)
        if (degree_v2(j) == 0) return true;
    return false;
}

BipartiteTwinReduction reduce_same_part_twins(const BipartiteGraph& g) {
    std::vector<int> rep1(g.n1()), rep2(g.n2());
    std::vector<int> keep1, keep2;
    for (int i = 0; i < g.n1(); ++i) {
        int r = i;
        for (int i2 = 0; i2 < i; ++i2)
            if (g.row(i2) == g.row(i)) { r = i2; break; }
        rep1[i] = r;
        if (r == i) keep1.push_back(i);
    }
    auto column = [&](int j) {
        std::uint64_t c = 0;
        for (int i = 0; i < g.n1(); ++i) c |= ((g.row(i) >> j) & 1u) << i;
        return c;
    };
    for (int j = 0; j < g.n2(); ++j) {
        int r = j;
        for (int j2 = 0; j2 < j; ++j2)
            if (column(j2) == column(j)) { r = j2; break; }
        rep2[j] = r;
        if (r == j) keep2.push_back(j);
    }
    BipartiteGraph out(static_cast<int>(keep1.size()), static_cast<int>(keep2.size()));
    for (std::size_t a = 0; a < keep1.size(); ++a)
        for (std::size_t b = 0; b < keep2.size(); ++b)
            if (g.has_edge(keep1[a], keep2[b]))
                out.add_edge(static_cast<int>(a), static_cast<int>(b));
    return BipartiteTwinReduction{std::move(out), std::move(rep1), std::move(rep2)};
}

std::vector<std::pair<int, int>> find_increasing_subgraph(const BipartiteGraph& g) {
    if (g.n1() != g.n2())
        throw std::invalid_argument("increasing subgraph needs equal part sizes");
    if (g.has_isolated_v1())
        throw std::invalid_argument("increasing subgraph needs no isolated V1 vertex");

    std::vector<bool> alive1(g.n1(), true), alive2(g.n2(), true);
    std::vector<std::pair<int, int>> pairs;
    for (;;) {
        int x = -1, y = -1;
        for (int i = 0; i < g.n1() && x < 0; ++i) {
            if (!alive1[i]) continue;
            for (int j = 0; j < g.n2(); ++j)
                if (alive2[j] && g.has_edge(i, j)) { x = i; y = j; break; }
        }
        if (x < 0) break;
        pairs.emplace_back(x, y);
        for (int i = 0; i < g.n1(); ++i)
            if (g.has_edge(i, y)) alive1[i] = false;
        alive2[y] = false;
    }
    return pairs;
}

void enumerate_bipartite(int n1, int n2, const std::function<void(const BipartiteGraph&)>& yield) {
    const int cells = n1 * n2;
    if (n1 < 1 || n2 < 1 || cells > 24)
        throw std::invalid_argument("bipartite enumeration supports n1*n2 <= 24");
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
        BipartiteGraph g(n1, n2);
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n2; ++j)
                if ((bits >> (i * n2 + j)) & 1u) g.add_edge(i, j);
        yield(g);
    }
}

BipartiteGraph parse_bipartite(const std::string& text) {
    std::istringstream in(text);
    int n1, n2;
    if (!(in >> n1 >> n2)) throw std::invalid_argument("bipartite header must be 'n1 n2'");
    if (n1 < 1 || n2 < 1 || n1 + n2 > Graph::max_vertices)
        throw std::invalid_argument("bipartite part sizes out of range");
    BipartiteGraph g(n1, n2);
    for (int i = 0; i < n1; ++i) {
        std::string row;
        if (!(in >> row) || static_cast<int>(row.size()) != n2)
            throw std::invalid_argument("bipartite row " + std::to_string(i) +
                                        " must have " + std::to_string(n2) + " characters");
        for (int j = 0; j < n2; ++j) {
            if (row[j] == '1')
                g.add_edge(i, j);
            else if (row[j] != '0')
                throw std::invalid_argument("bipartite rows must be 0/1");
        }
    }
    std::string rest;
    if (in >> rest) throw std::invalid_argument("trailing content after bipartite rows");
    return g;
}

std::string to_text(const BipartiteGraph& g) {
    std::ostringstream out;
    out << g.n1() << ' ' << g.n2() << '\n';
    for (int i = 0; i < g.n1(); ++i) {
        for (int j = 0; j < g.n2(); ++j) out << (g.has_edge(i, j) ? '1' : '0');
        out << '\n';
    }
    return out.str();
}

}  // namespace thetakit
