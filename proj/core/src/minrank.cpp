#include "thetakit/minrank.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace thetakit {

namespace {

int rank_gf2(std::vector<std::uint64_t> rows, int cols) {
    int rank = 0;
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        const std::uint64_t bit = std::uint64_t{1} << c;
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r] & bit) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r)
            if (r != rank && (rows[r] & bit)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

long long inv_mod(long long a, long long p) {
    long long result = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

// in-place elimination on a row-major buffer, destroys contents
int rank_modp(std::vector<long long>& a, int rows, int cols, long long p) {
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r * cols + c] % p != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
        const long long inv = inv_mod(a[rank * cols + c] % p, p);
        for (int r = rank + 1; r < rows; ++r) {
            const long long factor = a[r * cols + c] % p * inv % p;
            if (factor == 0) continue;
            for (int j = c; j < cols; ++j)
                a[r * cols + j] = ((a[r * cols + j] - factor * a[rank * cols + j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

struct Budget {
    std::uint64_t cap;
    std::uint64_t* used;
    bool* interrupted;
    bool step() {
        if (++*used > cap) {
            *interrupted = true;
            return false;
        }
        return true;
    }
};

struct CompSolution {
    int rank = 0;
    std::vector<long long> mat;  // row-major, local indices
};

// vs lists the component's vertices; edges are pairs of local indices
CompSolution solve_component_gfp(const std::vector<std::pair<int, int>>& edges, int m,
                                 long long p, Budget& budget) {
    CompSolution best;
    best.rank = m + 1;
    if (m == 1) {
        best.rank = 0;
        best.mat.assign(1, 0);
        return best;
    }
    const int lower = edges.empty() ? 0 : 1;

    if (p == 2) {
        std::vector<std::uint64_t> base(m, 0);
        for (const auto& [i, j] : edges) {
            base[i] |= std::uint64_t{1} << j;
            base[j] |= std::uint64_t{1} << i;
        }
        std::uint64_t best_diag = 0;
        for (std::uint64_t diag = 0; diag < (std::uint64_t{1} << m); ++diag) {
            if (!budget.step()) return best;
            std::vector<std::uint64_t> rows = base;
            for (int i = 0; i < m; ++i)
                if ((diag >> i) & 1u) rows[i] |= std::uint64_t{1} << i;
            const int r = rank_gf2(std::move(rows), m);
            if (r < best.rank) {
                best.rank = r;
                best_diag = diag;
                if (best.rank == lower) break;
            }
        }
        best.mat.assign(m * m, 0);
        for (const auto& [i, j] : edges) best.mat[i * m + j] = best.mat[j * m + i] = 1;
        for (int i = 0; i < m; ++i)
            if ((best_diag >> i) & 1u) best.mat[i * m + i] = 1;
        return best;
    }

    // diagonal rescaling D*A*D fixes every spanning tree edge to 1, so only
    // the non-tree edges need the full value range
    std::vector<std::vector<int>> adj(m);
    for (const auto& [i, j] : edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<char> seen(m, 0);
    std::vector<char> is_tree(edges.size(), 0);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    std::vector<int> parent(m, -1);
    while (!bfs.empty()) {
        const int u = bfs.front();
        bfs.pop();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                parent[v] = u;
                bfs.push(v);
            }
    }
    // an edge is in the BFS tree exactly when one endpoint is the other's parent
    std::vector<int> tree_idx, free_idx;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto& [i, j] = edges[e];
        if (parent[i] == j || parent[j] == i) {
            tree_idx.push_back(static_cast<int>(e));
            is_tree[e] = 1;
        } else {
            free_idx.push_back(static_cast<int>(e));
        }
    }

    std::uint64_t diag_total = 1;
    for (int i = 0; i < m; ++i) diag_total *= static_cast<std::uint64_t>(p);
    std::uint64_t free_total = 1;
    for (std::size_t i = 0; i < free_idx.size(); ++i)
        free_total *= static_cast<std::uint64_t>(p - 1);

    std::vector<long long> mat(m * m), work(m * m);
    std::vector<long long> free_val(free_idx.size(), 1);
    for (std::uint64_t fcode = 0; fcode < free_total; ++fcode) {
        std::uint64_t f = fcode;
        for (std::size_t i = 0; i < free_idx.size(); ++i) {
            free_val[i] = 1 + static_cast<long long>(f % (p - 1));
            f /= (p - 1);
        }
        for (std::uint64_t dcode = 0; dcode < diag_total; ++dcode) {
            if (!budget.step()) return best;
            std::fill(mat.begin(), mat.end(), 0);
            for (int t : tree_idx) {
                const auto& [i, j] = edges[t];
                mat[i * m + j] = mat[j * m + i] = 1;
            }
            for (std::size_t i = 0; i < free_idx.size(); ++i) {
                const auto& [a, b] = edges[free_idx[i]];
                mat[a * m + b] = mat[b * m + a] = free_val[i];
            }
            std::uint64_t d = dcode;
            for (int i = 0; i < m; ++i) {
                mat[i * m + i] = static_cast<long long>(d % p);
                d /= p;
            }
            work = mat;
            const int r = rank_modp(work, m, m, p);
            if (r < best.rank) {
                best.rank = r;
                best.mat = mat;
                if (best.rank == lower) return best;
            }
        }
    }
    return best;
}

}  // namespace

MinrankResult minrank_gfp(const Graph& g, long long p, const MinrankLimits& limits) {
    if (!is_prime(p)) throw std::invalid_argument("minrank field order must be prime");
    MinrankResult res;
    const std::uint64_t cap =
        limits.node_budget == 0 ? std::numeric_limits<std::uint64_t>::max() : limits.node_budget;
    Budget budget{cap, &res.nodes, &res.interrupted};

    const int n = g.n();
    std::vector<long long> full(n * n, 0);
    int total = 0;
    for (const auto& comp : g.components()) {
        const int m = static_cast<int>(comp.size());
        std::vector<int> local(n, -1);
        for (int i = 0; i < m; ++i) local[comp[i]] = i;
        std::vector<std::pair<int, int>> edges;
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                if (g.has_edge(comp[a], comp[b])) edges.push_back({a, b});
        const CompSolution sol = solve_component_gfp(edges, m, p, budget);
        if (res.interrupted) return res;
        total += sol.rank;
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) full[comp[a] * n + comp[b]] = sol.mat[a * m + b];
    }

    ExactMatrix witness = ExactMatrix::modular(p, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) witness.set(i, j, full[i * n + j]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && (witness.residue(i, j) != 0) != g.has_edge(i, j))
                throw std::logic_error("minrank witness pattern mismatch");
    if (witness.rank() != total) throw std::logic_error("minrank witness rank mismatch");
    res.value = total;
    res.witness = std::move(witness);
    return res;
}

MinrankResult bipartite_minrank_gfp(const BipartiteGraph& g, long long p,
                                    const MinrankLimits& limits) {
    if (!is_prime(p)) throw std::invalid_argument("minrank field order must be prime");
    MinrankResult res;
    const std::uint64_t cap =
        limits.node_budget == 0 ? std::numeric_limits<std::uint64_t>::max() : limits.node_budget;
    Budget budget{cap, &res.nodes, &res.interrupted};

    const int n1 = g.n1(), n2 = g.n2();
    std::vector<long long> full(n1 * n2, 0);
    int total = 0;
    const Graph united = g.to_graph();
    for (const auto& comp : united.components()) {
        std::vector<int> rows_v, cols_v;
        for (int v : comp)
            (v < n1 ? rows_v : cols_v).push_back(v);
        const int m1 = static_cast<int>(rows_v.size());
        const int m2 = static_cast<int>(cols_v.size());
        if (m1 == 0 || m2 == 0) continue;  // isolated vertex, zero row or column
        std::vector<std::pair<int, int>> edges;  // local (row, col)
        for (int a = 0; a < m1; ++a)
            for (int b = 0; b < m2; ++b)
                if (g.has_edge(rows_v[a], cols_v[b] - n1)) edges.push_back({a, b});

        // spanning tree over the connected component fixes its edges to 1 via
        // independent row and column scalings
        std::vector<std::vector<std::pair<int, int>>> adj(m1 + m2);  // (peer, edge index)
        for (std::size_t e = 0; e < edges.size(); ++e) {
            adj[edges[e].first].push_back({m1 + edges[e].second, static_cast<int>(e)});
            adj[m1 + edges[e].second].push_back({edges[e].first, static_cast<int>(e)});
        }
        std::vector<char> seen(m1 + m2, 0), is_tree(edges.size(), 0);
        std::queue<int> bfs;
        bfs.push(0);
        seen[0] = 1;
        while (!bfs.empty()) {
            const int u = bfs.front();
            bfs.pop();
            for (const auto& [v, e] : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    is_tree[e] = 1;
                    bfs.push(v);
                }
        }
        std::vector<int> free_idx;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (!is_tree[e]) free_idx.push_back(static_cast<int>(e));

        std::uint64_t free_total = 1;
        for (std::size_t i = 0; i < free_idx.size(); ++i)
            free_total *= static_cast<std::uint64_t>(p - 1);

        int best_rank = std::min(m1, m2) + 1;
        std::vector<long long> best_mat;
        std::vector<long long> mat(m1 * m2), work(m1 * m2);
        for (std::uint64_t fcode = 0; fcode < free_total; ++fcode) {
            if (!budget.step()) return res;
            std::fill(mat.begin(), mat.end(), 0);
            for (std::size_t e = 0; e < edges.size(); ++e)
                if (is_tree[e]) mat[edges[e].first * m2 + edges[e].second] = 1;
            std::uint64_t f = fcode;
            for (int fi : free_idx) {
                mat[edges[fi].first * m2 + edges[fi].second] =
                    1 + static_cast<long long>(f % (p - 1));
                f /= (p - 1);
            }
            work = mat;
            const int r = rank_modp(work, m1, m2, p);
            if (r < best_rank) {
                best_rank = r;
                best_mat = mat;
                if (best_rank == 1) break;
            }
        }
        total += best_rank;
        for (int a = 0; a < m1; ++a)
            for (int b = 0; b < m2; ++b)
                full[rows_v[a] * n2 + (cols_v[b] - n1)] = best_mat[a * m2 + b];
    }

    ExactMatrix witness = ExactMatrix::modular(p, n1, n2);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) witness.set(i, j, full[i * n2 + j]);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j)
            if ((witness.residue(i, j) != 0) != g.has_edge(i, j))
                throw std::logic_error("bipartite minrank witness pattern mismatch");
    if (witness.rank() != total) throw std::logic_error("bipartite minrank witness rank mismatch");
    res.value = total;
    res.witness = std::move(witness);
    return res;
}

namespace {

std::optional<int> component_mr_real(const Graph& g, const std::vector<int>& vs) {
    const int k = static_cast<int>(vs.size());
    long long m = 0;
    int maxdeg = 0;
    bool all_two = true;
    for (int v : vs) {
        const int d = g.degree(v);
        m += d;
        maxdeg = std::max(maxdeg, d);
        if (d != 2) all_two = false;
    }
    m /= 2;
    if (m == static_cast<long long>(k) * (k - 1) / 2) return k >= 2 ? 1 : 0;
    if (m == k - 1 && maxdeg <= 2) return k - 1;  // path
    if (m == k && all_two) return k - 2;          // cycle
    // complete bipartite
    std::vector<int> color(g.n(), -1);
    std::queue<int> bfs;
    bfs.push(vs[0]);
    color[vs[0]] = 0;
    long long a = 1, b = 0;
    bool bip = true;
    while (!bfs.empty() && bip) {
        const int u = bfs.front();
        bfs.pop();
        for (int v : vs) {
            if (!g.has_edge(u, v)) continue;
            if (color[v] < 0) {
                color[v] = 1 - color[u];
                (color[v] == 0 ? a : b) += 1;
                bfs.push(v);
            } else if (color[v] == color[u]) {
                bip = false;
                break;
            }
        }
    }
    if (bip && m == a * b) return 2;
    return std::nullopt;
}

}  // namespace

std::optional<int> minrank_real_closed_form(const Graph& g) {
    int total = 0;
    for (const auto& comp : g.components()) {
        const auto r = component_mr_real(g, comp);
        if (!r) return std::nullopt;
        total += *r;
    }
    return total;
}

}  // namespace thetakit
