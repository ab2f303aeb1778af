#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <utility>
#include <vector>

#include "thetakit/graph.hpp"
#include "thetakit/minrank.hpp"

using namespace thetakit;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.n() + b.n());
    for (int u = 0; u < a.n(); ++u)
        for (int v = u + 1; v < a.n(); ++v)
            if (a.has_edge(u, v)) g.add_edge(u, v);
    for (int u = 0; u < b.n(); ++u)
        for (int v = u + 1; v < b.n(); ++v)
            if (b.has_edge(u, v)) g.add_edge(a.n() + u, a.n() + v);
    return g;
}

// Reference rank: plain row reduction over GF(p), written against the
// definition with no shared code with the library.
int ref_rank_modp(std::vector<std::vector<int>> m, int p) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] % p != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        int inv = 1;
        while ((m[rank][c] * inv) % p != 1) ++inv;
        for (int cc = 0; cc < cols; ++cc) m[rank][cc] = m[rank][cc] * inv % p;
        for (int r = 0; r < rows; ++r) {
            const int f = m[r][c] % p;
            if (r == rank || f == 0) continue;
            for (int cc = 0; cc < cols; ++cc)
                m[r][cc] = ((m[r][cc] - f * m[rank][cc]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

// Reference minimum rank: enumerate every symmetric matrix whose off-diagonal
// support is exactly E(g), with free diagonal, and take the smallest rank.
int brute_minrank(const Graph& g, int p) {
    const int n = g.n();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) edges.emplace_back(u, v);
    const int m = static_cast<int>(edges.size());
    std::vector<int> ew(m, 1), dw(n, 0);
    int best = n;
    for (;;) {
        std::vector<std::vector<int>> mat(n, std::vector<int>(n, 0));
        for (int e = 0; e < m; ++e)
            mat[edges[e].first][edges[e].second] = mat[edges[e].second][edges[e].first] = ew[e];
        for (int v = 0; v < n; ++v) mat[v][v] = dw[v];
        best = std::min(best, ref_rank_modp(mat, p));

        int i = 0;
        while (i < m && ++ew[i] == p) ew[i++] = 1;
        if (i == m) {
            int j = 0;
            while (j < n && ++dw[j] == p) dw[j++] = 0;
            if (j == n) break;
        }
    }
    return best;
}

int brute_bipartite_minrank(const BipartiteGraph& g, int p) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.n1(); ++i)
        for (int j = 0; j < g.n2(); ++j)
            if (g.has_edge(i, j)) edges.emplace_back(i, j);
    const int m = static_cast<int>(edges.size());
    std::vector<int> ew(m, 1);
    int best = std::min(g.n1(), g.n2());
    for (;;) {
        std::vector<std::vector<int>> mat(g.n1(), std::vector<int>(g.n2(), 0));
        for (int e = 0; e < m; ++e) mat[edges[e].first][edges[e].second] = ew[e];
        best = std::min(best, ref_rank_modp(mat, p));
        int i = 0;
        while (i < m && ++ew[i] == p) ew[i++] = 1;
        if (i == m) break;
    }
    return best;
}

void check_witness(const Graph& g, const MinrankResult& res, int p) {
    REQUIRE(res.value.has_value());
    REQUIRE(res.witness.has_value());
    const ExactMatrix& w = *res.witness;
    REQUIRE(w.rows() == g.n());
    REQUIRE(w.cols() == g.n());
    std::vector<std::vector<int>> entries(g.n(), std::vector<int>(g.n()));
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j) {
            entries[i][j] = static_cast<int>(w.residue(i, j));
            if (i != j) CHECK((entries[i][j] != 0) == g.has_edge(i, j));
        }
    CHECK(ref_rank_modp(entries, p) == *res.value);
}

}  // namespace

TEST_CASE("spot values") {
    CHECK(*minrank_gfp(complete(2), 2).value == 1);
    CHECK(*minrank_gfp(cycle(4), 2).value == 2);
    CHECK(*minrank_gfp(path(3), 3).value == 2);
    CHECK(*minrank_gfp(path(4), 2).value == 3);
    for (long long p : {2, 3, 5})
        for (int n = 2; n <= 4; ++n) CHECK(*minrank_gfp(complete(n), p).value == 1);
    const MinrankResult empty = minrank_gfp(Graph(3), 2);
    CHECK(*empty.value == 0);
    CHECK(empty.witness->rank() == 0);
}

TEST_CASE("solver agrees with exhaustive enumeration") {
    for (long long p : {2, 3})
        enumerate_graphs(3, [&](const Graph& g) {
            const MinrankResult res = minrank_gfp(g, p);
            CHECK(*res.value == brute_minrank(g, static_cast<int>(p)));
            check_witness(g, res, static_cast<int>(p));
        });
    enumerate_graphs(4, [&](const Graph& g) {
        const MinrankResult res = minrank_gfp(g, 2);
        CHECK(*res.value == brute_minrank(g, 2));
        check_witness(g, res, 2);
    });
}

TEST_CASE("bipartite solver agrees with exhaustive enumeration") {
    for (long long p : {2, 3}) {
        enumerate_bipartite(2, 2, [&](const BipartiteGraph& g) {
            const MinrankResult res = bipartite_minrank_gfp(g, p);
            CHECK(*res.value == brute_bipartite_minrank(g, static_cast<int>(p)));
        });
        enumerate_bipartite(2, 3, [&](const BipartiteGraph& g) {
            const MinrankResult res = bipartite_minrank_gfp(g, p);
            CHECK(*res.value == brute_bipartite_minrank(g, static_cast<int>(p)));
            REQUIRE(res.witness.has_value());
            CHECK(res.witness->rows() == 2);
            CHECK(res.witness->cols() == 3);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 3; ++j)
                    CHECK((res.witness->residue(i, j) != 0) == g.has_edge(i, j));
        });
    }
}

TEST_CASE("GF(2) bipartite minimum rank equals biadjacency rank") {
    enumerate_bipartite(3, 3, [&](const BipartiteGraph& g) {
        std::vector<std::vector<int>> biadj(3, std::vector<int>(3, 0));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) biadj[i][j] = g.has_edge(i, j) ? 1 : 0;
        CHECK(*bipartite_minrank_gfp(g, 2).value == ref_rank_modp(biadj, 2));
    });
}

TEST_CASE("bipartite rank sandwiched by the union graph rank") {
    for (long long p : {2, 3})
        enumerate_bipartite(2, 2, [&](const BipartiteGraph& g) {
            const int bmr = *bipartite_minrank_gfp(g, p).value;
            const int mr = *minrank_gfp(g.to_graph(), p).value;
            CHECK(bmr <= mr);
            CHECK(mr <= 2 * bmr);
        });
}

TEST_CASE("additivity over components") {
    for (long long p : {2, 3}) {
        const Graph u = disjoint_union(disjoint_union(path(3), complete(2)), Graph(2));
        CHECK(*minrank_gfp(u, p).value ==
              *minrank_gfp(path(3), p).value + *minrank_gfp(complete(2), p).value);
    }
}

TEST_CASE("closed-form real minimum rank") {
    CHECK(*minrank_real_closed_form(complete(5)) == 1);
    CHECK(*minrank_real_closed_form(path(6)) == 5);
    CHECK(*minrank_real_closed_form(cycle(6)) == 4);
    CHECK(*minrank_real_closed_form(Graph(1)) == 0);
    CHECK(*minrank_real_closed_form(Graph(3)) == 0);

    BipartiteGraph k23(2, 3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) k23.add_edge(i, j);
    CHECK(*minrank_real_closed_form(k23.to_graph()) == 2);

    Graph star(5);
    for (int v = 1; v < 5; ++v) star.add_edge(0, v);
    CHECK(*minrank_real_closed_form(star) == 2);

    CHECK(*minrank_real_closed_form(disjoint_union(path(4), cycle(5))) == 3 + 3);

    Graph paw(4);
    paw.add_edge(0, 1);
    paw.add_edge(1, 2);
    paw.add_edge(0, 2);
    paw.add_edge(2, 3);
    CHECK_FALSE(minrank_real_closed_form(paw).has_value());
}

TEST_CASE("budget interruption and validation") {
    MinrankLimits tiny;
    tiny.node_budget = 1;
    const MinrankResult res = minrank_gfp(path(3), 3, tiny);
    CHECK(res.interrupted);
    CHECK_FALSE(res.value.has_value());
    CHECK(res.nodes >= 1);

    CHECK_THROWS_AS(minrank_gfp(path(3), 4), std::invalid_argument);
    CHECK_THROWS_AS(minrank_gfp(path(3), 1), std::invalid_argument);
    CHECK_THROWS_AS(bipartite_minrank_gfp(BipartiteGraph(1, 1), 6), std::invalid_argument);
}
