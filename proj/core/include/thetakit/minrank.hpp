#pragma once

#include <cstdint>
#include <optional>

#include "thetakit/graph.hpp"
#include "thetakit/matrix.hpp"

namespace thetakit {

struct MinrankLimits {
    std::uint64_t node_budget = 50'000'000;  // candidate matrices examined
};

struct MinrankResult {
    std::optional<int> value;              // empty: budget exceeded
    std::optional<ExactMatrix> witness;    // realizing matrix of minimum rank
    std::uint64_t nodes = 0;
    bool interrupted = false;

    bool known() const { return value.has_value(); }
};

// Minimum rank over GF(p) of a symmetric matrix with off-diagonal support
// exactly E(g) (diagonal free). Enumerates per connected component with
// spanning-tree edges normalized to 1.
MinrankResult minrank_gfp(const Graph& g, long long p, const MinrankLimits& limits = {});

// Minimum rank over GF(p) of a matrix with support exactly the biadjacency
// pattern of g.
MinrankResult bipartite_minrank_gfp(const BipartiteGraph& g, long long p,
                                    const MinrankLimits& limits = {});

// Real minimum rank where every connected component is a complete graph,
// path, cycle, or complete bipartite graph: K_n -> 1, P_n -> n-1,
// C_n -> n-2, K_{m,n} -> 2; empty otherwise.
std::optional<int> minrank_real_closed_form(const Graph& g);

}  // namespace thetakit
