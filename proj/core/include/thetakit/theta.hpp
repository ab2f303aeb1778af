#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "thetakit/graph.hpp"
#include "thetakit/lspec.hpp"
#include "thetakit/set_family.hpp"

namespace thetakit {

struct ThetaLimits {
    int l_max = -1;                  // -1: default rule (see default_l_max)
    std::uint64_t node_budget = 0;   // 0: unlimited
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct ThetaResult {
    std::optional<int> value;            // empty: Unknown
    std::optional<SetFamily> witness;
    int exhausted_l = -1;                // largest l proven to admit no witness
    bool interrupted = false;            // budget or deadline hit
    std::uint64_t nodes = 0;

    bool known() const { return value.has_value(); }
};

// Default universe cap: pair-count + largest finite member of L, capped at 20.
int default_l_max(int constrained_pairs, const LSpec& lspec);

bool verify_representation(const Graph& g, const SetFamily& fam, const LSpec& lspec);
bool verify_bipartite_representation(const BipartiteGraph& g, const SetFamily& fam,
                                     const LSpec& lspec);
// Checks set sizes too; K empty means unconstrained.
bool verify_uniform_representation(const Graph& g, const SetFamily& fam,
                                   const LSpec& lspec, const std::vector<int>& K);

// Smallest universe size l <= l_max admitting a representation, searching l
// upward so a returned value is exactly the intersection number. Witness
// family indexed by vertices (bipartite: V1 rows then V2).
ThetaResult theta_exact(const Graph& g, const LSpec& lspec, const ThetaLimits& limits = {});
ThetaResult theta_bipartite_exact(const BipartiteGraph& g, const LSpec& lspec,
                                  const ThetaLimits& limits = {});
// K: admissible set sizes; K = {k} is the k-uniform case.
ThetaResult theta_uniform_exact(const Graph& g, const LSpec& lspec,
                                const std::vector<int>& K, const ThetaLimits& limits = {});

}  // namespace thetakit
