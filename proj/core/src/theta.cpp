#include "thetakit/theta.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "thetakit/matrix.hpp"

namespace thetakit {

namespace {

// Backtracking over vertex set assignments for one universe size l.
//
// Symmetry breaking: columns (universe elements) that carry identical bits in
// every assigned row are interchangeable, so they are kept as contiguous tied
// groups and each new row may only take a left-prefix of each group. Every
// representation is column-permutable into this form, so the restriction
// loses nothing, and it shrinks the branching factor from 2^l to the product
// of (group size + 1).
struct Solver {
    int n = 0;
    int l = 0;
    // back[d] = constrained earlier positions with the required adjacency
    const std::vector<std::vector<std::pair<int, bool>>>* back = nullptr;
    std::vector<char> member;        // member[x], 0 <= x <= l
    std::uint64_t allowed_sizes = 0; // bit k: set size k admissible
    int min_size = 0, max_size = 0;

    std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max();
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::uint64_t nodes = 0;
    bool interrupted = false;

    std::vector<std::uint64_t> assigned;
    std::vector<int> take;           // per-group prefix length being tried

    bool run(std::vector<std::uint64_t>& out_masks) {
        assigned.assign(n, 0);
        take.assign(std::max(l, 1), 0);
        std::vector<std::pair<int, int>> groups;
        if (l > 0) groups.push_back({0, l});
        if (!dfs(0, groups)) return false;
        out_masks = assigned;
        return true;
    }

private:
    void touch_node() {
        ++nodes;
        if (nodes > node_budget) interrupted = true;
        if (deadline && (nodes & 4095) == 0 &&
            std::chrono::steady_clock::now() > *deadline)
            interrupted = true;
    }

    bool dfs(int depth, const std::vector<std::pair<int, int>>& groups) {
        if (depth == n) return true;
        const int m = static_cast<int>(groups.size());
        const auto& constraints = (*back)[depth];

        std::vector<int> suffix_cap(m + 1, 0);
        for (int i = m - 1; i >= 0; --i) suffix_cap[i] = suffix_cap[i + 1] + groups[i].second;

        auto rec = [&](auto&& self, int gi, std::uint64_t mask, int pc) -> bool {
            if (interrupted) return false;
            if (gi == m) {
                touch_node();
                if (!((allowed_sizes >> pc) & 1u)) return false;
                for (const auto& [e, adj] : constraints)
                    if (member[std::popcount(mask & assigned[e])] != static_cast<char>(adj))
                        return false;
                assigned[depth] = mask;
                std::vector<std::pair<int, int>> refined;
                refined.reserve(2 * m);
                for (int i = 0; i < m; ++i) {
                    if (take[i] > 0) refined.push_back({groups[i].first, take[i]});
                    if (take[i] < groups[i].second)
                        refined.push_back({groups[i].first + take[i], groups[i].second - take[i]});
                }
                return dfs(depth + 1, refined);
            }
            for (int c = 0; c <= groups[gi].second; ++c) {
                if (pc + c > max_size) break;
                if (pc + c + suffix_cap[gi + 1] < min_size) continue;
                take[gi] = c;
                const std::uint64_t add = ((std::uint64_t{1} << c) - 1) << groups[gi].first;
                if (self(self, gi + 1, mask | add, pc + c)) return true;
                if (interrupted) return false;
            }
            return false;
        };
        return rec(rec, 0, 0, 0);
    }
};

std::vector<char> membership_table(const LSpec& lspec, int l) {
    std::vector<char> table(l + 1);
    for (int x = 0; x <= l; ++x) table[x] = lspec.member(x) ? 1 : 0;
    return table;
}

int ceil_log2(int n) {
    int t = 0;
    while ((1LL << t) < n) ++t;
    return t;
}

struct Problem {
    int n_vertices;
    std::vector<int> order;  // assignment order, position -> vertex
    std::vector<std::vector<std::pair<int, bool>>> back;
    std::uint64_t size_mask_all;  // 0: unconstrained (use all sizes <= l)
    std::vector<int> K;           // empty: unconstrained
    int lower_bound;
    int constrained_pairs;
};

ThetaResult solve_levels(const Problem& prob, const LSpec& lspec, const ThetaLimits& limits) {
    ThetaResult res;
    const int l_max = limits.l_max >= 0
                          ? limits.l_max
                          : default_l_max(prob.constrained_pairs, lspec);
    res.exhausted_l = std::min(prob.lower_bound - 1, l_max);

    for (int l = prob.lower_bound; l <= l_max; ++l) {
        Solver solver;
        solver.n = prob.n_vertices;
        solver.l = l;
        solver.back = &prob.back;
        solver.member = membership_table(lspec, l);
        if (prob.K.empty()) {
            solver.allowed_sizes = (l >= 63) ? ~std::uint64_t{0}
                                             : ((std::uint64_t{1} << (l + 1)) - 1);
            solver.min_size = 0;
            solver.max_size = l;
        } else {
            solver.allowed_sizes = 0;
            solver.min_size = l + 1;
            solver.max_size = -1;
            for (int k : prob.K)
                if (k <= l) {
                    solver.allowed_sizes |= std::uint64_t{1} << k;
                    solver.min_size = std::min(solver.min_size, k);
                    solver.max_size = std::max(solver.max_size, k);
                }
            if (solver.allowed_sizes == 0) {
                res.exhausted_l = l;
                continue;  // no admissible set size fits in this universe
            }
        }
        if (limits.node_budget > 0) {
            if (res.nodes >= limits.node_budget) {
                res.interrupted = true;
                return res;
            }
            solver.node_budget = limits.node_budget - res.nodes;
        }
        solver.deadline = limits.deadline;

        std::vector<std::uint64_t> masks;
        const bool found = solver.run(masks);
        res.nodes += solver.nodes;
        if (solver.interrupted) {
            res.interrupted = true;
            return res;
        }
        if (found) {
            res.value = l;
            SetFamily fam;
            fam.ground = l;
            fam.sets.assign(prob.n_vertices, 0);
            for (int d = 0; d < prob.n_vertices; ++d) fam.sets[prob.order[d]] = masks[d];
            res.witness = std::move(fam);
            return res;
        }
        res.exhausted_l = l;
    }
    return res;
}

}  // namespace

int default_l_max(int constrained_pairs, const LSpec& lspec) {
    long long extra = 0;
    if (lspec.kind() == LSpec::Kind::Finite) extra = lspec.values().back();
    return static_cast<int>(std::min<long long>(20, constrained_pairs + extra));
}

bool verify_representation(const Graph& g, const SetFamily& fam, const LSpec& lspec) {
    if (fam.size() != g.n()) throw std::invalid_argument("family size must equal graph order");
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (lspec.member(std::popcount(fam.sets[u] & fam.sets[v])) != g.has_edge(u, v))
                return false;
    return true;
}

bool verify_bipartite_representation(const BipartiteGraph& g, const SetFamily& fam,
                                     const LSpec& lspec) {
    if (fam.size() != g.n1() + g.n2())
        throw std::invalid_argument("family size must equal total vertex count");
    for (int i = 0; i < g.n1(); ++i)
        for (int j = 0; j < g.n2(); ++j)
            if (lspec.member(std::popcount(fam.sets[i] & fam.sets[g.n1() + j])) !=
                g.has_edge(i, j))
                return false;
    return true;
}

bool verify_uniform_representation(const Graph& g, const SetFamily& fam, const LSpec& lspec,
                                   const std::vector<int>& K) {
    if (!K.empty()) {
        for (int i = 0; i < fam.size(); ++i)
            if (std::find(K.begin(), K.end(), fam.set_size(i)) == K.end()) return false;
    }
    return verify_representation(g, fam, lspec);
}

ThetaResult theta_exact(const Graph& g, const LSpec& lspec, const ThetaLimits& limits) {
    Problem prob;
    prob.n_vertices = g.n();
    prob.order = g.assignment_order();
    prob.back.resize(g.n());
    for (int d = 0; d < g.n(); ++d)
        for (int e = 0; e < d; ++e)
            prob.back[d].push_back({e, g.has_edge(prob.order[e], prob.order[d])});
    prob.lower_bound = (g.n() >= 2 && g.is_twin_free()) ? ceil_log2(g.n()) : 0;
    prob.constrained_pairs = g.n() * (g.n() - 1) / 2;

    ThetaResult res = solve_levels(prob, lspec, limits);
    if (res.value && !verify_representation(g, *res.witness, lspec))
        throw std::logic_error("theta witness failed verification");
    return res;
}

ThetaResult theta_bipartite_exact(const BipartiteGraph& g, const LSpec& lspec,
                                  const ThetaLimits& limits) {
    const Graph united = g.to_graph();
    const int n = united.n();
    Problem prob;
    prob.n_vertices = n;
    prob.order = united.assignment_order();
    prob.back.resize(n);
    auto part = [&](int v) { return v < g.n1() ? 0 : 1; };
    for (int d = 0; d < n; ++d)
        for (int e = 0; e < d; ++e)
            if (part(prob.order[e]) != part(prob.order[d]))
                prob.back[d].push_back({e, united.has_edge(prob.order[e], prob.order[d])});

    bool rows_distinct = true, cols_distinct = true;
    for (int i = 0; i < g.n1() && rows_distinct; ++i)
        for (int i2 = i + 1; i2 < g.n1(); ++i2)
            if (g.row(i) == g.row(i2)) { rows_distinct = false; break; }
    auto col = [&](int j) {
        std::uint64_t c = 0;
        for (int i = 0; i < g.n1(); ++i) c |= ((g.row(i) >> j) & 1u) << i;
        return c;
    };
    for (int j = 0; j < g.n2() && cols_distinct; ++j)
        for (int j2 = j + 1; j2 < g.n2(); ++j2)
            if (col(j) == col(j2)) { cols_distinct = false; break; }
    prob.lower_bound = std::max(rows_distinct ? ceil_log2(g.n1()) : 0,
                                cols_distinct ? ceil_log2(g.n2()) : 0);
    prob.constrained_pairs = g.n1() * g.n2();

    ThetaResult res = solve_levels(prob, lspec, limits);
    if (res.value && !verify_bipartite_representation(g, *res.witness, lspec))
        throw std::logic_error("bipartite theta witness failed verification");
    return res;
}

ThetaResult theta_uniform_exact(const Graph& g, const LSpec& lspec, const std::vector<int>& K,
                                const ThetaLimits& limits) {
    if (K.empty()) throw std::invalid_argument("size set K must be nonempty");
    std::vector<int> sizes = K;
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    if (sizes.front() < 0) throw std::invalid_argument("set sizes must be >= 0");
    const int l_max = limits.l_max >= 0 ? limits.l_max
                                        : default_l_max(g.n() * (g.n() - 1) / 2, lspec);
    if (sizes.back() > l_max)
        throw std::invalid_argument("every size in K must be <= the universe cap");

    Problem prob;
    prob.n_vertices = g.n();
    prob.order = g.assignment_order();
    prob.back.resize(g.n());
    for (int d = 0; d < g.n(); ++d)
        for (int e = 0; e < d; ++e)
            prob.back[d].push_back({e, g.has_edge(prob.order[e], prob.order[d])});
    prob.K = sizes;
    prob.constrained_pairs = g.n() * (g.n() - 1) / 2;

    prob.lower_bound = 0;
    if (g.n() >= 2 && g.is_twin_free()) {
        // sets must be pairwise distinct, so the admissible sizes must offer
        // at least n distinct subsets
        for (int l = 0; l <= l_max; ++l) {
            BigInt available = 0;
            for (int k : sizes)
                if (k <= l) available += binomial(l, k);
            if (available >= g.n()) { prob.lower_bound = l; break; }
            prob.lower_bound = l + 1;
        }
    }

    ThetaResult res = solve_levels(prob, lspec, limits);
    if (res.value && !verify_uniform_representation(g, *res.witness, lspec, sizes))
        throw std::logic_error("uniform theta witness failed verification");
    return res;
}

}  // namespace thetakit
