#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thetakit/graph.hpp"
#include "thetakit/lspec.hpp"
#include "thetakit/matrix.hpp"

namespace thetakit {

enum class TheoremId {
    T1_1, T1_2i, T1_2ii,
    P2_1a, P2_1b, P2_2,
    T3_1i, T3_1ii, C3_2i, C3_2ii, T3_3,
    T4_1i, T4_1ii, C4_2i, C4_2ii, TightGF2,
    T5_1, T5_2,
    StarIneq,
};

std::string to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(const std::string& name);
const std::vector<TheoremId>& all_theorems();

// True for the inequality families that read a bipartite corpus
// (T1.2, T4.1, C4.2, TIGHT-GF2); P2.2 and STAR-INEQ read no corpus.
bool uses_bipartite_corpus(TheoremId id);
bool uses_graph_corpus(TheoremId id);

struct VerifyParams {
    std::optional<LSpec> lspec;    // modular/finite parameter set
    int k = 2;                     // T1.1 exponent; T5.1 uniform size
    std::vector<int> sizes;        // T5.2 size set K
    int l_limit = 4;               // P2.2 ground-set cap
    int x_max = 30;                // STAR-INEQ ranges (x >= 2, s >= 2)
    int s_max = 8;
    int theta_l_max = -1;          // override for the theta searches
    long long budget_ms = 10000;   // per-row deadline
    std::uint64_t minrank_budget = 50'000'000;
    int jobs = 1;
    bool timing = false;           // fill millis (off: column stays 0)
    // Emit rows only for twin-free graphs with no isolated vertex, matching
    // the hypotheses the bounds are stated under. Off is useful for
    // exercising counterexample reporting.
    bool hypothesis_filter = true;
};

struct Corpus {
    std::vector<Graph> graphs;
    std::vector<BipartiteGraph> bipartite;

    static Corpus all_graphs(int n_max);
    static Corpus all_bipartite(int parts_max);
};

enum class Verdict { Holds, Fails, Indeterminate };

struct BoundReport {
    std::string graph_id;          // graph6, "n1xn2:rows" for bipartite, or "-"
    TheoremId theorem;
    std::string params;
    std::optional<BigInt> lhs, rhs;
    Verdict verdict = Verdict::Indeterminate;
    std::optional<BigInt> slack;   // rhs - lhs when both sides known
    long long millis = 0;
    std::string witness_path;      // unused by the CSV/JSON columns
};

struct VerifyOutcome {
    std::vector<BoundReport> rows;
    bool any_indeterminate = false;
    // First failing row, if any; the row stream stops right after it.
    std::optional<BoundReport> failure;
};

// One report per corpus element (or per parameter tuple for the corpus-free
// families). The comparison is lhs <= rhs over exact integers, except
// TIGHT-GF2 rows which demand lhs == rhs; fractional powers are
// cross-multiplied away before comparison.
VerifyOutcome check_theorem(const Corpus& corpus, TheoremId id, const VerifyParams& params);

std::string to_csv(const std::vector<BoundReport>& rows);
std::string to_json(const std::vector<BoundReport>& rows);
// Multi-line reproduction bundle for a failing row.
std::string failure_bundle(const BoundReport& row, const VerifyParams& params);

}  // namespace thetakit
