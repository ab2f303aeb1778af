#include "thetakit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "thetakit/graph6.hpp"
#include "thetakit/minrank.hpp"
#include "thetakit/set_family.hpp"
#include "thetakit/theta.hpp"

namespace thetakit {

namespace {

const std::vector<std::pair<TheoremId, const char*>>& name_table() {
    static const std::vector<std::pair<TheoremId, const char*>> table = {
        {TheoremId::T1_1, "T1.1"},       {TheoremId::T1_2i, "T1.2i"},
        {TheoremId::T1_2ii, "T1.2ii"},   {TheoremId::P2_1a, "P2.1a"},
        {TheoremId::P2_1b, "P2.1b"},     {TheoremId::P2_2, "P2.2"},
        {TheoremId::T3_1i, "T3.1i"},     {TheoremId::T3_1ii, "T3.1ii"},
        {TheoremId::C3_2i, "C3.2i"},     {TheoremId::C3_2ii, "C3.2ii"},
        {TheoremId::T3_3, "T3.3"},       {TheoremId::T4_1i, "T4.1i"},
        {TheoremId::T4_1ii, "T4.1ii"},   {TheoremId::C4_2i, "C4.2i"},
        {TheoremId::C4_2ii, "C4.2ii"},   {TheoremId::TightGF2, "TIGHT-GF2"},
        {TheoremId::T5_1, "T5.1"},       {TheoremId::T5_2, "T5.2"},
        {TheoremId::StarIneq, "STAR-INEQ"},
    };
    return table;
}

BigInt ipow(const BigInt& base, int e) {
    BigInt out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

std::string bip_id(const BipartiteGraph& g) {
    std::string s = std::to_string(g.n1()) + "x" + std::to_string(g.n2()) + ":";
    for (int i = 0; i < g.n1(); ++i) {
        if (i) s += '|';
        for (int j = 0; j < g.n2(); ++j) s += g.has_edge(i, j) ? '1' : '0';
    }
    return s;
}

// Twin-freeness is read on the union graph; this catches equal rows, equal
// columns, and the K_{1,1} cross pair alike.
bool bipartite_twin_free(const BipartiteGraph& g) { return g.to_graph().is_twin_free(); }

struct RowTask {
    const Graph* g = nullptr;
    const BipartiteGraph* bg = nullptr;
    int a = 0, b = 0, c = 0, d = 0;  // (l,k,i,t) for P2.2, (x,s) for STAR-INEQ
};

struct RowCompute {
    TheoremId id;
    const VerifyParams& params;
    std::string param_text;

    ThetaLimits theta_limits(std::chrono::steady_clock::time_point start,
                             int l_max_override = -2) const {
        ThetaLimits tl;
        tl.l_max = l_max_override == -2 ? params.theta_l_max : l_max_override;
        if (params.budget_ms > 0)
            tl.deadline = start + std::chrono::milliseconds(params.budget_ms);
        return tl;
    }
    MinrankLimits mr_limits() const { return MinrankLimits{params.minrank_budget}; }

    std::optional<BigInt> theta(const Graph& g, const LSpec& l,
                                std::chrono::steady_clock::time_point start) const {
        const ThetaResult r = theta_exact(g, l, theta_limits(start));
        if (!r.value) return std::nullopt;
        return BigInt(*r.value);
    }
    std::optional<BigInt> theta_bip(const BipartiteGraph& g, const LSpec& l,
                                    std::chrono::steady_clock::time_point start) const {
        const ThetaResult r = theta_bipartite_exact(g, l, theta_limits(start));
        if (!r.value) return std::nullopt;
        return BigInt(*r.value);
    }
    std::optional<BigInt> theta_uniform(const Graph& g, const LSpec& l,
                                        const std::vector<int>& K,
                                        std::chrono::steady_clock::time_point start) const {
        // widen the universe cap so the largest admissible set size fits
        int cap = params.theta_l_max >= 0
                      ? params.theta_l_max
                      : default_l_max(g.n() * (g.n() - 1) / 2, l);
        cap = std::max(cap, *std::max_element(K.begin(), K.end()));
        const ThetaResult r = theta_uniform_exact(g, l, K, theta_limits(start, cap));
        if (!r.value) return std::nullopt;
        return BigInt(*r.value);
    }
    std::optional<BigInt> mr(const Graph& g, long long p) const {
        const MinrankResult r = minrank_gfp(g, p, mr_limits());
        if (!r.value) return std::nullopt;
        return BigInt(*r.value);
    }
    std::optional<BigInt> bmr(const BipartiteGraph& g, long long p) const {
        const MinrankResult r = bipartite_minrank_gfp(g, p, mr_limits());
        if (!r.value) return std::nullopt;
        return BigInt(*r.value);
    }
    static std::optional<BigInt> lift(std::optional<int> v) {
        if (!v) return std::nullopt;
        return BigInt(*v);
    }
    static std::optional<BigInt> pow_opt(const std::optional<BigInt>& v, int e) {
        if (!v) return std::nullopt;
        return ipow(*v, e);
    }
    static std::optional<BigInt> binom_tail(const std::optional<BigInt>& v, int t_lo, int t_hi) {
        if (!v) return std::nullopt;
        if (*v < 0 || *v > 1000000) throw std::logic_error("theta out of range");
        const long long x = v->convert_to<long long>();
        BigInt sum = 0;
        for (int t = std::max(t_lo, 0); t <= t_hi; ++t) sum += binomial(x, t);
        return sum;
    }

    BoundReport finish(std::string graph_id, std::optional<BigInt> lhs,
                       std::optional<BigInt> rhs, bool equality = false) const {
        BoundReport row;
        row.graph_id = std::move(graph_id);
        row.theorem = id;
        row.params = param_text;
        row.lhs = std::move(lhs);
        row.rhs = std::move(rhs);
        if (row.lhs && row.rhs) {
            row.slack = *row.rhs - *row.lhs;
            const bool ok = equality ? (*row.lhs == *row.rhs) : (*row.lhs <= *row.rhs);
            row.verdict = ok ? Verdict::Holds : Verdict::Fails;
        } else {
            row.verdict = Verdict::Indeterminate;
        }
        return row;
    }

    BoundReport run(const RowTask& task) const {
        const auto start = std::chrono::steady_clock::now();
        BoundReport row = dispatch(task, start);
        if (params.timing) {
            const auto end = std::chrono::steady_clock::now();
            row.millis =
                std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
        }
        return row;
    }

    BoundReport dispatch(const RowTask& task, std::chrono::steady_clock::time_point start) const {
        const LSpec* L = params.lspec ? &*params.lspec : nullptr;
        const int s = L ? L->s() : 0;
        const long long p = (L && L->kind() == LSpec::Kind::Modular) ? L->p() : 2;

        switch (id) {
            case TheoremId::T1_1: {
                const Graph& g = *task.g;
                std::vector<long long> low(params.k);
                for (int i = 0; i < params.k; ++i) low[i] = i;
                const auto lhs = theta(g, LSpec::threshold(), start);
                const auto th = theta(g.complement(), LSpec::finite(low), start);
                return finish(to_graph6(g), lhs, pow_opt(th, params.k));
            }
            case TheoremId::T1_2i: {
                const BipartiteGraph& g = *task.bg;
                const auto th = theta_bip(g.bipartite_complement(), *L, start);
                std::optional<BigInt> rhs = pow_opt(th, s);
                if (rhs) *rhs *= g.max_degree();
                return finish(bip_id(g), BigInt(g.n1()), std::move(rhs));
            }
            case TheoremId::T1_2ii: {
                const BipartiteGraph& g = *task.bg;
                const auto th = theta_bip(g, *L, start);
                std::optional<BigInt> rhs = pow_opt(th, static_cast<int>(p - 1));
                if (rhs) *rhs *= BigInt(s) * g.max_degree();
                return finish(bip_id(g), BigInt(g.n1()), std::move(rhs));
            }
            case TheoremId::P2_1a: {
                const Graph& g = *task.g;
                return finish(to_graph6(g), mr(g, p), BigInt(g.edge_count()));
            }
            case TheoremId::P2_1b: {
                const Graph& g = *task.g;
                const auto full = mr(g, p);
                std::optional<BigInt> worst = BigInt(0);
                for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << g.n()) && worst; ++sub) {
                    std::vector<int> vs;
                    for (int v = 0; v < g.n(); ++v)
                        if ((sub >> v) & 1u) vs.push_back(v);
                    const auto part = mr(g.induced_subgraph(vs), p);
                    if (!part)
                        worst = std::nullopt;
                    else if (*part > *worst)
                        worst = part;
                }
                return finish(to_graph6(g), std::move(worst), full);
            }
            case TheoremId::P2_2: {
                const int l = task.a, k = task.b, i = task.c, t = task.d;
                const auto ksets = subsets_of_size(l, k);
                long long failures = 0;
                for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << ksets.size()); ++pick) {
                    SetFamily fam;
                    fam.ground = l;
                    for (std::size_t e = 0; e < ksets.size(); ++e)
                        if ((pick >> e) & 1u) fam.sets.push_back(ksets[e]);
                    if (!check_inclusion_identity(fam, k, i, t)) ++failures;
                }
                return finish("-", BigInt(failures), BigInt(0));
            }
            case TheoremId::T3_1i: {
                const Graph& g = *task.g;
                const auto th = theta(g, *L, start);
                return finish(to_graph6(g), mr(g.complement(), p), binom_tail(th, 0, s));
            }
            case TheoremId::T3_1ii: {
                const Graph& g = *task.g;
                const auto th = theta(g, *L, start);
                return finish(to_graph6(g), mr(g, p),
                              binom_tail(th, 0, static_cast<int>(p - 1)));
            }
            case TheoremId::C3_2i: {
                const Graph& g = *task.g;
                const auto th = theta(g.complement(), *L, start);
                return finish(to_graph6(g), mr(g, p), pow_opt(th, s));
            }
            case TheoremId::C3_2ii: {
                const Graph& g = *task.g;
                const auto th = theta(g, *L, start);
                return finish(to_graph6(g), mr(g, p), pow_opt(th, static_cast<int>(p - 1)));
            }
            case TheoremId::T3_3: {
                const Graph& g = *task.g;
                const auto th = theta(g.complement(), *L, start);
                return finish(to_graph6(g), lift(minrank_real_closed_form(g)), pow_opt(th, s));
            }
            case TheoremId::T4_1i: {
                const BipartiteGraph& g = *task.bg;
                const auto th = theta_bip(g, *L, start);
                return finish(bip_id(g), bmr(g.bipartite_complement(), p), binom_tail(th, 0, s));
            }
            case TheoremId::T4_1ii: {
                const BipartiteGraph& g = *task.bg;
                const auto th = theta_bip(g, *L, start);
                return finish(bip_id(g), bmr(g, p),
                              binom_tail(th, 0, static_cast<int>(p - 1)));
            }
            case TheoremId::C4_2i: {
                const BipartiteGraph& g = *task.bg;
                const auto th = theta_bip(g.bipartite_complement(), *L, start);
                return finish(bip_id(g), bmr(g, p), pow_opt(th, s));
            }
            case TheoremId::C4_2ii: {
                const BipartiteGraph& g = *task.bg;
                const auto th = theta_bip(g, *L, start);
                return finish(bip_id(g), bmr(g, p), pow_opt(th, static_cast<int>(p - 1)));
            }
            case TheoremId::TightGF2: {
                const BipartiteGraph& g = *task.bg;
                const LSpec odd = LSpec::modular(2, {1});
                const auto th = theta_bip(g, odd, start);
                return finish(bip_id(g), th, bmr(g, 2), /*equality=*/true);
            }
            case TheoremId::T5_1: {
                const Graph& g = *task.g;
                const auto th = theta_uniform(g, *L, {params.k}, start);
                std::optional<BigInt> rhs;
                if (th) rhs = binomial(th->convert_to<long long>(), s);
                return finish(to_graph6(g), mr(g.complement(), p), std::move(rhs));
            }
            case TheoremId::T5_2: {
                const Graph& g = *task.g;
                const int r = static_cast<int>(params.sizes.size());
                const auto th = theta_uniform(g, *L, params.sizes, start);
                std::optional<BigInt> rhs = binom_tail(th, s - r + 1, s);
                if (rhs) *rhs *= r;
                return finish(to_graph6(g), lift(minrank_real_closed_form(g.complement())),
                              std::move(rhs));
            }
            case TheoremId::StarIneq: {
                const int x = task.a, sexp = task.b;
                BigInt lhs = 0;
                for (int i = 0; i <= sexp; ++i) lhs += binomial(x, i);
                return finish("-", lhs, ipow(BigInt(x), sexp));
            }
        }
        throw std::logic_error("unhandled theorem");
    }
};

std::string param_text_for(TheoremId id, const VerifyParams& params) {
    std::ostringstream out;
    switch (id) {
        case TheoremId::T1_1:
            out << "k=" << params.k;
            break;
        case TheoremId::P2_1a:
        case TheoremId::P2_1b:
            out << "p="
                << ((params.lspec && params.lspec->kind() == LSpec::Kind::Modular)
                        ? params.lspec->p()
                        : 2);
            break;
        case TheoremId::P2_2:
            out << "l_limit=" << params.l_limit;
            break;
        case TheoremId::TightGF2:
            out << "L=mod:2:1";
            break;
        case TheoremId::StarIneq:
            out << "x_max=" << params.x_max << ";s_max=" << params.s_max;
            break;
        case TheoremId::T5_1:
            out << "L=" << params.lspec->to_string() << ";k=" << params.k;
            break;
        case TheoremId::T5_2: {
            out << "L=" << params.lspec->to_string() << ";K=";
            for (std::size_t i = 0; i < params.sizes.size(); ++i)
                out << (i ? "," : "") << params.sizes[i];
            break;
        }
        default:
            out << "L=" << params.lspec->to_string();
            break;
    }
    return out.str();
}

void validate(TheoremId id, const VerifyParams& params) {
    auto need_lspec = [&](LSpec::Kind kind, const char* what) {
        if (!params.lspec || params.lspec->kind() != kind)
            throw std::invalid_argument(std::string("theorem requires ") + what);
    };
    switch (id) {
        case TheoremId::T1_1:
            if (params.k < 1) throw std::invalid_argument("k must be >= 1");
            break;
        case TheoremId::T1_2i:
        case TheoremId::T1_2ii:
        case TheoremId::T3_1i:
        case TheoremId::T3_1ii:
        case TheoremId::T4_1i:
        case TheoremId::T4_1ii:
            need_lspec(LSpec::Kind::Modular, "a modular parameter set L");
            break;
        case TheoremId::C3_2i:
        case TheoremId::C3_2ii:
        case TheoremId::C4_2i:
        case TheoremId::C4_2ii:
            need_lspec(LSpec::Kind::Modular, "a modular parameter set L");
            if (params.lspec->s() < 2)
                throw std::invalid_argument("corollary requires |R| >= 2");
            break;
        case TheoremId::T3_3:
            need_lspec(LSpec::Kind::Finite, "a finite parameter set L");
            if (params.lspec->s() < 2)
                throw std::invalid_argument("theorem requires |L| >= 2");
            break;
        case TheoremId::T5_1:
            need_lspec(LSpec::Kind::Modular, "a modular parameter set L");
            if (params.k < 1) throw std::invalid_argument("k must be >= 1");
            if (params.k < params.lspec->s())
                throw std::invalid_argument("uniform size k must be >= |R|");
            break;
        case TheoremId::T5_2: {
            need_lspec(LSpec::Kind::Finite, "a finite parameter set L");
            if (params.sizes.empty()) throw std::invalid_argument("size set K must be nonempty");
            const int s = params.lspec->s();
            const int r = static_cast<int>(params.sizes.size());
            for (int k : params.sizes)
                if (k <= s - r)
                    throw std::invalid_argument("every size in K must exceed |L| - |K|");
            break;
        }
        case TheoremId::P2_2:
            if (params.l_limit < 1 || params.l_limit > 5)
                throw std::invalid_argument("l_limit must be between 1 and 5");
            break;
        case TheoremId::StarIneq:
            if (params.x_max < 2 || params.s_max < 2)
                throw std::invalid_argument("x_max and s_max must both be >= 2");
            break;
        default:
            break;
    }
}

bool hypothesis_filtered(TheoremId id) {
    switch (id) {
        case TheoremId::T1_2i:
        case TheoremId::T1_2ii:
        case TheoremId::C3_2i:
        case TheoremId::C3_2ii:
        case TheoremId::T3_3:
        case TheoremId::C4_2i:
        case TheoremId::C4_2ii:
            return true;
        default:
            return false;
    }
}

std::vector<RowTask> make_tasks(const Corpus& corpus, TheoremId id,
                                const VerifyParams& params) {
    std::vector<RowTask> tasks;
    if (uses_graph_corpus(id)) {
        for (const Graph& g : corpus.graphs) {
            if (params.hypothesis_filter && hypothesis_filtered(id) &&
                (!g.is_twin_free() || g.has_isolated_vertex()))
                continue;
            RowTask t;
            t.g = &g;
            tasks.push_back(t);
        }
    } else if (uses_bipartite_corpus(id)) {
        for (const BipartiteGraph& g : corpus.bipartite) {
            if (id == TheoremId::T1_2i || id == TheoremId::T1_2ii) {
                if (g.n1() != g.n2() || g.max_degree() == 0) continue;
            }
            if (params.hypothesis_filter && hypothesis_filtered(id) &&
                (!bipartite_twin_free(g) || g.has_isolated_v1() || g.has_isolated_v2()))
                continue;
            RowTask t;
            t.bg = &g;
            tasks.push_back(t);
        }
    } else if (id == TheoremId::P2_2) {
        for (int l = 1; l <= params.l_limit; ++l)
            for (int k = 0; k <= l; ++k)
                for (int i = 0; i <= k; ++i)
                    for (int t = 0; t <= i; ++t) tasks.push_back({nullptr, nullptr, l, k, i, t});
    } else {  // STAR-INEQ
        for (int x = 2; x <= params.x_max; ++x)
            for (int sexp = 2; sexp <= params.s_max; ++sexp)
                tasks.push_back({nullptr, nullptr, x, sexp, 0, 0});
    }
    return tasks;
}

}  // namespace

std::string to_string(TheoremId id) {
    for (const auto& [tid, name] : name_table())
        if (tid == id) return name;
    throw std::logic_error("unknown theorem id");
}

std::optional<TheoremId> theorem_from_string(const std::string& name) {
    for (const auto& [tid, tname] : name_table())
        if (name == tname) return tid;
    return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
    static const std::vector<TheoremId> ids = [] {
        std::vector<TheoremId> out;
        for (const auto& [tid, name] : name_table()) out.push_back(tid);
        return out;
    }();
    return ids;
}

bool uses_bipartite_corpus(TheoremId id) {
    switch (id) {
        case TheoremId::T1_2i:
        case TheoremId::T1_2ii:
        case TheoremId::T4_1i:
        case TheoremId::T4_1ii:
        case TheoremId::C4_2i:
        case TheoremId::C4_2ii:
        case TheoremId::TightGF2:
            return true;
        default:
            return false;
    }
}

bool uses_graph_corpus(TheoremId id) {
    switch (id) {
        case TheoremId::T1_1:
        case TheoremId::P2_1a:
        case TheoremId::P2_1b:
        case TheoremId::T3_1i:
        case TheoremId::T3_1ii:
        case TheoremId::C3_2i:
        case TheoremId::C3_2ii:
        case TheoremId::T3_3:
        case TheoremId::T5_1:
        case TheoremId::T5_2:
            return true;
        default:
            return false;
    }
}

Corpus Corpus::all_graphs(int n_max) {
    if (n_max < 1 || n_max > 7)
        throw std::invalid_argument("graph corpus supports 1 <= n_max <= 7");
    Corpus c;
    for (int n = 1; n <= n_max; ++n)
        enumerate_graphs(n, [&](const Graph& g) { c.graphs.push_back(g); });
    return c;
}

Corpus Corpus::all_bipartite(int parts_max) {
    if (parts_max < 1 || parts_max > 4)
        throw std::invalid_argument("bipartite corpus supports 1 <= parts_max <= 4");
    Corpus c;
    for (int n1 = 1; n1 <= parts_max; ++n1)
        for (int n2 = 1; n2 <= parts_max; ++n2)
            enumerate_bipartite(n1, n2,
                                [&](const BipartiteGraph& g) { c.bipartite.push_back(g); });
    return c;
}

VerifyOutcome check_theorem(const Corpus& corpus, TheoremId id, const VerifyParams& params) {
    validate(id, params);
    VerifyParams normalized = params;
    if (id == TheoremId::T5_2) {
        std::sort(normalized.sizes.begin(), normalized.sizes.end());
        normalized.sizes.erase(std::unique(normalized.sizes.begin(), normalized.sizes.end()),
                               normalized.sizes.end());
    }

    const std::vector<RowTask> tasks = make_tasks(corpus, id, normalized);
    RowCompute compute{id, normalized, param_text_for(id, normalized)};

    std::vector<BoundReport> rows(tasks.size());
    const std::size_t njobs =
        std::max<std::size_t>(1, std::min<std::size_t>(normalized.jobs, tasks.size()));
    if (njobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            rows[i] = compute.run(tasks[i]);
            if (rows[i].verdict == Verdict::Fails) break;
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> first_fail{tasks.size()};
        auto work = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size() || i > first_fail.load()) return;
                rows[i] = compute.run(tasks[i]);
                if (rows[i].verdict == Verdict::Fails) {
                    std::size_t cur = first_fail.load();
                    while (i < cur && !first_fail.compare_exchange_weak(cur, i)) {}
                }
            }
        };
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < njobs; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    VerifyOutcome out;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        out.rows.push_back(rows[i]);
        if (rows[i].verdict == Verdict::Indeterminate) out.any_indeterminate = true;
        if (rows[i].verdict == Verdict::Fails) {
            out.failure = rows[i];
            break;
        }
    }
    return out;
}

namespace {

std::string verdict_text(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "true";
        case Verdict::Fails: return "false";
        case Verdict::Indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

std::string opt_text(const std::optional<BigInt>& v, const char* missing) {
    return v ? v->str() : std::string(missing);
}

}  // namespace

std::string to_csv(const std::vector<BoundReport>& rows) {
    std::ostringstream out;
    out << "graph6,theorem,params,lhs,rhs,holds,slack,millis\n";
    for (const BoundReport& r : rows) {
        out << r.graph_id << ',' << to_string(r.theorem) << ",\"" << r.params << "\","
            << opt_text(r.lhs, "unknown") << ',' << opt_text(r.rhs, "unknown") << ','
            << verdict_text(r.verdict) << ',' << opt_text(r.slack, "") << ',' << r.millis
            << '\n';
    }
    return out.str();
}

std::string to_json(const std::vector<BoundReport>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const BoundReport& r : rows) {
        nlohmann::ordered_json obj;
        obj["graph6"] = r.graph_id;
        obj["theorem"] = to_string(r.theorem);
        obj["params"] = r.params;
        obj["lhs"] = r.lhs ? nlohmann::ordered_json(r.lhs->str())
                           : nlohmann::ordered_json(nullptr);
        obj["rhs"] = r.rhs ? nlohmann::ordered_json(r.rhs->str())
                           : nlohmann::ordered_json(nullptr);
        obj["holds"] = verdict_text(r.verdict);
        obj["slack"] = r.slack ? nlohmann::ordered_json(r.slack->str())
                               : nlohmann::ordered_json(nullptr);
        obj["millis"] = r.millis;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::string failure_bundle(const BoundReport& row, const VerifyParams& params) {
    std::ostringstream out;
    out << "BOUND VIOLATION\n";
    out << "theorem: " << to_string(row.theorem) << "\n";
    out << "graph: " << row.graph_id << "\n";
    out << "params: " << row.params << "\n";
    out << "lhs: " << opt_text(row.lhs, "unknown") << "\n";
    out << "rhs: " << opt_text(row.rhs, "unknown") << "\n";
    if (row.slack) out << "slack: " << row.slack->str() << "\n";
    out << "reproduce: thetakit verify --theorem " << to_string(row.theorem);
    if (params.lspec) {
        const LSpec& L = *params.lspec;
        if (L.kind() == LSpec::Kind::Modular) {
            out << " --p " << L.p() << " --R ";
            for (std::size_t i = 0; i < L.values().size(); ++i)
                out << (i ? "," : "") << L.values()[i];
        } else if (L.kind() == LSpec::Kind::Finite) {
            out << " --L finite:";
            for (std::size_t i = 0; i < L.values().size(); ++i)
                out << (i ? "," : "") << L.values()[i];
        }
    }
    out << " (graph id above encodes the instance; bipartite ids list biadjacency rows)\n";
    return out.str();
}

}  // namespace thetakit
