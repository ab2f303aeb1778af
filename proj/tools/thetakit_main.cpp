#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "thetakit/coeffs.hpp"
#include "thetakit/graph.hpp"
#include "thetakit/graph6.hpp"
#include "thetakit/lspec.hpp"
#include "thetakit/minrank.hpp"
#include "thetakit/set_family.hpp"
#include "thetakit/theta.hpp"
#include "thetakit/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIndeterminate = 1;
constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<long long> parse_ll_list(const std::string& csv) {
    std::vector<long long> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in list: " + csv);
        out.push_back(std::stoll(item));
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    for (long long v : parse_ll_list(csv)) out.push_back(static_cast<int>(v));
    return out;
}

thetakit::LSpec lspec_from(const std::string& l_desc, long long p, const std::string& r_text) {
    if (!l_desc.empty()) return thetakit::LSpec::parse(l_desc);
    if (p > 0) {
        if (r_text.empty()) throw std::invalid_argument("--p requires --R");
        return thetakit::LSpec::modular(p, parse_ll_list(r_text));
    }
    throw std::invalid_argument("provide --L <descriptor> or --p <prime> --R <residues>");
}

long long effective_budget_ms(const std::optional<long long>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("THETAKIT_BUDGET_MS")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("THETAKIT_BUDGET_MS is not an integer");
        }
    }
    return 10000;
}

thetakit::ThetaLimits make_theta_limits(int l_max, std::uint64_t nodes, long long budget_ms) {
    thetakit::ThetaLimits limits;
    limits.l_max = l_max;
    limits.node_budget = nodes;
    if (budget_ms > 0)
        limits.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(budget_ms);
    return limits;
}

void print_theta(const thetakit::ThetaResult& res, const thetakit::LSpec& lspec,
                 bool show_witness) {
    if (!res.value) {
        std::cout << "unknown\n";
        return;
    }
    std::cout << *res.value << "\n";
    if (show_witness) {
        std::cout << lspec.to_string() << "\n";
        std::cout << thetakit::to_text(*res.witness);
    }
}

struct VerifyCli {
    std::string theorem;
    std::string l_desc;
    long long p = 0;
    std::string r_text;
    int k = 2;
    std::string sizes_text;
    int n_max = 4;
    int parts_max = 2;
    std::string corpus_file;
    std::string bip_corpus_file;
    int l_limit = 4;
    int x_max = 30;
    int s_max = 8;
    int theta_l_max = -1;
    std::optional<long long> budget_ms;
    std::uint64_t minrank_budget = 50'000'000;
    int jobs = 1;
    bool timing = false;
    bool no_filter = false;
    std::string format = "csv";
    std::string out_file;
};

int run_verify(const VerifyCli& cli) {
    using namespace thetakit;
    const auto id = theorem_from_string(cli.theorem);
    if (!id) throw std::invalid_argument("unknown theorem: " + cli.theorem);

    VerifyParams params;
    params.k = cli.k;
    if (!cli.sizes_text.empty()) params.sizes = parse_int_list(cli.sizes_text);
    params.l_limit = cli.l_limit;
    params.x_max = cli.x_max;
    params.s_max = cli.s_max;
    params.theta_l_max = cli.theta_l_max;
    params.budget_ms = effective_budget_ms(cli.budget_ms);
    params.minrank_budget = cli.minrank_budget;
    params.jobs = cli.jobs;
    params.timing = cli.timing;
    params.hypothesis_filter = !cli.no_filter;
    const bool p_only = *id == thetakit::TheoremId::P2_1a || *id == thetakit::TheoremId::P2_1b;
    if (p_only && cli.p > 0 && cli.l_desc.empty() && cli.r_text.empty()) {
        params.lspec = thetakit::LSpec::modular(cli.p, {0});  // carries only the field order
    } else if (!cli.l_desc.empty() || cli.p > 0) {
        params.lspec = lspec_from(cli.l_desc, cli.p, cli.r_text);
    }

    Corpus corpus;
    if (uses_graph_corpus(*id)) {
        if (!cli.corpus_file.empty()) {
            std::istringstream in(slurp(cli.corpus_file));
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                corpus.graphs.push_back(parse_graph6(line));
            }
        } else {
            corpus = Corpus::all_graphs(cli.n_max);
        }
    } else if (uses_bipartite_corpus(*id)) {
        if (!cli.bip_corpus_file.empty()) {
            std::istringstream in(slurp(cli.bip_corpus_file));
            std::string line, block;
            auto flush = [&] {
                if (!block.empty()) {
                    corpus.bipartite.push_back(parse_bipartite(block));
                    block.clear();
                }
            };
            while (std::getline(in, line)) {
                if (line.empty())
                    flush();
                else
                    block += line + "\n";
            }
            flush();
        } else {
            corpus = Corpus::all_bipartite(cli.parts_max);
        }
    }

    const VerifyOutcome outcome = check_theorem(corpus, *id, params);
    const std::string rendered =
        cli.format == "json" ? to_json(outcome.rows) : to_csv(outcome.rows);
    if (cli.out_file.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(cli.out_file);
        if (!out) throw std::invalid_argument("cannot open output file: " + cli.out_file);
        out << rendered;
    }

    if (outcome.failure) {
        std::cerr << failure_bundle(*outcome.failure, params);
        return kExitViolation;
    }
    return outcome.any_indeterminate ? kExitIndeterminate : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact intersection-representation and minimum-rank toolkit"};
    app.require_subcommand(1);

    // theta
    std::string t_graph6, t_l_desc;
    long long t_p = 0;
    std::string t_r;
    int t_l_max = -1;
    std::uint64_t t_nodes = 0;
    std::optional<long long> t_budget_ms;
    bool t_witness = false;
    auto* theta_cmd = app.add_subcommand("theta", "minimum universe size for a graph");
    theta_cmd->add_option("--graph6", t_graph6, "graph6 string")->required();
    theta_cmd->add_option("--L", t_l_desc, "L descriptor (finite:, mod:, threshold, cofinite-excl:)");
    theta_cmd->add_option("--p", t_p, "prime modulus (with --R)");
    theta_cmd->add_option("--R", t_r, "comma-separated residues");
    theta_cmd->add_option("--l-max", t_l_max, "universe size cap (-1: default rule)");
    theta_cmd->add_option("--budget-nodes", t_nodes, "search node budget (0: unlimited)");
    theta_cmd->add_option("--budget-ms", t_budget_ms, "time budget in ms");
    theta_cmd->add_flag("--witness", t_witness, "print the realizing set family");

    // theta-bip
    std::string b_file, b_l_desc;
    long long b_p = 0;
    std::string b_r;
    int b_l_max = -1;
    std::uint64_t b_nodes = 0;
    std::optional<long long> b_budget_ms;
    bool b_witness = false;
    auto* theta_bip_cmd =
        app.add_subcommand("theta-bip", "minimum universe size, cross pairs only");
    theta_bip_cmd->add_option("--file", b_file, "bipartite text file ('-' for stdin)")->required();
    theta_bip_cmd->add_option("--L", b_l_desc, "L descriptor");
    theta_bip_cmd->add_option("--p", b_p, "prime modulus (with --R)");
    theta_bip_cmd->add_option("--R", b_r, "comma-separated residues");
    theta_bip_cmd->add_option("--l-max", b_l_max, "universe size cap");
    theta_bip_cmd->add_option("--budget-nodes", b_nodes, "search node budget");
    theta_bip_cmd->add_option("--budget-ms", b_budget_ms, "time budget in ms");
    theta_bip_cmd->add_flag("--witness", b_witness, "print the realizing set family");

    // theta-uniform
    std::string u_graph6, u_l_desc, u_sizes;
    long long u_p = 0;
    std::string u_r;
    int u_l_max = -1;
    std::uint64_t u_nodes = 0;
    std::optional<long long> u_budget_ms;
    bool u_witness = false;
    auto* theta_uni_cmd =
        app.add_subcommand("theta-uniform", "minimum universe size with restricted set sizes");
    theta_uni_cmd->add_option("--graph6", u_graph6, "graph6 string")->required();
    theta_uni_cmd->add_option("--K", u_sizes, "comma-separated admissible set sizes")->required();
    theta_uni_cmd->add_option("--L", u_l_desc, "L descriptor");
    theta_uni_cmd->add_option("--p", u_p, "prime modulus (with --R)");
    theta_uni_cmd->add_option("--R", u_r, "comma-separated residues");
    theta_uni_cmd->add_option("--l-max", u_l_max, "universe size cap");
    theta_uni_cmd->add_option("--budget-nodes", u_nodes, "search node budget");
    theta_uni_cmd->add_option("--budget-ms", u_budget_ms, "time budget in ms");
    theta_uni_cmd->add_flag("--witness", u_witness, "print the realizing set family");

    // minrank
    std::string m_graph6;
    long long m_p = 2;
    std::uint64_t m_nodes = 50'000'000;
    bool m_witness = false;
    auto* minrank_cmd = app.add_subcommand("minrank", "minimum GF(p) rank fitting a graph");
    minrank_cmd->add_option("--graph6", m_graph6, "graph6 string")->required();
    minrank_cmd->add_option("--p", m_p, "prime field order")->required();
    minrank_cmd->add_option("--budget-nodes", m_nodes, "candidate matrix budget");
    minrank_cmd->add_flag("--witness", m_witness, "print a realizing matrix");

    // bminrank
    std::string bm_file;
    long long bm_p = 2;
    std::uint64_t bm_nodes = 50'000'000;
    bool bm_witness = false;
    auto* bminrank_cmd =
        app.add_subcommand("bminrank", "minimum GF(p) rank fitting a biadjacency pattern");
    bminrank_cmd->add_option("--file", bm_file, "bipartite text file ('-' for stdin)")->required();
    bminrank_cmd->add_option("--p", bm_p, "prime field order")->required();
    bminrank_cmd->add_option("--budget-nodes", bm_nodes, "candidate matrix budget");
    bminrank_cmd->add_flag("--witness", bm_witness, "print a realizing matrix");

    // coeffs
    long long c_p = 0;
    std::string c_r;
    std::optional<long long> c_fermat;
    auto* coeffs_cmd =
        app.add_subcommand("coeffs", "binomial-basis coefficients of the mod-p indicator");
    coeffs_cmd->add_option("--p", c_p, "prime modulus")->required();
    coeffs_cmd->add_option("--R", c_r, "comma-separated residues (product form)");
    coeffs_cmd->add_option("--fermat", c_fermat, "single residue r (Fermat form)");

    // incmat
    int i_l = 0, i_i = 0, i_t = 0;
    std::string i_family;
    auto* incmat_cmd = app.add_subcommand("incmat", "inclusion matrices in text form");
    incmat_cmd->add_option("--l", i_l, "ground set size (complete inclusion matrix)");
    incmat_cmd->add_option("--i", i_i, "row subset size");
    incmat_cmd->add_option("--t", i_t, "column subset size")->required();
    incmat_cmd->add_option("--family", i_family, "set family file (rows from the family)");

    // witness
    std::string w_family, w_variant = "product";
    long long w_p = 0;
    std::string w_r;
    bool w_rank = false;
    auto* witness_cmd =
        app.add_subcommand("witness", "GF(p) witness matrix of a set family");
    witness_cmd->add_option("--family", w_family, "set family file ('-' for stdin)")->required();
    witness_cmd->add_option("--p", w_p, "prime modulus")->required();
    witness_cmd->add_option("--R", w_r, "comma-separated residues")->required();
    witness_cmd->add_option("--variant", w_variant, "product | fermat");
    witness_cmd->add_flag("--rank", w_rank, "print only the rank");

    // verify
    VerifyCli v;
    auto* verify_cmd = app.add_subcommand("verify", "check one bound family over a corpus");
    verify_cmd->add_option("--theorem", v.theorem, "bound family name, e.g. T3.1i")->required();
    verify_cmd->add_option("--L", v.l_desc, "L descriptor");
    verify_cmd->add_option("--p", v.p, "prime modulus (with --R)");
    verify_cmd->add_option("--R", v.r_text, "comma-separated residues");
    verify_cmd->add_option("--k", v.k, "exponent for T1.1 / uniform size for T5.1");
    verify_cmd->add_option("--K", v.sizes_text, "comma-separated size set for T5.2");
    verify_cmd->add_option("--n-max", v.n_max, "graph corpus: all labeled graphs up to n");
    verify_cmd->add_option("--parts-max", v.parts_max, "bipartite corpus: part size cap");
    verify_cmd->add_option("--corpus", v.corpus_file, "graph6 lines replacing the default corpus");
    verify_cmd->add_option("--bip-corpus", v.bip_corpus_file,
                           "bipartite blocks (blank-line separated)");
    verify_cmd->add_option("--l-limit", v.l_limit, "P2.2 ground set cap (<= 5)");
    verify_cmd->add_option("--x-max", v.x_max, "STAR-INEQ x range");
    verify_cmd->add_option("--s-max", v.s_max, "STAR-INEQ s range");
    verify_cmd->add_option("--theta-l-max", v.theta_l_max, "universe cap override");
    verify_cmd->add_option("--budget-ms", v.budget_ms,
                           "per-row time budget (overrides THETAKIT_BUDGET_MS)");
    verify_cmd->add_option("--minrank-budget", v.minrank_budget, "candidate matrix budget");
    verify_cmd->add_option("--jobs", v.jobs, "worker threads");
    verify_cmd->add_flag("--timing", v.timing, "fill the millis column");
    verify_cmd->add_flag("--no-hypothesis-filter", v.no_filter,
                         "keep rows for graphs outside the stated hypotheses");
    verify_cmd->add_option("--format", v.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    verify_cmd->add_option("--out", v.out_file, "write the report here instead of stdout");

    // corpus
    int cor_n_max = 0, cor_parts_max = 0;
    auto* corpus_cmd = app.add_subcommand("corpus", "print the default corpora");
    corpus_cmd->add_option("--n-max", cor_n_max, "graph6 lines for all labeled graphs up to n");
    corpus_cmd->add_option("--parts-max", cor_parts_max, "bipartite blocks up to the part cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        using namespace thetakit;
        if (theta_cmd->parsed()) {
            const Graph g = parse_graph6(t_graph6);
            const LSpec L = lspec_from(t_l_desc, t_p, t_r);
            const auto res =
                theta_exact(g, L, make_theta_limits(t_l_max, t_nodes,
                                                    t_budget_ms ? *t_budget_ms : 0));
            print_theta(res, L, t_witness);
            return res.value ? kExitOk : kExitIndeterminate;
        }
        if (theta_bip_cmd->parsed()) {
            const BipartiteGraph g = parse_bipartite(slurp(b_file));
            const LSpec L = lspec_from(b_l_desc, b_p, b_r);
            const auto res = theta_bipartite_exact(
                g, L, make_theta_limits(b_l_max, b_nodes, b_budget_ms ? *b_budget_ms : 0));
            print_theta(res, L, b_witness);
            return res.value ? kExitOk : kExitIndeterminate;
        }
        if (theta_uni_cmd->parsed()) {
            const Graph g = parse_graph6(u_graph6);
            const LSpec L = lspec_from(u_l_desc, u_p, u_r);
            const auto res = theta_uniform_exact(
                g, L, parse_int_list(u_sizes),
                make_theta_limits(u_l_max, u_nodes, u_budget_ms ? *u_budget_ms : 0));
            print_theta(res, L, u_witness);
            return res.value ? kExitOk : kExitIndeterminate;
        }
        if (minrank_cmd->parsed()) {
            const Graph g = parse_graph6(m_graph6);
            const auto res = minrank_gfp(g, m_p, MinrankLimits{m_nodes});
            if (!res.value) {
                std::cout << "unknown\n";
                return kExitIndeterminate;
            }
            std::cout << *res.value << "\n";
            if (m_witness) std::cout << res.witness->to_text();
            return kExitOk;
        }
        if (bminrank_cmd->parsed()) {
            const BipartiteGraph g = parse_bipartite(slurp(bm_file));
            const auto res = bipartite_minrank_gfp(g, bm_p, MinrankLimits{bm_nodes});
            if (!res.value) {
                std::cout << "unknown\n";
                return kExitIndeterminate;
            }
            std::cout << *res.value << "\n";
            if (bm_witness) std::cout << res.witness->to_text();
            return kExitOk;
        }
        if (coeffs_cmd->parsed()) {
            CoeffVector cv;
            if (c_fermat) {
                cv = fermat_basis_coeffs(*c_fermat, c_p);
                std::cout << "b:";
            } else {
                if (c_r.empty()) throw std::invalid_argument("provide --R or --fermat");
                cv = binomial_basis_coeffs(parse_ll_list(c_r), c_p);
                std::cout << "a:";
            }
            for (long long a : cv.values) std::cout << " " << a;
            std::cout << "\n";
            return kExitOk;
        }
        if (incmat_cmd->parsed()) {
            if (!i_family.empty()) {
                const SetFamily F = parse_set_family(slurp(i_family));
                std::cout << t_inclusion_matrix(F, i_t).to_text();
            } else {
                if (i_l <= 0) throw std::invalid_argument("provide --family or --l with --i");
                std::cout << complete_inclusion_matrix(i_l, i_i, i_t).to_text();
            }
            return kExitOk;
        }
        if (witness_cmd->parsed()) {
            const SetFamily F = parse_set_family(slurp(w_family));
            WitnessVariant variant;
            if (w_variant == "product")
                variant = WitnessVariant::Product;
            else if (w_variant == "fermat")
                variant = WitnessVariant::Fermat;
            else
                throw std::invalid_argument("variant must be product or fermat");
            const ExactMatrix M = witness_matrix_modular(F, F, parse_ll_list(w_r), w_p, variant);
            if (w_rank)
                std::cout << M.rank() << "\n";
            else
                std::cout << M.to_text();
            return kExitOk;
        }
        if (verify_cmd->parsed()) return run_verify(v);
        if (corpus_cmd->parsed()) {
            if (cor_n_max > 0) {
                const Corpus c = Corpus::all_graphs(cor_n_max);
                for (const Graph& g : c.graphs) std::cout << to_graph6(g) << "\n";
            }
            if (cor_parts_max > 0) {
                const Corpus c = Corpus::all_bipartite(cor_parts_max);
                bool first = true;
                for (const BipartiteGraph& g : c.bipartite) {
                    if (!first) std::cout << "\n";
                    first = false;
                    std::cout << to_text(g);
                }
            }
            return kExitOk;
        }
    } catch (const thetakit::Graph6Error& e) {
        std::cerr << "graph6 error at byte " << e.offset() << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
