#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <nlohmann/json.hpp>

#include "thetakit/graph.hpp"
#include "thetakit/verify.hpp"

using namespace thetakit;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

VerifyParams modular_params(long long p, std::vector<long long> residues) {
    VerifyParams params;
    params.lspec = LSpec::modular(p, std::move(residues));
    return params;
}

}  // namespace

TEST_CASE("theorem names round trip") {
    CHECK(all_theorems().size() == 19);
    for (TheoremId id : all_theorems()) {
        const auto back = theorem_from_string(to_string(id));
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK_FALSE(theorem_from_string("T9.9").has_value());
    CHECK(to_string(TheoremId::TightGF2) == "TIGHT-GF2");
    CHECK(to_string(TheoremId::StarIneq) == "STAR-INEQ");

    CHECK(uses_graph_corpus(TheoremId::C3_2i));
    CHECK_FALSE(uses_bipartite_corpus(TheoremId::C3_2i));
    CHECK(uses_bipartite_corpus(TheoremId::T4_1i));
    CHECK_FALSE(uses_graph_corpus(TheoremId::T4_1i));
    CHECK_FALSE(uses_graph_corpus(TheoremId::StarIneq));
    CHECK_FALSE(uses_bipartite_corpus(TheoremId::StarIneq));
}

TEST_CASE("corpus sizes") {
    CHECK(Corpus::all_graphs(3).graphs.size() == 11);
    CHECK(Corpus::all_bipartite(2).bipartite.size() == 26);
}

TEST_CASE("C3.2i holds on the filtered small corpus") {
    const VerifyOutcome out =
        check_theorem(Corpus::all_graphs(4), TheoremId::C3_2i, modular_params(3, {1, 2}));
    CHECK(out.rows.size() == 12);  // only the twin-free no-isolated graphs remain
    CHECK_FALSE(out.failure.has_value());
    CHECK_FALSE(out.any_indeterminate);
    for (const BoundReport& r : out.rows) {
        CHECK(r.verdict == Verdict::Holds);
        CHECK(*r.slack >= 0);
    }
}

TEST_CASE("C3.2i fails without the hypothesis filter") {
    VerifyParams params = modular_params(3, {1, 2});
    params.hypothesis_filter = false;
    const VerifyOutcome out = check_theorem(Corpus::all_graphs(3), TheoremId::C3_2i, params);
    REQUIRE(out.failure.has_value());
    CHECK(out.failure->verdict == Verdict::Fails);
    CHECK(*out.failure->lhs > *out.failure->rhs);
}

TEST_CASE("C4.2i reports its counterexample") {
    const VerifyParams params = modular_params(3, {1, 2});
    const VerifyOutcome out =
        check_theorem(Corpus::all_bipartite(2), TheoremId::C4_2i, params);
    REQUIRE(out.failure.has_value());
    const BoundReport& bad = *out.failure;
    CHECK(bad.graph_id == "2x2:11|10");
    CHECK(*bad.lhs == 2);
    CHECK(*bad.rhs == 1);
    CHECK(*bad.slack == -1);
    CHECK(out.rows.back().graph_id == bad.graph_id);  // stream stops at the failure

    const std::string bundle = failure_bundle(bad, params);
    CHECK(bundle.find("C4.2i") != std::string::npos);
    CHECK(bundle.find("2x2:11|10") != std::string::npos);
    CHECK(bundle.find("--p 3 --R 1,2") != std::string::npos);
}

TEST_CASE("TIGHT-GF2 is tight on all small bipartite graphs") {
    const VerifyOutcome out =
        check_theorem(Corpus::all_bipartite(2), TheoremId::TightGF2, VerifyParams{});
    CHECK(out.rows.size() == 26);
    CHECK_FALSE(out.failure.has_value());
    for (const BoundReport& r : out.rows) {
        CHECK(r.verdict == Verdict::Holds);
        CHECK(*r.slack == 0);
    }
}

TEST_CASE("T3.1i spot row and CSV shape") {
    Corpus c;
    c.graphs = {path(3)};
    const VerifyOutcome out = check_theorem(c, TheoremId::T3_1i, modular_params(2, {1}));
    REQUIRE(out.rows.size() == 1);
    const BoundReport& r = out.rows[0];
    CHECK(r.graph_id == "Bg");
    CHECK(*r.lhs == 1);
    CHECK(*r.rhs == 3);
    CHECK(*r.slack == 2);
    CHECK(r.millis == 0);

    CHECK(to_csv(out.rows) ==
          "graph6,theorem,params,lhs,rhs,holds,slack,millis\n"
          "Bg,T3.1i,\"L=mod:2:1\",1,3,true,2,0\n");

    const nlohmann::json j = nlohmann::json::parse(to_json(out.rows));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0]["graph6"] == "Bg");
    CHECK(j[0]["theorem"] == "T3.1i");
    CHECK(j[0]["lhs"] == "1");
    CHECK(j[0]["rhs"] == "3");
    CHECK(j[0]["holds"] == "true");
    CHECK(j[0]["slack"] == "2");
}

TEST_CASE("STAR-INEQ is tight at its smallest instance") {
    VerifyParams params;
    params.x_max = 2;
    params.s_max = 2;
    const VerifyOutcome out = check_theorem(Corpus{}, TheoremId::StarIneq, params);
    REQUIRE(out.rows.size() == 1);
    CHECK(out.rows[0].graph_id == "-");
    CHECK(*out.rows[0].lhs == 4);
    CHECK(*out.rows[0].rhs == 4);
    CHECK(*out.rows[0].slack == 0);
    CHECK(out.rows[0].verdict == Verdict::Holds);
}

TEST_CASE("P2.2 finds no inclusion identity failures") {
    VerifyParams params;
    params.l_limit = 2;
    const VerifyOutcome out = check_theorem(Corpus{}, TheoremId::P2_2, params);
    CHECK_FALSE(out.rows.empty());
    CHECK_FALSE(out.failure.has_value());
    for (const BoundReport& r : out.rows) {
        CHECK(*r.lhs == 0);
        CHECK(r.verdict == Verdict::Holds);
    }
}

TEST_CASE("parameter validation") {
    VerifyParams t51 = modular_params(3, {1, 2});
    t51.k = 1;  // k < s
    CHECK_THROWS_AS(check_theorem(Corpus::all_graphs(2), TheoremId::T5_1, t51),
                    std::invalid_argument);

    CHECK_THROWS_AS(
        check_theorem(Corpus::all_graphs(2), TheoremId::C3_2i, modular_params(2, {1})),
        std::invalid_argument);

    VerifyParams finite_for_modular;
    finite_for_modular.lspec = LSpec::finite({0, 1});
    CHECK_THROWS_AS(
        check_theorem(Corpus::all_graphs(2), TheoremId::C3_2i, finite_for_modular),
        std::invalid_argument);

    CHECK_THROWS_AS(
        check_theorem(Corpus::all_graphs(2), TheoremId::T3_3, modular_params(3, {1, 2})),
        std::invalid_argument);

    VerifyParams t52;
    t52.lspec = LSpec::finite({1, 2});
    t52.sizes = {1};  // needs every size above s - r = 1
    CHECK_THROWS_AS(check_theorem(Corpus::all_graphs(2), TheoremId::T5_2, t52),
                    std::invalid_argument);

    VerifyParams p22;
    p22.l_limit = 6;
    CHECK_THROWS_AS(check_theorem(Corpus{}, TheoremId::P2_2, p22), std::invalid_argument);
}

TEST_CASE("budget exhaustion yields indeterminate rows, not failures") {
    VerifyParams params = modular_params(3, {1, 2});
    params.minrank_budget = 1;
    const VerifyOutcome out = check_theorem(Corpus::all_graphs(4), TheoremId::C3_2i, params);
    CHECK(out.any_indeterminate);
    CHECK_FALSE(out.failure.has_value());
    bool saw_unknown = false;
    for (const BoundReport& r : out.rows)
        if (r.verdict == Verdict::Indeterminate) {
            CHECK_FALSE(r.lhs.has_value());
            saw_unknown = true;
        }
    CHECK(saw_unknown);
    CHECK(to_csv(out.rows).find("unknown") != std::string::npos);
    CHECK(to_csv(out.rows).find("indeterminate") != std::string::npos);
}

TEST_CASE("output is deterministic and thread-count independent") {
    const Corpus corpus = Corpus::all_graphs(4);
    const VerifyParams params = modular_params(3, {1, 2});
    const std::string once = to_csv(check_theorem(corpus, TheoremId::C3_2i, params).rows);
    const std::string twice = to_csv(check_theorem(corpus, TheoremId::C3_2i, params).rows);
    CHECK(once == twice);

    VerifyParams threaded = params;
    threaded.jobs = 4;
    const std::string parallel =
        to_csv(check_theorem(corpus, TheoremId::C3_2i, threaded).rows);
    CHECK(once == parallel);
}
