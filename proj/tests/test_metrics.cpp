#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "linkpred/metrics.hpp"
#include "linkpred/rng.hpp"
#include "support/oracles.hpp"
#include "support/synthetic.hpp"

using namespace linkpred;
namespace ts = linkpred::testsupport;

TEST_CASE("hits_at_k hand cases") {
    ScoredEdges s{{0.9, 0.4}, {0.8, 0.5, 0.3}};
    CHECK(hits_at_k(s, 2) == doctest::Approx(0.5));
    CHECK(ts::brute_hits_at_k(s.pos_scores, s.neg_scores, 2) ==
          doctest::Approx(0.5));

    ScoredEdges perfect{{5.0, 6.0, 7.0}, {1.0, 2.0, 3.0}};
    for (std::size_t k = 1; k <= 3; ++k)
        CHECK(hits_at_k(perfect, k) == 1.0);

    CHECK_THROWS_AS(hits_at_k(s, 4), std::invalid_argument);
    CHECK_THROWS_AS(hits_at_k(s, 0), std::invalid_argument);
}

TEST_CASE("ties lose at the threshold") {
    ScoredEdges s{{0.5, 0.6}, {0.5, 0.4}};
    // K=1: threshold is 0.5; the tied positive does not count
    CHECK(hits_at_k(s, 1) == doctest::Approx(0.5));
}

TEST_CASE("hits_at_k is monotone in K") {
    // Growing K lowers the threshold (the K-th largest negative), so the
    // passing fraction can only grow. The worked example above pins the
    // direction: K=2 gives 0.5 and K=3 gives 1.0.
    SeededRng rng(4);
    ScoredEdges s;
    for (int i = 0; i < 60; ++i) s.pos_scores.push_back(rng.real01());
    for (int i = 0; i < 80; ++i) s.neg_scores.push_back(rng.real01());
    double prev = 0.0;
    for (std::size_t k = 1; k <= s.neg_scores.size(); ++k) {
        const double h = hits_at_k(s, k);
        CHECK(h >= prev - 1e-15);
        prev = h;
    }
    ScoredEdges example{{0.9, 0.4}, {0.8, 0.5, 0.3}};
    CHECK(hits_at_k(example, 2) == doctest::Approx(0.5));
    CHECK(hits_at_k(example, 3) == doctest::Approx(1.0));
}

TEST_CASE("auroc hand cases") {
    CHECK(auroc({{0.8, 0.4}, {0.6, 0.2}}) == doctest::Approx(0.75));
    CHECK(auroc({{0.5, 0.5}, {0.5, 0.5}}) == doctest::Approx(0.5));
    CHECK_THROWS_AS(auroc({{}, {1.0}}), std::invalid_argument);
}

TEST_CASE("auprc hand cases") {
    CHECK(auprc({{5.0, 6.0}, {1.0, 2.0}}) == doctest::Approx(1.0));
    CHECK(auprc({{0.9}, {0.8, 0.7}}) == doctest::Approx(1.0));
    // single positive ranked second: AP = 1/2
    CHECK(auprc({{0.7}, {0.9}}) == doctest::Approx(0.5));
    // tie block: positive and negative share the top score
    CHECK(auprc({{1.0}, {1.0}}) == doctest::Approx(0.5));
}

TEST_CASE("ranking metrics match brute-force oracles on random inputs") {
    SeededRng rng(1234);
    for (int trial = 0; trial < 500; ++trial) {
        ScoredEdges s;
        const std::size_t np = 1 + rng.below(100);
        const std::size_t nn = 1 + rng.below(100);
        const bool gridded = trial % 3 == 0;  // force ties sometimes
        for (std::size_t i = 0; i < np; ++i)
            s.pos_scores.push_back(
                gridded ? static_cast<double>(rng.below(12)) / 11.0
                        : rng.real01());
        for (std::size_t i = 0; i < nn; ++i)
            s.neg_scores.push_back(
                gridded ? static_cast<double>(rng.below(12)) / 11.0
                        : rng.real01());
        const std::size_t k = 1 + rng.below(nn);
        CHECK(std::abs(hits_at_k(s, k) - ts::brute_hits_at_k(
                           s.pos_scores, s.neg_scores, k)) <= 1e-12);
        CHECK(std::abs(auroc(s) - ts::brute_auroc(s.pos_scores,
                                                  s.neg_scores)) <= 1e-12);
    }
}

TEST_CASE("rank metrics are invariant under strictly increasing transforms") {
    SeededRng rng(9);
    ScoredEdges s;
    for (int i = 0; i < 50; ++i)
        s.pos_scores.push_back(static_cast<double>(rng.below(40)) / 39.0);
    for (int i = 0; i < 70; ++i)
        s.neg_scores.push_back(static_cast<double>(rng.below(40)) / 39.0);

    auto transform = [&](double (*f)(double)) {
        ScoredEdges t;
        for (const double x : s.pos_scores) t.pos_scores.push_back(f(x));
        for (const double x : s.neg_scores) t.neg_scores.push_back(f(x));
        return t;
    };
    const ScoredEdges exp_t = transform(+[](double x) { return std::exp(x); });
    const ScoredEdges aff_t =
        transform(+[](double x) { return 3.0 * x + 11.0; });
    for (const ScoredEdges* t : {&exp_t, &aff_t}) {
        CHECK(auroc(*t) == auroc(s));
        CHECK(auprc(*t) == auprc(s));
        CHECK(hits_at_k(*t, 10) == hits_at_k(s, 10));
    }
}

TEST_CASE("degree binning with identical degrees collapses to one bin") {
    // 4-cycle: every node has degree 2
    const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const std::vector<Edge> pos = {{0, 1}, {2, 3}};
    const std::vector<Edge> neg = {{0, 2}, {1, 3}};
    const std::vector<double> ps = {0.9, 0.8}, ns = {0.5, 0.2};
    const DegreeBinTable t = degree_binned(g, pos, neg, ps, ns, 1, 4);
    std::size_t occupied = 0;
    for (const auto& row : t.rows) {
        if (row.count == 0) continue;
        ++occupied;
        CHECK(row.count == 2);
        CHECK(row.neg_count == 2);
        CHECK(row.hits.has_value());
        CHECK(*row.auroc ==
              doctest::Approx(auroc({{0.9, 0.8}, {0.5, 0.2}})));
    }
    CHECK(occupied == 1);
}

TEST_CASE("degree-0 endpoints land in the lowest bin and counts add up") {
    const Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}});
    // node 4 and 5 are isolated in the train graph
    const std::vector<Edge> pos = {{4, 5}, {0, 1}, {1, 2}};
    const std::vector<Edge> neg = {{0, 4}, {3, 5}};
    const std::vector<double> ps = {0.1, 0.9, 0.8}, ns = {0.3, 0.2};
    const DegreeBinTable t = degree_binned(g, pos, neg, ps, ns, 1, 3);
    CHECK(t.rows[0].count >= 1);  // the (4,5) pair
    std::size_t total_pos = 0, total_neg = 0;
    for (const auto& row : t.rows) {
        total_pos += row.count;
        total_neg += row.neg_count;
    }
    CHECK(total_pos == pos.size());
    CHECK(total_neg == neg.size());
}

TEST_CASE("empty bins report null metrics instead of disappearing") {
    const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const std::vector<Edge> pos = {{0, 1}};
    const std::vector<Edge> neg = {{0, 2}};
    const std::vector<double> ps = {0.9}, ns = {0.1};
    const DegreeBinTable t = degree_binned(g, pos, neg, ps, ns, 1, 5);
    CHECK(t.rows.size() == 5);
    std::size_t with_metrics = 0;
    for (const auto& row : t.rows)
        if (row.hits.has_value()) ++with_metrics;
    CHECK(with_metrics == 1);
}

TEST_CASE("degree table CSV has the declared shape") {
    const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}});
    const std::vector<Edge> pos = {{0, 1}}, neg = {{0, 2}};
    const std::vector<double> ps = {0.9}, ns = {0.1};
    const DegreeBinTable t = degree_binned(g, pos, neg, ps, ns, 1, 2);
    const auto path =
        std::filesystem::temp_directory_path() / "degree_bins_test.csv";
    write_degree_table_csv(t, path);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "bin_lo,bin_hi,count,hits_at_k,auroc");
    std::size_t rows = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 2);
}

TEST_CASE("subgaussian fit recovers a noiseless curve") {
    std::vector<double> trace(200);
    for (std::size_t x = 0; x < trace.size(); ++x)
        trace[x] = 0.78 * std::exp(-0.001 * static_cast<double>(x) *
                                   static_cast<double>(x));
    const SubgaussianFit fit = fit_subgaussian(trace, 0.25);
    CHECK(std::abs(fit.A - 0.78) <= 1e-6);
    CHECK(std::abs(fit.sigma - 0.001) <= 1e-6);
    CHECK(fit.dominance_fraction == 1.0);
}

TEST_CASE("subgaussian fit of a constant trace is flat") {
    const std::vector<double> trace(50, 0.37);
    const SubgaussianFit fit = fit_subgaussian(trace);
    CHECK(fit.sigma <= 1e-10);
    CHECK(fit.A == doctest::Approx(0.37).epsilon(1e-12));
}

TEST_CASE("subgaussian fit survives multiplicative noise") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SeededRng rng(seed);
        std::vector<double> trace(200);
        for (std::size_t x = 0; x < trace.size(); ++x) {
            const double noise = 1.0 + 0.01 * (2.0 * rng.real01() - 1.0);
            trace[x] = 0.78 *
                       std::exp(-0.001 * static_cast<double>(x) *
                                static_cast<double>(x)) *
                       noise;
        }
        const SubgaussianFit fit = fit_subgaussian(trace);
        CHECK(std::abs(fit.A - 0.78) / 0.78 < 0.05);
        CHECK(std::abs(fit.sigma - 0.001) / 0.001 < 0.05);
    }
}

TEST_CASE("subgaussian fit rejects bad traces") {
    CHECK_THROWS_AS(fit_subgaussian(std::vector<double>(4, 1.0)),
                    std::invalid_argument);
    std::vector<double> with_zero(20, 1.0);
    with_zero[3] = 0.0;
    CHECK_THROWS_AS(fit_subgaussian(with_zero), std::invalid_argument);
}
