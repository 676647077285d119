#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "linkpred/graph_io.hpp"
#include "support/synthetic.hpp"

using nlohmann::json;
namespace fs = std::filesystem;
namespace ts = linkpred::testsupport;

namespace {

std::string cli() {
    const char* p = std::getenv("LINKPRED_CLI");
    REQUIRE_MESSAGE(p != nullptr, "LINKPRED_CLI must point at the binary");
    return p;
}

int run(const std::string& args) {
    const std::string cmd = cli() + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name)
        : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& p) const {
        return (path / p).string();
    }
};

json read_json(const std::string& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
}

}  // namespace

TEST_CASE("cli end-to-end over a small pipeline") {
    TempDir dir("linkpred_cli_test");
    const auto g = ts::make_er_graph(60, 220, 42);
    linkpred::save_graph(g, dir / "edges.tsv");
    {
        linkpred::SeededRng rng(1);
        linkpred::AttributeMatrix attrs(60, 4);
        for (double& x : attrs.data) x = rng.real01();
        linkpred::save_attributes(g, attrs, dir / "attrs.tsv");
    }

    SUBCASE("split writes a manifest with lost-edge accounting") {
        REQUIRE(run("split --mode node --ratios 80,10,10 --seed 7 --graph " +
                    (dir / "edges.tsv") + " --out " + (dir / "run")) == 0);
        const json manifest = read_json(dir / "run/manifest.json");
        CHECK(manifest.at("mode") == "node");
        CHECK(manifest.at("seed") == 7);
        CHECK(manifest.contains("lost_edges"));
        const auto counts = manifest.at("counts");
        CHECK(counts.at("train_nodes") == 48);
        CHECK(counts.at("valid_nodes") == 6);
        CHECK(counts.at("test_nodes") == 6);
        for (const char* f :
             {"train_edges.tsv", "valid_pos.tsv", "valid_neg.tsv",
              "test_pos.tsv", "test_neg.tsv", "nodes_train.txt",
              "nodes_valid.txt", "nodes_test.txt"})
            CHECK(fs::exists(dir.path / "run" / f));
    }

    SUBCASE("baseline scores and eval consumes them") {
        REQUIRE(run("split --mode edge --ratios 80,10,10 --seed 3 --graph " +
                    (dir / "edges.tsv") + " --out " + (dir / "erun")) == 0);
        REQUIRE(run("baseline --model config --split " + (dir / "erun") +
                    " --out " + (dir / "scores.tsv")) == 0);
        std::ifstream scores(dir / "scores.tsv");
        std::string line;
        std::size_t rows = 0;
        while (std::getline(scores, line))
            if (!line.empty()) ++rows;
        CHECK(rows == 44);  // 22 test positives + 22 negatives

        REQUIRE(run("eval --split " + (dir / "erun") + " --scores " +
                    (dir / "scores.tsv") + " --k 5 --out " +
                    (dir / "metrics")) == 0);
        const json metrics = read_json(dir / "metrics/metrics.json");
        CHECK(metrics.at("n_pos") == 22);
        CHECK(metrics.at("n_neg") == 22);
        CHECK(metrics.at("K") == 5);
        CHECK(metrics.at("auroc").get<double>() >= 0.0);
        CHECK(metrics.at("auroc").get<double>() <= 1.0);
        CHECK(metrics.contains("auprc"));
        CHECK(metrics.contains("hits_at_k"));
    }

    SUBCASE("train then eval emits all artifacts") {
        REQUIRE(run("split --mode node --ratios 60,20,20 --seed 5 --graph " +
                    (dir / "edges.tsv") + " --out " + (dir / "nrun")) == 0);
        REQUIRE(run("train --split " + (dir / "nrun") + " --attrs " +
                    (dir / "attrs.tsv") +
                    " --hidden 8,8 --epochs 10 --seed 2 --out " +
                    (dir / "model")) == 0);
        CHECK(fs::exists(dir.path / "model/model.bin"));
        CHECK(fs::exists(dir.path / "model/trace.csv"));
        CHECK(fs::exists(dir.path / "model/manifest.json"));

        REQUIRE(run("eval --split " + (dir / "nrun") + " --model " +
                    (dir / "model/model.bin") + " --attrs " +
                    (dir / "attrs.tsv") + " --k 3 --degree-bins 4 --trace " +
                    (dir / "model/trace.csv") +
                    " --diagnose subgaussian --bound --ami 0.25 --out " +
                    (dir / "mmetrics")) == 0);
        const json metrics = read_json(dir / "mmetrics/metrics.json");
        CHECK(metrics.contains("subgaussian"));
        CHECK(metrics.at("subgaussian").contains("A"));
        CHECK(metrics.at("subgaussian").contains("sigma"));
        CHECK(metrics.at("subgaussian").contains("dominance_fraction"));
        CHECK(metrics.contains("bound"));
        CHECK(fs::exists(dir.path / "mmetrics/degree_bins.csv"));
    }

    SUBCASE("embed produces loadable variants") {
        REQUIRE(run("embed --method node2vec --graph " + (dir / "edges.tsv") +
                    " --dim 8 --walks 2 --length 10 --window 3 --seed 4 "
                    "--out " +
                    (dir / "n2v.tsv")) == 0);
        const auto emb =
            linkpred::load_attributes(dir / "n2v.tsv", g);
        CHECK(emb.cols == 8);

        REQUIRE(run("embed --method shuffle --graph " + (dir / "edges.tsv") +
                    " --attrs " + (dir / "attrs.tsv") + " --seed 4 --out " +
                    (dir / "shuf.tsv")) == 0);
        REQUIRE(run("embed --method random --graph " + (dir / "edges.tsv") +
                    " --rand-dim 4 --seed 4 --out " + (dir / "rand.tsv")) ==
                0);
        CHECK(linkpred::load_attributes(dir / "rand.tsv", g).cols == 4);
    }

    SUBCASE("attrs score writes one report per k") {
        REQUIRE(run("attrs score --graph " + (dir / "edges.tsv") +
                    " --pretrained " + (dir / "attrs.tsv") +
                    " --k 3,5 --seed 1 --dim 8 --walks 2 --length 10 "
                    "--window 3 --out " +
                    (dir / "reports")) == 0);
        for (const char* f : {"report_k3.json", "report_k5.json"}) {
            const json r = read_json(dir / ("reports/" + std::string(f)));
            CHECK(r.at("db").contains("pretrained"));
            CHECK(r.at("db").contains("shuffled"));
            CHECK(r.at("db").contains("random"));
            CHECK(r.at("db").contains("node2vec"));
            CHECK(r.contains("ami"));
            CHECK(r.at("seed") == 1);
        }
    }

    SUBCASE("temporal split feeds the training pipeline") {
        {
            std::ofstream tf(dir / "temporal.tsv");
            // growing graph over three yearly stamps
            linkpred::SeededRng rng(3);
            for (int year = 2014; year <= 2016; ++year)
                for (int i = 0; i < 40; ++i)
                    tf << "n" << rng.below(20 + 10 * (year - 2014)) << '\t'
                       << "n" << rng.below(30 + 10 * (year - 2014)) << '\t'
                       << year << '\n';
        }
        REQUIRE(run("split --mode temporal --snapshots " +
                    (dir / "temporal.tsv") + " --index 0 --seed 9 --out " +
                    (dir / "trun")) == 0);
        const json manifest = read_json(dir / "trun/manifest.json");
        CHECK(manifest.at("mode") == "temporal");
        CHECK(manifest.at("timestamps")[0] == 2014);
        CHECK(manifest.at("counts").at("test_pos").get<std::size_t>() ==
              manifest.at("counts").at("test_neg").get<std::size_t>());
        // out-of-range index is a usage error
        CHECK(run("split --mode temporal --snapshots " +
                  (dir / "temporal.tsv") + " --index 5 --seed 9 --out " +
                  (dir / "t2")) == 2);
    }

    SUBCASE("options can come from a config file") {
        {
            std::ofstream cf(dir / "run.ini");
            cf << "[split]\nmode=edge\nratios=\"80,10,10\"\nseed=5\n"
               << "graph=" << (dir / "edges.tsv") << "\n"
               << "out=" << (dir / "cfg_run") << "\n";
        }
        REQUIRE(run("--config " + (dir / "run.ini") + " split") == 0);
        CHECK(fs::exists(dir.path / "cfg_run/manifest.json"));
    }

    SUBCASE("diagnose fits a trace file") {
        {
            std::ofstream trace(dir / "trace.csv");
            trace << "epoch,loss\n";
            for (int x = 0; x < 60; ++x)
                trace << x << ','
                      << 0.5 * std::exp(-0.002 * x * x) + 1e-9 << '\n';
        }
        REQUIRE(run("diagnose --trace " + (dir / "trace.csv") +
                    " --ami 0.22 --out " + (dir / "fit.json")) == 0);
        const json fit = read_json(dir / "fit.json");
        CHECK(fit.at("A").get<double>() ==
              doctest::Approx(0.5).epsilon(0.01));
        CHECK(fit.at("sigma").get<double>() ==
              doctest::Approx(0.002).epsilon(0.01));
        CHECK(fit.contains("bound"));
    }
}

TEST_CASE("cli usage errors exit with 2 and name the flag") {
    TempDir dir("linkpred_cli_errs");
    const auto g = ts::make_path(10);
    linkpred::save_graph(g, dir / "edges.tsv");

    // bad ratios
    CHECK(run("split --mode node --ratios 80,10 --seed 1 --graph " +
              (dir / "edges.tsv") + " --out " + (dir / "x")) == 2);
    // unknown model
    CHECK(run("baseline --model nope --split " + (dir / "x") + " --out " +
              (dir / "s.tsv")) == 2);
    // missing attribute file
    REQUIRE(run("split --mode edge --ratios 80,10,10 --seed 1 --graph " +
                (dir / "edges.tsv") + " --out " + (dir / "erun")) == 0);
    CHECK(run("train --split " + (dir / "erun") + " --attrs " +
              (dir / "missing.tsv") + " --seed 1 --out " + (dir / "m")) ==
          2);
    // missing required flag
    CHECK(run("split --mode node --graph " + (dir / "edges.tsv") +
              " --out " + (dir / "y")) == 2);
    // unknown subcommand
    CHECK(run("frobnicate") == 2);
    // help is fine
    CHECK(run("--help") == 0);
    CHECK(run("split --help") == 0);
}

TEST_CASE("cli runtime failures exit with 1") {
    TempDir dir("linkpred_cli_rt");
    {
        std::ofstream bad(dir / "bad.tsv");
        bad << "a b\nc\n";  // malformed second line
    }
    CHECK(run("split --mode edge --ratios 80,10,10 --seed 1 --graph " +
              (dir / "bad.tsv") + " --out " + (dir / "r")) == 1);
}
