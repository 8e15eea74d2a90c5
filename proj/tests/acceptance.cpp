// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sys/wait.h>

#include "prisma/verify.hpp"

using namespace prisma;

namespace {

int failures = 0;
int criterion_no = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(const std::string& name, bool ok, double secs, double budget,
            const std::string& detail = "") {
    ++criterion_no;
    bool in_budget = secs < budget;
    bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("[%2d/10] %s  %s (%.2fs, budget %.0fs)%s%s\n", criterion_no,
                pass ? "PASS" : "FAIL", name.c_str(), secs, budget,
                detail.empty() ? "" : " ", detail.c_str());
    std::fflush(stdout);
}

SuiteResult run_twice_identical(const std::string& suite, const SuiteOptions& opt, bool& identical) {
    SuiteResult a = run_suite(suite, opt);
    SuiteResult b = run_suite(suite, opt);
    identical = canonical_dump(a.report) == canonical_dump(b.report);
    return a;
}

std::string run_binary(const std::string& args, const std::string& input_file) {
    std::string cmd = std::string(PRISMA_BIN) + " " + args;
    if (!input_file.empty()) cmd += " --in " + input_file;
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "<popen failed>";
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    pclose(pipe);
    return out;
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, bool>> determinism;  // suite name, reports identical

    auto run_criterion = [&](const std::string& suite, const SuiteOptions& opt, double budget,
                             const std::string& label) {
        Timer t;
        bool identical = false;
        SuiteResult res = run_twice_identical(suite, opt, identical);
        determinism.emplace_back(suite, identical);
        std::string detail = "checks=" + std::to_string(res.checks);
        if (!res.passed && res.report.contains("counterexample"))
            detail += " counterexample: " + res.report["counterexample"].get<std::string>();
        report(label, res.passed, t.seconds(), budget, detail);
        return res;
    };

    // 1. Remark reproduction: closure(C∩D) empty, closure(C)∩closure(D) = <(1,1)>
    run_criterion("remark-1-5", SuiteOptions{}, 1.0, "remark-1-5 exact reproduction");

    // 2. Hilbert basis oracle: 50 cones per dim in {2,3}, entries <= 5, box [0,8]
    {
        SuiteOptions opt;
        opt.trials = 50;
        opt.box = 8;
        run_criterion("hilbert-oracle", opt, 60.0, "hilbert basis box-oracle equivalence");
    }

    // 3. Tree order vs chain-extension oracle, trees <= 5 vertices, box [-2,2]
    {
        SuiteOptions opt;
        opt.max_vertices = 5;
        opt.box = 2;
        run_criterion("tree-order", opt, 120.0, "tree order oracle equivalence");
    }

    // 4. Chain-intersection identity, trees <= 4, box [0,3]^{2m}
    {
        SuiteOptions opt;
        opt.max_vertices = 4;
        opt.box = 3;
        run_criterion("chain-intersection", opt, 120.0, "chain intersection identity");
    }

    // 5. Closure-of-intersection formula, 30 seeded pure pairs, box [-6,6]
    {
        SuiteOptions opt;
        opt.trials = 30;
        opt.box = 6;
        run_criterion("closure-basic", opt, 120.0, "closure of intersections in subspaces");
    }

    // 6. Face decomposition, 30 seeded saturated monoids, box [0,8]
    {
        SuiteOptions opt;
        opt.trials = 30;
        opt.box = 8;
        run_criterion("face-decomposition", opt, 120.0, "face decomposition properties");
    }

    // 7. Purity of associated monoids plus root extraction
    {
        Timer t;
        bool id1 = false, id2 = false;
        SuiteOptions opt;
        opt.max_vertices = 4;
        SuiteResult pure = run_twice_identical("pure-cx", opt, id1);
        SuiteResult root = run_twice_identical("root-extraction", opt, id2);
        determinism.emplace_back("pure-cx", id1);
        determinism.emplace_back("root-extraction", id2);
        report("purity and root extraction", pure.passed && root.passed, t.seconds(), 30.0,
               "checks=" + std::to_string(pure.checks + root.checks));
    }

    // 8. Prismality certificates for associated monoids and closed-op combos
    {
        SuiteOptions opt;
        opt.max_vertices = 4;
        run_criterion("prismality-certificates", opt, 10.0, "prismality certificates");
    }

    // 9. Grothendieck completions: frozen examples + idempotent augmentation
    {
        SuiteOptions opt;
        opt.trials = 20;
        run_criterion("grothendieck-idempotent", opt, 5.0, "grothendieck completion");
    }

    // 10. Determinism: every criterion byte-identical across runs, plus the
    // CLI with cache off / cold / warm
    {
        Timer t;
        bool ok = true;
        std::string detail;
        for (const auto& [name, same] : determinism)
            if (!same) {
                ok = false;
                detail = "suite " + name + " not reproducible";
                break;
            }
        auto dir = std::filesystem::temp_directory_path() / "prisma-acceptance";
        std::filesystem::remove_all(dir);
        std::filesystem::create_directories(dir);
        auto doc = dir / "remark.json";
        {
            std::ofstream f(doc);
            f << R"({"type":"intersect","args":[
                 {"type":"intersect","args":[{"type":"orthant","dim":2},
                   {"type":"preimage","matrix":[[1,-1],[1,0]],"arg":{"type":"lex","dim":2}}]},
                 {"type":"intersect","args":[{"type":"orthant","dim":2},
                   {"type":"preimage","matrix":[[-1,1],[0,1]],"arg":{"type":"lex","dim":2}}]}]})";
        }
        std::string cache_flags = "closure --cache-dir " + (dir / "cache").string();
        std::string cold = run_binary(cache_flags, doc.string());
        std::string warm = run_binary(cache_flags, doc.string());
        std::string nocache = run_binary("closure --no-cache", doc.string());
        if (cold != warm || cold != nocache || cold.empty()) {
            ok = false;
            if (detail.empty()) detail = "cache modes disagree";
        }
        report("determinism with and without cache", ok, t.seconds(), 60.0, detail);
    }

    if (failures) {
        std::printf("%d of 10 criteria failed\n", failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
