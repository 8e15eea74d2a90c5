#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "prisma/verify.hpp"

namespace {

using namespace prisma;

constexpr const char* kVersion = "prisma 1.0.0";

struct Options {
    std::string input_file;
    std::string cache_dir;
    bool no_cache = false;
    long box = -1;
    long trials = -1;
    long max_vertices = -1;
    long dim = -1;
    std::uint64_t seed = 1;
    std::string multipliers = "2,3";
};

std::vector<long> parse_multipliers(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stol(item));
    }
    if (out.empty()) out = {2, 3};
    return out;
}

json read_input(const Options& opt) {
    std::string text;
    if (!opt.input_file.empty()) {
        std::ifstream in(opt.input_file);
        if (!in) throw InputError("$", "cannot open input file " + opt.input_file);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& ex) {
        throw InputError("$", std::string("malformed JSON: ") + ex.what());
    }
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::filesystem::path cache_directory(const Options& opt) {
    if (!opt.cache_dir.empty()) return opt.cache_dir;
    if (const char* env = std::getenv("PRISMA_CACHE_DIR")) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return std::filesystem::path(xdg) / "prisma";
    if (const char* home = std::getenv("HOME"))
        return std::filesystem::path(home) / ".cache" / "prisma";
    return std::filesystem::path(".prisma-cache");
}

std::string cache_key(const std::string& command, const json& input, const Options& opt) {
    std::ostringstream key;
    key << kVersion << '\0' << command << '\0' << canonical_dump(input) << '\0' << opt.box << '\0'
        << opt.trials << '\0' << opt.max_vertices << '\0' << opt.dim << '\0' << opt.seed << '\0'
        << opt.multipliers;
    std::ostringstream name;
    name << std::hex << fnv1a(key.str());
    return name.str();
}

std::optional<std::string> cache_read(const std::filesystem::path& dir, const std::string& key) {
    std::ifstream in(dir / (key + ".json"));
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void cache_write(const std::filesystem::path& dir, const std::string& key,
                 const std::string& value) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;  // caching is best-effort
    std::filesystem::path tmp =
        dir / ("tmp-" + key + "-" + std::to_string(static_cast<long>(::getpid())));
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << value;
    }
    std::filesystem::rename(tmp, dir / (key + ".json"), ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

const json& field_or_throw(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InputError("$", std::string("missing field \"") + key + "\"");
    return j.at(key);
}

json run_tree_cx(const json& input) {
    ParasemifieldSpec spec = parse_spec(field_or_throw(input, "spec"), "$.spec");
    GeneratorTuple tuple;
    if (input.contains("tuple"))
        tuple = parse_tuple(input["tuple"], spec, "$.tuple");
    else
        tuple = canonical_generators(spec);
    MonoidExpr e = associated_monoid(tuple);
    json out;
    out["expr"] = to_json(e);
    out["closure"] = to_json(closure(e));
    return out;
}

json dispatch(const std::string& command, const json& input, const Options& opt, int& exit_code) {
    exit_code = 0;
    if (command == "hilbert") return to_json(hilbert_basis(parse_cone(input)));
    if (command == "saturate") {
        std::size_t dim = 0;
        if (input.contains("dim")) dim = input["dim"].get<std::size_t>();
        IntMatrix gens = parse_matrix(field_or_throw(input, "gens"), dim, "$.gens");
        return to_json(saturate_monoid(AffineMonoid::from_gens(gens.ncols, gens.rows)));
    }
    if (command == "closure") return to_json(closure(parse_expression(input)));
    if (command == "closure-in-subspace") {
        MonoidExpr e = parse_expression(field_or_throw(input, "expr"), "$.expr");
        Subspace v = parse_subspace(field_or_throw(input, "subspace"), e.ambient(), "$.subspace");
        return to_json(closure_in_subspace(e, v));
    }
    if (command == "member") {
        MonoidExpr e = parse_expression(field_or_throw(input, "expr"), "$.expr");
        IntVector p = parse_vector(field_or_throw(input, "point"), "$.point");
        if (p.size() != e.ambient()) throw InputError("$.point", "dimension mismatch");
        Tri v = member(e, p);
        json out;
        out["member"] = v == Tri::yes ? "yes" : (v == Tri::no ? "no" : "unknown");
        return out;
    }
    if (command == "span") {
        Subspace s = span(parse_expression(input));
        json out;
        out["dim"] = s.dim();
        out["basis"] = to_json(s.basis);
        return out;
    }
    if (command == "faces") {
        json faces = json::array();
        for (const auto& f : open_faces(parse_cone(input))) faces.push_back(to_json(f));
        json out;
        out["faces"] = faces;
        return out;
    }
    if (command == "decompose") {
        FaceDecomposition d;
        if (input.is_object() && input.contains("gens")) {
            std::size_t dim = 0;
            if (input.contains("dim")) dim = input["dim"].get<std::size_t>();
            IntMatrix gens = parse_matrix(input["gens"], dim, "$.gens");
            d = decompose(AffineMonoid::from_gens(gens.ncols, gens.rows));
        } else {
            d = decompose(parse_expression(input));
        }
        long box = opt.box < 0 ? 6 : opt.box;
        auto rep = verify_decomposition(d, box, 20000, opt.seed);
        json out = to_json(d);
        out["verification"] = to_json(rep);
        if (!rep.passed()) exit_code = 4;
        return out;
    }
    if (command == "tree-leq" || command == "tree-join") {
        ParasemifieldSpec spec = parse_spec(field_or_throw(input, "spec"), "$.spec");
        IntVector a = parse_element(field_or_throw(input, "a"), spec.total_vertices(), "$.a");
        IntVector b = parse_element(field_or_throw(input, "b"), spec.total_vertices(), "$.b");
        json out;
        if (command == "tree-leq") {
            out["leq"] = tree_leq(spec, a, b);
        } else {
            auto [j, m] = tree_join_meet(spec, a, b);
            out["join"] = json{{"coords", to_json(j)}};
            out["meet"] = json{{"coords", to_json(m)}};
        }
        return out;
    }
    if (command == "tree-cx") return run_tree_cx(input);
    if (command == "certify") {
        MonoidExpr e = parse_expression(input);
        auto cert = prismality_certificate(e);
        json out;
        out["certificate"] = to_json(cert.root);
        out["valid"] = check_certificate(cert, e);
        out["prismal"] = cert.root.prismal();
        out["almost_prismal"] = cert.root.almost_prismal;
        return out;
    }
    if (command == "grothendieck") {
        MonoidPresentation p = parse_presentation(input);
        auto g = group_completion(p);
        json out;
        json inv = json::array();
        for (const auto& d : g.invariant_factors) inv.push_back(to_json(d));
        out["invariant_factors"] = inv;
        out["free_rank"] = g.free_rank;
        out["trivial"] = g.trivial();
        if (input.contains("query")) {
            IntVector q = parse_vector(input["query"], "$.query");
            if (q.size() != p.generators) throw InputError("$.query", "dimension mismatch");
            out["class_is_zero"] = g.is_zero_class(q);
        }
        return out;
    }
    throw InputError("$", "unknown command \"" + command + "\"");
}

int run_main(int argc, char** argv) {
    CLI::App app{"exact computations with describable submonoids of Z^n, rooted-tree "
                 "lattice-ordered groups, and monoid group completions"};
    app.set_version_flag("--version", kVersion);
    Options opt;
    app.add_option("--in", opt.input_file, "input JSON file (default: stdin)");
    app.add_option("--cache-dir", opt.cache_dir, "cache directory (overrides PRISMA_CACHE_DIR)");
    app.add_flag("--no-cache", opt.no_cache, "bypass the result cache");
    app.add_option("--box", opt.box, "box bound for probes and verification");
    app.add_option("--trials", opt.trials, "trial count for randomized suites");
    app.add_option("--max-vertices", opt.max_vertices, "tree size cap for tree suites");
    app.add_option("--dim", opt.dim, "restrict a randomized suite to one dimension");
    app.add_option("--seed", opt.seed, "seed for randomized suites");
    app.add_option("--multipliers", opt.multipliers, "comma list of purity multipliers");
    app.fallthrough();
    app.require_subcommand(1);

    static const std::vector<std::string> compute_commands{
        "hilbert",  "saturate", "closure",  "closure-in-subspace", "member",
        "span",     "faces",    "decompose", "tree-leq",           "tree-join",
        "tree-cx",  "certify",  "grothendieck"};
    for (const auto& name : compute_commands) app.add_subcommand(name);
    auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
    std::string suite;
    verify_cmd->add_option("suite", suite, "suite name")->required();

    CLI11_PARSE(app, argc, argv);
    std::string command = app.get_subcommands().front()->get_name();

    if (command == "verify") {
        SuiteOptions so;
        so.seed = opt.seed;
        so.box = opt.box;
        so.trials = opt.trials;
        so.max_vertices = opt.max_vertices;
        so.dim = opt.dim;
        so.multipliers = parse_multipliers(opt.multipliers);
        SuiteResult res = run_suite(suite, so);
        std::cout << canonical_dump(res.report) << "\n";
        return res.passed ? 0 : 4;
    }

    json input = read_input(opt);
    std::string key = cache_key(command, input, opt);
    std::filesystem::path dir = cache_directory(opt);
    if (!opt.no_cache) {
        if (auto hit = cache_read(dir, key)) {
            std::cout << *hit;
            return 0;
        }
    }
    int exit_code = 0;
    json out = dispatch(command, input, opt, exit_code);
    std::string text = canonical_dump(out) + "\n";
    if (!opt.no_cache && exit_code == 0) cache_write(dir, key, text);
    std::cout << text;
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_main(argc, argv);
    } catch (const prisma::InputError& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return 2;
    } catch (const prisma::UnsupportedShape& ex) {
        std::cerr << "unsupported shape: " << ex.what() << "\n";
        return 3;
    } catch (const prisma::TooLarge& ex) {
        std::cerr << "too large: " << ex.what() << "\n";
        return 3;
    } catch (const prisma::PurityRequired& ex) {
        std::cerr << "purity required: " << ex.what() << "\n";
        return 3;
    } catch (const prisma::NoInversePair& ex) {
        std::cerr << "no inverse pair: " << ex.what() << "\n";
        return 3;
    } catch (const prisma::CertificateUnavailable& ex) {
        std::cerr << "certificate unavailable: " << ex.what() << "\n";
        return 3;
    } catch (const prisma::DimensionMismatch& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
