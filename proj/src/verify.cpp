#include "prisma/verify.hpp"

#include <algorithm>
#include <set>

namespace prisma {

namespace {

IntVector lvec(std::vector<long> xs) {
    IntVector v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

std::vector<IntVector> box_points(long lo, long hi, std::size_t n) {
    if (n == 0) return {IntVector{}};
    std::vector<IntVector> pts;
    std::vector<long> x(n, lo);
    while (true) {
        IntVector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = Int(x[i]);
        pts.push_back(v);
        std::size_t i = 0;
        while (i < n && x[i] == hi) x[i++] = lo;
        if (i == n) break;
        ++x[i];
    }
    return pts;
}

IntVector random_vector(SplitMix& rng, std::size_t n, long lo, long hi) {
    IntVector v(n);
    for (auto& x : v) x = Int(rng.range(lo, hi));
    return v;
}

MonoidExpr remark_c_expr() {
    return MonoidExpr::intersect(
        {MonoidExpr::orthant(2),
         MonoidExpr::preimage(IntMatrix::from_rows({lvec({1, -1}), lvec({1, 0})}, 2),
                              MonoidExpr::lex(2))});
}

MonoidExpr remark_d_expr() {
    return MonoidExpr::intersect(
        {MonoidExpr::orthant(2),
         MonoidExpr::preimage(IntMatrix::from_rows({lvec({-1, 1}), lvec({0, 1})}, 2),
                              MonoidExpr::lex(2))});
}

struct Failure {
    std::string what;
};

void note_failure(SuiteResult& res, const std::string& what) {
    if (res.passed) {
        res.passed = false;
        res.report["counterexample"] = what;
    }
}

SuiteResult suite_remark_1_5(const SuiteOptions&) {
    SuiteResult res;
    res.suite = "remark-1-5";
    res.passed = true;
    auto both = closure(MonoidExpr::intersect({remark_c_expr(), remark_d_expr()}));
    auto cc = closure(remark_c_expr());
    auto cd = closure(remark_d_expr());
    auto meet = intersect(cc, cd);
    res.report["closure_of_intersection"] = to_json(both);
    res.report["intersection_of_closures"] = to_json(meet);
    res.checks = 2;
    if (!both.basis.empty() || both.lineality.nrows != 0)
        note_failure(res, "closure of the intersection is not trivial");
    if (meet.basis != std::vector<IntVector>{lvec({1, 1})} || meet.lineality.nrows != 0)
        note_failure(res, "intersection of the closures is not the diagonal ray");
    return res;
}

SuiteResult suite_closure_basic(const SuiteOptions& opt) {
    SuiteResult res;
    res.suite = "closure-basic";
    res.passed = true;
    const long trials = opt.trials < 0 ? 30 : opt.trials;
    const long box = opt.box < 0 ? 6 : opt.box;
    SplitMix rng(opt.seed);
    res.report["trials"] = trials;
    res.report["box"] = box;
    for (long t = 0; t < trials; ++t) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.range(1, 2));
        auto random_pure = [&] {
            std::vector<IntVector> gens;
            for (int i = 0; i < 3; ++i) gens.push_back(random_vector(rng, n, -2, 3));
            return hilbert_basis(Cone::from_rays(n, gens));
        };
        SaturatedMonoid cm = random_pure(), dm = random_pure();
        Subspace v = Subspace::span_of(IntMatrix::from_rows(
            {random_vector(rng, n, -2, 2), random_vector(rng, n, -2, 2)}, n));
        MonoidExpr ce = MonoidExpr::fingen(AffineMonoid::from_gens(n, cm.all_generators()));
        MonoidExpr de = MonoidExpr::fingen(AffineMonoid::from_gens(n, dm.all_generators()));
        auto lhs = closure_in_subspace(MonoidExpr::intersect({ce, de}), v);
        Subspace w = intersect_subspace(intersect(cm.cone, dm.cone), v).span();
        auto rc = closure_in_subspace(ce, w);
        auto rd = closure_in_subspace(de, w);
        for (const auto& p : box_points(-box, box, n)) {
            ++res.checks;
            if (lhs.contains(p) != (rc.contains(p) && rd.contains(p))) {
                note_failure(res, "trial " + std::to_string(t) + " point " + to_string(p));
                return res;
            }
        }
    }
    return res;
}

SuiteResult suite_convex_identities(const SuiteOptions& opt) {
    SuiteResult res;
    res.suite = "convex-identities";
    res.passed = true;
    const long trials = opt.trials < 0 ? 30 : opt.trials;
    const long box = opt.box < 0 ? 4 : opt.box;
    SplitMix rng(opt.seed);
    res.report["trials"] = trials;
    res.report["box"] = box;
    long done = 0;
    while (done < trials) {
        std::size_t n = 2 + static_cast<std::size_t>(rng.range(0, 1));
        Cone base = Cone::from_rays(
            n, {random_vector(rng, n, -3, 3), random_vector(rng, n, -3, 3),
                random_vector(rng, n, -3, 3)});
        if (base.dim() != n) continue;
        Cone k = minkowski_sum(base, Cone::from_rays(n, {random_vector(rng, n, -3, 3)}));
        Cone l = minkowski_sum(base, Cone::from_rays(n, {random_vector(rng, n, -3, 3)}));
        Cone both = intersect(k, l);
        if (both.dim() != n) continue;
        ++done;
        for (const auto& p : box_points(-box, box, n)) {
            ++res.checks;
            bool lhs = both.in_relative_interior(p);
            bool rhs = k.in_relative_interior(p) && l.in_relative_interior(p);
            if (lhs != rhs) {
                note_failure(res, "relative interiors differ at " + to_string(p));
                return res;
            }
        }
        // pure finitely generated monoids equal the lattice points of their
        // hull: regenerate by walks whose partial sums stay in a padded box
        auto s = hilbert_basis(k);
        auto steps = s.all_generators();
        long maxg = 0;
        for (const auto& g : steps)
            for (const auto& xc : g) {
                Int a = abs(xc);
                if (a.fits_slong_p()) maxg = std::max(maxg, a.get_si());
            }
        if (maxg > 8) continue;
        const long core = 2;
        const long radius = core + static_cast<long>(n) * maxg;
        auto inside = [&](const IntVector& v) {
            for (const auto& xc : v)
                if (xc < -radius || xc > radius) return false;
            return true;
        };
        std::set<IntVector> reach{IntVector(n, Int(0))};
        std::vector<IntVector> queue{IntVector(n, Int(0))};
        while (!queue.empty()) {
            IntVector cur = queue.back();
            queue.pop_back();
            for (const auto& g : steps) {
                IntVector nxt = add(cur, g);
                if (!inside(nxt) || reach.count(nxt)) continue;
                reach.insert(nxt);
                queue.push_back(nxt);
            }
        }
        for (const auto& p : box_points(-core, core, n)) {
            ++res.checks;
            bool in_hull = k.contains(p);
            bool generated = reach.count(p) > 0;
            if (in_hull != generated) {
                note_failure(res, "hull lattice point not generated: " + to_string(p));
                return res;
            }
        }
    }
    return res;
}

SuiteResult suite_tree_order(const SuiteOptions& opt) {
    SuiteResult res;
    res.suite = "tree-order";
    res.passed = true;
    const long maxv = opt.max_vertices < 0 ? 5 : opt.max_vertices;
    if (maxv > 8) throw TooLarge("the chain extension oracle is capped at 8 vertices per tree");
    const long box = opt.box < 0 ? 2 : opt.box;
    const std::size_t pair_cap = 20000;
    res.report["max_vertices"] = maxv;
    res.report["box"] = box;
    res.report["pair_cap"] = pair_cap;
    for (long m = 1; m <= maxv; ++m) {
        for (const auto& t : all_parent_trees(static_cast<std::size_t>(m))) {
            ParasemifieldSpec spec{{t}};
            auto pts = box_points(-box, box, static_cast<std::size_t>(m));
            const std::size_t total = pts.size() * pts.size();
            SplitMix rng(opt.seed);
            auto one = [&](const IntVector& a, const IntVector& b) {
                ++res.checks;
                if (tree_leq(spec, a, b) != tree_leq_oracle(spec, a, b))
                    note_failure(res, "order mismatch " + to_string(a) + " vs " + to_string(b));
            };
            if (total <= pair_cap) {
                for (const auto& a : pts)
                    for (const auto& b : pts) {
                        one(a, b);
                        if (!res.passed) return res;
                    }
            } else {
                for (std::size_t s = 0; s < pair_cap; ++s) {
                    const auto& a = pts[rng.range(0, static_cast<long>(pts.size()) - 1)];
                    const auto& b = pts[rng.range(0, static_cast<long>(pts.size()) - 1)];
                    one(a, b);
                    if (!res.passed) return res;
                }
            }
        }
    }
    return res;
}

SuiteResult suite_chain_intersection(const SuiteOptions& opt) {
    SuiteResult res;
    res.suite = "chain-intersection";
    res.passed = true;
    const long maxv = opt.max_vertices < 0 ? 4 : opt.max_vertices;
    const long box = opt.box < 0 ? 3 : opt.box;
    res.report["max_vertices"] = maxv;
    res.report["box"] = box;
    for (long m = 1; m <= maxv; ++m) {
        for (const auto& t : all_parent_trees(static_cast<std::size_t>(m))) {
            ParasemifieldSpec spec{{t}};
            auto x = canonical_generators(spec);
            MonoidExpr e = associated_monoid(x);
            auto orders = t.chain_extension_orders();
            std::vector<MonoidExpr> chain_exprs;
            for (const auto& ord : orders) chain_exprs.push_back(chain_associated_monoid(x, {ord}));
            for (const auto& p : box_points(0, box, x.length())) {
                ++res.checks;
                bool tree_member = member(e, p) == Tri::yes;
                bool all_chains = true;
                for (const auto& ce : chain_exprs)
                    if (member(ce, p) != Tri::yes) {
                        all_chains = false;
                        break;
                    }
                if (tree_member != all_chains) {
                    note_failure(res, "chain intersection mismatch at " + to_string(p));
                    return res;
                }
            }
        }
    }
    return res;
}

SuiteResult suite_pure_cx(const SuiteOptions& opt) {
    SuiteResult res;
    res.suite = "pure-cx";
    res.passed = true;
    const long maxv = opt.max_vertices < 0 ? 4 : opt.max_vertices;
    std::vector<long> mult = opt.multipliers.empty() ? std::vector<long>{2, 3} : opt.multipliers;
    res.report["max_vertices"] = maxv;
    for (long m = 1; m <= maxv; ++m) {
        for (const auto& t : all_parent_trees(static_cast<std::size_t>(m))) {
            auto x = canonical_generators(ParasemifieldSpec{{t}});
            MonoidExpr e = associated_monoid(x);
            long probe_box = opt.box >= 0 ? opt.box : (x.length() <= 4 ? 3 : 2);
            auto rep = purity_probe(e, probe_box, mult);
            res.checks += 1;
            if (!rep.pure)
                note_failure(res, "associated monoid impure at " + to_string(*rep.counterexample));
        }
    }
    return res;
}

SuiteResult suite_root_extraction(const SuiteOptions& opt) {
    SuiteResult res;
    res.suite = "root-extraction";
    res.passed = true;
    const long maxv = opt.max_vertices < 0 ? 4 : opt.max_vertices;
    const long box = opt.box < 0 ? 2 : opt.box;
    res.report["max_vertices"] = maxv;
    res.report["box"] = box;
    for (long m = 1; m <= maxv; ++m) {
        for (const auto& t : all_parent_trees(static_cast<std::size_t>(m))) {
            ParasemifieldSpec spec{{t}};
            IntVector zero(static_cast<std::size_t>(m), Int(0));
            for (const auto& a : box_points(-box, box, static_cast<std::size_t>(m)))
                for (long k : {2, 3, 4}) {
                    ++res.checks;
                    if (tree_leq(spec, scale(Int(k), a), zero) && !tree_leq(spec, a, zero)) {
                        note_failure(res, "root extraction fails for " + to_string(a) +
                                              " with multiplier " + std::to_string(k));
                        return res;
                    }
                }
        }
    }
    return res;
}

SuiteResult suite_face_decomposition(const SuiteOptions& opt) {
    SuiteResult res;
    res.suite = "face-decomposition";
    res.passed = true;
    const long trials = opt.trials < 0 ? 30 : opt.trials;
    const long box = opt.box < 0 ? 8 : opt.box;
    SplitMix rng(opt.seed);
    res.report["trials"] = trials;
    res.report["box"] = box;
    for (long t = 0; t < trials; ++t) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.range(1, 2));
        std::vector<IntVector> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(random_vector(rng, n, 0, 4));
        auto s = hilbert_basis(Cone::from_rays(n, gens));
        auto m = AffineMonoid::from_gens(n, s.all_generators());
        auto d = decompose(m);
        auto rep = verify_decomposition(d, box, 20000, opt.seed + static_cast<std::uint64_t>(t));
        res.checks += rep.points_checked + rep.pairs_checked;
        if (!rep.passed()) {
            note_failure(res, "trial " + std::to_string(t) + ": " +
                                  (rep.witness ? *rep.witness : "violation"));
            return res;
        }
        // every piece is pure on a small box
        for (const auto& piece : d.pieces) {
            for (const auto& p : box_points(-2, 2, n)) {
                if (is_zero(p)) continue;
                for (long k : {2, 3}) {
                    ++res.checks;
                    IntVector kp = scale(Int(k), p);
                    bool kp_in =
                        piece.face.contains(kp) && d.carrier_member(kp) == Tri::yes;
                    bool p_in = piece.face.contains(p) && d.carrier_member(p) == Tri::yes;
                    if (kp_in && !p_in) {
                        note_failure(res, "piece impure at " + to_string(p));
                        return res;
                    }
                }
            }
        }
    }
    return res;
}

SuiteResult suite_prismality_certificates(const SuiteOptions& opt) {
    SuiteResult res;
    res.suite = "prismality-certificates";
    res.passed = true;
    const long maxv = opt.max_vertices < 0 ? 4 : opt.max_vertices;
    res.report["max_vertices"] = maxv;
    auto check_one = [&](const MonoidExpr& e, bool expect_prismal) {
        ++res.checks;
        try {
            auto cert = prismality_certificate(e);
            if (expect_prismal && !cert.root.prismal()) {
                note_failure(res, "certificate lacks prismality for an associated monoid");
                return;
            }
            if (!check_certificate(cert, e)) note_failure(res, "certificate failed validation");
        } catch (const CertificateUnavailable& ex) {
            note_failure(res, std::string("certificate unavailable: ") + ex.what());
        }
    };
    for (long m = 1; m <= maxv; ++m)
        for (const auto& t : all_parent_trees(static_cast<std::size_t>(m)))
            check_one(associated_monoid(canonical_generators(ParasemifieldSpec{{t}})), true);
    // closed-operation combinations over lex leaves
    check_one(MonoidExpr::product({MonoidExpr::lex(1), MonoidExpr::lex(1)}), true);
    check_one(MonoidExpr::preimage(IntMatrix::from_rows({lvec({1, -1})}, 2), MonoidExpr::lex(1)),
              true);
    check_one(MonoidExpr::restriction(MonoidExpr::lex(2),
                                      Subspace::span_of(IntMatrix::from_rows({lvec({1, 1})}, 2))),
              true);
    check_one(MonoidExpr::preimage(IntMatrix::from_rows({lvec({1}), lvec({1})}, 1),
                                   MonoidExpr::lex(2)),
              true);
    check_one(MonoidExpr::product({MonoidExpr::lex(1),
                                   MonoidExpr::preimage(IntMatrix::from_rows({lvec({1, -1})}, 2),
                                                        MonoidExpr::lex(1))}),
              true);
    return res;
}

SuiteResult suite_grothendieck_idempotent(const SuiteOptions& opt) {
    SuiteResult res;
    res.suite = "grothendieck-idempotent";
    res.passed = true;
    const long trials = opt.trials < 0 ? 20 : opt.trials;
    SplitMix rng(opt.seed);
    res.report["trials"] = trials;

    MonoidPresentation idem;
    idem.generators = 1;
    idem.relations.emplace_back(lvec({1}), lvec({2}));
    ++res.checks;
    if (!is_trivial(idem)) note_failure(res, "<a | a = a+a> is not trivial");

    MonoidPresentation twotor;
    twotor.generators = 2;
    twotor.relations.emplace_back(lvec({2, 0}), lvec({0, 2}));
    auto g = group_completion(twotor);
    ++res.checks;
    if (g.free_rank != 1 || g.invariant_factors != std::vector<Int>{Int(2)})
        note_failure(res, "<a,b | a+a=b+b> must have free rank 1 and torsion Z/2");

    for (long t = 0; t < trials; ++t) {
        std::size_t gn = 1 + static_cast<std::size_t>(rng.range(0, 3));
        MonoidPresentation p;
        p.generators = gn;
        long extra = rng.range(0, 2);
        for (long r = 0; r < extra; ++r)
            p.relations.emplace_back(random_vector(rng, gn, 0, 3), random_vector(rng, gn, 0, 3));
        for (std::size_t i = 0; i < gn; ++i) {
            IntVector u(gn, Int(0)), v(gn, Int(0));
            u[i] = 1;
            v[i] = 2;
            p.relations.emplace_back(u, v);
        }
        ++res.checks;
        if (!is_trivial(p)) {
            note_failure(res, "idempotent-augmented presentation " + std::to_string(t) +
                                  " is not trivial");
            return res;
        }
    }
    return res;
}

SuiteResult suite_hilbert_oracle(const SuiteOptions& opt) {
    SuiteResult res;
    res.suite = "hilbert-oracle";
    res.passed = true;
    const long trials = opt.trials < 0 ? 50 : opt.trials;
    const long box = opt.box < 0 ? 8 : opt.box;
    res.report["trials"] = trials;
    res.report["box"] = box;
    std::vector<std::size_t> dims{2, 3};
    if (opt.dim > 0) dims = {static_cast<std::size_t>(opt.dim)};
    for (std::size_t dim : dims) {
        SplitMix rng(opt.seed + dim);
        for (long t = 0; t < trials; ++t) {
            std::vector<IntVector> gens;
            std::size_t g = 1 + static_cast<std::size_t>(rng.range(0, 2));
            for (std::size_t i = 0; i < g; ++i) gens.push_back(random_vector(rng, dim, 0, 5));
            Cone c = Cone::from_rays(dim, gens);
            auto hb = hilbert_basis(c);
            // reachability from 0 inside the box by basis steps
            auto inside = [&](const IntVector& v) {
                for (const auto& x : v)
                    if (x < 0 || x > box) return false;
                return true;
            };
            std::set<IntVector> reach{IntVector(dim, Int(0))};
            std::vector<IntVector> queue{IntVector(dim, Int(0))};
            auto steps = hb.all_generators();
            while (!queue.empty()) {
                IntVector cur = queue.back();
                queue.pop_back();
                for (const auto& s : steps) {
                    IntVector nxt = add(cur, s);
                    if (!inside(nxt) || reach.count(nxt)) continue;
                    reach.insert(nxt);
                    queue.push_back(nxt);
                }
            }
            for (const auto& p : box_points(0, box, dim)) {
                ++res.checks;
                if (c.contains(p) != (reach.count(p) > 0)) {
                    note_failure(res, "regeneration mismatch at " + to_string(p));
                    return res;
                }
            }
            for (const auto& h : hb.basis) {
                ++res.checks;
                for (const auto& u : box_points(0, box, dim)) {
                    if (is_zero(u) || !c.contains(u)) continue;
                    IntVector rest = sub(h, u);
                    if (!is_zero(rest) && c.contains(rest)) {
                        note_failure(res, "basis element reducible: " + to_string(h));
                        return res;
                    }
                }
            }
        }
    }
    return res;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "remark-1-5",          "closure-basic",       "convex-identities",
        "tree-order",          "chain-intersection",  "pure-cx",
        "root-extraction",     "face-decomposition",  "prismality-certificates",
        "grothendieck-idempotent", "hilbert-oracle"};
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
    SuiteResult res;
    if (name == "remark-1-5")
        res = suite_remark_1_5(opt);
    else if (name == "closure-basic")
        res = suite_closure_basic(opt);
    else if (name == "convex-identities")
        res = suite_convex_identities(opt);
    else if (name == "tree-order")
        res = suite_tree_order(opt);
    else if (name == "chain-intersection")
        res = suite_chain_intersection(opt);
    else if (name == "pure-cx")
        res = suite_pure_cx(opt);
    else if (name == "root-extraction")
        res = suite_root_extraction(opt);
    else if (name == "face-decomposition")
        res = suite_face_decomposition(opt);
    else if (name == "prismality-certificates")
        res = suite_prismality_certificates(opt);
    else if (name == "grothendieck-idempotent")
        res = suite_grothendieck_idempotent(opt);
    else if (name == "hilbert-oracle")
        res = suite_hilbert_oracle(opt);
    else
        throw InputError("$", "unknown suite \"" + name + "\"");
    res.report["suite"] = res.suite;
    res.report["passed"] = res.passed;
    res.report["checks"] = res.checks;
    res.report["seed"] = opt.seed;
    return res;
}

}  // namespace prisma
