#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "prisma/grothendieck.hpp"

using namespace prisma;

namespace {

IntVector vec(std::vector<long> xs) {
    IntVector v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

MonoidPresentation pres(std::size_t g, std::vector<std::pair<std::vector<long>, std::vector<long>>> rels) {
    MonoidPresentation p;
    p.generators = g;
    for (auto& [u, v] : rels) p.relations.emplace_back(vec(u), vec(v));
    return p;
}

}  // namespace

TEST_CASE("free presentation") {
    auto g = group_completion(pres(2, {}));
    CHECK(g.free_rank == 2);
    CHECK(g.invariant_factors.empty());
    CHECK_FALSE(g.trivial());
    CHECK_FALSE(class_is_zero(pres(1, {}), vec({1})));
}

TEST_CASE("idempotent generator forces triviality") {
    // <a | a = a + a>
    auto p = pres(1, {{{1}, {2}}});
    CHECK(is_trivial(p));
    CHECK(class_is_zero(p, vec({1})));
}

TEST_CASE("two by two torsion") {
    // <a, b | a+a = b+b> has completion Z ⊕ Z/2
    auto g = group_completion(pres(2, {{{2, 0}, {0, 2}}}));
    CHECK(g.free_rank == 1);
    CHECK(g.invariant_factors == std::vector<Int>{Int(2)});
    CHECK_FALSE(g.trivial());
    // a - b has order two
    CHECK_FALSE(g.is_zero_class(vec({1, 0})));
}

TEST_CASE("absorbing pair is trivial") {
    // <a, b | a = a+b, b = b+a>
    CHECK(is_trivial(pres(2, {{{1, 0}, {1, 1}}, {{0, 1}, {1, 1}}})));
}

TEST_CASE("zero class witness relation") {
    // <z, u | z = u + z> forces [u] = 0
    auto p = pres(2, {{{1, 0}, {1, 1}}});
    CHECK(class_is_zero(p, vec({0, 1})));
    CHECK(class_is_zero(p, vec({0, 0})));
    CHECK_FALSE(is_trivial(p));  // [z] generates a copy of Z
}

TEST_CASE("zero classes are additive") {
    SplitMix rng(103);
    for (int t = 0; t < 40; ++t) {
        std::size_t g = 2 + rng.range(0, 1);
        MonoidPresentation p;
        p.generators = g;
        for (int r = 0; r < 2; ++r) {
            IntVector u(g), v(g);
            for (auto& x : u) x = Int(rng.range(0, 2));
            for (auto& x : v) x = Int(rng.range(0, 2));
            p.relations.emplace_back(u, v);
        }
        auto cg = group_completion(p);
        std::vector<IntVector> zeros;
        std::vector<long> x(g, 0);
        while (true) {
            IntVector u(g);
            for (std::size_t i = 0; i < g; ++i) u[i] = Int(x[i]);
            if (cg.is_zero_class(u)) zeros.push_back(u);
            std::size_t i = 0;
            while (i < g && x[i] == 2) x[i++] = 0;
            if (i == g) break;
            ++x[i];
        }
        for (const auto& a : zeros)
            for (const auto& b : zeros) CHECK(cg.is_zero_class(add(a, b)));
    }
}

TEST_CASE("idempotent augmentation trivializes any presentation") {
    SplitMix rng(107);
    for (int t = 0; t < 20; ++t) {
        std::size_t g = 1 + rng.range(0, 3);
        MonoidPresentation p;
        p.generators = g;
        for (int r = 0; r < 2; ++r) {
            IntVector u(g), v(g);
            for (auto& xx : u) xx = Int(rng.range(0, 3));
            for (auto& xx : v) xx = Int(rng.range(0, 3));
            p.relations.emplace_back(u, v);
        }
        for (std::size_t i = 0; i < g; ++i) {
            IntVector u(g, Int(0)), v(g, Int(0));
            u[i] = 1;
            v[i] = 2;
            p.relations.emplace_back(u, v);
        }
        CHECK(is_trivial(p));
    }
}

TEST_CASE("invariant factors do not depend on presentation order") {
    SplitMix rng(109);
    for (int t = 0; t < 20; ++t) {
        std::size_t g = 2 + rng.range(0, 1);
        MonoidPresentation p;
        p.generators = g;
        for (int r = 0; r < 3; ++r) {
            IntVector u(g), v(g);
            for (auto& xx : u) xx = Int(rng.range(0, 3));
            for (auto& xx : v) xx = Int(rng.range(0, 3));
            p.relations.emplace_back(u, v);
        }
        auto base = group_completion(p);
        MonoidPresentation q = p;
        std::reverse(q.relations.begin(), q.relations.end());
        auto flipped = group_completion(q);
        CHECK(base.invariant_factors == flipped.invariant_factors);
        CHECK(base.free_rank == flipped.free_rank);
    }
}

TEST_CASE("validation") {
    MonoidPresentation p;
    p.generators = 2;
    p.relations.emplace_back(vec({1}), vec({1, 0}));
    CHECK_THROWS_AS(group_completion(p), DimensionMismatch);
    MonoidPresentation q;
    q.generators = 1;
    q.relations.emplace_back(vec({-1}), vec({0}));
    CHECK_THROWS(group_completion(q));
}
