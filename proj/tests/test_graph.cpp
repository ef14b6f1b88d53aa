#include "fpdioph/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace fpd;
using dioph::DiophGraph;
using ff::i64;
using ff::u64;

TEST_CASE("adjacency matches the defining square condition") {
    for (u64 p : {5ull, 13ull, 31ull}) {
        ff::PrimeContext ctx(p);
        DiophGraph g(ctx);
        CHECK(g.vertices() == p - 1);
        i64 edges = 0;
        for (u64 a = 1; a < p; ++a)
            for (u64 b = 1; b < p; ++b) {
                bool want = a != b && ctx.is_square(ctx.add(ctx.mul(a, b), 1));
                CHECK(g.adjacent(a, b) == want);
                if (a < b && want) ++edges;
            }
        CHECK(g.edge_count() == edges);
        for (u64 a = 1; a < p; ++a) CHECK(!g.adjacent(a, a));  // no self loops
    }
}

TEST_CASE("clique counts at small primes") {
    // frozen by hand: pairs at 5 are {1,3},{1,4},{2,4}; triples at 7 are
    // {2,3,5},{2,4,5}; the quadruple at 11 is {1,3,8,10}
    auto count = [](u64 p, int m) {
        ff::PrimeContext ctx(p);
        DiophGraph g(ctx);
        return dioph::count_cliques(g, m);
    };
    CHECK(count(3, 2) == 1);
    CHECK(count(5, 2) == 3);
    CHECK(count(7, 2) == 8);
    CHECK(count(13, 2) == 33);
    CHECK(count(3, 3) == 0);
    CHECK(count(5, 3) == 0);
    CHECK(count(7, 3) == 2);
    CHECK(count(13, 3) == 20);
    CHECK(count(5, 4) == 0);
    CHECK(count(7, 4) == 0);
    CHECK(count(11, 4) == 1);
    CHECK(count(11, 5) == 0);
    CHECK(count(3, 7) == 0);  // m above vertex count
}

TEST_CASE("enumeration agrees with counting and is ordered") {
    for (u64 p : {11ull, 17ull, 29ull}) {
        ff::PrimeContext ctx(p);
        DiophGraph g(ctx);
        for (int m = 2; m <= 4; ++m) {
            auto all = dioph::enumerate_tuples(g, m, -1);
            CHECK((i64)all.size() == dioph::count_cliques(g, m));
            std::set<std::vector<u64>> seen;
            for (const auto& t : all) {
                CHECK((int)t.size() == m);
                CHECK(std::is_sorted(t.begin(), t.end()));
                CHECK(dioph::is_diophantine_tuple(ctx, t));
                seen.insert(t);
            }
            CHECK(seen.size() == all.size());  // no duplicates
            CHECK(std::is_sorted(all.begin(), all.end()));  // lexicographic
            if (all.size() > 1) {
                auto first = dioph::enumerate_tuples(g, m, 1);
                REQUIRE(first.size() == 1);
                CHECK(first[0] == all[0]);
            }
            i64 visited = 0;
            dioph::for_each_tuple(g, m, [&](const std::vector<u64>&) {
                ++visited;
                return visited < 3;  // early stop
            });
            CHECK(visited == std::min<i64>(3, (i64)all.size()));
        }
    }
}

TEST_CASE("the one quadruple at p = 11") {
    ff::PrimeContext ctx(11);
    DiophGraph g(ctx);
    auto all = dioph::enumerate_tuples(g, 4, -1);
    REQUIRE(all.size() == 1);
    CHECK(all[0] == std::vector<u64>{1, 3, 8, 10});
}

TEST_CASE("count record carries the method") {
    ff::PrimeContext ctx(13);
    DiophGraph g(ctx);
    auto rec = dioph::count_tuples(g, 3);
    CHECK(rec.p == 13);
    CHECK(rec.m == 3);
    CHECK(rec.count == 20);
    CHECK(rec.method == "brute");
}

TEST_CASE("closed formulas at frozen points") {
    CHECK(dioph::n2_formula(5) == 3);
    CHECK(dioph::n2_formula(7) == 8);
    CHECK(dioph::n2_formula(13) == 33);
    CHECK(dioph::n3_formula(7) == 2);
    CHECK(dioph::n3_formula(13) == 20);
    CHECK(dioph::n4_formula(11, 600) == 1);
    CHECK(dioph::n4_formula(5, 142) == 0);
    CHECK(dioph::n4_formula(7, -144) == 0);
    CHECK_THROWS_AS(dioph::n4_formula(11, 601), dioph::NonIntegralCount);
}

TEST_CASE("formulas equal brute force on a prime sample") {
    for (u64 p = 3; p <= 101; p += 2) {
        if (!ff::is_prime(p)) continue;
        ff::PrimeContext ctx(p);
        DiophGraph g(ctx);
        CHECK(dioph::n2_formula(p) == dioph::count_cliques(g, 2));
        CHECK(dioph::n3_formula(p) == dioph::count_cliques(g, 3));
    }
}

TEST_CASE("tuple validation") {
    ff::PrimeContext ctx(11);
    CHECK(dioph::is_diophantine_tuple(ctx, {1, 3, 8, 10}));
    CHECK(!dioph::is_diophantine_tuple(ctx, {1, 6}));  // 7 is not a square mod 11
    CHECK(dioph::is_diophantine_tuple(ctx, {}));
    CHECK(!dioph::is_diophantine_tuple(ctx, {0, 3}));   // zero entry
    CHECK(!dioph::is_diophantine_tuple(ctx, {3, 3}));   // repeat
    CHECK(!dioph::is_diophantine_tuple(ctx, {11, 3}));  // out of range
    CHECK(dioph::is_diophantine_tuple(ctx, {2, 5}));    // 2*5+1 = 0 mod 11, 0 is square
    CHECK_THROWS_AS(dioph::greedy_extend(dioph::DiophGraph(ctx), {1, 6}),
                    dioph::InvalidTuple);
}

TEST_CASE("greedy extension") {
    ff::PrimeContext c5(5);
    DiophGraph g5(c5);
    CHECK(!dioph::greedy_extend(g5, {1, 3}).has_value());  // no quadruples at 5
    ff::PrimeContext c17(17);
    DiophGraph g17(c17);
    auto x = dioph::greedy_extend(g17, {1, 3});
    REQUIRE(x.has_value());
    CHECK(dioph::is_diophantine_tuple(c17, {1, 3, *x}));
    // smallest extension: no smaller y works
    for (u64 y = 1; y < *x; ++y) {
        if (y == 1 || y == 3) continue;
        CHECK(!dioph::is_diophantine_tuple(c17, {1, 3, y}));
    }
}

TEST_CASE("extension counts and their lower bound") {
    for (u64 p : {101ull, 199ull, 499ull}) {
        ff::PrimeContext ctx(p);
        DiophGraph g(ctx);
        std::vector<u64> t{1, 3};
        for (int m = 2; m <= 4; ++m) {
            i64 direct = 0;  // brute recount of the defining condition
            for (u64 x = 0; x < p; ++x) {
                bool ok = true;
                for (u64 a : t)
                    if (ctx.legendre(ctx.add(ctx.mul(a, x), 1)) != 1) ok = false;
                if (ok) ++direct;
            }
            CHECK(dioph::count_extensions(ctx, t) == direct);
            CHECK(direct >= dioph::weil_extension_bound(p, m).ceil());
            auto x = dioph::greedy_extend(g, t);
            if (!x) break;
            t.push_back(*x);
        }
    }
    CHECK_THROWS_AS(dioph::weil_extension_bound(101, 1), dioph::InvalidTuple);
}

TEST_CASE("construction succeeds above the existence threshold") {
    // thresholds 2^(2m-2) m^2: 16, 144, 1024, 6400
    struct Row { int m; u64 p; };
    for (auto [m, p] : {Row{2, 17}, Row{2, 19}, Row{3, 149}, Row{3, 151},
                        Row{4, 1031}, Row{5, 6421}}) {
        ff::PrimeContext ctx(p);
        auto t = dioph::construct_tuple(ctx, m);
        REQUIRE(t.has_value());
        CHECK((int)t->size() == m);
        CHECK(dioph::is_diophantine_tuple(ctx, *t));
    }
    ff::PrimeContext c5(5);
    CHECK(!dioph::construct_tuple(c5, 4).has_value());  // no quadruple exists at 5
    ff::PrimeContext c17(17);
    auto pair = dioph::construct_tuple(c17, 2);
    REQUIRE(pair.has_value());
    CHECK(*pair == std::vector<u64>{1, 3});
}

TEST_CASE("seed tuples reduce to valid tuples") {
    CHECK(dioph::seed_tuples(2).size() >= 1);
    CHECK(dioph::seed_tuples(4).size() == 2);
    CHECK(dioph::seed_tuples(6).size() == 3);
    CHECK(dioph::seed_tuples(7).empty());
    CHECK(dioph::seed_tuples(1).empty());
    // every rational seed entry squares away: n/d with pairwise products+1 square in Q
    for (int m = 2; m <= 6; ++m)
        for (const auto& seed : dioph::seed_tuples(m))
            CHECK((int)seed.entries.size() == m);
    // p = 13: first quadruple seed {1,3,8,120} -> {1,3,8,3} collides? 120 mod 13 = 3,
    // so it collides with the entry 3 and must be rejected
    ff::PrimeContext c13(13);
    auto r = dioph::reduce_seed_tuple(dioph::seed_tuples(4)[0], c13);
    CHECK(!r.has_value());
    // large prime: both quadruple seeds reduce and validate
    ff::PrimeContext big(10007);
    for (const auto& seed : dioph::seed_tuples(4)) {
        auto t = dioph::reduce_seed_tuple(seed, big);
        REQUIRE(t.has_value());
        CHECK(dioph::is_diophantine_tuple(big, *t));
        CHECK(std::is_sorted(t->begin(), t->end()));
    }
}

TEST_CASE("containment sanity between consecutive clique sizes") {
    std::mt19937_64 rng(11);
    for (u64 p : {31ull, 61ull, 101ull}) {
        ff::PrimeContext ctx(p);
        DiophGraph g(ctx);
        for (int m = 2; m <= 4; ++m) {
            i64 lo = dioph::count_cliques(g, m), hi = dioph::count_cliques(g, m + 1);
            // every (m+1)-clique contains m+1 m-cliques, each m-clique extends
            // to at most p - m larger ones
            CHECK(hi * (m + 1) <= lo * (i64)(p - m));
        }
    }
}
