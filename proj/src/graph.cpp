#include "fpdioph/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace fpd {
namespace dioph {

DiophGraph::DiophGraph(const ff::PrimeContext& ctx) : ctx_(&ctx) {
    u64 p = ctx.p();
    u64 n = p - 1;
    words_ = (int)((n + 63) / 64);
    bits_.assign(n * (u64)words_, 0);
    for (u64 a = 1; a < p; ++a) {
        u64* r = bits_.data() + (a - 1) * (u64)words_;
        u64 v = a + 1;  // a*b + 1 stepped by a
        for (u64 b = 1; b < p; ++b) {
            if (b != a && ctx.is_square(v)) r[(b - 1) >> 6] |= 1ull << ((b - 1) & 63);
            v += a;
            if (v >= p) v -= p;
        }
    }
}

i64 DiophGraph::edge_count() const {
    i64 s = 0;
    for (u64 w : bits_) s += std::popcount(w);
    return s / 2;
}

namespace {

i64 popcount_words(const u64* w, int n) {
    i64 s = 0;
    for (int i = 0; i < n; ++i) s += std::popcount(w[i]);
    return s;
}

// cand &= row(v) restricted to bits strictly above v
void intersect_above(const u64* cand, const u64* row, u64 v, int words, u64* out) {
    u64 b = v;  // first admissible bit index (vertex v+1 -> bit v)
    int wv = (int)(b >> 6);
    for (int i = 0; i < wv; ++i) out[i] = 0;
    for (int i = wv; i < words; ++i) out[i] = cand[i] & row[i];
    out[wv] &= ~0ull << (b & 63);
}

struct CliqueWalker {
    const DiophGraph* g;
    int m, words;
    i64 count = 0;
    const std::function<bool(const std::vector<u64>&)>* sink = nullptr;
    bool stopped = false;
    std::vector<u64> chosen;
    std::vector<u64> scratch;  // per-depth candidate sets

    void emit_rest(const u64* cand) {
        for (int i = 0; i < words && !stopped; ++i) {
            u64 w = cand[i];
            while (w && !stopped) {
                int b = std::countr_zero(w);
                w &= w - 1;
                chosen.push_back((u64)(i * 64 + b + 1));
                if (!(*sink)(chosen)) stopped = true;
                chosen.pop_back();
            }
        }
    }

    void walk(const u64* cand, int depth) {
        if (depth == m - 1) {
            if (sink)
                emit_rest(cand);
            else
                count += popcount_words(cand, words);
            return;
        }
        u64* next = scratch.data() + (u64)(depth + 1) * words;
        for (int i = 0; i < words && !stopped; ++i) {
            u64 w = cand[i];
            while (w && !stopped) {
                int b = std::countr_zero(w);
                w &= w - 1;
                u64 v = (u64)(i * 64 + b + 1);
                intersect_above(cand, g->row(v), v, words, next);
                chosen.push_back(v);
                walk(next, depth + 1);
                chosen.pop_back();
            }
        }
    }

    void run() {
        u64 n = g->vertices();
        scratch.assign((u64)(m + 1) * words, 0);
        std::vector<u64> first((u64)words);
        for (u64 v = 1; v <= n && !stopped; ++v) {
            intersect_above(g->row(v), g->row(v), v, words, first.data());  // bits above v
            chosen.assign(1, v);
            walk(first.data(), 1);
        }
    }
};

}  // namespace

i64 count_cliques(const DiophGraph& g, int m) {
    if (m < 2) throw InvalidTuple("count_cliques: m must be >= 2");
    if ((u64)m > g.vertices()) return 0;
    if (m == 2) return g.edge_count();
    CliqueWalker w{&g, m, g.words()};
    w.run();
    return w.count;
}

TupleCountRecord count_tuples(const DiophGraph& g, int m) {
    return {g.p(), m, count_cliques(g, m), "brute"};
}

void for_each_tuple(const DiophGraph& g, int m,
                    const std::function<bool(const std::vector<u64>&)>& sink) {
    if (m < 2) throw InvalidTuple("for_each_tuple: m must be >= 2");
    if ((u64)m > g.vertices()) return;
    CliqueWalker w{&g, m, g.words()};
    w.sink = &sink;
    w.run();
}

std::vector<std::vector<u64>> enumerate_tuples(const DiophGraph& g, int m, i64 limit) {
    if (limit == 0) return {};
    std::vector<std::vector<u64>> out;
    for_each_tuple(g, m, [&](const std::vector<u64>& t) {
        out.push_back(t);
        return limit < 0 || (i64)out.size() < limit;
    });
    return out;
}

namespace {
i64 exact_div(ff::i128 num, i64 den, const char* what) {
    if (num % den != 0) throw NonIntegralCount(what);
    return (i64)(num / den);
}
}  // namespace

i64 n2_formula(u64 p) {
    i64 q = (i64)p;
    if (p % 4 == 1) return exact_div((ff::i128)(q - 1) * (q - 2), 4, "n2");
    return exact_div((ff::i128)q * q - 3 * q + 4, 4, "n2");
}

i64 n3_formula(u64 p) {
    i64 q = (i64)p;
    if (p % 4 == 1) return exact_div((ff::i128)(q - 1) * (q - 3) * (q - 5), 48, "n3");
    return exact_div((ff::i128)(q - 3) * ((ff::i128)q * q - 6 * q + 17), 48, "n3");
}

i64 n4_formula(u64 p, i64 q_value) {
    ff::i128 q = (i64)p;
    ff::i128 num;
    switch (p % 8) {
        case 1: num = q * q * q * q - 24 * q * q * q + 206 * q * q - 650 * q + 477; break;
        case 3: num = q * q * q * q - 24 * q * q * q + 236 * q * q - 1098 * q + 1761; break;
        case 5: num = q * q * q * q - 24 * q * q * q + 206 * q * q - 698 * q + 573; break;
        default: num = q * q * q * q - 24 * q * q * q + 236 * q * q - 1050 * q + 1761; break;
    }
    num += q_value;
    if (num % 1536 != 0) throw NonIntegralCount("n4: 1536 does not divide the numerator");
    return (i64)(num / 1536);
}

bool is_diophantine_tuple(const ff::PrimeContext& ctx, const std::vector<u64>& t) {
    for (size_t i = 0; i < t.size(); ++i) {
        if (t[i] == 0 || t[i] >= ctx.p()) return false;
        for (size_t j = i + 1; j < t.size(); ++j) {
            if (t[i] == t[j]) return false;
            if (ctx.chi(ctx.mul(t[i], t[j]) + 1) != 1) return false;
        }
    }
    return true;
}

std::optional<u64> greedy_extend(const DiophGraph& g, const std::vector<u64>& tuple) {
    const auto& ctx = g.ctx();
    if (tuple.empty() || !is_diophantine_tuple(ctx, tuple))
        throw InvalidTuple("greedy_extend: input is not a Diophantine tuple");
    for (u64 x = 1; x < ctx.p(); ++x) {
        bool ok = true;
        for (u64 a : tuple)
            if (!g.adjacent(a, x)) {
                ok = false;
                break;
            }
        if (ok) return x;
    }
    return std::nullopt;
}

i64 count_extensions(const ff::PrimeContext& ctx, const std::vector<u64>& tuple) {
    i64 n = 0;
    for (u64 x = 0; x < ctx.p(); ++x) {
        bool ok = true;
        for (u64 a : tuple)
            if (ctx.legendre(ctx.mul(a, x) + 1) != 1) {
                ok = false;
                break;
            }
        if (ok) ++n;
    }
    return n;
}

ff::Rational weil_extension_bound(u64 p, int m) {
    if (m < 2 || m > 30) throw InvalidTuple("weil_extension_bound: m out of range");
    u64 s = (u64)std::llround(std::floor(std::sqrt((double)p)));
    while (s * s > p) --s;
    while (s * s < p) ++s;  // ceil(sqrt(p))
    i64 pw = 1ll << m;
    // common denominator 2^m
    i64 num = (i64)p - ((i64)(m - 2) * (pw / 2) + 1) * (i64)s - (i64)m * (pw / 2);
    return {num, pw};
}

std::optional<std::vector<u64>> construct_tuple(const ff::PrimeContext& ctx, int m) {
    if (m < 2) throw InvalidTuple("construct_tuple: m must be >= 2");
    u64 p = ctx.p();
    DiophGraph g(ctx);
    if (p >= 5) {
        std::vector<u64> t{1, 3};  // 1*3 + 1 = 4, always a square
        while ((int)t.size() < m) {
            auto x = greedy_extend(g, t);
            if (!x) break;
            t.push_back(*x);
        }
        if ((int)t.size() == m) {
            std::sort(t.begin(), t.end());
            return t;
        }
    }
    // greedy stalled (possible only under the existence threshold): full search
    if (m <= 4 && p <= 199) {
        auto all = enumerate_tuples(g, m, 1);
        if (!all.empty()) return all[0];
    }
    return std::nullopt;
}

const std::vector<SeedTuple>& seed_tuples(int m) {
    static const std::vector<SeedTuple> none{};
    static const std::vector<SeedTuple> m2{{{{2, 1}, {4, 1}}}};
    static const std::vector<SeedTuple> m3{{{{2, 1}, {4, 1}, {12, 1}}}};
    static const std::vector<SeedTuple> m4{
        {{{1, 1}, {3, 1}, {8, 1}, {120, 1}}},
        {{{2, 1}, {24, 1}, {40, 1}, {7812, 1}}},
    };
    static const std::vector<SeedTuple> m5{
        {{{5, 16}, {21, 16}, {4, 1}, {285, 16}, {420, 1}}},
        {{{1, 5}, {21, 20}, {69, 20}, {25, 4}, {96, 5}}},
    };
    static const std::vector<SeedTuple> m6{
        {{{221, 1260}, {175, 324}, {203, 180}, {81, 35}, {265, 28}, {1120, 9}}},
        {{{377, 1260}, {119, 180}, {297, 140}, {992, 315}, {175, 9}, {2275, 4}}},
        {{{5, 36}, {665, 1521}, {5, 4}, {32, 9}, {3213, 676}, {189, 4}}},
    };
    switch (m) {
        case 2: return m2;
        case 3: return m3;
        case 4: return m4;
        case 5: return m5;
        case 6: return m6;
        default: return none;
    }
}

std::optional<std::vector<u64>> reduce_seed_tuple(const SeedTuple& seed, const ff::PrimeContext& ctx) {
    std::vector<u64> out;
    out.reserve(seed.entries.size());
    for (auto [n, d] : seed.entries) {
        u64 dr = ctx.reduce(d);
        if (dr == 0) return std::nullopt;
        u64 v = ctx.mul(ctx.reduce(n), ctx.inv(dr));
        if (v == 0) return std::nullopt;
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) return std::nullopt;
    return out;
}

}  // namespace dioph
}  // namespace fpd
