#include "fpdioph/verify.hpp"

#include "fpdioph/fibers.hpp"
#include "fpdioph/forms.hpp"
#include "fpdioph/graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <thread>

namespace fpd {
namespace verify {

using ff::i128;

std::vector<u64> primes_in(u64 lo, u64 hi) {
    std::vector<u64> out;
    if (lo < 3) lo = 3;
    for (u64 p = lo | 1; p <= hi; p += 2)
        if (ff::is_prime(p)) out.push_back(p);
    return out;
}

VerifyConfig VerifyConfig::with_pmax(u64 pmax, int jobs) {
    VerifyConfig c;
    c.pairs_max = pmax;
    c.quads_max = std::min<u64>(pmax, 199);
    c.wper_max = std::min<u64>(pmax, 61);
    c.fourtor_max = std::min<u64>(pmax, 61);
    c.fibsum_max = std::min<u64>(pmax, 499);
    c.tsets_max = std::min<u64>(pmax, 499);
    c.route_max = std::min<u64>(pmax, 199);
    c.forms_max = std::min<u64>(std::max<u64>(pmax, 100), 100000);
    c.hecke_max = std::min<u64>(pmax, 97);
    c.seeds_max = std::min<u64>(pmax, 9973);
    c.asym_max = std::min<u64>(pmax, 9973);
    c.ext_max = std::min<u64>(pmax, 499);
    c.jobs = jobs;
    c.configured_pmax = pmax;
    return c;
}

namespace {

struct TaggedFailure {
    int check;
    Failure f;
};
using TaggedVec = std::vector<TaggedFailure>;

std::string str128(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    if (neg) v = -v;
    std::string s;
    while (v) {
        s += char('0' + (int)(v % 10));
        v /= 10;
    }
    if (neg) s += '-';
    std::reverse(s.begin(), s.end());
    return s;
}

i128 ipow(u64 base, int e) {
    i128 r = 1;
    for (int i = 0; i < e; ++i) r *= (i64)base;
    return r;
}

void parallel_over_primes(const std::vector<u64>& primes, int jobs,
                          const std::function<TaggedVec(u64)>& fn,
                          std::vector<CheckResult>& checks) {
    std::vector<TaggedVec> per(primes.size());
    auto guarded = [&](u64 p) -> TaggedVec {
        try {
            return fn(p);
        } catch (const std::exception& e) {
            return {{0, {p, "no exception", e.what(), "unexpected error"}}};
        }
    };
    jobs = std::max(1, jobs);
    if (jobs == 1 || primes.size() < 2) {
        for (size_t i = 0; i < primes.size(); ++i) per[i] = guarded(primes[i]);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        int n = std::min<int>(jobs, (int)primes.size());
        for (int j = 0; j < n; ++j)
            pool.emplace_back([&] {
                for (size_t i; (i = next.fetch_add(1)) < primes.size();) per[i] = guarded(primes[i]);
            });
        for (auto& th : pool) th.join();
    }
    for (auto& v : per)
        for (auto& tf : v) {
            checks[(size_t)tf.check].passed = false;
            checks[(size_t)tf.check].failures.push_back(std::move(tf.f));
        }
}

Failure mismatch(u64 p, i64 expected, i64 actual, std::string context) {
    return {p, std::to_string(expected), std::to_string(actual), std::move(context)};
}

}  // namespace

std::vector<CheckResult> suite_tuples(const VerifyConfig& cfg) {
    std::vector<CheckResult> checks{
        {"pairs-brute-vs-formula", 3, cfg.pairs_max},
        {"triples-brute-vs-formula", 3, cfg.pairs_max},
        {"quadruples-brute-vs-formula", 3, cfg.quads_max},
        {"construct-existence", 17, 17},
        {"seed-quadruple-coverage", 11, cfg.seeds_max},
        {"extension-count-bound", 5, cfg.ext_max},
        {"asymptotic-density", 101, cfg.asym_max},
    };
    i64 n_max = std::max<i64>({(i64)cfg.quads_max, (i64)cfg.asym_max, 1000});
    forms::FormTable table(n_max);
    u64 hi = std::max({cfg.pairs_max, cfg.quads_max, cfg.seeds_max, cfg.ext_max, cfg.asym_max});
    auto ps = primes_in(3, hi);

    parallel_over_primes(ps, cfg.jobs, [&](u64 p) -> TaggedVec {
        TaggedVec out;
        ff::PrimeContext ctx(p);
        std::optional<dioph::DiophGraph> g;
        if (p <= cfg.pairs_max || p <= cfg.quads_max || p <= cfg.ext_max) g.emplace(ctx);
        if (p <= cfg.pairs_max) {
            i64 b2 = dioph::count_cliques(*g, 2), f2 = dioph::n2_formula(p);
            if (b2 != f2) out.push_back({0, mismatch(p, f2, b2, "m=2")});
            i64 b3 = dioph::count_cliques(*g, 3), f3 = dioph::n3_formula(p);
            if (b3 != f3) out.push_back({1, mismatch(p, f3, b3, "m=3")});
        }
        if (p <= cfg.quads_max) {
            i64 f4 = dioph::n4_formula(p, forms::q_of_p(table, p));
            i64 b4 = dioph::count_cliques(*g, 4);
            if (b4 != f4) out.push_back({2, mismatch(p, f4, b4, "m=4")});
        }
        if (p >= 11 && p <= cfg.seeds_max) {
            bool any = false;
            for (const auto& seed : dioph::seed_tuples(4)) {
                auto red = dioph::reduce_seed_tuple(seed, ctx);
                if (red && dioph::is_diophantine_tuple(ctx, *red)) {
                    any = true;
                    break;
                }
            }
            if (!any) out.push_back({4, {p, "some seed reduces", "none does", ""}});
        }
        if (p >= 5 && p <= cfg.ext_max) {
            std::vector<u64> t{1, 3};
            for (int m = 2; m <= 3; ++m) {
                if ((int)t.size() < m) break;
                i64 got = dioph::count_extensions(ctx, t);
                i64 need = dioph::weil_extension_bound(p, m).ceil();
                if (got < need)
                    out.push_back({5, {p, ">= " + std::to_string(need), std::to_string(got),
                                       "m=" + std::to_string(m)}});
                if (m == 2 && g) {
                    auto x = dioph::greedy_extend(*g, t);
                    if (!x) break;
                    t.push_back(*x);
                }
            }
        }
        if (p >= 101 && p <= cfg.asym_max) {
            for (int m = 2; m <= 4; ++m) {
                i64 nf = m == 2   ? dioph::n2_formula(p)
                         : m == 3 ? dioph::n3_formula(p)
                                  : dioph::n4_formula(p, forms::q_of_p(table, p));
                i64 scale = m == 2 ? 4 : m == 3 ? 48 : 1536;  // m! 2^(m choose 2)
                i128 delta = (i128)nf * scale - ipow(p, m);
                if (delta < 0) delta = -delta;
                // |scaled - p^m| <= 40 p^(m - 1/2), squared to stay integral
                if (delta * delta > 1600 * ipow(p, 2 * m - 1))
                    out.push_back({6, {p, "within 40 p^(m-1/2)", str128(delta),
                                       "m=" + std::to_string(m)}});
            }
        }
        return out;
    }, checks);

    // smallest primes above the existence threshold 2^(2m-2) m^2, three per m
    auto& ce = checks[3];
    ce.p_lo = ~0ull;
    ce.p_hi = 0;
    for (int m = 2; m <= 5; ++m) {
        u64 bound = (1ull << (2 * m - 2)) * (u64)(m * m);
        u64 p = bound + 1;
        for (int found = 0; found < 3; ++p) {
            if (p % 2 == 0 || !ff::is_prime(p)) continue;
            ++found;
            ce.p_lo = std::min(ce.p_lo, p);
            ce.p_hi = std::max(ce.p_hi, p);
            ff::PrimeContext ctx(p);
            auto t = dioph::construct_tuple(ctx, m);
            if (!t || (int)t->size() != m || !dioph::is_diophantine_tuple(ctx, *t)) {
                ce.passed = false;
                ce.failures.push_back({p, "valid tuple", t ? "invalid tuple" : "absent",
                                       "m=" + std::to_string(m)});
            }
        }
    }
    std::sort(ce.failures.begin(), ce.failures.end(),
              [](const Failure& a, const Failure& b) { return a.p < b.p; });
    return checks;
}

std::vector<CheckResult> suite_forms(const VerifyConfig& cfg) {
    std::vector<CheckResult> checks{
        {"cm-vs-eta", 3, cfg.forms_max},
        {"vanishing-classes", 3, cfg.forms_max},
        {"hecke-recursion", 3, cfg.hecke_max},
        {"multiplicativity", 2, 0},
        {"deligne-bounds", 3, cfg.forms_max},
        {"s3-trace", 3, cfg.forms_max},
        {"q-consistency", 3, cfg.forms_max},
    };
    i64 n_max = std::max<i64>({(i64)cfg.forms_max, (i64)(cfg.hecke_max * cfg.hecke_max), 1000});
    forms::FormTable table(n_max);
    auto ps = primes_in(3, cfg.forms_max);
    using forms::FormId;

    parallel_over_primes(ps, cfg.jobs, [&](u64 p) -> TaggedVec {
        TaggedVec out;
        for (FormId f : {FormId::F1, FormId::F2, FormId::F3, FormId::F5}) {
            i64 cm = forms::cm_coeff(f, p), eta = table.coeff(f, (i64)p);
            if (cm != eta)
                out.push_back({0, mismatch(p, eta, cm, std::string(forms::form_name(f)))});
        }
        i64 a = table.coeff(FormId::F1, (i64)p), b = table.coeff(FormId::F2, (i64)p);
        i64 c = table.coeff(FormId::F3, (i64)p), d = table.coeff(FormId::F4, (i64)p);
        i64 e = table.coeff(FormId::F5, (i64)p);
        if (p % 4 == 3) {
            if (a != 0) out.push_back({1, mismatch(p, 0, a, "f1, p=3 mod 4")});
            if (c != 0) out.push_back({1, mismatch(p, 0, c, "f3, p=3 mod 4")});
            if (e != 0) out.push_back({1, mismatch(p, 0, e, "f5, p=3 mod 4")});
        }
        if (p % 8 == 5 || p % 8 == 7)
            if (b != 0) out.push_back({1, mismatch(p, 0, b, "f2, p=5,7 mod 8")});
        if (p <= cfg.hecke_max && (i64)(p * p) <= table.n_max()) {
            i64 a2 = table.coeff(FormId::F1, (i64)(p * p));
            if (a2 != a * a - (i64)p)
                out.push_back({2, mismatch(p, a * a - (i64)p, a2, "f1 at p^2")});
            i64 d2 = table.coeff(FormId::F4, (i64)(p * p));
            i64 want = d * d - (i64)(p * p * p);
            if (d2 != want) out.push_back({2, mismatch(p, want, d2, "f4 at p^2")});
        }
        i64 pp = (i64)p;
        if (a * a > 4 * pp) out.push_back({4, {p, "|a| <= 2 sqrt p", std::to_string(a), "f1"}});
        if (b > 2 * pp || b < -2 * pp)
            out.push_back({4, {p, "|b| <= 2p", std::to_string(b), "f2"}});
        if (c > 2 * pp || c < -2 * pp)
            out.push_back({4, {p, "|c| <= 2p", std::to_string(c), "f3"}});
        if ((i128)d * d > 4 * ipow(p, 3))
            out.push_back({4, {p, "|d| <= 2 p^(3/2)", std::to_string(d), "f4"}});
        if ((i128)e > 2 * ipow(p, 2) || (i128)e < -2 * ipow(p, 2))
            out.push_back({4, {p, "|e| <= 2 p^2", std::to_string(e), "f5"}});
        i64 tr_eta = forms::hecke_trace_s3(table, p, forms::QSource::Eta);
        i64 tr_cm = forms::hecke_trace_s3(table, p, forms::QSource::CmEta);
        if (tr_eta != tr_cm) out.push_back({5, mismatch(p, tr_eta, tr_cm, "2b+c")});
        i64 q_eta = forms::q_of_p(table, p, forms::QSource::Eta);
        i64 q_cm = forms::q_of_p(table, p, forms::QSource::CmEta);
        if (q_eta != q_cm) out.push_back({6, mismatch(p, q_eta, q_cm, "q(p)")});
        return out;
    }, checks);

    // eigenform coefficients are multiplicative across coprime indices
    auto& mu = checks[3];
    mu.p_hi = (u64)std::min<i64>(n_max, 99 * 100);
    for (int fi = 0; fi < 5; ++fi) {
        auto f = (FormId)fi;
        for (i64 m = 2; m <= 100; ++m)
            for (i64 n = m + 1; n <= 100; ++n) {
                if (std::gcd(m, n) != 1 || m * n > n_max) continue;
                i64 lhs = table.coeff(f, m * n), rhs = table.coeff(f, m) * table.coeff(f, n);
                if (lhs != rhs) {
                    mu.passed = false;
                    mu.failures.push_back({(u64)(m * n), std::to_string(rhs), std::to_string(lhs),
                                           std::string(forms::form_name(f)) + " m=" +
                                               std::to_string(m) + " n=" + std::to_string(n)});
                }
            }
    }
    return checks;
}

std::vector<CheckResult> suite_fibers(const VerifyConfig& cfg) {
    std::vector<CheckResult> checks{
        {"fiber-route-vs-formula", 3, cfg.route_max},
        {"case-table-complete", 3, cfg.route_max},
        {"w-case-vs-brute", 3, cfg.wper_max},
        {"w1-vs-brute", 3, cfg.route_max},
        {"hasse-and-divisibility", 3, cfg.fibsum_max},
        {"pt-sum-linear", 3, cfg.fibsum_max},
        {"pt-sum-square", 3, cfg.fibsum_max},
        {"pt-sum-cube", 3, cfg.fibsum_max},
        {"w-aggregate-identity", 3, cfg.route_max},
        {"no-full-4-torsion", 3, cfg.fourtor_max},
        {"group-order-consistency", 3, cfg.wper_max},
    };
    forms::FormTable table(std::max<i64>((i64)cfg.route_max, 1000));
    u64 hi = std::max({cfg.route_max, cfg.wper_max, cfg.fibsum_max, cfg.fourtor_max});
    auto ps = primes_in(3, hi);

    parallel_over_primes(ps, cfg.jobs, [&](u64 p) -> TaggedVec {
        TaggedVec out;
        ff::PrimeContext ctx(p);
        bool want_sweep = p <= std::max(cfg.route_max, cfg.wper_max);
        std::optional<fibers::FiberSweep> sweep;
        std::vector<i64> pts;  // P(t) for t = 2..p-1
        if (want_sweep) {
            sweep.emplace(fibers::sweep_fibers(ctx));
            for (const auto& fc : sweep->fibers) pts.push_back(fc.points);
        } else if (p <= cfg.fibsum_max) {
            for (u64 t = 2; t < p; ++t) pts.push_back(fibers::point_count(fibers::Fiber(ctx, t)));
        }
        if (sweep && p <= cfg.route_max) {
            i64 form = dioph::n4_formula(p, forms::q_of_p(table, p));
            if (sweep->total != form) out.push_back({0, mismatch(p, form, sweep->total, "")});
            if (sweep->unclassified != 0)
                out.push_back({1, mismatch(p, 0, sweep->unclassified, "fibers outside the table")});
        }
        if (p <= cfg.route_max) {
            auto brute = fibers::w_bruteforce(ctx);
            if (p <= cfg.wper_max && sweep)
                for (const auto& fc : sweep->fibers)
                    if (*fc.w != brute.w[fc.t])
                        out.push_back({2, mismatch(p, brute.w[fc.t], *fc.w,
                                                   "t=" + std::to_string(fc.t) + " case=" +
                                                       std::string(w_case_label(fc.wcase)))});
            i64 w1f = fibers::w1(p);
            if (w1f != brute.w1) out.push_back({3, mismatch(p, brute.w1, w1f, "")});
        }
        if (p <= cfg.fibsum_max) {
            for (size_t i = 0; i < pts.size(); ++i) {
                i64 P = pts[i];
                i64 tr = (i64)p + 1 - P;
                if (P % 4 != 0)
                    out.push_back({4, {p, "P = 0 mod 4", std::to_string(P),
                                       "t=" + std::to_string(i + 2)}});
                if ((i128)tr * tr > 4 * (i128)(i64)p)
                    out.push_back({4, {p, "|p+1-P| <= 2 sqrt p", std::to_string(P),
                                       "t=" + std::to_string(i + 2)}});
            }
            i128 s1 = 0, s2 = 0, s3 = 0;
            for (i64 P : pts) {
                s1 += P;
                s2 += (i128)P * P;
                s3 += (i128)P * P * P;
            }
            i128 q = (i64)p;
            i128 e1, e2, e3;
            i64 e_coeff = forms::cm_coeff(forms::FormId::F5, p);
            if (p % 4 == 1) {
                e1 = q * q - q;
                e2 = q * q * q + q * q - q - 1;
                e3 = q * q * q * q + 4 * q * q * q - 4 * q - 3 + e_coeff;
            } else {
                e1 = q * q - q - 2;
                e2 = q * q * q + q * q - 5 * q - 5;
                e3 = q * q * q * q + 4 * q * q * q - 6 * q * q - 20 * q - 11 + e_coeff;
            }
            if (s1 != e1) out.push_back({5, {p, str128(e1), str128(s1), ""}});
            if (s2 != e2) out.push_back({6, {p, str128(e2), str128(s2), ""}});
            if (s3 != e3) out.push_back({7, {p, str128(e3), str128(s3), ""}});
        }
        if (sweep && p <= cfg.route_max) {
            // per-case cubics summed against the direct inclusion-exclusion form,
            // everything scaled by 64 to stay in integers
            i128 lhs = 0, rhs = 0;
            for (const auto& fc : sweep->fibers) {
                lhs += (i128)*fc.w;
                i128 P = fc.points;
                rhs += P * P * P - 36 * P * P + 368 * P - 960;
                if (fc.t1) rhs += 12 * P * P - 240 * P + 960;
                if (fc.t3) rhs += 144 * P - 1344;
                if (fc.t4) rhs -= 768;
                if (p % 4 == 1) {
                    if (fc.t2) rhs -= 48 * P - 1344;
                    if (fc.t5) rhs -= 768;
                } else {
                    if (fc.t2) rhs -= 48 * P + 192;
                    if (fc.t0) rhs += 192 * P - 1536;
                    if (fc.t5) rhs += 768;
                }
            }
            lhs *= 1536;  // 64 * 24 * sum W
            if (lhs != rhs) out.push_back({8, {p, str128(rhs), str128(lhs), "scaled by 64"}});
        }
        if (p % 4 == 3 && p <= cfg.fourtor_max) {
            for (u64 t = 2; t < p; ++t) {
                fibers::Fiber f(ctx, t);
                int n4 = 0;
                for (const auto& q : fibers::group_points(f))
                    if (fibers::ec_mul(f, 4, q).inf) ++n4;
                if (n4 >= 16)
                    out.push_back({9, {p, "< 16", std::to_string(n4), "t=" + std::to_string(t)}});
            }
        }
        if (p <= cfg.wper_max) {
            for (u64 t = 2; t < p; ++t) {
                fibers::Fiber f(ctx, t);
                i64 sz = (i64)fibers::group_points(f).size();
                i64 P = sweep ? sweep->fibers[t - 2].points : fibers::point_count(f);
                if (sz != P)
                    out.push_back({10, mismatch(p, P, sz, "t=" + std::to_string(t))});
            }
        }
        return out;
    }, checks);
    return checks;
}

std::vector<CheckResult> suite_tsets(const VerifyConfig& cfg) {
    std::vector<CheckResult> checks{
        {"t1-count", 3, cfg.tsets_max},
        {"t1-weighted-sum", 3, cfg.tsets_max},
        {"t1-weighted-sum-sq", 3, cfg.tsets_max},
        {"t2-count", 3, cfg.tsets_max},
        {"t2-weighted-sum", 3, cfg.tsets_max},
        {"t3-count", 3, cfg.tsets_max},
        {"t3-weighted-sum", 3, cfg.tsets_max},
        {"t4-count", 3, cfg.tsets_max},
        {"t5-count", 3, cfg.tsets_max},
        {"t2-equals-t5", 3, cfg.tsets_max},
        {"t0-half-t1", 3, cfg.tsets_max},
        {"t1-involution", 3, cfg.tsets_max},
        {"parametric-vs-intrinsic", 3, cfg.tsets_max},
        {"descent-square-constraint", 3, cfg.tsets_max},
    };
    forms::FormTable table(std::max<i64>((i64)cfg.tsets_max, 1000));
    auto ps = primes_in(3, cfg.tsets_max);
    using forms::FormId;

    parallel_over_primes(ps, cfg.jobs, [&](u64 p) -> TaggedVec {
        TaggedVec out;
        ff::PrimeContext ctx(p);
        std::vector<fibers::FiberClassification> fc;
        for (u64 t = 2; t < p; ++t) fc.push_back(fibers::classify_fiber(fibers::Fiber(ctx, t)));
        auto count_flag = [&](auto get) {
            i64 n = 0;
            for (const auto& c : fc)
                if (get(c)) ++n;
            return n;
        };
        auto sum_p = [&](auto get) {
            i128 s = 0;
            for (const auto& c : fc)
                if (get(c)) s += c.points;
            return s;
        };
        i64 n1 = count_flag([](auto& c) { return c.t1; });
        i64 n2 = count_flag([](auto& c) { return c.t2; });
        i64 n3 = count_flag([](auto& c) { return c.t3; });
        i64 n4 = count_flag([](auto& c) { return c.t4; });
        i64 n5 = count_flag([](auto& c) { return c.t5; });
        i64 n0 = count_flag([](auto& c) { return c.t0; });
        i128 s1 = sum_p([](auto& c) { return c.t1; });
        i128 s2 = sum_p([](auto& c) { return c.t2; });
        i128 s3 = sum_p([](auto& c) { return c.t3; });
        i128 s0 = sum_p([](auto& c) { return c.t0; });
        i128 s1sq = 0;
        for (const auto& c : fc)
            if (c.t1) s1sq += (i128)c.points * c.points;

        i64 a = forms::cm_coeff(FormId::F1, p);
        i64 b = forms::cm_coeff(FormId::F2, p);
        i64 cc = forms::cm_coeff(FormId::F3, p);
        i64 d = table.coeff(FormId::F4, (i64)p);
        i128 q = (i64)p;
        auto cusps = fibers::cusp_counts(p);
        int pm8 = (int)(p % 8);

        // cardinalities (scaled to clear denominators)
        if (2 * n1 != (i64)p - 3) out.push_back({0, mismatch(p, (i64)p - 3, 2 * n1, "2 #T1")});
        if (8 * n2 != (i64)p + 1 - cusps.c28)
            out.push_back({3, mismatch(p, (i64)p + 1 - cusps.c28, 8 * n2, "8 #T2")});
        {
            i64 want = pm8 == 1 ? 3 * (i64)p - 11
                       : pm8 == 3 ? 3 * (i64)p - 9
                       : pm8 == 5 ? 3 * (i64)p - 7
                                  : 3 * (i64)p - 13;
            if (8 * n3 != want) out.push_back({5, mismatch(p, want, 8 * n3, "8 #T3")});
        }
        if (pm8 == 1 || pm8 == 5) {
            i64 want = pm8 == 1 ? 3 * (i64)p + a - 21 : 3 * (i64)p + a - 13;
            if (16 * n4 != want) out.push_back({7, mismatch(p, want, 16 * n4, "16 #T4")});
            i64 want5 = (i64)p + 1 - a - *cusps.c48;
            if (16 * n5 != want5) out.push_back({8, mismatch(p, want5, 16 * n5, "16 #T5")});
        } else {
            i64 want = pm8 == 3 ? (i64)p - 3 : (i64)p - 7;
            if (4 * n4 != want) out.push_back({7, mismatch(p, want, 4 * n4, "4 #T4")});
            if (8 * n5 != want) out.push_back({8, mismatch(p, want, 8 * n5, "8 #T5")});
        }

        // weighted sums
        {
            i128 want = p % 4 == 1 ? (q - 1) * (q - 1) : q * q - 2 * q - 3;
            if (2 * s1 != want)
                out.push_back({1, {p, str128(want), str128(2 * s1), "2 sum_T1 P"}});
        }
        {
            i128 want = p % 4 == 1 ? q * q * q + 1 - d : q * q * q - 8 * q - 7 - d;
            if (2 * s1sq != want)
                out.push_back({2, {p, str128(want), str128(2 * s1sq), "2 sum_T1 P^2"}});
        }
        {
            i128 want = pm8 == 1 ? q * q - 8 * q + 1 + 2 * b + cc
                        : pm8 == 3 ? q * q - 2 * q + 1 + 2 * b + cc
                        : pm8 == 5 ? q * q - 4 * q + 1 + 2 * b + cc
                                   : q * q - 6 * q - 7 + 2 * b + cc;
            if (8 * s2 != want)
                out.push_back({4, {p, str128(want), str128(8 * s2), "8 sum_T2 P"}});
        }
        {
            i128 want = pm8 == 1 ? 3 * q * q - 8 * q + 2 * b - cc + 3
                        : pm8 == 3 ? 3 * q * q - 6 * q + 2 * b - cc - 5
                        : pm8 == 5 ? 3 * q * q - 4 * q + 2 * b - cc + 3
                                   : 3 * q * q - 10 * q + 2 * b - cc - 13;
            if (8 * s3 != want)
                out.push_back({6, {p, str128(want), str128(8 * s3), "8 sum_T3 P"}});
        }

        if (p % 4 == 3) {
            std::vector<u64> t2s, t5s;
            for (const auto& c : fc) {
                if (c.t2) t2s.push_back(c.t);
                if (c.t5) t5s.push_back(c.t);
            }
            if (t2s != t5s)
                out.push_back({9, {p, "T2 = T5", "differ", ""}});
            if (2 * n0 != n1)
                out.push_back({10, mismatch(p, n1, 2 * n0, "2 #T0 vs #T1")});
            if (2 * s0 != s1)
                out.push_back({10, {p, str128(s1), str128(2 * s0), "2 sum_T0 P vs sum_T1 P"}});
        }

        // involution t -> t/(t-1) on T1 preserves the point count
        for (const auto& c : fc) {
            if (!c.t1) continue;
            u64 t = c.t;
            u64 tp = ctx.mul(t, ctx.inv(ctx.sub(t, 1)));
            if (tp < 2 || !fc[tp - 2].t1) {
                out.push_back({11, {p, "image in T1", std::to_string(tp), "t=" + std::to_string(t)}});
                continue;
            }
            u64 back = ctx.mul(tp, ctx.inv(ctx.sub(tp, 1)));
            if (back != t)
                out.push_back({11, {p, std::to_string(t), std::to_string(back), "double image"}});
            if (fc[tp - 2].points != c.points)
                out.push_back({11, mismatch(p, c.points, fc[tp - 2].points,
                                            "P at t=" + std::to_string(t) + " vs t'=" +
                                                std::to_string(tp))});
        }

        {
            auto par = fibers::t_sets_parametric(ctx);
            std::vector<u64> i1, i2, i3;
            for (const auto& c : fc) {
                if (c.t1) i1.push_back(c.t);
                if (c.t2) i2.push_back(c.t);
                if (c.t3) i3.push_back(c.t);
            }
            if (par.t1 != i1) out.push_back({12, {p, "equal sets", "differ", "T1"}});
            if (par.t2 != i2) out.push_back({12, {p, "equal sets", "differ", "T2"}});
            if (par.t3 != i3) out.push_back({12, {p, "equal sets", "differ", "T3"}});
        }

        for (const auto& c : fc)
            if (c.halvable && !c.xr_square)
                out.push_back({13, {p, "x(R) square when R halvable", "nonsquare",
                                    "t=" + std::to_string(c.t)}});
        return out;
    }, checks);
    return checks;
}

VerificationReport run_suite(std::string_view which, const VerifyConfig& cfg) {
    VerificationReport rep;
    rep.suite = std::string(which);
    rep.pmax = cfg.configured_pmax;
    rep.jobs = cfg.jobs;
    auto timed = [&](const char* name, auto fn) {
        auto t0 = std::chrono::steady_clock::now();
        auto res = fn(cfg);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        rep.wall_ms.push_back({name, (i64)ms});
        rep.results.insert(rep.results.end(), res.begin(), res.end());
    };
    if (which == "tuples") timed("tuples", suite_tuples);
    else if (which == "forms") timed("forms", suite_forms);
    else if (which == "fibers") timed("fibers", suite_fibers);
    else if (which == "tsets") timed("tsets", suite_tsets);
    else if (which == "all") {
        timed("tuples", suite_tuples);
        timed("forms", suite_forms);
        timed("fibers", suite_fibers);
        timed("tsets", suite_tsets);
    } else {
        throw ff::DomainError("unknown suite; use tuples|forms|fibers|tsets|all");
    }
    return rep;
}

std::string report_to_json(const VerificationReport& rep, bool pretty) {
    nlohmann::ordered_json j;
    j["version"] = rep.version;
    j["config"] = {{"pmax", rep.pmax}, {"suite", rep.suite}, {"jobs", rep.jobs}};
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& r : rep.results) {
        nlohmann::ordered_json fails = nlohmann::ordered_json::array();
        for (const auto& f : r.failures)
            fails.push_back({{"p", f.p},
                             {"expected", f.expected},
                             {"actual", f.actual},
                             {"context", f.context}});
        j["results"].push_back({{"name", r.name},
                                {"p_range", {r.p_lo, r.p_hi}},
                                {"status", r.passed ? "pass" : "fail"},
                                {"failures", fails}});
    }
    nlohmann::ordered_json wall;
    for (const auto& [k, v] : rep.wall_ms) wall[k] = v;
    j["wall_ms"] = wall;
    return pretty ? j.dump(2) : j.dump();
}

}  // namespace verify
}  // namespace fpd
