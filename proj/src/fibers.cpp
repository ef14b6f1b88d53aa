#include "fpdioph/fibers.hpp"

#include "fpdioph/graph.hpp"

#include <algorithm>

namespace fpd {
namespace fibers {

Fiber::Fiber(const ff::PrimeContext& ctx, u64 t) : ctx_(&ctx), t_(t % ctx.p()) {
    if (t_ == 0 || t_ == 1) throw ff::DomainError("Fiber: t must avoid 0 and 1");
    // V^2 = U^3 - 2(t-2) U^2 + t^2 U
    a2_ = ctx.reduce(-2 * ((i64)t_ - 2));
    a4_ = ctx.mul(t_, t_);
}

u64 Fiber::rhs(u64 u) const {
    const auto& c = *ctx_;
    return c.mul(u, c.add(c.mul(u, c.add(u, a2_)), a4_));
}

bool Fiber::contains(const CurvePoint& q) const {
    if (q.inf) return true;
    return ctx_->mul(q.v, q.v) == rhs(q.u);
}

i64 point_count(const Fiber& f) {
    const auto& c = f.ctx();
    i64 s = 0;
    for (u64 u = 0; u < c.p(); ++u) s += c.legendre(f.rhs(u));
    return (i64)c.p() + 1 + s;
}

std::vector<CurvePoint> group_points(const Fiber& f) {
    const auto& c = f.ctx();
    u64 p = c.p();
    // min positive square root per residue, one pass of squares
    const u64 none = ~0ull;
    std::vector<u64> root(p, none);
    for (u64 v = 0; v <= (p - 1) / 2; ++v) root[ff::mulmod(v, v, p)] = v;
    std::vector<CurvePoint> out;
    out.push_back(CurvePoint::infinity());
    for (u64 u = 0; u < p; ++u) {
        u64 s = f.rhs(u);
        u64 r = root[s];
        if (r == none) continue;
        if (r == 0) {
            out.push_back(CurvePoint::affine(u, 0));
        } else {
            out.push_back(CurvePoint::affine(u, r));
            out.push_back(CurvePoint::affine(u, p - r));
        }
    }
    return out;
}

CurvePoint ec_neg(const Fiber& f, const CurvePoint& q) {
    if (q.inf) return q;
    return CurvePoint::affine(q.u, f.ctx().neg(q.v));
}

CurvePoint ec_add(const Fiber& f, const CurvePoint& a, const CurvePoint& b) {
    const auto& c = f.ctx();
    if (a.inf) return b;
    if (b.inf) return a;
    u64 lam;
    if (a.u == b.u) {
        if (a.v != b.v || a.v == 0) return CurvePoint::infinity();
        // tangent: (3u^2 + 2 a2 u + a4) / 2v
        u64 num = c.add(c.mul(a.u, c.add(c.mul(3, a.u), c.mul(2, f.a2()))), f.a4());
        lam = c.mul(num, c.inv(c.add(a.v, a.v)));
    } else {
        lam = c.mul(c.sub(b.v, a.v), c.inv(c.sub(b.u, a.u)));
    }
    u64 u3 = c.sub(c.sub(c.sub(c.mul(lam, lam), f.a2()), a.u), b.u);
    u64 v3 = c.sub(c.mul(lam, c.sub(a.u, u3)), a.v);
    return CurvePoint::affine(u3, v3);
}

CurvePoint ec_mul(const Fiber& f, i64 k, const CurvePoint& q) {
    CurvePoint base = q;
    if (k < 0) {
        base = ec_neg(f, base);
        k = -k;
    }
    CurvePoint acc = CurvePoint::infinity();
    while (k) {
        if (k & 1) acc = ec_add(f, acc, base);
        base = ec_add(f, base, base);
        k >>= 1;
    }
    return acc;
}

CurvePoint dt_to_et(const Fiber& f, u64 x, u64 y) {
    const auto& c = f.ctx();
    u64 x2m1 = c.sub(c.mul(x, x), 1);
    u64 y2m1 = c.sub(c.mul(y, y), 1);
    if (c.mul(x2m1, y2m1) != f.t()) throw ff::DomainError("dt_to_et: point not on the surface");
    // U = 2(x^2-1)y + 2x^2 - (2-t), V = 2Ux
    u64 u = c.add(c.mul(2, c.mul(x2m1, y)), c.sub(c.mul(2, c.mul(x, x)), c.reduce(2 - (i64)f.t())));
    u64 v = c.mul(c.mul(2, u), x);
    return CurvePoint::affine(u, v);
}

std::pair<u64, u64> et_to_dt(const Fiber& f, const CurvePoint& q) {
    const auto& c = f.ctx();
    CurvePoint r = f.r();
    if (q.inf || q == r || q == CurvePoint::affine(0, 0) || q == ec_neg(f, r))
        throw ff::DomainError("et_to_dt: point is one of the four excluded ones");
    u64 x = c.mul(q.v, c.inv(c.add(q.u, q.u)));
    u64 x2m1 = c.sub(c.mul(x, x), 1);
    // U = 2(x^2-1)y + 2x^2 - (2-t)  solved for y
    u64 num = c.sub(c.add(q.u, c.reduce(2 - (i64)f.t())), c.mul(2, c.mul(x, x)));
    u64 y = c.mul(num, c.inv(c.add(x2m1, x2m1)));
    return {x, y};
}

bool full_two_torsion(const Fiber& f) {
    return f.ctx().legendre(f.ctx().sub(1, f.t())) == 1;
}

std::vector<CurvePoint> halvings_of_r(const Fiber& f) {
    CurvePoint r = f.r();
    std::vector<CurvePoint> out;
    for (const auto& q : group_points(f)) {
        if (q.inf) continue;
        if (ec_add(f, q, q) == r) out.push_back(q);
    }
    return out;
}

std::string_view w_case_label(WCase c) {
    switch (c) {
        case WCase::NoHalfNsqZ2: return "nohalf.nsq.z2";
        case WCase::NoHalfNsqFull: return "nohalf.nsq.full";
        case WCase::NoHalfSqFull1: return "nohalf.sq.full.p1";
        case WCase::NoHalfSqFull3: return "nohalf.sq.full.p3";
        case WCase::HalfNsqZ2: return "half.nsq.z2";
        case WCase::HalfNsqFull1: return "half.nsq.full.p1";
        case WCase::HalfNsqFull3: return "half.nsq.full.p3";
        case WCase::HalfSqZ2: return "half.sq.z2";
        case WCase::HalfSqFull1: return "half.sq.full.p1";
        case WCase::HalfSqFull3: return "half.sq.full.p3";
        default: return "unclassified";
    }
}

WCase w_case_from_flags(bool halvable, bool halving_square, bool full2, bool xr_square,
                        int p_mod_4) {
    if (!halvable) {
        if (!xr_square) return full2 ? WCase::NoHalfNsqFull : WCase::NoHalfNsqZ2;
        if (!full2) return WCase::Unclassified;  // ruled out by descent, kept explicit
        return p_mod_4 == 1 ? WCase::NoHalfSqFull1 : WCase::NoHalfSqFull3;
    }
    if (!halving_square) {
        if (!full2) return WCase::HalfNsqZ2;
        return p_mod_4 == 1 ? WCase::HalfNsqFull1 : WCase::HalfNsqFull3;
    }
    if (!full2) return WCase::HalfSqZ2;
    return p_mod_4 == 1 ? WCase::HalfSqFull1 : WCase::HalfSqFull3;
}

i64 w_case_formula(WCase c, i64 P) {
    ff::i128 q = P;
    ff::i128 num;
    switch (c) {
        case WCase::NoHalfNsqZ2: num = (q - 20) * (q - 12) * (q - 4); break;
        case WCase::NoHalfNsqFull:
        case WCase::NoHalfSqFull1: num = q * (q - 8) * (q - 16); break;
        case WCase::NoHalfSqFull3: num = (q - 8) * (q * q - 16 * q + 192); break;
        case WCase::HalfNsqZ2: num = (q - 8) * (q * q - 28 * q + 288); break;
        case WCase::HalfNsqFull1: num = q * (q * q - 24 * q + 224); break;
        case WCase::HalfNsqFull3:
        case WCase::HalfSqFull3: num = q * q * q - 24 * q * q + 416 * q - 3072; break;
        case WCase::HalfSqZ2: num = (q - 16) * (q * q - 20 * q + 192); break;
        case WCase::HalfSqFull1: num = (q - 16) * (q * q - 8 * q + 96); break;
        default: throw ff::DomainError("w_case_formula: no formula for this pattern");
    }
    if (num % 64 != 0) throw NonIntegralW("w case cubic not divisible by 64");
    num /= 64;  // this is 24 W
    if (num % 24 != 0) throw NonIntegralW("w case value not divisible by 24");
    return (i64)(num / 24);
}

FiberClassification classify_fiber(const Fiber& f) {
    const auto& c = f.ctx();
    FiberClassification fc;
    fc.t = f.t();
    fc.points = point_count(f);
    fc.full2 = full_two_torsion(f);
    fc.xr_square = c.chi(f.t()) == 1;
    auto halves = halvings_of_r(f);
    fc.halvable = !halves.empty();
    fc.halving_square = false;
    for (const auto& q : halves)
        if (c.chi(q.u) == 1) fc.halving_square = true;
    fc.t1 = fc.full2;
    fc.t3 = fc.halvable;
    fc.t2 = fc.t1 && fc.t3;
    fc.t4 = fc.halving_square;
    fc.t5 = fc.t4 && fc.t1;
    fc.t0 = fc.t1 && fc.xr_square;
    fc.wcase = w_case_from_flags(fc.halvable, fc.halving_square, fc.full2, fc.xr_square,
                                 (int)(c.p() % 4));
    if (fc.wcase != WCase::Unclassified) fc.w = w_case_formula(fc.wcase, fc.points);
    return fc;
}

i64 w1(u64 p) {
    if (p < 3 || !ff::is_prime(p)) throw ff::DomainError("w1: p must be an odd prime");
    ff::i128 q = (i64)p;
    ff::i128 num;
    switch (p % 8) {
        case 1: num = (q - 9) * (q * q - 18 * q + 113); break;
        case 3: num = (q - 3) * (q - 11) * (q - 19); break;
        case 5: num = (q - 5) * (q - 9) * (q - 13); break;
        default: num = (q - 7) * (q - 11) * (q - 15); break;
    }
    if (num % 32 != 0) throw NonIntegralW("w1 cubic not divisible by 32");
    num /= 32;  // 24 W(1)
    if (num % 24 != 0) throw NonIntegralW("w1 value not divisible by 24");
    return (i64)(num / 24);
}

WTable w_bruteforce(const ff::PrimeContext& ctx) {
    WTable tab;
    tab.p = ctx.p();
    tab.w.assign(ctx.p(), 0);
    dioph::DiophGraph g(ctx);
    dioph::for_each_tuple(g, 4, [&](const std::vector<u64>& t) {
        u64 prod = ctx.mul(ctx.mul(t[0], t[1]), ctx.mul(t[2], t[3]));
        ++tab.w[prod];
        ++tab.total;
        return true;
    });
    tab.w1 = tab.w[1];
    return tab;
}

bool admissible_triple(const Fiber& f, const CurvePoint& q1, const CurvePoint& q2,
                       const CurvePoint& q3) {
    CurvePoint r = f.r();
    CurvePoint two_r = CurvePoint::affine(0, 0);
    CurvePoint three_r = ec_neg(f, r);
    const CurvePoint qs[3] = {q1, q2, q3};
    for (const auto& q : qs) {
        if (q.inf || q == r || q == two_r || q == three_r)
            throw ff::DomainError("admissible_triple: point in the excluded four");
        if (!f.contains(q)) throw ff::DomainError("admissible_triple: point off the fiber");
    }
    // no two related by Qj = +-Qi + kR
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            CurvePoint s = qs[i];
            CurvePoint sneg = ec_neg(f, qs[i]);
            for (int k = 0; k < 4; ++k) {
                if (qs[j] == s || qs[j] == sneg) return false;
                s = ec_add(f, s, r);
                sneg = ec_add(f, sneg, r);
            }
        }
    CurvePoint s = ec_add(f, ec_add(f, q1, q2), ec_add(f, q3, r));
    if (s.inf) return true;
    return f.ctx().chi(s.u) == 1;  // x(2R) = 0 passes automatically
}

TSets t_sets(const ff::PrimeContext& ctx) {
    TSets out;
    for (u64 t = 2; t < ctx.p(); ++t) {
        auto fc = classify_fiber(Fiber(ctx, t));
        if (fc.t0) out.t0.push_back(t);
        if (fc.t1) out.t1.push_back(t);
        if (fc.t2) out.t2.push_back(t);
        if (fc.t3) out.t3.push_back(t);
        if (fc.t4) out.t4.push_back(t);
        if (fc.t5) out.t5.push_back(t);
    }
    return out;
}

TSetsParametric t_sets_parametric(const ff::PrimeContext& ctx) {
    u64 p = ctx.p();
    std::vector<char> in1(p, 0), in2(p, 0), in3(p, 0);
    for (u64 u = 0; u < p; ++u) {
        u64 t = ctx.sub(1, ctx.mul(u, u));
        if (t > 1) in1[t] = 1;
    }
    for (u64 w = 0; w < p; ++w) {
        u64 s = ctx.sub(ctx.mul(w, w), 1);
        u64 t = ctx.mul(s, s);
        if (t > 1) in3[t] = 1;
        // 16 w^2 (w-1)^2 (w+1)^2 / (w^2+1)^4
        u64 den = ctx.add(ctx.mul(w, w), 1);
        if (den == 0) continue;
        u64 num = ctx.mul(16 % p, ctx.mul(ctx.mul(w, w), ctx.mul(s, s)));
        u64 d2 = ctx.mul(den, den);
        u64 t2 = ctx.mul(num, ctx.inv(ctx.mul(d2, d2)));
        if (t2 > 1) in2[t2] = 1;
    }
    TSetsParametric out;
    for (u64 t = 2; t < p; ++t) {
        if (in1[t]) out.t1.push_back(t);
        if (in2[t]) out.t2.push_back(t);
        if (in3[t]) out.t3.push_back(t);
    }
    return out;
}

CuspCounts cusp_counts(u64 p) {
    if (p < 3 || !ff::is_prime(p)) throw ff::DomainError("cusp_counts: p must be an odd prime");
    CuspCounts c;
    c.c24 = 4;
    switch (p % 8) {
        case 1: c.c28 = 10; break;
        case 3: c.c28 = 4; break;
        case 5: c.c28 = 6; break;
        default: c.c28 = 8; break;
    }
    c.c8 = (p % 8 == 1 || p % 8 == 7) ? 6 : 4;
    if (p % 4 == 1) c.c48 = (p % 8 == 1) ? 16 : 8;
    return c;
}

FiberSweep sweep_fibers(const ff::PrimeContext& ctx) {
    FiberSweep sw;
    sw.p = ctx.p();
    sw.fibers.reserve(ctx.p() >= 2 ? ctx.p() - 2 : 0);
    bool need_brute = false;
    for (u64 t = 2; t < ctx.p(); ++t) {
        sw.fibers.push_back(classify_fiber(Fiber(ctx, t)));
        if (!sw.fibers.back().w) need_brute = true;
    }
    if (need_brute) {
        auto brute = w_bruteforce(ctx);
        for (auto& fc : sw.fibers)
            if (!fc.w) {
                fc.w = brute.w[fc.t];
                ++sw.unclassified;
            }
    }
    sw.w1 = w1(ctx.p());
    sw.total = sw.w1;
    for (const auto& fc : sw.fibers) sw.total += *fc.w;
    return sw;
}

i64 n4_via_fibers(const ff::PrimeContext& ctx) { return sweep_fibers(ctx).total; }

}  // namespace fibers
}  // namespace fpd
