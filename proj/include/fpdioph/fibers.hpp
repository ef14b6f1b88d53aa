// Fibers of the elliptic surface attached to quadruple counting:
//   E_t : V^2 = U^3 - 2(t-2) U^2 + t^2 U,  t in F_p \ {0,1},
// with the marked 4-torsion point R = (t, 2t), 2R = (0,0). Affine points
// of (x^2-1)(y^2-1) = t correspond to E_t minus {O, R, 2R, 3R}. The
// number W(t) of quadruples with product t is a cubic in the group order
// P(t) = #E_t(F_p), with the cubic picked by a torsion/divisibility case
// split. Summing W over t and adding the singular t=1 contribution gives
// the quadruple count a second way.
#pragma once

#include "fpdioph/ff.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace fpd {
namespace fibers {

using ff::i64;
using ff::u64;

struct NonIntegralW : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CurvePoint {
    bool inf = false;
    u64 u = 0, v = 0;
    static CurvePoint infinity() { return {true, 0, 0}; }
    static CurvePoint affine(u64 u, u64 v) { return {false, u, v}; }
    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

class Fiber {
  public:
    Fiber(const ff::PrimeContext& ctx, u64 t);  // DomainError for t = 0, 1 mod p

    const ff::PrimeContext& ctx() const { return *ctx_; }
    u64 p() const { return ctx_->p(); }
    u64 t() const { return t_; }
    u64 a2() const { return a2_; }  // V^2 = U^3 + a2 U^2 + a4 U
    u64 a4() const { return a4_; }
    CurvePoint r() const { return CurvePoint::affine(t_, ctx_->add(t_, t_)); }
    u64 rhs(u64 u) const;  // U^3 + a2 U^2 + a4 U
    bool contains(const CurvePoint& q) const;

  private:
    const ff::PrimeContext* ctx_;
    u64 t_, a2_, a4_;
};

// #E_t(F_p) = p + 1 + sum_U legendre(rhs(U)); always divisible by 4
i64 point_count(const Fiber& f);
// infinity first, then ascending (U, V)
std::vector<CurvePoint> group_points(const Fiber& f);

CurvePoint ec_neg(const Fiber& f, const CurvePoint& q);
CurvePoint ec_add(const Fiber& f, const CurvePoint& a, const CurvePoint& b);
CurvePoint ec_mul(const Fiber& f, i64 k, const CurvePoint& q);

// correspondence with the affine surface (x^2-1)(y^2-1) = t
CurvePoint dt_to_et(const Fiber& f, u64 x, u64 y);           // DomainError off the surface
std::pair<u64, u64> et_to_dt(const Fiber& f, const CurvePoint& q);  // DomainError on {O,R,2R,3R}

bool full_two_torsion(const Fiber& f);          // 1 - t a nonzero square
std::vector<CurvePoint> halvings_of_r(const Fiber& f);  // all Q with 2Q = R; 0, 2 or 4 of them

// case labels: "half"/"nohalf" = R is/is not twice a rational point,
// "sq"/"nsq" = square class of x at the halving (or of x(R) when not
// halvable), "z2"/"full" = rational 2-torsion, trailing p mod 4
enum class WCase {
    NoHalfNsqZ2,
    NoHalfNsqFull,
    NoHalfSqFull1,
    NoHalfSqFull3,
    HalfNsqZ2,
    HalfNsqFull1,
    HalfNsqFull3,
    HalfSqZ2,
    HalfSqFull1,
    HalfSqFull3,
    Unclassified,
};
std::string_view w_case_label(WCase c);
WCase w_case_from_flags(bool halvable, bool halving_square, bool full2, bool xr_square,
                        int p_mod_4);
// evaluate the case cubic at P; exact or NonIntegralW
i64 w_case_formula(WCase c, i64 P);

struct FiberClassification {
    u64 t = 0;
    i64 points = 0;  // P(t)
    bool full2 = false, xr_square = false, halvable = false, halving_square = false;
    bool t0 = false, t1 = false, t2 = false, t3 = false, t4 = false, t5 = false;
    WCase wcase = WCase::Unclassified;
    std::optional<i64> w;  // empty only for an unclassified pattern
};
FiberClassification classify_fiber(const Fiber& f);

// quadruples with product 1 (the singular fiber), closed form
i64 w1(u64 p);

// brute force: bucket every quadruple by its product
struct WTable {
    u64 p = 0;
    std::vector<i64> w;  // w[t] for 0 <= t < p
    i64 w1 = 0;
    i64 total = 0;
};
WTable w_bruteforce(const ff::PrimeContext& ctx);

// triple admissibility on a fiber: pairwise distinct mod the 8-element
// set {+-Q + kR} and Q1+Q2+Q3+R either O or with square x
bool admissible_triple(const Fiber& f, const CurvePoint& q1, const CurvePoint& q2,
                       const CurvePoint& q3);

// T1: full 2-torsion;  T3: R halvable;  T2 = T1 & T3;
// T4: halvable with square x at some halving;  T5 = T4 & T1;
// T0: T1 with t itself a square
struct TSets {
    std::vector<u64> t0, t1, t2, t3, t4, t5;
};
TSets t_sets(const ff::PrimeContext& ctx);

// same sets by their parametrizations: T1 = {1-u^2}, T3 = {(w^2-1)^2},
// T2 = {16 w^2 (w-1)^2 (w+1)^2 / (w^2+1)^4}, always minus {0, 1}
struct TSetsParametric {
    std::vector<u64> t1, t2, t3;
};
TSetsParametric t_sets_parametric(const ff::PrimeContext& ctx);

// rational cusp counts of the modular curves behind the T-set cardinalities
struct CuspCounts {
    int c24 = 0;              // X(2,4)
    int c28 = 0;              // X(2,8)
    int c8 = 0;               // X0(8) with the marked structure
    std::optional<int> c48;   // X(4,8), only defined for p = 1 mod 4
};
CuspCounts cusp_counts(u64 p);

struct FiberSweep {
    u64 p = 0;
    std::vector<FiberClassification> fibers;  // t = 2 .. p-1 in order
    i64 w1 = 0;                               // singular fiber, closed form
    i64 total = 0;                            // sum of W plus w1
    int unclassified = 0;                     // patterns outside the case table
};
FiberSweep sweep_fibers(const ff::PrimeContext& ctx);
i64 n4_via_fibers(const ff::PrimeContext& ctx);

}  // namespace fibers
}  // namespace fpd
