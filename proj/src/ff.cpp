#include "fpdioph/ff.hpp"

#include <algorithm>
#include <cmath>

namespace fpd {
namespace ff {

u64 mulmod(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) {
    a %= p;
    if (a == 0) throw DomainError("invmod: zero");
    return powmod(a, p - 2, p);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // this witness set is deterministic for all n < 3.3e24
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeContext::PrimeContext(u64 p) : p_(p) {
    if (p < 3 || !is_prime(p)) throw DomainError("PrimeContext: p must be an odd prime");
    qr_.assign((p + 63) / 64, 0);
    for (u64 x = 1; x <= (p - 1) / 2; ++x) {
        u64 s = mulmod(x, x, p);
        qr_[s >> 6] |= 1ull << (s & 63);
    }
}

std::optional<u64> sqrt_mod_prime(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
    u64 r;
    if (p % 4 == 3) {
        r = powmod(a, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks
        u64 q = p - 1;
        int s = 0;
        while ((q & 1) == 0) q >>= 1, ++s;
        u64 z = 2;
        while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
        u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p);
        r = powmod(a, (q + 1) / 2, p);
        while (t != 1) {
            u64 t2 = t;
            u64 i = 0;
            while (t2 != 1) {
                t2 = mulmod(t2, t2, p);
                ++i;
            }
            u64 b = powmod(c, 1ull << (m - i - 1), p);
            m = i;
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            r = mulmod(r, b, p);
        }
    }
    return std::min(r, p - r);
}

std::optional<u64> sqrt_mod(u64 a, const PrimeContext& ctx) {
    if (!ctx.is_square(a)) return std::nullopt;
    return sqrt_mod_prime(a, ctx.p());
}

std::optional<Representation> cornacchia(u64 p, u64 D) {
    if (D != 1 && D != 2 && D != 4) throw DomainError("cornacchia: D must be 1, 2 or 4");
    if (!is_prime(p) || p == 2 || p <= D) throw DomainError("cornacchia: bad p");
    auto r0 = sqrt_mod_prime(p - D % p, p);  // root of -D
    if (!r0) return std::nullopt;
    // descend remainders of gcd(p, r) until the first one below sqrt(p)
    u64 a = p, b = std::max(*r0, p - *r0);
    while (b * b >= p) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    u64 rem = p - b * b;
    if (rem % D != 0) return std::nullopt;
    u64 y2 = rem / D;
    u64 y = (u64)std::llround(std::sqrt((double)y2));
    while (y * y > y2) --y;
    while ((y + 1) * (y + 1) <= y2) ++y;
    if (y * y != y2 || y == 0) return std::nullopt;
    i64 x = (i64)b, yy = (i64)y;
    if (D == 1 && x > yy) std::swap(x, yy);
    return Representation{x, yy, D};
}

i64 quad_char_sum(u64 alpha, u64 beta, u64 gamma, const PrimeContext& ctx) {
    u64 p = ctx.p();
    alpha %= p, beta %= p, gamma %= p;
    i64 s = 0;
    // alpha x^2 + beta x + gamma stepped by finite differences
    u64 v = gamma;                                  // value at x = 0
    u64 d = ctx.add(alpha, beta);                   // v(x+1) - v(x) at x = 0
    u64 dd = ctx.add(alpha, alpha);                 // second difference
    for (u64 x = 0; x < p; ++x) {
        s += ctx.legendre(v);
        v = ctx.add(v, d);
        d = ctx.add(d, dd);
    }
    return s;
}

}  // namespace ff
}  // namespace fpd
