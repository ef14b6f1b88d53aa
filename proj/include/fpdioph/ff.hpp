// Prime field plumbing: quadratic residues, modular square roots,
// Cornacchia representations p = x^2 + D*y^2, primality.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fpd {
namespace ff {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// deterministic Miller-Rabin, valid for the whole 64-bit range
bool is_prime(u64 n);

u64 mulmod(u64 a, u64 b, u64 p);
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);  // p prime, a != 0 mod p

// Residue arithmetic mod a fixed odd prime with an O(p)-bit quadratic
// residue table. 0 counts as a square throughout.
class PrimeContext {
  public:
    explicit PrimeContext(u64 p);  // DomainError unless p is an odd prime

    u64 p() const { return p_; }

    // Legendre symbol (a/p) in {-1,0,+1}
    int legendre(u64 a) const {
        a %= p_;
        if (a == 0) return 0;
        return bit(a) ? 1 : -1;
    }
    // chi'(a): legendre away from 0, chi'(0) = +1
    int chi(u64 a) const {
        a %= p_;
        if (a == 0) return 1;
        return bit(a) ? 1 : -1;
    }
    bool is_square(u64 a) const { return bit(a % p_) || a % p_ == 0; }

    u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p_ ? s - p_ : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
    u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
    u64 mul(u64 a, u64 b) const { return mulmod(a, b, p_); }
    u64 inv(u64 a) const { return invmod(a, p_); }
    u64 reduce(i64 a) const {
        i64 r = a % (i64)p_;
        return r < 0 ? (u64)(r + (i64)p_) : (u64)r;
    }

  private:
    bool bit(u64 a) const { return (qr_[a >> 6] >> (a & 63)) & 1; }
    u64 p_;
    std::vector<u64> qr_;  // bit a set iff a is a nonzero square
};

// canonical square root (the smaller of the two), absent for non-residues
std::optional<u64> sqrt_mod(u64 a, const PrimeContext& ctx);
std::optional<u64> sqrt_mod_prime(u64 a, u64 p);  // table-free Tonelli-Shanks

// x^2 + D*y^2 = p with x, y > 0, D in {1,2,4}; for D=1 the smaller
// component is reported as x. Absent when p has no such representation.
struct Representation {
    i64 x, y;
    u64 d;
};
std::optional<Representation> cornacchia(u64 p, u64 D);

// sum over x in F_p of legendre(alpha x^2 + beta x + gamma); equals
// -legendre(alpha) when alpha != 0 and beta^2 - 4 alpha gamma != 0
i64 quad_char_sum(u64 alpha, u64 beta, u64 gamma, const PrimeContext& ctx);

// exact fraction num/den, den > 0
struct Rational {
    i64 num;
    i64 den;
    // least integer >= num/den
    i64 ceil() const {
        i64 q = num / den, r = num % den;
        return q + (r > 0 ? 1 : 0);
    }
    bool operator<=(i64 v) const { return num <= v * den; }
};

}  // namespace ff
}  // namespace fpd
