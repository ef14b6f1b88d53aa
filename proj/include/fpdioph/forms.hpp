// Integer q-expansions of the five eta quotients entering the quadruple
// count, plus closed-form prime coefficients for the four of them with
// complex multiplication. Everything here is exact int64 arithmetic.
#pragma once

#include "fpdioph/ff.hpp"

#include <array>
#include <string_view>
#include <vector>

namespace fpd {
namespace forms {

using ff::i64;
using ff::u64;

struct ArithmeticOverflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};
struct OutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// the five cusp forms, by weight:
//   F1 (wt 2) eta(4t)^2 eta(8t)^2      CM, coefficients a(p)
//   F2 (wt 3) eta(t)^2 eta(2t) eta(4t) eta(8t)^2   CM, b(p)
//   F3 (wt 3) eta(4t)^6                CM, c(p)
//   F4 (wt 4) eta(2t)^4 eta(4t)^4      no CM, d(p)
//   F5 (wt 5) eta(t)^4 eta(2t)^2 eta(4t)^4         CM, e(p)
enum class FormId { F1, F2, F3, F4, F5 };

int weight(FormId f);
std::string_view form_name(FormId f);             // "f1".."f5"
std::optional<FormId> form_from_name(std::string_view s);

struct EtaFactor {
    i64 scale;     // eta(scale * tau)
    i64 exponent;  // power
};
struct EtaQuotient {
    std::vector<EtaFactor> factors;
};
const EtaQuotient& eta_spec(FormId f);

// coefficients of prod_{n>=1} (1 - q^n) up to degree n_max; sparse by the
// pentagonal number theorem, returned dense (index = exponent)
std::vector<i64> euler_product_series(i64 n_max);

struct QExpansion {
    i64 n_max = 0;
    std::vector<i64> c;  // c[n] for 1 <= n <= n_max, c[0] = 0
    i64 at(i64 n) const {
        if (n < 1 || n > n_max) throw OutOfRange("QExpansion: index out of range");
        return c[(size_t)n];
    }
};

// q^(sum scale*exp/24) prod (1 - q^{scale n})^exp, truncated; the leading
// exponent must come out a positive integer
QExpansion eta_quotient_qexp(const EtaQuotient& spec, i64 n_max);

// all five expansions to a common truncation order, immutable once built
class FormTable {
  public:
    explicit FormTable(i64 n_max = 10000);
    static FormTable from_expansions(std::array<QExpansion, 5> e);  // test hook

    i64 n_max() const { return n_max_; }
    const QExpansion& expansion(FormId f) const { return exp_[(size_t)f]; }
    i64 coeff(FormId f, i64 n) const { return exp_[(size_t)f].at(n); }

  private:
    struct raw_tag {};
    explicit FormTable(raw_tag) {}
    i64 n_max_ = 0;
    std::array<QExpansion, 5> exp_;
};

// prime coefficients from the CM representations:
//   a(p): 0 unless p = 1 mod 4; else 2x' where p = x'^2 + y'^2, y' even,
//         x' + y' = 1 mod 4
//   b(p): 0 unless p = 1,3 mod 8; else 2(x^2 - 2y^2), p = x^2 + 2y^2
//   c(p): 0 unless p = 1 mod 4; else 2(x^2 - 4y^2), p = x^2 + 4y^2
//   e(p): 0 unless p = 1 mod 4; else 2p^2 - 16x^2y^2, p = x^2 + y^2
// F4 has no CM; asking for it is a DomainError.
i64 cm_coeff(FormId f, u64 p);

enum class QSource { Eta, CmEta };

// q(p) = e(p) - 6d(p) + 24b(p) - 24c(p); CmEta takes b, c, e from the
// closed forms and d (no CM) from the expansion table
i64 q_of_p(const FormTable& tab, u64 p, QSource src = QSource::Eta);

// trace of the Hecke operator T_p on the relevant weight-3 space, 2b(p) + c(p)
i64 hecke_trace_s3(const FormTable& tab, u64 p, QSource src = QSource::Eta);

}  // namespace forms
}  // namespace fpd
