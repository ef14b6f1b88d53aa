#include "fpdioph/forms.hpp"

#include <climits>

namespace fpd {
namespace forms {

int weight(FormId f) {
    switch (f) {
        case FormId::F1: return 2;
        case FormId::F2:
        case FormId::F3: return 3;
        case FormId::F4: return 4;
        default: return 5;
    }
}

std::string_view form_name(FormId f) {
    switch (f) {
        case FormId::F1: return "f1";
        case FormId::F2: return "f2";
        case FormId::F3: return "f3";
        case FormId::F4: return "f4";
        default: return "f5";
    }
}

std::optional<FormId> form_from_name(std::string_view s) {
    if (s == "f1") return FormId::F1;
    if (s == "f2") return FormId::F2;
    if (s == "f3") return FormId::F3;
    if (s == "f4") return FormId::F4;
    if (s == "f5") return FormId::F5;
    return std::nullopt;
}

const EtaQuotient& eta_spec(FormId f) {
    static const EtaQuotient q1{{{4, 2}, {8, 2}}};
    static const EtaQuotient q2{{{1, 2}, {2, 1}, {4, 1}, {8, 2}}};
    static const EtaQuotient q3{{{4, 6}}};
    static const EtaQuotient q4{{{2, 4}, {4, 4}}};
    static const EtaQuotient q5{{{1, 4}, {2, 2}, {4, 4}}};
    switch (f) {
        case FormId::F1: return q1;
        case FormId::F2: return q2;
        case FormId::F3: return q3;
        case FormId::F4: return q4;
        default: return q5;
    }
}

std::vector<i64> euler_product_series(i64 n_max) {
    if (n_max < 0) throw OutOfRange("euler_product_series: negative order");
    std::vector<i64> c((size_t)n_max + 1, 0);
    c[0] = 1;
    for (i64 k = 1; k * (3 * k - 1) / 2 <= n_max; ++k) {
        i64 s = (k & 1) ? -1 : 1;
        c[(size_t)(k * (3 * k - 1) / 2)] = s;
        if (k * (3 * k + 1) / 2 <= n_max) c[(size_t)(k * (3 * k + 1) / 2)] = s;
    }
    return c;
}

namespace {

// in place r *= prod_{n>=1} (1 - q^{s n}), truncated at degree n_max
void mul_scaled_euler(std::vector<i64>& r, i64 s, i64 n_max) {
    std::vector<std::pair<i64, int>> terms;  // (exponent, sign), ascending
    for (i64 k = 1; s * (k * (3 * k - 1) / 2) <= n_max; ++k) {
        int sg = (k & 1) ? -1 : 1;
        terms.push_back({s * (k * (3 * k - 1) / 2), sg});
        if (s * (k * (3 * k + 1) / 2) <= n_max) terms.push_back({s * (k * (3 * k + 1) / 2), sg});
    }
    std::vector<i64> out((size_t)n_max + 1);
    for (i64 i = 0; i <= n_max; ++i) {
        ff::i128 acc = r[(size_t)i];
        for (auto [e, sg] : terms) {
            if (e > i) break;
            if (sg > 0)
                acc += r[(size_t)(i - e)];
            else
                acc -= r[(size_t)(i - e)];
        }
        if (acc > INT64_MAX || acc < INT64_MIN)
            throw ArithmeticOverflow("eta expansion coefficient exceeds 64 bits");
        out[(size_t)i] = (i64)acc;
    }
    r.swap(out);
}

}  // namespace

QExpansion eta_quotient_qexp(const EtaQuotient& spec, i64 n_max) {
    if (n_max < 1) throw OutOfRange("eta_quotient_qexp: order must be >= 1");
    i64 se = 0;
    for (auto [scale, exp] : spec.factors) {
        if (scale < 1 || exp < 1) throw ff::DomainError("eta factor with nonpositive entries");
        se += scale * exp;
    }
    if (se % 24 != 0 || se == 0) throw ff::DomainError("eta quotient leading exponent not integral");
    i64 lead = se / 24;
    QExpansion q{n_max, std::vector<i64>((size_t)n_max + 1, 0)};
    i64 top = n_max - lead;
    if (top < 0) return q;
    std::vector<i64> r((size_t)top + 1, 0);
    r[0] = 1;
    for (auto [scale, exp] : spec.factors)
        for (i64 j = 0; j < exp; ++j) mul_scaled_euler(r, scale, top);
    for (i64 i = 0; i <= top; ++i) q.c[(size_t)(i + lead)] = r[(size_t)i];
    return q;
}

FormTable::FormTable(i64 n_max) : n_max_(n_max) {
    for (int i = 0; i < 5; ++i) exp_[(size_t)i] = eta_quotient_qexp(eta_spec((FormId)i), n_max);
}

FormTable FormTable::from_expansions(std::array<QExpansion, 5> e) {
    FormTable t{raw_tag{}};
    t.n_max_ = e[0].n_max;
    for (auto& q : e)
        if (q.n_max != t.n_max_) throw ff::DomainError("from_expansions: mismatched orders");
    t.exp_ = std::move(e);
    return t;
}

namespace {
ff::Representation must_represent(u64 p, u64 D) {
    auto r = ff::cornacchia(p, D);
    if (!r) throw std::logic_error("cornacchia: no representation in an admissible class");
    return *r;
}
}  // namespace

i64 cm_coeff(FormId f, u64 p) {
    if (p == 2 || !ff::is_prime(p)) throw ff::DomainError("cm_coeff: p must be an odd prime");
    i64 pp = (i64)p;
    switch (f) {
        case FormId::F1: {
            if (p % 4 == 3) return 0;
            auto r = must_represent(p, 4);  // p = x^2 + (2y)^2, x odd
            i64 x = r.x, y2 = 2 * r.y;
            if (((x + y2) % 4 + 4) % 4 != 1) x = -x;
            return 2 * x;
        }
        case FormId::F2: {
            if (p % 8 == 5 || p % 8 == 7) return 0;
            auto r = must_represent(p, 2);
            return 2 * (r.x * r.x - 2 * r.y * r.y);
        }
        case FormId::F3: {
            if (p % 4 == 3) return 0;
            auto r = must_represent(p, 4);
            return 2 * (r.x * r.x - 4 * r.y * r.y);
        }
        case FormId::F5: {
            if (p % 4 == 3) return 0;
            auto r = must_represent(p, 1);
            return 2 * pp * pp - 16 * (r.x * r.x) * (r.y * r.y);
        }
        default: throw ff::DomainError("cm_coeff: the weight-4 form has no CM closed form");
    }
}

i64 q_of_p(const FormTable& tab, u64 p, QSource src) {
    if (p == 2 || !ff::is_prime(p)) throw ff::DomainError("q_of_p: p must be an odd prime");
    i64 d = tab.coeff(FormId::F4, (i64)p);
    i64 b, c, e;
    if (src == QSource::Eta) {
        b = tab.coeff(FormId::F2, (i64)p);
        c = tab.coeff(FormId::F3, (i64)p);
        e = tab.coeff(FormId::F5, (i64)p);
    } else {
        b = cm_coeff(FormId::F2, p);
        c = cm_coeff(FormId::F3, p);
        e = cm_coeff(FormId::F5, p);
    }
    return e - 6 * d + 24 * b - 24 * c;
}

i64 hecke_trace_s3(const FormTable& tab, u64 p, QSource src) {
    if (src == QSource::Eta)
        return 2 * tab.coeff(FormId::F2, (i64)p) + tab.coeff(FormId::F3, (i64)p);
    return 2 * cm_coeff(FormId::F2, p) + cm_coeff(FormId::F3, p);
}

}  // namespace forms
}  // namespace fpd
