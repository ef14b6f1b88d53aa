// Command-line front end: counting, closed formulas, coefficient tables,
// per-fiber decompositions, tuple construction, and the identity suites.
// Exit codes: 0 success, 1 identity failure, 2 usage error.
#include "fpdioph/ff.hpp"
#include "fpdioph/fibers.hpp"
#include "fpdioph/forms.hpp"
#include "fpdioph/graph.hpp"
#include "fpdioph/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using fpd::ff::i128;
using fpd::ff::i64;
using fpd::ff::u64;
using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

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

// JSON numbers stay inside the 53-bit exact range; larger values are
// emitted as decimal strings so nothing is rounded on re-parse
json json_int(i128 v) {
    const i128 safe = (i128)1 << 53;
    if (v > -safe && v < safe) return (i64)v;
    return str128(v);
}

void require_odd_prime(u64 p) {
    if (p < 3 || p % 2 == 0 || !fpd::ff::is_prime(p))
        throw UsageError("--p must be an odd prime, got " + std::to_string(p));
}

void require_format(const std::string& f) {
    if (f != "csv" && f != "json") throw UsageError("--format must be csv or json, got " + f);
}

void emit(const std::string& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc;
        if (doc.empty() || doc.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open " + out_path);
    f << doc;
    if (doc.empty() || doc.back() != '\n') f << '\n';
}

int cmd_count(u64 p, int m, bool list, i64 limit, const std::string& format,
              const std::string& out) {
    require_format(format);
    require_odd_prime(p);
    if (m < 2) throw UsageError("--m must be at least 2");
    fpd::ff::PrimeContext ctx(p);
    fpd::dioph::DiophGraph g(ctx);
    i64 count = fpd::dioph::count_cliques(g, m);
    if (format == "csv") {
        if (list) throw UsageError("--list is only available with --format json");
        emit("p,m,count\n" + std::to_string(p) + "," + std::to_string(m) + "," +
                 std::to_string(count),
             out);
        return 0;
    }
    json j;
    j["p"] = p;
    j["m"] = m;
    j["count"] = json_int(count);
    j["method"] = "bruteforce";
    if (list) {
        json arr = json::array();
        for (const auto& t : fpd::dioph::enumerate_tuples(g, m, limit)) arr.push_back(t);
        j["tuples"] = arr;
    }
    emit(j.dump(2), out);
    return 0;
}

int cmd_formula(u64 p, int m, const std::string& format, const std::string& out) {
    require_format(format);
    require_odd_prime(p);
    if (m < 2 || m > 4) throw UsageError("--m must be 2, 3 or 4 for formula");
    i64 count = 0;
    std::optional<std::array<i64, 6>> comp;  // a,b,c,d,e,q
    if (m == 2) {
        count = fpd::dioph::n2_formula(p);
    } else if (m == 3) {
        count = fpd::dioph::n3_formula(p);
    } else {
        fpd::forms::FormTable tab(std::max<i64>((i64)p, 1000));
        using fpd::forms::FormId;
        i64 a = tab.coeff(FormId::F1, (i64)p), b = tab.coeff(FormId::F2, (i64)p);
        i64 c = tab.coeff(FormId::F3, (i64)p), d = tab.coeff(FormId::F4, (i64)p);
        i64 e = tab.coeff(FormId::F5, (i64)p);
        i64 q = fpd::forms::q_of_p(tab, p);
        count = fpd::dioph::n4_formula(p, q);
        comp = {a, b, c, d, e, q};
    }
    if (format == "csv") {
        std::string doc;
        if (comp) {
            doc = "p,m,count,a,b,c,d,e,q\n" + std::to_string(p) + "," + std::to_string(m) + "," +
                  std::to_string(count);
            for (i64 v : *comp) doc += "," + std::to_string(v);
        } else {
            doc = "p,m,count\n" + std::to_string(p) + "," + std::to_string(m) + "," +
                  std::to_string(count);
        }
        emit(doc, out);
        return 0;
    }
    json j;
    j["p"] = p;
    j["m"] = m;
    j["count"] = json_int(count);
    j["method"] = "formula";
    if (comp) {
        const char* names[] = {"a", "b", "c", "d", "e", "q"};
        json cj;
        for (int i = 0; i < 6; ++i) cj[names[i]] = (*comp)[(size_t)i];
        j["components"] = cj;
    }
    emit(j.dump(2), out);
    return 0;
}

int cmd_coeff(const std::string& form, u64 pmax, const std::string& method,
              const std::string& format, const std::string& out) {
    require_format(format);
    auto f = fpd::forms::form_from_name(form);
    if (!f) throw UsageError("--form must be one of f1..f5, got " + form);
    if (method != "eta" && method != "cm") throw UsageError("--method must be eta or cm");
    if (method == "cm" && *f == fpd::forms::FormId::F4)
        throw UsageError("f4 has no closed coefficient form; use --method eta");
    std::optional<fpd::forms::FormTable> tab;
    if (method == "eta") tab.emplace(std::max<i64>((i64)pmax, 1));
    std::vector<std::pair<u64, i64>> rows;
    for (u64 p : fpd::verify::primes_in(3, pmax))
        rows.push_back({p, method == "eta" ? tab->coeff(*f, (i64)p) : fpd::forms::cm_coeff(*f, p)});
    if (format == "json") {
        json j;
        j["form"] = form;
        j["method"] = method;
        j["p_max"] = pmax;
        json arr = json::array();
        for (auto& [p, c] : rows) arr.push_back({{"p", p}, {"c", c}});
        j["coefficients"] = arr;
        emit(j.dump(2), out);
        return 0;
    }
    std::string doc = "p,coefficient";
    for (auto& [p, c] : rows) doc += "\n" + std::to_string(p) + "," + std::to_string(c);
    emit(doc, out);
    return 0;
}

int cmd_fibers(u64 p, const std::string& format, const std::string& out) {
    require_format(format);
    require_odd_prime(p);
    fpd::ff::PrimeContext ctx(p);
    auto sweep = fpd::fibers::sweep_fibers(ctx);
    if (format == "json") {
        json j;
        j["p"] = p;
        json arr = json::array();
        for (const auto& fc : sweep.fibers) {
            json r;
            r["t"] = fc.t;
            r["P"] = fc.points;
            r["full2"] = fc.full2;
            r["halvable"] = fc.halvable;
            r["halving_square"] = fc.halving_square;
            r["xR_square"] = fc.xr_square;
            for (int i = 0; i <= 5; ++i) {
                bool v = i == 0   ? fc.t0
                         : i == 1 ? fc.t1
                         : i == 2 ? fc.t2
                         : i == 3 ? fc.t3
                         : i == 4 ? fc.t4
                                  : fc.t5;
                r["T" + std::to_string(i)] = v;
            }
            r["case"] = std::string(fpd::fibers::w_case_label(fc.wcase));
            r["W"] = json_int(*fc.w);
            arr.push_back(r);
        }
        j["fibers"] = arr;
        j["w1"] = json_int(sweep.w1);
        j["total"] = json_int(sweep.total);
        emit(j.dump(2), out);
        return 0;
    }
    std::string doc = "t,P,full2,halvable,halving_square,xR_square,T0,T1,T2,T3,T4,T5,case,W";
    auto b = [](bool v) { return v ? "1" : "0"; };
    for (const auto& fc : sweep.fibers) {
        doc += "\n" + std::to_string(fc.t) + "," + std::to_string(fc.points) + "," + b(fc.full2) +
               "," + b(fc.halvable) + "," + b(fc.halving_square) + "," + b(fc.xr_square) + "," +
               b(fc.t0) + "," + b(fc.t1) + "," + b(fc.t2) + "," + b(fc.t3) + "," + b(fc.t4) + "," +
               b(fc.t5) + "," + std::string(fpd::fibers::w_case_label(fc.wcase)) + "," +
               std::to_string(*fc.w);
    }
    doc += "\n1,,,,,,,,,,,,singular," + std::to_string(sweep.w1);
    doc += "\ntotal,,,,,,,,,,,,total," + std::to_string(sweep.total);
    emit(doc, out);
    return 0;
}

int cmd_verify(u64 pmax, const std::string& suite, int jobs, const std::string& out) {
    if (jobs < 1) throw UsageError("--jobs must be at least 1");
    fpd::verify::VerifyConfig cfg;
    if (pmax > 0) {
        if (pmax < 3) throw UsageError("--pmax must be at least 3");
        cfg = fpd::verify::VerifyConfig::with_pmax(pmax, jobs);
    } else {
        cfg.jobs = jobs;
    }
    fpd::verify::VerificationReport rep;
    try {
        rep = fpd::verify::run_suite(suite, cfg);
    } catch (const fpd::ff::DomainError& e) {
        throw UsageError(e.what());
    }
    std::string doc = fpd::verify::report_to_json(rep, true);
    emit(doc, out);
    if (!out.empty()) {
        size_t nfail = 0;
        for (const auto& r : rep.results) nfail += r.failures.size();
        std::cout << "verify " << suite << ": " << (rep.passed() ? "pass" : "FAIL") << " ("
                  << rep.results.size() << " checks, " << nfail << " failures) -> " << out << "\n";
    }
    return rep.passed() ? 0 : 1;
}

int cmd_construct(u64 p, int m, const std::string& format, const std::string& out) {
    require_odd_prime(p);
    if (m < 2) throw UsageError("--m must be at least 2");
    if (format != "json") throw UsageError("construct supports --format json only");
    fpd::ff::PrimeContext ctx(p);
    auto tuple = fpd::dioph::construct_tuple(ctx, m);
    i128 bound = m < 60 ? (i128)((i128)1 << (2 * m - 2)) * m * m : (i128)0;
    json j;
    j["p"] = p;
    j["m"] = m;
    if (m < 60) {
        j["bound"] = json_int(bound);  // guaranteed-existence threshold 2^(2m-2) m^2
        j["bound_exceeded"] = (i128)(i64)p > bound;
    } else {
        j["bound"] = nullptr;
        j["bound_exceeded"] = false;
    }
    j["found"] = tuple.has_value();
    if (tuple) {
        j["tuple"] = *tuple;
        j["verified"] = fpd::dioph::is_diophantine_tuple(ctx, *tuple);
    } else {
        j["tuple"] = nullptr;
    }
    emit(j.dump(2), out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Diophantine m-tuple counting over F_p by three independent routes"};
    app.require_subcommand(1);

    u64 p = 0, pmax = 0;
    int m = 2, jobs = 1;
    bool list = false;
    i64 limit = 25;
    std::string form = "f1", method = "eta", suite = "all", format, out;

    auto* c_count = app.add_subcommand("count", "brute-force m-tuple count for one prime");
    c_count->add_option("--p", p, "odd prime modulus")->required();
    c_count->add_option("--m", m, "tuple size (>= 2)")->required();
    c_count->add_flag("--list", list, "also list tuples (json only)");
    c_count->add_option("--limit", limit, "max tuples listed, -1 = all");
    c_count->add_option("--format", format, "csv|json (default json)");
    c_count->add_option("--out", out, "write document to file");

    auto* c_formula = app.add_subcommand("formula", "closed-formula count (m = 2, 3, 4)");
    c_formula->add_option("--p", p, "odd prime modulus")->required();
    c_formula->add_option("--m", m, "tuple size in {2,3,4}")->required();
    c_formula->add_option("--format", format, "csv|json (default json)");
    c_formula->add_option("--out", out, "write document to file");

    auto* c_coeff = app.add_subcommand("coeff", "prime coefficients of one of the five forms");
    c_coeff->add_option("--form", form, "f1..f5")->required();
    c_coeff->add_option("--pmax", pmax, "largest prime index")->required();
    c_coeff->add_option("--method", method, "eta|cm (default eta)");
    c_coeff->add_option("--format", format, "csv|json (default csv)");
    c_coeff->add_option("--out", out, "write document to file");

    auto* c_fibers = app.add_subcommand("fibers", "per-fiber decomposition table for one prime");
    c_fibers->add_option("--p", p, "odd prime modulus")->required();
    c_fibers->add_option("--format", format, "csv|json (default csv)");
    c_fibers->add_option("--out", out, "write document to file");

    auto* c_verify = app.add_subcommand("verify", "run the identity suites");
    c_verify->add_option("--pmax", pmax, "clamp prime ranges (0 = per-check defaults)");
    c_verify->add_option("--suite", suite, "all|tuples|forms|fibers|tsets");
    c_verify->add_option("--jobs", jobs, "worker threads");
    c_verify->add_option("--out", out, "write JSON report to file");

    auto* c_construct = app.add_subcommand("construct", "build an m-tuple from the seed {1,3}");
    c_construct->add_option("--p", p, "odd prime modulus")->required();
    c_construct->add_option("--m", m, "tuple size (>= 2)")->required();
    c_construct->add_option("--format", format, "json");
    c_construct->add_option("--out", out, "write document to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_count->parsed())
            return cmd_count(p, m, list, limit, format.empty() ? "json" : format, out);
        if (c_formula->parsed())
            return cmd_formula(p, m, format.empty() ? "json" : format, out);
        if (c_coeff->parsed())
            return cmd_coeff(form, pmax, method, format.empty() ? "csv" : format, out);
        if (c_fibers->parsed()) return cmd_fibers(p, format.empty() ? "csv" : format, out);
        if (c_verify->parsed()) return cmd_verify(pmax, suite, jobs, out);
        if (c_construct->parsed())
            return cmd_construct(p, m, format.empty() ? "json" : format, out);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
