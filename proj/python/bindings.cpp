// Python bindings for the counting library: counts, closed formulas,
// series coefficients, fiber decompositions and the identity suites.
#include "fpdioph/ff.hpp"
#include "fpdioph/fibers.hpp"
#include "fpdioph/forms.hpp"
#include "fpdioph/graph.hpp"
#include "fpdioph/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace fpd;
using ff::i64;
using ff::u64;

namespace {

ff::PrimeContext make_ctx(u64 p) { return ff::PrimeContext(p); }

forms::FormId form_id(const std::string& name) {
    auto f = forms::form_from_name(name);
    if (!f) throw std::invalid_argument("form must be one of f1..f5, got " + name);
    return *f;
}

i64 py_count(u64 p, int m) {
    auto ctx = make_ctx(p);
    dioph::DiophGraph g(ctx);
    return dioph::count_cliques(g, m);
}

std::vector<std::vector<u64>> py_tuples(u64 p, int m, i64 limit) {
    auto ctx = make_ctx(p);
    dioph::DiophGraph g(ctx);
    return dioph::enumerate_tuples(g, m, limit);
}

i64 py_n4(u64 p) {
    if (!ff::is_prime(p) || p < 3) throw std::invalid_argument("p must be an odd prime");
    forms::FormTable tab(std::max<i64>((i64)p, 1000));
    return dioph::n4_formula(p, forms::q_of_p(tab, p));
}

i64 py_coeff(const std::string& form, i64 n, const std::string& method) {
    auto f = form_id(form);
    if (method == "cm") {
        if (n < 2 || !ff::is_prime((u64)n))
            throw std::invalid_argument("cm coefficients are defined at primes only");
        return forms::cm_coeff(f, (u64)n);
    }
    if (method != "eta") throw std::invalid_argument("method must be eta or cm");
    forms::FormTable tab(std::max<i64>(n, 1));
    return tab.coeff(f, n);
}

i64 py_q(u64 p) {
    if (!ff::is_prime(p) || p < 3) throw std::invalid_argument("p must be an odd prime");
    forms::FormTable tab(std::max<i64>((i64)p, 1000));
    return forms::q_of_p(tab, p);
}

py::dict py_fiber(u64 p, u64 t) {
    auto ctx = make_ctx(p);
    auto fc = fibers::classify_fiber(fibers::Fiber(ctx, t));
    py::dict d;
    d["t"] = fc.t;
    d["points"] = fc.points;
    d["full2"] = fc.full2;
    d["xr_square"] = fc.xr_square;
    d["halvable"] = fc.halvable;
    d["halving_square"] = fc.halving_square;
    d["case"] = std::string(fibers::w_case_label(fc.wcase));
    d["w"] = fc.w ? py::cast(*fc.w) : py::none();
    py::dict ts;
    ts["t0"] = fc.t0;
    ts["t1"] = fc.t1;
    ts["t2"] = fc.t2;
    ts["t3"] = fc.t3;
    ts["t4"] = fc.t4;
    ts["t5"] = fc.t5;
    d["t_sets"] = ts;
    return d;
}

py::dict py_t_sets(u64 p) {
    auto ctx = make_ctx(p);
    auto ts = fibers::t_sets(ctx);
    py::dict d;
    d["t0"] = ts.t0;
    d["t1"] = ts.t1;
    d["t2"] = ts.t2;
    d["t3"] = ts.t3;
    d["t4"] = ts.t4;
    d["t5"] = ts.t5;
    return d;
}

py::object py_construct(u64 p, int m) {
    auto ctx = make_ctx(p);
    auto t = dioph::construct_tuple(ctx, m);
    if (!t) return py::none();
    return py::cast(*t);
}

std::string py_verify(const std::string& suite, u64 pmax, int jobs) {
    verify::VerifyConfig cfg;
    if (pmax > 0)
        cfg = verify::VerifyConfig::with_pmax(pmax, jobs);
    else
        cfg.jobs = jobs;
    auto rep = verify::run_suite(suite, cfg);
    return verify::report_to_json(rep, true);
}

i64 py_n4_via_fibers(u64 p) {
    auto ctx = make_ctx(p);
    return fibers::n4_via_fibers(ctx);
}

i64 py_w1(u64 p) {
    if (!ff::is_prime(p) || p < 3) throw std::invalid_argument("p must be an odd prime");
    return fibers::w1(p);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "counting Diophantine m-tuples over prime fields by independent routes";

    m.def("is_prime", &ff::is_prime, py::arg("n"), "deterministic 64-bit primality test");
    m.def("count_tuples", &py_count, py::arg("p"), py::arg("m"),
          py::call_guard<py::gil_scoped_release>(),
          "brute-force number of m-tuples over F_p");
    m.def("tuples", &py_tuples, py::arg("p"), py::arg("m"), py::arg("limit") = -1,
          "lexicographically first tuples; limit < 0 returns all");
    m.def("n2", &dioph::n2_formula, py::arg("p"), "closed-form pair count");
    m.def("n3", &dioph::n3_formula, py::arg("p"), "closed-form triple count");
    m.def("n4", &py_n4, py::arg("p"), "closed-form quadruple count via the series coefficient");
    m.def("coeff", &py_coeff, py::arg("form"), py::arg("n"), py::arg("method") = "eta",
          "series coefficient of f1..f5 at n, by expansion or closed form");
    m.def("q_of_p", &py_q, py::arg("p"), "the combined coefficient q(p)");
    m.def("w1", &py_w1, py::arg("p"), "quadruples with product 1");
    m.def("n4_via_fibers", &py_n4_via_fibers, py::arg("p"),
          py::call_guard<py::gil_scoped_release>(),
          "quadruple count summed fiber by fiber");
    m.def("fiber", &py_fiber, py::arg("p"), py::arg("t"),
          "classification and count for a single fiber");
    m.def("t_sets", &py_t_sets, py::arg("p"), "the six parameter subsets");
    m.def("construct_tuple", &py_construct, py::arg("p"), py::arg("m"),
          "greedy tuple construction; None when the search is exhausted");
    m.def("verify", &py_verify, py::arg("suite") = "all", py::arg("pmax") = 0,
          py::arg("jobs") = 1, py::call_guard<py::gil_scoped_release>(),
          "run an identity suite, returns the JSON report");
    m.attr("__version__") = "0.1.0";
}
