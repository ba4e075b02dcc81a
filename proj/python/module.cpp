// Python bindings for the main operations: field contexts, supersingularity
// tables, the search engines, and certificate verification. Field elements
// cross the boundary as (c0, c1) coordinate pairs.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sshowe/certify.hpp"
#include "sshowe/genus2.hpp"
#include "sshowe/sweep.hpp"

namespace py = pybind11;
using namespace sshowe;

namespace {

using PyElem = std::pair<uint64_t, uint64_t>;

Fp2 unwrap(const PyElem& e) { return {e.first, e.second}; }
PyElem wrap(const Fp2& x) { return {x.c0, x.c1}; }

std::vector<PyElem> wrap_all(const std::vector<Fp2>& xs) {
  std::vector<PyElem> out;
  out.reserve(xs.size());
  for (const Fp2& x : xs) out.push_back(wrap(x));
  return out;
}

py::dict stats_dict(const SearchStats& st) {
  py::dict d;
  d["strategy"] = st.strategy;
  d["pairs_tested"] = st.pairs_tested;
  d["hits"] = st.hits;
  d["supersingular_checks"] = st.supersingular_checks;
  d["passes"] = st.passes;
  return d;
}

py::dict report_dict(const VerificationReport& rep) {
  py::dict d;
  d["ok"] = rep.ok();
  py::list checks;
  for (const auto& c : rep.checks) {
    py::dict cd;
    cd["name"] = c.name;
    cd["ok"] = c.ok;
    cd["detail"] = c.detail;
    checks.append(cd);
  }
  d["checks"] = checks;
  d["note"] = rep.note;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "superspecial curve search over F_{p^2}";

  py::class_<FieldContext>(m, "FieldContext")
      .def(py::init([](uint64_t p) { return FieldContext(Prime(p)); }), py::arg("p"))
      .def(py::init([](uint64_t p, uint64_t a0, uint64_t a1) {
             return FieldContext(Prime(p), a0, a1);
           }),
           py::arg("p"), py::arg("a0"), py::arg("a1"))
      .def_property_readonly("p", &FieldContext::p)
      .def_property_readonly("minpoly",
                             [](const FieldContext& c) {
                               return std::vector<uint64_t>{c.minpoly_a0(), c.minpoly_a1(), 1};
                             })
      .def_property_readonly("zeta_generates", &FieldContext::zeta_generates)
      .def("add", [](const FieldContext& c, PyElem x, PyElem y) {
        return wrap(c.add(unwrap(x), unwrap(y)));
      })
      .def("sub", [](const FieldContext& c, PyElem x, PyElem y) {
        return wrap(c.sub(unwrap(x), unwrap(y)));
      })
      .def("mul", [](const FieldContext& c, PyElem x, PyElem y) {
        return wrap(c.mul(unwrap(x), unwrap(y)));
      })
      .def("inv", [](const FieldContext& c, PyElem x) { return wrap(c.inv(unwrap(x))); })
      .def("pow", [](const FieldContext& c, PyElem x, uint64_t e) {
        return wrap(c.pow(unwrap(x), e));
      })
      .def("frobenius",
           [](const FieldContext& c, PyElem x) { return wrap(c.frobenius(unwrap(x))); })
      .def("is_square", [](const FieldContext& c, PyElem x) { return c.is_square(unwrap(x)); })
      .def("sqrt",
           [](const FieldContext& c, PyElem x) -> std::optional<PyElem> {
             auto r = c.sqrt(unwrap(x));
             if (!r) return std::nullopt;
             return wrap(*r);
           })
      .def("enc", [](const FieldContext& c, PyElem x) { return c.enc(unwrap(x)); });

  m.def("deuring_polynomial", [](uint64_t p) { return deuring_polynomial(Prime(p)); },
        py::arg("p"), "coefficients of the Deuring polynomial, ascending, in F_p");
  m.def("h_polynomial", [](uint64_t p) { return h_polynomial(Prime(p)); }, py::arg("p"));
  m.def("g_polynomial", [](uint64_t p) { return g_polynomial(Prime(p)); }, py::arg("p"));

  m.def(
      "tables",
      [](uint64_t p, uint64_t seed) {
        FieldContext ctx{Prime(p)};
        SupersingularTables t = build_tables(ctx, seed);
        py::dict d;
        d["p"] = p;
        d["minpoly"] = std::vector<uint64_t>{ctx.minpoly_a0(), ctx.minpoly_a1(), 1};
        d["T"] = wrap_all(t.T);
        d["S"] = wrap_all(t.S);
        d["T_restricted"] = wrap_all(t.T_restricted);
        return d;
      },
      py::arg("p"), py::arg("seed") = 0,
      "supersingular Legendre parameters T, j-invariants S, and the subset of "
      "T with prime-field j-invariant");

  m.def(
      "search",
      [](int genus, uint64_t p, const std::string& strategy, uint64_t seed) {
        FieldContext ctx{Prime(p)};
        SearchConfig scfg;
        scfg.seed = seed;
        SearchOutcome outcome = run_search(ctx, genus, strategy_from_name(strategy), scfg);
        py::dict d;
        d["found"] = outcome.status == SearchStatus::Found;
        d["certificate"] =
            outcome.certificate ? py::object(py::str(serialize(*outcome.certificate)))
                                : py::object(py::none());
        d["stats"] = stats_dict(outcome.stats);
        return d;
      },
      py::arg("genus"), py::arg("p"), py::arg("strategy") = "auto", py::arg("seed") = 0,
      "single-prime search; the certificate, when found, is a JSON document");

  m.def(
      "verify",
      [](const std::string& cert_json) { return report_dict(verify(deserialize(cert_json))); },
      py::arg("certificate"), "independent re-verification of a certificate document");

  m.def("appendix_verify_all", []() {
    py::list out;
    for (const auto& rec : appendix_records()) {
      VerificationReport rep = verify_appendix(rec);
      py::dict d;
      d["genus"] = rec.genus;
      d["p"] = rec.p;
      d["ok"] = rep.ok();
      d["note"] = rep.note;
      out.append(d);
    }
    return out;
  });

  py::register_exception<CertError>(m, "CertError");
}
