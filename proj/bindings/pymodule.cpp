#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <variant>

#include "specalg/audit.hpp"
#include "specalg/cli.hpp"
#include "specalg/errors.hpp"
#include "specalg/laws.hpp"
#include "specalg/textio.hpp"

namespace py = pybind11;
using namespace specalg;

namespace {

// wrapper class: the stl.h variant caster would otherwise try to convert
// Spec alternatives to python values
struct PySpec {
    Spec value;
};

mts::Rule rule_of(const std::string& r) {
    if (r == "meet") return mts::Rule::Meet;
    if (r == "join") return mts::Rule::Join;
    throw std::invalid_argument("unknown mts rule " + r);
}

std::string theory_of(const PySpec& s) {
    if (std::holds_alternative<fa::Nfa>(s.value)) return "nfa";
    if (std::holds_alternative<mts::Mts>(s.value)) return "mts";
    return "ia";
}

bool py_refines(const PySpec& a, const PySpec& b) {
    if (a.value.index() != b.value.index()) throw SignatureMismatch();
    if (const auto* x = std::get_if<fa::Nfa>(&a.value))
        return fa::refines(*x, std::get<fa::Nfa>(b.value));
    if (const auto* x = std::get_if<mts::Mts>(&a.value))
        return mts::refines(*x, std::get<mts::Mts>(b.value));
    return ia::refines(std::get<ia::InterfaceAutomaton>(a.value),
                       std::get<ia::InterfaceAutomaton>(b.value));
}

PySpec py_conjoin(const PySpec& a, const PySpec& b) {
    if (const auto* x = std::get_if<fa::Nfa>(&a.value))
        return {fa::conjoin(*x, std::get<fa::Nfa>(b.value))};
    if (const auto* x = std::get_if<mts::Mts>(&a.value))
        return {mts::conjoin(*x, std::get<mts::Mts>(b.value))};
    throw std::invalid_argument("no conjunction operator for interface automata");
}

std::optional<PySpec> py_compose(const PySpec& a, const PySpec& b, const std::string& rule) {
    if (const auto* x = std::get_if<fa::Nfa>(&a.value))
        return PySpec{fa::compose(*x, std::get<fa::Nfa>(b.value))};
    if (const auto* x = std::get_if<mts::Mts>(&a.value))
        return PySpec{mts::compose(*x, std::get<mts::Mts>(b.value), rule_of(rule))};
    auto r = ia::optimistic(std::get<ia::InterfaceAutomaton>(a.value),
                            std::get<ia::InterfaceAutomaton>(b.value));
    if (!r) return std::nullopt;
    return PySpec{std::move(*r)};
}

PySpec py_disjoin(const PySpec& a, const PySpec& b) {
    if (const auto* x = std::get_if<fa::Nfa>(&a.value))
        return {fa::disjoin(*x, std::get<fa::Nfa>(b.value))};
    if (const auto* x = std::get_if<mts::Mts>(&a.value))
        return {mts::disjoin(*x, std::get<mts::Mts>(b.value))};
    throw std::invalid_argument("no disjunction operator for interface automata");
}

std::optional<PySpec> py_compat(const PySpec& a, const PySpec& b, const std::string& mode) {
    const auto& x = std::get<ia::InterfaceAutomaton>(a.value);
    const auto& y = std::get<ia::InterfaceAutomaton>(b.value);
    std::optional<ia::InterfaceAutomaton> r;
    if (mode == "pessimistic") {
        r = ia::pessimistic(x, y);
    } else {
        auto prod = ia::product(x, y);
        r = mode == "optimistic" ? ia::env_prune(prod) : ia::comp_prune(prod);
    }
    if (!r) return std::nullopt;
    return PySpec{std::move(*r)};
}

GenConfig config_of(const std::string& theory, int samples, std::uint64_t seed, int max_states,
                    int alphabet_size, const std::string& mode, const std::string& mts_rule) {
    GenConfig cfg;
    cfg.theory = theory;
    cfg.sample_count = samples;
    cfg.seed = seed;
    cfg.max_states = max_states;
    cfg.alphabet_size = alphabet_size;
    cfg.mode = mode == "exhaustive" ? GenMode::Exhaustive : GenMode::Random;
    cfg.mts_rule = rule_of(mts_rule);
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_specalg, m) {
    m.doc() = "specification-algebra workbench: nfa / mts / interface-automata "
              "theories and the law-audit harness";

    py::class_<PySpec>(m, "Spec")
        .def_property_readonly("theory", &theory_of)
        .def("render",
             [](const PySpec& s, const std::string& name) { return render_spec(s.value, name); },
             py::arg("name") = "spec")
        .def("__repr__", [](const PySpec& s) { return "<Spec " + theory_of(s) + ">"; })
        .def("__eq__", [](const PySpec& a, const PySpec& b) { return a.value == b.value; });

    m.def("parse", [](const std::string& text) {
        py::dict d;
        for (auto& s : parse_spec(text).specs)
            d[py::str(s.name)] = PySpec{std::move(s.value)};
        return d;
    }, "parse a spec file into a name -> Spec dict");
    m.def("render",
          [](const PySpec& s, const std::string& name) { return render_spec(s.value, name); },
          py::arg("spec"), py::arg("name") = "spec");

    m.def("refines", &py_refines);
    m.def("equiv",
          [](const PySpec& a, const PySpec& b) { return py_refines(a, b) && py_refines(b, a); });
    m.def("conjoin", &py_conjoin);
    m.def("compose", &py_compose, py::arg("a"), py::arg("b"), py::arg("mts_rule") = "meet",
          "parallel composition; None when an interface-automata pair is incompatible");
    m.def("disjoin", &py_disjoin);
    m.def("conj_quotient", [](const PySpec& b, const PySpec& a) -> PySpec {
        return {fa::conj_quotient(std::get<fa::Nfa>(b.value), std::get<fa::Nfa>(a.value))};
    });
    m.def("par_quotient", [](const PySpec& b, const PySpec& a) -> PySpec {
        return {fa::par_quotient(std::get<fa::Nfa>(b.value), std::get<fa::Nfa>(a.value))};
    });
    m.def("compat", &py_compat, py::arg("a"), py::arg("b"), py::arg("mode") = "optimistic");

    m.def("universal",
          [](const std::string& theory, const std::vector<std::string>& alphabet) -> PySpec {
              if (theory == "nfa") return {fa::universal(alphabet)};
              if (theory == "mts") return {mts::universal(alphabet)};
              throw std::invalid_argument("no universal interface automaton");
          });
    m.def("empty",
          [](const std::vector<std::string>& alphabet) -> PySpec { return {fa::empty(alphabet)}; });
    m.def("bottom",
          [](const std::vector<std::string>& alphabet) -> PySpec { return {mts::bottom(alphabet)}; });

    m.def("words_upto", [](const PySpec& s, int n) {
        const auto& a = std::get<fa::Nfa>(s.value);
        std::vector<std::string> out;
        for (const auto& w : fa::words_upto(a, n)) {
            std::string word;
            for (int sym : w) word += a.alphabet[sym];
            out.push_back(word);
        }
        return out;
    });

    m.def("audit_json",
          [](const std::string& theory, int samples, std::uint64_t seed, int max_states,
             int alphabet_size, const std::string& mode, const std::string& mts_rule) {
              GenConfig cfg = config_of(theory, samples, seed, max_states, alphabet_size, mode,
                                        mts_rule);
              return report_to_json(audit(make_handle(cfg), cfg));
          },
          py::arg("theory"), py::arg("samples") = 1000, py::arg("seed") = 0,
          py::arg("max_states") = 3, py::arg("alphabet_size") = 2, py::arg("mode") = "random",
          py::arg("mts_rule") = "meet");

    m.def("check_law",
          [](const std::string& law, const std::string& theory, int samples, std::uint64_t seed,
             int max_states, int alphabet_size, const std::string& mode,
             const std::string& mts_rule) {
              GenConfig cfg = config_of(theory, samples, seed, max_states, alphabet_size, mode,
                                        mts_rule);
              LawVerdict v = check_law(make_handle(cfg), law_from_name(law), cfg);
              py::dict d;
              d["law"] = law_name(v.law);
              d["status"] = status_name(v.status);
              d["samplesChecked"] = v.samples_checked;
              d["inapplicableCount"] = v.inapplicable_count;
              if (v.tracks_premise) d["premiseHits"] = v.premise_hits;
              if (!v.witness.empty()) d["witness"] = v.witness;
              return d;
          },
          py::arg("law"), py::arg("theory"), py::arg("samples") = 1000, py::arg("seed") = 0,
          py::arg("max_states") = 3, py::arg("alphabet_size") = 2, py::arg("mode") = "random",
          py::arg("mts_rule") = "meet");

    m.def("no_universal_table", [](int max_states, int actions) {
        py::list out;
        for (const auto& e : ia::no_universal_witness({max_states, actions})) {
            py::dict d;
            d["candidate"] = render_spec(e.candidate, "candidate");
            d["witness"] = render_spec(e.witness, "witness");
            d["reason"] = e.reason;
            out.append(d);
        }
        return out;
    }, py::arg("max_states") = 2, py::arg("actions") = 2);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });

    py::register_exception<ParseError>(m, "SpecParseError", PyExc_ValueError);
    py::register_exception<AlphabetMismatch>(m, "AlphabetMismatchError", PyExc_ValueError);
    py::register_exception<SignatureMismatch>(m, "SignatureMismatchError", PyExc_ValueError);
    py::register_exception<ControlConflict>(m, "ControlConflictError", PyExc_ValueError);
}
