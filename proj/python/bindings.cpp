#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fractran/compiler.hpp"
#include "fractran/error.hpp"
#include "fractran/interpreter.hpp"
#include "fractran/program.hpp"
#include "fractran/rewrite.hpp"
#include "fractran/stream_spec.hpp"
#include "fractran/trs_format.hpp"
#include "fractran/turing.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Python int <-> mpz_class through the decimal string.
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    py::str s(src);
    return value.set_str(std::string(s), 10) == 0;
  }

  static handle cast(const mpz_class& n, return_value_policy, handle) {
    return PyLong_FromString(n.get_str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

using namespace fractran;

lsf::StreamSpec spec_for(const std::string& source) {
  if (source == "collatz") return lsf::collatz_spec();
  return lsf::induce_spec(parse_program(source == "primegame" ? std::string(kPrimegameText) : source));
}

py::dict verdict_dict(const compiler::SimulationVerdict& v) {
  py::dict d;
  if (auto* ok = std::get_if<compiler::Verified>(&v)) {
    d["verdict"] = "verified";
    d["tm_steps"] = ok->tm_steps;
    d["fractran_steps"] = ok->fractran_steps;
    d["halted"] = ok->halted;
  } else if (auto* bad = std::get_if<compiler::CounterExample>(&v)) {
    d["verdict"] = "counterexample";
    d["details"] = bad->details;
  } else {
    const auto& ex = std::get<compiler::Exhausted>(v);
    d["verdict"] = "exhausted";
    d["tm_steps"] = ex.tm_steps;
    d["fractran_steps"] = ex.fractran_steps;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fractran interpreter, Turing machine compiler and lazy stream specifications";

  py::register_exception<Error>(m, "FractranError", PyExc_ValueError);

  py::class_<FractranProgram>(m, "Program")
      .def(py::init([](const std::string& text) { return parse_program(text); }), py::arg("text"))
      .def_property_readonly("fractions",
                             [](const FractranProgram& p) {
                               std::vector<std::pair<mpz_class, mpz_class>> out;
                               for (const auto& f : p.fractions()) out.emplace_back(f.num, f.den);
                               return out;
                             })
      .def_property_readonly("modulus", &FractranProgram::modulus)
      .def("step", [](const FractranProgram& p, const mpz_class& n) { return step(p, n); }, py::arg("n"))
      .def(
          "run",
          [](const FractranProgram& p, const mpz_class& n0, std::uint64_t fuel) {
            Trace t = run(p, n0, fuel);
            std::vector<mpz_class> values;
            for (const auto& v : t.values) values.push_back(v.value());
            return py::make_tuple(values, is_halted(t.outcome));
          },
          py::arg("n0"), py::arg("fuel"), "Returns (values, halted).")
      .def(
          "halts",
          [](const FractranProgram& p, const mpz_class& n0, std::uint64_t fuel) -> std::optional<std::uint64_t> {
            auto o = halts(p, n0, fuel);
            if (auto* h = std::get_if<Halted>(&o)) return h->steps;
            return std::nullopt;
          },
          py::arg("n0"), py::arg("fuel"), "Steps to halt, or None when fuel runs out.")
      .def("predicted_step", [](const FractranProgram& p, const mpz_class& n) { return lsf::predicted_step(p, n); },
           py::arg("n"))
      .def("__str__", &FractranProgram::to_string)
      .def("__len__", &FractranProgram::size);

  m.def("primegame", [] { return primegame(); });
  m.def(
      "prime_exponents",
      [](std::size_t count, std::uint64_t limit) { return powers_of_two_exponents(primegame(), 2, limit, count); },
      py::arg("count"), py::arg("limit") = 10000000,
      "Exponents of the powers of two PRIMEGAME reaches from 2.");

  m.def(
      "compile_tm",
      [](const std::string& text, bool normalize) {
        tm::UnaryTM machine = tm::parse_tm(text);
        if (normalize) machine = tm::normalize_no_self_loops(machine);
        return compiler::format_listing(machine, compiler::compile(machine));
      },
      py::arg("machine"), py::arg("normalize") = false, "Annotated Fractran listing for a unary TM.");
  m.def(
      "check_simulation",
      [](const std::string& text, const std::string& config, std::uint64_t fuel) {
        tm::UnaryTM machine = tm::parse_tm(text);
        return verdict_dict(compiler::check_simulation(machine, tm::parse_configuration(machine, config), fuel));
      },
      py::arg("machine"), py::arg("config"), py::arg("fuel"));

  m.def("translate", [](const std::string& source) { return lsf::emit_trs(spec_for(source)); }, py::arg("source"),
        "TPDB text of the stream specification for fractions, 'primegame' or 'collatz'.");
  m.def(
      "rewrite_nth",
      [](const std::string& source, const mpz_class& n, std::uint64_t fuel) -> std::optional<std::uint64_t> {
        auto e = lsf::rewrite_nth(spec_for(source), n, fuel);
        if (auto* p = std::get_if<lsf::Produced>(&e)) return p->steps;
        return std::nullopt;
      },
      py::arg("source"), py::arg("n"), py::arg("fuel"), "Rewrite steps to produce element n, or None.");
  m.def(
      "probe",
      [](const std::string& source, std::uint64_t count, std::uint64_t fuel) {
        lsf::StreamSpec spec = spec_for(source);
        lsf::ProbeReport report;
        {
          py::gil_scoped_release release;
          report = lsf::probe_productivity(spec, count, fuel);
        }
        std::vector<std::tuple<std::uint64_t, bool, std::uint64_t>> out;
        for (const auto& e : report.entries) out.emplace_back(e.index, e.produced, e.steps);
        return out;
      },
      py::arg("source"), py::arg("count"), py::arg("fuel"), "(index, produced, steps) per element.");
}
