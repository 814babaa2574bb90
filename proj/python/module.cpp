// Python bindings for the main operations: group arithmetic, the reductions
// in both directions, the universal system, bounded solvers, and the matrix
// embedding.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nilknap/compile.hpp"
#include "nilknap/format.hpp"
#include "nilknap/heisenberg.hpp"
#include "nilknap/symbolic.hpp"
#include "nilknap/universal.hpp"

namespace py = pybind11;
using namespace nilknap;

namespace pybind11::detail {

// mpz_class <-> python int, bridged through decimal strings so values of any
// size stay exact.
template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        PyObject* str = PyObject_Str(src.ptr());
        if (str == nullptr) return false;
        const char* text = PyUnicode_AsUTF8(str);
        if (text == nullptr) {
            Py_DECREF(str);
            return false;
        }
        value = mpz_class(text);
        Py_DECREF(str);
        return true;
    }

    static handle cast(const mpz_class& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

py::object witness_to_py(const std::optional<Witness>& w) {
    if (!w) return py::none();
    py::dict d;
    for (const auto& [name, value] : w->assignment) d[py::str(name)] = py::cast(value);
    return d;
}

std::string residual_text(const HeisenbergReduction& red) {
    GeneralPoly lhs;
    for (const auto& [key, c] : red.residual.quadratic())
        lhs.add_monomial({key.first, key.second}, c);
    for (const auto& [v, c] : red.residual.linear().terms()) lhs.add_monomial({v}, c);
    return print_poly(lhs) + " = " + red.residual_rhs.get_str();
}

}  // namespace

PYBIND11_MODULE(nilknap, m) {
    m.doc() = "exact knapsack <-> Diophantine reductions in free class-2 nilpotent groups";

    py::register_exception<NonMaterializable>(m, "NonMaterializableError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "FormatParseError", PyExc_ValueError);
    py::register_exception<DecodeError>(m, "DecodeError", PyExc_ValueError);

    py::class_<Word>(m, "Word")
        .def(py::init<int>(), py::arg("rank"))
        .def(py::init([](int rank, const std::vector<std::pair<int, Integer>>& letters) {
                 Word w(rank);
                 for (const auto& [g, e] : letters) w.append(g, e);
                 return w;
             }),
             py::arg("rank"), py::arg("letters"))
        .def_property_readonly("rank", &Word::rank)
        .def("append", &Word::append, py::arg("generator"), py::arg("exponent"))
        .def("letters",
             [](const Word& w) {
                 std::vector<std::pair<int, Integer>> out;
                 for (const auto& l : w.letters()) out.emplace_back(l.generator, l.exponent);
                 return out;
             })
        .def("inverse", &Word::inverse)
        .def(py::self * py::self)
        .def("__len__", &Word::length);

    py::class_<NormalForm>(m, "NormalForm")
        .def(py::init<int>(), py::arg("rank"))
        .def_static("identity", &NormalForm::identity, py::arg("rank"))
        .def_static("generator", &NormalForm::generator, py::arg("rank"), py::arg("index"),
                    py::arg("exponent") = Integer(1))
        .def_static("basic_commutator", &NormalForm::basic_commutator, py::arg("rank"),
                    py::arg("i"), py::arg("j"), py::arg("exponent") = Integer(1))
        .def_property_readonly("rank", &NormalForm::rank)
        .def("alpha", [](const NormalForm& nf, int i) { return nf.alpha(i); }, py::arg("i"))
        .def("beta", [](const NormalForm& nf, int i, int j) { return nf.beta(i, j); },
             py::arg("i"), py::arg("j"))
        .def("is_identity", &NormalForm::is_identity)
        .def("is_central", &NormalForm::is_central)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__repr__", [](const NormalForm& nf) { return print_normal_form(nf); });

    m.def("reduce_word", &reduce_word, py::arg("word"));
    m.def("multiply", &multiply, py::arg("a"), py::arg("b"));
    m.def("inverse", py::overload_cast<const NormalForm&>(&inverse), py::arg("a"));
    m.def("power", &power, py::arg("a"), py::arg("e"));
    m.def("commutator", py::overload_cast<const NormalForm&, const NormalForm&>(&commutator),
          py::arg("a"), py::arg("b"));
    m.def("spell", &spell, py::arg("normal_form"));

    py::class_<KPInstance>(m, "KPInstance")
        .def(py::init<>())
        .def_readwrite("rank", &KPInstance::rank)
        .def_readwrite("inputs", &KPInstance::inputs)
        .def_readwrite("target", &KPInstance::target)
        .def_readwrite("variable_map", &KPInstance::variable_map)
        .def("__len__", &KPInstance::size)
        .def("to_text", &print_instance)
        .def("__repr__", [](const KPInstance& i) {
            return "<KPInstance rank=" + std::to_string(i.rank) + " inputs=" +
                   std::to_string(i.inputs.size()) + ">";
        });

    m.def("evaluate_kp",
          [](const KPInstance& inst, const std::vector<Integer>& eps) {
              auto [nf, hit] = evaluate_kp(inst, eps);
              return py::make_tuple(nf, hit);
          },
          py::arg("instance"), py::arg("eps"));

    py::class_<DiophantineSystem>(m, "DiophantineSystem")
        .def(py::init<>())
        .def_property_readonly("variables",
                               [](const DiophantineSystem& s) { return s.variables; })
        .def_property_readonly(
            "num_equations",
            [](const DiophantineSystem& s) { return s.equations.size(); })
        .def("degree", &DiophantineSystem::degree)
        .def("satisfied_by",
             [](const DiophantineSystem& s, const std::map<std::string, Integer>& values) {
                 return s.satisfied_by(values);
             },
             py::arg("assignment"))
        .def("to_text", &print_system)
        .def("__repr__", [](const DiophantineSystem& s) {
            return "<DiophantineSystem vars=" + std::to_string(s.variables.size()) +
                   " equations=" + std::to_string(s.equations.size()) + ">";
        });

    m.def("parse_system", &parse_system, py::arg("text"));
    m.def("parse_instance", &parse_instance, py::arg("text"));

    m.def("kp_to_system", &kp_to_system, py::arg("instance"));
    m.def("degree_reduce", &degree_reduce, py::arg("system"));
    m.def("nonneg_encode",
          [](const DiophantineSystem& sys, const std::string& mode) {
              if (mode == "positive") return nonneg_encode(sys, NonnegMode::Positive);
              if (mode == "nonnegative") return nonneg_encode(sys, NonnegMode::Nonnegative);
              throw std::invalid_argument("mode is 'positive' or 'nonnegative'");
          },
          py::arg("system"), py::arg("mode") = "positive");

    py::class_<CompileResult>(m, "CompileResult")
        .def_readonly("instance", &CompileResult::instance)
        .def_property_readonly("rank",
                               [](const CompileResult& c) { return c.log.rank; })
        .def("counts",
             [](const CompileResult& c) {
                 py::dict d;
                 d["equation_carriers"] = c.log.equation_carriers;
                 d["letter_pairs"] = c.log.letter_pairs;
                 d["internal_ties"] = c.log.internal_ties;
                 d["reuse_ties"] = c.log.reuse_ties;
                 d["accumulators"] = c.log.accumulators;
                 d["forced_constants"] = c.log.forced_constants;
                 d["total_commutators"] = c.log.total_commutators();
                 return d;
             })
        .def("slot_roles", [](const CompileResult& c) {
            std::vector<std::string> roles;
            for (const auto& s : c.log.slots) roles.push_back(s.role);
            return roles;
        });

    m.def("compile_quadratic",
          [](const DiophantineSystem& sys, bool packed) {
              CommutatorPool pool(packed);
              return compile_quadratic(sys, pool);
          },
          py::arg("system"), py::arg("packed") = false);
    m.def("compile_terms",
          [](const DiophantineSystem& sys, bool packed) {
              CommutatorPool pool(packed);
              return compile_terms(sys, pool);
          },
          py::arg("system"), py::arg("packed") = false);
    m.def("extend_witness",
          [](const CompileResult& compiled, const std::map<std::string, Integer>& sigma) {
              return extend_witness(compiled, sigma);
          },
          py::arg("compiled"), py::arg("solution"));

    py::class_<SearchBox>(m, "SearchBox")
        .def(py::init<>())
        .def_static("symmetric", &SearchBox::symmetric, py::arg("n"), py::arg("radius"))
        .def_readwrite("bounds", &SearchBox::bounds)
        .def("__len__", &SearchBox::size);

    m.def("induced_box", &induced_box, py::arg("compiled"), py::arg("system"), py::arg("box"));

    m.def("bounded_solve_system",
          [](const DiophantineSystem& sys, const SearchBox& box, int jobs) {
              return witness_to_py(bounded_solve_system(sys, box, jobs));
          },
          py::arg("system"), py::arg("box"), py::arg("jobs") = 1);
    m.def("bounded_solve_kp",
          [](const KPInstance& inst, const SearchBox& box, int jobs) {
              return witness_to_py(bounded_solve_kp(inst, box, jobs));
          },
          py::arg("instance"), py::arg("box"), py::arg("jobs") = 1);

    py::class_<HeisenbergReduction>(m, "HeisenbergReduction")
        .def_readonly("linear_consistent", &HeisenbergReduction::linear_consistent)
        .def_readonly("params", &HeisenbergReduction::params)
        .def_readonly("particular", &HeisenbergReduction::particular)
        .def_readonly("basis", &HeisenbergReduction::basis)
        .def_readonly("residual_rhs", &HeisenbergReduction::residual_rhs)
        .def("residual_text", &residual_text)
        .def("eps_of", &HeisenbergReduction::eps_of, py::arg("t"));

    m.def("heisenberg_reduce", &heisenberg_reduce, py::arg("instance"));
    m.def("heisenberg_parameter_box",
          [](const HeisenbergReduction& red, const SearchBox& box) -> py::object {
              auto p = heisenberg_parameter_box(red, box);
              return p ? py::cast(*p) : py::none();
          },
          py::arg("reduction"), py::arg("eps_box"));

    py::class_<UniversalParams>(m, "UniversalParams")
        .def(py::init([](Integer x, Integer z, Integer y, Integer u,
                         std::optional<Integer> toy) {
                 UniversalParams p;
                 p.x = std::move(x);
                 p.z = std::move(z);
                 p.y = std::move(y);
                 p.u = std::move(u);
                 p.toy_exponent = std::move(toy);
                 return p;
             }),
             py::arg("x") = 1, py::arg("z") = 1, py::arg("y") = 1, py::arg("u") = 1,
             py::arg("toy_exponent") = py::none());

    m.def("jones_system", &jones_system, py::arg("params"));
    m.def("resource_report",
          [](const DiophantineSystem& sys, const CompileResult& compiled) {
              return resource_report(sys, compiled).render();
          },
          py::arg("system"), py::arg("compiled"));

    py::class_<UnitriangularMatrix>(m, "UnitriangularMatrix")
        .def_static("identity", &UnitriangularMatrix::identity, py::arg("dim"))
        .def_property_readonly("dim", &UnitriangularMatrix::dim)
        .def("entry", &UnitriangularMatrix::entry, py::arg("i"), py::arg("j"))
        .def("rows",
             [](const UnitriangularMatrix& mat) {
                 std::vector<std::vector<Integer>> rows;
                 for (int i = 1; i <= mat.dim(); ++i) {
                     std::vector<Integer> row;
                     for (int j = 1; j <= mat.dim(); ++j) row.push_back(mat.entry(i, j));
                     rows.push_back(std::move(row));
                 }
                 return rows;
             })
        .def("inverse", &UnitriangularMatrix::inverse)
        .def("is_identity", &UnitriangularMatrix::is_identity)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def(py::self != py::self);

    m.def("rho_generator", &rho_generator, py::arg("i"), py::arg("n"));
    m.def("rho_word", &rho_word, py::arg("word"));
    m.def("matrix_commutator", &matrix_commutator, py::arg("a"), py::arg("b"));
    m.def("matrix_to_normal_form", &matrix_to_normal_form, py::arg("matrix"), py::arg("rank"));
}
