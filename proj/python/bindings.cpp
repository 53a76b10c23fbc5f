#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "lvdual/algebra.hpp"
#include "lvdual/cli.hpp"
#include "lvdual/error.hpp"
#include "lvdual/functors.hpp"
#include "lvdual/io.hpp"
#include "lvdual/logic.hpp"
#include "lvdual/spectra.hpp"

namespace py = pybind11;
using namespace lvd;

namespace {

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["check"] = v.check;
  d["passed"] = v.passed;
  if (v.counterexample) {
    py::dict w;
    for (const auto& [k, val] : *v.counterexample) w[py::str(k)] = val;
    d["counterexample"] = w;
  } else {
    d["counterexample"] = py::none();
  }
  d["note"] = v.note;
  return d;
}

// pybind11 holders must be non-const; the library only hands out const pointers
using LatticeHolder = std::shared_ptr<Lattice>;
using AlgebraHolder = std::shared_ptr<Algebra>;

LatticeHolder hold(const LatticePtr& l) { return std::const_pointer_cast<Lattice>(l); }
AlgebraHolder hold(const AlgebraPtr& a) { return std::const_pointer_cast<Algebra>(a); }

Value value_of(const Lattice& l, const std::string& name) { return l.index_of(name); }

Index element_of(const Algebra& a, const std::string& name) {
  auto i = a.find(name);
  if (!i) throw Error(ErrorKind::UnknownElement, "no element '" + name + "' in the algebra");
  return *i;
}

Assignment to_assignment(const Algebra& a, const std::map<std::string, std::string>& values) {
  Assignment out;
  for (const auto& [var, elem] : values) out.emplace(var, element_of(a, elem));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite verifier for lattice-valued Stone and Jonsson-Tarski dualities";
  m.attr("__version__") = std::string(kToolVersion);

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, ("[" + std::string(to_string(e.kind())) + "] " + e.what()).c_str());
    }
  });

  py::class_<Lattice, LatticeHolder>(m, "Lattice")
      .def_property_readonly("name", &Lattice::name)
      .def_property_readonly("elements", &Lattice::elements)
      .def_property_readonly("bottom", [](const Lattice& l) { return l.element_name(l.bottom()); })
      .def_property_readonly("top", [](const Lattice& l) { return l.element_name(l.top()); })
      .def("__len__", &Lattice::size)
      .def("leq", [](const Lattice& l, const std::string& a, const std::string& b) {
        return l.leq(value_of(l, a), value_of(l, b));
      })
      .def("meet", [](const Lattice& l, const std::string& a, const std::string& b) {
        return l.element_name(l.meet(value_of(l, a), value_of(l, b)));
      })
      .def("join", [](const Lattice& l, const std::string& a, const std::string& b) {
        return l.element_name(l.join(value_of(l, a), value_of(l, b)));
      })
      .def("imp", [](const Lattice& l, const std::string& a, const std::string& b) {
        return l.element_name(l.imp(value_of(l, a), value_of(l, b)));
      })
      .def("truth", [](const Lattice& l, const std::string& r, const std::string& x) { return truth_op(l, r, x); })
      .def("up", [](const Lattice& l, const std::string& r, const std::string& x) { return u_op(l, r, x); })
      .def("__repr__", [](const Lattice& l) { return "<Lattice " + l.name() + " size=" + std::to_string(l.size()) + ">"; });

  py::class_<Algebra, AlgebraHolder>(m, "Algebra")
      .def_property_readonly("lattice", [](const Algebra& a) { return hold(a.lattice_ptr()); })
      .def_property_readonly("elements", &Algebra::element_names)
      .def_property_readonly("is_modal", &Algebra::is_modal)
      .def_property_readonly("bottom", [](const Algebra& a) { return a.element_name(a.bottom()); })
      .def_property_readonly("top", [](const Algebra& a) { return a.element_name(a.top()); })
      .def("__len__", &Algebra::size)
      .def("meet", [](const Algebra& a, const std::string& x, const std::string& y) {
        return a.element_name(a.meet(element_of(a, x), element_of(a, y)));
      })
      .def("join", [](const Algebra& a, const std::string& x, const std::string& y) {
        return a.element_name(a.join(element_of(a, x), element_of(a, y)));
      })
      .def("imp", [](const Algebra& a, const std::string& x, const std::string& y) {
        return a.element_name(a.imp(element_of(a, x), element_of(a, y)));
      })
      .def("box", [](const Algebra& a, const std::string& x) { return a.element_name(a.box(element_of(a, x))); })
      .def("validate", [](const Algebra& a) { return verdict_dict(a.is_modal() ? validate_ml(a) : validate_vl(a)); })
      .def("__repr__", [](const Algebra& a) {
        return std::string("<Algebra size=") + std::to_string(a.size()) + (a.is_modal() ? " modal>" : ">");
      });

  m.def(
      "builtin_lattice",
      [](const std::string& name) {
        auto l = builtin_lattice(name);
        if (!l) throw Error(ErrorKind::UsageError, "unknown lattice '" + name + "'");
        return hold(l);
      },
      py::arg("name"), "L2, L3, L4 or diamond");
  m.def(
      "lattice",
      [](std::vector<std::string> elements, const std::vector<std::pair<std::string, std::string>>& leq,
         std::string name) { return hold(build_lattice(std::move(elements), leq, std::move(name))); },
      py::arg("elements"), py::arg("leq"), py::arg("name") = std::string{},
        "Lattice generated by the reflexive-transitive closure of the given pairs");

  m.def(
      "functional_algebra",
      [](const LatticeHolder& lattice, std::vector<std::string> points,
         const std::vector<std::map<std::string, std::string>>& generators,
         const std::optional<std::vector<std::pair<std::string, std::string>>>& box_relation) {
        std::vector<Function> gens;
        for (const auto& g : generators) {
          Function f;
          for (const auto& p : points) {
            auto it = g.find(p);
            if (it == g.end()) throw Error(ErrorKind::SchemaError, "generator misses point '" + p + "'");
            f.push_back(lattice->index_of(it->second));
          }
          gens.push_back(std::move(f));
        }
        std::optional<Relation> rel;
        if (box_relation) {
          auto index = [&](const std::string& p) {
            for (std::size_t i = 0; i < points.size(); ++i)
              if (points[i] == p) return i;
            throw Error(ErrorKind::SchemaError, "unknown point '" + p + "'");
          };
          rel.emplace(points.size());
          for (const auto& [a, b] : *box_relation) rel->set(index(a), index(b));
        }
        return hold(functional_algebra(lattice, points, gens, rel));
      },
      py::arg("lattice"), py::arg("points"), py::arg("generators"), py::arg("box_relation") = py::none());

  m.def(
      "load",
      [](const std::filesystem::path& path) {
        auto d = load(path);
        py::dict out;
        out["kind"] = std::string(to_string(d.kind));
        out["lattice"] = hold(d.lattice);
        out["algebra"] = d.algebra ? py::cast(hold(d.algebra)) : py::none();
        return out;
      },
      py::arg("path"));

  m.def("serialize", [](const AlgebraHolder& a) { return serialize(*a); });
  m.def("serialize", [](const LatticeHolder& l) { return serialize(*l); });

  m.def(
      "parse_formula", [](const std::string& text, const Lattice& l) { return print(parse(text, l), l); },
      py::arg("text"), py::arg("lattice"), "Parses and prints back in canonical form");
  m.def(
      "eval_formula",
      [](const std::string& text, const AlgebraHolder& a, const std::map<std::string, std::string>& assignment) {
        return a->element_name(eval_algebra(parse(text, a->lattice()), *a, to_assignment(*a, assignment)));
      },
      py::arg("formula"), py::arg("algebra"), py::arg("assignment") = std::map<std::string, std::string>{});
  m.def(
      "check_validity",
      [](const std::string& text, const AlgebraHolder& a) {
        return verdict_dict(check_validity(parse(text, a->lattice()), *a));
      },
      py::arg("formula"), py::arg("algebra"));

  m.def(
      "spec",
      [](const AlgebraHolder& a) {
        py::list out;
        for (const auto& h : spec(a)) {
          py::dict d;
          for (std::size_t i = 0; i < h.map.size(); ++i)
            d[py::str(a->element_name(static_cast<Index>(i)))] = h.target->element_name(h.map[i]);
          out.append(d);
        }
        return out;
      },
      py::arg("algebra"), "Homomorphisms into the lattice, as element-name maps");
  m.def(
      "duality_roundtrip",
      [](const AlgebraHolder& a, std::optional<bool> modal) {
        return verdict_dict(verify_duality_roundtrip(a, modal.value_or(a->is_modal())));
      },
      py::arg("algebra"), py::arg("modal") = py::none());

  m.def(
      "run_command",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = run_command(args, out, err);
        }
        return py::make_tuple(code, out.str());
      },
      py::arg("args"), "Runs a CLI command; returns (exit code, JSON report)");
}
