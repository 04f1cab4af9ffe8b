#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

#include "bgsys/chiral.hpp"
#include "bgsys/commutant.hpp"
#include "bgsys/expr.hpp"
#include "bgsys/grdring.hpp"
#include "bgsys/hilbert.hpp"
#include "bgsys/liereps.hpp"
#include "bgsys/suites.hpp"

namespace py = pybind11;

namespace {

using RepPtr = std::shared_ptr<bgsys::LieRepData>;

// A state bundled with its representation so it can print itself.
struct PyState {
  RepPtr rep;
  bgsys::FockState state;

  std::string repr() const { return state.str(rep->v_basis); }
};

bgsys::Rational scalar_from(const py::object& o) {
  if (py::isinstance<py::int_>(o) || py::isinstance<py::str>(o))
    return bgsys::Rational(py::str(o).cast<std::string>());
  throw bgsys::error("scalars are ints or 'p/q' strings");
}

void require_same_rep(const PyState& a, const PyState& b) {
  if (a.rep != b.rep && a.rep->name != b.rep->name)
    throw bgsys::error("states belong to different representations");
}

bgsys::InvariantSpace space_from(const std::string& name) {
  if (name == "p0-full") return bgsys::InvariantSpace::p0_full;
  if (name == "symv*") return bgsys::InvariantSpace::sym_v_star;
  throw bgsys::error("unknown invariant space '" + name + "' (use p0-full or symv*)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact engine for beta-gamma system vertex algebras";

  py::register_exception<bgsys::error>(m, "EngineError");

  py::class_<bgsys::LieRepData, RepPtr>(m, "Rep")
      .def_property_readonly("name", [](const bgsys::LieRepData& r) { return r.name; })
      .def_property_readonly("g_dim", [](const bgsys::LieRepData& r) { return r.g_dim; })
      .def_property_readonly("v_dim", [](const bgsys::LieRepData& r) { return r.v_dim; })
      .def_property_readonly("basis", [](const bgsys::LieRepData& r) { return r.basis; })
      .def("weights", [](const bgsys::LieRepData& r) { return bgsys::weight_multiset(r); })
      .def("__repr__",
           [](const bgsys::LieRepData& r) { return "<Rep " + r.name + ">"; });

  py::class_<PyState>(m, "State")
      .def("__repr__", &PyState::repr)
      .def("__str__", &PyState::repr)
      .def("__add__",
           [](const PyState& a, const PyState& b) {
             require_same_rep(a, b);
             return PyState{a.rep, a.state + b.state};
           })
      .def("__sub__",
           [](const PyState& a, const PyState& b) {
             require_same_rep(a, b);
             return PyState{a.rep, a.state - b.state};
           })
      .def("__rmul__",
           [](const PyState& a, const py::object& c) {
             return PyState{a.rep, scalar_from(c) * a.state};
           })
      .def("__eq__", [](const PyState& a, const PyState& b) { return a.state == b.state; })
      .def("__ne__", [](const PyState& a, const PyState& b) { return a.state != b.state; })
      .def("is_zero", [](const PyState& a) { return a.state.is_zero(); })
      .def("weight", [](const PyState& a) {
        long w = 0;
        if (!a.state.is_homogeneous(&w)) throw bgsys::error("state is not weight homogeneous");
        return w;
      });

  m.def(
      "load_rep",
      [](const std::string& name) { return std::make_shared<bgsys::LieRepData>(bgsys::builtin_rep(name)); },
      py::arg("name") = "sl2-adjoint");
  m.def("load_rep_json", [](const std::string& text) {
    return std::make_shared<bgsys::LieRepData>(bgsys::load_rep_json(text));
  });

  m.def("parse", [](RepPtr rep, const std::string& text) {
    return PyState{rep, bgsys::parse_operator_expr(text, *rep)};
  });
  m.def("vacuum", [](RepPtr rep) { return PyState{rep, bgsys::FockState::vacuum()}; });

  m.def("nth", [](const PyState& a, long n, const PyState& b) {
    require_same_rep(a, b);
    return PyState{a.rep, bgsys::nth_product(a.state, n, b.state)};
  });
  m.def("wick", [](const PyState& a, const PyState& b) {
    require_same_rep(a, b);
    return PyState{a.rep, bgsys::wick(a.state, b.state)};
  });
  m.def("derivative", [](const PyState& a) { return PyState{a.rep, bgsys::derivative(a.state)}; });
  m.def("ope", [](const PyState& a, const PyState& b) {
    require_same_rep(a, b);
    py::dict out;
    for (auto& [n, s] : bgsys::ope_singular(a.state, b.state))
      out[py::int_(n)] = PyState{a.rep, s};
    return out;
  });

  m.def("currents", [](RepPtr rep) {
    bgsys::CurrentSet cs = bgsys::build_currents(*rep);
    py::dict out;
    for (int i = 0; i < rep->g_dim; ++i)
      out[py::str(rep->basis[i])] = PyState{rep, cs.hat[i]};
    return out;
  });
  m.def("sl2_triple", [](RepPtr rep) {
    bgsys::Sl2Triple tr = bgsys::build_sl2_triple(*rep);
    py::dict out;
    out["e"] = PyState{rep, tr.v_e};
    out["f"] = PyState{rep, tr.v_f};
    out["h"] = PyState{rep, tr.v_h};
    return out;
  });
  m.def(
      "conformal",
      [](RepPtr rep, const std::string& kind) {
        bgsys::ConformalKind k;
        if (kind == "S")
          k = bgsys::ConformalKind::free_field;
        else if (kind == "O")
          k = bgsys::ConformalKind::current;
        else if (kind == "total")
          k = bgsys::ConformalKind::total;
        else
          throw bgsys::error("conformal kind is 'S', 'O' or 'total'");
        return PyState{rep, bgsys::build_conformal(*rep, k).state};
      },
      py::arg("rep"), py::arg("kind") = "S");

  m.def(
      "hilbert_series",
      [](const std::vector<long>& weights, int trunc) {
        bgsys::TSeries s = bgsys::residue_extract(bgsys::q_hilbert(weights, trunc));
        std::vector<std::string> out;
        for (int k = 0; k <= s.trunc(); ++k) out.push_back(s.coeff(k).str());
        return out;
      },
      py::arg("weights"), py::arg("trunc") = 20);

  m.def("invariant_dimension", [](RepPtr rep, const std::string& space, int d) {
    return bgsys::invariant_dimension(*rep, space_from(space), d);
  });

  m.def(
      "verify",
      [](RepPtr rep, const std::string& suite, int trunc, int dmax, int kmax,
         std::uint64_t seed) {
        bgsys::RunConfig cfg;
        cfg.rep = rep->name;
        cfg.trunc = trunc;
        cfg.dmax = dmax;
        cfg.kmax = kmax;
        cfg.seed = seed;
        bgsys::Report rep_out = bgsys::run_suite(suite, *rep, cfg);
        py::object loads = py::module_::import("json").attr("loads");
        return loads(rep_out.to_json_string());
      },
      py::arg("rep"), py::arg("suite") = "all", py::arg("trunc") = 20, py::arg("dmax") = 8,
      py::arg("kmax") = 4, py::arg("seed") = 20240001ULL);
}
