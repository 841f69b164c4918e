#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "goishi/closedform.hpp"
#include "goishi/core.hpp"
#include "goishi/game.hpp"
#include "goishi/nim.hpp"
#include "goishi/oracle.hpp"
#include "goishi/verify.hpp"

namespace py = pybind11;
using namespace goishi;

PYBIND11_MODULE(_goishi, m) {
  m.doc() = "Seeded mex tables and perfect play for linear two-player goishi hiroi";

  py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);

  py::enum_<SeedKind>(m, "SeedKind")
      .value("G0", SeedKind::G0)
      .value("G1", SeedKind::G1)
      .value("GM1", SeedKind::GM1)
      .value("GM1STAR", SeedKind::GM1Star);

  py::enum_<Convention>(m, "Convention")
      .value("NORMAL", Convention::Normal)
      .value("MISERE", Convention::Misere);

  py::enum_<Outcome>(m, "Outcome").value("P", Outcome::P).value("N", Outcome::N);

  m.def("mex", [](const std::vector<int>& values) { return mex(values); },
        py::arg("values"), "Smallest nonnegative integer not in values; negatives ignored.");

  py::class_<ValueTable>(m, "ValueTable")
      .def_property_readonly("kind", [](const ValueTable& t) { return t.spec().kind(); })
      .def_property_readonly("size", &ValueTable::size)
      .def("value", &ValueTable::value, py::arg("x"), py::arg("y"))
      .def("rows", [](const ValueTable& t) {
        std::vector<std::vector<int>> rows;
        for (std::size_t x = 0; x < t.size(); ++x) {
          auto r = t.row(x);
          rows.emplace_back(r.begin(), r.end());
        }
        return rows;
      })
      .def("__len__", &ValueTable::size);

  m.def("build_table",
        [](SeedKind kind, std::size_t n, std::size_t max_size) {
          return ValueTable::build(kind, n, max_size);
        },
        py::arg("kind"), py::arg("n"), py::arg("max_size") = kDefaultMaxTableSize);

  m.def("nim_grundy", [](const std::vector<std::uint64_t>& piles) { return nim::grundy(piles); },
        py::arg("piles"));
  m.def("nim_outcome_normal",
        [](const std::vector<std::uint64_t>& piles) { return nim::outcome_normal(piles); },
        py::arg("piles"));
  m.def("misere_two_pile_outcome", &nim::misere_two_pile_outcome, py::arg("gm1"),
        py::arg("x"), py::arg("y"));

  py::class_<Position>(m, "Position")
      .def(py::init<std::size_t, std::size_t, std::size_t>(), py::arg("x"), py::arg("y"),
           py::arg("z"))
      .def_readwrite("x", &Position::x)
      .def_readwrite("y", &Position::y)
      .def_readwrite("z", &Position::z)
      .def("as_tuple", [](const Position& p) { return py::make_tuple(p.x, p.y, p.z); })
      .def(py::self == py::self)
      .def("__repr__", [](const Position& p) { return "Position" + to_string(p); });

  py::class_<Move>(m, "Move")
      .def_readonly("source", &Move::from)
      .def_readonly("to", &Move::to)
      .def_property_readonly("pickup", [](const Move& mv) { return mv.pickup.describe(); })
      .def("__repr__", [](const Move& mv) {
        return "Move(" + to_string(mv.from) + " -> " + to_string(mv.to) + ")";
      });

  m.def("moves", &moves, py::arg("position"));
  m.def("canonicalize", [](const Position& p) { return goishi::canonicalize(p); },
        py::arg("position"));

  py::class_<Engine>(m, "Engine")
      .def(py::init<std::size_t, std::size_t>(), py::arg("table_size") = kDefaultMaxTableSize,
           py::arg("max_size") = kDefaultMaxTableSize)
      .def_property_readonly("capacity", &Engine::capacity)
      .def("outcome", &Engine::outcome, py::arg("position"),
           py::arg("convention") = Convention::Normal)
      .def("aux_value", &Engine::aux_value, py::arg("position"),
           py::arg("convention") = Convention::Normal)
      .def("winning_move", &Engine::winning_move, py::arg("position"),
           py::arg("convention") = Convention::Normal)
      .def("engine_move", &Engine::engine_move, py::arg("position"),
           py::arg("convention") = Convention::Normal);

  m.def("in_A", &closedform::in_A, py::arg("k"), py::arg("x"), py::arg("y"));
  m.def("in_B", &closedform::in_B, py::arg("k"), py::arg("x"), py::arg("y"));
  m.def("block_symmetric", &closedform::block_symmetric, py::arg("gm1star"), py::arg("bound"));

  m.def("oracle_goishi_outcome",
        [](const Position& p, Convention c, std::size_t cap) {
          return oracle::solve({p.x, p.y, p.z}, oracle::goishi_graph(cap), c);
        },
        py::arg("position"), py::arg("convention"), py::arg("cap"),
        "Brute-force outcome, independent of the value tables.");

  m.def("verify",
        [](const std::string& check, std::size_t max) {
          auto parsed = verify::parse_check(check);
          if (!parsed) throw py::value_error("unknown check '" + check + "'");
          const auto report = verify::run(*parsed, max);
          py::dict d;
          d["check"] = report.check;
          d["range"] = report.range;
          d["cases"] = report.cases;
          d["mismatches"] = report.mismatches.size();
          d["passed"] = report.passed();
          return d;
        },
        py::arg("check"), py::arg("max"));
}
