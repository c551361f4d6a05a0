#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fuzzydepth/dataset.hpp"
#include "fuzzydepth/depth.hpp"
#include "fuzzydepth/errors.hpp"
#include "fuzzydepth/metrics.hpp"
#include "fuzzydepth/pseudosimplex.hpp"
#include "fuzzydepth/simulate.hpp"

namespace py = pybind11;
using namespace fuzzydepth;

namespace {

Sample sample_from_rows(
    const std::vector<std::tuple<double, double, double, double>>& rows,
    const std::vector<std::uint32_t>& counts) {
  std::vector<SampleItem> items;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto [a, b, c, d] = rows[i];
    Trapezoid t = make_trapezoid(a, b, c, d);
    std::uint32_t count = counts.empty() ? 1 : counts.at(i);
    items.push_back({FuzzyNumber::from_trapezoid(t), t, count, ""});
  }
  return Sample(std::move(items));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Simplicial depth functions for fuzzy-number data";

  py::register_exception<Error>(m, "FuzzyDepthError");

  py::enum_<Direction>(m, "Direction")
      .value("minus", Direction::minus)
      .value("plus", Direction::plus);

  py::enum_<Metric>(m, "Metric")
      .value("d_r", Metric::d_r)
      .value("d_inf", Metric::d_inf)
      .value("rho_r", Metric::rho_r);

  py::enum_<PairRule>(m, "PairRule")
      .value("strict", PairRule::strict)
      .value("with_diagonal", PairRule::with_diagonal);

  py::enum_<PairScheme>(m, "PairScheme")
      .value("distinct_pairs", PairScheme::distinct_pairs)
      .value("iid_pairs", PairScheme::iid_pairs);

  py::class_<Trapezoid>(m, "Trapezoid")
      .def(py::init(&make_trapezoid), py::arg("a"), py::arg("b"), py::arg("c"),
           py::arg("d"))
      .def_readonly("a", &Trapezoid::a)
      .def_readonly("b", &Trapezoid::b)
      .def_readonly("c", &Trapezoid::c)
      .def_readonly("d", &Trapezoid::d)
      .def("__repr__", [](const Trapezoid& t) {
        return "Trapezoid(" + format_roundtrip(t.a) + ", " +
               format_roundtrip(t.b) + ", " + format_roundtrip(t.c) + ", " +
               format_roundtrip(t.d) + ")";
      });

  py::class_<FuzzyNumber>(m, "FuzzyNumber")
      .def_static("from_trapezoid", &FuzzyNumber::from_trapezoid)
      .def_static("crisp", &FuzzyNumber::crisp)
      .def_static("singleton", &FuzzyNumber::singleton)
      .def_static(
          "from_profiles",
          [](const std::vector<double>& knots_u, const std::vector<double>& vals_u,
             const std::vector<double>& knots_l, const std::vector<double>& vals_l) {
            return FuzzyNumber(PLFunction(knots_u, vals_u),
                               PLFunction(knots_l, vals_l));
          },
          py::arg("upper_knots"), py::arg("upper_values"),
          py::arg("lower_neg_knots"), py::arg("lower_neg_values"))
      .def("support", &FuzzyNumber::support, py::arg("u"), py::arg("alpha"))
      .def("level_inf", &FuzzyNumber::level_inf)
      .def("level_sup", &FuzzyNumber::level_sup)
      .def("__eq__", [](const FuzzyNumber& a, const FuzzyNumber& b) {
        return a == b;
      });

  py::class_<Sample>(m, "Sample")
      .def(py::init(&sample_from_rows), py::arg("rows"),
           py::arg("counts") = std::vector<std::uint32_t>{})
      .def("expanded_size", &Sample::expanded_size)
      .def("distinct_size", &Sample::distinct_size)
      .def("trapezoids", [](const Sample& s) {
        std::vector<Trapezoid> out;
        for (const SampleItem& it : s.items())
          if (it.shape) out.push_back(*it.shape);
        return out;
      });

  py::class_<Interval>(m, "Interval")
      .def(py::init(&make_interval), py::arg("lo"), py::arg("hi"))
      .def_readonly("lo", &Interval::lo)
      .def_readonly("hi", &Interval::hi);

  py::class_<DiscreteFuzzyRV>(m, "DiscreteFuzzyRV")
      .def(py::init<std::vector<FuzzyNumber>, std::vector<double>>(),
           py::arg("atoms"), py::arg("probs"))
      .def("cdf", &DiscreteFuzzyRV::cdf)
      .def("point_mass", &DiscreteFuzzyRV::point_mass);

  py::class_<DepthTriple>(m, "DepthTriple")
      .def_readonly("d_ns", &DepthTriple::d_ns)
      .def_readonly("d_ms", &DepthTriple::d_ms)
      .def_readonly("d_fs", &DepthTriple::d_fs);

  py::class_<PopulationDepths>(m, "PopulationDepths")
      .def_readonly("d_ms", &PopulationDepths::d_ms)
      .def_readonly("d_fs", &PopulationDepths::d_fs);

  py::class_<DepthReport::Row>(m, "DepthRow")
      .def_readonly("d_ns", &DepthReport::Row::d_ns)
      .def_readonly("d_ms", &DepthReport::Row::d_ms)
      .def_readonly("d_fs", &DepthReport::Row::d_fs)
      .def_readonly("rank_ns", &DepthReport::Row::rank_ns)
      .def_readonly("rank_ms", &DepthReport::Row::rank_ms)
      .def_readonly("rank_fs", &DepthReport::Row::rank_fs);

  py::class_<DepthReport>(m, "DepthReport")
      .def_readonly("rows", &DepthReport::rows)
      .def_readonly("median", &DepthReport::median)
      .def_readonly("max_ns", &DepthReport::max_ns)
      .def_readonly("max_ms", &DepthReport::max_ms)
      .def_readonly("max_fs", &DepthReport::max_fs);

  m.def("add", &add);
  m.def("scale", &scale);
  m.def("convex_combination", &convex_combination);
  m.def("rr_leq", &rr_leq);
  m.def("distance", &distance, py::arg("a"), py::arg("b"), py::arg("metric"),
        py::arg("r") = 1.0);

  m.def("sc_contains",
        [](const std::vector<Interval>& gens, const Interval& cand) {
          return sc_contains(gens, cand);
        });
  m.def("sf_contains",
        [](const std::vector<FuzzyNumber>& gens, const FuzzyNumber& cand) {
          return sf_contains(gens, cand);
        });
  m.def("convex_hull_member",
        [](const std::vector<FuzzyNumber>& gens, const std::vector<double>& w) {
          return convex_hull_member(gens, w);
        });
  m.def("between", &between);

  m.def("pair_measure", &pair_measure);
  m.def("empirical_depths", &empirical_depths, py::arg("sample"),
        py::arg("query"), py::arg("rule") = PairRule::strict);
  m.def("containment_probability",
        py::overload_cast<const DiscreteFuzzyRV&, const FuzzyNumber&, Direction,
                          double>(&containment_probability));
  m.def("population_depths",
        py::overload_cast<const DiscreteFuzzyRV&, const FuzzyNumber&, PairScheme>(
            &population_depths),
        py::arg("rv"), py::arg("query"),
        py::arg("scheme") = PairScheme::distinct_pairs);
  m.def("median_trapezoid", [](const std::vector<Trapezoid>& shapes) {
    return median_trapezoid(shapes);
  });
  m.def("rank_sample", &rank_sample, py::arg("sample"),
        py::arg("rule") = PairRule::strict);
  m.def("rank_queries", &rank_queries, py::arg("sample"), py::arg("queries"),
        py::arg("rule") = PairRule::strict);

  m.def(
      "simulate",
      [](std::uint64_t n, std::uint64_t seed, double sigma, unsigned dof) {
        return simulate_trapezoids(SimConfig{n, seed, sigma, dof});
      },
      py::arg("n"), py::arg("seed"), py::arg("sigma") = 10.0,
      py::arg("dof") = 1);
  m.def("f_symmetric",
        [](const DiscreteFuzzyRV& rv, const FuzzyNumber& center,
           const std::vector<double>& grid) {
          return f_symmetric(rv, center, grid);
        },
        py::arg("rv"), py::arg("center"),
        py::arg("alpha_grid") = std::vector<double>{});
  m.def("mc_containment", &mc_containment, py::arg("rv"), py::arg("query"),
        py::arg("u"), py::arg("alpha"), py::arg("trials"), py::arg("seed"));

  m.def("load_csv", &load_csv_file, py::arg("path"));
}
