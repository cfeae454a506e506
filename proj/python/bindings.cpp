#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dualbin/advice.hpp"
#include "dualbin/brute_force.hpp"
#include "dualbin/errors.hpp"
#include "dualbin/generator.hpp"
#include "dualbin/greedy.hpp"
#include "dualbin/grouped.hpp"
#include "dualbin/instance.hpp"
#include "dualbin/ptas.hpp"
#include "dualbin/reduction.hpp"

namespace py = pybind11;
using namespace dualbin;

namespace {

std::vector<std::string> weight_strings(const std::vector<Weight>& ws) {
  std::vector<std::string> out;
  out.reserve(ws.size());
  for (const Weight& w : ws) out.push_back(w.str());
  return out;
}

Instance make_instance(const std::vector<std::string>& weights, std::uint64_t bins) {
  Instance inst;
  inst.bins = bins;
  for (const std::string& w : weights) {
    Weight parsed = Weight::parse(w);
    if (parsed.is_zero() || parsed > Weight::one())
      throw std::invalid_argument("weight " + w + " is outside (0, 1]");
    inst.weights.push_back(std::move(parsed));
  }
  return inst;
}

}  // namespace

PYBIND11_MODULE(_dualbin, mod) {
  mod.doc() = "exact dual bin packing solvers and the online advice protocol";

  py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceLimitError>(mod, "ResourceLimitError",
                                             PyExc_RuntimeError);
  py::register_exception<ProtocolError>(mod, "ProtocolError", PyExc_RuntimeError);

  py::class_<Weight>(mod, "Weight")
      .def(py::init([](const std::string& text) { return Weight::parse(text); }))
      .def_static("parse", &Weight::parse)
      .def("__str__", &Weight::str)
      .def("__repr__", [](const Weight& w) { return "Weight('" + w.str() + "')"; })
      .def("__float__", &Weight::to_double)
      .def("__add__", &Weight::operator+)
      .def("__mul__", &Weight::operator*)
      .def("__eq__", [](const Weight& a, const Weight& b) { return a == b; })
      .def("__lt__", [](const Weight& a, const Weight& b) { return a < b; })
      .def("__le__", [](const Weight& a, const Weight& b) { return a <= b; })
      .def_property_readonly("exponent", &Weight::exponent);

  py::class_<Instance>(mod, "Instance")
      .def(py::init(&make_instance), py::arg("weights"), py::arg("bins"))
      .def_property_readonly("n", &Instance::size)
      .def_property_readonly("m", [](const Instance& i) { return i.bins; })
      .def_property_readonly("s", &Instance::max_bit_size)
      .def_property_readonly(
          "weights", [](const Instance& i) { return weight_strings(i.weights); })
      .def("serialize", &serialize_instance)
      .def("__len__", &Instance::size);

  mod.def("parse_instance", &parse_instance);

  py::class_<Packing>(mod, "Packing")
      .def_property_readonly(
          "assignment", [](const Packing& p) { return p.assignment; })
      .def_property_readonly("packed_count", &Packing::packed_count);

  py::class_<VerifyReport>(mod, "VerifyReport")
      .def_property_readonly("ok", &VerifyReport::ok)
      .def_readonly("structure_ok", &VerifyReport::structure_ok)
      .def_readonly("structure_error", &VerifyReport::structure_error)
      .def_readonly("feasible", &VerifyReport::feasible)
      .def_readonly("packed_count", &VerifyReport::packed_count)
      .def_readonly("overfull_bins", &VerifyReport::overfull_bins);

  mod.def("verify_packing", &verify_packing);

  mod.def("first_fit",
          [](const Instance& inst) { return first_fit(inst); });
  mod.def("first_fit_increasing", &first_fit_increasing);
  mod.def("rsff", [](const Instance& inst) {
    EtaResult result = rsff(inst);
    py::dict out;
    out["eta"] = result.eta ? py::object(py::str(result.eta->str())) : py::none();
    out["packed_count"] = result.packing.packed_count();
    out["packing"] = result.packing;
    return out;
  });

  mod.def(
      "brute_force_opt",
      [](const Instance& inst, std::size_t guard) {
        BruteForceResult result = brute_force_opt(inst, guard);
        return py::make_tuple(result.opt, result.witness);
      },
      py::arg("instance"), py::arg("guard") = kDefaultBruteForceGuard);

  mod.def(
      "solve_exact",
      [](const Instance& inst, std::uint64_t guard) {
        GroupedInstance gi = group_by_weight(inst);
        DPSolution dp = solve_grouped_dp(gi, guard);
        return py::make_tuple(dp.best_count, expand_solution(inst, gi, dp));
      },
      py::arg("instance"), py::arg("state_guard") = kDefaultDpStateGuard,
      "optimum via the grouped dynamic program over distinct weights");

  mod.def(
      "ptas_solve",
      [](const Instance& inst, const std::string& eps, std::uint64_t guard) {
        PtasResult result = ptas_solve(inst, Weight::parse(eps), guard);
        py::dict out;
        out["packed_count"] = result.packing.packed_count();
        out["branch"] = result.branch == PtasBranch::SmallCertificate
                            ? "small_cert"
                            : "grouped";
        out["groups"] = result.groups;
        out["packing"] = result.packing;
        return out;
      },
      py::arg("instance"), py::arg("eps"),
      py::arg("state_guard") = kDefaultDpStateGuard);

  mod.def(
      "simulate",
      [](const Instance& inst, const std::string& eps, bool oracle) {
        SimulationReport report = simulate(inst, Weight::parse(eps), oracle);
        py::dict out;
        out["advice_bits"] = report.advice_bits;
        out["mode"] = report.ff_mode ? "ff" : "ptas";
        out["groups"] = report.groups;
        out["online_count"] = report.online_count;
        out["oracle_count"] = report.oracle_count;
        out["ptas_count"] = report.ptas_count
                                ? py::object(py::int_(*report.ptas_count))
                                : py::none();
        out["opt"] = report.opt ? py::object(py::int_(*report.opt)) : py::none();
        return out;
      },
      py::arg("instance"), py::arg("eps"), py::arg("oracle") = false,
      "oracle -> bits -> online player round trip with packing metrics");

  mod.def("generate_instance",
          [](const std::string& family, std::uint64_t n, std::uint64_t m,
             std::uint64_t s, std::uint64_t seed, const std::string& eps) {
            GenSpec spec{family, n, m, s, seed, {}};
            if (!eps.empty()) spec.eps = Weight::parse(eps);
            return generate_instance(spec);
          },
          py::arg("family"), py::arg("n"), py::arg("m"), py::arg("s") = 4,
          py::arg("seed") = 0, py::arg("eps") = "");

  mod.def("f_map", [](std::uint64_t y) { return f_map(y).str(); });
  mod.def("entropy_lower_bound", [](std::uint64_t n, std::uint64_t r) {
    std::optional<double> bound = entropy_lower_bound(n, r);
    return bound ? py::object(py::float_(*bound)) : py::none();
  });

  mod.def(
      "reduce_and_run",
      [](std::uint64_t n1, const std::vector<std::uint64_t>& values,
         const std::string& algo, std::uint64_t seed) {
        BspInstance bsp = BspInstance::from_values(n1, values);
        std::unique_ptr<OnlineSolver> solver;
        if (algo == "ff")
          solver = std::make_unique<FirstFitSolver>(bsp.size());
        else if (algo == "random")
          solver = std::make_unique<RandomFitSolver>(bsp.size(), seed);
        else if (algo == "opt")
          solver = std::make_unique<ReplaySolver>(explicit_pairing(bsp).assignment);
        else
          throw std::invalid_argument("algo must be ff, random, or opt");
        ReductionRun run = reduce_and_run(bsp, *solver);
        py::dict out;
        out["p1"] = run.report.p1;
        out["l2"] = run.report.l2;
        out["s2"] = run.report.s2;
        out["p3"] = run.report.p3;
        out["g1"] = run.report.g1;
        out["g2"] = run.report.g2;
        out["mistakes"] = run.report.mistakes(bsp.size());
        out["unpacked_total"] = run.report.unpacked_total();
        return out;
      },
      py::arg("n1"), py::arg("values"), py::arg("algo") = "ff",
      py::arg("seed") = 0);
}
