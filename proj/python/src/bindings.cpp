#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "qci/serialize.hpp"

namespace py = pybind11;

namespace {

// Library errors surface as ValueError carrying the error kind.
template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const qci::Error& e) {
    throw py::value_error(std::string(qci::to_string(e.kind())) + ": " + e.what());
  }
}

qci::SpecPtr spec_of(const std::string& spec_json) {
  return qci::spec_from_json(qci::Json::parse(spec_json));
}

}  // namespace

PYBIND11_MODULE(_qci, m) {
  m.doc() = "Exact bi-Frobenius checks for quantum complete intersections";

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = qci::cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run one CLI subcommand in-process; returns (exit_code, stdout, stderr).");

  m.def(
      "verify",
      [](const std::string& spec_json, const std::string& coproduct) {
        return guarded([&] {
          const qci::SpecPtr spec = spec_of(spec_json);
          const std::size_t top = spec->top_index();
          std::optional<qci::CoproductTable> d;
          if (coproduct == qci::kGCoproductKind) {
            d = qci::build_g_coproduct(qci::solve_g(spec));
          } else if (coproduct == qci::kPathCoproductKind) {
            d = qci::build_path_coproduct(spec);
          } else if (coproduct == qci::kSignedCoproductKind) {
            d = qci::build_signed_coproduct(spec);
          } else {
            throw qci::Error(qci::ErrorKind::parse, "unknown coproduct \"" + coproduct + "\"");
          }
          const qci::Functional phi = coproduct == qci::kSignedCoproductKind
                                          ? qci::Functional::sum_of_duals(spec)
                                          : qci::Functional::dual_basis(spec, top);
          const qci::BiFrobeniusCandidate c(*d, phi, qci::AlgElem::basis(spec, top));
          return qci::report_to_json(qci::verify_bifrobenius(c)).dump();
        });
      },
      py::arg("spec_json"), py::arg("coproduct") = "paper31",
      "Verification report (JSON) for a spec document and a built-in coproduct.");

  m.def(
      "solve_g",
      [](const std::string& spec_json) {
        return guarded([&] { return qci::g_to_json(qci::solve_g(spec_of(spec_json))).dump(); });
      },
      py::arg("spec_json"));

  m.def(
      "obstruction",
      [](const std::vector<int>& a, std::uint64_t characteristic) {
        return guarded([&] {
          return qci::obstruction_to_json(qci::bialgebra_obstruction(a, characteristic), a, characteristic)
              .dump();
        });
      },
      py::arg("a"), py::arg("characteristic") = 0);

  m.def(
      "binom_valuation",
      [](std::uint64_t n, std::uint64_t k, std::uint64_t p) {
        return guarded([&] { return qci::binom_valuation_kummer(n, k, p); });
      },
      py::arg("n"), py::arg("m"), py::arg("p"));
}
