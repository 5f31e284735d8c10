#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "negsim/decoherence.hpp"
#include "negsim/oracle_ed.hpp"
#include "negsim/spectrum.hpp"
#include "negsim/state.hpp"
#include "negsim/sweeps.hpp"
#include "negsim/types.hpp"

namespace py = pybind11;
using namespace negsim;

namespace {

ThreeSiteSign sign_from(const std::string& s) {
    if (s == "as-printed") return ThreeSiteSign::as_printed;
    if (s == "flipped") return ThreeSiteSign::flipped;
    throw std::invalid_argument("sign must be 'as-printed' or 'flipped'");
}

py::dict series_dict(const SweepResult& r) {
    py::dict d;
    d["t"] = r.t_axis;
    d["negativity"] = r.negativity;
    d["f15_abs"] = r.f15_abs;
    d["f19_abs"] = r.f19_abs;
    d["f59_abs"] = r.f59_abs;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "qutrit-pair dephasing in an anisotropic ring with three-site terms";
    m.attr("__version__") = kVersion;

    py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);

    m.def("lambda_table",
          [](double eta, double g_a, double g_b) {
              const auto t = lambda_table(eta, {g_a, g_b});
              return std::vector<double>(t.begin(), t.end());
          },
          py::arg("eta"), py::arg("g_a"), py::arg("g_b"),
          "Nine effective transverse fields for the two-probe basis states.");

    m.def("mode_phases",
          [](int n) { return mode_set(n).phases; }, py::arg("n"),
          "Paired momentum phases 2*pi*k/n, k = 1..(n-1)/2.");

    m.def("antiperiodic_phases", &antiperiodic_phases, py::arg("n"),
          "Positive antiperiodic momenta (2m-1)*pi/n of the even-parity sector.");

    m.def("xi", &xi, py::arg("k"), py::arg("n"), py::arg("gamma"), py::arg("lambda_"),
          "Single-mode energy of paired mode k.");
    m.def("big_lambda", &big_lambda, py::arg("k"), py::arg("n"), py::arg("gamma"),
          py::arg("alpha"), py::arg("lambda_"),
          "Three-site-shifted energy of paired mode k.");
    m.def("theta",
          [](int k, int n, double gamma, double lambda) {
              return theta(k, n, gamma, lambda);
          },
          py::arg("k"), py::arg("n"), py::arg("gamma"), py::arg("lambda_"),
          "Mixing angle of paired mode k, in [0, pi].");

    m.def("factor_complex",
          [](double t, int n, double gamma, double alpha, double eta, double lambda_mu,
             double lambda_nu) {
              return factor_complex(t, ChainParams{n, gamma, alpha, eta}, lambda_mu,
                                    lambda_nu);
          },
          py::arg("t"), py::arg("n"), py::arg("gamma"), py::arg("alpha"),
          py::arg("eta"), py::arg("lambda_mu"), py::arg("lambda_nu"),
          "Complex off-diagonal suppression factor for one field pair.");

    m.def("factor_magnitude",
          [](double t, int n, double gamma, double alpha, double eta, double lambda_mu,
             double lambda_nu) {
              return factor_magnitude(t, ChainParams{n, gamma, alpha, eta}, lambda_mu,
                                      lambda_nu);
          },
          py::arg("t"), py::arg("n"), py::arg("gamma"), py::arg("alpha"),
          py::arg("eta"), py::arg("lambda_mu"), py::arg("lambda_nu"),
          "Magnitude of the suppression factor via the closed-form radicand.");

    m.def("factor_magnitude_at_phases", &factor_magnitude_at_phases, py::arg("phases"),
          py::arg("t"), py::arg("gamma"), py::arg("alpha"), py::arg("eta"),
          py::arg("lambda_mu"), py::arg("lambda_nu"),
          "Magnitude evaluated on an explicit momentum set.");

    m.def("factors_for_state",
          [](double t, int n, double gamma, double alpha, double eta, double g_a,
             double g_b) {
              const DecoherenceSet f = factors_for_state(
                  t, ChainParams{n, gamma, alpha, eta}, QutritCoupling{g_a, g_b});
              return py::make_tuple(f.f15, f.f19, f.f59);
          },
          py::arg("t"), py::arg("n"), py::arg("gamma"), py::arg("alpha"),
          py::arg("eta"), py::arg("g_a"), py::arg("g_b"),
          "The three factors (f15, f19, f59) of the evolved state.");

    m.def("negativity_closed_form", &negativity_closed_form, py::arg("f15_mag"),
          py::arg("f19_mag"), py::arg("f59_mag"),
          "(|f15| + |f19| + |f59|) / 3.");

    m.def("negativity_spectral",
          [](Cx f15, Cx f19, Cx f59) {
              return negativity_spectral(evolved_state({f15, f19, f59}));
          },
          py::arg("f15"), py::arg("f19"), py::arg("f59"),
          "Negativity from the partial-transpose spectrum of the evolved state.");

    m.def("time_series",
          [](int n, double gamma, double alpha, double eta, double g_a, double g_b,
             double t_start, double t_end, int steps, int workers) {
              return series_dict(time_series(ChainParams{n, gamma, alpha, eta},
                                             QutritCoupling{g_a, g_b},
                                             TimeGrid{t_start, t_end, steps}, workers));
          },
          py::arg("n") = 3001, py::arg("gamma") = 0.5, py::arg("alpha") = 0.5,
          py::arg("eta") = 1.0, py::arg("g_a") = 0.005, py::arg("g_b") = 0.005,
          py::arg("t_start") = 0.0, py::arg("t_end") = 50.0, py::arg("steps") = 501,
          py::arg("workers") = 1,
          "Negativity and factor magnitudes over a time grid, as a dict of lists.");

    m.def("alpha_time_grid",
          [](int n, double gamma, double eta, double g_a, double g_b, double t_start,
             double t_end, int steps, double alpha_min, double alpha_max,
             int alpha_steps, int workers) {
              const SweepResult r = alpha_time_grid(
                  ChainParams{n, gamma, 0.0, eta}, QutritCoupling{g_a, g_b},
                  TimeGrid{t_start, t_end, steps}, alpha_min, alpha_max, alpha_steps,
                  workers);
              py::dict d;
              d["t"] = r.t_axis;
              d["alpha"] = r.alpha_axis;
              d["negativity"] = r.negativity;  // row major: alpha, then t
              return d;
          },
          py::arg("n") = 3001, py::arg("gamma") = 0.5, py::arg("eta") = 1.0,
          py::arg("g_a") = 0.005, py::arg("g_b") = 0.005, py::arg("t_start") = 0.0,
          py::arg("t_end") = 50.0, py::arg("steps") = 501, py::arg("alpha_min") = -1.0,
          py::arg("alpha_max") = 0.5, py::arg("alpha_steps") = 151,
          py::arg("workers") = 1,
          "Negativity over an (alpha, t) grid; values row major in alpha, then t.");

    m.def("find_critical_alpha",
          [](int n, double gamma, double eta, double g_a, double g_b, double t_start,
             double t_end, int steps, double alpha_min, double alpha_max,
             int coarse_steps, const std::string& objective, int workers) {
              CriticalObjective obj;
              if (objective == "time-average")
                  obj = CriticalObjective::time_average;
              else if (objective == "late-time")
                  obj = CriticalObjective::late_time;
              else
                  throw std::invalid_argument(
                      "objective must be 'time-average' or 'late-time'");
              const CriticalAlphaResult r = find_critical_alpha(
                  ChainParams{n, gamma, 0.0, eta}, QutritCoupling{g_a, g_b},
                  TimeGrid{t_start, t_end, steps}, alpha_min, alpha_max, coarse_steps,
                  48, obj, workers);
              py::dict d;
              d["alpha_star"] = r.alpha_star;
              d["objective"] = r.objective;
              d["flat"] = r.flat;
              d["coarse_alpha"] = r.coarse_alpha;
              d["coarse_objective"] = r.coarse_objective;
              return d;
          },
          py::arg("n") = 3001, py::arg("gamma") = 0.5, py::arg("eta") = 1.0,
          py::arg("g_a") = 0.005, py::arg("g_b") = 0.005, py::arg("t_start") = 0.0,
          py::arg("t_end") = 50.0, py::arg("steps") = 501, py::arg("alpha_min") = -1.0,
          py::arg("alpha_max") = 0.5, py::arg("coarse_steps") = 31,
          py::arg("objective") = "time-average", py::arg("workers") = 1,
          "Coarse scan plus golden-section refinement of the protection optimum.");

    m.def("exact_factor_series",
          [](const std::vector<double>& ts, int n, double gamma, double alpha,
             double eta, double lambda_mu, double lambda_nu, const std::string& sign) {
              return exact_factor_series(ts, n, gamma, alpha, eta, lambda_mu,
                                         lambda_nu, sign_from(sign));
          },
          py::arg("ts"), py::arg("n"), py::arg("gamma"), py::arg("alpha"),
          py::arg("eta"), py::arg("lambda_mu"), py::arg("lambda_nu"),
          py::arg("sign") = "as-printed",
          "Ground-state echo from exact diagonalization of a small ring (n <= 12).");
}
