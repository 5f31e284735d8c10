// Acceptance suite: one pass/fail line per criterion, tolerances pinned below.
// Usage: negsim_acceptance [path-to-cli-binary]
// The CLI path is needed only by the determinism criterion; without it that
// criterion is reported as failed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "negsim/decoherence.hpp"
#include "negsim/io.hpp"
#include "negsim/oracle_ed.hpp"
#include "negsim/spectrum.hpp"
#include "negsim/state.hpp"
#include "negsim/sweeps.hpp"

using namespace negsim;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion,
                detail.c_str());
    if (!ok) ++g_failures;
}

void note(const std::string& text) { std::printf("       %s\n", text.c_str()); }

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<double> linspace(double a, double b, int steps) {
    std::vector<double> out(steps);
    for (int i = 0; i < steps; ++i) out[i] = a + (b - a) * i / (steps - 1);
    return out;
}

// ---- criterion 1: identity suite ------------------------------------------

void criterion_identities() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(2001);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int sizes[] = {7, 101, 3001};
    double worst0 = 0.0;
    double worst_g0 = 0.0;
    for (int draw = 0; draw < 100; ++draw) {
        const ChainParams p{sizes[draw % 3], u(rng), -1.0 + 1.5 * u(rng), 1.5 * u(rng)};
        const QutritCoupling c{0.2 * u(rng), 0.2 * u(rng)};
        const DecoherenceSet f = factors_for_state(0.0, p, c);
        worst0 = std::max(worst0,
                          std::abs(negativity_closed_form(std::abs(f.f15), std::abs(f.f19),
                                                          std::abs(f.f59)) -
                                   1.0));
        const DecoherenceSet fz = factors_for_state(50.0 * u(rng), p, {0.0, 0.0});
        worst_g0 = std::max(
            worst_g0, std::abs(negativity_closed_form(std::abs(fz.f15), std::abs(fz.f19),
                                                      std::abs(fz.f59)) -
                               1.0));
    }
    const double dt = seconds_since(t0);
    char d[160];
    std::snprintf(d, sizeof d,
                  "identities: |N(0)-1| max %.3g, zero-coupling |N(t)-1| max %.3g, "
                  "100 draws, %.2f s",
                  worst0, worst_g0, dt);
    report(1, worst0 <= 1e-12 && worst_g0 <= 1e-12 && dt < 1.0, d);
}

// ---- criterion 2: complex vs magnitude route ------------------------------

void criterion_route_consistency() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(2002);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int sizes[] = {7, 101, 3001};
    double worst = 0.0;
    for (int draw = 0; draw < 500; ++draw) {
        const ChainParams p{sizes[draw % 3], u(rng), -1.0 + 1.5 * u(rng), 1.5 * u(rng)};
        const double g = 0.2 * u(rng);
        const auto lam = lambda_table(p.eta, {g, 0.5 * g});
        const double lmu = lam[static_cast<int>(u(rng) * 9) % 9];
        const double lnu = lam[static_cast<int>(u(rng) * 9) % 9];
        const double t = 50.0 * u(rng);
        worst = std::max(worst, std::abs(std::abs(factor_complex(t, p, lmu, lnu)) -
                                         factor_magnitude(t, p, lmu, lnu)));
    }
    const double dt = seconds_since(t0);
    char d[160];
    std::snprintf(d, sizeof d,
                  "complex vs magnitude route: max gap %.3g over 500 draws, %.2f s",
                  worst, dt);
    report(2, worst <= 1e-10 && dt < 30.0, d);
}

// ---- criteria 3 and 4: negativity routes and the transpose spectrum -------

void criterion_negativity_routes() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(2003);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double two_pi = 6.283185307179586;
    double worst_neg = 0.0;
    double worst_spec = 0.0;
    for (int draw = 0; draw < 1000; ++draw) {
        const DecoherenceSet f{std::polar(u(rng), two_pi * u(rng)),
                               std::polar(u(rng), two_pi * u(rng)),
                               std::polar(u(rng), two_pi * u(rng))};
        const TwoQutritState s = evolved_state(f);
        worst_neg = std::max(
            worst_neg, std::abs(negativity_spectral(s) -
                                negativity_closed_form(std::abs(f.f15), std::abs(f.f19),
                                                       std::abs(f.f59))));
        const auto w = hermitian_eigenvalues(partial_transpose(s));
        double expected[9] = {-std::abs(f.f15) / 3.0, -std::abs(f.f19) / 3.0,
                              -std::abs(f.f59) / 3.0, std::abs(f.f15) / 3.0,
                              std::abs(f.f19) / 3.0,  std::abs(f.f59) / 3.0,
                              1.0 / 3.0,              1.0 / 3.0,
                              1.0 / 3.0};
        std::sort(expected, expected + 9);
        for (int i = 0; i < 9; ++i)
            worst_spec = std::max(worst_spec, std::abs(w[i] - expected[i]));
    }
    const double dt = seconds_since(t0);
    char d3[160], d4[160];
    std::snprintf(d3, sizeof d3,
                  "spectral vs closed-form negativity: max gap %.3g over 1000 draws, %.2f s",
                  worst_neg, dt);
    report(3, worst_neg <= 1e-9 && dt < 10.0, d3);
    std::snprintf(d4, sizeof d4,
                  "transpose spectrum multiset {1/3 x3, +-|f|/3}: max gap %.3g",
                  worst_spec);
    report(4, worst_spec <= 1e-9, d4);
}

// ---- criterion 5: exact-diagonalization oracle -----------------------------

struct FieldEigen {
    Eigen::VectorXd w;
    Eigen::MatrixXcd v;
};

FieldEigen decompose(int n, double gamma, double alpha, double field, ThreeSiteSign s) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        build_env_hamiltonian(n, gamma, alpha, field, s));
    return {es.eigenvalues(), es.eigenvectors()};
}

std::vector<Cx> echo_from(const FieldEigen& em, const FieldEigen& en,
                          const Eigen::VectorXcd& psi, const std::vector<double>& ts) {
    const Eigen::VectorXcd cm = em.v.adjoint() * psi;
    const Eigen::VectorXcd cn = en.v.adjoint() * psi;
    std::vector<Cx> out;
    out.reserve(ts.size());
    for (double t : ts) {
        Eigen::VectorXcd xm = cm, xn = cn;
        for (Eigen::Index i = 0; i < xm.size(); ++i)
            xm(i) *= std::polar(1.0, -em.w(i) * t);
        for (Eigen::Index i = 0; i < xn.size(); ++i)
            xn(i) *= std::polar(1.0, -en.w(i) * t);
        out.push_back((en.v * xn).dot(em.v * xm));
    }
    return out;
}

Eigen::VectorXcd parity_state(const FieldEigen& fe, int n, bool even) {
    for (Eigen::Index i = 0; i < fe.w.size(); ++i) {
        const double p = parity_expectation(fe.v.col(i), n);
        if (even ? (p > 0.99) : (p < -0.99)) return fe.v.col(i);
    }
    throw std::runtime_error("no parity-pure state found");
}

void criterion_ed_oracle() {
    const auto t0 = Clock::now();
    // gamma=1, eta=1, g=0.1: effective fields 1.2, 1.0, 0.8 for the pairs
    // (1,5), (1,9), (5,9)
    const double gamma = 1.0, eta = 1.0;
    const auto lam = lambda_table(eta, {0.1, 0.1});
    const std::vector<std::pair<double, double>> pairs{
        {lam[0], lam[4]}, {lam[0], lam[8]}, {lam[4], lam[8]}};
    const auto ts = linspace(0.0, 5.0, 51);

    double worst_even_all = 0.0, worst_odd_all = 0.0;
    std::vector<double> naive_dev;
    for (int n : {7, 9, 11}) {
        FieldEigen f12 = decompose(n, gamma, 0.0, lam[0], ThreeSiteSign::as_printed);
        FieldEigen f10 = decompose(n, gamma, 0.0, lam[4], ThreeSiteSign::as_printed);
        FieldEigen f08 = decompose(n, gamma, 0.0, lam[8], ThreeSiteSign::as_printed);
        auto field_of = [&](double v) -> FieldEigen& {
            if (v == lam[0]) return f12;
            if (v == lam[4]) return f10;
            return f08;
        };
        const Eigen::VectorXcd even = parity_state(f10, n, true);  // eta = lam[4]
        const Eigen::VectorXcd odd = parity_state(f10, n, false);
        const Eigen::VectorXcd ground = f10.v.col(0);
        const auto ap = antiperiodic_phases(n);
        const auto ms = mode_set(n);
        double worst_even = 0.0, worst_odd = 0.0, worst_naive = 0.0;
        for (const auto& [lmu, lnu] : pairs) {
            const auto e_even = echo_from(field_of(lmu), field_of(lnu), even, ts);
            const auto e_odd = echo_from(field_of(lmu), field_of(lnu), odd, ts);
            const auto e_ground = echo_from(field_of(lmu), field_of(lnu), ground, ts);
            for (std::size_t i = 0; i < ts.size(); ++i) {
                const double f_ap = factor_magnitude_at_phases(ap, ts[i], gamma, 0.0,
                                                               eta, lmu, lnu);
                const double f_p = factor_magnitude_at_phases(ms.phases, ts[i], gamma,
                                                              0.0, eta, lmu, lnu);
                worst_even = std::max(worst_even, std::abs(std::abs(e_even[i]) - f_ap));
                worst_odd = std::max(worst_odd, std::abs(std::abs(e_odd[i]) - f_p));
                worst_naive = std::max(worst_naive, std::abs(std::abs(e_ground[i]) - f_p));
            }
        }
        worst_even_all = std::max(worst_even_all, worst_even);
        worst_odd_all = std::max(worst_odd_all, worst_odd);
        naive_dev.push_back(worst_naive);
        char line[200];
        std::snprintf(line, sizeof line,
                      "n=%d: even/antiperiodic dev %.3g, odd/periodic dev %.3g, "
                      "ground-vs-periodic (boundary-naive) dev %.4f",
                      n, worst_even, worst_odd, worst_naive);
        note(line);
    }
    note("the boundary-naive deviation grows with n at the critical field; the "
         "sector-resolved identities above are the convergence statement this "
         "suite enforces (see README)");

    // three-site reading determination at alpha = +-0.5, n=9
    const int dn = 9;
    const auto dts = linspace(0.0, 5.0, 51);
    const auto dap = antiperiodic_phases(dn);
    double dev[2] = {0.0, 0.0};
    for (int vi = 0; vi < 2; ++vi) {
        const ThreeSiteSign s =
            vi == 0 ? ThreeSiteSign::as_printed : ThreeSiteSign::flipped;
        for (double alpha : {0.5, -0.5}) {
            FieldEigen f12 = decompose(dn, gamma, alpha, lam[0], s);
            FieldEigen f10 = decompose(dn, gamma, alpha, lam[4], s);
            FieldEigen f08 = decompose(dn, gamma, alpha, lam[8], s);
            auto field_of = [&](double v) -> FieldEigen& {
                if (v == lam[0]) return f12;
                if (v == lam[4]) return f10;
                return f08;
            };
            const Eigen::VectorXcd ground = f10.v.col(0);
            for (const auto& [lmu, lnu] : pairs) {
                const auto e = echo_from(field_of(lmu), field_of(lnu), ground, dts);
                for (std::size_t i = 0; i < dts.size(); ++i) {
                    const double f = factor_magnitude_at_phases(dap, dts[i], gamma,
                                                                alpha, eta, lmu, lnu);
                    dev[vi] = std::max(dev[vi], std::abs(std::abs(e[i]) - f));
                }
            }
        }
    }
    char dline[160];
    std::snprintf(dline, sizeof dline,
                  "three-site determination: dev(sum form) %.4f, dev(difference form) "
                  "%.4f",
                  dev[0], dev[1]);
    note(dline);

    const bool identities_ok = worst_even_all <= 1e-10 && worst_odd_all <= 1e-10;
    const bool determination_ok = dev[0] < dev[1] - 0.01;
    const double dt = seconds_since(t0);
    char d[240];
    std::snprintf(d, sizeof d,
                  "exact-diagonalization oracle: sector identities max dev %.3g "
                  "(n in {7,9,11}), determination selects the sum form "
                  "(%.4f vs %.4f), %.1f s",
                  std::max(worst_even_all, worst_odd_all), dev[0], dev[1], dt);
    report(5, identities_ok && determination_ok && dt < 300.0, d);
}

// ---- criterion 6: field ordering of the figure families --------------------

void criterion_eta_ordering() {
    struct FigConfig {
        const char* name;
        double gamma, alpha;
    };
    const FigConfig figs[] = {{"fig1/fig2", 0.5, 0.5}, {"fig3", 0.5, -0.5},
                              {"fig4", 1.0, 0.0},      {"fig5", 1.0, 0.5},
                              {"fig6", 1.0, -0.5}};
    const TimeGrid grid{0.0, 50.0, 501};
    const QutritCoupling c{0.005, 0.005};
    bool all_ok = true;
    for (const auto& fig : figs) {
        const auto t0 = Clock::now();
        const ChainParams base{3001, fig.gamma, fig.alpha, 1.0};
        const auto family = eta_family(base, c, grid, {0.9, 1.0, 1.2});
        auto avg = [](const SweepResult& r) {
            double s = 0.0;
            for (double v : r.negativity) s += v;
            return s / static_cast<double>(r.negativity.size());
        };
        auto mn = [](const SweepResult& r) {
            return *std::min_element(r.negativity.begin(), r.negativity.end());
        };
        const double a09 = avg(family[0]), a10 = avg(family[1]), a12 = avg(family[2]);
        const double m10 = mn(family[1]), m12 = mn(family[2]);
        const double dt = seconds_since(t0);
        const bool ok = a10 < a09 && a10 < a12 && m12 > m10 && dt < 60.0;
        all_ok = all_ok && ok;
        char line[220];
        std::snprintf(line, sizeof line,
                      "%s (gamma=%g, alpha=%g): avg eta=1.0 %.4f < avg eta=0.9 %.4f "
                      "and < avg eta=1.2 %.4f; min eta=1.2 %.4f > min eta=1.0 %.4f; %.1f s",
                      fig.name, fig.gamma, fig.alpha, a10, a09, a12, m12, m10, dt);
        note(line);
    }
    report(6, all_ok, "critical-field ordering holds for every figure configuration");
}

// ---- criterion 7: critical alpha reproduction ------------------------------

void criterion_critical_alpha() {
    const auto t0 = Clock::now();
    struct Target {
        double gamma, alpha_star;
    };
    const Target targets[] = {{1.0, -0.5216}, {0.5, -0.2695}, {0.2, -0.1206}};
    const TimeGrid grid{0.0, 50.0, 501};
    const QutritCoupling c{0.005, 0.005};
    bool all_ok = true;
    double alpha_half = 0.0;  // found alpha* at gamma = 0.5, for the stability check
    CriticalAlphaResult half_result;
    for (const auto& tgt : targets) {
        const ChainParams base{3001, tgt.gamma, 0.0, 1.0};
        const CriticalAlphaResult r =
            find_critical_alpha(base, c, grid, -1.0, 0.5, 31, 48,
                                CriticalObjective::time_average, 4);
        const bool ok = !r.flat && std::abs(r.alpha_star - tgt.alpha_star) <= 0.05;
        all_ok = all_ok && ok;
        char line[180];
        std::snprintf(line, sizeof line,
                      "gamma=%g: alpha* %.4f (reference %.4f, tolerance 0.05), "
                      "objective %.6f",
                      tgt.gamma, r.alpha_star, tgt.alpha_star, r.objective);
        note(line);
        if (!ok) {
            note("objective curve (alpha, objective):");
            for (std::size_t i = 0; i < r.coarse_alpha.size(); ++i) {
                char pt[80];
                std::snprintf(pt, sizeof pt, "  % .4f  %.8f", r.coarse_alpha[i],
                              r.coarse_objective[i]);
                note(pt);
            }
        }
        if (tgt.gamma == 0.5) {
            alpha_half = r.alpha_star;
            half_result = r;
        }
    }
    // stability of the gamma=0.5 optimum against +-0.1 shifts
    auto objective_at = [&](double alpha) {
        const ChainParams p{3001, 0.5, alpha, 1.0};
        const SweepResult s = time_series(p, c, grid, 4);
        double sum = 0.0;
        for (double v : s.negativity) sum += v;
        return sum / static_cast<double>(s.negativity.size());
    };
    const double at_star = half_result.objective;
    const double left = objective_at(alpha_half - 0.1);
    const double right = objective_at(alpha_half + 0.1);
    const bool stable = at_star > left && at_star > right;
    char sl[160];
    std::snprintf(sl, sizeof sl,
                  "gamma=0.5 stability: objective %.6f at alpha*, %.6f at -0.1, %.6f at +0.1",
                  at_star, left, right);
    note(sl);
    const double dt = seconds_since(t0);
    char d[160];
    std::snprintf(d, sizeof d,
                  "critical alpha within 0.05 of the three references, optimum stable, "
                  "%.0f s",
                  dt);
    report(7, all_ok && stable && dt < 600.0, d);
}

// ---- criterion 8: worker-count determinism through the CLI -----------------

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_determinism(const char* cli) {
    if (!cli) {
        report(8, false, "determinism: CLI path not supplied on the command line");
        return;
    }
    const auto t0 = Clock::now();
    fs::path dir = fs::temp_directory_path() / "negsim_acceptance_determinism";
    std::error_code ec;
    fs::remove_all(dir, ec);
    fs::create_directories(dir);
    auto run = [&](const std::string& args) {
        const std::string cmd = std::string(cli) + " " + args + " > /dev/null 2>&1";
        return std::system(cmd.c_str());
    };
    const std::string ts_common = "timeseries --n 3001 --gamma 0.5 --alpha 0.5 --steps 501";
    const std::string gr_common =
        "grid --n 3001 --gamma 1 --steps 101 --alpha-steps 6";
    bool ok = true;
    ok = ok && run(ts_common + " --workers 1 --out " + (dir / "ts1.csv").string()) == 0;
    ok = ok && run(ts_common + " --workers 4 --out " + (dir / "ts4.csv").string()) == 0;
    ok = ok && run(gr_common + " --workers 1 --out " + (dir / "gr1.csv").string()) == 0;
    ok = ok && run(gr_common + " --workers 4 --out " + (dir / "gr4.csv").string()) == 0;
    bool identical = false;
    if (ok) {
        const std::string ts1 = slurp(dir / "ts1.csv");
        identical = !ts1.empty() && ts1 == slurp(dir / "ts4.csv") &&
                    slurp(dir / "gr1.csv") == slurp(dir / "gr4.csv");
    }
    fs::remove_all(dir, ec);
    const double dt = seconds_since(t0);
    char d[160];
    std::snprintf(d, sizeof d,
                  "timeseries and grid byte-identical for workers 1 and 4, %.1f s", dt);
    report(8, ok && identical && dt < 60.0, d);
}

// ---- criterion 9: performance floor ----------------------------------------

void criterion_performance() {
    const auto t0 = Clock::now();
    const SweepResult r =
        time_series({3001, 0.5, 0.5, 1.0}, {0.005, 0.005}, {0.0, 50.0, 501}, 1);
    const double dt = seconds_since(t0);
    char d[120];
    std::snprintf(d, sizeof d, "501-point series at n=3001 in %.2f s (single worker)",
                  dt);
    report(9, r.negativity.size() == 501 && dt < 5.0, d);
}

}  // namespace

int main(int argc, char** argv) {
    const char* cli = argc > 1 ? argv[1] : nullptr;
    criterion_identities();
    criterion_route_consistency();
    criterion_negativity_routes();
    criterion_ed_oracle();
    criterion_eta_ordering();
    criterion_critical_alpha();
    criterion_determinism(cli);
    criterion_performance();
    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
