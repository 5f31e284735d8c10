#include "negsim/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "negsim/state.hpp"

namespace negsim {

namespace {

constexpr double kAlphaResolution = 1e-4;
constexpr double kFlatSpread = 1e-9;
constexpr double kGolden = 0.6180339887498949;  // (sqrt(5)-1)/2

// static partition of [0, count) into contiguous chunks; every worker writes
// only its own slots, so the result never depends on the schedule
template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn&& body) {
    const int w = std::max(1, workers);
    if (w == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    const std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(w), count);
    std::vector<std::thread> pool;
    pool.reserve(nw - 1);
    for (std::size_t t = 0; t < nw; ++t) {
        const std::size_t lo = count * t / nw;
        const std::size_t hi = count * (t + 1) / nw;
        auto run = [lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        };
        if (t + 1 < nw)
            pool.emplace_back(run);
        else
            run();
    }
    for (auto& th : pool) th.join();
}

struct StateTables {
    PairTable p15, p19, p59;
};

StateTables state_tables(const ChainParams& p, const QutritCoupling& c) {
    const auto lam = lambda_table(p.eta, c);
    const ModeSet ms = mode_set(p.n);
    const SpectralTable t1 = spectral_table(ms, p.gamma, p.alpha, lam[0]);
    const SpectralTable t5 = spectral_table(ms, p.gamma, p.alpha, lam[4]);
    const SpectralTable t9 = spectral_table(ms, p.gamma, p.alpha, lam[8]);
    const SpectralTable te = spectral_table(ms, p.gamma, p.alpha, p.eta);
    return {pair_table(t1, t5, te), pair_table(t1, t9, te), pair_table(t5, t9, te)};
}

int check_workers(int workers) {
    if (workers < 1) throw domain_error("workers must be >= 1");
    return workers;
}

}  // namespace

SweepResult time_series(const ChainParams& p, const QutritCoupling& c,
                        const TimeGrid& grid, int workers) {
    validate(p);
    check_workers(workers);
    const StateTables tabs = state_tables(p, c);
    SweepResult r;
    r.params = p;
    r.coupling = c;
    r.grid = grid;
    r.t_axis = grid.points();
    const std::size_t m = r.t_axis.size();
    r.negativity.resize(m);
    r.f15_abs.resize(m);
    r.f19_abs.resize(m);
    r.f59_abs.resize(m);
    parallel_for(m, workers, [&](std::size_t i) {
        const double t = r.t_axis[i];
        const double m15 = factor_magnitude(t, tabs.p15);
        const double m19 = factor_magnitude(t, tabs.p19);
        const double m59 = factor_magnitude(t, tabs.p59);
        r.f15_abs[i] = m15;
        r.f19_abs[i] = m19;
        r.f59_abs[i] = m59;
        r.negativity[i] = negativity_closed_form(m15, m19, m59);
    });
    return r;
}

std::vector<SweepResult> eta_family(ChainParams base, const QutritCoupling& c,
                                    const TimeGrid& grid, const std::vector<double>& etas,
                                    int workers) {
    if (etas.empty()) throw domain_error("eta family requires at least one eta");
    std::vector<SweepResult> out;
    out.reserve(etas.size());
    for (double eta : etas) {
        ChainParams p = base;
        p.eta = eta;
        out.push_back(time_series(p, c, grid, workers));
    }
    return out;
}

SweepResult alpha_time_grid(ChainParams base, const QutritCoupling& c,
                            const TimeGrid& grid, double alpha_min, double alpha_max,
                            int alpha_steps, int workers) {
    if (!(alpha_min < alpha_max))
        throw domain_error("alpha grid requires alpha_min < alpha_max");
    if (alpha_steps < 2) throw domain_error("alpha grid requires alpha_steps >= 2");
    validate(base);
    check_workers(workers);
    SweepResult r;
    r.params = base;
    r.coupling = c;
    r.grid = grid;
    r.t_axis = grid.points();
    r.alpha_axis.resize(static_cast<std::size_t>(alpha_steps));
    const double span = alpha_max - alpha_min;
    for (int i = 0; i < alpha_steps; ++i)
        r.alpha_axis[static_cast<std::size_t>(i)] = alpha_min + span * i / (alpha_steps - 1);
    const std::size_t nt = r.t_axis.size();
    r.negativity.resize(r.alpha_axis.size() * nt);
    parallel_for(r.alpha_axis.size(), workers, [&](std::size_t ia) {
        ChainParams p = base;
        p.alpha = r.alpha_axis[ia];
        const StateTables tabs = state_tables(p, c);
        for (std::size_t it = 0; it < nt; ++it) {
            const double t = r.t_axis[it];
            r.negativity[ia * nt + it] = negativity_closed_form(
                factor_magnitude(t, tabs.p15), factor_magnitude(t, tabs.p19),
                factor_magnitude(t, tabs.p59));
        }
    });
    return r;
}

bool objective_better(double cand_obj, double cand_alpha, double best_obj,
                      double best_alpha) {
    if (cand_obj != best_obj) return cand_obj > best_obj;
    return std::abs(cand_alpha) < std::abs(best_alpha);
}

CriticalAlphaResult find_critical_alpha(ChainParams base, const QutritCoupling& c,
                                        const TimeGrid& grid, double alpha_min,
                                        double alpha_max, int coarse_steps,
                                        int refine_iters, CriticalObjective objective,
                                        int workers) {
    if (!(alpha_min < alpha_max))
        throw domain_error("critical-alpha search requires alpha_min < alpha_max");
    if (coarse_steps < 2) throw domain_error("critical-alpha search requires coarse_steps >= 2");
    validate(base);
    check_workers(workers);

    auto evaluate = [&](double alpha) {
        ChainParams p = base;
        p.alpha = alpha;
        const SweepResult s = time_series(p, c, grid, workers);
        if (objective == CriticalObjective::late_time) return s.negativity.back();
        double sum = 0.0;
        for (double v : s.negativity) sum += v;
        return sum / static_cast<double>(s.negativity.size());
    };

    CriticalAlphaResult r;
    r.coarse_alpha.resize(static_cast<std::size_t>(coarse_steps));
    r.coarse_objective.resize(static_cast<std::size_t>(coarse_steps));
    const double span = alpha_max - alpha_min;
    double best_alpha = alpha_min;
    double best_obj = -std::numeric_limits<double>::infinity();
    double lo_obj = std::numeric_limits<double>::infinity();
    std::size_t best_idx = 0;
    for (int i = 0; i < coarse_steps; ++i) {
        const double a = alpha_min + span * i / (coarse_steps - 1);
        const double o = evaluate(a);
        r.coarse_alpha[static_cast<std::size_t>(i)] = a;
        r.coarse_objective[static_cast<std::size_t>(i)] = o;
        lo_obj = std::min(lo_obj, o);
        if (objective_better(o, a, best_obj, best_alpha)) {
            best_obj = o;
            best_alpha = a;
            best_idx = static_cast<std::size_t>(i);
        }
    }

    if (best_obj - lo_obj < kFlatSpread) {
        r.flat = true;
        r.alpha_star = std::numeric_limits<double>::quiet_NaN();
        r.objective = best_obj;
        return r;
    }

    // golden-section refinement on the bracket around the best coarse point
    const double h = span / (coarse_steps - 1);
    double a = std::max(alpha_min, r.coarse_alpha[best_idx] - h);
    double b = std::min(alpha_max, r.coarse_alpha[best_idx] + h);
    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = evaluate(x1);
    double f2 = evaluate(x2);
    for (int it = 0; it < refine_iters && (b - a) > kAlphaResolution; ++it) {
        if (objective_better(f1, x1, best_obj, best_alpha)) {
            best_obj = f1;
            best_alpha = x1;
        }
        if (objective_better(f2, x2, best_obj, best_alpha)) {
            best_obj = f2;
            best_alpha = x2;
        }
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = evaluate(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = evaluate(x1);
        }
    }
    if (objective_better(f1, x1, best_obj, best_alpha)) {
        best_obj = f1;
        best_alpha = x1;
    }
    if (objective_better(f2, x2, best_obj, best_alpha)) {
        best_obj = f2;
        best_alpha = x2;
    }

    r.alpha_star = best_alpha;
    r.objective = best_obj;
    return r;
}

}  // namespace negsim
