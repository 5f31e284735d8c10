#pragma once

#include <string>
#include <vector>

#include "negsim/decoherence.hpp"
#include "negsim/types.hpp"

namespace negsim {

// Result of a 1D (time) or 2D (alpha x time) sweep. For 2D results the value
// tensor is row major in alpha, then t. The factor-magnitude columns are
// recorded for 1D sweeps only.
struct SweepResult {
    ChainParams params{};
    QutritCoupling coupling{};
    TimeGrid grid{};
    std::vector<double> t_axis;
    std::vector<double> alpha_axis;  // empty for time series
    std::vector<double> negativity;
    std::vector<double> f15_abs, f19_abs, f59_abs;
    std::string note;
};

// Negativity and factor magnitudes over the time grid. Grid points are
// independent; `workers` bounds the number of threads. Results are bitwise
// independent of the worker count: every point is written to its preallocated
// slot and the per-point arithmetic does not depend on the schedule.
SweepResult time_series(const ChainParams& p, const QutritCoupling& c,
                        const TimeGrid& grid, int workers = 1);

// One time series per entry of etas, sharing everything else.
std::vector<SweepResult> eta_family(ChainParams base, const QutritCoupling& c,
                                    const TimeGrid& grid, const std::vector<double>& etas,
                                    int workers = 1);

// 2D negativity tensor over (alpha, t); alpha_steps >= 2 endpoints inclusive.
SweepResult alpha_time_grid(ChainParams base, const QutritCoupling& c,
                            const TimeGrid& grid, double alpha_min, double alpha_max,
                            int alpha_steps, int workers = 1);

// What find_critical_alpha maximizes over alpha: the time average of the
// negativity over the grid (default), or its value at the final grid point.
enum class CriticalObjective { time_average, late_time };

struct CriticalAlphaResult {
    double alpha_star = 0.0;  // NaN when flat
    double objective = 0.0;
    bool flat = false;  // coarse objective spread below 1e-9; alpha_star meaningless
    std::vector<double> coarse_alpha;
    std::vector<double> coarse_objective;
};

// True if candidate (objective, alpha) beats the incumbent; exact objective
// ties go to the smaller |alpha|.
bool objective_better(double cand_obj, double cand_alpha, double best_obj,
                      double best_alpha);

// Coarse scan over [alpha_min, alpha_max] plus golden-section refinement
// around the best coarse point down to alpha resolution 1e-4. The returned
// alpha is the best sampled point, so it never leaves the requested range and
// its objective is at least the best coarse value.
CriticalAlphaResult find_critical_alpha(ChainParams base, const QutritCoupling& c,
                                        const TimeGrid& grid, double alpha_min,
                                        double alpha_max, int coarse_steps = 31,
                                        int refine_iters = 48,
                                        CriticalObjective objective = CriticalObjective::time_average,
                                        int workers = 1);

}  // namespace negsim
