#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "negsim/sweeps.hpp"

namespace negsim {

// Shortest decimal form that round-trips a double (17 significant digits).
std::string format_g17(double v);

// All writers: UTF-8, LF line endings, every number serialized with
// format_g17, written to a temporary file and renamed into place so no
// partial file survives a failure. Each CSV gets a sibling
// "<path>.meta.json" describing the full parameter set. Failures throw
// io_error with the path in the message.

// Header: t,f15_abs,f19_abs,f59_abs,negativity
void write_timeseries_csv(const SweepResult& r, const std::filesystem::path& path);

// Header: alpha,t,negativity  (row major in alpha, then t)
void write_grid_csv(const SweepResult& r, const std::filesystem::path& path);

// Header: eta,t,negativity  (one block per family member)
void write_family_csv(const std::vector<SweepResult>& family,
                      const std::filesystem::path& path);

// Header: alpha,objective  (coarse objective curve of the critical-alpha scan)
void write_objective_csv(const CriticalAlphaResult& r, const ChainParams& base,
                         const QutritCoupling& c, const TimeGrid& grid,
                         const std::filesystem::path& path);

}  // namespace negsim
