#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace negsim {

using Cx = std::complex<double>;

inline constexpr const char* kVersion = "0.1.0";

// Parameter errors that the CLI maps to exit code 2.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File errors that the CLI maps to exit code 1.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ring parameters. Couplings are measured in units of the in-plane exchange,
// hbar = 1; times are dimensionless throughout.
struct ChainParams {
    int n;         // number of ring spins, odd and >= 3
    double gamma;  // anisotropy of the in-plane exchange
    double alpha;  // three-site coupling
    double eta;    // transverse field
};

// Couplings of the two three-level probes to the ring field.
struct QutritCoupling {
    double g_a;
    double g_b;
};

// Uniform time grid, endpoints inclusive.
struct TimeGrid {
    double t_start = 0.0;
    double t_end = 50.0;
    int steps = 501;

    std::vector<double> points() const;
};

// Throws domain_error unless n is odd and >= 3 and all couplings are finite.
void validate(const ChainParams& p);

// Throws domain_error unless 0 <= t_start < t_end and steps >= 2.
void validate(const TimeGrid& g);

}  // namespace negsim
