#pragma once

#include <vector>

#include "negsim/spectrum.hpp"
#include "negsim/types.hpp"

namespace negsim {

// Which energy enters the oscillatory time phases of the complex factor.
// The default uses the three-site-shifted energy so that the modulus of the
// complex factor reproduces factor_magnitude identically; the unshifted
// variant is kept for comparison.
enum class Eq6Variant { lambda_shifted, xi_as_printed };

// The three off-diagonal suppression factors of the evolved two-probe state
// at a common time.
struct DecoherenceSet {
    Cx f15;
    Cx f19;
    Cx f59;
};

// Per-pair tables: everything that does not depend on t, precomputed from the
// spectral tables of the two shifted fields and of the unshifted field.
struct PairTable {
    std::size_t m = 0;
    bool equal_fields = false;  // the two fields compare bitwise equal
    bool any_degenerate = false;
    // time-phase energies
    std::vector<double> big_mu, big_nu, xi_mu, xi_nu;
    // magnitude (radicand) coefficients
    std::vector<double> sin_em, sin_en, sin_half2;
    // complex-bracket coefficients: cos^2 a, sin^2 a, cos^2 b, sin^2 b,
    // sin(2a)*sin(2b), with a, b the half mixing-angle offsets of the two
    // shifted fields against the unshifted one
    std::vector<double> cos_a2, sin_a2, cos_b2, sin_b2, s2ab;
};

PairTable pair_table(const SpectralTable& mu, const SpectralTable& nu,
                     const SpectralTable& unshifted);

// Per-mode complex factor: the echo of one paired mode, with its phase
// prefactor. Equals 1 at t = 0 and when the two fields coincide (up to
// roundoff at the per-mode level); its squared modulus equals mode_radicand.
Cx mode_factor(int k, double t, const ChainParams& p, double lambda_mu,
               double lambda_nu, Eq6Variant variant = Eq6Variant::lambda_shifted);

// Per-mode radicand before clamping; lies in [-1e-12, 1 + 1e-12].
double mode_radicand(int k, double t, const ChainParams& p, double lambda_mu,
                     double lambda_nu);

// Product of mode factors over the paired modes, accumulated as log-magnitude
// plus phase. A per-mode magnitude at or below 1e-300 short-circuits the
// product to exact 0. Exact shortcuts: t == 0 or bitwise-equal fields give 1.
Cx factor_complex(double t, const PairTable& pt,
                  Eq6Variant variant = Eq6Variant::lambda_shifted);
Cx factor_complex(double t, const ChainParams& p, double lambda_mu, double lambda_nu,
                  Eq6Variant variant = Eq6Variant::lambda_shifted);

// Product of sqrt(radicand) over the paired modes, same accumulation and
// shortcut rules; always in [0, 1]. A radicand below -1e-12 before clamping
// signals a bug and throws.
double factor_magnitude(double t, const PairTable& pt);
double factor_magnitude(double t, const ChainParams& p, double lambda_mu,
                        double lambda_nu);

// Magnitude evaluated on an explicit phase set instead of the standard paired
// modes; used by the exact-diagonalization cross-checks, which need the
// antiperiodic momenta of the even fermion-parity sector.
double factor_magnitude_at_phases(const std::vector<double>& phases, double t,
                                  double gamma, double alpha, double eta,
                                  double lambda_mu, double lambda_nu);

// The three factors entering the evolved two-probe state: pairs (1,5), (1,9),
// (5,9) of the effective-field table.
DecoherenceSet factors_for_state(double t, const ChainParams& p, const QutritCoupling& c,
                                 Eq6Variant variant = Eq6Variant::lambda_shifted);

}  // namespace negsim
