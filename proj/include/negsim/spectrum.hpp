#pragma once

#include <array>
#include <vector>

#include "negsim/types.hpp"

namespace negsim {

// Effective transverse fields seen by the ring for the nine two-probe basis
// states. Probe levels carry magnetic quantum numbers m(|0>)=+1, m(|1>)=0,
// m(|2>)=-1, so entry 3*i+j (mu = 3*i+j+1) is eta + g_a*m_i + g_b*m_j.
// Entries 6..9 are mirrored around eta with rounding compensated so that
// table[mu-1] + table[9-mu] == 2*eta holds exactly, not just to roundoff,
// whenever the coupling shift does not exceed the bare field.
std::array<double, 9> lambda_table(double eta, const QutritCoupling& c);

// Paired momentum modes of an odd ring: m = (n-1)/2 phases 2*pi*k/n, k=1..m.
struct ModeSet {
    int m;
    std::vector<double> phases;
};

// Throws domain_error for even n or n < 3.
ModeSet mode_set(int n);

// Single-mode energy at phase phi: 2*sqrt(gamma^2 sin^2 phi + (lambda - cos phi)^2).
double xi_from_phase(double phi, double gamma, double lambda);

// Three-site-shifted energy: xi + 2*alpha*sin(2*phi).
double big_lambda_from_phase(double phi, double gamma, double alpha, double lambda);

// Mixing angle of the planar vector (lambda - cos phi, gamma*sin phi), mapped
// into [0, pi]. The gapless point (both components zero) returns 0 and sets
// *degenerate so callers can warn instead of trusting an arbitrary angle.
double theta_from_phase(double phi, double gamma, double lambda, bool* degenerate = nullptr);

// Phase of paired mode k on an n-site ring.
double mode_phase(int k, int n);

// The same spectral quantities indexed by mode number.
double xi(int k, int n, double gamma, double lambda);
double big_lambda(int k, int n, double gamma, double alpha, double lambda);
double theta(int k, int n, double gamma, double lambda, bool* degenerate = nullptr);

// Per-field spectral arrays, computed once and shared across time points.
// Results downstream are bitwise identical whether built from this table or
// evaluated mode-by-mode, because both routes run the same *_from_phase code.
struct SpectralTable {
    double lambda = 0.0;
    std::vector<double> xi;
    std::vector<double> big;
    std::vector<double> theta;
    bool any_degenerate = false;
};

SpectralTable spectral_table(const std::vector<double>& phases, double gamma,
                             double alpha, double lambda);
SpectralTable spectral_table(const ModeSet& ms, double gamma, double alpha, double lambda);

}  // namespace negsim
