#include "negsim/spectrum.hpp"

#include <cmath>
#include <limits>

namespace negsim {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::vector<double> TimeGrid::points() const {
    validate(*this);
    std::vector<double> out(static_cast<std::size_t>(steps));
    const double span = t_end - t_start;
    for (int i = 0; i < steps; ++i)
        out[static_cast<std::size_t>(i)] = t_start + span * i / (steps - 1);
    return out;
}

void validate(const ChainParams& p) {
    if (p.n < 3 || p.n % 2 == 0)
        throw domain_error("chain length n must be odd and >= 3, got " + std::to_string(p.n));
    if (!std::isfinite(p.gamma) || !std::isfinite(p.alpha) || !std::isfinite(p.eta))
        throw domain_error("chain couplings must be finite");
}

void validate(const TimeGrid& g) {
    if (!(g.t_start >= 0.0) || !(g.t_end > g.t_start))
        throw domain_error("time grid requires 0 <= t_start < t_end");
    if (g.steps < 2) throw domain_error("time grid requires steps >= 2");
}

namespace {

struct MirrorPair {
    double v, w;
};

// Entries of one field pair around b/2, adjusted so that v + w == b exactly
// after rounding, not just to an ulp. The plain difference w = b - v can
// round the real sum onto a half-ulp tie that round-to-even sends away from
// b for every neighboring w; nudging v by one ulp (half an ulp of b when v
// sits in the binade below) always breaks such a tie. A solution exists
// whenever |b - v| <= |b|, i.e. while the coupling shift stays below the
// bare field; outside that regime the plain difference is kept.
MirrorPair mirror_about(double b, double v) {
    const double inf = std::numeric_limits<double>::infinity();
    const double vc[3] = {v, std::nextafter(v, -inf), std::nextafter(v, inf)};
    for (const double vv : vc) {
        const double w0 = b - vv;
        double wc[5];
        wc[0] = w0;
        wc[1] = std::nextafter(w0, -inf);
        wc[2] = std::nextafter(w0, inf);
        wc[3] = std::nextafter(wc[1], -inf);
        wc[4] = std::nextafter(wc[2], inf);
        for (const double ww : wc)
            if (vv + ww == b) return {vv, ww};
    }
    return {v, b - v};
}

}  // namespace

std::array<double, 9> lambda_table(double eta, const QutritCoupling& c) {
    // m(|0>) = +1, m(|1>) = 0, m(|2>) = -1; entry 3*i + j pairs m_i with m_j.
    // Pairs (mu, 10-mu) are mirrored around eta with rounding compensated so
    // that t[mu-1] + t[9-mu] == 2*eta holds exactly; entries may sit one ulp
    // off the naive sums for that.
    std::array<double, 9> t;
    t[4] = eta;
    const double b = 2.0 * eta;
    const double raw[4] = {eta + c.g_a + c.g_b, eta + c.g_a, eta + c.g_a - c.g_b,
                           eta + c.g_b};
    for (int i = 0; i < 4; ++i) {
        const MirrorPair mp = mirror_about(b, raw[i]);
        t[static_cast<std::size_t>(i)] = mp.v;
        t[static_cast<std::size_t>(8 - i)] = mp.w;
    }
    return t;
}

ModeSet mode_set(int n) {
    if (n < 3 || n % 2 == 0)
        throw domain_error("mode set requires odd n >= 3, got " + std::to_string(n));
    ModeSet ms;
    ms.m = (n - 1) / 2;
    ms.phases.resize(static_cast<std::size_t>(ms.m));
    for (int k = 1; k <= ms.m; ++k)
        ms.phases[static_cast<std::size_t>(k - 1)] = mode_phase(k, n);
    return ms;
}

double mode_phase(int k, int n) {
    return 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
}

double xi_from_phase(double phi, double gamma, double lambda) {
    const double y = gamma * std::sin(phi);
    const double x = lambda - std::cos(phi);
    return 2.0 * std::sqrt(y * y + x * x);
}

double big_lambda_from_phase(double phi, double gamma, double alpha, double lambda) {
    return xi_from_phase(phi, gamma, lambda) + 2.0 * alpha * std::sin(2.0 * phi);
}

double theta_from_phase(double phi, double gamma, double lambda, bool* degenerate) {
    const double y = gamma * std::sin(phi);
    const double x = lambda - std::cos(phi);
    if (x == 0.0 && y == 0.0) {
        if (degenerate) *degenerate = true;
        return 0.0;
    }
    if (degenerate) *degenerate = false;
    double t = std::atan2(y, x);
    if (t < 0.0) t += kPi;
    return t;
}

double xi(int k, int n, double gamma, double lambda) {
    return xi_from_phase(mode_phase(k, n), gamma, lambda);
}

double big_lambda(int k, int n, double gamma, double alpha, double lambda) {
    return big_lambda_from_phase(mode_phase(k, n), gamma, alpha, lambda);
}

double theta(int k, int n, double gamma, double lambda, bool* degenerate) {
    return theta_from_phase(mode_phase(k, n), gamma, lambda, degenerate);
}

SpectralTable spectral_table(const std::vector<double>& phases, double gamma,
                             double alpha, double lambda) {
    SpectralTable t;
    t.lambda = lambda;
    const std::size_t m = phases.size();
    t.xi.resize(m);
    t.big.resize(m);
    t.theta.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        bool deg = false;
        t.xi[i] = xi_from_phase(phases[i], gamma, lambda);
        t.big[i] = big_lambda_from_phase(phases[i], gamma, alpha, lambda);
        t.theta[i] = theta_from_phase(phases[i], gamma, lambda, &deg);
        t.any_degenerate = t.any_degenerate || deg;
    }
    return t;
}

SpectralTable spectral_table(const ModeSet& ms, double gamma, double alpha, double lambda) {
    return spectral_table(ms.phases, gamma, alpha, lambda);
}

}  // namespace negsim
