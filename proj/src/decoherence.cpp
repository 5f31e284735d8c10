#include "negsim/decoherence.hpp"

#include <cmath>
#include <stdexcept>

namespace negsim {

namespace {

// below this per-mode magnitude the whole product is an exact 0
constexpr double kUnderflowFloor = 1e-300;
// a radicand below this before clamping is a bug, not roundoff
constexpr double kRadicandSlack = -1e-12;

double radicand_terms(double sin_em, double sin_en, double sin_half2, double p,
                      double q) {
    const double sp = std::sin(p);
    const double sq = std::sin(q);
    return -4.0 * sin_em * sin_en * sin_half2 * sp * sp * sq * sq
           + 2.0 * sin_em * sin_en * sp * sq * std::cos(p - q)
           - sin_em * sin_em * sp * sp - sin_en * sin_en * sq * sq + 1.0;
}

// per-mode echo bracket with its phase prefactor
Cx bracket(double cos_a2, double sin_a2, double cos_b2, double sin_b2, double s2ab,
           double p, double q) {
    const Cx epq = std::polar(1.0, p - q);
    const Cx emm = std::polar(1.0, -(p + q));
    const Cx epp = std::polar(1.0, p + q);
    const Cx emq = std::polar(1.0, q - p);
    const Cx f = epq * (cos_a2 * cos_b2) + emm * (sin_a2 * cos_b2) +
                 epp * (cos_a2 * sin_b2) + emq * (sin_a2 * sin_b2) +
                 s2ab * std::sin(p) * std::sin(q);
    return epq * f;
}

struct PhaseArgs {
    double p, q;
};

PhaseArgs phase_args(const PairTable& pt, std::size_t i, double t, Eq6Variant v) {
    if (v == Eq6Variant::lambda_shifted) return {t * pt.big_mu[i], t * pt.big_nu[i]};
    return {t * pt.xi_mu[i], t * pt.xi_nu[i]};
}

}  // namespace

PairTable pair_table(const SpectralTable& mu, const SpectralTable& nu,
                     const SpectralTable& unshifted) {
    const std::size_t m = mu.xi.size();
    if (nu.xi.size() != m || unshifted.xi.size() != m)
        throw std::invalid_argument("pair_table: spectral tables of unequal size");
    PairTable pt;
    pt.m = m;
    pt.equal_fields = (mu.lambda == nu.lambda);
    pt.any_degenerate = mu.any_degenerate || nu.any_degenerate || unshifted.any_degenerate;
    pt.big_mu = mu.big;
    pt.big_nu = nu.big;
    pt.xi_mu = mu.xi;
    pt.xi_nu = nu.xi;
    pt.sin_em.resize(m);
    pt.sin_en.resize(m);
    pt.sin_half2.resize(m);
    pt.cos_a2.resize(m);
    pt.sin_a2.resize(m);
    pt.cos_b2.resize(m);
    pt.sin_b2.resize(m);
    pt.s2ab.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double te = unshifted.theta[i];
        const double tm = mu.theta[i];
        const double tn = nu.theta[i];
        pt.sin_em[i] = std::sin(te - tm);
        pt.sin_en[i] = std::sin(te - tn);
        const double sh = std::sin(0.5 * (tm - tn));
        pt.sin_half2[i] = sh * sh;
        const double a = 0.5 * (tm - te);
        const double b = 0.5 * (tn - te);
        const double ca = std::cos(a), sa = std::sin(a);
        const double cb = std::cos(b), sb = std::sin(b);
        pt.cos_a2[i] = ca * ca;
        pt.sin_a2[i] = sa * sa;
        pt.cos_b2[i] = cb * cb;
        pt.sin_b2[i] = sb * sb;
        pt.s2ab[i] = std::sin(2.0 * a) * std::sin(2.0 * b);
    }
    return pt;
}

Cx mode_factor(int k, double t, const ChainParams& p, double lambda_mu,
               double lambda_nu, Eq6Variant variant) {
    validate(p);
    const double phi = mode_phase(k, p.n);
    const double te = theta_from_phase(phi, p.gamma, p.eta);
    const double tm = theta_from_phase(phi, p.gamma, lambda_mu);
    const double tn = theta_from_phase(phi, p.gamma, lambda_nu);
    double pm, pn;
    if (variant == Eq6Variant::lambda_shifted) {
        pm = t * big_lambda_from_phase(phi, p.gamma, p.alpha, lambda_mu);
        pn = t * big_lambda_from_phase(phi, p.gamma, p.alpha, lambda_nu);
    } else {
        pm = t * xi_from_phase(phi, p.gamma, lambda_mu);
        pn = t * xi_from_phase(phi, p.gamma, lambda_nu);
    }
    const double a = 0.5 * (tm - te);
    const double b = 0.5 * (tn - te);
    const double ca = std::cos(a), sa = std::sin(a);
    const double cb = std::cos(b), sb = std::sin(b);
    return bracket(ca * ca, sa * sa, cb * cb, sb * sb,
                   std::sin(2.0 * a) * std::sin(2.0 * b), pm, pn);
}

double mode_radicand(int k, double t, const ChainParams& p, double lambda_mu,
                     double lambda_nu) {
    validate(p);
    const double phi = mode_phase(k, p.n);
    const double te = theta_from_phase(phi, p.gamma, p.eta);
    const double tm = theta_from_phase(phi, p.gamma, lambda_mu);
    const double tn = theta_from_phase(phi, p.gamma, lambda_nu);
    const double sh = std::sin(0.5 * (tm - tn));
    return radicand_terms(std::sin(te - tm), std::sin(te - tn), sh * sh,
                          t * big_lambda_from_phase(phi, p.gamma, p.alpha, lambda_mu),
                          t * big_lambda_from_phase(phi, p.gamma, p.alpha, lambda_nu));
}

Cx factor_complex(double t, const PairTable& pt, Eq6Variant variant) {
    if (t == 0.0 || pt.equal_fields) return Cx(1.0, 0.0);
    double log_mag = 0.0;
    double phase = 0.0;
    for (std::size_t i = 0; i < pt.m; ++i) {
        const auto [p, q] = phase_args(pt, i, t, variant);
        const Cx f = bracket(pt.cos_a2[i], pt.sin_a2[i], pt.cos_b2[i], pt.sin_b2[i],
                             pt.s2ab[i], p, q);
        const double mag = std::abs(f);
        if (mag <= kUnderflowFloor) return Cx(0.0, 0.0);
        log_mag += std::log(mag);
        phase += std::arg(f);
    }
    if (log_mag < std::log(kUnderflowFloor)) return Cx(0.0, 0.0);
    return std::polar(std::exp(log_mag), phase);
}

Cx factor_complex(double t, const ChainParams& p, double lambda_mu, double lambda_nu,
                  Eq6Variant variant) {
    validate(p);
    const ModeSet ms = mode_set(p.n);
    const SpectralTable tm = spectral_table(ms, p.gamma, p.alpha, lambda_mu);
    const SpectralTable tn = spectral_table(ms, p.gamma, p.alpha, lambda_nu);
    const SpectralTable te = spectral_table(ms, p.gamma, p.alpha, p.eta);
    return factor_complex(t, pair_table(tm, tn, te), variant);
}

double factor_magnitude(double t, const PairTable& pt) {
    if (t == 0.0 || pt.equal_fields) return 1.0;
    double log_sum = 0.0;
    for (std::size_t i = 0; i < pt.m; ++i) {
        const double p = t * pt.big_mu[i];
        const double q = t * pt.big_nu[i];
        double r = radicand_terms(pt.sin_em[i], pt.sin_en[i], pt.sin_half2[i], p, q);
        if (r < kRadicandSlack)
            throw std::logic_error("factor_magnitude: radicand " + std::to_string(r) +
                                   " below tolerance, mode " + std::to_string(i + 1));
        if (r < 0.0) r = 0.0;
        if (r > 1.0) r = 1.0;
        if (r <= kUnderflowFloor) return 0.0;
        log_sum += 0.5 * std::log(r);
    }
    if (log_sum < std::log(kUnderflowFloor)) return 0.0;
    return std::exp(log_sum);
}

double factor_magnitude(double t, const ChainParams& p, double lambda_mu,
                        double lambda_nu) {
    validate(p);
    const ModeSet ms = mode_set(p.n);
    const SpectralTable tm = spectral_table(ms, p.gamma, p.alpha, lambda_mu);
    const SpectralTable tn = spectral_table(ms, p.gamma, p.alpha, lambda_nu);
    const SpectralTable te = spectral_table(ms, p.gamma, p.alpha, p.eta);
    return factor_magnitude(t, pair_table(tm, tn, te));
}

double factor_magnitude_at_phases(const std::vector<double>& phases, double t,
                                  double gamma, double alpha, double eta,
                                  double lambda_mu, double lambda_nu) {
    const SpectralTable tm = spectral_table(phases, gamma, alpha, lambda_mu);
    const SpectralTable tn = spectral_table(phases, gamma, alpha, lambda_nu);
    const SpectralTable te = spectral_table(phases, gamma, alpha, eta);
    return factor_magnitude(t, pair_table(tm, tn, te));
}

DecoherenceSet factors_for_state(double t, const ChainParams& p, const QutritCoupling& c,
                                 Eq6Variant variant) {
    validate(p);
    const auto lam = lambda_table(p.eta, c);
    const ModeSet ms = mode_set(p.n);
    const SpectralTable t1 = spectral_table(ms, p.gamma, p.alpha, lam[0]);
    const SpectralTable t5 = spectral_table(ms, p.gamma, p.alpha, lam[4]);
    const SpectralTable t9 = spectral_table(ms, p.gamma, p.alpha, lam[8]);
    const SpectralTable te = spectral_table(ms, p.gamma, p.alpha, p.eta);
    DecoherenceSet out;
    out.f15 = factor_complex(t, pair_table(t1, t5, te), variant);
    out.f19 = factor_complex(t, pair_table(t1, t9, te), variant);
    out.f59 = factor_complex(t, pair_table(t5, t9, te), variant);
    return out;
}

}  // namespace negsim
