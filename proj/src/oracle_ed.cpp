#include "negsim/oracle_ed.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "negsim/spectrum.hpp"

namespace negsim {

namespace {

constexpr double kDegenerateGap = 1e-10;

int sz_of(unsigned b, int l) { return 1 - 2 * static_cast<int>((b >> l) & 1u); }

GroundState state_from_index(const Eigen::VectorXd& w, const Eigen::MatrixXcd& v,
                             Eigen::Index i) {
    GroundState g;
    g.energy = w(i);
    g.vec = v.col(i);
    g.gap = (i + 1 < w.size()) ? w(i + 1) - w(i) : std::numeric_limits<double>::infinity();
    g.degenerate = g.gap < kDegenerateGap;
    return g;
}

}  // namespace

Eigen::MatrixXcd build_env_hamiltonian(int n, double gamma, double alpha, double field,
                                       ThreeSiteSign sign) {
    if (n < 3 || n > 12)
        throw domain_error("dense ring Hamiltonian limited to 3 <= n <= 12, got " +
                           std::to_string(n));
    const unsigned dim = 1u << n;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    const double jx = -(1.0 + gamma) / 2.0;
    const double jy = -(1.0 - gamma) / 2.0;
    for (unsigned b = 0; b < dim; ++b) {
        int zsum = 0;
        for (int l = 0; l < n; ++l) zsum += sz_of(b, l);
        h(b, b) += Cx(-field * zsum, 0.0);
        for (int l = 0; l < n; ++l) {
            const int lp = (l + 1) % n;
            const int lm = (l + n - 1) % n;
            // X_l X_{l+1} and Y_l Y_{l+1} both flip bits l, l+1
            const unsigned b2 = b ^ (1u << l) ^ (1u << lp);
            h(b2, b) += Cx(jx, 0.0);
            // Y amplitude on the incoming state: i * sz per Y
            const Cx yamp = Cx(0.0, sz_of(b, l)) * Cx(0.0, sz_of(b, lp));
            h(b2, b) += jy * yamp;
            if (alpha != 0.0) {
                // X_{l+1} Z_l Y_{l-1} and Y_{l+1} Z_l X_{l-1} flip bits l+1, l-1
                const unsigned b3 = b ^ (1u << lp) ^ (1u << lm);
                const Cx xzY = Cx(sz_of(b, l), 0.0) * Cx(0.0, sz_of(b, lm));
                const Cx yzX = Cx(0.0, sz_of(b, lp)) * Cx(sz_of(b, l), 0.0);
                if (sign == ThreeSiteSign::as_printed)
                    h(b3, b) += alpha * (xzY + yzX);
                else
                    h(b3, b) += alpha * (xzY - yzX);
            }
        }
    }
    return h;
}

GroundState ground_state(const Eigen::MatrixXcd& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("ground_state: eigensolver failed");
    return state_from_index(es.eigenvalues(), es.eigenvectors(), 0);
}

GroundState lowest_odd_parity_state(const Eigen::MatrixXcd& h, int n) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("lowest_odd_parity_state: eigensolver failed");
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double p = parity_expectation(es.eigenvectors().col(i), n);
        if (p < -0.99) return state_from_index(es.eigenvalues(), es.eigenvectors(), i);
    }
    throw std::runtime_error("lowest_odd_parity_state: no parity-pure odd state found");
}

GroundState lowest_even_parity_state(const Eigen::MatrixXcd& h, int n) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("lowest_even_parity_state: eigensolver failed");
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double p = parity_expectation(es.eigenvectors().col(i), n);
        if (p > 0.99) return state_from_index(es.eigenvalues(), es.eigenvectors(), i);
    }
    throw std::runtime_error("lowest_even_parity_state: no parity-pure even state found");
}

std::vector<Cx> echo_series(const std::vector<double>& ts, const Eigen::MatrixXcd& h_mu,
                            const Eigen::MatrixXcd& h_nu, const Eigen::VectorXcd& psi) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> em(h_mu);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> en(h_nu);
    if (em.info() != Eigen::Success || en.info() != Eigen::Success)
        throw std::runtime_error("echo_series: eigensolver failed");
    const Eigen::VectorXcd cm = em.eigenvectors().adjoint() * psi;
    const Eigen::VectorXcd cn = en.eigenvectors().adjoint() * psi;
    std::vector<Cx> out;
    out.reserve(ts.size());
    for (double t : ts) {
        Eigen::VectorXcd xm = cm;
        Eigen::VectorXcd xn = cn;
        for (Eigen::Index i = 0; i < xm.size(); ++i)
            xm(i) *= std::polar(1.0, -em.eigenvalues()(i) * t);
        for (Eigen::Index i = 0; i < xn.size(); ++i)
            xn(i) *= std::polar(1.0, -en.eigenvalues()(i) * t);
        const Eigen::VectorXcd x = em.eigenvectors() * xm;
        const Eigen::VectorXcd y = en.eigenvectors() * xn;
        out.push_back(y.dot(x));  // <psi| e^{+i h_nu t} e^{-i h_mu t} |psi>
    }
    return out;
}

std::vector<Cx> exact_factor_series(const std::vector<double>& ts, int n, double gamma,
                                    double alpha, double eta, double lambda_mu,
                                    double lambda_nu, ThreeSiteSign sign,
                                    bool* ground_degenerate) {
    const Eigen::MatrixXcd he = build_env_hamiltonian(n, gamma, alpha, eta, sign);
    const GroundState g = ground_state(he);
    if (ground_degenerate) *ground_degenerate = g.degenerate;
    const Eigen::MatrixXcd hm = build_env_hamiltonian(n, gamma, alpha, lambda_mu, sign);
    const Eigen::MatrixXcd hn = build_env_hamiltonian(n, gamma, alpha, lambda_nu, sign);
    return echo_series(ts, hm, hn, g.vec);
}

Cx exact_factor(double t, int n, double gamma, double alpha, double eta,
                double lambda_mu, double lambda_nu, ThreeSiteSign sign) {
    return exact_factor_series({t}, n, gamma, alpha, eta, lambda_mu, lambda_nu, sign)[0];
}

std::vector<double> antiperiodic_phases(int n) {
    if (n < 3 || n % 2 == 0)
        throw domain_error("antiperiodic phases require odd n >= 3, got " +
                           std::to_string(n));
    constexpr double pi = 3.14159265358979323846;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>((n - 1) / 2));
    for (int m = 1; m <= (n - 1) / 2; ++m)
        out.push_back((2.0 * m - 1.0) * pi / static_cast<double>(n));
    return out;
}

double parity_expectation(const Eigen::VectorXcd& v, int n) {
    const unsigned dim = 1u << n;
    double p = 0.0;
    for (unsigned b = 0; b < dim && b < static_cast<unsigned>(v.size()); ++b) {
        const int par = (std::popcount(b) % 2 == 0) ? 1 : -1;
        p += par * std::norm(v(b));
    }
    return p;
}

}  // namespace negsim
