#include "negsim/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace negsim {

namespace {

constexpr int kDim = 9;
constexpr double kOffDiagTol = 1e-13;   // convergence: off-diagonal Frobenius norm
constexpr double kHermitianTol = 1e-10; // input check
constexpr double kMagnitudeSlack = 1e-9;
constexpr int kMaxSweeps = 64;

Cx& at(Mat9& m, int r, int c) { return m[static_cast<std::size_t>(r * kDim + c)]; }
const Cx& at(const Mat9& m, int r, int c) {
    return m[static_cast<std::size_t>(r * kDim + c)];
}

double off_diagonal_norm(const Mat9& a) {
    double s = 0.0;
    for (int r = 0; r < kDim; ++r)
        for (int c = 0; c < kDim; ++c)
            if (r != c) s += std::norm(at(a, r, c));
    return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a[p][q]: strip the phase of the pivot,
// then rotate by the classical symmetric-case angle. R is identity except
// R[p][p] = c, R[p][q] = s, R[q][p] = -s*conj(u), R[q][q] = c*conj(u), with
// u the pivot's unit phase; a <- R^dagger a R, v <- v R.
void rotate(Mat9& a, Mat9* v, int p, int q) {
    const Cx apq = at(a, p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const Cx u = apq / mag;
    const double tau = (at(a, q, q).real() - at(a, p, p).real()) / (2.0 * mag);
    double t;
    if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const Cx rpp(c, 0.0), rpq(s, 0.0);
    const Cx rqp = -s * std::conj(u);
    const Cx rqq = c * std::conj(u);

    // columns: m <- m R
    for (int i = 0; i < kDim; ++i) {
        const Cx aip = at(a, i, p);
        const Cx aiq = at(a, i, q);
        at(a, i, p) = aip * rpp + aiq * rqp;
        at(a, i, q) = aip * rpq + aiq * rqq;
    }
    // rows: m <- R^dagger m
    for (int j = 0; j < kDim; ++j) {
        const Cx apj = at(a, p, j);
        const Cx aqj = at(a, q, j);
        at(a, p, j) = std::conj(rpp) * apj + std::conj(rqp) * aqj;
        at(a, q, j) = std::conj(rpq) * apj + std::conj(rqq) * aqj;
    }
    at(a, p, q) = Cx(0.0, 0.0);
    at(a, q, p) = Cx(0.0, 0.0);
    if (v) {
        for (int i = 0; i < kDim; ++i) {
            const Cx vip = at(*v, i, p);
            const Cx viq = at(*v, i, q);
            at(*v, i, p) = vip * rpp + viq * rqp;
            at(*v, i, q) = vip * rpq + viq * rqq;
        }
    }
}

}  // namespace

TwoQutritState initial_state() {
    TwoQutritState s;
    const Cx third(1.0 / 3.0, 0.0);
    for (int r : {0, 4, 8})
        for (int c : {0, 4, 8}) at(s.rho, r, c) = third;
    return s;
}

TwoQutritState evolved_state(const DecoherenceSet& f) {
    for (const Cx& v : {f.f15, f.f19, f.f59})
        if (std::abs(v) > 1.0 + kMagnitudeSlack)
            throw std::invalid_argument("evolved_state: factor magnitude above 1");
    TwoQutritState s;
    const double third = 1.0 / 3.0;
    at(s.rho, 0, 0) = at(s.rho, 4, 4) = at(s.rho, 8, 8) = Cx(third, 0.0);
    at(s.rho, 0, 4) = f.f15 * third;
    at(s.rho, 0, 8) = f.f19 * third;
    at(s.rho, 4, 8) = f.f59 * third;
    at(s.rho, 4, 0) = std::conj(at(s.rho, 0, 4));
    at(s.rho, 8, 0) = std::conj(at(s.rho, 0, 8));
    at(s.rho, 8, 4) = std::conj(at(s.rho, 4, 8));
    return s;
}

Mat9 partial_transpose(const TwoQutritState& s) {
    Mat9 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    at(out, 3 * i + j, 3 * k + l) = at(s.rho, 3 * k + j, 3 * i + l);
    return out;
}

std::array<double, 9> hermitian_eigenvalues(const Mat9& m, Mat9* vecs) {
    for (int r = 0; r < kDim; ++r)
        for (int c = r; c < kDim; ++c)
            if (std::abs(at(m, r, c) - std::conj(at(m, c, r))) > kHermitianTol)
                throw std::invalid_argument("hermitian_eigenvalues: input not Hermitian");

    Mat9 a = m;
    Mat9 v{};
    for (int i = 0; i < kDim; ++i) at(v, i, i) = Cx(1.0, 0.0);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= kOffDiagTol) break;
        for (int p = 0; p < kDim - 1; ++p)
            for (int q = p + 1; q < kDim; ++q) rotate(a, &v, p, q);
    }

    std::array<int, 9> order;
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&a](int x, int y) { return at(a, x, x).real() < at(a, y, y).real(); });

    std::array<double, 9> w;
    for (int i = 0; i < kDim; ++i) w[static_cast<std::size_t>(i)] = at(a, order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]).real();
    if (vecs) {
        Mat9 sorted{};
        for (int c = 0; c < kDim; ++c)
            for (int r = 0; r < kDim; ++r) at(sorted, r, c) = at(v, r, order[static_cast<std::size_t>(c)]);
        *vecs = sorted;
    }
    return w;
}

double negativity_spectral(const TwoQutritState& s) {
    const Mat9 pt = partial_transpose(s);
    const auto w = hermitian_eigenvalues(pt);
    double sum = 0.0;
    for (double x : w) sum += std::abs(x);
    return (sum - 1.0) / 2.0;
}

double negativity_closed_form(double f15_mag, double f19_mag, double f59_mag) {
    for (double v : {f15_mag, f19_mag, f59_mag})
        if (v < -kMagnitudeSlack || v > 1.0 + kMagnitudeSlack)
            throw std::invalid_argument("negativity_closed_form: magnitude outside [0, 1]");
    return (f15_mag + f19_mag + f59_mag) / 3.0;
}

}  // namespace negsim
