#include "sge/elliptic.hpp"

#include <algorithm>
#include <cmath>

#include "sge/errors.hpp"
#include "sge/quadrature.hpp"
#include "sge/theta.hpp"

namespace sge {

namespace {

constexpr double complementarity_tol = 1e-12;

bool is_real(Cplx z) { return z.imag() == 0.0; }

} // namespace

Modulus::Modulus(Cplx k, Cplx k_prime) : k_(k), kp_(k_prime) {
    require_finite(k, "Modulus k");
    require_finite(k_prime, "Modulus k'");
    Cplx defect = k*k + k_prime*k_prime - 1.0;
    if (std::abs(defect) > complementarity_tol) {
        throw DomainError("Modulus: k^2 + k'^2 - 1 exceeds tolerance");
    }
}

Modulus Modulus::from_k(Cplx k) {
    require_finite(k, "Modulus k");
    return Modulus(k, std::sqrt(1.0 - k*k));
}

PeriodRatio::PeriodRatio(Cplx t) : tau(t) {
    require_finite(t, "PeriodRatio");
    if (!(t.imag() > 0.0)) throw DomainError("PeriodRatio: Im(tau) must be positive");
}

Nome::Nome(Cplx value) : q(value) {
    require_finite(value, "Nome");
    if (!(std::abs(value) < 1.0)) throw DomainError("Nome: |q| must be < 1");
}

namespace {

// K(k) for real k in [0, 1) by the arithmetic-geometric mean.
double complete_K_agm(double k) {
    double a = 1.0;
    double b = std::sqrt((1.0 - k) * (1.0 + k));
    for (int i = 0; i < 60 && std::abs(a - b) > 1e-17 * a; ++i) {
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return pi / (2.0 * a);
}

// sqrt on the principal branch, except that a negative real radicand maps to
// -i sqrt|x| (cut approached from below in the radicand, i.e. from above in
// the squared modulus).
Cplx sqrt_cut(Cplx w) {
    if (w.imag() == 0.0 && w.real() < 0.0) return Cplx(w.real(), -0.0);
    return w;
}

} // namespace

Cplx complete_K_msq(Cplx m) {
    require_finite(m, "complete_K modulus");
    // Snap a numerically-real squared modulus onto the axis so the cut side
    // stays deterministic and the singular split below stays reachable.
    if (m.imag() != 0.0 && std::abs(m.imag()) <= 1e-13 * std::max(1.0, std::abs(m.real())))
        m = Cplx(m.real(), 0.0);
    if (m == Cplx(1.0, 0.0)) throw ModulusSingular("complete_K: k = +-1");
    if (is_real(m) && m.real() < 1.0) {
        if (m.real() >= 0.0) return complete_K_agm(std::sqrt(m.real()));
        // negative squared modulus: integrand stays real and smooth
        double mr = m.real();
        return integrate_de([mr](double th) {
            double s = std::sin(th);
            return 1.0 / std::sqrt(1.0 - mr * s * s);
        }, 0.0, pi / 2);
    }
    if (is_real(m)) {
        // m > 1: split at the interior singularity and factor the radicand so
        // the distance to it enters without cancellation. The imaginary piece
        // carries the continuation from Im(m) > 0. Two parameterizations keep
        // the factored cosines well away from pi/2 on either side of m = 2.
        double mr = m.real();
        if (mr >= 2.0) {
            double r = std::sqrt(mr);
            double split = std::asin(1.0 / r); // <= pi/4
            auto below = [&](double x) { // theta = split - x
                double th = split - x;
                double gap = 2.0 * std::cos(split - 0.5 * x) * std::sin(0.5 * x);
                return 1.0 / std::sqrt(r * (1.0 + r * std::sin(th)) * gap);
            };
            auto above = [&](double x) { // theta = split + x
                double th = split + x;
                double gap = 2.0 * std::cos(split + 0.5 * x) * std::sin(0.5 * x);
                return 1.0 / std::sqrt(r * (1.0 + r * std::sin(th)) * gap);
            };
            double re = integrate_de(below, 0.0, split);
            double im = integrate_de(above, 0.0, pi / 2 - split);
            return Cplx(re, im);
        }
        // 1 < m < 2: work in the complementary angle, singularity at
        // sin(psi*) = sqrt((m-1)/m) with psi* <= pi/4
        double sstar = std::sqrt((mr - 1.0) / mr);
        double psis = std::asin(sstar);
        auto outer = [&](double x) { // psi = psis + x, real part
            double psi = psis + x;
            double gap = 2.0 * std::cos(psis + 0.5 * x) * std::sin(0.5 * x);
            return 1.0 / std::sqrt(mr * (std::sin(psi) + sstar) * gap);
        };
        auto inner = [&](double x) { // psi = psis - x, imaginary part
            double psi = psis - x;
            double gap = 2.0 * std::cos(psis - 0.5 * x) * std::sin(0.5 * x);
            return 1.0 / std::sqrt(mr * (sstar + std::sin(psi)) * gap);
        };
        double re = integrate_de(outer, 0.0, pi / 2 - psis);
        double im = integrate_de(inner, 0.0, psis);
        return Cplx(re, im);
    }
    auto f = [m](double th) {
        double s = std::sin(th);
        return 1.0 / std::sqrt(sqrt_cut(1.0 - m * s * s));
    };
    return integrate_de(f, 0.0, pi / 2);
}

Cplx complete_K(const Modulus& m) {
    return complete_K_msq(m.k() * m.k());
}

Cplx complete_K_prime(const Modulus& m) {
    return complete_K_msq(m.k_prime() * m.k_prime());
}

QuarterPeriods quarter_periods(const Modulus& m) {
    return {complete_K(m), complete_K_prime(m)};
}

PeriodRatio tau_from_modulus(const Modulus& m) {
    Cplx K = complete_K(m);
    if (std::abs(K) == 0.0) throw DomainError("tau_from_modulus: K = 0");
    return PeriodRatio(iu * complete_K_prime(m) / K);
}

Nome nome_from_tau(const PeriodRatio& t) {
    return Nome(std::exp(iu * pi * t.tau));
}

Modulus modulus_from_tau(const PeriodRatio& t) {
    Cplx t2 = theta2(ThetaArgs{0.0, t.tau});
    Cplx t3 = theta3(ThetaArgs{0.0, t.tau});
    Cplx t4 = theta4(ThetaArgs{0.0, t.tau});
    Cplx r2 = t2 / t3, r4 = t4 / t3;
    return Modulus(r2 * r2, r4 * r4);
}

std::vector<double> unwrap_phase(std::span<const Cplx> samples) {
    std::vector<double> out;
    out.reserve(samples.size());
    if (samples.empty()) return out;
    if (!is_finite(samples[0]) || samples[0] == Cplx(0.0))
        throw DomainError("unwrap_phase: zero or non-finite sample");
    out.push_back(std::arg(samples[0]));
    for (std::size_t j = 1; j < samples.size(); ++j) {
        if (!is_finite(samples[j]) || samples[j] == Cplx(0.0))
            throw DomainError("unwrap_phase: zero or non-finite sample");
        double d = std::arg(samples[j] * std::conj(samples[j - 1]));
        if (!(std::abs(d) < pi * (1.0 - 1e-12)))
            throw PhaseJump("unwrap_phase: consecutive arguments differ by >= pi; refine the grid");
        out.push_back(out.back() + d);
    }
    return out;
}

} // namespace sge
