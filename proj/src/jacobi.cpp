#include "sge/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sge/errors.hpp"
#include "sge/theta.hpp"

namespace sge {

namespace {

constexpr double pole_guard_radius = 1e-9;
constexpr int max_series_terms = 10000;

// Distance from u to the pole lattice i K' + 2 m K + 2 n i K'.
// Solves the real 2x2 system in the (2K, 2iK') basis and checks the four
// surrounding lattice points.
double pole_distance(Cplx u, Cplx K, Cplx Kp) {
    Cplx e1 = 2.0 * K, e2 = 2.0 * iu * Kp;
    Cplx rhs = u - iu * Kp;
    double det = e1.real() * e2.imag() - e2.real() * e1.imag();
    if (std::abs(det) < 1e-300) return std::abs(rhs); // degenerate basis
    double a = (rhs.real() * e2.imag() - e2.real() * rhs.imag()) / det;
    double b = (e1.real() * rhs.imag() - rhs.real() * e1.imag()) / det;
    double best = std::numeric_limits<double>::infinity();
    for (double da : {std::floor(a), std::ceil(a)})
        for (double db : {std::floor(b), std::ceil(b)})
            best = std::min(best, std::abs(rhs - da * e1 - db * e2));
    return best;
}

JefBundle jef_trig(Cplx u) {
    return {std::sin(u), std::cos(u), Cplx(1.0)};
}

JefBundle jef_hyperbolic(Cplx u) {
    Cplx sech = 1.0 / std::cosh(u);
    return {std::tanh(u), sech, sech};
}

struct LatticeData {
    Cplx K, Kp, tau, v;
};

LatticeData lattice_for(const JefPoint& p) {
    Cplx K = complete_K(p.m);
    Cplx Kp = complete_K_prime(p.m);
    if (std::abs(K) == 0.0) throw DomainError("jef: K = 0");
    Cplx tau = iu * Kp / K;
    if (!(tau.imag() > 0.0)) throw DomainError("jef: period ratio left the upper half-plane");
    if (pole_distance(p.u, K, Kp) < pole_guard_radius)
        throw PoleProximity("jef: argument within 1e-9 of the pole lattice");
    return {K, Kp, tau, p.u / (2.0 * K)};
}

} // namespace

JefBundle jef(const JefPoint& p) {
    require_finite(p.u, "jef argument");
    if (p.m.k() == 0.0) return jef_trig(p.u);
    if (p.m.k_prime() == 0.0) return jef_hyperbolic(p.u);
    LatticeData lat = lattice_for(p);
    Cplx B = lat.tau;
    Cplx t20 = theta2(ThetaArgs{0.0, B});
    Cplx t30 = theta3(ThetaArgs{0.0, B});
    Cplx t40 = theta4(ThetaArgs{0.0, B});
    Cplx t1 = theta1(ThetaArgs{lat.v, B});
    Cplx t2 = theta2(ThetaArgs{lat.v, B});
    Cplx t3 = theta3(ThetaArgs{lat.v, B});
    Cplx t4 = theta4(ThetaArgs{lat.v, B});
    if (std::abs(t4) < 1e-12 * std::abs(t40))
        throw PoleProximity("jef: theta4 vanishes at the reduced argument");
    return {t30 / t20 * t1 / t4,
            t40 / t20 * t2 / t4,
            t40 / t30 * t3 / t4};
}

Cplx sn(const JefPoint& p) { return jef(p).sn; }
Cplx cn(const JefPoint& p) { return jef(p).cn; }
Cplx dn(const JefPoint& p) { return jef(p).dn; }

Cplx nd(const JefPoint& p) {
    Cplx d = jef(p).dn;
    if (std::abs(d) < pole_guard_radius) throw PoleProximity("nd: dn vanishes");
    return 1.0 / d;
}

Cplx sc(const JefPoint& p) {
    JefBundle b = jef(p);
    if (std::abs(b.cn) < pole_guard_radius) throw PoleProximity("sc: cn vanishes");
    return b.sn / b.cn;
}

Cplx nc(const JefPoint& p) {
    Cplx c = jef(p).cn;
    if (std::abs(c) < pole_guard_radius) throw PoleProximity("nc: cn vanishes");
    return 1.0 / c;
}

Cplx cs(const JefPoint& p) {
    JefBundle b = jef(p);
    if (std::abs(b.sn) < pole_guard_radius) throw PoleProximity("cs: sn vanishes");
    return b.cn / b.sn;
}

namespace {

struct SeriesData {
    Cplx K, Kp, q, w; // w = pi u / K
};

SeriesData series_setup(const JefPoint& p, const Nome& nome) {
    Cplx K = complete_K(p.m);
    Cplx Kp = complete_K_prime(p.m);
    Cplx tau = iu * Kp / K;
    Cplx ratio = p.u / K;
    if (!(std::abs(ratio.imag()) < tau.imag()))
        throw StripViolation("nome series: |Im(u/K)| must be below Im(iK'/K)");
    return {K, Kp, nome.q, pi * ratio};
}

} // namespace

Cplx sn_fourier(const JefPoint& p, const Nome& nome) {
    SeriesData s = series_setup(p, nome);
    Cplx q2 = s.q * s.q;
    Cplx qh = std::sqrt(s.q);   // q^{m+1/2}
    Cplx qo = s.q;              // q^{2m+1}
    Cplx acc = 0.0;
    int small = 0;
    for (int m = 0; m < max_series_terms; ++m, qh *= s.q, qo *= q2) {
        Cplx term = qh / (1.0 - qo) * std::sin((m + 0.5) * s.w);
        acc += term;
        small = (std::abs(term) < 1e-16 * (std::abs(acc) + std::abs(qh))) ? small + 1 : 0;
        if (m > 2 && small >= 2)
            return 2.0 * pi / (p.m.k() * s.K) * acc;
    }
    throw NonConvergence("sn_fourier did not converge");
}

Cplx dn_fourier(const JefPoint& p, const Nome& nome) {
    SeriesData s = series_setup(p, nome);
    Cplx qm = s.q; // q^{m+1}
    Cplx acc = 0.0;
    int small = 0;
    for (int m = 0; m < max_series_terms; ++m, qm *= s.q) {
        Cplx term = qm / (1.0 + qm * qm) * std::cos((m + 1.0) * s.w);
        acc += term;
        small = (std::abs(term) < 1e-16 * (std::abs(acc) + 1.0)) ? small + 1 : 0;
        if (m > 2 && small >= 2)
            return pi / (2.0 * s.K) + 2.0 * pi / s.K * acc;
    }
    throw NonConvergence("dn_fourier did not converge");
}

Cplx nd_fourier(const JefPoint& p, const Nome& nome) {
    SeriesData s = series_setup(p, nome);
    Cplx kp = p.m.k_prime();
    if (std::abs(kp) == 0.0) throw DomainError("nd_fourier: k' = 0");
    Cplx qm = s.q;
    Cplx acc = 0.0;
    double sign = -1.0; // (-1)^{m+1}
    int small = 0;
    for (int m = 0; m < max_series_terms; ++m, sign = -sign, qm *= s.q) {
        Cplx term = sign * qm / (1.0 + qm * qm) * std::cos((m + 1.0) * s.w);
        acc += term;
        small = (std::abs(term) < 1e-16 * (std::abs(acc) + 1.0)) ? small + 1 : 0;
        if (m > 2 && small >= 2)
            return pi / (2.0 * kp * s.K) + 2.0 * pi / (kp * s.K) * acc;
    }
    throw NonConvergence("nd_fourier did not converge");
}

namespace {

struct CscData {
    Cplx K, Kp;
};

CscData csc_setup(const JefPoint& p) {
    Cplx K = complete_K(p.m);
    Cplx Kp = complete_K_prime(p.m);
    Cplx tau = iu * Kp / K;
    if (!(std::abs((p.u / K).imag()) < tau.imag()))
        throw StripViolation("cosecant series: |Im(u/K)| must be below Im(iK'/K)");
    return {K, Kp};
}

} // namespace

Cplx sn_csc(const JefPoint& p, int n_terms) {
    if (n_terms < 1) throw DomainError("sn_csc: n_terms must be >= 1");
    CscData s = csc_setup(p);
    Cplx acc = 0.0;
    for (int m = -n_terms; m <= n_terms; ++m) {
        Cplx arg = pi / (2.0 * s.K) * (p.u - (2.0 * m - 1.0) * iu * s.Kp);
        Cplx sv = std::sin(arg);
        if (std::abs(sv) < 1e-14) throw PoleProximity("sn_csc: cosecant pole");
        acc += 1.0 / sv;
    }
    return pi / (2.0 * p.m.k() * s.K) * acc;
}

Cplx cn_csc(const JefPoint& p, int n_terms) {
    if (n_terms < 1) throw DomainError("cn_csc: n_terms must be >= 1");
    CscData s = csc_setup(p);
    Cplx acc = 0.0;
    for (int m = -n_terms; m <= n_terms; ++m) {
        Cplx arg = pi / (2.0 * s.K) * (p.u - (2.0 * m - 1.0) * iu * s.Kp);
        Cplx sv = std::sin(arg);
        if (std::abs(sv) < 1e-14) throw PoleProximity("cn_csc: cosecant pole");
        double sign = (m % 2 == 0) ? 1.0 : -1.0;
        acc += sign / sv;
    }
    return pi * iu / (2.0 * p.m.k() * s.K) * acc;
}

} // namespace sge
