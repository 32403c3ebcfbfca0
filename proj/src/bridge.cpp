#include "sge/bridge.hpp"

#include <cmath>

#include "sge/errors.hpp"
#include "sge/jacobi.hpp"
#include "sge/quadrature.hpp"
#include "sge/theta.hpp"

namespace sge {

namespace {

double mod2(double x) {
    double r = std::remainder(x, 2.0);
    return r;
}

} // namespace

BreatherBridge breather_bridge(double k_b, int branch) {
    if (!(k_b > 0.0 && k_b < 1.0)) throw DomainError("breather_bridge: k_b must be in (0,1)");
    BreatherBridge b{};
    b.k_b = k_b;
    b.H = 2.0 * k_b * k_b;
    Modulus mb = Modulus::from_k(k_b);
    Cplx Kb = complete_K(mb), Kpb = complete_K_prime(mb);
    b.K_b = Kb.real();
    b.t0 = b.K_b;
    b.tau_b = iu * Kpb / Kb;
    b.q_b = nome_from_tau(PeriodRatio(b.tau_b)).q;
    b.tau1 = (1.0 + b.tau_b) / 2.0;
    b.q1 = nome_from_tau(PeriodRatio(b.tau1)).q;
    b.q_tilde = -iu * b.q1;
    b.r_nome = std::abs(b.q_b - b.q_tilde * b.q_tilde);
    Modulus m1 = modulus_from_tau(PeriodRatio(b.tau1));
    b.k1 = m1.k();
    b.k1_prime = m1.k_prime();
    Cplx t30 = theta3(ThetaArgs{0.0, b.tau1});
    b.K1 = pi / 2.0 * t30 * t30;
    Cplx principal = std::sqrt(b.k1_prime);
    if (branch == 0) {
        double rp = std::abs(Kb - principal * b.K1);
        double rm = std::abs(Kb + principal * b.K1);
        b.branch = (rp <= rm) ? +1 : -1;
    } else {
        b.branch = branch;
    }
    b.sqrt_k1p = static_cast<double>(b.branch) * principal;
    b.r_periods = std::abs(Kb - b.sqrt_k1p * b.K1);
    if (b.r_periods > 1e-6)
        throw BranchInconsistent("breather_bridge: no branch of sqrt(k1') satisfies K_b = sqrt(k1') K1");
    b.a = -iu / (4.0 * Kb);
    b.r_rate = std::abs(b.a - 1.0 / (4.0 * iu * b.sqrt_k1p * b.K1));
    Cplx tau_tilde = std::log(b.q_tilde) / (iu * pi);
    b.r_tau = std::abs(b.tau_b - 2.0 * tau_tilde);
    // complement-reciprocal relation of the transformation chain:
    // with k1c = 1/k'_k and k'_k = i k_b'/k_b, the complement of k1c squares
    // to 1/k_b'^2.
    double kbp = std::sqrt((1.0 - k_b) * (1.0 + k_b));
    Cplx kpk = iu * kbp / k_b;
    Cplx k1c = 1.0 / kpk;
    Cplx k1c_comp_sq = 1.0 - k1c * k1c;
    b.r_chain = std::abs(k1c_comp_sq - 1.0 / (kbp * kbp));
    return b;
}

KinkBridge kink_bridge(double k_k) {
    if (!(k_k > 0.0 && k_k <= 1.0)) throw DomainError("kink_bridge: k_k must be in (0,1]");
    KinkBridge b{};
    b.k_k = k_k;
    b.H = 2.0 / (k_k * k_k);
    b.k_k_prime = std::sqrt((1.0 - k_k) * (1.0 + k_k));
    if (k_k == 1.0) {
        // separatrix boundary: k' = -1 is degenerate, no bridge
        b.k_prime = -1.0;
        throw Degenerate("kink_bridge: k_k = 1 is the separatrix boundary");
    }
    Modulus mk = Modulus::from_k(k_k);
    b.K_k = complete_K(mk).real();
    b.K_pk = complete_K_prime(mk).real();
    b.k_prime = (b.k_k_prime - 1.0) / (b.k_k_prime + 1.0);
    b.k = std::sqrt((1.0 - b.k_prime) * (1.0 + b.k_prime));
    Modulus m(b.k, b.k_prime);
    b.K = complete_K(m).real();
    b.Kp = complete_K_msq(Cplx(b.k_prime * b.k_prime)).real();
    b.tau = iu * b.Kp / b.K;
    b.tau_k = iu * b.K_pk / b.K_k;
    b.r_period_scale = std::abs(b.Kp - 0.5 * (1.0 + b.k_k_prime) * b.K_k);
    Cplx d = (-1.0 / b.tau) - 2.0 * (b.tau_k - 1.0);
    b.r_tau_map = std::abs(Cplx(mod2(d.real()), d.imag()));
    Cplx sqrt_kp = std::sqrt(Cplx(b.k_prime)); // principal, +i|.|
    b.r_coeff1 = std::abs(2.0 * sqrt_kp * b.Kp - iu * k_k * b.K_k);
    double k1 = 1.0 / b.k_k_prime;
    b.s0 = iu * (b.k_k_prime / k_k) * (1.0 - k1);
    b.r_s0 = std::abs(b.s0 * b.s0 - b.k_prime);
    b.a = -1.0 / (4.0 * b.K * b.s0) / iu;
    b.r_coeff2 = std::abs(1.0 / (2.0 * b.K_k * k_k) - 1.0 / (4.0 * std::abs(sqrt_kp) * b.Kp));
    return b;
}

double verify_equivalence_breather(double H, const Grid& g) {
    if (!(H > 0.0 && H < 2.0)) throw EnergyRange("verify_equivalence_breather: need 0 < H < 2");
    SolutionParams p = make_theta_params_breather(H, complete_K(Modulus::from_k(std::sqrt(H / 2.0))).real());
    // direct side at t0 = K_b, matching the theta parameters
    double worst = 0.0;
    for (double t : g.points()) {
        Cplx wd = breather_direct_w(t, H, p.t0);
        Cplx wt = p.prefactor * theta_ratio_43(p.l0 + p.l_rate * t, p.B);
        worst = std::max(worst, std::abs(wd - wt));
    }
    return worst;
}

KinkEquivalenceReport verify_equivalence_kink(double H, const Grid& g) {
    if (!(H > 2.0)) throw EnergyRange("verify_equivalence_kink: need H > 2");
    KinkEquivalenceReport rep{};
    double kk = std::sqrt(2.0 / H);
    double kpk = std::sqrt((1.0 - kk) * (1.0 + kk));
    double k1 = 1.0 / kpk;
    double kp = (kpk - 1.0) / (kpk + 1.0);
    double k = std::sqrt((1.0 - kp) * (1.0 + kp));
    Modulus m(k, kp);
    double K = complete_K(m).real();
    double Kp = complete_K_msq(Cplx(kp * kp)).real();
    Cplx s0 = iu * (kpk / kk) * (1.0 - k1);
    rep.r_coeff = std::abs(s0 * s0 - kp);
    // nd-argument constant from the chain: ((1+k1)/(2 k1)) (K'_k + i K_k);
    // it must land on K/2 + iK'.
    Modulus mk = Modulus::from_k(kk);
    Cplx Kk = complete_K(mk), Kpk2 = complete_K_prime(mk);
    rep.r_K_recip = std::abs(complete_K_msq(Cplx(k1 * k1)) - kpk * (Kpk2 + iu * Kk));
    Cplx C = (1.0 + k1) / (2.0 * k1) * (Kpk2 + iu * Kk);
    rep.r_const = std::abs(C - (0.5 * K + iu * Kp));
    Cplx beta = -iu * (1.0 + k1) / (2.0 * k1 * kk);
    rep.r_rate = std::abs(beta - (-1.0 / (2.0 * s0)));
    double worst = 0.0;
    for (double t : g.points()) {
        Cplx wd = kink_direct_w(t, H, 0.0);
        Cplx u = 0.5 * K + iu * Kp - t / (2.0 * s0);
        Cplx wt = s0 * nd(JefPoint{u, m});
        worst = std::max(worst, std::abs(wd - wt));
    }
    rep.end_to_end = worst;
    return rep;
}

PeriodIntegral period_integral_kink(const KinkSpectrum& s) {
    if (!(s.eta > 0.0)) throw EnergyRange("period_integral_kink: eta must be positive");
    PeriodIntegral out{};
    double E1 = s.E1, E2 = s.E2;
    double lambda = (E2 - E1) / (-E1);
    out.closed = -4.0 / std::sqrt(-E1) * complete_K_msq(Cplx(lambda));
    // two-argument form: Ec is the exact distance to the nearest endpoint,
    // avoiding cancellation in the vanishing factors
    double mid = 0.5 * (E1 + E2);
    auto f = [&](double E, double Ec) {
        double d1 = (E < mid) ? std::abs(Ec) : E - E1;  // E - E1 >= 0
        double d2 = (E < mid) ? E - E2 : -std::abs(Ec); // E - E2 <= 0
        return 1.0 / std::sqrt(E * d1 * d2);
    };
    out.oracle = -2.0 * integrate_de(f, E1, E2);
    // companion cycle through the period ratio of the spectral modulus
    Modulus mk = Modulus::from_k(std::sqrt(lambda));
    out.second = (iu * complete_K_prime(mk) / complete_K(mk)) * out.closed;
    out.rel_magnitude = std::abs(std::abs(out.closed) - std::abs(out.oracle)) / std::abs(out.closed);
    return out;
}

PeriodIntegral period_integral_breather(const BreatherSpectrum& s) {
    if (!(s.phi > pi && s.phi < 2.0 * pi))
        throw EnergyRange("period_integral_breather: phi must be in (pi, 2 pi)");
    PeriodIntegral out{};
    Cplx E1 = s.E1, E2 = s.E2;
    double absE1 = std::abs(E1);
    out.closed = -4.0 / std::sqrt(absE1) * complete_K_msq(Cplx(std::pow(std::cos(s.phi / 2.0), 2)));
    // straight segment from Re(E1) up to E1, principal square root. The
    // substitution y = Y(1 - s^2) makes E - E1 = -iYs^2 exact, so the
    // endpoint factor carries no cancellation and s^2 > 0 pulls out of the
    // principal root.
    double x0 = E1.real(), Y = E1.imag();
    auto f = [&](double s) {
        Cplx E(x0, Y * (1.0 - s) * (1.0 + s));
        return 2.0 * iu * Y / std::sqrt(E * (-iu * Y) * (E - E2));
    };
    out.oracle = 4.0 * integrate_de(f, 0.0, 1.0).real();
    // Branch-tracked ellipse around the segment [E2, E1]. Informational: the
    // cycle the segment formula represents. Skipped when the third branch
    // point E = 0 sits too close to the segment to exclude.
    Cplx c = (E1 + E2) / 2.0;
    double seg = std::abs(E1 - E2);
    if (std::abs(c) > 0.15 * seg) {
        const int n = 20000;
        Cplx dir = (E1 - E2) / seg;
        Cplx perp = iu * dir;
        double ra = 0.525 * seg;
        double rb = 0.5 * std::abs(c);
        Cplx total = 0.0, prev = 0.0;
        bool have_prev = false;
        for (int j = 0; j < n; ++j) {
            double th = 2.0 * pi * (j + 0.5) / n;
            Cplx E = c + ra * std::cos(th) * dir + rb * std::sin(th) * perp;
            Cplx dE = (-ra * std::sin(th) * dir + rb * std::cos(th) * perp) * (2.0 * pi / n);
            Cplx w = std::sqrt(E * (E - E1) * (E - E2));
            if (have_prev && (w * std::conj(prev)).real() < 0.0) w = -w;
            total += dE / w;
            prev = w;
            have_prev = true;
        }
        out.loop = total;
    }
    Modulus mh = Modulus::from_k(std::abs(std::cos(s.phi / 2.0)));
    out.second = (iu * complete_K_prime(mh) / complete_K(mh)) * out.closed;
    out.rel_magnitude = std::abs(std::abs(out.closed) - std::abs(out.oracle)) / std::abs(out.closed);
    return out;
}

namespace {

ModularChain build_chain(Cplx phi) {
    ModularChain c{};
    c.phi = phi;
    c.s_b = std::cos(phi / 2.0);
    c.s_b_prime = std::sin(phi / 2.0);
    c.tau_b = iu * complete_K_msq(c.s_b_prime * c.s_b_prime) / complete_K_msq(c.s_b * c.s_b);
    c.tau_2 = 1.0 + c.tau_b;
    c.tau_1 = c.tau_2 / 2.0;
    c.s_2 = iu * c.s_b / c.s_b_prime;
    c.s_2_prime = 1.0 / c.s_b_prime;
    c.s_1_prime = (1.0 - c.s_2) / (1.0 + c.s_2);
    c.r_s1p = std::abs(c.s_1_prime + std::exp(iu * phi));
    c.lambda_b = std::exp(2.0 * iu * phi);
    // k3 = i cot(phi/2) and its cross-ratio form with sqrt(lambda) = e^{i phi}
    c.k3 = iu * c.s_b / c.s_b_prime;
    Cplx sqrt_lambda = std::exp(iu * phi);
    Cplx k3_dual = (1.0 + sqrt_lambda) / (1.0 - sqrt_lambda);
    c.r_k3 = std::abs(c.k3 - k3_dual);
    c.h = c.s_b_prime;
    c.h_prime = c.s_b;
    return c;
}

} // namespace

ModularChain kink_breather_chain_phi(double phi) {
    if (!(phi > pi && phi < 2.0 * pi))
        throw DomainError("kink_breather_chain_phi: phi must be in (pi, 2 pi)");
    ModularChain c = build_chain(Cplx(phi));
    c.k_k_route1 = 1.0 / c.s_b_prime; // reciprocal of the breather modulus
    c.k_k_route2 = c.k_k_route1;
    c.r_kk = 0.0;
    c.r_tau3 = 0.0;
    return c;
}

ModularChain kink_breather_chain_eta(double eta) {
    if (!(eta > 0.0)) throw DomainError("kink_breather_chain_eta: eta must be positive");
    Cplx phi = pi + iu * eta;
    ModularChain c = build_chain(phi);
    // continued complement must collapse to e^{-eta}
    c.r_s1p = std::abs(c.s_1_prime - std::exp(-eta));
    double H = 1.0 + std::cosh(eta);
    c.k_k_route1 = std::sqrt(2.0 / H);
    c.k_k_route2 = 1.0 / std::cosh(eta / 2.0);
    c.r_kk = std::abs(c.k_k_route1 - c.k_k_route2);
    // kink-side period ratio and the doubled lattice relation
    double spk = std::exp(-eta);
    double sk = std::sqrt((1.0 - spk) * (1.0 + spk));
    c.tau_k = iu * complete_K_msq(Cplx(spk * spk)) / complete_K_msq(Cplx(sk * sk));
    c.tau_3 = 2.0 * c.tau_k;
    Cplx d = c.tau_3 - (c.tau_b + 1.0);
    c.r_tau3 = std::abs(Cplx(mod2(d.real()), d.imag()));
    return c;
}

std::pair<double, double> coefficient_relations(double k_k) {
    KinkBridge b = kink_bridge(k_k);
    return {b.r_coeff1, b.r_coeff2};
}

} // namespace sge
