// Acceptance suite: one line per criterion, PASS/FAIL against the pinned
// tolerance, nonzero exit if anything fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "sge/bridge.hpp"
#include "sge/elliptic.hpp"
#include "sge/jacobi.hpp"
#include "sge/solutions.hpp"
#include "sge/theta.hpp"
#include "sge/transforms.hpp"

using namespace sge;

namespace {

int failures = 0;

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const auto start = clock::now();
    return std::chrono::duration<double>(clock::now() - start).count();
}

void report(int id, const char* name, double value, double tol, bool pass,
            const char* extra = "") {
    if (!pass) ++failures;
    std::printf("criterion-%02d %-28s max=%-12.3e tol=%-9.1e %s%s\n",
                id, name, value, tol, pass ? "PASS" : "FAIL", extra);
}

void criterion_1_field_residuals() {
    double t0 = now_seconds();
    Grid g{-5.0, 5.0, 1e-4};
    double worst = 0.0;
    for (double H : {0.2, 1.0, 1.8}) worst = std::max(worst, field_residual_breather(H, g));
    for (double H : {2.5, 4.0, 10.0}) worst = std::max(worst, field_residual_kink(H, g));
    double dt = now_seconds() - t0;
    char extra[64];
    std::snprintf(extra, sizeof extra, "  (%.2f s, limit 5 s)", dt);
    report(1, "field-equation residuals", worst, 1e-6, worst <= 1e-6 && dt < 5.0, extra);
}

void criterion_2_reciprocal() {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> dk(0.05, 0.95), dt(-4.0, 4.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        auto [rs, rc] = reciprocal_modulus_identities(dt(rng), Modulus::from_k(dk(rng)));
        worst = std::max(worst, std::max(rs, rc));
    }
    report(2, "reciprocal-modulus identity", worst, 1e-9, worst <= 1e-9);
}

void criterion_3_landen() {
    std::mt19937 rng(202);
    std::uniform_real_distribution<double> dk(0.05, 0.95), dre(-2.0, 2.0), dim(-0.5, 0.5);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        Cplx u(dre(rng), dim(rng));
        worst = std::max(worst, landen_gauss_identity(u, Modulus::from_k(dk(rng))));
    }
    report(3, "landen quadratic identity", worst, 1e-9, worst <= 1e-9);
}

void criterion_4_kink_bridge() {
    double worst_scale = 0.0, worst_tau = 0.0;
    for (int i = 0; i < 20; ++i) {
        double kk = 0.1 + (0.99 - 0.1) * i / 19.0;
        KinkBridge b = kink_bridge(kk);
        worst_scale = std::max(worst_scale, b.r_period_scale);
        worst_tau = std::max(worst_tau, b.r_tau_map);
    }
    double worst = std::max(worst_scale, worst_tau);
    report(4, "kink bridge relations", worst, 1e-9, worst <= 1e-9);
}

void criterion_5_breather_bridge() {
    double worst = 0.0, worst_tau = 0.0;
    for (int i = 0; i < 20; ++i) {
        double kb = 0.05 + (0.95 - 0.05) * i / 19.0;
        BreatherBridge b = breather_bridge(kb);
        worst = std::max({worst, b.r_nome, std::abs(b.t0 - b.K_b), b.r_periods});
        worst_tau = std::max(worst_tau, b.r_tau);
    }
    bool pass = worst <= 1e-9 && worst_tau <= 1e-10;
    report(5, "breather bridge relations", std::max(worst, worst_tau), 1e-9, pass);
}

void criterion_6_equivalence() {
    double t0 = now_seconds();
    Grid g{-3.0, 3.0, 0.05};
    double worst = 0.0;
    for (double H : {0.3, 0.7, 1.2, 1.6, 1.9}) {
        worst = std::max(worst, verify_equivalence_breather(H, g));
    }
    for (double H : {2.5, 3.0, 4.0, 6.0, 10.0}) {
        worst = std::max(worst, verify_equivalence_kink(H, g).end_to_end);
    }
    double dt = now_seconds() - t0;
    char extra[64];
    std::snprintf(extra, sizeof extra, "  (%.2f s, limit 10 s)", dt);
    report(6, "representation equivalence", worst, 1e-8, worst <= 1e-8 && dt < 10.0, extra);
}

void criterion_7_period_integrals() {
    double worst_kink = 0.0;
    for (double eta : {0.5, 1.0, 2.0}) {
        auto r = period_integral_kink(kink_spectrum_from_energy(1.0 + std::cosh(eta)));
        worst_kink = std::max(worst_kink, r.rel_magnitude);
    }
    report(7, "period integral (kink)", worst_kink, 1e-7, worst_kink <= 1e-7);
    double worst_breather = 0.0;
    for (double f : {1.1, 1.5, 1.9}) {
        double phi = f * pi;
        BreatherSpectrum s{phi, std::exp(-iu * phi) / 16.0, std::exp(iu * phi) / 16.0};
        auto r = period_integral_breather(s);
        worst_breather = std::max(worst_breather, r.rel_magnitude);
        if (r.rel_magnitude > 1e-6) {
            double cycle = 16.0 * complete_K_msq(Cplx(std::pow(std::sin(phi / 2.0), 2))).real();
            std::printf("    note: phi=%.1fpi closed form |%.6f| (modulus |cos(phi/2)|) is a\n"
                        "    different period than the segment integral; the tracked (E1,E2)\n"
                        "    loop gives |%.6f| = (4/sqrt|E1|) K(sin(phi/2)) = %.6f, i.e. the\n"
                        "    reduction chain switches cycles at phi = 3pi/2.\n",
                        f, std::abs(r.closed), std::abs(r.loop), cycle);
        }
    }
    report(7, "period integral (breather)", worst_breather, 1e-6, worst_breather <= 1e-6);
}

void criterion_8_modular_cases() {
    std::mt19937 rng(808);
    std::uniform_real_distribution<double> dre(-0.8, 0.8), dim(0.5, 1.6);
    double worst_comp = 0.0, worst_group = 0.0, worst_theta = 0.0;
    for (int i = 0; i < 20; ++i) {
        Cplx tau(dre(rng), dim(rng));
        Modulus m = modulus_from_tau(PeriodRatio(tau));
        for (int id = 1; id <= 6; ++id) {
            auto r = apply_modular_case(id, PeriodRatio(tau), m);
            worst_comp = std::max(worst_comp,
                std::abs(r.m.k() * r.m.k() + r.m.k_prime() * r.m.k_prime() - 1.0));
            Modulus md = modulus_from_tau(r.tau_uhp);
            worst_theta = std::max(worst_theta,
                std::max(std::abs(md.k() * md.k() - r.m.k() * r.m.k()),
                         std::abs(md.k_prime() * md.k_prime() - r.m.k_prime() * r.m.k_prime())));
        }
        worst_group = std::max(worst_group,
            std::abs(modular_case_tau(5, tau) - modular_case_tau(4, modular_case_tau(2, tau))));
        worst_group = std::max(worst_group,
            std::abs(modular_case_tau(6, tau) - modular_case_tau(4, modular_case_tau(3, tau))));
    }
    bool pass = worst_comp <= 1e-12 && worst_group <= 1e-12 && worst_theta <= 1e-9;
    report(8, "modular case table", std::max({worst_comp, worst_group, worst_theta}), 1e-9, pass);
}

void criterion_9_trains() {
    TrainParams p = make_kink_train(0.3, 0.2, 0.5, 20);
    const double xs[] = {-1.2, -0.7, -0.2, 0.1, 0.35, 0.6, 0.9, 1.3, 1.7, 2.1};
    const double ts[] = {0.0, 0.4, -0.6, 1.1, -1.3, 0.8, 0.2, -0.9, 1.6, -0.3};
    double worst = 0.0;
    for (int i = 0; i < 10; ++i)
        worst = std::max(worst,
            std::abs(kink_train(xs[i], ts[i], p) - kink_train_theta(xs[i], ts[i], p)));
    TrainParams bp = make_breather_train(0.2, 0.0, 0.6, 10);
    double wind = std::abs(breather_train(0.4 + 2.0 * bp.L, 0.1, bp) - breather_train(0.4, 0.1, bp));
    bool pass = worst <= 1e-6 && wind <= 1e-6;
    report(9, "train equivalence", std::max(worst, wind), 1e-6, pass);
}

void criterion_10_three_paths() {
    std::mt19937 rng(1010);
    std::uniform_real_distribution<double> dk(0.2, 0.8), dre(-1.5, 1.5), dfr(-0.5, 0.5);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        double k = dk(rng);
        Modulus m = Modulus::from_k(k);
        Cplx K = complete_K(m), Kp = complete_K_prime(m);
        double strip = (Kp / K).real();
        JefPoint p{K * Cplx(dre(rng), dfr(rng) * strip), m};
        Nome q = nome_from_tau(tau_from_modulus(m));
        Cplx a = sn(p), b = sn_fourier(p, q), c = sn_csc(p, 80);
        worst = std::max({worst, std::abs(a - b), std::abs(b - c), std::abs(a - c)});
    }
    report(10, "three-path agreement", worst, 1e-8, worst <= 1e-8);
}

void criterion_11_regime_continuity() {
    const double eps = 1e-4;
    double worst = 0.0;
    for (double t = -3.0; t <= 3.0 + 1e-9; t += 0.05) {
        double ref = 2.0 * std::asin(std::tanh(t));
        worst = std::max(worst, std::abs(breather_direct(t, 2.0 - eps, 0.0) - ref));
        worst = std::max(worst, std::abs(kink_direct(t, 2.0 + eps, 0.0) - ref));
    }
    report(11, "regime boundary continuity", worst, 1e-3, worst <= 1e-3);
}

} // namespace

int main() {
    criterion_1_field_residuals();
    criterion_2_reciprocal();
    criterion_3_landen();
    criterion_4_kink_bridge();
    criterion_5_breather_bridge();
    criterion_6_equivalence();
    criterion_7_period_integrals();
    criterion_8_modular_cases();
    criterion_9_trains();
    criterion_10_three_paths();
    criterion_11_regime_continuity();
    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
