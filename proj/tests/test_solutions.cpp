#include "doctest.h"

#include <cmath>

#include "sge/errors.hpp"
#include "sge/jacobi.hpp"
#include "sge/solutions.hpp"

using namespace sge;

TEST_CASE("energy and spectrum maps") {
    auto b = breather_spectrum_from_energy(2.0);
    CHECK(std::abs(b.phi - pi) <= 1e-12);
    CHECK(std::abs(b.E1 - Cplx(-1.0 / 16.0)) <= 1e-15);
    CHECK(std::abs(energy_from_spectrum(b) - 2.0) <= 1e-12);

    auto b1 = breather_spectrum_from_energy(1.0);
    CHECK(std::abs(b1.phi - 3.0 * pi / 2.0) <= 1e-12);
    CHECK(std::abs(b1.E2 - std::conj(b1.E1)) == 0.0);
    CHECK(std::abs(std::abs(b1.E1) - 1.0 / 16.0) <= 1e-16);

    auto k0 = kink_spectrum_from_energy(2.0);
    CHECK(k0.eta == 0.0);
    auto k4 = kink_spectrum_from_energy(4.0);
    CHECK(k4.E1 < k4.E2);
    CHECK(k4.E2 < 0.0);
    CHECK(std::abs(energy_from_spectrum(k4) - 4.0) <= 1e-12);

    for (double H : {0.3, 0.9, 1.7}) {
        CHECK(std::abs(energy_from_spectrum(breather_spectrum_from_energy(H)) - H) <= 1e-12);
    }
    for (double H : {2.4, 5.0, 11.0}) {
        CHECK(std::abs(energy_from_spectrum(kink_spectrum_from_energy(H)) - H) <= 1e-12);
    }
    CHECK_THROWS_AS(breather_spectrum_from_energy(2.5), EnergyRange);
    CHECK_THROWS_AS(kink_spectrum_from_energy(1.5), EnergyRange);
}

TEST_CASE("breather examples") {
    // small oscillation bound
    for (double t : {0.0, 0.7, 3.0}) {
        CHECK(std::abs(breather_direct(t, 1e-6, 0.0)) <= 1.5e-3);
    }
    // separatrix energy gives the arcsin-of-tanh profile
    for (double t : {-1.0, 0.2, 2.5}) {
        CHECK(std::abs(breather_direct(t, 2.0, 0.0) - 2.0 * std::asin(std::tanh(t))) <= 1e-12);
    }
    // quarter-period value
    double H = 1.0;
    double kb = std::sqrt(H / 2.0);
    double K = complete_K(Modulus::from_k(kb)).real();
    CHECK(std::abs(breather_direct(K, H, 0.0) - pi / 2.0) <= 1e-11);
    CHECK_THROWS_AS(breather_direct(0.0, 3.0, 0.0), EnergyRange);
    // periodicity in t with the full period
    double T = 4.0 * K;
    CHECK(std::abs(breather_direct(0.3 + T, H, 0.0) - breather_direct(0.3, H, 0.0)) <= 1e-10);
}

TEST_CASE("kink examples and winding") {
    CHECK(std::abs(kink_direct(0.0, 4.0, 0.0)) <= 1e-13);
    // k_k = 1 boundary agrees with the arcsin-of-tanh profile
    for (double t : {-2.0, 0.4, 1.0}) {
        CHECK(std::abs(kink_direct(t, 2.0, 0.0) - 2.0 * std::asin(std::tanh(t))) <= 1e-12);
    }
    // arcsin form agrees with the unwound log form where both are principal
    for (double t : {0.2, 0.5}) {
        double kkv = std::sqrt(0.5);
        Cplx s = sn(JefPoint{Cplx(t / kkv), Modulus::from_k(kkv)});
        CHECK(std::abs(kink_direct(t, 4.0, 0.0) - 2.0 * std::asin(s.real())) <= 1e-10);
    }
    // sn at the quarter period: q = pi
    double H = 8.0;
    double kk = std::sqrt(2.0 / H);
    double K = complete_K(Modulus::from_k(kk)).real();
    CHECK(std::abs(kink_direct(kk * K, H, 0.0) - pi) <= 1e-11);
    CHECK_THROWS_AS(kink_direct(0.0, 1.0, 0.0), EnergyRange);

    // unwrapped rotation advances by 2 pi per real half-period of the argument
    double period = 2.0 * std::sqrt(0.5) * complete_K(Modulus::from_k(std::sqrt(0.5))).real();
    auto samples = eval_kink_direct(Grid{0.0, period, period / 500.0}, 4.0, 0.0);
    CHECK(std::abs((samples.back().q - samples.front().q) - 2.0 * pi) <= 1e-9);
    for (std::size_t j = 1; j < samples.size(); ++j)
        CHECK(samples[j].q > samples[j - 1].q); // monotone rotation
}

TEST_CASE("separatrix") {
    CHECK(std::abs(separatrix(0.0, 0.0, 0.0, 0.0, +1) - pi) <= 1e-15);
    CHECK(std::abs(separatrix(30.0, 0.0, 0.0, 0.0, +1) - 2.0 * pi) <= 1e-12);
    CHECK(std::abs(separatrix(-30.0, 0.0, 0.0, 0.0, +1)) <= 1e-12);
    // antikink falls from 2 pi to 0
    CHECK(std::abs(separatrix(-30.0, 0.0, 0.0, 0.0, -1) - 2.0 * pi) <= 1e-12);
    double v = 0.6;
    double phi = 1.0 / 0.8;
    CHECK(std::abs(separatrix(1.0, 0.0, 0.0, v, +1) - 4.0 * std::atan(std::exp(phi))) <= 1e-14);
    // log form agrees
    Cplx w = separatrix_w(1.0, 0.3, 0.1, v, +1);
    CHECK(std::abs(-2.0 * std::arg(w) - separatrix(1.0, 0.3, 0.1, v, +1)) <= 1e-12);
    CHECK_THROWS_AS(separatrix(0.0, 0.0, 0.0, 1.2, +1), SuperluminalVelocity);
}

TEST_CASE("theta representation matches the direct forms") {
    // breather
    for (double H : {0.3, 1.0, 1.8}) {
        double kb = std::sqrt(H / 2.0);
        double t0 = complete_K(Modulus::from_k(kb)).real(); // offset by one quarter period
        SolutionParams p = make_theta_params_breather(H, t0);
        for (double t : {-2.1, -0.4, 0.0, 0.8, 2.7}) {
            ThetaRepSample s = theta_rep(t, p);
            CHECK(s.route_residual <= 1e-9);
            CHECK(std::abs(s.w - breather_direct_w(t, H, t0)) <= 1e-9);
        }
    }
    // kink
    for (double H : {2.5, 4.0, 9.0}) {
        SolutionParams p = make_theta_params_kink(H, 0.0);
        for (double t : {-1.8, -0.3, 0.6, 2.2}) {
            ThetaRepSample s = theta_rep(t, p);
            CHECK(s.route_residual <= 1e-9);
            CHECK(std::abs(s.w - kink_direct_w(t, H, 0.0)) <= 1e-9);
        }
    }
    // grid evaluation is real and branch-continuous
    SolutionParams p = make_theta_params_kink(4.0, 0.0);
    auto samples = eval_theta_rep(Grid{-3.0, 3.0, 0.05}, p);
    for (std::size_t j = 1; j < samples.size(); ++j)
        CHECK(samples[j].q > samples[j - 1].q);
}

TEST_CASE("field equation residual") {
    // constant zero solution has exactly zero residual
    CHECK(sge_residual([](double) { return 0.0; }, Grid{-1.0, 1.0, 1e-3}) == 0.0);

    Grid g{-2.0, 2.0, 1e-4};
    CHECK(sge_residual([](double t) { return breather_direct(t, 1.0, 0.0); }, g) <= 1e-6);
    CHECK(sge_residual_w([](double t) { return kink_direct_w(t, 4.0, 0.0); }, g) <= 1e-6);

    // stencil-expanded evaluators sit well below the tolerance
    CHECK(field_residual_breather(1.0, g) <= 1e-8);
    CHECK(field_residual_kink(4.0, g) <= 1e-7);
    CHECK(field_residual_kink(2.0, g) <= 1e-6); // hyperbolic boundary path
}

TEST_CASE("energy is conserved along the flow") {
    for (double H : {0.8, 1.6, 3.0, 6.0}) {
        const double h = 1e-5;
        for (double t : {-1.3, 0.2, 1.9}) {
            double qp, qm, qc;
            if (H <= 2.0) {
                qm = breather_direct(t - h, H, 0.0);
                qc = breather_direct(t, H, 0.0);
                qp = breather_direct(t + h, H, 0.0);
            } else {
                qm = kink_direct(t - h, H, 0.0);
                qc = kink_direct(t, H, 0.0);
                qp = kink_direct(t + h, H, 0.0);
            }
            double qt = (qp - qm) / (2.0 * h);
            double e = 0.5 * qt * qt - std::cos(qc);
            CHECK(std::abs(e - (H - 1.0)) <= 1e-6);
        }
    }
}

TEST_CASE("regime boundary continuity") {
    const double eps = 1e-4;
    for (double t = -3.0; t <= 3.0 + 1e-9; t += 0.25) {
        double ref = 2.0 * std::asin(std::tanh(t));
        CHECK(std::abs(breather_direct(t, 2.0 - eps, 0.0) - ref) <= 1e-3);
        CHECK(std::abs(kink_direct(t, 2.0 + eps, 0.0) - ref) <= 1e-3);
    }
}

TEST_CASE("reality of the log arguments") {
    for (double H : {0.5, 1.5}) {
        auto s = eval_breather_direct(Grid{-4.0, 4.0, 0.1}, H, 0.0);
        for (const auto& f : s) CHECK(std::abs(std::abs(f.w) - 1.0) <= 1e-9);
    }
    for (double H : {3.0, 10.0}) {
        auto s = eval_kink_direct(Grid{-4.0, 4.0, 0.1}, H, 0.0);
        for (const auto& f : s) CHECK(std::abs(std::abs(f.w) - 1.0) <= 1e-9);
    }
}
