#include "doctest.h"

#include <cmath>

#include "sge/errors.hpp"
#include "sge/solutions.hpp"

using namespace sge;

namespace {

constexpr double two_pi = 2.0 * pi;

double mod_two_pi(double x) { return std::remainder(x, two_pi); }

} // namespace

TEST_CASE("kink train structure") {
    TrainParams p = make_kink_train(0.3, 0.2, 0.5, 0);
    CHECK(std::abs(p.kappa - 1.0 / std::sqrt(1.0 - 0.09)) <= 1e-15);
    CHECK(std::abs(p.w + 0.3 * p.kappa) <= 1e-15);
    CHECK(std::abs(p.L - two_pi * 0.5 / p.kappa) <= 1e-15);

    // single-term truncation is one kink (at the half-slot center) minus 2 pi
    double x = 0.7, t = 0.4;
    double chi = p.kappa * (x - p.x0) + p.w * t;
    double kL = p.kappa * p.L;
    double expected = 4.0 * std::atan(std::exp(chi + 0.5 * kL)) - two_pi;
    CHECK(std::abs(kink_train(x, t, p) - expected) <= 1e-15);
}

TEST_CASE("kink train against the theta-product form") {
    TrainParams p = make_kink_train(0.3, 0.2, 0.5, 20);
    const double xs[] = {-1.2, -0.7, -0.2, 0.1, 0.35, 0.6, 0.9, 1.3, 1.7, 2.1};
    const double ts[] = {0.0, 0.4, -0.6, 1.1, -1.3, 0.8, 0.2, -0.9, 1.6, -0.3};
    for (int i = 0; i < 10; ++i) {
        double qs = kink_train(xs[i], ts[i], p);
        double qt = kink_train_theta(xs[i], ts[i], p);
        CHECK(std::abs(qs - qt) <= 1e-6);
    }
}

TEST_CASE("kink train periodicity carries one unit of charge") {
    TrainParams p = make_kink_train(0.25, 0.0, 0.6, 20);
    for (double x : {-0.4, 0.3, 0.9}) {
        double d = kink_train(x + p.L, 0.7, p) - kink_train(x, 0.7, p);
        CHECK(std::abs(d - two_pi) <= 1e-6);
    }
}

TEST_CASE("breather train structure and winding") {
    TrainParams p = make_breather_train(0.2, 0.0, 0.6, 0);
    // two-term truncation is bounded
    for (double x : {-40.0, -3.0, 0.0, 2.5, 40.0}) {
        double q = breather_train(x, 0.0, p);
        CHECK(std::abs(q) < two_pi);
    }
    TrainParams p10 = make_breather_train(0.2, 0.0, 0.6, 10);
    // far field is 0 mod 2 pi
    CHECK(std::abs(mod_two_pi(breather_train(130.0, 0.3, p10))) <= 1e-6);
    CHECK(std::abs(mod_two_pi(breather_train(-130.0, 0.3, p10))) <= 1e-6);
    // net winding over one full pattern period is zero
    double d = breather_train(0.4 + 2.0 * p10.L, 0.1, p10) - breather_train(0.4, 0.1, p10);
    CHECK(std::abs(d) <= 1e-6);
}

TEST_CASE("breather train against the theta-product form") {
    TrainParams p = make_breather_train(0.3, 0.2, 0.5, 40);
    const double xs[] = {-1.1, -0.6, -0.1, 0.2, 0.45, 0.7, 1.0, 1.4, 1.8, 2.2};
    const double ts[] = {0.0, 0.5, -0.7, 1.2, -1.4, 0.9, 0.3, -1.0, 1.7, -0.4};
    for (int i = 0; i < 10; ++i) {
        double qs = breather_train(xs[i], ts[i], p);
        double qt = breather_train_theta(xs[i], ts[i], p);
        CHECK(std::abs(mod_two_pi(qs - qt)) <= 1e-6);
    }
}

TEST_CASE("train parameter guards") {
    CHECK_THROWS_AS(make_kink_train(1.0, 0.0, 0.5, 5), SuperluminalVelocity);
    CHECK_THROWS_AS(make_kink_train(0.3, 0.0, -0.5, 5), DomainError);
    TrainParams kink = make_kink_train(0.3, 0.0, 0.5, 5);
    CHECK_THROWS_AS(breather_train(0.0, 0.0, kink), DomainError);
    TrainParams br = make_breather_train(0.3, 0.0, 0.5, 5);
    CHECK_THROWS_AS(kink_train(0.0, 0.0, br), DomainError);
}
