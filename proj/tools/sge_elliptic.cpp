// Command-line front end: evaluate the finite sine-Gordon solutions, run the
// transformation verification suites, print bridge parameter tables, and
// export CSV for plotting.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sge/bridge.hpp"
#include "sge/elliptic.hpp"
#include "sge/errors.hpp"
#include "sge/jacobi.hpp"
#include "sge/solutions.hpp"
#include "sge/theta.hpp"
#include "sge/transforms.hpp"

namespace {

using namespace sge;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;

Grid parse_grid(const std::string& spec) {
    double lo, hi, step;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3)
        throw DomainError("grid spec must be min:max:step");
    return Grid{lo, hi, step};
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt16(Cplx z) {
    char buf[96];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.16g", z.real());
    } else {
        std::snprintf(buf, sizeof buf, "%.16g%+.16gi", z.real(), z.imag());
    }
    return buf;
}

struct EvalOptions {
    std::string kind;
    double H = 1.0;
    double v = 0.5;
    double x0 = 0.0;
    double t0 = 0.0;
    std::string grid = "-5:5:0.1";
    std::string out;
};

int cmd_eval(const EvalOptions& o) {
    Grid g = parse_grid(o.grid);
    std::vector<FieldSample> rows;
    if (o.kind == "breather") {
        rows = eval_breather_direct(g, o.H, o.t0);
    } else if (o.kind == "kink") {
        rows = eval_kink_direct(g, o.H, o.t0);
    } else if (o.kind == "separatrix") {
        for (double t : g.points()) {
            Cplx w = separatrix_w(0.0, t, o.x0, o.v, +1);
            rows.push_back({t, separatrix(0.0, t, o.x0, o.v, +1), w});
        }
    } else if (o.kind == "theta-breather") {
        rows = eval_theta_rep(g, make_theta_params_breather(o.H, o.t0));
    } else if (o.kind == "theta-kink") {
        rows = eval_theta_rep(g, make_theta_params_kink(o.H, o.t0));
    } else {
        throw DomainError("unknown --kind '" + o.kind + "'");
    }
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out, std::ios::binary);
        if (!file) throw DomainError("cannot open output file " + o.out);
        os = &file;
    }
    *os << "t,q,re_w,im_w\n";
    for (const auto& r : rows)
        *os << fmt(r.t) << ',' << fmt(r.q) << ',' << fmt(r.w.real()) << ',' << fmt(r.w.imag()) << '\n';
    return exit_ok;
}

// ---- verification suites --------------------------------------------------

struct CheckRow {
    std::string name;
    double residual;
    double tol;
};

struct Report {
    std::vector<CheckRow> rows;
    void add(std::string name, double residual, double tol) {
        rows.push_back({std::move(name), residual, tol});
    }
};

void suite_landen(Report& rep, std::optional<double> k_opt) {
    std::vector<double> ks = k_opt ? std::vector<double>{*k_opt}
                                   : std::vector<double>{0.2, 0.5, 0.8, 0.95};
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> du(-2.0, 2.0), dv(-0.4, 0.4);
    for (double k : ks) {
        Modulus m = Modulus::from_k(k);
        double worst = 0.0;
        for (int i = 0; i < 12; ++i)
            worst = std::max(worst, landen_gauss_identity(Cplx(du(rng), dv(rng)), m));
        rep.add("landen-quadratic k=" + std::to_string(k).substr(0, 4), worst, 1e-9);
        Modulus back = landen_ascend(landen_descend(m));
        rep.add("landen-involution k=" + std::to_string(k).substr(0, 4),
                std::abs(back.k() - k), 1e-12);
    }
}

void suite_modular_cases(Report& rep) {
    std::mt19937 rng(55);
    std::uniform_real_distribution<double> dre(-0.8, 0.8), dim(0.5, 1.6);
    double worst_comp = 0.0, worst_theta = 0.0, worst_group = 0.0;
    for (int i = 0; i < 20; ++i) {
        Cplx tau(dre(rng), dim(rng));
        Modulus m = modulus_from_tau(PeriodRatio(tau));
        for (int id = 1; id <= 6; ++id) {
            auto r = apply_modular_case(id, PeriodRatio(tau), m);
            worst_comp = std::max(worst_comp,
                std::abs(r.m.k() * r.m.k() + r.m.k_prime() * r.m.k_prime() - 1.0));
            Modulus md = modulus_from_tau(r.tau_uhp);
            worst_theta = std::max(worst_theta,
                std::abs(md.k() * md.k() - r.m.k() * r.m.k()));
        }
        worst_group = std::max(worst_group,
            std::abs(modular_case_tau(5, tau) - modular_case_tau(4, modular_case_tau(2, tau))));
        worst_group = std::max(worst_group,
            std::abs(modular_case_tau(6, tau) - modular_case_tau(4, modular_case_tau(3, tau))));
    }
    rep.add("modular-complementarity", worst_comp, 1e-12);
    rep.add("modular-theta-consistency", worst_theta, 1e-9);
    rep.add("modular-group-closure", worst_group, 1e-12);
}

void suite_reciprocal(Report& rep, std::optional<double> k_opt) {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dk(0.05, 0.95), dt(-4.0, 4.0);
    double worst_sn = 0.0, worst_cn = 0.0;
    for (int i = 0; i < 50; ++i) {
        double kb = k_opt ? *k_opt : dk(rng);
        auto [rs, rc] = reciprocal_modulus_identities(dt(rng), Modulus::from_k(kb));
        worst_sn = std::max(worst_sn, rs);
        worst_cn = std::max(worst_cn, rc);
    }
    rep.add("reciprocal-sn", worst_sn, 1e-9);
    rep.add("reciprocal-cn", worst_cn, 1e-9);
    double worst_K = 0.0;
    for (double k : {0.3, 0.5, 1.0 / std::sqrt(2.0), 0.9})
        worst_K = std::max(worst_K, reciprocal_K_identity(Modulus::from_k(k)));
    rep.add("reciprocal-quarter-period", worst_K, 1e-9);
    double worst_half = 0.0;
    for (double k : {0.4, 0.6, 0.8}) {
        auto [rc, rd] = half_period_shift_identities(Cplx(0.3, 0.1), Modulus::from_k(k));
        worst_half = std::max(worst_half, std::max(rc, rd));
    }
    rep.add("half-period-shift", worst_half, 1e-9);
    double worst_map = 0.0;
    for (double k : {0.5, 0.6, 0.7}) {
        auto [r1, r2] = reciprocal_jef_map(Cplx(0.4, 0.1), Modulus::from_k(k));
        worst_map = std::max(worst_map, std::max(r1, r2));
    }
    rep.add("reciprocal-jef-map", worst_map, 1e-9);
}

void suite_bridge_breather(Report& rep) {
    double worst_nome = 0.0, worst_periods = 0.0, worst_tau = 0.0;
    for (int i = 0; i < 20; ++i) {
        double kb = 0.05 + 0.9 * i / 19.0;
        BreatherBridge b = breather_bridge(kb);
        worst_nome = std::max(worst_nome, b.r_nome);
        worst_periods = std::max(worst_periods, b.r_periods);
        worst_tau = std::max(worst_tau, b.r_tau);
    }
    rep.add("breather-bridge-nome", worst_nome, 1e-9);
    rep.add("breather-bridge-periods", worst_periods, 1e-9);
    rep.add("breather-bridge-doubling", worst_tau, 1e-10);
    Grid g{-3.0, 3.0, 0.1};
    double worst = 0.0;
    for (double H : {0.2, 1.0, 1.8}) worst = std::max(worst, verify_equivalence_breather(H, g));
    rep.add("breather-equivalence", worst, 1e-8);
}

void suite_bridge_kink(Report& rep) {
    double w_scale = 0.0, w_tau = 0.0, w_c1 = 0.0, w_c2 = 0.0;
    for (int i = 0; i < 20; ++i) {
        double kk = 0.1 + (0.99 - 0.1) * i / 19.0;
        KinkBridge b = kink_bridge(kk);
        w_scale = std::max(w_scale, b.r_period_scale);
        w_tau = std::max(w_tau, b.r_tau_map);
        w_c1 = std::max(w_c1, b.r_coeff1);
        w_c2 = std::max(w_c2, b.r_coeff2);
    }
    rep.add("kink-bridge-period-scale", w_scale, 1e-9);
    rep.add("kink-bridge-tau-map", w_tau, 1e-9);
    rep.add("kink-bridge-coefficient-1", w_c1, 1e-9);
    rep.add("kink-bridge-coefficient-2", w_c2, 1e-9);
    Grid g{-3.0, 3.0, 0.1};
    double worst = 0.0;
    for (double H : {2.5, 4.0, 10.0}) worst = std::max(worst, verify_equivalence_kink(H, g).end_to_end);
    rep.add("kink-equivalence", worst, 1e-8);
}

void suite_periods(Report& rep) {
    for (double eta : {0.5, 1.0, 2.0}) {
        auto r = period_integral_kink(kink_spectrum_from_energy(1.0 + std::cosh(eta)));
        rep.add("period-kink eta=" + std::to_string(eta).substr(0, 3), r.rel_magnitude, 1e-7);
    }
    for (double f : {1.1, 1.5, 1.9}) {
        double phi = f * pi;
        BreatherSpectrum s{phi, std::exp(-iu * phi) / 16.0, std::exp(iu * phi) / 16.0};
        auto r = period_integral_breather(s);
        rep.add("period-breather phi=" + std::to_string(f).substr(0, 3) + "pi",
                r.rel_magnitude, 1e-6);
    }
}

void suite_trains(Report& rep) {
    TrainParams p = make_kink_train(0.3, 0.2, 0.5, 20);
    double worst = 0.0;
    const double xs[] = {-1.2, -0.7, -0.2, 0.1, 0.35, 0.6, 0.9, 1.3, 1.7, 2.1};
    const double ts[] = {0.0, 0.4, -0.6, 1.1, -1.3, 0.8, 0.2, -0.9, 1.6, -0.3};
    for (int i = 0; i < 10; ++i)
        worst = std::max(worst, std::abs(kink_train(xs[i], ts[i], p) - kink_train_theta(xs[i], ts[i], p)));
    rep.add("kink-train-vs-theta", worst, 1e-6);
    TrainParams bp = make_breather_train(0.2, 0.0, 0.6, 10);
    double wind = std::abs(breather_train(0.4 + 2.0 * bp.L, 0.1, bp) - breather_train(0.4, 0.1, bp));
    rep.add("breather-train-winding", wind, 1e-6);
}

void suite_residual(Report& rep) {
    Grid g{-5.0, 5.0, 1e-4};
    for (double H : {0.2, 1.0, 1.8}) {
        rep.add("field-residual breather H=" + std::to_string(H).substr(0, 3),
                field_residual_breather(H, g), 1e-6);
    }
    for (double H : {2.5, 4.0, 10.0}) {
        rep.add("field-residual kink H=" + std::to_string(H).substr(0, 3),
                field_residual_kink(H, g), 1e-6);
    }
}

int cmd_verify(const std::string& suite, std::optional<double> k_opt, std::optional<double> tol) {
    static const char* names[] = {"landen", "modular-cases", "reciprocal", "bridge-breather",
                                  "bridge-kink", "periods", "trains", "residual", "all"};
    bool known = false;
    for (const char* n : names) known = known || (suite == n);
    if (!known) {
        std::cerr << "unknown suite '" << suite << "'\n";
        return exit_usage;
    }
    Report rep;
    auto want = [&](const char* name) { return suite == name || suite == "all"; };
    if (want("landen")) suite_landen(rep, k_opt);
    if (want("modular-cases")) suite_modular_cases(rep);
    if (want("reciprocal")) suite_reciprocal(rep, k_opt);
    if (want("bridge-breather")) suite_bridge_breather(rep);
    if (want("bridge-kink")) suite_bridge_kink(rep);
    if (want("periods")) suite_periods(rep);
    if (want("trains")) suite_trains(rep);
    if (want("residual")) suite_residual(rep);
    bool all_pass = true;
    for (const auto& row : rep.rows) {
        double t = tol ? *tol : row.tol;
        bool pass = row.residual <= t;
        all_pass = all_pass && pass;
        std::printf("%-34s max_residual=%-12.3e tol=%-9.1e %s\n",
                    row.name.c_str(), row.residual, t, pass ? "PASS" : "FAIL");
    }
    return all_pass ? exit_ok : exit_verify_failed;
}

int cmd_bridge(double H) {
    if (H == 2.0) {
        std::cerr << "H = 2 is the separatrix boundary; no bridge exists there\n";
        return exit_usage;
    }
    if (H < 2.0) {
        BreatherBridge b = breather_bridge(std::sqrt(H / 2.0));
        std::printf("regime          breather\n");
        std::printf("H               %s\n", fmt16(H).c_str());
        std::printf("k_b             %s\n", fmt16(b.k_b).c_str());
        std::printf("K_b             %s\n", fmt16(b.K_b).c_str());
        std::printf("t0              %s\n", fmt16(b.t0).c_str());
        std::printf("tau_b           %s\n", fmt16(b.tau_b).c_str());
        std::printf("q_b             %s\n", fmt16(b.q_b).c_str());
        std::printf("tau1            %s\n", fmt16(b.tau1).c_str());
        std::printf("q1              %s\n", fmt16(b.q1).c_str());
        std::printf("q_tilde         %s\n", fmt16(b.q_tilde).c_str());
        std::printf("k1              %s\n", fmt16(b.k1).c_str());
        std::printf("k1_prime        %s\n", fmt16(b.k1_prime).c_str());
        std::printf("K1              %s\n", fmt16(b.K1).c_str());
        std::printf("sqrt_k1p        %s\n", fmt16(b.sqrt_k1p).c_str());
        std::printf("a               %s\n", fmt16(b.a).c_str());
        std::printf("branch          %+d\n", b.branch);
        std::printf("residual_nome       %.3e\n", b.r_nome);
        std::printf("residual_periods    %.3e\n", b.r_periods);
        std::printf("residual_rate       %.3e\n", b.r_rate);
        std::printf("residual_doubling   %.3e\n", b.r_tau);
        std::printf("residual_chain      %.3e\n", b.r_chain);
    } else {
        KinkBridge b = kink_bridge(std::sqrt(2.0 / H));
        std::printf("regime          kink\n");
        std::printf("H               %s\n", fmt16(H).c_str());
        std::printf("k_k             %s\n", fmt16(b.k_k).c_str());
        std::printf("k_k_prime       %s\n", fmt16(b.k_k_prime).c_str());
        std::printf("K_k             %s\n", fmt16(b.K_k).c_str());
        std::printf("K_k_prime       %s\n", fmt16(b.K_pk).c_str());
        std::printf("k               %s\n", fmt16(b.k).c_str());
        std::printf("k_prime         %s\n", fmt16(b.k_prime).c_str());
        std::printf("K               %s\n", fmt16(b.K).c_str());
        std::printf("K_prime         %s\n", fmt16(b.Kp).c_str());
        std::printf("tau             %s\n", fmt16(b.tau).c_str());
        std::printf("tau_k           %s\n", fmt16(b.tau_k).c_str());
        std::printf("s0              %s\n", fmt16(b.s0).c_str());
        std::printf("a               %s\n", fmt16(b.a).c_str());
        std::printf("residual_period_scale %.3e\n", b.r_period_scale);
        std::printf("residual_tau_map      %.3e\n", b.r_tau_map);
        std::printf("residual_coefficient1 %.3e\n", b.r_coeff1);
        std::printf("residual_coefficient2 %.3e\n", b.r_coeff2);
        std::printf("residual_s0_square    %.3e\n", b.r_s0);
    }
    return exit_ok;
}

int cmd_spectrum(std::optional<double> H, std::optional<double> phi, std::optional<double> eta) {
    BreatherSpectrum bs{0, 0, 0};
    KinkSpectrum ks{0, 0, 0};
    bool is_breather = false, have = false;
    if (H) {
        have = true;
        if (*H < 2.0) { bs = breather_spectrum_from_energy(*H); is_breather = true; }
        else          { ks = kink_spectrum_from_energy(*H); }
    } else if (phi) {
        have = true;
        bs = BreatherSpectrum{*phi, std::exp(-iu * *phi) / 16.0, std::exp(iu * *phi) / 16.0};
        is_breather = true;
    } else if (eta) {
        have = true;
        ks = KinkSpectrum{*eta, -std::exp(*eta) / 16.0, -std::exp(-*eta) / 16.0};
    }
    if (!have) {
        std::cerr << "spectrum requires one of --H, --phi, --eta\n";
        return exit_usage;
    }
    if (is_breather) {
        std::printf("regime  breather\nphi     %s\nE1      %s\nE2      %s\nH       %s\n",
                    fmt16(bs.phi).c_str(), fmt16(bs.E1).c_str(), fmt16(bs.E2).c_str(),
                    fmt16(energy_from_spectrum(bs)).c_str());
    } else {
        std::printf("regime  kink\neta     %s\nE1      %s\nE2      %s\nH       %s\n",
                    fmt16(ks.eta).c_str(), fmt16(ks.E1).c_str(), fmt16(ks.E2).c_str(),
                    fmt16(energy_from_spectrum(ks)).c_str());
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite sine-Gordon solutions, theta representations and their transformations"};
    app.require_subcommand(1);

    EvalOptions eo;
    auto* eval = app.add_subcommand("eval", "evaluate a solution on a time grid, CSV output");
    eval->add_option("--kind", eo.kind,
                     "breather | kink | separatrix | theta-breather | theta-kink")->required();
    eval->add_option("--H", eo.H, "pendulum energy");
    eval->add_option("--v", eo.v, "separatrix velocity");
    eval->add_option("--x0", eo.x0, "separatrix offset");
    eval->add_option("--t0", eo.t0, "time offset");
    eval->add_option("--t", eo.grid, "grid min:max:step");
    eval->add_option("--out", eo.out, "output file (default stdout)");

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite,
                       "landen | modular-cases | reciprocal | bridge-breather | bridge-kink | "
                       "periods | trains | residual | all")->required();
    double k_val = 0.0, tol_val = 0.0;
    auto* kflag = verify->add_option("--k", k_val, "modulus for the landen/reciprocal suites");
    auto* tolflag = verify->add_option("--tol", tol_val, "tolerance override for every check");

    double bridge_H = 0.0;
    auto* bridge = app.add_subcommand("bridge", "print the parameter map for one energy");
    bridge->add_option("--H", bridge_H, "pendulum energy")->required();

    double spH = 0.0, spphi = 0.0, speta = 0.0;
    auto* spectrum = app.add_subcommand("spectrum", "print the spectral data for one energy");
    auto* fH = spectrum->add_option("--H", spH);
    auto* fphi = spectrum->add_option("--phi", spphi);
    auto* feta = spectrum->add_option("--eta", speta);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*eval) return cmd_eval(eo);
        if (*verify) {
            std::optional<double> k_opt, tol_opt;
            if (kflag->count()) k_opt = k_val;
            if (tolflag->count()) tol_opt = tol_val;
            if (tol_opt && !(*tol_opt > 0.0)) {
                std::cerr << "--tol must be positive\n";
                return exit_usage;
            }
            return cmd_verify(suite, k_opt, tol_opt);
        }
        if (*bridge) return cmd_bridge(bridge_H);
        if (*spectrum) {
            std::optional<double> a, b, c;
            if (fH->count()) a = spH;
            if (fphi->count()) b = spphi;
            if (feta->count()) c = speta;
            return cmd_spectrum(a, b, c);
        }
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
