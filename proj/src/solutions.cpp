#include "sge/solutions.hpp"

#include <cmath>

#include "sge/errors.hpp"
#include "sge/jacobi.hpp"
#include "sge/theta.hpp"

namespace sge {

namespace {

constexpr double two_pi = 2.0 * pi;

double require_breather_H(double H) {
    if (!(H > 0.0 && H <= 2.0)) throw EnergyRange("breather requires 0 < H <= 2");
    return H;
}

double require_kink_H(double H) {
    if (!(H >= 2.0)) throw EnergyRange("kink requires H >= 2");
    return H;
}

} // namespace

BreatherSpectrum breather_spectrum_from_energy(double H) {
    require_breather_H(H);
    double phi = two_pi - std::acos(1.0 - H); // maps (0,2] into [pi, 2 pi)
    Cplx E1 = std::exp(-iu * phi) / 16.0;
    return {phi, E1, std::conj(E1)};
}

KinkSpectrum kink_spectrum_from_energy(double H) {
    require_kink_H(H);
    double eta = std::acosh(H - 1.0);
    return {eta, -std::exp(eta) / 16.0, -std::exp(-eta) / 16.0};
}

double energy_from_spectrum(const BreatherSpectrum& s) {
    Cplx sum = s.E1 + s.E2;
    double H = 1.0 - 8.0 * sum.real();
    return require_breather_H(H);
}

double energy_from_spectrum(const KinkSpectrum& s) {
    if (!(s.E1 < s.E2 && s.E2 < 0.0)) throw EnergyRange("kink spectrum requires E1 < E2 < 0");
    return require_kink_H(1.0 - 8.0 * (s.E1 + s.E2));
}

std::vector<double> Grid::points() const {
    if (!(step > 0.0) || !(hi >= lo)) throw DomainError("Grid: need hi >= lo and step > 0");
    std::vector<double> ts;
    long n = static_cast<long>(std::floor((hi - lo) / step + 0.5));
    ts.reserve(n + 1);
    for (long j = 0; j <= n; ++j) {
        double t = lo + j * step;
        if (t > hi + 0.5 * step) break;
        ts.push_back(t);
    }
    if (ts.size() < 2) throw DomainError("Grid: need at least 2 points");
    return ts;
}

// ---- direct-integration solutions --------------------------------------

Cplx breather_direct_w(double t, double H, double t0) {
    require_breather_H(H);
    double kb = std::sqrt(H / 2.0);
    Modulus m = Modulus::from_k(kb);
    JefBundle b = jef(JefPoint{Cplx(t - t0), m});
    return b.dn - iu * kb * b.sn;
}

double breather_direct(double t, double H, double t0) {
    require_breather_H(H);
    double kb = std::sqrt(H / 2.0);
    Modulus m = Modulus::from_k(kb);
    JefBundle b = jef(JefPoint{Cplx(t - t0), m});
    double q = 2.0 * std::asin(kb * b.sn.real());
    // cross-check against the log form
    Cplx w = b.dn - iu * kb * b.sn;
    double q_log = -2.0 * std::arg(w);
    if (std::abs(q - q_log) > 1e-10)
        throw DomainError("breather_direct: arcsin and log forms disagree");
    return q;
}

std::vector<FieldSample> eval_breather_direct(const Grid& g, double H, double t0) {
    auto ts = g.points();
    std::vector<Cplx> ws;
    ws.reserve(ts.size());
    for (double t : ts) ws.push_back(breather_direct_w(t, H, t0));
    auto phase = unwrap_phase(ws);
    std::vector<FieldSample> out;
    out.reserve(ts.size());
    for (std::size_t j = 0; j < ts.size(); ++j)
        out.push_back({ts[j], -2.0 * phase[j], ws[j]});
    return out;
}

Cplx kink_direct_w(double t, double H, double t0) {
    require_kink_H(H);
    if (H == 2.0) { // k_k = 1 limit: cn - i sn -> sech - i tanh
        double phi = t - t0;
        return Cplx(1.0 / std::cosh(phi)) - iu * std::tanh(phi);
    }
    double kk = std::sqrt(2.0 / H);
    Modulus m = Modulus::from_k(kk);
    JefBundle b = jef(JefPoint{Cplx((t - t0) / kk), m});
    return b.cn - iu * b.sn;
}

double kink_direct(double t, double H, double t0) {
    Cplx w = kink_direct_w(t, H, t0);
    return -2.0 * std::arg(w);
}

std::vector<FieldSample> eval_kink_direct(const Grid& g, double H, double t0) {
    auto ts = g.points();
    std::vector<Cplx> ws;
    ws.reserve(ts.size());
    for (double t : ts) ws.push_back(kink_direct_w(t, H, t0));
    auto phase = unwrap_phase(ws);
    std::vector<FieldSample> out;
    out.reserve(ts.size());
    for (std::size_t j = 0; j < ts.size(); ++j)
        out.push_back({ts[j], -2.0 * phase[j], ws[j]});
    return out;
}

Cplx separatrix_w(double x, double t, double x0, double v, int sign) {
    if (!(std::abs(v) < 1.0)) throw SuperluminalVelocity("separatrix requires |v| < 1");
    if (sign != 1 && sign != -1) throw DomainError("separatrix: sign must be +-1");
    double phi = (x - x0 - v * t) / std::sqrt(1.0 - v * v);
    double e = std::exp(sign * phi);
    return (1.0 - iu * e) / (1.0 + iu * e);
}

double separatrix(double x, double t, double x0, double v, int sign) {
    if (!(std::abs(v) < 1.0)) throw SuperluminalVelocity("separatrix requires |v| < 1");
    if (sign != 1 && sign != -1) throw DomainError("separatrix: sign must be +-1");
    double phi = (x - x0 - v * t) / std::sqrt(1.0 - v * v);
    return 4.0 * std::atan(std::exp(sign * phi));
}

// ---- theta representation ----------------------------------------------

SolutionParams make_theta_params_breather(double H, double t0) {
    require_breather_H(H);
    if (H == 2.0) throw EnergyRange("theta breather parameters need H < 2");
    double kb = std::sqrt(H / 2.0);
    Modulus mb = Modulus::from_k(kb);
    Cplx Kb = complete_K(mb), Kpb = complete_K_prime(mb);
    Cplx tau_b = iu * Kpb / Kb;
    Cplx tau1 = (1.0 + tau_b) / 2.0;

    SolutionParams p;
    p.kind = SolutionKind::theta_rep_breather;
    p.H = H;
    p.t0 = t0;
    p.B = tau1;
    // w_direct(t) = theta4(l;tau1)/theta3(l;tau1) at l = (t - t0 - K_b)/(4 K_b)
    p.l0 = (-t0 - Kb) / (4.0 * Kb);
    p.l_rate = 1.0 / (4.0 * Kb);
    p.prefactor = 1.0;
    p.nd_modulus = modulus_from_tau(PeriodRatio(tau1));
    Cplx t30 = theta3(ThetaArgs{0.0, tau1});
    p.K = pi / 2.0 * t30 * t30;
    p.Kp = -iu * tau1 * p.K;
    // branch of sqrt(k1') fixed by K_b = sqrt(k1') K1
    Cplx s = Kb / p.K;
    Cplx k1p = p.nd_modulus.k_prime();
    if (std::abs(s * s - k1p) > 1e-8 && std::abs(s * s + k1p) > 1e-8)
        throw BranchInconsistent("breather theta parameters: (K_b/K1)^2 is not a branch of k1'");
    p.sqrt_kp = s;
    return p;
}

SolutionParams make_theta_params_kink(double H, double t0) {
    require_kink_H(H);
    if (H == 2.0) throw EnergyRange("theta kink parameters need H > 2");
    double kk = std::sqrt(2.0 / H);
    double kpk = std::sqrt((1.0 - kk) * (1.0 + kk));
    double k1 = 1.0 / kpk;
    double kp = (kpk - 1.0) / (kpk + 1.0);     // negative
    double k = std::sqrt((1.0 - kp) * (1.0 + kp));
    Modulus m(k, kp);
    Cplx K = complete_K(m);                     // real modulus, AGM
    Cplx Kp = complete_K_msq(Cplx(kp * kp));
    Cplx s0 = iu * (kpk / kk) * (1.0 - k1);     // purely imaginary, s0^2 = k'

    SolutionParams p;
    p.kind = SolutionKind::theta_rep_kink;
    p.H = H;
    p.t0 = t0;
    p.K = K;
    p.Kp = Kp;
    p.B = iu * Kp / K;
    p.nd_modulus = m;
    p.sqrt_kp = s0;
    // w_direct(t) = s0 nd(K/2 + iK' - (t - t0)/(2 s0), k); in theta-argument
    // units the constant carries the B/2 shift of the quarter-period offset.
    p.l0 = 0.25 + p.B / 2.0 + t0 / (4.0 * K * s0);
    p.l_rate = -1.0 / (4.0 * K * s0);
    p.prefactor = s0 * theta3(ThetaArgs{0.0, p.B}) / theta4(ThetaArgs{0.0, p.B});
    return p;
}

ThetaRepSample theta_rep(double t, const SolutionParams& p) {
    if (p.kind != SolutionKind::theta_rep_breather && p.kind != SolutionKind::theta_rep_kink)
        throw DomainError("theta_rep: params are not a theta representation");
    Cplx l = p.l0 + p.l_rate * t;
    Cplx w_ratio = p.prefactor * theta_ratio_43(l, p.B);
    // second route: sqrt(k') nd(2 K l) with nd evaluated through the Jacobi layer
    Cplx u = 2.0 * p.K * l;
    Cplx w_nd = p.sqrt_kp * nd(JefPoint{u, p.nd_modulus});
    double res = std::abs(w_ratio - w_nd);
    return {-2.0 * std::arg(w_ratio), w_ratio, res};
}

std::vector<FieldSample> eval_theta_rep(const Grid& g, const SolutionParams& p) {
    auto ts = g.points();
    std::vector<Cplx> ws;
    ws.reserve(ts.size());
    for (double t : ts) ws.push_back(theta_rep(t, p).w);
    std::vector<double> phase;
    try {
        phase = unwrap_phase(ws);
    } catch (const PhaseJump&) {
        throw BranchJump("eval_theta_rep: grid too coarse to unwrap the log argument");
    }
    std::vector<FieldSample> out;
    out.reserve(ts.size());
    for (std::size_t j = 0; j < ts.size(); ++j) {
        if (std::abs(std::abs(ws[j]) - 1.0) > 5e-10)
            throw DomainError("eval_theta_rep: log argument left the unit circle");
        out.push_back({ts[j], -2.0 * phase[j], ws[j]});
    }
    return out;
}

// ---- trains --------------------------------------------------------------

namespace {

TrainParams make_train(double v, double x0, double re_B, double im_B, int n_max) {
    if (!(std::abs(v) < 1.0)) throw SuperluminalVelocity("train requires |v| < 1");
    if (!(im_B > 0.0)) throw DomainError("train requires Im(B) > 0");
    if (n_max < 0) throw DomainError("train requires n_max >= 0");
    TrainParams p;
    p.v = v;
    p.kappa = 1.0 / std::sqrt(1.0 - v * v);
    p.w = -v * p.kappa;
    p.x0 = x0;
    p.B = Cplx(re_B, im_B);
    p.L = two_pi * im_B / p.kappa;
    p.n_max = n_max;
    return p;
}

double q_kink(double phi) { return 4.0 * std::atan(std::exp(phi)); }
double q_antikink(double phi) { return 4.0 * std::atan(std::exp(-phi)); }

// per-factor principal logs of the theta4/theta3 product; absolutely
// convergent, real for the train parameter lines
double train_theta_sum(double chi, Cplx B, double re_l) {
    Cplx l(re_l, chi / two_pi);
    Cplx q = std::exp(iu * pi * B);
    Cplx zp = std::exp(2.0 * pi * iu * l), zm = 1.0 / zp;
    Cplx qj = q, q2 = q * q;
    double total = 0.0;
    double tail = 1.0;
    for (int j = 1; j < 2000; j += 2, qj *= q2) {
        Cplx a = qj * zp, b = qj * zm;
        Cplx fa = (1.0 - a) / (1.0 + a);
        Cplx fb = (1.0 - b) / (1.0 + b);
        Cplx contrib = 2.0 * iu * (std::log(fa) + std::log(fb));
        if (std::abs(contrib.imag()) > 1e-9)
            throw DomainError("train theta sum: non-real contribution");
        total += contrib.real();
        tail = std::abs(a) + std::abs(b);
        if (tail < 1e-18) break;
    }
    if (tail >= 1e-12) throw NonConvergence("train theta sum: product tail too large");
    return total;
}

} // namespace

TrainParams make_kink_train(double v, double x0, double im_B, int n_max) {
    return make_train(v, x0, 0.0, im_B, n_max);
}

TrainParams make_breather_train(double v, double x0, double im_B, int n_max) {
    return make_train(v, x0, 0.5, im_B, n_max);
}

double kink_train(double x, double t, const TrainParams& p) {
    if (p.B.real() != 0.0) throw DomainError("kink_train requires Re(B) = 0");
    double chi = p.kappa * (x - p.x0) + p.w * t;
    double kL = p.kappa * p.L;
    double total = 0.0;
    for (int n = -p.n_max; n <= p.n_max; ++n) {
        double sgn = (n > 0) ? 1.0 : -1.0;
        total += q_kink(chi - n * kL + 0.5 * kL) + pi * (sgn - 1.0);
    }
    return total;
}

double kink_train_theta(double x, double t, const TrainParams& p) {
    if (p.B.real() != 0.0) throw DomainError("kink_train_theta requires Re(B) = 0");
    double chi = p.kappa * (x - p.x0) + p.w * t;
    return train_theta_sum(chi, p.B, -0.25);
}

double breather_train(double x, double t, const TrainParams& p) {
    if (p.B.real() != 0.5) throw DomainError("breather_train requires Re(B) = 1/2");
    double chi = p.kappa * (x - p.x0) + p.w * t;
    double kL = p.kappa * p.L;
    double total = 0.0;
    for (int n = -p.n_max; n <= p.n_max; ++n) {
        double a = chi - 2.0 * n * kL + 0.5 * kL;          // antikink slot
        double b = chi - (2.0 * n - 1.0) * kL + 0.5 * kL;  // kink slot
        total += q_antikink(a) + q_kink(b) - two_pi;
    }
    return total;
}

double breather_train_theta(double x, double t, const TrainParams& p) {
    if (p.B.real() != 0.5) throw DomainError("breather_train_theta requires Re(B) = 1/2");
    double chi = p.kappa * (x - p.x0) + p.w * t;
    return train_theta_sum(chi, p.B, 0.0);
}

// ---- residual ------------------------------------------------------------

double sge_residual_w(const std::function<Cplx(double)>& w, const Grid& g) {
    auto ts = g.points();
    if (ts.size() < 3) throw DomainError("sge_residual_w: need at least 3 grid points");
    double h = g.step;
    std::vector<Cplx> ws(ts.size());
    for (std::size_t j = 0; j < ts.size(); ++j) {
        ws[j] = w(ts[j]);
        if (std::abs(std::abs(ws[j]) - 1.0) > 1e-9)
            throw DomainError("sge_residual_w: log argument left the unit circle");
    }
    double worst = 0.0;
    double d_prev = -2.0 * std::arg(ws[1] * std::conj(ws[0]));
    for (std::size_t j = 1; j + 1 < ts.size(); ++j) {
        double d_next = -2.0 * std::arg(ws[j + 1] * std::conj(ws[j]));
        double q_mod = -2.0 * std::arg(ws[j]); // q modulo 2 pi; sin is unchanged
        double r = std::abs((d_next - d_prev) / (h * h) + std::sin(q_mod));
        worst = std::max(worst, r);
        d_prev = d_next;
    }
    return worst;
}

namespace {

// Increments am(u +- delta) - am(u) and their breather analog via the
// addition theorem. The small factors dn_d - 1 and cn_d - 1 are formed
// without cancellation.
struct StencilIncrements {
    double plus, minus;
};

StencilIncrements am_increments(const JefBundle& bu, const JefBundle& bd, double ksq) {
    double snu = bu.sn.real(), cnu = bu.cn.real(), dnu = bu.dn.real();
    double snd = bd.sn.real(), cnd = bd.cn.real(), dnd = bd.dn.real();
    double D = 1.0 - ksq * snu * snu * snd * snd;
    double dnd_m1 = -ksq * snd * snd / (1.0 + dnd);
    double base_s = snu * cnu * cnd * dnd_m1;
    double step_s = snd * dnu * (cnu * cnu + snu * snu * dnd);
    double base_c = cnd * (cnu * cnu + snu * snu * dnd);
    double step_c = -snu * snd * cnu * dnu * dnd_m1;
    double fp = std::atan2((base_s + step_s) / D, (base_c + step_c) / D);
    double fm = std::atan2((base_s - step_s) / D, (base_c - step_c) / D);
    return {fp, fm};
}

StencilIncrements breather_increments(const JefBundle& bu, const JefBundle& bd, double k, double ksq) {
    double snu = bu.sn.real(), cnu = bu.cn.real(), dnu = bu.dn.real();
    double snd = bd.sn.real(), cnd = bd.cn.real(), dnd = bd.dn.real();
    double D = 1.0 - ksq * snu * snu * snd * snd;
    double cnd_m1 = -snd * snd / (1.0 + cnd);
    double base_s = k * snu * dnu * dnd * cnd_m1;
    double step_s = k * snd * cnu * (dnu * dnu + ksq * snu * snu * cnd);
    double base_c = dnd * (dnu * dnu + ksq * snu * snu * cnd);
    double step_c = -ksq * snu * snd * cnu * dnu * cnd_m1;
    double gp = std::atan2((base_s + step_s) / D, (base_c + step_c) / D);
    double gm = std::atan2((base_s - step_s) / D, (base_c - step_c) / D);
    return {gp, gm};
}

} // namespace

double field_residual_breather(double H, const Grid& g) {
    require_breather_H(H);
    double kb = std::sqrt(H / 2.0);
    Modulus m = Modulus::from_k(kb);
    JefBundle bd = jef(JefPoint{Cplx(g.step), m});
    double worst = 0.0;
    double h2 = g.step * g.step;
    for (double t : g.points()) {
        JefBundle bu = jef(JefPoint{Cplx(t), m});
        auto inc = breather_increments(bu, bd, kb, kb * kb);
        double second = 2.0 * (inc.plus + inc.minus);
        double sin_q = 2.0 * kb * bu.sn.real() * bu.dn.real();
        worst = std::max(worst, std::abs(second / h2 + sin_q));
    }
    return worst;
}

double field_residual_kink(double H, const Grid& g) {
    require_kink_H(H);
    if (H == 2.0) {
        return sge_residual_w([](double t) {
            return Cplx(1.0 / std::cosh(t)) - iu * std::tanh(t);
        }, g);
    }
    double kk = std::sqrt(2.0 / H);
    Modulus m = Modulus::from_k(kk);
    double delta = g.step / kk;
    double h_eff = delta * kk; // time step actually realized by the stencil
    JefBundle bd = jef(JefPoint{Cplx(delta), m});
    double worst = 0.0;
    double h2 = h_eff * h_eff;
    for (double t : g.points()) {
        JefBundle bu = jef(JefPoint{Cplx(t / kk), m});
        auto inc = am_increments(bu, bd, kk * kk);
        double second = 2.0 * (inc.plus + inc.minus);
        double sin_q = 2.0 * bu.sn.real() * bu.cn.real();
        worst = std::max(worst, std::abs(second / h2 + sin_q));
    }
    return worst;
}

double sge_residual(const std::function<double(double)>& q, const Grid& g) {
    auto ts = g.points();
    if (ts.size() < 3) throw DomainError("sge_residual: need at least 3 grid points");
    double h = g.step;
    std::vector<double> qs(ts.size());
    for (std::size_t j = 0; j < ts.size(); ++j) qs[j] = q(ts[j]);
    double worst = 0.0;
    for (std::size_t j = 1; j + 1 < ts.size(); ++j) {
        // recentre the triple by a common multiple of 2 pi to limit
        // cancellation in the second difference
        double shift = two_pi * std::round(qs[j] / two_pi);
        double qm = qs[j - 1] - shift, qc = qs[j] - shift, qp = qs[j + 1] - shift;
        double r = std::abs((qp - 2.0 * qc + qm) / (h * h) + std::sin(qc));
        worst = std::max(worst, r);
    }
    return worst;
}

} // namespace sge
