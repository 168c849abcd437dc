#include "divland/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "divland/error.hpp"

namespace divland {

namespace {

constexpr double kImagTol = 1e-9;
constexpr double kRealTol = 1e-9;

void require_positive(double v, const char* what) {
    if (!(v > 0.0)) throw ConfigError(what);
}

Eigen::RowVectorXd theta_output_row(double z, double v_z) {
    Eigen::RowVectorXd C(2);
    C << -v_z / (z * z), 1.0 / z;
    return C;
}

// Faddeev-LeVerrier: monic characteristic polynomial of M.
std::vector<double> char_poly_monic(const Eigen::MatrixXd& M) {
    const int n = static_cast<int>(M.rows());
    if (n == 2) {
        return {1.0, -M.trace(), M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0)};
    }
    std::vector<double> c(n + 1, 0.0);
    c[0] = 1.0;
    Eigen::MatrixXd Mk = Eigen::MatrixXd::Zero(n, n);
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
    for (int k = 1; k <= n; ++k) {
        Mk = M * Mk + c[k - 1] * I;
        c[k] = -(M * Mk).trace() / k;
    }
    return c;
}

Eigen::MatrixXd closed_loop_matrix(const LinearModel& model, double K) {
    return model.A - K * model.B * model.C;
}

GainSample summarize(const Eigen::Matrix4d& M) {
    Eigen::EigenSolver<Eigen::Matrix4d> es(M, false);
    GainSample s;
    s.max_real = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4; ++i) {
        const auto ev = es.eigenvalues()[i];
        if (std::abs(ev.imag()) > kImagTol) ++s.complex_count;
        s.max_real = std::max(s.max_real, ev.real());
    }
    return s;
}

// Smallest K in (lo, hi] for which pred holds, given !pred(lo) and pred(hi).
template <typename Pred>
double bisect(double lo, double hi, Pred pred) {
    for (int it = 0; it < 200 && (hi - lo) > 1e-12 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (pred(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

} // namespace

double linear_drag_constant(double v_z, double v_wind, double beta) {
    const double v_air = v_wind - v_z;
    return std::copysign(1.0, v_air) * beta * v_air;
}

LinearModel continuous_vacuum_model(double z, double v_z) {
    require_positive(z, "continuous_vacuum_model: z must be > 0");
    LinearModel m;
    m.A = Eigen::MatrixXd::Zero(2, 2);
    m.A(0, 1) = 1.0;
    m.B = Eigen::VectorXd::Zero(2);
    m.B(1) = 1.0;
    m.C = theta_output_row(z, v_z);
    m.point = {z, v_z, 0.0};
    return m;
}

LinearModel continuous_drag_model(double z, double v_z, double v_wind, double beta) {
    LinearModel m = continuous_vacuum_model(z, v_z);
    m.A(1, 1) = -linear_drag_constant(v_z, v_wind, beta);
    m.point.v_wind = v_wind;
    return m;
}

LinearModel zoh_vacuum_model(double z, double v_z, double T) {
    require_positive(z, "zoh_vacuum_model: z must be > 0");
    require_positive(T, "zoh_vacuum_model: T must be > 0");
    LinearModel m;
    m.A.resize(2, 2);
    m.A << 1.0, T, 0.0, 1.0;
    m.B.resize(2);
    m.B << 0.5 * T * T, T;
    m.C = theta_output_row(z, v_z);
    m.T = T;
    m.point = {z, v_z, 0.0};
    return m;
}

LinearModel zoh_drag_model(double z, double v_z, double v_wind, double beta, double T) {
    require_positive(z, "zoh_drag_model: z must be > 0");
    require_positive(T, "zoh_drag_model: T must be > 0");
    const double p = linear_drag_constant(v_z, v_wind, beta);
    if (!(p > 0.0)) throw NumericalError("zoh_drag_model: drag constant p must be > 0");
    // -expm1(-pT) = 1 - e^{-pT} without cancellation for small pT
    const double one_minus_e = -std::expm1(-p * T);
    LinearModel m;
    m.A.resize(2, 2);
    m.A << 1.0, one_minus_e / p, 0.0, 1.0 - one_minus_e;
    m.B.resize(2);
    m.B << (p * T - one_minus_e) / (p * p), one_minus_e / p;
    m.C = theta_output_row(z, v_z);
    m.T = T;
    m.point = {z, v_z, v_wind};
    return m;
}

LinearModel zoh_horizontal_model(double z, double v_x, double T) {
    require_positive(z, "zoh_horizontal_model: z must be > 0");
    require_positive(T, "zoh_horizontal_model: T must be > 0");
    LinearModel m;
    m.A = Eigen::MatrixXd::Identity(4, 4);
    m.A(0, 1) = T;
    m.A(2, 3) = T;
    m.B = Eigen::VectorXd::Zero(4);
    m.B(2) = 0.5 * T * T;
    m.B(3) = T;
    m.C = Eigen::RowVectorXd::Zero(4);
    m.C(0) = -v_x / (z * z);
    m.C(3) = 1.0 / z;
    m.T = T;
    m.point = {z, v_x, 0.0};
    return m;
}

Polynomial closed_loop_char_poly(const LinearModel& model, double K) {
    std::vector<double> c = char_poly_monic(closed_loop_matrix(model, K));
    const double z = model.point.z;
    const double scale = model.order() == 2 ? z * z : z;
    for (double& v : c) v *= scale;
    return {std::move(c)};
}

std::vector<std::complex<double>> closed_loop_poles(const LinearModel& model, double K) {
    if (model.order() == 2) return closed_loop_char_poly(model, K).roots();
    Eigen::EigenSolver<Eigen::MatrixXd> es(closed_loop_matrix(model, K), false);
    std::vector<std::complex<double>> out(model.order());
    for (int i = 0; i < model.order(); ++i) out[i] = es.eigenvalues()[i];
    return out;
}

double vacuum_zero(double z, double v_z, double T) {
    const double half = 0.5 * v_z * T * T;
    return (z * T + half) / (z * T - half);
}

double unstable_gain_vacuum(double z, double T) {
    require_positive(z, "unstable_gain_vacuum: z must be > 0");
    require_positive(T, "unstable_gain_vacuum: T must be > 0");
    return 2.0 * z / T;
}

double instability_height(double K, double T) {
    require_positive(T, "instability_height: T must be > 0");
    return 0.5 * K * T;
}

double unstable_gain_drag(double z, double v_z, double p, double T, bool simplified) {
    require_positive(z, "unstable_gain_drag: z must be > 0");
    require_positive(T, "unstable_gain_drag: T must be > 0");
    if (!(p > 0.0)) throw NumericalError("unstable_gain_drag: drag constant p must be > 0");
    const double pT = p * T;
    const double em1 = std::expm1(pT);  // e^{pT} - 1
    const double numer = 2.0 * p * p * (2.0 + em1);  // 2p^2 + 2p^2 e^{pT}
    const double z_coeff = 2.0 * p * em1;             // 2p e^{pT} - 2p
    if (simplified) {
        if (!(z_coeff > 0.0)) throw NumericalError("unstable_gain_drag: non-positive denominator");
        return numer / z_coeff * z;
    }
    const double v_coeff = 2.0 * em1 - pT * (2.0 + em1);  // 2e^{pT} - 2 - Tp - Tp e^{pT}
    const double denom = v_coeff * v_z + z_coeff * z;
    if (!(denom > 0.0)) throw NumericalError("unstable_gain_drag: non-positive denominator");
    return numer * z * z / denom;
}

double unstable_gain_horizontal(double z, double T) {
    require_positive(z, "unstable_gain_horizontal: z must be > 0");
    require_positive(T, "unstable_gain_horizontal: T must be > 0");
    return 2.0 * z / T;
}

std::complex<double> horizontal_open_loop(double z, double T, std::complex<double> w) {
    return T / (z * (w - 1.0));
}

PadeRealization pade2(double delay) {
    require_positive(delay, "pade2: delay must be > 0");
    // (s^2 - 6/d s + 12/d^2) / (s^2 + 6/d s + 12/d^2) = 1 + (-12/d s) / den
    const double a1 = 6.0 / delay;
    const double a0 = 12.0 / (delay * delay);
    PadeRealization r;
    r.A << 0.0, 1.0, -a0, -a1;
    r.B << 0.0, 1.0;
    r.C << 0.0, -12.0 / delay;
    r.D = 1.0;
    return r;
}

Eigen::Matrix4d delayed_closed_loop_matrix(const LinearModel& plant, const PadeRealization& pade,
                                           double K) {
    if (plant.order() != 2 || plant.discrete())
        throw ConfigError("delayed_closed_loop_matrix: needs a continuous two-state plant");
    // u_cmd = -K C x ; u = Cd xd + Dd u_cmd ; x' = A x + B u ; xd' = Ad xd + Bd u_cmd
    const Eigen::Matrix2d A = plant.A;
    const Eigen::Vector2d B = plant.B;
    const Eigen::RowVector2d C = plant.C;
    Eigen::Matrix4d M;
    M.topLeftCorner<2, 2>() = A - pade.D * K * B * C;
    M.topRightCorner<2, 2>() = B * pade.C;
    M.bottomLeftCorner<2, 2>() = -K * pade.B * C;
    M.bottomRightCorner<2, 2>() = pade.A;
    return M;
}

std::vector<GainSample> scan_gains(const LinearModel& plant, double delay,
                                   std::span<const double> K_grid, Execution exec) {
    const PadeRealization pade = pade2(delay);
    std::vector<GainSample> out(K_grid.size());
    const auto n = static_cast<std::ptrdiff_t>(K_grid.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i)
            out[i] = summarize(delayed_closed_loop_matrix(plant, pade, K_grid[i]));
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i)
            out[i] = summarize(delayed_closed_loop_matrix(plant, pade, K_grid[i]));
    }
    return out;
}

CriticalGains continuous_critical_gains(double z, double v_z, double v_wind, double beta,
                                        double delay, std::span<const double> K_grid,
                                        Execution exec) {
    require_positive(delay, "continuous_critical_gains: delay must be > 0");
    if (K_grid.empty()) throw ConfigError("continuous_critical_gains: empty gain grid");
    for (std::size_t i = 1; i < K_grid.size(); ++i)
        if (!(K_grid[i] > K_grid[i - 1]))
            throw ConfigError("continuous_critical_gains: gain grid must be strictly increasing");

    const LinearModel plant = continuous_drag_model(z, v_z, v_wind, beta);
    const PadeRealization pade = pade2(delay);
    const std::vector<GainSample> samples = scan_gains(plant, delay, K_grid, exec);
    auto sample = [&](double K) { return summarize(delayed_closed_loop_matrix(plant, pade, K)); };

    // Oscillation starts where a real pole pair splits into a complex pair,
    // i.e. the complex count rises from one gain to the next. The open-loop
    // Pade pair is complex at K = 0 and turns real first, so a fixed
    // baseline would miss the event.
    CriticalGains out;
    int prev = sample(0.0).complex_count;
    double prev_k = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!out.k_oscillation && samples[i].complex_count > prev) {
            const int before = prev;
            out.k_oscillation =
                bisect(prev_k, K_grid[i], [&](double K) { return sample(K).complex_count > before; });
        }
        if (!out.k_unstable && samples[i].max_real > kRealTol) {
            out.k_unstable =
                bisect(prev_k, K_grid[i], [&](double K) { return sample(K).max_real > kRealTol; });
        }
        prev = samples[i].complex_count;
        prev_k = K_grid[i];
    }
    if (!out.k_oscillation && !out.k_unstable)
        throw NumericalError("continuous_critical_gains: no crossing within the gain grid");
    return out;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) throw ConfigError("log_grid: need 0 < lo < hi, n >= 2");
    std::vector<double> g(n);
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    return g;
}

std::vector<double> default_gain_grid(double z, double T) {
    return log_grid(0.1, 10.0 * unstable_gain_vacuum(z, T), 1000);
}

} // namespace divland
