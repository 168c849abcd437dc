#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "divland/parallel.hpp"
#include "divland/polynomial.hpp"

namespace divland {

struct LinearizationPoint {
    double z = 1.0;       // m
    double v_z = 0.0;     // m/s (v_x for the horizontal model)
    double v_wind = 0.0;  // m/s
};

// Linear model of the theta loop. For T > 0 the matrices are the ZOH pair
// (Phi, Gamma); for T == 0 they are the continuous (A, B).
struct LinearModel {
    Eigen::MatrixXd A;
    Eigen::VectorXd B;
    Eigen::RowVectorXd C;
    double D = 0.0;
    double T = 0.0;
    LinearizationPoint point;

    bool discrete() const { return T > 0.0; }
    int order() const { return static_cast<int>(A.rows()); }
};

// p = sign(v_wind - v_z) beta (v_wind - v_z), with beta = rho C_D A / m.
double linear_drag_constant(double v_z, double v_wind, double beta);

// beta from the aggregate 1/2 rho C_D A used by the simulator.
inline double drag_beta(double drag_coeff_half, double mass) { return 2.0 * drag_coeff_half / mass; }

LinearModel continuous_vacuum_model(double z, double v_z);
LinearModel continuous_drag_model(double z, double v_z, double v_wind, double beta);

// Phi = [[1,T],[0,1]], Gamma = [T^2/2, T], C = [-v_z/z^2, 1/z].
LinearModel zoh_vacuum_model(double z, double v_z, double T);

// Exact ZOH of the drag-linearized model. Requires p > 0; throws
// NumericalError otherwise.
LinearModel zoh_drag_model(double z, double v_z, double v_wind, double beta, double T);

// Four-state [z, v_z, x, v_x] model for ventral-flow control, observation
// theta_x = v_x / z.
LinearModel zoh_horizontal_model(double z, double v_x, double T);

// Characteristic polynomial of the closed loop u = -K y (the setpoint does
// not affect the poles). Returned as z^2 det(wI - Phi + K Gamma C) for the
// two-state vertical models, which is the feedback transfer-function
// denominator z^2 (w-1)^2 + K(...), and z det(...) for the four-state
// horizontal model.
Polynomial closed_loop_char_poly(const LinearModel& model, double K);

std::vector<std::complex<double>> closed_loop_poles(const LinearModel& model, double K);

// Open-loop zero of the vacuum ZOH transfer function,
// (zT + v_z T^2/2) / (zT - v_z T^2/2).
double vacuum_zero(double z, double v_z, double T);

// K_z = 2z/T and its inverse z = K T / 2.
double unstable_gain_vacuum(double z, double T);
double instability_height(double K, double T);

// Gain at which the drag model's pole crosses w = -1. The simplified form
// drops the v_z term of the denominator. Throws NumericalError for p <= 0 or
// a non-positive denominator.
double unstable_gain_drag(double z, double v_z, double p, double T, bool simplified);

// K_x = 2z/T for ventral-flow control.
double unstable_gain_horizontal(double z, double T);

// Open-loop G(w) = T / (z (w - 1)) of the horizontal model.
std::complex<double> horizontal_open_loop(double z, double T, std::complex<double> w);

// Second-order Pade realization of exp(-s delay): (A, B, C, D).
struct PadeRealization {
    Eigen::Matrix2d A;
    Eigen::Vector2d B;
    Eigen::RowVector2d C;
    double D;
};
PadeRealization pade2(double delay);

// State matrix of the continuous drag model in series with a second-order
// Pade delay on the actuation path, closed with u = -K y.
Eigen::Matrix4d delayed_closed_loop_matrix(const LinearModel& continuous, const PadeRealization& pade,
                                           double K);

struct CriticalGains {
    std::optional<double> k_oscillation;  // dominant real poles become complex
    std::optional<double> k_unstable;     // max real part crosses zero
};

struct GainSample {
    int complex_count = 0;
    double max_real = 0.0;
};

// Eigenvalue summaries at each grid gain; serial and OpenMP variants return
// identical results.
std::vector<GainSample> scan_gains(const LinearModel& continuous, double delay,
                                   std::span<const double> K_grid, Execution exec);

// Sweeps K over the (strictly increasing) grid, then refines each crossing
// by bisection. Throws NumericalError when neither crossing exists in the grid.
CriticalGains continuous_critical_gains(double z, double v_z, double v_wind, double beta,
                                        double delay, std::span<const double> K_grid,
                                        Execution exec = Execution::parallel);

// Logarithmic grid of n points over [lo, hi].
std::vector<double> log_grid(double lo, double hi, std::size_t n);

// Default critical-gain grid: 1000 log points over [0.1, 10 * 2z/T].
std::vector<double> default_gain_grid(double z, double T = 0.03);

} // namespace divland
