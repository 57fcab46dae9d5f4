#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "koopid/koopman.hpp"
#include "koopid/observables.hpp"

namespace koopid {

// ---------------------------------------------------------------------------
// Single pendulum

constexpr double kGravity = 9.81;
constexpr double kPendulumLength = 1.0;

/// (theta_dot, omega_dot) = (omega, g/l sin(theta) + u).
VectorXd pendulum_flow(const VectorXd& state, const VectorXd& control);

/// Pendulum with analytic derivative chain up to order 4 and the training
/// domain theta in [-2pi, 2pi], omega in [-5, 5], u in [-5, 5].
DynamicsModel pendulum_model();

/// Analytic pendulum basis of order n: [theta, omega, theta^(2).. theta^(n)]
/// plus the control entry (theta's first derivative shares omega's slot).
BasisSpec pendulum_basis(int order);

// ---------------------------------------------------------------------------
// Tail-actuated robotic fish, averaged over one tail beat

struct FishParams {
  double m_b = 0.725;
  double m_ax = -0.217;
  double m_ay = -0.7888;
  double J_bz = 2.66e-3;
  double J_az = -7.93e-4;
  double L = 0.071;
  double d = 0.04;  // listed with the hardware constants; no equation consumes it
  double c = 0.105;
  double rho = 1000.0;
  double S = 0.03;
  double C_D = 0.97;
  double C_L = 3.9047;
  double K_D = 4.5e-3;
  double K_f = 0.7;
  double K_m = 0.45;
  double omega_a = 2.0 * M_PI;
  double m_water = 1.0;  // displaced-water mass per unit tail length; scale is
                         // absorbed by K_f / K_m in any data-driven fit

  double m1() const { return m_b - m_ax; }
  double m2() const { return m_b - m_ay; }
  double J3() const { return J_bz - J_az; }
  double c1() const { return 0.5 * rho * S * C_D; }
  double c2() const { return 0.5 * rho * S * C_L; }
  double c4() const { return K_D / J3(); }

  void validate() const;  // throws std::invalid_argument on m1/m2/J3 <= 0
};

FishParams fish_params_from_json(const std::string& text);
std::string to_json(const FishParams& p);

/// State s = [x, y, psi, v_x, v_y, omega]; controls (u1, u2) are the
/// amplitude/bias substitution of the tail beat.
VectorXd fish_flow(const VectorXd& state, const VectorXd& control, const FishParams& p);

DynamicsModel fish_model(const FishParams& p = {});

/// Term catalog for the structural basis: 12 first-derivative terms and the
/// 42 second-derivative products of the velocity rows; 60 state observables
/// with the states included.
StructuralSystem fish_structural_system();

/// States-only baseline basis for the fish (plus control entries).
BasisSpec fish_linear_basis();

// ---------------------------------------------------------------------------
// Simulation and sampling utilities

struct Trajectory {
  MatrixXd states;    // samples x state_dim
  MatrixXd controls;  // samples x control_dim (last row is the held control)
  double dt = 0.0;
  double t0 = 0.0;

  Eigen::Index size() const { return states.rows(); }
  double time(Eigen::Index k) const { return t0 + dt * static_cast<double>(k); }
};

/// Classical RK4 with internal substep dt_out/10; controls are held constant
/// over each output interval.
Trajectory integrate(const DynamicsModel& model, const VectorXd& s0,
                     const std::function<VectorXd(double)>& control_at, double dt_out,
                     double duration);

/// Single RK4 step (substep = dt/10) with the control held.
VectorXd rk4_step(const DynamicsModel& model, const VectorXd& s, const VectorXd& u, double dt,
                  int substeps = 10);

struct SamplingSpec {
  std::vector<Interval> state_intervals;
  std::vector<Interval> control_intervals;
  int count = 1;
  double dt = 0.01;
  std::uint64_t seed = 0;
  /// Optional map from the sampled control coordinates to the model's control
  /// vector (the fish samples tail amplitude/bias and maps them to u1/u2).
  std::function<VectorXd(const VectorXd&)> control_transform;
};

/// Draws (s0, u) uniformly, holds u over dt, integrates one step. The stored
/// record keeps u_{k+1} = u_k: the control is constant across the pair and its
/// value at the second measurement carries no new information.
SnapshotSet sample_training_set(const DynamicsModel& model, const SamplingSpec& spec,
                                const BasisPtr& basis);

/// Figure-8 reference: psi and omega trace the 135-degree sinusoid at 0.05
/// rad/s with v_x = 0.02 m/s.
VectorXd figure8_reference(double t);

Trajectory add_noise(const Trajectory& traj, const VectorXd& sigma, std::uint64_t seed);

struct LengthMismatch : std::runtime_error {
  explicit LengthMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Sum over samples of (s - s_des)' Q (s - s_des) + u' R u, with angular
/// channels wrapped before weighting.
double tracking_cost(const MatrixXd& states, const MatrixXd& reference, const MatrixXd& controls,
                     const MatrixXd& Q, const MatrixXd& R, const std::vector<bool>& angular);

SamplingSpec pendulum_training_spec(int count = 5000, double dt = 0.01, std::uint64_t seed = 0);
SamplingSpec fish_training_spec(int count = 3000, double dt = 0.005, std::uint64_t seed = 0);

}  // namespace koopid
