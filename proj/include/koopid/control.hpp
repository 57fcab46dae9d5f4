#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koopid/koopman.hpp"
#include "koopid/observables.hpp"

namespace koopid {

struct NotPSD : std::runtime_error {
  explicit NotPSD(const std::string& what) : std::runtime_error(what) {}
};
struct RiccatiDiverged : std::runtime_error {
  explicit RiccatiDiverged(const std::string& what) : std::runtime_error(what) {}
};
struct Unstabilizable : std::runtime_error {
  explicit Unstabilizable(const std::string& what) : std::runtime_error(what) {}
};

struct LqrWeights {
  MatrixXd Q;  // state_dim x state_dim, PSD
  MatrixXd R;  // w_u x w_u, PD
};

/// Embeds Q into the lifted space: top-left block Q, zeros elsewhere.
MatrixXd embed_weights(const MatrixXd& Q, int w_s);

struct LqrOptions {
  double residual_tol = 1e-9;      // relative Riccati residual at convergence
  long max_iterations = 50000;     // plain fixed-point refinement budget
  double radius_tol = 0.0;         // slack on the closed-loop spectral radius test
};

struct LqrSolution {
  MatrixXd gains;      // w_u x w_s
  MatrixXd P;          // Riccati solution
  double residual = 0; // relative residual achieved
};

/// Discrete-time infinite-horizon LQR via the doubling recursion with a
/// fixed-point polish; checks the DARE residual and the closed-loop radius.
LqrSolution solve_lqr_discrete(const MatrixXd& A, const MatrixXd& B, const MatrixXd& Q_lift,
                               const MatrixXd& R, const LqrOptions& opts = {});

/// Continuous-time LQR from a continuous operator (log(K_d)/dt): discretizes
/// (A, B, Q, R) at an internal step and solves the equivalent DARE, shrinking
/// the step until the CARE residual is met.
LqrSolution solve_lqr_continuous(const MatrixXd& K_cont, int w_s, int w_u,
                                 const MatrixXd& Q_lift, const MatrixXd& R,
                                 const LqrOptions& opts = {});

enum class LqrMode { Discrete, Continuous };

/// Which entries of the desired lift are honored: Full evaluates every basis
/// entry at the desired state; PenalizedOnly zeroes the error on entries that
/// carry no weight in Q_lift (they mirror the current lift instead).
enum class DesiredLift { Full, PenalizedOnly };

struct LqrController {
  MatrixXd gains;    // w_u x w_s
  MatrixXd Q_lift;
  MatrixXd R;
  LqrMode mode = LqrMode::Discrete;
  BasisPtr basis;
  DesiredLift desired_lift = DesiredLift::Full;
};

LqrController synthesize_controller(const DiscreteKoopman& model, const BasisPtr& basis,
                                    const LqrWeights& weights, LqrMode mode = LqrMode::Discrete,
                                    DesiredLift desired_lift = DesiredLift::Full,
                                    const LqrOptions& opts = {});

/// u = -K (Psi_s(s) - Psi_s(s_des)); angular state entries wrap into (-pi, pi].
VectorXd feedback(const LqrController& controller, const VectorXd& state,
                  const VectorXd& desired);

/// Feedback evaluated on an already-formed lifted error (linearity hook).
VectorXd feedback_from_error(const LqrController& controller, const VectorXd& lifted_error);

/// Tail-beat thrust/turn inputs produced by amplitude alpha_a and bias alpha_o
/// (radians): u1 = a^2 (3 - 3/2 o^2 - 3/8 a^2), u2 = a^2 o.
std::pair<double, double> fish_actuation_forward(double alpha_a, double alpha_o);

constexpr double kFishAmplitudeMax = M_PI / 6.0;  // 30 degrees
constexpr double kFishBiasMax = M_PI / 4.0;       // 45 degrees

/// Nearest feasible (alpha_a, alpha_o) for commanded (u1, u2), by multi-start
/// projected gradient on the box. Ties broken toward alpha_o = 0 then alpha_a = 0.
std::pair<double, double> invert_fish_actuation(double u1, double u2);

std::string to_json(const LqrController& controller);
LqrController controller_from_json(const std::string& text);

}  // namespace koopid
