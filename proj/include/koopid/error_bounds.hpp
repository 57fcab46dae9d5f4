#pragma once

#include <vector>

#include "koopid/koopman.hpp"
#include "koopid/observables.hpp"

namespace koopid {

/// Block-diagonal propagator of states and their derivatives: block j is the
/// (n_j + 1)-square unit upper triangular matrix with entry (i, i+m) = dt^m/m!.
struct TaylorOperator {
  MatrixXd matrix;
  std::vector<int> orders;
  double dt = 0.0;
  std::vector<int> block_offsets;  // start row of each state's block
};

TaylorOperator taylor_operator(const std::vector<int>& orders, double dt);

enum class BoundProvenance { ModelBased, DataDriven };

struct ErrorBoundEstimate {
  std::vector<int> orders;  // derivative order n per state
  VectorXd fmax;            // |f^(n+1)|_max per state
  BoundProvenance provenance = BoundProvenance::ModelBased;
  double dt = 0.0;
};

/// T^(n+1)/(n+1)! * fmax per state, clamped at zero.
VectorXd global_error_bound(const ErrorBoundEstimate& estimate, double horizon_T);

struct SeriesTooShort : std::runtime_error {
  explicit SeriesTooShort(const std::string& what) : std::runtime_error(what) {}
};

/// Error recursion for a single propagated function: row k holds e_k^(p) for
/// p = 0..n, with e_0 = 0. fn1_midpoints[i] supplies f^(n+1) sampled inside
/// [t_i, t_{i+1}] (the midpoint stands in for the Lagrange point).
MatrixXd exact_error_recursion(const std::vector<double>& fn1_midpoints, int n, double dt,
                               int steps);

struct FmaxOptions {
  int samples = 100000;
  std::uint64_t seed = 20210215;
  bool fd_fallback = false;   // estimate missing chain orders from fine simulated trajectories
  double fd_dt = 1e-4;
};

/// Max |f^(n_j+1)| per state over uniform domain draws with random admissible
/// controls. Needs the derivative chain up to n_j + 1 unless fd_fallback is on.
VectorXd estimate_fmax_model(const DynamicsModel& model, const std::vector<int>& orders,
                             const FmaxOptions& opts = {});

double estimate_fmax_data(double max_local_error, int n, double dt);
VectorXd estimate_fmax_data(const VectorXd& max_local_error, const std::vector<int>& orders,
                            double dt);

struct MeasuredErrorCurve {
  VectorXd times;       // steps + 1 entries starting at 0
  MatrixXd max_error;   // (steps + 1) x state_dim
};

struct MeasuredErrorOptions {
  int test_count = 1000;
  std::uint64_t seed = 1;
  bool controls_per_step = true;  // fresh random control each step vs one per trajectory
};

/// Max over test trajectories of |predicted state - true state| per step.
/// Initial conditions and controls are drawn from the model domain; truth is
/// integrated with the fixed-substep RK4 used everywhere else.
MeasuredErrorCurve measured_max_error(const DiscreteKoopman& model, const BasisSpec& basis,
                                      const DynamicsModel& truth, double horizon_T,
                                      const MeasuredErrorOptions& opts = {});

}  // namespace koopid
