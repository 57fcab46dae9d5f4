#pragma once

#include <string>
#include <vector>

#include "koopid/observables.hpp"

namespace koopid {

struct SnapshotRecord {
  VectorXd s0, u0, s1, u1;
};

struct SnapshotSet {
  std::vector<SnapshotRecord> records;
  double dt = 0.0;
  BasisPtr basis;

  std::size_t size() const { return records.size(); }
};

/// Pre-lifted measurement pairs; what the fit actually consumes. Used directly
/// when observables come from data (finite differences) instead of evaluators.
struct LiftedSnapshots {
  std::vector<std::pair<VectorXd, VectorXd>> pairs;  // (Psi_k, Psi_{k+1})
  double dt = 0.0;
  int w_s = 0;
  int w_u = 0;
  std::vector<std::string> labels;
};

struct EmptySet : std::runtime_error {
  explicit EmptySet(const std::string& what) : std::runtime_error(what) {}
};
struct NonFiniteLift : std::runtime_error {
  explicit NonFiniteLift(const std::string& what) : std::runtime_error(what) {}
};
struct DtMismatch : std::runtime_error {
  explicit DtMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct BasisMismatch : std::runtime_error {
  explicit BasisMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct NoPrincipalLog : std::runtime_error {
  NoPrincipalLog(const std::string& what, std::vector<std::complex<double>> eigs)
      : std::runtime_error(what), offending(std::move(eigs)) {}
  std::vector<std::complex<double>> offending;
};
struct PredictNonFinite : std::runtime_error {
  PredictNonFinite(const std::string& what, int at_step)
      : std::runtime_error(what), step(at_step) {}
  int step;
};

/// Fitted operator plus the running sums that make refits cheap. A_sum and
/// G_sum are undivided accumulators; the averaging of the normal equations
/// happens at solve time, so K_d = A_sum * pinv(G_sum) at all times.
struct DiscreteKoopman {
  MatrixXd K_d;
  MatrixXd A_sum;
  MatrixXd G_sum;
  long long P = 0;
  double dt = 0.0;
  int w_s = 0;
  int w_u = 0;
  std::vector<std::string> basis_labels;

  int w() const { return w_s + w_u; }
};

LiftedSnapshots lift_snapshots(const SnapshotSet& snapshots);

DiscreteKoopman fit(const SnapshotSet& snapshots);
DiscreteKoopman fit(const LiftedSnapshots& lifted);

/// Folds new measurements into the accumulators and refits; no raw data kept.
/// forgetting = 1 keeps all measurements equally weighted; smaller values decay
/// the old accumulators per new record.
DiscreteKoopman incremental_update(const DiscreteKoopman& model, const SnapshotSet& new_snapshots,
                                   double forgetting = 1.0);
DiscreteKoopman incremental_update(const DiscreteKoopman& model, const LiftedSnapshots& lifted,
                                   double forgetting = 1.0);

/// Real principal matrix logarithm of K_d divided by dt.
MatrixXd to_continuous(const DiscreteKoopman& model);

/// Top-left w_s x w_s and top-right w_s x w_u blocks of K_d.
std::pair<MatrixXd, MatrixXd> extract_ab(const DiscreteKoopman& model);
std::pair<MatrixXd, MatrixXd> extract_ab(const MatrixXd& K, int w_s, int w_u);

/// Rolls Psi_s <- A Psi_s + B u_k for `steps` steps; returns all intermediate
/// lifted states including the initial one.
std::vector<VectorXd> predict(const DiscreteKoopman& model, const VectorXd& initial_lift,
                              const std::vector<VectorXd>& controls, int steps);

/// Max over records of |Psi_s(s_{k+1})[i] - (K_d Psi(s_k,u_k))[i]| for the
/// state rows i < state_dim. Feeds the data-driven bound estimate.
VectorXd one_step_state_residual_max(const DiscreteKoopman& model, const LiftedSnapshots& lifted,
                                     int state_dim);

std::string to_json(const DiscreteKoopman& model);
DiscreteKoopman koopman_from_json(const std::string& text);

}  // namespace koopid
