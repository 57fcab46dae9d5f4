#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koopid/numeric.hpp"

namespace koopid {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
};

/// Continuous-time system description. flow computes ds/dt; derivative_chain[j]
/// computes the (j+1)-th time derivative of every state (so chain[0] must agree
/// with flow). Controls are treated as constant when differentiating.
struct DynamicsModel {
  int state_dim = 0;
  int control_dim = 0;
  std::function<VectorXd(const VectorXd&, const VectorXd&)> flow;
  std::vector<std::function<VectorXd(const VectorXd&, const VectorXd&)>> derivative_chain;
  std::vector<Interval> state_domain;
  std::vector<Interval> control_domain;
  std::vector<std::string> state_names;
  std::vector<std::string> control_names;
  std::vector<bool> angular;  // states that live on the circle

  /// j-th time derivative of the state vector, j >= 1.
  VectorXd time_derivative(int j, const VectorXd& s, const VectorXd& u) const;
  int max_derivative_order() const { return static_cast<int>(derivative_chain.size()); }
};

struct MissingDerivative : std::runtime_error {
  explicit MissingDerivative(const std::string& what) : std::runtime_error(what) {}
};

struct DuplicateLabel : std::runtime_error {
  explicit DuplicateLabel(const std::string& what) : std::runtime_error(what) {}
};

struct TooShort : std::runtime_error {
  explicit TooShort(const std::string& what) : std::runtime_error(what) {}
};

struct WindowTooLarge : std::runtime_error {
  explicit WindowTooLarge(const std::string& what) : std::runtime_error(what) {}
};

enum class EntryRole { State, Derivative, StructuralTerm, Control };

struct BasisEntry {
  std::string label;
  EntryRole role = EntryRole::State;
  int state_index = -1;    // State / Derivative entries
  int order = 0;           // Derivative entries
  int control_index = -1;  // Control entries
  std::function<double(const VectorXd&, const VectorXd&)> eval;  // (state, control)
};

/// Ordered observable catalog defining the lift Psi(s, u). States come first,
/// control passthrough entries last.
struct BasisSpec {
  std::vector<BasisEntry> entries;
  int state_dim = 0;
  int control_dim = 0;
  int w_s = 0;
  int w_u = 0;
  std::vector<bool> angular;  // per state, inherited from the model

  int w() const { return w_s + w_u; }
  std::vector<std::string> labels() const;
  bool has_evaluators() const;
};

using BasisPtr = std::shared_ptr<const BasisSpec>;

/// States, then per-state analytic derivative entries up to orders[i], then
/// identity control entries. Entries whose evaluator coincides with an earlier
/// entry on domain samples are dropped (a state that is another state's
/// derivative keeps a single slot).
BasisSpec build_analytic_basis(const DynamicsModel& model, const std::vector<int>& orders);

/// One named term of a state's flow, with the partial derivatives needed to
/// expand its own time derivative into per-term products.
struct TermFunction {
  std::string label;
  int state_index = -1;
  std::function<double(const VectorXd&)> value;
  // state index -> (partial evaluator, partial identically one)
  std::map<int, std::pair<std::function<double(const VectorXd&)>, bool>> partials;
};

struct StructuralSystem {
  int state_dim = 0;
  int control_dim = 0;
  std::vector<std::string> state_names;
  std::vector<std::string> control_names;
  std::vector<bool> angular;
  std::vector<TermFunction> terms;
  std::vector<int> row_orders;  // per state: 1 = terms only, 2 = terms + products
  std::vector<Interval> sample_domain;  // used for the duplicate-label consistency check
};

/// States, first-order terms, then each product (dg_i/ds_j) * g_ja as a separate
/// entry. Deduplication is by label; a unit partial collapses the product onto
/// the multiplying term's label. DuplicateLabel when one label maps to two
/// numerically different evaluators.
BasisSpec build_structural_basis(const StructuralSystem& sys);

/// Evaluate the full lift Psi(s, u).
VectorXd lift(const BasisSpec& basis, const VectorXd& state, const VectorXd& control);

/// State-dependent part Psi_s(s) with control arguments zeroed.
VectorXd lift_state(const BasisSpec& basis, const VectorXd& state);

struct DerivativeEstimate {
  // values[j] holds the (j+1)-th derivative, same shape as the input series;
  // only rows inside valid_range carry estimates.
  std::vector<MatrixXd> values;
  int order = 0;
  int stencil_width = 0;
  std::pair<int, int> valid_range{0, 0};  // inclusive
};

/// Iterated first-order centered differences on a uniformly sampled series
/// (rows = samples). Boundary samples are dropped, not one-sided.
DerivativeEstimate estimate_derivatives(const MatrixXd& series, double dt, int order);

/// Centered moving average; output has rows - window + 1 samples. The i-th
/// output corresponds to input index i + (window - 1) / 2.
MatrixXd moving_average(const MatrixXd& series, int window);

}  // namespace koopid
