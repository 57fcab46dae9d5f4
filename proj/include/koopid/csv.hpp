#pragma once

#include <string>
#include <vector>

#include "koopid/systems.hpp"

namespace koopid {

struct CsvError : std::runtime_error {
  explicit CsvError(const std::string& what) : std::runtime_error(what) {}
};

/// Trajectory schema: header "t,s1..sN,u1..uM", one row per sample.
void write_trajectory_csv(const std::string& path, const Trajectory& traj);
Trajectory read_trajectory_csv(const std::string& path, int state_dim, int control_dim);

/// Reads a trajectory CSV inferring dims from a header of the documented form.
Trajectory read_trajectory_csv(const std::string& path);

struct BoundCurves {
  VectorXd times;
  MatrixXd measured;     // times x states
  MatrixXd bound_model;  // times x states
  MatrixXd bound_data;   // times x states
};

/// Schema: t,state_index,measured_max,bound_model,bound_data.
void write_bound_curves_csv(const std::string& path, const BoundCurves& curves);

/// Throws CsvError unless the file's header matches exactly.
void validate_csv_header(const std::string& path, const std::vector<std::string>& columns);

std::string format_double(double v);  // shortest round-trip, 17 significant digits

}  // namespace koopid
