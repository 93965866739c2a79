#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "edm/distance.hpp"

namespace edm {

/// The two-element parametric pair on frame {A, B}:
///   m1 = {A: x+yi, X: (1−x)−yi},  m2 = {A: (1−x)+yi, X: x−yi}
/// with X = {B} for theta 1 and X = {A,B} for theta 2.
/// Validation errors (typically MagnitudeExceeded) propagate as EvidenceError.
std::pair<Cbba, Cbba> build_example1(double x, double y, int theta);

struct SweepSpec {
  int theta = 1;
  double y = 0.0;
  double x_start = 0.0;
  double x_end = 1.0;
  double x_step = 0.01;
  // Sesquilinear is always computed; these add columns.
  std::vector<DistanceForm> forms{DistanceForm::Sesquilinear};
  bool include_jousselme = false;
};

struct SweepRow {
  double x;
  double sesquilinear;
  std::optional<double> bilinear;
  std::optional<double> scalar;
  std::optional<double> jousselme;
};

struct SweepTable {
  bool has_bilinear = false;
  bool has_scalar = false;
  bool has_jousselme = false;
  std::vector<SweepRow> rows;
};

/// x_start, x_start + step, ... up to x_end; a grid point within 1e−12 of
/// x_end is emitted as x_end exactly.
std::vector<double> sweep_grid(double x_start, double x_end, double x_step);

/// Throws InvalidArgument for a malformed spec, or the build error prefixed with the offending x.
SweepTable run_sweep(const SweepSpec& spec);

/// Columns x,d_sesquilinear[,d_bilinear][,d_scalar][,d_jousselme]; 12 significant digits.
void write_csv(const SweepTable& table, std::ostream& out);

/// Shared numeric formatting for CLI and CSV output ("%.12g").
std::string format_number(double value);

}  // namespace edm
