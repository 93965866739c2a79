#include "edm/example.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace edm {

namespace {

constexpr double kGridSnap = 1e-12;

bool wants(const SweepSpec& spec, DistanceForm form) {
  return std::find(spec.forms.begin(), spec.forms.end(), form) != spec.forms.end();
}

}  // namespace

std::pair<Cbba, Cbba> build_example1(double x, double y, int theta) {
  if (theta != 1 && theta != 2) throw EvidenceError(ErrorCode::InvalidArgument, "theta must be 1 or 2");
  const Frame frame({"A", "B"});
  const SubsetMask a = frame.subset({"A"});
  const SubsetMask other = theta == 1 ? frame.subset({"B"}) : frame.full_set();

  const MassEntry first[] = {{a, Complex(x, y)}, {other, Complex(1.0 - x, -y)}};
  const MassEntry second[] = {{a, Complex(1.0 - x, y)}, {other, Complex(x, -y)}};
  return {require_valid(validate_cbba(frame, first)), require_valid(validate_cbba(frame, second))};
}

std::vector<double> sweep_grid(double x_start, double x_end, double x_step) {
  if (!(x_step > 0.0) || !std::isfinite(x_step)) throw EvidenceError(ErrorCode::InvalidArgument, "x step must be positive");
  if (!std::isfinite(x_start) || !std::isfinite(x_end) || x_start > x_end) {
    throw EvidenceError(ErrorCode::InvalidArgument, "x range must satisfy x_start <= x_end");
  }
  std::vector<double> grid;
  for (std::size_t i = 0;; ++i) {
    const double x = x_start + static_cast<double>(i) * x_step;
    if (std::abs(x - x_end) <= kGridSnap) {
      grid.push_back(x_end);
      break;
    }
    if (x > x_end) break;
    grid.push_back(x);
  }
  return grid;
}

SweepTable run_sweep(const SweepSpec& spec) {
  if (spec.theta != 1 && spec.theta != 2) throw EvidenceError(ErrorCode::InvalidArgument, "theta must be 1 or 2");
  if (spec.include_jousselme && spec.y != 0.0) {
    throw EvidenceError(ErrorCode::InvalidArgument, "the classical distance column requires y = 0");
  }

  SweepTable table;
  table.has_bilinear = wants(spec, DistanceForm::BilinearLiteral);
  table.has_scalar = wants(spec, DistanceForm::ScalarProduct);
  table.has_jousselme = spec.include_jousselme;

  for (const double x : sweep_grid(spec.x_start, spec.x_end, spec.x_step)) {
    try {
      const auto [m1, m2] = build_example1(x, spec.y, spec.theta);
      SweepRow row{x, edm_distance(m1, m2, DistanceForm::Sesquilinear), {}, {}, {}};
      if (table.has_bilinear) row.bilinear = edm_distance(m1, m2, DistanceForm::BilinearLiteral);
      if (table.has_scalar) row.scalar = edm_distance_scalar_form(m1, m2);
      if (table.has_jousselme) row.jousselme = jousselme_distance(m1, m2);
      table.rows.push_back(row);
    } catch (const EvidenceError& e) {
      throw EvidenceError(e.code(), "at x = " + format_number(x) + ": " + e.detail());
    }
  }
  return table;
}

std::string format_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

void write_csv(const SweepTable& table, std::ostream& out) {
  out << "x,d_sesquilinear";
  if (table.has_bilinear) out << ",d_bilinear";
  if (table.has_scalar) out << ",d_scalar";
  if (table.has_jousselme) out << ",d_jousselme";
  out << '\n';
  for (const auto& row : table.rows) {
    out << format_number(row.x) << ',' << format_number(row.sesquilinear);
    if (row.bilinear) out << ',' << format_number(*row.bilinear);
    if (row.scalar) out << ',' << format_number(*row.scalar);
    if (row.jousselme) out << ',' << format_number(*row.jousselme);
    out << '\n';
  }
}

}  // namespace edm
