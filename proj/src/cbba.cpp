#include "edm/cbba.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace edm {

bool ValidationReport::has(ErrorCode code) const noexcept {
  return std::any_of(violations.begin(), violations.end(), [code](const Violation& v) { return v.code == code; });
}

std::string ValidationReport::to_lines() const {
  std::string out;
  for (const auto& v : violations) {
    out += to_string(v.code);
    out += '\t';
    out += v.subset;
    out += '\t';
    out += v.detail;
    out += '\n';
  }
  return out;
}

Complex Cbba::mass(SubsetMask subset) const {
  if (!frame_.owns(subset)) throw EvidenceError(ErrorCode::FrameMismatch, "subset does not belong to this frame");
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), subset,
                                   [](const MassEntry& e, SubsetMask s) { return e.subset < s; });
  if (it != entries_.end() && it->subset == subset) return it->mass;
  return Complex{};
}

bool operator==(const Cbba& a, const Cbba& b) {
  if (!(a.frame_ == b.frame_) || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i].subset != b.entries_[i].subset || a.entries_[i].mass != b.entries_[i].mass) return false;
  }
  return true;
}

namespace {

std::string format_complex(Complex z) {
  std::ostringstream out;
  out.precision(12);
  out << z.re() << (std::signbit(z.im()) ? "-" : "+") << std::abs(z.im()) << "i";
  return out.str();
}

}  // namespace

ValidationResult validate_cbba(const Frame& frame, std::span<const MassEntry> raw_masses) {
  ValidationReport report;
  std::vector<MassEntry> kept;
  kept.reserve(raw_masses.size());

  // Sum in input order so the reported deviation matches what the caller wrote.
  double sum_re = 0.0;
  double sum_im = 0.0;

  std::vector<std::uint32_t> seen;
  seen.reserve(raw_masses.size());

  for (const auto& entry : raw_masses) {
    if (!frame.owns(entry.subset)) {
      report.violations.push_back({ErrorCode::FrameMismatch, "global",
                                   "subset of width " + std::to_string(entry.subset.width()) +
                                       " does not belong to a frame of " + std::to_string(frame.size())});
      continue;
    }
    const std::string label = frame.label(entry.subset);
    if (std::find(seen.begin(), seen.end(), entry.subset.bits()) != seen.end()) {
      report.violations.push_back({ErrorCode::DuplicateSubset, label, "subset listed more than once"});
      continue;
    }
    seen.push_back(entry.subset.bits());

    sum_re += entry.mass.re();
    sum_im += entry.mass.im();

    if (entry.subset.is_empty()) {
      if (!entry.mass.is_zero()) {
        report.violations.push_back({ErrorCode::EmptySetMass, label, "empty set carries mass " + format_complex(entry.mass)});
      }
      continue;
    }
    const double modulus = entry.mass.modulus();
    if (modulus > 1.0 + kMassTolerance) {
      std::ostringstream detail;
      detail.precision(12);
      detail << "modulus " << modulus << " exceeds 1";
      report.violations.push_back({ErrorCode::MagnitudeExceeded, label, detail.str()});
      continue;
    }
    if (modulus > 0.0) kept.push_back(entry);
  }

  if (std::abs(sum_re - 1.0) > kMassTolerance || std::abs(sum_im) > kMassTolerance) {
    Complex sum(sum_re, sum_im);
    report.violations.push_back({ErrorCode::SumNotOne, "global", "masses sum to " + format_complex(sum)});
  }

  if (!report.valid()) return report;

  std::sort(kept.begin(), kept.end(), [](const MassEntry& a, const MassEntry& b) { return a.subset < b.subset; });
  return Cbba(frame, std::move(kept));
}

Cbba require_valid(ValidationResult result) {
  if (auto* report = std::get_if<ValidationReport>(&result)) {
    std::string lines = report->to_lines();
    lines.pop_back();
    throw EvidenceError(report->violations.front().code, lines);
  }
  return std::get<Cbba>(std::move(result));
}

Complex belief_c(const Cbba& m, SubsetMask subset) {
  if (!m.frame().owns(subset)) throw EvidenceError(ErrorCode::FrameMismatch, "subset does not belong to this frame");
  Complex total;
  for (const auto& e : m.focal_elements()) {
    if (e.subset.is_subset_of(subset)) total += e.mass;
  }
  return total;
}

Complex plausibility_c(const Cbba& m, SubsetMask subset) {
  if (!m.frame().owns(subset)) throw EvidenceError(ErrorCode::FrameMismatch, "subset does not belong to this frame");
  Complex total;
  for (const auto& e : m.focal_elements()) {
    if (e.subset.intersects(subset)) total += e.mass;
  }
  return total;
}

bool is_real(const Cbba& m) noexcept {
  return std::all_of(m.focal_elements().begin(), m.focal_elements().end(),
                     [](const MassEntry& e) { return std::abs(e.mass.im()) <= kRealTolerance; });
}

}  // namespace edm
