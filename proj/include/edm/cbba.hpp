#pragma once

#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "edm/complex.hpp"
#include "edm/frame.hpp"

namespace edm {

inline constexpr double kMassTolerance = 1e-9;
inline constexpr double kRealTolerance = 1e-12;

struct MassEntry {
  SubsetMask subset;
  Complex mass;
};

struct Violation {
  ErrorCode code;
  std::string subset;  // label such as "{A,B}", or "global"
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const noexcept { return violations.empty(); }
  bool has(ErrorCode code) const noexcept;
  /// One "CODE\tsubset\tdetail" line per violation.
  std::string to_lines() const;
};

/// A validated complex basic belief assignment.
///
/// Holds only focal elements (non-zero mass), sorted by subset bits. ∅ is never
/// stored. Instances exist only through validate_cbba and are immutable.
class Cbba {
 public:
  const Frame& frame() const noexcept { return frame_; }
  std::span<const MassEntry> focal_elements() const noexcept { return entries_; }

  /// Mass of a subset; zero when the subset is not focal.
  Complex mass(SubsetMask subset) const;

  friend bool operator==(const Cbba& a, const Cbba& b);

 private:
  friend std::variant<Cbba, ValidationReport> validate_cbba(const Frame&, std::span<const MassEntry>);

  Cbba(Frame frame, std::vector<MassEntry> entries) : frame_(std::move(frame)), entries_(std::move(entries)) {}

  Frame frame_;
  std::vector<MassEntry> entries_;
};

using ValidationResult = std::variant<Cbba, ValidationReport>;

/// Checks the CBBA conditions: no mass on ∅, per-entry modulus ≤ 1, complex sum
/// equal to 1+0i (both within kMassTolerance), unique subsets of this frame.
/// Every violated condition is reported. Zero-modulus entries are dropped.
ValidationResult validate_cbba(const Frame& frame, std::span<const MassEntry> raw_masses);

/// Unwraps a validation result. On failure throws with the first violation's code
/// and the full report as the message.
Cbba require_valid(ValidationResult result);

/// Σ_{B⊆A} M(B).
Complex belief_c(const Cbba& m, SubsetMask subset);

/// Σ_{B∩A≠∅} M(B).
Complex plausibility_c(const Cbba& m, SubsetMask subset);

/// True when every mass has |im| ≤ kRealTolerance, i.e. m is a classical BBA.
bool is_real(const Cbba& m) noexcept;

}  // namespace edm
