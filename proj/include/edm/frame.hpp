#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edm/error.hpp"

namespace edm {

inline constexpr int kMaxFrameSize = 20;

/// A subset of a frame of n events, encoded as a bit mask (bit i = event i).
///
/// The mask carries its frame width so that combining subsets drawn from frames
/// of different sizes is caught as a FrameMismatch instead of silently mixing bits.
class SubsetMask {
 public:
  SubsetMask(int width, std::uint32_t bits);

  static SubsetMask empty_set(int width) { return SubsetMask(width, 0); }
  static SubsetMask full_set(int width) { return SubsetMask(width, (std::uint32_t{1} << width) - 1); }
  static SubsetMask singleton(int width, int index);

  std::uint32_t bits() const noexcept { return bits_; }
  int width() const noexcept { return width_; }
  int cardinality() const noexcept { return std::popcount(bits_); }
  bool is_empty() const noexcept { return bits_ == 0; }

  bool is_subset_of(SubsetMask other) const;
  bool intersects(SubsetMask other) const;
  SubsetMask intersection(SubsetMask other) const;
  SubsetMask set_union(SubsetMask other) const;
  SubsetMask complement() const noexcept;

  friend bool operator==(SubsetMask a, SubsetMask b) noexcept = default;
  friend auto operator<=>(SubsetMask a, SubsetMask b) noexcept = default;

 private:
  void require_same_frame(SubsetMask other) const;

  int width_;
  std::uint32_t bits_;
};

/// An ordered frame of discernment: 1..20 distinct, non-empty event names.
/// Element order fixes bit positions.
class Frame {
 public:
  explicit Frame(std::vector<std::string> elements);

  int size() const noexcept { return static_cast<int>(elements_.size()); }
  const std::vector<std::string>& elements() const noexcept { return elements_; }

  /// Index of the named element, or -1.
  int index_of(std::string_view name) const noexcept;

  /// Mask for a list of element names; throws UnknownElement.
  SubsetMask subset(std::span<const std::string> names) const;
  SubsetMask subset(std::initializer_list<std::string_view> names) const;

  SubsetMask empty_set() const { return SubsetMask::empty_set(size()); }
  SubsetMask full_set() const { return SubsetMask::full_set(size()); }

  /// Element names of a subset in frame order.
  std::vector<std::string> names_of(SubsetMask mask) const;

  /// "{A,B}" style label; "{}" for the empty set.
  std::string label(SubsetMask mask) const;

  bool owns(SubsetMask mask) const noexcept { return mask.width() == size(); }

  friend bool operator==(const Frame& a, const Frame& b) = default;

 private:
  std::vector<std::string> elements_;
};

/// |A∩B| / |A∪B|. Defined as 0 for ∅ vs ∅.
double jaccard(SubsetMask a, SubsetMask b);

/// All 2^n subsets in ascending bit order, ∅ first and Ω last.
std::vector<SubsetMask> enumerate_power_set(const Frame& frame);

}  // namespace edm
