#include "edm/frame.hpp"

#include <algorithm>
#include <unordered_set>

namespace edm {

SubsetMask::SubsetMask(int width, std::uint32_t bits) : width_(width), bits_(bits) {
  if (width < 1 || width > kMaxFrameSize) {
    throw EvidenceError(ErrorCode::InvalidFrame, "frame width must be in [1, 20]");
  }
  if (bits >= (std::uint32_t{1} << width)) {
    throw EvidenceError(ErrorCode::InvalidArgument, "subset bits exceed frame width");
  }
}

SubsetMask SubsetMask::singleton(int width, int index) {
  if (index < 0 || index >= width) {
    throw EvidenceError(ErrorCode::InvalidArgument, "singleton index out of range");
  }
  return SubsetMask(width, std::uint32_t{1} << index);
}

void SubsetMask::require_same_frame(SubsetMask other) const {
  if (width_ != other.width_) {
    throw EvidenceError(ErrorCode::FrameMismatch, "subsets belong to frames of different size");
  }
}

bool SubsetMask::is_subset_of(SubsetMask other) const {
  require_same_frame(other);
  return (bits_ & ~other.bits_) == 0;
}

bool SubsetMask::intersects(SubsetMask other) const {
  require_same_frame(other);
  return (bits_ & other.bits_) != 0;
}

SubsetMask SubsetMask::intersection(SubsetMask other) const {
  require_same_frame(other);
  return SubsetMask(width_, bits_ & other.bits_);
}

SubsetMask SubsetMask::set_union(SubsetMask other) const {
  require_same_frame(other);
  return SubsetMask(width_, bits_ | other.bits_);
}

SubsetMask SubsetMask::complement() const noexcept {
  return SubsetMask(width_, ~bits_ & ((std::uint32_t{1} << width_) - 1));
}

Frame::Frame(std::vector<std::string> elements) : elements_(std::move(elements)) {
  if (elements_.empty() || elements_.size() > static_cast<std::size_t>(kMaxFrameSize)) {
    throw EvidenceError(ErrorCode::InvalidFrame, "frame must hold between 1 and 20 elements");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& name : elements_) {
    if (name.empty()) throw EvidenceError(ErrorCode::InvalidFrame, "frame element names must be non-empty");
    if (!seen.insert(name).second) {
      throw EvidenceError(ErrorCode::InvalidFrame, "duplicate frame element '" + name + "'");
    }
  }
}

int Frame::index_of(std::string_view name) const noexcept {
  const auto it = std::find(elements_.begin(), elements_.end(), name);
  return it == elements_.end() ? -1 : static_cast<int>(it - elements_.begin());
}

SubsetMask Frame::subset(std::span<const std::string> names) const {
  std::uint32_t bits = 0;
  for (const auto& name : names) {
    const int index = index_of(name);
    if (index < 0) throw EvidenceError(ErrorCode::UnknownElement, "'" + name + "' is not a frame element");
    bits |= std::uint32_t{1} << index;
  }
  return SubsetMask(size(), bits);
}

SubsetMask Frame::subset(std::initializer_list<std::string_view> names) const {
  std::vector<std::string> owned(names.begin(), names.end());
  return subset(std::span<const std::string>(owned));
}

std::vector<std::string> Frame::names_of(SubsetMask mask) const {
  if (!owns(mask)) throw EvidenceError(ErrorCode::FrameMismatch, "subset does not belong to this frame");
  std::vector<std::string> names;
  for (int i = 0; i < size(); ++i) {
    if (mask.bits() & (std::uint32_t{1} << i)) names.push_back(elements_[i]);
  }
  return names;
}

std::string Frame::label(SubsetMask mask) const {
  std::string out = "{";
  bool first = true;
  for (const auto& name : names_of(mask)) {
    if (!first) out += ',';
    out += name;
    first = false;
  }
  out += '}';
  return out;
}

double jaccard(SubsetMask a, SubsetMask b) {
  const int common = a.intersection(b).cardinality();
  const int either = a.set_union(b).cardinality();
  if (either == 0) return 0.0;
  return static_cast<double>(common) / static_cast<double>(either);
}

std::vector<SubsetMask> enumerate_power_set(const Frame& frame) {
  const std::uint32_t count = std::uint32_t{1} << frame.size();
  std::vector<SubsetMask> subsets;
  subsets.reserve(count);
  for (std::uint32_t bits = 0; bits < count; ++bits) subsets.emplace_back(frame.size(), bits);
  return subsets;
}

}  // namespace edm
