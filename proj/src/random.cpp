#include "edm/random.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace edm {

namespace {

constexpr int kMaxRounds = 1000;
constexpr std::uint32_t kMaxFocalElements = 12;

void centre(std::vector<double>& values, const std::vector<std::size_t>& indices) {
  double mean = 0.0;
  for (const auto i : indices) mean += values[i];
  mean /= static_cast<double>(indices.size());
  for (const auto i : indices) values[i] -= mean;
}

}  // namespace

Cbba random_cbba(const Frame& frame, std::uint64_t seed, double complex_fraction) {
  if (!(complex_fraction >= 0.0 && complex_fraction <= 1.0)) {
    throw EvidenceError(ErrorCode::InvalidArgument, "complex_fraction must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  const int n = frame.size();
  const std::uint32_t subsets = (std::uint32_t{1} << n) - 1;
  const std::uint32_t max_focal = std::min(subsets, kMaxFocalElements);

  std::uniform_int_distribution<std::uint32_t> pick_count(1, max_focal);
  std::uniform_int_distribution<std::uint32_t> pick_subset(1, subsets);
  std::exponential_distribution<double> weight(1.0);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> amplitude(0.0, 1.0);
  std::bernoulli_distribution is_complex(complex_fraction);

  for (int round = 0; round < kMaxRounds; ++round) {
    const std::uint32_t k = pick_count(rng);
    std::vector<std::uint32_t> chosen;
    while (chosen.size() < k) {
      const std::uint32_t bits = pick_subset(rng);
      if (std::find(chosen.begin(), chosen.end(), bits) == chosen.end()) chosen.push_back(bits);
    }

    std::vector<double> re(k);
    double total = 0.0;
    for (auto& w : re) total += (w = weight(rng));
    for (auto& w : re) w /= total;

    std::vector<double> im(k, 0.0);
    std::vector<std::size_t> complex_indices;
    for (std::size_t i = 0; i < k; ++i) {
      if (is_complex(rng)) complex_indices.push_back(i);
    }
    if (complex_indices.size() >= 2) {
      const double scale = amplitude(rng);
      std::vector<double> shift(k, 0.0);
      for (const auto i : complex_indices) {
        im[i] = scale * unit(rng);
        shift[i] = 0.5 * scale * unit(rng);
      }
      centre(im, complex_indices);
      centre(shift, complex_indices);
      for (const auto i : complex_indices) re[i] += shift[i];
    }

    std::vector<MassEntry> entries;
    entries.reserve(k);
    bool capped = true;
    for (std::size_t i = 0; i < k; ++i) {
      const Complex mass(re[i], im[i]);
      if (mass.modulus() > 1.0) {
        capped = false;
        break;
      }
      entries.push_back({SubsetMask(n, chosen[i]), mass});
    }
    if (!capped) continue;

    auto result = validate_cbba(frame, entries);
    if (auto* cbba = std::get_if<Cbba>(&result)) return std::move(*cbba);
  }
  throw EvidenceError(ErrorCode::GenerationFailed, "no admissible draw after 1000 rounds; try another seed");
}

}  // namespace edm
