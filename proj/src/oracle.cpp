#include "edm/oracle.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

namespace edm {

double brute_force_distance(const Cbba& m1, const Cbba& m2, DistanceForm form) {
  if (!(m1.frame() == m2.frame())) throw EvidenceError(ErrorCode::FrameMismatch, "bodies of evidence are defined on different frames");
  const int n = m1.frame().size();
  if (n > kOracleMaxFrameSize) throw EvidenceError(ErrorCode::FrameTooLarge, "oracle supports frames of at most 10 elements");

  const std::uint32_t count = (std::uint32_t{1} << n) - 1;
  std::vector<Complex> v1(count);
  std::vector<Complex> v2(count);
  double normalizer = 0.0;
  for (std::uint32_t bits = 1; bits <= count; ++bits) {
    const SubsetMask subset(n, bits);
    v1[bits - 1] = m1.mass(subset);
    v2[bits - 1] = m2.mass(subset);
  }
  for (const auto& z : v1) normalizer += z.modulus();
  for (const auto& z : v2) normalizer += z.modulus();

  std::vector<double> d(static_cast<std::size_t>(count) * count);
  for (std::uint32_t i = 1; i <= count; ++i) {
    for (std::uint32_t j = 1; j <= count; ++j) {
      d[(i - 1) * count + (j - 1)] = static_cast<double>(std::popcount(i & j)) / static_cast<double>(std::popcount(i | j));
    }
  }
  const auto at = [&](std::uint32_t i, std::uint32_t j) { return d[static_cast<std::size_t>(i) * count + j]; };

  if (form == DistanceForm::ScalarProduct) {
    const auto inner = [&](const std::vector<Complex>& u, const std::vector<Complex>& v) {
      Complex total;
      for (std::uint32_t i = 0; i < count; ++i) {
        for (std::uint32_t j = 0; j < count; ++j) total += at(i, j) * (u[i] * v[j].conjugate());
      }
      return total;
    };
    const double numerator = inner(v1, v1).modulus() + inner(v2, v2).modulus() - 2.0 * inner(v1, v2).modulus();
    return std::sqrt(std::max(0.0, numerator) / normalizer);
  }

  std::vector<Complex> delta(count);
  for (std::uint32_t i = 0; i < count; ++i) delta[i] = v1[i] - v2[i];

  Complex total;
  for (std::uint32_t i = 0; i < count; ++i) {
    const Complex left = form == DistanceForm::Sesquilinear ? delta[i].conjugate() : delta[i];
    for (std::uint32_t j = 0; j < count; ++j) total += at(i, j) * (left * delta[j]);
  }
  const double q = form == DistanceForm::Sesquilinear ? std::max(0.0, total.re()) : total.modulus();
  return std::sqrt(q / normalizer);
}

}  // namespace edm
