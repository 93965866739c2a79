#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "edm/cbba.hpp"

namespace edm {

/// Jaccard-indexed similarity matrix over an ordered basis of non-empty subsets.
class SimilarityMatrix {
 public:
  /// Throws EmptySetInBasis, Duplicate, FrameMismatch, or InvalidArgument (empty basis).
  SimilarityMatrix(const Frame& frame, std::vector<SubsetMask> basis);

  std::size_t size() const noexcept { return basis_.size(); }
  const std::vector<SubsetMask>& basis() const noexcept { return basis_; }
  double operator()(std::size_t row, std::size_t col) const noexcept { return entries_[row * basis_.size() + col]; }

  /// Smallest eigenvalue; positive iff the matrix is positive definite.
  double min_eigenvalue() const;

 private:
  std::vector<SubsetMask> basis_;
  std::vector<double> entries_;
};

SimilarityMatrix similarity_matrix(const Frame& frame, std::vector<SubsetMask> basis);

/// Every non-empty subset of the frame, ascending.
std::vector<SubsetMask> non_empty_power_set(const Frame& frame);

/// How the complex difference vector enters the quadratic form.
///
/// Sesquilinear uses the conjugate transpose and is the default. BilinearLiteral
/// takes the modulus of the plain-transpose form, which vanishes for some distinct
/// pairs. ScalarProduct is the norm/inner-product expansion with a modulus on the
/// cross term; it agrees with the others only on real inputs.
enum class DistanceForm { Sesquilinear, BilinearLiteral, ScalarProduct };

std::string_view to_string(DistanceForm form) noexcept;
/// Accepts "sesquilinear", "bilinear", "scalar".
std::optional<DistanceForm> parse_distance_form(std::string_view name) noexcept;

/// Evidential distance between two CBBAs on the same frame.
///
/// The quadratic form runs over the union of both focal sets only; subsets
/// outside it carry zero mass in both bodies and contribute nothing. The result
/// is normalized by S = Σ|M1(A)| + Σ|M2(B)|. Bit-identical under argument swap.
double edm_distance(const Cbba& m1, const Cbba& m2, DistanceForm form = DistanceForm::Sesquilinear);

/// sqrt((‖M1‖² + ‖M2‖² − 2|⟨M1,M2⟩|) / S) with ⟨M1,M2⟩ = Σ M1(Ai) conj(M2(Aj)) D(i,j).
/// A numerator in [−1e−12, 0) is clamped to zero; below that NegativeNumerator is thrown.
double edm_distance_scalar_form(const Cbba& m1, const Cbba& m2);

/// Classical distance sqrt(½ ΔᵀDΔ) between two real-valued bodies (NotReal otherwise).
double jousselme_distance(const Cbba& m1, const Cbba& m2);

/// Symmetric pairwise distance matrix with a zero diagonal.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t n) : n_(n), values_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t row, std::size_t col) const noexcept { return values_[row * n_ + col]; }
  double& operator()(std::size_t row, std::size_t col) noexcept { return values_[row * n_ + col]; }

 private:
  std::size_t n_;
  std::vector<double> values_;
};

DistanceMatrix distance_matrix(std::span<const Cbba> bodies, DistanceForm form = DistanceForm::Sesquilinear);

}  // namespace edm
