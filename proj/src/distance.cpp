#include "edm/distance.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <tuple>

#include <Eigen/Eigenvalues>

namespace edm {

namespace {

constexpr double kNumeratorSlack = 1e-12;

void require_same_frame(const Cbba& m1, const Cbba& m2) {
  if (!(m1.frame() == m2.frame())) {
    throw EvidenceError(ErrorCode::FrameMismatch, "bodies of evidence are defined on different frames");
  }
}

// Pairs of masses aligned on the union of both focal sets.
struct AlignedMasses {
  std::vector<SubsetMask> basis;
  std::vector<Complex> first;
  std::vector<Complex> second;
};

AlignedMasses align(const Cbba& m1, const Cbba& m2) {
  AlignedMasses out;
  const auto a = m1.focal_elements();
  const auto b = m2.focal_elements();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].subset < b[j].subset)) {
      out.basis.push_back(a[i].subset);
      out.first.push_back(a[i].mass);
      out.second.emplace_back();
      ++i;
    } else if (i == a.size() || b[j].subset < a[i].subset) {
      out.basis.push_back(b[j].subset);
      out.first.emplace_back();
      out.second.push_back(b[j].mass);
      ++j;
    } else {
      out.basis.push_back(a[i].subset);
      out.first.push_back(a[i].mass);
      out.second.push_back(b[j].mass);
      ++i;
      ++j;
    }
  }
  return out;
}

double modulus_sum(const Cbba& m) {
  double total = 0.0;
  for (const auto& e : m.focal_elements()) total += e.mass.modulus();
  return total;
}

// Strict weak order over mass maps; used to evaluate every distance with its
// operands in a fixed order so that d(a,b) and d(b,a) are bit-identical.
bool precedes(const Cbba& a, const Cbba& b) {
  const auto ea = a.focal_elements();
  const auto eb = b.focal_elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end(), [](const MassEntry& x, const MassEntry& y) {
    return std::make_tuple(x.subset.bits(), x.mass.re(), x.mass.im()) <
           std::make_tuple(y.subset.bits(), y.mass.re(), y.mass.im());
  });
}

std::pair<const Cbba&, const Cbba&> ordered(const Cbba& m1, const Cbba& m2) {
  if (precedes(m2, m1)) return {m2, m1};
  return {m1, m2};
}

double normalization(const Cbba& m1, const Cbba& m2) {
  const double s = modulus_sum(m1) + modulus_sum(m2);
  // |Σ M| = 1 forces Σ|M| ≥ 1 for each body.
  assert(s > 0.0);
  return s;
}

// Δ*ᵀ D Δ, real by symmetry of D.
double sesquilinear_form(const SimilarityMatrix& d, std::span<const Complex> delta) {
  const std::size_t k = delta.size();
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    total += d(i, i) * delta[i].norm_squared();
    for (std::size_t j = i + 1; j < k; ++j) {
      if (d(i, j) == 0.0) continue;
      total += 2.0 * d(i, j) * (delta[i].conjugate() * delta[j]).re();
    }
  }
  return total;
}

// Δᵀ D Δ, complex in general.
Complex bilinear_form(const SimilarityMatrix& d, std::span<const Complex> delta) {
  const std::size_t k = delta.size();
  Complex total;
  for (std::size_t i = 0; i < k; ++i) {
    total += d(i, i) * (delta[i] * delta[i]);
    for (std::size_t j = i + 1; j < k; ++j) {
      if (d(i, j) == 0.0) continue;
      total += (2.0 * d(i, j)) * (delta[i] * delta[j]);
    }
  }
  return total;
}

// Σ_ij u_i conj(v_j) D(i,j).
Complex inner_product(const SimilarityMatrix& d, std::span<const Complex> u, std::span<const Complex> v) {
  Complex total;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (d(i, j) == 0.0) continue;
      total += d(i, j) * (u[i] * v[j].conjugate());
    }
  }
  return total;
}

double quadratic_distance(const Cbba& m1, const Cbba& m2, DistanceForm form) {
  const AlignedMasses aligned = align(m1, m2);
  std::vector<Complex> delta(aligned.basis.size());
  for (std::size_t i = 0; i < delta.size(); ++i) delta[i] = aligned.first[i] - aligned.second[i];
  if (std::all_of(delta.begin(), delta.end(), [](Complex z) { return z.is_zero(); })) return 0.0;

  const SimilarityMatrix d(m1.frame(), aligned.basis);
  const double q = form == DistanceForm::Sesquilinear ? std::max(0.0, sesquilinear_form(d, delta))
                                                      : bilinear_form(d, delta).modulus();
  return std::sqrt(q / normalization(m1, m2));
}

}  // namespace

SimilarityMatrix::SimilarityMatrix(const Frame& frame, std::vector<SubsetMask> basis) : basis_(std::move(basis)) {
  if (basis_.empty()) throw EvidenceError(ErrorCode::InvalidArgument, "similarity basis must be non-empty");
  for (const auto& s : basis_) {
    if (!frame.owns(s)) throw EvidenceError(ErrorCode::FrameMismatch, "basis subset does not belong to the frame");
    if (s.is_empty()) throw EvidenceError(ErrorCode::EmptySetInBasis, "the empty set cannot index the similarity matrix");
  }
  std::vector<SubsetMask> sorted = basis_;
  std::sort(sorted.begin(), sorted.end());
  if (const auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw EvidenceError(ErrorCode::Duplicate, "basis lists " + frame.label(*dup) + " twice");
  }

  const std::size_t k = basis_.size();
  entries_.assign(k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    entries_[i * k + i] = 1.0;
    for (std::size_t j = i + 1; j < k; ++j) {
      const double value = jaccard(basis_[i], basis_[j]);
      entries_[i * k + j] = value;
      entries_[j * k + i] = value;
    }
  }
}

double SimilarityMatrix::min_eigenvalue() const {
  const auto k = static_cast<Eigen::Index>(basis_.size());
  const Eigen::Map<const Eigen::MatrixXd> map(entries_.data(), k, k);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(map, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

SimilarityMatrix similarity_matrix(const Frame& frame, std::vector<SubsetMask> basis) {
  return SimilarityMatrix(frame, std::move(basis));
}

std::vector<SubsetMask> non_empty_power_set(const Frame& frame) {
  auto subsets = enumerate_power_set(frame);
  subsets.erase(subsets.begin());
  return subsets;
}

std::string_view to_string(DistanceForm form) noexcept {
  switch (form) {
    case DistanceForm::Sesquilinear: return "sesquilinear";
    case DistanceForm::BilinearLiteral: return "bilinear";
    case DistanceForm::ScalarProduct: return "scalar";
  }
  return "sesquilinear";
}

std::optional<DistanceForm> parse_distance_form(std::string_view name) noexcept {
  if (name == "sesquilinear") return DistanceForm::Sesquilinear;
  if (name == "bilinear") return DistanceForm::BilinearLiteral;
  if (name == "scalar") return DistanceForm::ScalarProduct;
  return std::nullopt;
}

double edm_distance(const Cbba& m1, const Cbba& m2, DistanceForm form) {
  require_same_frame(m1, m2);
  if (form == DistanceForm::ScalarProduct) return edm_distance_scalar_form(m1, m2);
  const auto [first, second] = ordered(m1, m2);
  return quadratic_distance(first, second, form);
}

double edm_distance_scalar_form(const Cbba& m1, const Cbba& m2) {
  require_same_frame(m1, m2);
  const auto [first, second] = ordered(m1, m2);
  const AlignedMasses aligned = align(first, second);
  const SimilarityMatrix d(first.frame(), aligned.basis);

  const double norm1 = inner_product(d, aligned.first, aligned.first).modulus();
  const double norm2 = inner_product(d, aligned.second, aligned.second).modulus();
  const double cross = inner_product(d, aligned.first, aligned.second).modulus();
  double numerator = norm1 + norm2 - 2.0 * cross;
  if (numerator < 0.0) {
    if (numerator < -kNumeratorSlack) {
      throw EvidenceError(ErrorCode::NegativeNumerator, "scalar-product numerator is " + std::to_string(numerator));
    }
    numerator = 0.0;
  }
  return std::sqrt(numerator / normalization(first, second));
}

double jousselme_distance(const Cbba& m1, const Cbba& m2) {
  require_same_frame(m1, m2);
  if (!is_real(m1) || !is_real(m2)) {
    throw EvidenceError(ErrorCode::NotReal, "the classical distance is defined for real-valued masses only");
  }
  const auto [first, second] = ordered(m1, m2);
  const AlignedMasses aligned = align(first, second);
  const std::size_t k = aligned.basis.size();
  std::vector<double> delta(k);
  for (std::size_t i = 0; i < k; ++i) delta[i] = aligned.first[i].re() - aligned.second[i].re();
  if (std::all_of(delta.begin(), delta.end(), [](double v) { return v == 0.0; })) return 0.0;

  const SimilarityMatrix d(first.frame(), aligned.basis);
  double q = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    q += delta[i] * delta[i];
    for (std::size_t j = i + 1; j < k; ++j) q += 2.0 * d(i, j) * delta[i] * delta[j];
  }
  return std::sqrt(0.5 * std::max(0.0, q));
}

DistanceMatrix distance_matrix(std::span<const Cbba> bodies, DistanceForm form) {
  for (std::size_t i = 1; i < bodies.size(); ++i) require_same_frame(bodies[0], bodies[i]);
  DistanceMatrix out(bodies.size());
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    for (std::size_t j = i + 1; j < bodies.size(); ++j) {
      const double d = edm_distance(bodies[i], bodies[j], form);
      out(i, j) = d;
      out(j, i) = d;
    }
  }
  return out;
}

}  // namespace edm
