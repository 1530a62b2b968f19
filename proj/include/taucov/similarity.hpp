#ifndef TAUCOV_SIMILARITY_HPP
#define TAUCOV_SIMILARITY_HPP

#include <span>
#include <string>
#include <vector>

#include "taucov/basis.hpp"
#include "taucov/fit.hpp"

namespace taucov {

enum class Method { tau_covariance, pearson };

const char* method_name(Method m);

/// Labeled square matrix of pairwise similarity values. Entries are
/// mirrored from one computation per unordered pair, so the matrix is
/// symmetric bit for bit; the diagonal is exactly 1.
struct SimilarityMatrix {
    std::vector<std::string> labels;
    Method method = Method::tau_covariance;
    Matrix entries;
    bool k0_included = true;  // tau only: whether index 0 enters the sums
};

/// Euclidean scalar product of coefficient vectors over index k0..n,
/// with k0 = 0 or 1 per flag.
double dot(const CoefficientVector& a, const CoefficientVector& b, bool k0_included);

/// Cosine of the angle between coefficient vectors over the active index
/// range. Overshoot beyond [-1, 1] of at most 1e-12 is clamped; more is a
/// numerical error. A zero vector in the active range has no angle.
double tau_covariance(const CoefficientVector& a, const CoefficientVector& b, bool k0_included);

/// Sample Pearson correlation, two-pass mean-centered form.
double pearson(std::span<const double> x, std::span<const double> y);

/// Pairwise similarity over a shared-grid dataset. tau fits every series
/// once (exact interpolation, degree = points - 1 expected in spec);
/// pearson correlates the raw values.
SimilarityMatrix similarity_matrix(const std::vector<TimeSeries>& dataset, Method method,
                                   const BasisSpec& spec, const DomainMap& map,
                                   bool k0_included = true);

/// tau matrix from already-computed coefficient vectors.
SimilarityMatrix tau_matrix_from_coefficients(const std::vector<std::string>& labels,
                                              const std::vector<CoefficientVector>& coeffs,
                                              bool k0_included);

SimilarityMatrix pearson_matrix(const std::vector<TimeSeries>& dataset);

} // namespace taucov

#endif
