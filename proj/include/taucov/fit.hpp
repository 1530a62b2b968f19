#ifndef TAUCOV_FIT_HPP
#define TAUCOV_FIT_HPP

#include <vector>

#include "taucov/basis.hpp"
#include "taucov/dataio.hpp"
#include "taucov/linalg.hpp"

namespace taucov {

/// Affine map from calendar years onto [0, 1]: year_min -> 0, year_max -> 1.
struct DomainMap {
    int year_min;
    int year_max;

    DomainMap(int y_min, int y_max) : year_min(y_min), year_max(y_max) {
        if (year_max <= year_min) throw domain_error("DomainMap requires year_max > year_min");
    }

    double to_unit(double year) const {
        return (year - year_min) / static_cast<double>(year_max - year_min);
    }
    quad to_unit_q(quad year) const {
        return (year - quad(year_min)) / quad(year_max - year_min);
    }

    /// Map covering a series' own year span.
    static DomainMap covering(const TimeSeries& ts) {
        validate(ts);
        return DomainMap(ts.years.front(), ts.years.back());
    }
};

struct FitResult {
    CoefficientVector coefficients;
    /// max over nodes of |reconstructed - observed| / max(1, max |observed|)
    double residual_max_rel = 0.0;
    /// 1-norm condition estimate of the collocation matrix
    double condition_estimate = 1.0;
    bool refined = false;
    bool least_squares = false;
};

struct Reconstruction {
    double value = 0.0;
    bool extrapolated = false;  // mapped point fell outside [0, 1]
};

enum class EvalPoint { year, unit_interval };

/// Matrix of basis values at the nodes: entry (j, k) = w_k(nodes[j]).
Matrix collocation_matrix(const BasisSpec& spec, const std::vector<double>& nodes);

/// Interpolate a series exactly: needs degree + 1 observations, solved by
/// row-pivoted LU plus one iterative-refinement pass.
FitResult fit_series(const TimeSeries& series, const BasisSpec& spec, const DomainMap& map);

/// Overdetermined extension: degree < observations - 1, Householder QR.
FitResult fit_series_least_squares(const TimeSeries& series, const BasisSpec& spec,
                                   const DomainMap& map);

Reconstruction reconstruct(const FitResult& fr, const DomainMap& map, double year_or_x,
                           EvalPoint mode);

/// Batch fit over a shared year grid; per-series failures carry the label.
std::vector<FitResult> fit_all(const std::vector<TimeSeries>& dataset, const BasisSpec& spec,
                               const DomainMap& map);

} // namespace taucov

#endif
