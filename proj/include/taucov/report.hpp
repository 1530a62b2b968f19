#ifndef TAUCOV_REPORT_HPP
#define TAUCOV_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "taucov/dataio.hpp"
#include "taucov/fit.hpp"
#include "taucov/similarity.hpp"

namespace taucov {

// ---------------------------------------------------------------------------
// Published coefficient listings and quoted values
// ---------------------------------------------------------------------------

/// One published Hermite expansion, digits as printed. Four listings are
/// wrapped as "GDP * [...]" in the source, with ambiguous units; the GDP
/// listing is labeled in billions while the data table stores current US$.
struct ReferenceCoefficientListing {
    std::string series_label;   // matching data-table label
    std::string printed_label;  // label as printed at the listing
    std::string unit_note;
    bool gdp_wrapped = false;
    std::vector<double> coefficients;  // H_0..H_15
};

const std::vector<ReferenceCoefficientListing>& reference_coefficient_listings();
const ReferenceCoefficientListing* find_listing(const std::string& series_label);

/// Pairwise values quoted in the source's discussion text; several disagree
/// with the corresponding table cells (sign flips, digit slips). Surfaced
/// as report notes, never treated as authoritative.
struct QuotedValue {
    Method method;
    std::string label_i;
    std::string label_j;
    double value;
};

const std::vector<QuotedValue>& discussion_quotes();

// ---------------------------------------------------------------------------
// Fit report (one series)
// ---------------------------------------------------------------------------

/// Computed coefficients under one unit reading of the input series.
struct UnitHypothesisFit {
    std::string name;            // "as stored" / "billions of USD" / ...
    std::vector<double> computed;
};

/// Side-by-side of a computed fit against a published listing; informative
/// only, no agreement gate.
struct CoefficientComparison {
    ReferenceCoefficientListing listing;
    std::vector<UnitHypothesisFit> hypotheses;
};

struct FitReport {
    std::string series_label;
    int year_min = 0;
    int year_max = 0;
    FitResult fit;
    std::optional<CoefficientComparison> listing_comparison;
};

FitReport make_fit_report(const std::vector<TimeSeries>& dataset, const std::string& series_label,
                          const BasisSpec& spec, const DomainMap& map, bool with_listing,
                          bool least_squares = false);

// ---------------------------------------------------------------------------
// Matrix comparison report
// ---------------------------------------------------------------------------

struct PairComparison {
    std::string label_i;
    std::string label_j;
    double computed = 0.0;
    double reference_ij = 0.0;
    double reference_ji = 0.0;
    double delta = 0.0;            // computed - reference_ij
    bool sign_mismatch = false;
    bool reference_asymmetric = false;
};

struct VariantComparison {
    bool k0_included = true;
    SimilarityMatrix computed;
    Matrix per_cell_delta;         // computed - reference, full square
    double max_abs_delta = 0.0;
    std::vector<PairComparison> pairs;  // all unordered off-diagonal pairs
    std::vector<std::pair<std::string, std::string>> sign_mismatches;
};

struct ComparisonReport {
    Method method = Method::tau_covariance;
    ReferenceMatrix reference;
    std::vector<VariantComparison> variants;  // tau: both k0 variants; pearson: one
    std::vector<std::string> notes;
};

/// Recomputes the chosen similarity over the dataset and diffs it cell by
/// cell against the reference. Label sets must match exactly (any order).
/// Large deltas are findings, not failures.
ComparisonReport build_comparison(const std::vector<TimeSeries>& dataset, Method method,
                                  const ReferenceMatrix& reference, const BasisSpec& spec,
                                  const DomainMap& map);

// ---------------------------------------------------------------------------
// Renderers
// ---------------------------------------------------------------------------

std::string render_markdown(const SimilarityMatrix& m);
std::string render_csv(const SimilarityMatrix& m);
nlohmann::json to_json(const SimilarityMatrix& m);

std::string render_markdown(const FitReport& r);
std::string render_csv(const FitReport& r);
nlohmann::json to_json(const FitReport& r);

std::string render_markdown(const ComparisonReport& r);
std::string render_csv(const ComparisonReport& r);
nlohmann::json to_json(const ComparisonReport& r);

nlohmann::json json_document(nlohmann::json body, const std::string& kind);

} // namespace taucov

#endif
