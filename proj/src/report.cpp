#include "taucov/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "taucov/version.hpp"

namespace taucov {

namespace {

const char* kCo2 = "CO2 emissions (metric tons per capita)";
const char* kElectric = "Electric power consumption (kWh per capita)";
const char* kGdp = "GDP (current US$)";
const char* kAgri = "Agriculture, forestry, and fishing, value added (% of GDP)";
const char* kIndustry = "Industry (including construction), value added (% of GDP)";
const char* kExports = "Exports of goods and services (% of GDP)";
const char* kImports = "Imports of goods and services (% of GDP)";

} // namespace

const std::vector<ReferenceCoefficientListing>& reference_coefficient_listings() {
    // Digits as printed. In the "Agriculture" listing the H_5 operator is
    // typeset as "-" at one line end and "+" at the next line start; the
    // line-end operator is kept, matching that listing's layout elsewhere.
    static const std::vector<ReferenceCoefficientListing> listings = {
        {kGdp, "GDP (mlrd. USD)",
         "printed in billions of USD; the data table stores current US$",
         false,
         {-257467542.7, 575413342.2, -458622107.3, 330467806.3, -77398076.61, 40935103.59,
          2798056.589, 1867609.009, 759418.6949, 91674.34629, 29020.11318, 4933.890807,
          320.7992577, 114.2072781, 0.399454495, 0.8192630}},
        {kCo2, "CO2 emission (metric ton per capita)",
         "printed unit matches the data table",
         false,
         {39873530.21, -13026678.67, 57078760.72, 37144725.81, 11039085.96, 13551517.93,
          2436261.78, 732990.3244, 435554.0212, -51069.22151, 29462.00319, -4502.029741,
          750.9001231, -98.60386495, 6.139244274, 0.639471145}},
        {kAgri, "Agriculture, forestry, and fishing",
         "printed wrapped as GDP * [...]; share-of-GDP vs absolute reading unclear",
         true,
         {273710246.3, -619677926.4, 454615947.5, -362411256.6, 68672792.73, -57428724.5,
          -1905829.452, -5754300.662, -314588.4686, -453484.2664, 4508.331813, -19286.1096,
          544.8031475, -355.6132925, 6.640203074, -2.21323152}},
        {kIndustry, "Industry (including construction)",
         "printed wrapped as GDP * [...]; share-of-GDP vs absolute reading unclear",
         true,
         {1605793321.0, -3000692173.0, 2873303333.0, -1287329304.0, 482301642.6, 14335223.43,
          -21303521.77, 26264323.72, -5493143.094, 1928950.922, -229904.529, 49959.66988,
          -3222.494027, 502.7329109, -12.53372334, 1.605166278}},
        {kExports, "Exports of goods and services",
         "printed wrapped as GDP * [...]; share-of-GDP vs absolute reading unclear",
         true,
         {710681348.6, -478952899.3, 1229210418.0, 429359395.8, 267948054.4, 269594341.1,
          25616537.57, 36111846.37, 2683508.507, 1802502.373, 174656.188, 38577.84296,
          4559.184981, 366.5995184, 37.77925541, 1.458763605}},
        {kImports, "Imports of goods and service",
         "printed wrapped as GDP * [...]; share-of-GDP vs absolute reading unclear",
         true,
         {-1159776910.0, 3331728115.0, -1986759199.0, 2280715751.0, -205085206.7, 377380498.2,
          63356761.32, 24589504.25, 9541993.567, 923286.1957, 433740.5246, 27166.77358,
          7717.999716, 506.9179536, 46.17917842, 3.632792684}},
    };
    return listings;
}

const ReferenceCoefficientListing* find_listing(const std::string& series_label) {
    for (const auto& l : reference_coefficient_listings())
        if (l.series_label == series_label) return &l;
    return nullptr;
}

const std::vector<QuotedValue>& discussion_quotes() {
    static const std::vector<QuotedValue> quotes = {
        {Method::tau_covariance, kCo2, kElectric, 0.512904347},
        {Method::tau_covariance, kCo2, kGdp, 0.476076253},
        {Method::tau_covariance, kCo2, kAgri, 0.427860804},
        {Method::tau_covariance, kCo2, kIndustry, 0.588709296},
        {Method::tau_covariance, kCo2, kImports, 0.301603765},
        {Method::pearson, kCo2, kElectric, 0.15519434},
        {Method::pearson, kCo2, kGdp, 0.321520301},
        {Method::pearson, kCo2, kGdp, 0.973262207},
        {Method::pearson, kCo2, kAgri, 0.902132858},
        {Method::pearson, kCo2, kAgri, 0.888669481},
        {Method::pearson, kCo2, kIndustry, 0.902132858},
        {Method::pearson, kCo2, kIndustry, 0.897826088},
        {Method::pearson, kCo2, kExports, 0.888669481},
        {Method::pearson, kCo2, kImports, 0.501046148},
    };
    return quotes;
}

namespace {

const TimeSeries* find_series(const std::vector<TimeSeries>& dataset, const std::string& label) {
    for (const TimeSeries& ts : dataset)
        if (ts.label == label) return &ts;
    return nullptr;
}

std::vector<double> as_doubles(const CoefficientVector& cv) {
    std::vector<double> out;
    out.reserve(cv.coefficients.size());
    for (const quad& c : cv.coefficients) out.push_back(to_double(c));
    return out;
}

FitResult run_fit(const TimeSeries& ts, const BasisSpec& spec, const DomainMap& map,
                  bool least_squares) {
    return least_squares ? fit_series_least_squares(ts, spec, map) : fit_series(ts, spec, map);
}

} // namespace

FitReport make_fit_report(const std::vector<TimeSeries>& dataset, const std::string& series_label,
                          const BasisSpec& spec, const DomainMap& map, bool with_listing,
                          bool least_squares) {
    const TimeSeries* ts = find_series(dataset, series_label);
    if (ts == nullptr) throw domain_error("series '" + series_label + "' not found in input");

    FitReport rep;
    rep.series_label = series_label;
    rep.year_min = map.year_min;
    rep.year_max = map.year_max;
    rep.fit = run_fit(*ts, spec, map, least_squares);

    const ReferenceCoefficientListing* listing = with_listing ? find_listing(series_label) : nullptr;
    if (listing != nullptr) {
        CoefficientComparison cc;
        cc.listing = *listing;
        cc.hypotheses.push_back({"as stored", as_doubles(rep.fit.coefficients)});

        if (listing->series_label == kGdp) {
            TimeSeries scaled = *ts;
            for (double& v : scaled.values) v /= 1e9;
            cc.hypotheses.push_back(
                {"billions of USD", as_doubles(run_fit(scaled, spec, map, least_squares).coefficients)});
        } else if (listing->gdp_wrapped) {
            const TimeSeries* gdp = find_series(dataset, kGdp);
            if (gdp != nullptr && gdp->years == ts->years) {
                TimeSeries absolute = *ts;
                for (std::size_t i = 0; i < absolute.values.size(); ++i)
                    absolute.values[i] = absolute.values[i] / 100.0 * gdp->values[i];
                cc.hypotheses.push_back(
                    {"absolute US$ (share times GDP)",
                     as_doubles(run_fit(absolute, spec, map, least_squares).coefficients)});
            }
        }
        rep.listing_comparison = std::move(cc);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Comparison
// ---------------------------------------------------------------------------

namespace {

std::vector<TimeSeries> reorder_to(const std::vector<TimeSeries>& dataset,
                                   const std::vector<std::string>& labels) {
    std::vector<TimeSeries> out;
    out.reserve(labels.size());
    for (const std::string& l : labels) {
        const TimeSeries* ts = find_series(dataset, l);
        if (ts == nullptr)
            throw domain_error("label-set mismatch: reference label '" + l + "' not in dataset");
        out.push_back(*ts);
    }
    return out;
}

VariantComparison diff_against(const SimilarityMatrix& computed, const ReferenceMatrix& ref) {
    const std::size_t n = ref.labels.size();
    VariantComparison v;
    v.k0_included = computed.k0_included;
    v.computed = computed;
    v.per_cell_delta = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double d = computed.entries(i, j) - ref.entries(i, j);
            v.per_cell_delta(i, j) = d;
            if (std::abs(d) > v.max_abs_delta) v.max_abs_delta = std::abs(d);
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            PairComparison pc;
            pc.label_i = ref.labels[i];
            pc.label_j = ref.labels[j];
            pc.computed = computed.entries(i, j);
            pc.reference_ij = ref.entries(i, j);
            pc.reference_ji = ref.entries(j, i);
            pc.delta = pc.computed - pc.reference_ij;
            pc.sign_mismatch = pc.computed * pc.reference_ij < 0.0;
            pc.reference_asymmetric = pc.reference_ij != pc.reference_ji;
            if (pc.sign_mismatch) v.sign_mismatches.emplace_back(pc.label_i, pc.label_j);
            v.pairs.push_back(std::move(pc));
        }
    return v;
}

} // namespace

ComparisonReport build_comparison(const std::vector<TimeSeries>& dataset, Method method,
                                  const ReferenceMatrix& reference, const BasisSpec& spec,
                                  const DomainMap& map) {
    if (dataset.size() != reference.labels.size())
        throw domain_error("label-set mismatch: dataset has " + std::to_string(dataset.size()) +
                           " series, reference has " + std::to_string(reference.labels.size()));
    std::vector<TimeSeries> aligned = reorder_to(dataset, reference.labels);

    ComparisonReport rep;
    rep.method = method;
    rep.reference = reference;

    if (method == Method::tau_covariance) {
        for (bool k0 : {true, false})
            rep.variants.push_back(
                diff_against(similarity_matrix(aligned, method, spec, map, k0), reference));
    } else {
        rep.variants.push_back(diff_against(pearson_matrix(aligned), reference));
    }

    for (std::size_t i = 0; i < reference.labels.size(); ++i)
        for (std::size_t j = i + 1; j < reference.labels.size(); ++j)
            if (reference.entries(i, j) != reference.entries(j, i))
                rep.notes.push_back("reference matrix is asymmetric at (" + reference.labels[i] +
                                    ", " + reference.labels[j] + "): " +
                                    render_number(reference.entries(i, j)) + " vs " +
                                    render_number(reference.entries(j, i)));

    auto index_of = [&](const std::string& l) -> std::ptrdiff_t {
        auto it = std::find(reference.labels.begin(), reference.labels.end(), l);
        return it == reference.labels.end() ? -1 : it - reference.labels.begin();
    };
    for (const QuotedValue& q : discussion_quotes()) {
        if (q.method != method) continue;
        std::ptrdiff_t i = index_of(q.label_i), j = index_of(q.label_j);
        if (i < 0 || j < 0) continue;
        double printed = reference.entries(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        if (std::abs(printed - q.value) > 1e-12)
            rep.notes.push_back("discussion text quotes " + render_number(q.value) + " for (" +
                                q.label_i + ", " + q.label_j + "); the reference table prints " +
                                render_number(printed));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Renderers
// ---------------------------------------------------------------------------

namespace {

std::string md_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += "\\|";
        else out += c;
    }
    return out;
}

void md_matrix_block(std::ostringstream& os, const std::vector<std::string>& labels,
                     const Matrix& entries) {
    os << "| |";
    for (const auto& l : labels) os << ' ' << md_escape(l) << " |";
    os << "\n|---|";
    for (std::size_t i = 0; i < labels.size(); ++i) os << "---|";
    os << '\n';
    for (std::size_t i = 0; i < labels.size(); ++i) {
        os << "| " << md_escape(labels[i]) << " |";
        for (std::size_t j = 0; j < labels.size(); ++j)
            os << ' ' << render_number(entries(i, j)) << " |";
        os << '\n';
    }
}

std::string variant_tag(Method method, bool k0_included) {
    if (method == Method::pearson) return "pearson";
    return k0_included ? "tau (k0 included)" : "tau (k0 excluded)";
}

} // namespace

std::string render_markdown(const SimilarityMatrix& m) {
    std::ostringstream os;
    os << "## " << variant_tag(m.method, m.k0_included) << " similarity matrix\n\n";
    md_matrix_block(os, m.labels, m.entries);
    return os.str();
}

std::string render_csv(const SimilarityMatrix& m) {
    ReferenceMatrix tmp;
    tmp.labels = m.labels;
    tmp.entries = m.entries;
    std::string body = serialize_matrix_csv(tmp);
    // corner cell carries the method tag, mirroring the fixture layout
    return std::string(method_name(m.method)) + body.substr(std::string("Label").size());
}

nlohmann::json to_json(const SimilarityMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < m.labels.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.labels.size(); ++j) row.push_back(m.entries(i, j));
        entries.push_back(std::move(row));
    }
    nlohmann::json j{{"method", method_name(m.method)},
                     {"labels", m.labels},
                     {"entries", std::move(entries)}};
    if (m.method == Method::tau_covariance) j["k0_included"] = m.k0_included;
    return j;
}

namespace {

nlohmann::json to_json(const CoefficientComparison& cc) {
    nlohmann::json hyps = nlohmann::json::array();
    for (const auto& h : cc.hypotheses)
        hyps.push_back({{"name", h.name}, {"coefficients", h.computed}});
    return {{"printed_label", cc.listing.printed_label},
            {"unit_note", cc.listing.unit_note},
            {"printed_coefficients", cc.listing.coefficients},
            {"computed", std::move(hyps)}};
}

} // namespace

std::string render_markdown(const FitReport& r) {
    std::ostringstream os;
    os << "## Fit: " << r.series_label << "\n\n";
    os << "- basis: "
       << (r.fit.coefficients.basis.family == BasisFamily::hermite_physicists ? "hermite"
                                                                              : "monomial")
       << ", degree " << r.fit.coefficients.basis.degree << '\n';
    os << "- domain: years " << r.year_min << ".." << r.year_max << " mapped to [0, 1]\n";
    os << "- residual_max_rel: " << render_number(r.fit.residual_max_rel) << '\n';
    os << "- condition_estimate: " << render_number(r.fit.condition_estimate) << '\n';
    os << "- refined: " << (r.fit.refined ? "true" : "false") << '\n';
    os << "- least_squares: " << (r.fit.least_squares ? "true" : "false") << "\n\n";
    os << "| k | coefficient |\n|---|---|\n";
    std::vector<double> cs = as_doubles(r.fit.coefficients);
    for (std::size_t k = 0; k < cs.size(); ++k)
        os << "| " << k << " | " << render_number(cs[k]) << " |\n";

    if (r.listing_comparison) {
        const CoefficientComparison& cc = *r.listing_comparison;
        os << "\n### Published listing comparison (informative)\n\n";
        os << "- printed label: " << cc.listing.printed_label << '\n';
        os << "- unit note: " << cc.listing.unit_note << "\n\n";
        os << "| k | printed |";
        for (const auto& h : cc.hypotheses) os << " computed (" << h.name << ") |";
        os << "\n|---|---|";
        for (std::size_t i = 0; i < cc.hypotheses.size(); ++i) os << "---|";
        os << '\n';
        for (std::size_t k = 0; k < cc.listing.coefficients.size(); ++k) {
            os << "| " << k << " | " << render_number(cc.listing.coefficients[k]) << " |";
            for (const auto& h : cc.hypotheses)
                os << ' ' << (k < h.computed.size() ? render_number(h.computed[k]) : "") << " |";
            os << '\n';
        }
    }
    return os.str();
}

std::string render_csv(const FitReport& r) {
    std::ostringstream os;
    os << "series,degree,residual_max_rel,condition_estimate,refined,least_squares\n";
    os << '"' << r.series_label << "\"," << r.fit.coefficients.basis.degree << ','
       << render_number(r.fit.residual_max_rel) << ',' << render_number(r.fit.condition_estimate)
       << ',' << (r.fit.refined ? "true" : "false") << ','
       << (r.fit.least_squares ? "true" : "false") << "\n\n";
    os << "k,coefficient\n";
    std::vector<double> cs = as_doubles(r.fit.coefficients);
    for (std::size_t k = 0; k < cs.size(); ++k) os << k << ',' << render_number(cs[k]) << '\n';
    return os.str();
}

nlohmann::json to_json(const FitReport& r) {
    nlohmann::json j{
        {"series", r.series_label},
        {"basis",
         {{"family", r.fit.coefficients.basis.family == BasisFamily::hermite_physicists
                         ? "hermite_physicists"
                         : "monomial"},
          {"degree", r.fit.coefficients.basis.degree}}},
        {"domain", {{"year_min", r.year_min}, {"year_max", r.year_max}}},
        {"coefficients", as_doubles(r.fit.coefficients)},
        {"residual_max_rel", r.fit.residual_max_rel},
        {"condition_estimate", r.fit.condition_estimate},
        {"refined", r.fit.refined},
        {"least_squares", r.fit.least_squares},
    };
    if (r.listing_comparison) j["published_listing"] = to_json(*r.listing_comparison);
    return j;
}

std::string render_markdown(const ComparisonReport& r) {
    std::ostringstream os;
    os << "# Comparison report: computed " << method_name(r.method) << " vs reference\n";
    for (const VariantComparison& v : r.variants) {
        os << "\n## " << variant_tag(r.method, v.k0_included) << "\n\n";
        os << "max |delta| over all cells: " << render_number(v.max_abs_delta) << "\n\n";
        os << "| series i | series j | computed | reference (i,j) | reference (j,i) | delta | sign mismatch |\n";
        os << "|---|---|---|---|---|---|---|\n";
        for (const PairComparison& p : v.pairs) {
            os << "| " << md_escape(p.label_i) << " | " << md_escape(p.label_j) << " | "
               << render_number(p.computed) << " | " << render_number(p.reference_ij) << " | ";
            os << (p.reference_asymmetric ? render_number(p.reference_ji) : std::string("="));
            os << " | " << render_number(p.delta) << " | " << (p.sign_mismatch ? "YES" : "") << " |\n";
        }
        os << "\nsign mismatches: " << v.sign_mismatches.size() << '\n';
        for (const auto& [a, b] : v.sign_mismatches)
            os << "- (" << a << ", " << b << ")\n";
    }
    if (!r.notes.empty()) {
        os << "\n## Notes\n\n";
        for (const std::string& n : r.notes) os << "- " << n << '\n';
    }
    return os.str();
}

std::string render_csv(const ComparisonReport& r) {
    std::ostringstream os;
    os << "variant,series_i,series_j,computed,reference_ij,reference_ji,delta,sign_mismatch,"
          "reference_asymmetric\n";
    for (const VariantComparison& v : r.variants)
        for (const PairComparison& p : v.pairs)
            os << '"' << variant_tag(r.method, v.k0_included) << "\",\"" << p.label_i << "\",\""
               << p.label_j << "\"," << render_number(p.computed) << ','
               << render_number(p.reference_ij) << ',' << render_number(p.reference_ji) << ','
               << render_number(p.delta) << ',' << (p.sign_mismatch ? "true" : "false") << ','
               << (p.reference_asymmetric ? "true" : "false") << '\n';
    return os.str();
}

nlohmann::json to_json(const ComparisonReport& r) {
    const char* src = r.reference.source == ReferenceSource::table2   ? "table2"
                      : r.reference.source == ReferenceSource::table3 ? "table3"
                                                                      : "user_file";
    nlohmann::json ref_entries = nlohmann::json::array();
    for (std::size_t i = 0; i < r.reference.labels.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < r.reference.labels.size(); ++j)
            row.push_back(r.reference.entries(i, j));
        ref_entries.push_back(std::move(row));
    }

    nlohmann::json variants = nlohmann::json::array();
    for (const VariantComparison& v : r.variants) {
        nlohmann::json deltas = nlohmann::json::array();
        for (std::size_t i = 0; i < r.reference.labels.size(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t j = 0; j < r.reference.labels.size(); ++j)
                row.push_back(v.per_cell_delta(i, j));
            deltas.push_back(std::move(row));
        }
        nlohmann::json pairs = nlohmann::json::array();
        for (const PairComparison& p : v.pairs)
            pairs.push_back({{"series_i", p.label_i},
                             {"series_j", p.label_j},
                             {"computed", p.computed},
                             {"reference_ij", p.reference_ij},
                             {"reference_ji", p.reference_ji},
                             {"delta", p.delta},
                             {"sign_mismatch", p.sign_mismatch},
                             {"reference_asymmetric", p.reference_asymmetric}});
        nlohmann::json mismatches = nlohmann::json::array();
        for (const auto& [a, b] : v.sign_mismatches) mismatches.push_back({a, b});
        variants.push_back({{"k0_included", v.k0_included},
                            {"computed", to_json(v.computed)},
                            {"per_cell_delta", std::move(deltas)},
                            {"max_abs_delta", v.max_abs_delta},
                            {"pairs", std::move(pairs)},
                            {"sign_mismatches", std::move(mismatches)}});
    }

    return {{"method", method_name(r.method)},
            {"reference", {{"source", src}, {"labels", r.reference.labels}, {"entries", std::move(ref_entries)}}},
            {"variants", std::move(variants)},
            {"notes", r.notes}};
}

nlohmann::json json_document(nlohmann::json body, const std::string& kind) {
    nlohmann::json doc{{"schema_version", kJsonSchemaVersion}, {"kind", kind}};
    doc.update(body);
    return doc;
}

} // namespace taucov
