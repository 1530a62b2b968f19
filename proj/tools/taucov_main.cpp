// taucov: fits year-indexed series in a Hermite basis, computes tau-covariance
// and Pearson similarity matrices, and diffs them against the bundled
// published reference tables.

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "taucov/dataio.hpp"
#include "taucov/fit.hpp"
#include "taucov/report.hpp"
#include "taucov/similarity.hpp"
#include "taucov/version.hpp"

namespace {

using namespace taucov;

struct InputOptions {
    std::string fixture;
    std::string input;
    bool decimal_comma = false;
};

struct OutputOptions {
    std::string format;
    bool no_banner = false;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    auto* fx = cmd->add_option("--fixture", in.fixture, "Bundled dataset (table1)")
                   ->check(CLI::IsMember({"table1"}));
    auto* inp = cmd->add_option("--input", in.input, "Wide CSV file, or '-' for stdin");
    fx->excludes(inp);
    cmd->add_flag("--decimal-comma", in.decimal_comma,
                  "Parse ',' as the decimal separator (';' field separator auto-detected)");
}

void add_output_options(CLI::App* cmd, OutputOptions& out, const std::string& default_format) {
    out.format = default_format;
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"md", "csv", "json"}));
    cmd->add_flag("--no-banner", out.no_banner, "Suppress the generated-at header line");
}

std::vector<TimeSeries> resolve_dataset(const InputOptions& in) {
    if (!in.fixture.empty()) return load_table1();
    if (in.input.empty()) throw domain_error("one of --fixture or --input is required");
    std::string text;
    if (in.input == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        text = os.str();
    } else {
        std::ifstream f(in.input, std::ios::binary);
        if (!f) throw data_error("cannot open '" + in.input + "'");
        std::ostringstream os;
        os << f.rdbuf();
        text = os.str();
    }
    return parse_wide_csv(text, CsvOptions{.decimal_comma = in.decimal_comma});
}

std::string banner(const std::string& format) {
    char stamp[32];
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    std::string line = std::string("generated by taucov ") + kVersion + " at " + stamp;
    if (format == "md") return "<!-- " + line + " -->\n";
    return "# " + line + "\n";
}

void emit(const OutputOptions& out, const std::string& kind, const nlohmann::json& as_json,
          const std::string& as_md, const std::string& as_csv) {
    if (out.format == "json") {
        std::cout << json_document(as_json, kind).dump(2) << '\n';
        return;
    }
    if (!out.no_banner) std::cout << banner(out.format);
    std::cout << (out.format == "md" ? as_md : as_csv);
}

DomainMap map_for(const std::vector<TimeSeries>& dataset) {
    if (dataset.empty()) throw domain_error("input contains no series");
    return DomainMap::covering(dataset.front());
}

int default_degree(const std::vector<TimeSeries>& dataset) {
    return static_cast<int>(dataset.front().years.size()) - 1;
}

// ---- fit ------------------------------------------------------------------

int run_fit(const InputOptions& in, const OutputOptions& out, const std::string& series,
            int degree_opt, bool with_listing) {
    std::vector<TimeSeries> dataset = resolve_dataset(in);
    DomainMap map = map_for(dataset);
    int degree = degree_opt >= 0 ? degree_opt : default_degree(dataset);
    bool least_squares = degree < default_degree(dataset);
    BasisSpec spec{BasisFamily::hermite_physicists, degree};

    FitReport rep = make_fit_report(dataset, series, spec, map, with_listing, least_squares);
    emit(out, "fit_result", to_json(rep), render_markdown(rep), render_csv(rep));
    return 0;
}

// ---- matrix ---------------------------------------------------------------

int run_matrix(const InputOptions& in, const OutputOptions& out, const std::string& method,
               bool exclude_k0, int degree_opt) {
    std::vector<TimeSeries> dataset = resolve_dataset(in);
    DomainMap map = map_for(dataset);
    int degree = degree_opt >= 0 ? degree_opt : default_degree(dataset);
    BasisSpec spec{BasisFamily::hermite_physicists, degree};

    std::vector<SimilarityMatrix> matrices;
    if (method == "tau" || method == "both") {
        if (degree < default_degree(dataset)) {
            std::vector<std::string> labels;
            std::vector<CoefficientVector> coeffs;
            for (const TimeSeries& ts : dataset) {
                labels.push_back(ts.label);
                coeffs.push_back(fit_series_least_squares(ts, spec, map).coefficients);
            }
            matrices.push_back(tau_matrix_from_coefficients(labels, coeffs, !exclude_k0));
        } else {
            matrices.push_back(similarity_matrix(dataset, Method::tau_covariance, spec, map,
                                                 !exclude_k0));
        }
    }
    if (method == "pearson" || method == "both")
        matrices.push_back(pearson_matrix(dataset));

    nlohmann::json jm = nlohmann::json::array();
    std::string md, csv;
    for (const SimilarityMatrix& m : matrices) {
        jm.push_back(to_json(m));
        md += render_markdown(m) + "\n";
        csv += render_csv(m) + "\n";
    }
    emit(out, "similarity_matrices", nlohmann::json{{"matrices", std::move(jm)}}, md, csv);
    return 0;
}

// ---- compare --------------------------------------------------------------

int run_compare(const InputOptions& in, const OutputOptions& out, const std::string& method,
                const std::string& reference, bool force) {
    Method m = (method == "tau") ? Method::tau_covariance : Method::pearson;

    ReferenceMatrix ref;
    if (reference == "table2" || reference == "table3") {
        ref = (reference == "table2") ? load_table2() : load_table3();
        const bool matches = (m == Method::tau_covariance && reference == "table3") ||
                             (m == Method::pearson && reference == "table2");
        if (!matches && !force)
            throw domain_error("method '" + method + "' does not match reference '" + reference +
                               "' (tau pairs with table3, pearson with table2); pass --force to override");
    } else {
        std::ifstream f(reference, std::ios::binary);
        if (!f) throw data_error("cannot open reference '" + reference + "'");
        std::ostringstream os;
        os << f.rdbuf();
        ref = parse_matrix_csv(os.str(), CsvOptions{.decimal_comma = in.decimal_comma},
                               ReferenceSource::user_file);
    }

    std::vector<TimeSeries> dataset = resolve_dataset(in);
    DomainMap map = map_for(dataset);
    BasisSpec spec{BasisFamily::hermite_physicists, default_degree(dataset)};

    ComparisonReport rep = build_comparison(dataset, m, ref, spec, map);
    emit(out, "comparison_report", to_json(rep), render_markdown(rep), render_csv(rep));
    return 0;
}

// ---- demo-exp -------------------------------------------------------------

int run_demo_exp(bool as_json) {
    constexpr double published = 0.71687;
    constexpr double tolerance = 5e-3;

    auto pearson_exp = [](int n_last) {
        std::vector<double> xs, ys;
        for (int i = 0; i <= n_last; ++i) {
            xs.push_back(static_cast<double>(i));
            ys.push_back(std::exp(static_cast<double>(i)));
        }
        return pearson(xs, ys);
    };
    // The published constant matches the 10-point sequence 0..9; the text
    // around it words the sequence as 0..10. Both are computed and shown,
    // the gate runs against the computation the constant came from.
    const double computed = pearson_exp(9);
    const double computed_full = pearson_exp(10);
    const double delta = std::abs(computed - published);
    const bool ok = delta <= tolerance;

    if (as_json) {
        nlohmann::json j{{"computed", computed},
                         {"computed_full_sequence", computed_full},
                         {"published", published},
                         {"delta", delta},
                         {"tolerance", tolerance},
                         {"within_tolerance", ok}};
        std::cout << json_document(j, "exp_demo").dump(2) << '\n';
    } else {
        std::cout << "exp-sequence correlation check\n"
                  << "  pearson(0..9,  exp(0..9))  = " << render_number(computed) << '\n'
                  << "  pearson(0..10, exp(0..10)) = " << render_number(computed_full) << '\n'
                  << "  published value            = " << render_number(published) << '\n'
                  << "  delta (vs 0..9 computation) = " << render_number(delta) << "  [tolerance "
                  << render_number(tolerance) << "]\n"
                  << "note: the published constant corresponds to the 10-point sequence 0..9;\n"
                  << "      the sequence as worded (0..10) yields the second value.\n";
    }
    if (!ok) {
        std::cerr << "error: computed correlation deviates from the published value by "
                  << render_number(delta) << " (> " << render_number(tolerance) << ")\n";
        return 3;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("taucov ") + kVersion +
                 " - Hermite-basis series fitting and tau-covariance similarity"};
    app.require_subcommand(1);

    InputOptions fit_in, mat_in, cmp_in;
    OutputOptions fit_out, mat_out, cmp_out;

    auto* fit_cmd = app.add_subcommand("fit", "Fit one series and print its coefficients");
    add_input_options(fit_cmd, fit_in);
    add_output_options(fit_cmd, fit_out, "json");
    std::string fit_series_label;
    int fit_degree = -1;
    bool fit_listing = false;
    fit_cmd->add_option("--series", fit_series_label, "Series label (exact match)")->required();
    fit_cmd->add_option("--degree", fit_degree,
                        "Expansion degree (default: observations - 1; lower engages the "
                        "least-squares extension)");
    fit_cmd->add_flag("--paper-coeffs", fit_listing,
                      "Include the published coefficient listing side by side, under both unit "
                      "readings (informative)");

    auto* mat_cmd = app.add_subcommand("matrix", "Pairwise similarity matrix over all series");
    add_input_options(mat_cmd, mat_in);
    add_output_options(mat_cmd, mat_out, "md");
    std::string mat_method = "tau";
    bool mat_exclude_k0 = false;
    int mat_degree = -1;
    mat_cmd->add_option("--method", mat_method, "tau | pearson | both")
        ->check(CLI::IsMember({"tau", "pearson", "both"}));
    mat_cmd->add_flag("--exclude-k0", mat_exclude_k0, "Drop index 0 from the tau sums");
    mat_cmd->add_option("--degree", mat_degree, "Expansion degree for tau (default: observations - 1)");

    auto* cmp_cmd = app.add_subcommand("compare", "Diff a computed matrix against a reference table");
    add_input_options(cmp_cmd, cmp_in);
    add_output_options(cmp_cmd, cmp_out, "md");
    std::string cmp_method;
    std::string cmp_reference;
    bool cmp_force = false;
    cmp_cmd->add_option("--method", cmp_method, "tau | pearson")
        ->required()
        ->check(CLI::IsMember({"tau", "pearson"}));
    cmp_cmd->add_option("--reference", cmp_reference, "table2 | table3 | matrix CSV path")->required();
    cmp_cmd->add_flag("--force", cmp_force, "Allow a method/reference pairing that does not match");

    auto* demo_cmd = app.add_subcommand("demo-exp",
                                        "Correlation of 0..n vs exp(0..n) next to the published value");
    bool demo_json = false;
    demo_cmd->add_flag("--json", demo_json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (fit_cmd->parsed()) return run_fit(fit_in, fit_out, fit_series_label, fit_degree, fit_listing);
        if (mat_cmd->parsed()) return run_matrix(mat_in, mat_out, mat_method, mat_exclude_k0, mat_degree);
        if (cmp_cmd->parsed()) return run_compare(cmp_in, cmp_out, cmp_method, cmp_reference, cmp_force);
        if (demo_cmd->parsed()) return run_demo_exp(demo_json);
    } catch (const data_error& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 3;
    }
    return 1;
}
