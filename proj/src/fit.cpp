#include "taucov/fit.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace taucov {

namespace {

std::vector<quad> collocation_q(const BasisSpec& spec, const std::vector<quad>& nodes) {
    const int dim = spec.dimension();
    std::vector<quad> a(static_cast<std::size_t>(nodes.size()) * dim);
    for (std::size_t j = 0; j < nodes.size(); ++j)
        detail::eval_all(spec.family, spec.degree, nodes[j], a.data() + j * dim);
    return a;
}

std::vector<quad> mapped_nodes(const TimeSeries& series, const DomainMap& map) {
    validate(series);
    if (series.years.front() < map.year_min || series.years.back() > map.year_max)
        throw domain_error("series '" + series.label + "' has years outside the domain map");
    std::vector<quad> nodes;
    nodes.reserve(series.years.size());
    for (int y : series.years) nodes.push_back(map.to_unit_q(quad(y)));
    return nodes;
}

double residual_max_rel_of(const std::vector<quad>& a, int rows, int cols,
                           const std::vector<quad>& x, const TimeSeries& series) {
    quad scale = 1;
    for (double v : series.values)
        if (qabs(quad(v)) > scale) scale = qabs(quad(v));
    quad worst = 0;
    for (int j = 0; j < rows; ++j) {
        quad s = 0;
        for (int k = 0; k < cols; ++k) s += a[static_cast<std::size_t>(j) * cols + k] * x[k];
        quad r = qabs(s - quad(series.values[static_cast<std::size_t>(j)]));
        if (r > worst) worst = r;
    }
    return to_double(worst / scale);
}

} // namespace

Matrix collocation_matrix(const BasisSpec& spec, const std::vector<double>& nodes) {
    if (nodes.size() != static_cast<std::size_t>(spec.dimension()))
        throw domain_error("collocation_matrix: node count must equal degree + 1");
    std::set<double> distinct(nodes.begin(), nodes.end());
    if (distinct.size() != nodes.size())
        throw domain_error("collocation_matrix: duplicate nodes");

    const std::size_t dim = nodes.size();
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        std::vector<double> row = basis_eval_all(spec, nodes[j]);
        for (std::size_t k = 0; k < dim; ++k) m(j, k) = row[k];
    }
    return m;
}

FitResult fit_series(const TimeSeries& series, const BasisSpec& spec, const DomainMap& map) {
    std::vector<quad> nodes = mapped_nodes(series, map);
    const int n = spec.dimension();
    if (static_cast<int>(nodes.size()) != n)
        throw domain_error("fit_series: series '" + series.label + "' has " +
                           std::to_string(nodes.size()) + " observations, degree " +
                           std::to_string(spec.degree) + " needs " + std::to_string(n));

    std::vector<quad> a = collocation_q(spec, nodes);
    std::vector<quad> b(n);
    for (int i = 0; i < n; ++i) b[i] = quad(series.values[static_cast<std::size_t>(i)]);

    linalg::LuFactors f = linalg::lu_factor(a, n);
    std::vector<quad> x = linalg::solve_refined(f, a, b.data());

    FitResult fr;
    fr.coefficients.basis = spec;
    fr.coefficients.coefficients = x;
    fr.residual_max_rel = residual_max_rel_of(a, n, n, x, series);
    fr.condition_estimate = linalg::condition_estimate_1(f, linalg::norm1(a, n));
    fr.refined = true;
    return fr;
}

FitResult fit_series_least_squares(const TimeSeries& series, const BasisSpec& spec,
                                   const DomainMap& map) {
    std::vector<quad> nodes = mapped_nodes(series, map);
    const int rows = static_cast<int>(nodes.size());
    const int cols = spec.dimension();
    if (cols >= rows)
        throw domain_error("fit_series_least_squares: degree must be below observations - 1");

    std::vector<quad> a = collocation_q(spec, nodes);
    std::vector<quad> b(rows);
    for (int i = 0; i < rows; ++i) b[i] = quad(series.values[static_cast<std::size_t>(i)]);
    std::vector<quad> x = linalg::least_squares_qr(a, rows, cols, b.data());

    FitResult fr;
    fr.coefficients.basis = spec;
    fr.coefficients.coefficients = x;
    fr.residual_max_rel = residual_max_rel_of(a, rows, cols, x, series);
    fr.condition_estimate = 1.0;  // not tracked on the QR path
    fr.refined = false;
    fr.least_squares = true;
    return fr;
}

Reconstruction reconstruct(const FitResult& fr, const DomainMap& map, double year_or_x,
                           EvalPoint mode) {
    if (!std::isfinite(year_or_x)) throw domain_error("reconstruct: point must be finite");
    quad x = (mode == EvalPoint::year) ? map.to_unit_q(quad(year_or_x)) : quad(year_or_x);
    Reconstruction r;
    r.value = to_double(evaluate(fr.coefficients, x));
    r.extrapolated = (x < quad(0)) || (x > quad(1));
    return r;
}

std::vector<FitResult> fit_all(const std::vector<TimeSeries>& dataset, const BasisSpec& spec,
                               const DomainMap& map) {
    std::vector<FitResult> out;
    out.reserve(dataset.size());
    for (const TimeSeries& ts : dataset) {
        if (!dataset.empty() && ts.years != dataset.front().years)
            throw domain_error("fit_all: series '" + ts.label + "' is on a different year grid");
        try {
            out.push_back(fit_series(ts, spec, map));
        } catch (const numerical_error& e) {
            throw numerical_error("series '" + ts.label + "': " + e.what(), e.condition_estimate());
        } catch (const domain_error& e) {
            throw domain_error("series '" + ts.label + "': " + e.what());
        }
    }
    return out;
}

} // namespace taucov
