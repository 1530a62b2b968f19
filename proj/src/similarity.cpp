#include "taucov/similarity.hpp"

#include <cmath>
#include <string>

namespace taucov {

const char* method_name(Method m) {
    return m == Method::tau_covariance ? "tau" : "pearson";
}

namespace {

void check_pair(const CoefficientVector& a, const CoefficientVector& b) {
    validate(a);
    validate(b);
    if (!(a.basis == b.basis))
        throw domain_error("coefficient vectors use different bases");
}

quad dot_q(const CoefficientVector& a, const CoefficientVector& b, bool k0_included) {
    quad s = 0;
    for (std::size_t k = k0_included ? 0 : 1; k < a.coefficients.size(); ++k)
        s += a.coefficients[k] * b.coefficients[k];
    return s;
}

} // namespace

double dot(const CoefficientVector& a, const CoefficientVector& b, bool k0_included) {
    check_pair(a, b);
    return to_double(dot_q(a, b, k0_included));
}

double tau_covariance(const CoefficientVector& a, const CoefficientVector& b, bool k0_included) {
    check_pair(a, b);
    quad na = dot_q(a, a, k0_included);
    quad nb = dot_q(b, b, k0_included);
    if (na == quad(0) || nb == quad(0))
        throw domain_error("tau_covariance: undefined angle (zero vector in active index range)");
    double t = to_double(dot_q(a, b, k0_included) / (qsqrt(na) * qsqrt(nb)));
    if (t > 1.0 || t < -1.0) {
        if (std::abs(t) - 1.0 >= 1e-12)
            throw numerical_error("tau_covariance: cosine overshoots [-1, 1] by more than 1e-12");
        t = (t > 0.0) ? 1.0 : -1.0;
    }
    return t;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw domain_error("pearson: length mismatch");
    const std::size_t n = x.size();
    if (n < 2) throw domain_error("pearson: needs at least 2 points");

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw domain_error("pearson: zero variance");
    double r = sxy / (std::sqrt(sxx) * std::sqrt(syy));
    if (r > 1.0) r = 1.0;
    if (r < -1.0) r = -1.0;
    return r;
}

namespace {

template <class PairFn>
SimilarityMatrix build_pairwise(const std::vector<std::string>& labels, Method method,
                                bool k0_included, const PairFn& fn) {
    const std::size_t n = labels.size();
    SimilarityMatrix m;
    m.labels = labels;
    m.method = method;
    m.k0_included = k0_included;
    m.entries = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.entries(i, i) = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            double v = fn(i, j);
            m.entries(i, j) = v;
            m.entries(j, i) = v;
        }
    }
    return m;
}

} // namespace

SimilarityMatrix tau_matrix_from_coefficients(const std::vector<std::string>& labels,
                                              const std::vector<CoefficientVector>& coeffs,
                                              bool k0_included) {
    if (labels.size() != coeffs.size())
        throw domain_error("tau_matrix_from_coefficients: labels/coefficients size mismatch");
    if (labels.size() < 2) throw domain_error("similarity matrix needs at least 2 series");
    return build_pairwise(labels, Method::tau_covariance, k0_included, [&](std::size_t i, std::size_t j) {
        return tau_covariance(coeffs[i], coeffs[j], k0_included);
    });
}

SimilarityMatrix pearson_matrix(const std::vector<TimeSeries>& dataset) {
    if (dataset.size() < 2) throw domain_error("similarity matrix needs at least 2 series");
    std::vector<std::string> labels;
    for (const TimeSeries& ts : dataset) labels.push_back(ts.label);
    return build_pairwise(labels, Method::pearson, true, [&](std::size_t i, std::size_t j) {
        try {
            return pearson(dataset[i].values, dataset[j].values);
        } catch (const domain_error& e) {
            throw domain_error("pearson('" + labels[i] + "', '" + labels[j] + "'): " + e.what());
        }
    });
}

SimilarityMatrix similarity_matrix(const std::vector<TimeSeries>& dataset, Method method,
                                   const BasisSpec& spec, const DomainMap& map,
                                   bool k0_included) {
    if (dataset.size() < 2) throw domain_error("similarity matrix needs at least 2 series");
    for (const TimeSeries& ts : dataset)
        if (ts.years != dataset.front().years)
            throw domain_error("series '" + ts.label + "' is on a different year grid");

    if (method == Method::pearson) return pearson_matrix(dataset);

    std::vector<FitResult> fits = fit_all(dataset, spec, map);
    std::vector<std::string> labels;
    std::vector<CoefficientVector> coeffs;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        labels.push_back(dataset[i].label);
        coeffs.push_back(fits[i].coefficients);
    }
    return tau_matrix_from_coefficients(labels, coeffs, k0_included);
}

} // namespace taucov
