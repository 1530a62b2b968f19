#include "taucov/basis.hpp"

#include <cmath>
#include <cstddef>
#include <string>

namespace taucov {

namespace {

void check_spec(const BasisSpec& spec) {
    if (spec.degree < 0) throw domain_error("basis degree must be non-negative");
}

} // namespace

CoefficientVector make_coefficients(BasisFamily family, const std::vector<double>& values) {
    if (values.empty()) throw domain_error("coefficient vector must not be empty");
    CoefficientVector cv;
    cv.basis = BasisSpec{family, static_cast<int>(values.size()) - 1};
    cv.coefficients.assign(values.begin(), values.end());
    validate(cv);
    return cv;
}

void validate(const CoefficientVector& cv) {
    check_spec(cv.basis);
    if (cv.coefficients.size() != static_cast<std::size_t>(cv.basis.dimension()))
        throw domain_error("coefficient count does not match basis dimension");
    for (const quad& c : cv.coefficients)
        if (!qfinite(c)) throw domain_error("coefficient vector contains a non-finite entry");
}

double basis_eval(const BasisSpec& spec, int k, double x) {
    check_spec(spec);
    if (k < 0 || k > spec.degree)
        throw domain_error("basis index " + std::to_string(k) + " out of range 0.." +
                           std::to_string(spec.degree));
    if (!std::isfinite(x)) throw domain_error("basis_eval: x must be finite");
    std::vector<double> vals(static_cast<std::size_t>(k) + 1);
    detail::eval_all(spec.family, k, x, vals.data());
    return vals[static_cast<std::size_t>(k)];
}

std::vector<double> basis_eval_all(const BasisSpec& spec, double x) {
    check_spec(spec);
    if (!std::isfinite(x)) throw domain_error("basis_eval_all: x must be finite");
    std::vector<double> vals(static_cast<std::size_t>(spec.dimension()));
    detail::eval_all(spec.family, spec.degree, x, vals.data());
    return vals;
}

std::vector<quad> basis_eval_all_q(const BasisSpec& spec, quad x) {
    check_spec(spec);
    std::vector<quad> vals(static_cast<std::size_t>(spec.dimension()));
    detail::eval_all(spec.family, spec.degree, x, vals.data());
    return vals;
}

quad evaluate(const CoefficientVector& cv, quad x) {
    validate(cv);
    std::vector<quad> vals = basis_eval_all_q(cv.basis, x);
    quad sum = 0;
    for (std::size_t k = 0; k < vals.size(); ++k) sum += cv.coefficients[k] * vals[k];
    return sum;
}

const std::vector<std::vector<long long>>& hermite_monomial_rows(int max_degree) {
    // Row k holds the monomial coefficients of H_k. Built by the same
    // three-term recurrence in integer arithmetic; values stay well inside
    // 64 bits through degree 20.
    constexpr int table_degree = 20;
    static const std::vector<std::vector<long long>> rows = [] {
        std::vector<std::vector<long long>> r;
        r.push_back({1});
        r.push_back({0, 2});
        for (int k = 2; k <= table_degree; ++k) {
            std::vector<long long> next(static_cast<std::size_t>(k) + 1, 0);
            const auto& hk = r[static_cast<std::size_t>(k) - 1];
            const auto& hkm1 = r[static_cast<std::size_t>(k) - 2];
            for (std::size_t i = 0; i < hk.size(); ++i) next[i + 1] += 2 * hk[i];
            for (std::size_t i = 0; i < hkm1.size(); ++i) next[i] -= 2 * (k - 1) * hkm1[i];
            r.push_back(std::move(next));
        }
        return r;
    }();
    if (max_degree > table_degree)
        throw domain_error("hermite change of basis limited to degree 20");
    return rows;
}

CoefficientVector to_monomial(const CoefficientVector& cv) {
    validate(cv);
    if (cv.basis.family != BasisFamily::hermite_physicists)
        throw domain_error("to_monomial expects Hermite coefficients");

    const int n = cv.basis.degree;
    const auto& rows = hermite_monomial_rows(n);
    CoefficientVector out;
    out.basis = BasisSpec{BasisFamily::monomial, n};
    out.coefficients.assign(static_cast<std::size_t>(n) + 1, quad(0));
    for (int k = 0; k <= n; ++k) {
        const quad bk = cv.coefficients[static_cast<std::size_t>(k)];
        if (bk == quad(0)) continue;
        const auto& row = rows[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < row.size(); ++i)
            if (row[i] != 0) out.coefficients[i] += bk * quad(row[i]);
    }
    return out;
}

CoefficientVector to_hermite(const CoefficientVector& cv) {
    validate(cv);
    if (cv.basis.family != BasisFamily::monomial)
        throw domain_error("to_hermite expects monomial coefficients");

    // c_i = sum_{k >= i} M[i][k] A_k with M[i][k] the x^i coefficient of H_k;
    // M is triangular with diagonal 2^k, so back-substitution is exact apart
    // from the final divisions.
    const int n = cv.basis.degree;
    const auto& rows = hermite_monomial_rows(n);
    CoefficientVector out;
    out.basis = BasisSpec{BasisFamily::hermite_physicists, n};
    out.coefficients.assign(static_cast<std::size_t>(n) + 1, quad(0));
    for (int i = n; i >= 0; --i) {
        quad s = cv.coefficients[static_cast<std::size_t>(i)];
        for (int k = i + 2; k <= n; k += 2)
            s -= quad(rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]) *
                 out.coefficients[static_cast<std::size_t>(k)];
        out.coefficients[static_cast<std::size_t>(i)] =
            s / quad(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
    }
    return out;
}

namespace {

// Composite Simpson over [a, b] with n panels (n even).
template <class F>
double simpson(const F& f, double a, double b, long n) {
    const double h = (b - a) / static_cast<double>(n);
    double odd = 0.0, even = 0.0;
    for (long i = 1; i < n; i += 2) odd += f(a + h * static_cast<double>(i));
    for (long i = 2; i < n; i += 2) even += f(a + h * static_cast<double>(i));
    return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

template <class F>
double integrate_adaptive(const F& f, double a, double b) {
    constexpr double tol = 1e-10;   // absolute, between successive halvings
    constexpr long max_panels = 1L << 20;
    double prev = simpson(f, a, b, 8);
    for (long n = 16; n <= max_panels; n *= 2) {
        double cur = simpson(f, a, b, n);
        if (std::abs(cur - prev) < tol) return cur;
        prev = cur;
    }
    throw numerical_error("gram_matrix: quadrature did not converge to 1e-10");
}

} // namespace

Matrix gram_matrix(const BasisSpec& spec, Interval interval, GramWeight weight) {
    check_spec(spec);
    double a = interval.a, b = interval.b;
    if (weight == GramWeight::gauss) {
        a = -12.0;
        b = 12.0;
    } else if (!(a < b)) {
        throw domain_error("gram_matrix: interval requires a < b");
    }

    const int dim = spec.dimension();
    Matrix g(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    std::vector<double> vals(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
        for (int k = j; k < dim; ++k) {
            auto f = [&](double x) {
                detail::eval_all(spec.family, spec.degree, x, vals.data());
                double w = (weight == GramWeight::gauss) ? std::exp(-x * x) : 1.0;
                return vals[static_cast<std::size_t>(j)] * vals[static_cast<std::size_t>(k)] * w;
            };
            double v = integrate_adaptive(f, a, b);
            g(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = v;
            g(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) = v;
        }
    }
    return g;
}

} // namespace taucov
