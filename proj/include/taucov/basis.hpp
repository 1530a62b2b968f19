#ifndef TAUCOV_BASIS_HPP
#define TAUCOV_BASIS_HPP

#include <vector>

#include "taucov/errors.hpp"
#include "taucov/linalg.hpp"
#include "taucov/quadfloat.hpp"

namespace taucov {

enum class BasisFamily { hermite_physicists, monomial };

/// Identifies a polynomial family and its highest index; the basis has
/// degree + 1 functions, indexed 0..degree.
struct BasisSpec {
    BasisFamily family = BasisFamily::hermite_physicists;
    int degree = 0;

    int dimension() const { return degree + 1; }
    bool operator==(const BasisSpec&) const = default;
};

/// Expansion coefficients c_0..c_n in a given basis.
struct CoefficientVector {
    BasisSpec basis;
    std::vector<quad> coefficients;
};

CoefficientVector make_coefficients(BasisFamily family, const std::vector<double>& values);
void validate(const CoefficientVector& cv);

namespace detail {

/// Shared evaluation recurrence: out[0..degree] filled with
/// H_k(x) (H_0 = 1, H_1 = 2x, H_{k+1} = 2x H_k - 2k H_{k-1}) or x^k.
/// Every public evaluation routine goes through this one path.
template <class T>
void eval_all(BasisFamily family, int degree, T x, T* out) {
    out[0] = T(1);
    if (degree == 0) return;
    if (family == BasisFamily::hermite_physicists) {
        out[1] = T(2) * x;
        for (int k = 1; k < degree; ++k)
            out[k + 1] = T(2) * x * out[k] - T(2 * k) * out[k - 1];
    } else {
        for (int k = 1; k <= degree; ++k) out[k] = out[k - 1] * x;
    }
}

} // namespace detail

/// Value of the k-th basis function at x.
double basis_eval(const BasisSpec& spec, int k, double x);

/// All basis values at x in one recurrence pass; element k equals
/// basis_eval(spec, k, x) bit for bit.
std::vector<double> basis_eval_all(const BasisSpec& spec, double x);

std::vector<quad> basis_eval_all_q(const BasisSpec& spec, quad x);

/// Evaluate an expansion at x in its own basis.
quad evaluate(const CoefficientVector& cv, quad x);

/// Hermite -> monomial coefficients of the identical polynomial.
/// The change-of-basis entries are exact integers.
CoefficientVector to_monomial(const CoefficientVector& cv);

/// Monomial -> Hermite coefficients; inverse of to_monomial, solved from
/// the exact triangular change-of-basis system.
CoefficientVector to_hermite(const CoefficientVector& cv);

/// Monomial coefficients of H_k, exact (integers scaled by powers of 2).
const std::vector<std::vector<long long>>& hermite_monomial_rows(int max_degree);

enum class GramWeight { unit, gauss };

struct Interval {
    double a = 0.0;
    double b = 1.0;
};

/// Pairwise inner products of the basis functions under the given weight,
/// by adaptive composite Simpson quadrature. The gauss weight e^{-x^2}
/// integrates over [-12, 12], where the tail is below double underflow
/// for these integrands; the interval argument applies to unit weight only.
Matrix gram_matrix(const BasisSpec& spec, Interval interval, GramWeight weight);

} // namespace taucov

#endif
