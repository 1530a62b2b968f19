#ifndef TAUCOV_LINALG_HPP
#define TAUCOV_LINALG_HPP

#include <cstddef>
#include <vector>

#include "taucov/quadfloat.hpp"

namespace taucov {

/// Small dense row-major matrix of doubles.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    bool square() const { return rows == cols; }
};

namespace linalg {

/// Row-pivoted LU factorization of an n-by-n quad matrix.
struct LuFactors {
    int n = 0;
    std::vector<quad> lu;   // combined L (unit diagonal) and U, row-major
    std::vector<int> perm;  // row permutation applied to the input
};

/// Throws numerical_error when a pivot falls below the singularity
/// threshold relative to the matrix scale.
LuFactors lu_factor(std::vector<quad> a, int n);

void lu_solve(const LuFactors& f, const quad* b, quad* x);
void lu_solve_transpose(const LuFactors& f, const quad* b, quad* x);

/// Solve with one iterative-refinement pass (residual recomputed against
/// the unfactored matrix).
std::vector<quad> solve_refined(const LuFactors& f, const std::vector<quad>& a, const quad* b);

double norm1(const std::vector<quad>& a, int n);

/// Hager-style 1-norm condition estimate reusing the factors;
/// never reported below 1.
double condition_estimate_1(const LuFactors& f, double a_norm1);

/// Householder QR least squares for rows >= cols; returns the cols-long
/// solution of min ||a x - b||_2.
std::vector<quad> least_squares_qr(std::vector<quad> a, int rows, int cols, const quad* b);

} // namespace linalg
} // namespace taucov

#endif
