#include <doctest.h>

#include <random>
#include <vector>

#include "taucov/errors.hpp"
#include "taucov/linalg.hpp"

using namespace taucov;
using namespace taucov::linalg;

namespace {

std::vector<quad> qmat(const std::vector<double>& v) {
    return std::vector<quad>(v.begin(), v.end());
}

} // namespace

TEST_CASE("lu solve: pinned 3x3 system") {
    // A = [[2,1,1],[1,3,2],[1,0,0]], b = [4,5,6] -> x = [6,15,-23]
    std::vector<quad> a = qmat({2, 1, 1, 1, 3, 2, 1, 0, 0});
    std::vector<quad> b = qmat({4, 5, 6});
    LuFactors f = lu_factor(a, 3);
    std::vector<quad> x(3);
    lu_solve(f, b.data(), x.data());
    CHECK(to_double(x[0]) == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(to_double(x[1]) == doctest::Approx(15.0).epsilon(1e-14));
    CHECK(to_double(x[2]) == doctest::Approx(-23.0).epsilon(1e-14));
}

TEST_CASE("lu solve: random systems against residual") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 8;
        std::vector<quad> a(n * n);
        std::vector<quad> b(n);
        for (quad& v : a) v = quad(dist(rng));
        for (quad& v : b) v = quad(dist(rng));
        LuFactors f = lu_factor(a, n);
        std::vector<quad> x = solve_refined(f, a, b.data());
        for (int i = 0; i < n; ++i) {
            quad s = 0;
            for (int j = 0; j < n; ++j) s += a[static_cast<std::size_t>(i) * n + j] * x[j];
            CHECK(to_double(qabs(s - b[i])) <= 1e-25);
        }
    }
}

TEST_CASE("transpose solve") {
    std::vector<quad> a = qmat({2, 1, 0, 1, 3, 1, 0, 1, 4});
    std::vector<quad> b = qmat({1, 2, 3});
    LuFactors f = lu_factor(a, 3);
    std::vector<quad> x(3);
    lu_solve_transpose(f, b.data(), x.data());
    // check A^T x = b
    for (int i = 0; i < 3; ++i) {
        quad s = 0;
        for (int j = 0; j < 3; ++j) s += a[static_cast<std::size_t>(j) * 3 + i] * x[j];
        CHECK(to_double(qabs(s - b[i])) <= 1e-28);
    }
}

TEST_CASE("singular matrix raises numerical_error") {
    std::vector<quad> a = qmat({1, 1, 1, 1});
    CHECK_THROWS_AS(lu_factor(a, 2), numerical_error);
    std::vector<quad> z = qmat({0, 0, 0, 0});
    CHECK_THROWS_AS(lu_factor(z, 2), numerical_error);
}

TEST_CASE("condition estimate") {
    // identity -> cond 1
    std::vector<quad> eye = qmat({1, 0, 0, 0, 1, 0, 0, 0, 1});
    LuFactors f = lu_factor(eye, 3);
    CHECK(condition_estimate_1(f, norm1(eye, 3)) == doctest::Approx(1.0).epsilon(1e-10));

    // diag(1, 1e-6): cond_1 = 1e6
    std::vector<quad> d = qmat({1, 0, 0, 1e-6});
    LuFactors fd = lu_factor(d, 2);
    CHECK(condition_estimate_1(fd, norm1(d, 2)) == doctest::Approx(1e6).epsilon(1e-8));
    CHECK(condition_estimate_1(fd, norm1(d, 2)) >= 1.0);
}

TEST_CASE("least squares: consistent and overdetermined") {
    // exact line through 5 points: rows [1, t], data 3 - 2t
    const int rows = 5, cols = 2;
    std::vector<quad> a(rows * cols);
    std::vector<quad> b(rows);
    for (int i = 0; i < rows; ++i) {
        double t = 0.25 * i;
        a[static_cast<std::size_t>(i) * cols + 0] = 1;
        a[static_cast<std::size_t>(i) * cols + 1] = quad(t);
        b[static_cast<std::size_t>(i)] = quad(3.0 - 2.0 * t);
    }
    std::vector<quad> x = least_squares_qr(a, rows, cols, b.data());
    CHECK(to_double(x[0]) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(to_double(x[1]) == doctest::Approx(-2.0).epsilon(1e-14));

    // known least-squares solution: A = [[1,0],[0,1],[1,1]], b = [1,1,1]
    std::vector<quad> a2 = qmat({1, 0, 0, 1, 1, 1});
    std::vector<quad> b2 = qmat({1, 1, 1});
    std::vector<quad> x2 = least_squares_qr(a2, 3, 2, b2.data());
    CHECK(to_double(x2[0]) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(to_double(x2[1]) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));

    std::vector<quad> rank_def = qmat({1, 0, 1, 0, 1, 0});
    CHECK_THROWS_AS(least_squares_qr(rank_def, 3, 2, b2.data()), numerical_error);
    CHECK_THROWS_AS(least_squares_qr(a2, 1, 2, b2.data()), domain_error);
}
