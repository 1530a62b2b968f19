#include "taucov/linalg.hpp"

#include <algorithm>
#include <cstdlib>

#include "taucov/errors.hpp"

namespace taucov::linalg {

LuFactors lu_factor(std::vector<quad> a, int n) {
    if (n <= 0 || a.size() != static_cast<std::size_t>(n) * n)
        throw domain_error("lu_factor: bad dimensions");

    quad scale = 0;
    for (const quad& v : a)
        if (qabs(v) > scale) scale = qabs(v);
    // anything below ~2^-110 of the largest entry is noise at quad precision
    const quad tiny = scale * quad(1e-33);

    LuFactors f;
    f.n = n;
    f.perm.resize(n);
    for (int i = 0; i < n; ++i) f.perm[i] = i;

    for (int col = 0; col < n; ++col) {
        int piv = col;
        quad best = qabs(a[static_cast<std::size_t>(col) * n + col]);
        for (int r = col + 1; r < n; ++r) {
            quad cand = qabs(a[static_cast<std::size_t>(r) * n + col]);
            if (cand > best) {
                best = cand;
                piv = r;
            }
        }
        if (!(best > tiny))
            throw numerical_error("lu_factor: numerically singular matrix (zero pivot in column " +
                                  std::to_string(col) + ")");
        if (piv != col) {
            for (int c = 0; c < n; ++c)
                std::swap(a[static_cast<std::size_t>(piv) * n + c], a[static_cast<std::size_t>(col) * n + c]);
            std::swap(f.perm[piv], f.perm[col]);
        }
        const quad pivot = a[static_cast<std::size_t>(col) * n + col];
        for (int r = col + 1; r < n; ++r) {
            quad m = a[static_cast<std::size_t>(r) * n + col] / pivot;
            a[static_cast<std::size_t>(r) * n + col] = m;
            if (m == quad(0)) continue;
            for (int c = col + 1; c < n; ++c)
                a[static_cast<std::size_t>(r) * n + c] -= m * a[static_cast<std::size_t>(col) * n + c];
        }
    }
    f.lu = std::move(a);
    return f;
}

void lu_solve(const LuFactors& f, const quad* b, quad* x) {
    const int n = f.n;
    std::vector<quad> y(n);
    for (int i = 0; i < n; ++i) {
        quad s = b[f.perm[i]];
        for (int j = 0; j < i; ++j) s -= f.lu[static_cast<std::size_t>(i) * n + j] * y[j];
        y[i] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
        quad s = y[i];
        for (int j = i + 1; j < n; ++j) s -= f.lu[static_cast<std::size_t>(i) * n + j] * x[j];
        x[i] = s / f.lu[static_cast<std::size_t>(i) * n + i];
    }
}

void lu_solve_transpose(const LuFactors& f, const quad* b, quad* x) {
    const int n = f.n;
    // A^T = (P^T L U)^T = U^T L^T P, so forward-solve U^T, back-solve L^T,
    // then undo the row permutation.
    std::vector<quad> y(n);
    for (int i = 0; i < n; ++i) {
        quad s = b[i];
        for (int j = 0; j < i; ++j) s -= f.lu[static_cast<std::size_t>(j) * n + i] * y[j];
        y[i] = s / f.lu[static_cast<std::size_t>(i) * n + i];
    }
    std::vector<quad> z(n);
    for (int i = n - 1; i >= 0; --i) {
        quad s = y[i];
        for (int j = i + 1; j < n; ++j) s -= f.lu[static_cast<std::size_t>(j) * n + i] * z[j];
        z[i] = s;
    }
    for (int i = 0; i < n; ++i) x[f.perm[i]] = z[i];
}

std::vector<quad> solve_refined(const LuFactors& f, const std::vector<quad>& a, const quad* b) {
    const int n = f.n;
    std::vector<quad> x(n);
    lu_solve(f, b, x.data());

    std::vector<quad> r(n), d(n);
    for (int i = 0; i < n; ++i) {
        quad s = b[i];
        for (int j = 0; j < n; ++j) s -= a[static_cast<std::size_t>(i) * n + j] * x[j];
        r[i] = s;
    }
    lu_solve(f, r.data(), d.data());
    for (int i = 0; i < n; ++i) x[i] += d[i];
    return x;
}

double norm1(const std::vector<quad>& a, int n) {
    quad best = 0;
    for (int j = 0; j < n; ++j) {
        quad s = 0;
        for (int i = 0; i < n; ++i) s += qabs(a[static_cast<std::size_t>(i) * n + j]);
        if (s > best) best = s;
    }
    return to_double(best);
}

double condition_estimate_1(const LuFactors& f, double a_norm1) {
    const int n = f.n;
    std::vector<quad> x(n, quad(1) / quad(n)), y(n), xi(n), z(n);
    double est = 0.0;
    int last_j = -1;
    for (int iter = 0; iter < 5; ++iter) {
        lu_solve(f, x.data(), y.data());
        quad ynorm = 0;
        for (int i = 0; i < n; ++i) ynorm += qabs(y[i]);
        est = to_double(ynorm);

        for (int i = 0; i < n; ++i) xi[i] = (y[i] >= 0) ? quad(1) : quad(-1);
        lu_solve_transpose(f, xi.data(), z.data());

        int j = 0;
        quad zmax = qabs(z[0]);
        for (int i = 1; i < n; ++i)
            if (qabs(z[i]) > zmax) {
                zmax = qabs(z[i]);
                j = i;
            }
        quad ztx = 0;
        for (int i = 0; i < n; ++i) ztx += z[i] * x[i];
        if (!(zmax > qabs(ztx)) || j == last_j) break;
        last_j = j;
        std::fill(x.begin(), x.end(), quad(0));
        x[j] = 1;
    }
    return std::max(1.0, est * a_norm1);
}

std::vector<quad> least_squares_qr(std::vector<quad> a, int rows, int cols, const quad* b) {
    if (rows < cols || cols <= 0 || a.size() != static_cast<std::size_t>(rows) * cols)
        throw domain_error("least_squares_qr: bad dimensions");

    std::vector<quad> rhs(b, b + rows);
    std::vector<quad> v(rows);
    for (int k = 0; k < cols; ++k) {
        quad norm2 = 0;
        for (int i = k; i < rows; ++i) {
            v[i] = a[static_cast<std::size_t>(i) * cols + k];
            norm2 += v[i] * v[i];
        }
        quad alpha = qsqrt(norm2);
        if (alpha == quad(0))
            throw numerical_error("least_squares_qr: rank-deficient column " + std::to_string(k));
        if (v[k] > 0) alpha = -alpha;
        v[k] -= alpha;
        quad vtv = 0;
        for (int i = k; i < rows; ++i) vtv += v[i] * v[i];
        if (vtv == quad(0))
            throw numerical_error("least_squares_qr: rank-deficient column " + std::to_string(k));

        a[static_cast<std::size_t>(k) * cols + k] = alpha;
        for (int c = k + 1; c < cols; ++c) {
            quad dotp = 0;
            for (int i = k; i < rows; ++i) dotp += v[i] * a[static_cast<std::size_t>(i) * cols + c];
            quad coef = 2 * dotp / vtv;
            for (int i = k; i < rows; ++i) a[static_cast<std::size_t>(i) * cols + c] -= coef * v[i];
        }
        quad dotb = 0;
        for (int i = k; i < rows; ++i) dotb += v[i] * rhs[i];
        quad coefb = 2 * dotb / vtv;
        for (int i = k; i < rows; ++i) rhs[i] -= coefb * v[i];
    }

    std::vector<quad> x(cols);
    for (int i = cols - 1; i >= 0; --i) {
        quad s = rhs[i];
        for (int j = i + 1; j < cols; ++j) s -= a[static_cast<std::size_t>(i) * cols + j] * x[j];
        x[i] = s / a[static_cast<std::size_t>(i) * cols + i];
    }
    return x;
}

} // namespace taucov::linalg
