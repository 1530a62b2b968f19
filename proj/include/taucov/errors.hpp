#ifndef TAUCOV_ERRORS_HPP
#define TAUCOV_ERRORS_HPP

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace taucov {

/// Violated precondition or contract (bad index, basis mismatch,
/// undefined angle, ...).
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed input data. Coordinates are 1-based; 0 means "not tied to
/// a specific cell".
class data_error : public std::runtime_error {
public:
    data_error(const std::string& msg, std::size_t row = 0, std::size_t col = 0)
        : std::runtime_error(locate(msg, row, col)), row_(row), col_(col) {}

    std::size_t row() const { return row_; }
    std::size_t col() const { return col_; }

private:
    static std::string locate(const std::string& msg, std::size_t row, std::size_t col) {
        if (row == 0 && col == 0) return msg;
        return msg + " (row " + std::to_string(row) + ", column " + std::to_string(col) + ")";
    }

    std::size_t row_;
    std::size_t col_;
};

/// Numerical breakdown: singular factorization, quadrature that will not
/// converge, cosine overshooting its bound.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& msg,
                             double condition_estimate = std::numeric_limits<double>::infinity())
        : std::runtime_error(msg), cond_(condition_estimate) {}

    double condition_estimate() const { return cond_; }

private:
    double cond_;
};

} // namespace taucov

#endif
