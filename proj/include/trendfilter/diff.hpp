// Discrete difference operators, exact binomial machinery and the
// reconstruction formula expressing a vector in terms of its r-th
// differences and leading difference values.
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace trendfilter {

using Signal = std::vector<double>;

// C(n, k) in exact 64-bit integer arithmetic. Returns 0 for k < 0 or
// k > n. Throws std::overflow_error instead of silently losing
// precision; the identity checks in verify.hpp rely on exactness.
inline std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // multiply first, divide by i afterwards; the running value
        // result*(n-k+i)/i is always an integer
        std::int64_t num = n - k + i;
        std::int64_t g = result;
        if (g > std::numeric_limits<std::int64_t>::max() / num)
            throw std::overflow_error("binomial: 64-bit overflow at C(" +
                                      std::to_string(n) + "," + std::to_string(k) + ")");
        result = g * num / i;
    }
    return result;
}

inline void validate_signal(const Signal& theta)
{
    if (theta.empty()) throw std::invalid_argument("signal must have length >= 1");
    for (double x : theta)
        if (!std::isfinite(x)) throw std::invalid_argument("signal entries must be finite");
}

inline void require_order(int n, int r)
{
    if (r < 1) throw std::invalid_argument("difference order must be >= 1");
    if (n <= r)
        throw std::invalid_argument("signal length " + std::to_string(n) +
                                    " too short for order " + std::to_string(r));
}

// First differences (theta_2 - theta_1, ..., theta_n - theta_{n-1}).
inline std::vector<double> diff1(const std::vector<double>& theta)
{
    std::vector<double> d(theta.size() - 1);
    for (std::size_t i = 0; i + 1 < theta.size(); ++i) d[i] = theta[i + 1] - theta[i];
    return d;
}

// D^(r) theta, the r-fold first difference; length n - r. O(rn).
inline std::vector<double> diff(const Signal& theta, int r)
{
    validate_signal(theta);
    require_order(static_cast<int>(theta.size()), r);
    std::vector<double> d = diff1(theta);
    for (int pass = 1; pass < r; ++pass) d = diff1(d);
    return d;
}

// Inverse of diff: the unique theta with D^(r) theta = s and
// (D^(j-1) theta)_1 = heads[j-1] for j = 1..r. Computed by r cascaded
// prefix sums; agrees with the closed binomial form
//   theta_i = sum_j C(i-j-1, r-1) s_j + sum_j C(i-1, j-1) heads_j.
inline Signal reconstruct(const std::vector<double>& s, const std::vector<double>& heads,
                          int n, int r)
{
    require_order(n, r);
    if (static_cast<int>(heads.size()) != r)
        throw std::invalid_argument("reconstruct: heads must have length r");
    if (static_cast<int>(s.size()) != n - r)
        throw std::invalid_argument("reconstruct: s must have length n - r");
    std::vector<double> w = s;
    for (int j = r; j >= 1; --j) {
        // w currently holds D^(j) theta; integrate once starting from heads[j-1]
        std::vector<double> next(w.size() + 1);
        next[0] = heads[j - 1];
        for (std::size_t i = 0; i < w.size(); ++i) next[i + 1] = next[i] + w[i];
        w = std::move(next);
    }
    return w;
}

// Leading difference values (theta_1, (D theta)_1, ..., (D^(r-1) theta)_1).
inline std::vector<double> difference_heads(const Signal& theta, int r)
{
    validate_signal(theta);
    require_order(static_cast<int>(theta.size()), r);
    std::vector<double> heads(r);
    std::vector<double> w = theta;
    for (int j = 0; j < r; ++j) {
        heads[j] = w[0];
        if (j + 1 < r) w = diff1(w);
    }
    return heads;
}

// V^(r)(theta) = n^{r-1} ||D^(r) theta||_1.
inline double variation(const Signal& theta, int r)
{
    std::vector<double> d = diff(theta, r);
    double l1 = 0.0;
    for (double x : d) l1 += std::fabs(x);
    return std::pow(static_cast<double>(theta.size()), r - 1) * l1;
}

// k_r(theta): number of entries of D^(r) theta exceeding tol in magnitude.
inline int sparsity(const Signal& theta, int r, double tol = 0.0)
{
    if (tol < 0.0) throw std::invalid_argument("sparsity: tol must be >= 0");
    std::vector<double> d = diff(theta, r);
    int count = 0;
    for (double x : d)
        if (std::fabs(x) > tol) ++count;
    return count;
}

}  // namespace trendfilter
