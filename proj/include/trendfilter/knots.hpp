// Knot/sign extraction for r-th order signals and the segment-length
// functionals delta_r, Delta_r used by the adaptive risk machinery.
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "trendfilter/diff.hpp"

namespace trendfilter {

// Knots of order r of a length-n signal: indices j in [2, n-r+1] where
// (D^(r-1) theta)_{j-1} != (D^(r-1) theta)_j, with sign +1 when the
// difference increases. Segment lengths follow the convention
//   n_0 = j_1 + r - 2,  n_i = j_{i+1} - j_i,  n_k = n - r + 2 - j_k,
// which always sum to n. Boundary signs are treated as 0.
struct KnotProfile {
    int r = 1;
    int n = 0;
    std::vector<int> knots;               // strictly increasing, in [2, n-r+1]
    std::vector<int> signs;               // +1 / -1 per knot
    std::vector<long long> seg_lengths;   // k+1 entries, sum to n

    int k() const { return static_cast<int>(knots.size()); }

    // sign of knot i under the convention r_0 = r_{k+1} = 0
    int sign_at(int i) const
    {
        if (i <= 0 || i > k()) return 0;
        return signs[i - 1];
    }
};

// Number of i in {0..k} with r_i != r_{i+1}; the two boundary segments
// always count when k >= 1.
inline int sign_changes(const KnotProfile& p)
{
    int count = 0;
    for (int i = 0; i <= p.k(); ++i)
        if (p.sign_at(i) != p.sign_at(i + 1)) ++count;
    return count;
}

// Build a profile from explicit knot locations and signs (synthetic
// profiles for property sweeps and tuning formulas).
inline KnotProfile make_profile(int n, int r, std::vector<int> knots, std::vector<int> signs)
{
    require_order(n, r);
    if (knots.size() != signs.size())
        throw std::invalid_argument("make_profile: knots/signs size mismatch");
    KnotProfile p;
    p.r = r;
    p.n = n;
    p.knots = std::move(knots);
    p.signs = std::move(signs);
    int k = p.k();
    for (int i = 0; i < k; ++i) {
        if (p.knots[i] < 2 || p.knots[i] > n - r + 1)
            throw std::invalid_argument("make_profile: knot index out of range");
        if (i > 0 && p.knots[i] <= p.knots[i - 1])
            throw std::invalid_argument("make_profile: knots must be strictly increasing");
        if (p.signs[i] != 1 && p.signs[i] != -1)
            throw std::invalid_argument("make_profile: signs must be +-1");
    }
    if (k == 0) {
        p.seg_lengths = {n};
        return p;
    }
    p.seg_lengths.resize(k + 1);
    p.seg_lengths[0] = p.knots[0] + r - 2;
    for (int i = 1; i < k; ++i) p.seg_lengths[i] = p.knots[i] - p.knots[i - 1];
    p.seg_lengths[k] = n - r + 2 - p.knots[k - 1];
    if (p.seg_lengths[0] < 1 || p.seg_lengths[k] < 1)
        throw std::invalid_argument("make_profile: degenerate boundary segment");
    return p;
}

// Extract the knot profile of theta. A jump in D^(r-1) theta counts as
// a knot when it exceeds rel_tol * max(1, ||D^(r-1) theta||_inf);
// rel_tol = 0 recovers the exact definition for synthetic signals.
inline KnotProfile knot_profile(const Signal& theta, int r, double rel_tol = 1e-8)
{
    int n = static_cast<int>(theta.size());
    require_order(n, r);
    std::vector<double> d = (r == 1) ? theta : diff(theta, r - 1);
    double scale = 0.0;
    for (double x : d) scale = std::max(scale, std::fabs(x));
    double threshold = rel_tol * std::max(1.0, scale);

    std::vector<int> knots;
    std::vector<int> signs;
    for (std::size_t m = 0; m + 1 < d.size(); ++m) {
        double jump = d[m + 1] - d[m];
        if (std::fabs(jump) > threshold) {
            knots.push_back(static_cast<int>(m) + 2);  // knot index j = m + 2
            signs.push_back(jump > 0 ? 1 : -1);
        }
    }
    return make_profile(n, r, std::move(knots), std::move(signs));
}

// delta_r(theta) with n_{i*} = min(n_i, n/(k+1)). The k = 0 case is the
// single-term n^{1/2 - r}, not a double count of the lone segment.
inline double delta_r(const KnotProfile& p)
{
    int k = p.k();
    double n = static_cast<double>(p.n);
    if (k == 0) return std::pow(n, 0.5 - p.r);
    double cap = n / (k + 1);
    auto term = [&](int i) {
        double ni = std::min(static_cast<double>(p.seg_lengths[i]), cap);
        return std::pow(ni, 1.0 - 2.0 * p.r);
    };
    double sum = term(0) + term(k);
    for (int i = 1; i <= k - 1; ++i)
        if (p.sign_at(i) != p.sign_at(i + 1)) sum += term(i);
    return std::sqrt(sum);
}

// Delta_r(theta), always >= (k+1)/n.
inline double capital_delta_r(const KnotProfile& p)
{
    int k = p.k();
    double n = static_cast<double>(p.n);
    double d = delta_r(p);
    double lg = std::log(M_E * n / (k + 1));
    double first = (k + 1) / n * lg;
    double second = d * d / n * std::pow(n / (k + 1), 2.0 * p.r - 1.0) * lg;
    double third = std::pow(d / std::sqrt(n), 1.0 / p.r);
    return first + second + third;
}

// Minimum length condition with constant c: n_i >= c n/(k+1) for every
// segment i whose adjacent knot signs differ.
inline bool min_length_ok(const KnotProfile& p, double c)
{
    if (c <= 0.0 || c > 1.0) throw std::invalid_argument("min_length_ok: c must be in (0, 1]");
    int k = p.k();
    double floor_len = c * static_cast<double>(p.n) / (k + 1);
    for (int i = 0; i <= k; ++i)
        if (p.sign_at(i) != p.sign_at(i + 1) && static_cast<double>(p.seg_lengths[i]) < floor_len)
            return false;
    return true;
}

// Upper bound for Delta_r under the minimum length condition:
// (1 + c^{1-2r} + c^{(1-2r)/(2r)}) (k+1)/n log(en/(k+1)).
inline double ghos_bound(const KnotProfile& p, double c)
{
    if (!min_length_ok(p, c))
        throw std::domain_error("ghos_bound: profile violates the minimum length condition");
    double n = static_cast<double>(p.n);
    int k = p.k();
    double e1 = 1.0 - 2.0 * p.r;
    double coef = 1.0 + std::pow(c, e1) + std::pow(c, e1 / (2.0 * p.r));
    return coef * (k + 1) / n * std::log(M_E * n / (k + 1));
}

}  // namespace trendfilter
