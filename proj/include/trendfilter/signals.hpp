// Synthetic signal generation: the builtin test functions and generic
// piecewise polynomials, sampled on either the i/n grid or n equally
// spaced points with endpoints 0 and 1.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "trendfilter/diff.hpp"

namespace trendfilter {

using json = nlohmann::json;

enum class Grid {
    OverN,      // x_i = i/n, i = 1..n
    Linspace01  // x_i = (i-1)/(n-1), endpoints 0 and 1
};

struct SignalSpec {
    enum class Kind { PiecewisePoly, Builtin };
    enum class Builtin { F1, F2, F3, Vio1, Vio2, SimpoStep };

    Kind kind = Kind::Builtin;
    Builtin builtin = Builtin::F1;
    // piecewise polynomial: pieces.size() == breakpoints.size() + 1,
    // piece p applies on (b_{p-1}, b_p] (first piece includes 0);
    // coefficients are in the monomial basis of x
    std::vector<double> breakpoints;
    std::vector<std::vector<double>> pieces;
    Grid grid = Grid::Linspace01;

    static SignalSpec builtin_spec(Builtin b)
    {
        SignalSpec s;
        s.kind = Kind::Builtin;
        s.builtin = b;
        // function-type builtins default to the 0..1 grid of Section-4
        // style experiments; index-defined builtins ignore the grid
        s.grid = Grid::Linspace01;
        return s;
    }

    static SignalSpec piecewise(std::vector<double> brk, std::vector<std::vector<double>> pc,
                                Grid g = Grid::OverN)
    {
        SignalSpec s;
        s.kind = Kind::PiecewisePoly;
        s.breakpoints = std::move(brk);
        s.pieces = std::move(pc);
        s.grid = g;
        s.validate();
        return s;
    }

    void validate() const
    {
        if (kind != Kind::PiecewisePoly) return;
        if (pieces.size() != breakpoints.size() + 1)
            throw std::invalid_argument("SignalSpec: need breakpoints.size()+1 pieces");
        for (std::size_t i = 0; i < breakpoints.size(); ++i) {
            if (breakpoints[i] <= 0.0 || breakpoints[i] >= 1.0)
                throw std::invalid_argument("SignalSpec: breakpoints must lie inside (0,1)");
            if (i > 0 && breakpoints[i] <= breakpoints[i - 1])
                throw std::invalid_argument("SignalSpec: breakpoints must be strictly increasing");
        }
        for (const auto& p : pieces)
            if (p.empty()) throw std::invalid_argument("SignalSpec: empty polynomial piece");
    }
};

namespace builtin_fn {

inline double f1(double x)
{
    if (x > 0.2 && x <= 0.4) return 2.0;
    if (x > 0.4 && x <= 0.6) return 4.0;
    if (x > 0.6 && x <= 0.8) return 1.0;
    if (x > 0.8 && x <= 1.0) return 4.0;
    return 0.0;
}

inline double f2(double x)
{
    return -44.0 * std::max(x - 0.25, 0.0) + 48.0 * std::max(x - 0.5, 0.0) -
           56.0 * std::max(x - 0.75, 0.0) + 28.0 * x;
}

inline double f3(double x)
{
    auto in = [x](double a, double b) { return x > a && x <= b; };
    return 14.77 * in(0.10, 0.13) - 3.69 * in(0.13, 0.15) + 7.39 * in(0.15, 0.23) -
           7.39 * in(0.23, 0.25) + 11.08 * in(0.25, 0.40) - 4.43 * in(0.40, 0.44) +
           3.32 * in(0.44, 0.65) + 19.21 * in(0.65, 0.76) + 7.76 * in(0.76, 0.78) +
           15.51 * in(0.78, 0.81);
}

}  // namespace builtin_fn

inline std::vector<double> sample_grid(Grid g, int n)
{
    std::vector<double> x(n);
    if (g == Grid::OverN) {
        for (int i = 0; i < n; ++i) x[i] = static_cast<double>(i + 1) / n;
    } else {
        if (n == 1) {
            x[0] = 0.0;
        } else {
            for (int i = 0; i < n; ++i) x[i] = static_cast<double>(i) / (n - 1);
        }
    }
    return x;
}

inline Signal sample_signal(const SignalSpec& spec, int n)
{
    if (n < 1) throw std::invalid_argument("sample_signal: n must be >= 1");
    Signal theta(n, 0.0);

    if (spec.kind == SignalSpec::Kind::Builtin) {
        switch (spec.builtin) {
            case SignalSpec::Builtin::Vio1:
                theta.assign(n, 0.0);
                theta[n - 1] = 5.0;
                return theta;
            case SignalSpec::Builtin::Vio2: {
                theta.assign(n, 5.0);
                for (int i = 0; i < n / 2; ++i) theta[i] = 0.0;
                return theta;
            }
            case SignalSpec::Builtin::SimpoStep: {
                // jump at j = ceil(n/2): theta_{j-1} = 0, theta_j = 1
                int j = (n + 1) / 2;
                theta.assign(n, 1.0);
                for (int i = 0; i < j - 1; ++i) theta[i] = 0.0;
                return theta;
            }
            default:
                break;
        }
        std::vector<double> x = sample_grid(spec.grid, n);
        for (int i = 0; i < n; ++i) {
            switch (spec.builtin) {
                case SignalSpec::Builtin::F1: theta[i] = builtin_fn::f1(x[i]); break;
                case SignalSpec::Builtin::F2: theta[i] = builtin_fn::f2(x[i]); break;
                case SignalSpec::Builtin::F3: theta[i] = builtin_fn::f3(x[i]); break;
                default: break;
            }
        }
        return theta;
    }

    spec.validate();
    std::vector<double> x = sample_grid(spec.grid, n);
    for (int i = 0; i < n; ++i) {
        std::size_t p = 0;
        while (p < spec.breakpoints.size() && x[i] > spec.breakpoints[p]) ++p;
        double acc = 0.0;
        const auto& c = spec.pieces[p];
        for (std::size_t j = c.size(); j-- > 0;) acc = acc * x[i] + c[j];
        theta[i] = acc;
    }
    return theta;
}

inline std::string to_string(Grid g) { return g == Grid::OverN ? "over_n" : "linspace"; }

inline Grid grid_from_string(const std::string& s)
{
    if (s == "over_n") return Grid::OverN;
    if (s == "linspace") return Grid::Linspace01;
    throw std::invalid_argument("unknown grid '" + s + "'");
}

inline std::string to_string(SignalSpec::Builtin b)
{
    switch (b) {
        case SignalSpec::Builtin::F1: return "f1";
        case SignalSpec::Builtin::F2: return "f2";
        case SignalSpec::Builtin::F3: return "f3";
        case SignalSpec::Builtin::Vio1: return "vio1";
        case SignalSpec::Builtin::Vio2: return "vio2";
        case SignalSpec::Builtin::SimpoStep: return "simpo-step";
    }
    return "f1";
}

inline SignalSpec::Builtin builtin_from_string(const std::string& s)
{
    if (s == "f1") return SignalSpec::Builtin::F1;
    if (s == "f2") return SignalSpec::Builtin::F2;
    if (s == "f3") return SignalSpec::Builtin::F3;
    if (s == "vio1") return SignalSpec::Builtin::Vio1;
    if (s == "vio2") return SignalSpec::Builtin::Vio2;
    if (s == "simpo-step") return SignalSpec::Builtin::SimpoStep;
    throw std::invalid_argument("unknown builtin signal '" + s + "'");
}

inline json to_json(const SignalSpec& spec)
{
    json j;
    if (spec.kind == SignalSpec::Kind::Builtin) {
        j["kind"] = "builtin";
        j["builtin"] = to_string(spec.builtin);
    } else {
        j["kind"] = "piecewise-poly";
        j["breakpoints"] = spec.breakpoints;
        j["pieces"] = spec.pieces;
    }
    j["grid"] = to_string(spec.grid);
    return j;
}

inline SignalSpec signal_spec_from_json(const json& j)
{
    SignalSpec spec;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "builtin") {
        spec = SignalSpec::builtin_spec(builtin_from_string(j.at("builtin").get<std::string>()));
    } else if (kind == "piecewise-poly") {
        spec.kind = SignalSpec::Kind::PiecewisePoly;
        spec.breakpoints = j.at("breakpoints").get<std::vector<double>>();
        spec.pieces = j.at("pieces").get<std::vector<std::vector<double>>>();
        spec.grid = Grid::OverN;
    } else {
        throw std::invalid_argument("unknown signal kind '" + kind + "'");
    }
    if (j.contains("grid")) spec.grid = grid_from_string(j.at("grid").get<std::string>());
    spec.validate();
    return spec;
}

}  // namespace trendfilter
