#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "slitlab/distribution.hpp"
#include "slitlab/errors.hpp"

// Inverse problem: recover slit parameters from sampled P(k).
//
// The residual in d is highly multimodal (every fringe period is a local
// minimum), so a deterministic 41x41 grid over [0.1, 20]^2 seeds a
// coordinate descent with shrinking-bracket parabolic line searches.

namespace slitlab {

enum class FitKind { Single, DoubleFinite };

struct FitResult {
    double a = 0.0;
    double d = 0.0;
    double residual = 0.0;  // sum of squared residuals at the optimum
    bool converged = false;
    int iterations = 0;
};

namespace detail {

template <class F>
double minimize_1d(F&& f, double x, double step, double lo, double hi) {
    for (int iter = 0; iter < 80; ++iter) {
        const double x0 = std::max(lo, x - step);
        const double x1 = x;
        const double x2 = std::min(hi, x + step);
        const double f0 = f(x0);
        const double f1 = f(x1);
        const double f2 = f(x2);
        double xv;
        const double d01 = x1 > x0 ? (f1 - f0) / (x1 - x0) : 0.0;
        const double d12 = x2 > x1 ? (f2 - f1) / (x2 - x1) : 0.0;
        const double c2 = x2 > x0 ? (d12 - d01) / (x2 - x0) : 0.0;
        if (c2 > 0.0) {
            xv = std::clamp(0.5 * (x0 + x1) - d01 / (2.0 * c2), x0, x2);
        } else {
            xv = f0 < f1 ? (f0 < f2 ? x0 : x2) : (f1 < f2 ? x1 : x2);
        }
        if (f(xv) <= f1) x = xv;
        step *= 0.5;
        if (step < 1e-10 || x2 - x0 < 1e-14) break;
    }
    return x;
}

}  // namespace detail

inline FitResult fit_slit_parameters(std::span<const double> k,
                                     std::span<const double> p, FitKind kind) {
    if (k.size() != p.size() || k.empty()) {
        throw Error("fit needs equally sized, non-empty k and P samples");
    }
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (!std::isfinite(k[i]) || !std::isfinite(p[i])) {
            throw NonFiniteError("fit samples must be finite");
        }
    }

    const auto sse_single = [&](double a) {
        double acc = 0.0;
        for (std::size_t i = 0; i < k.size(); ++i) {
            const double r = closed_form_single(k[i], a) - p[i];
            acc += r * r;
        }
        return acc;
    };
    const auto sse_double = [&](double a, double d) {
        double acc = 0.0;
        for (std::size_t i = 0; i < k.size(); ++i) {
            const double r = closed_form_double_finite(k[i], a, d) - p[i];
            acc += r * r;
        }
        return acc;
    };

    constexpr int grid_n = 41;
    constexpr double grid_lo = 0.1;
    constexpr double grid_hi = 20.0;
    constexpr double grid_step = (grid_hi - grid_lo) / (grid_n - 1);
    const auto grid_value = [&](int i) { return grid_lo + i * grid_step; };

    FitResult result;
    if (kind == FitKind::Single) {
        double best_a = grid_lo;
        double best = sse_single(best_a);
        for (int i = 1; i < grid_n; ++i) {
            const double f = sse_single(grid_value(i));
            if (f < best) {
                best = f;
                best_a = grid_value(i);
            }
        }
        result.a = detail::minimize_1d(sse_single, best_a, grid_step, 0.05, 25.0);
        result.d = 0.0;
        result.residual = sse_single(result.a);
        result.iterations = 1;
        result.converged = std::isfinite(result.residual);
        return result;
    }

    double a = grid_lo, d = grid_lo;
    double best = sse_double(a, d);
    for (int i = 0; i < grid_n; ++i) {
        for (int j = 0; j < grid_n; ++j) {
            const double f = sse_double(grid_value(i), grid_value(j));
            if (f < best) {
                best = f;
                a = grid_value(i);
                d = grid_value(j);
            }
        }
    }

    double step_a = grid_step, step_d = grid_step;
    int outer = 0;
    bool converged = false;
    for (; outer < 60; ++outer) {
        const double a_new = detail::minimize_1d(
            [&](double aa) { return sse_double(aa, d); }, a, step_a, 0.05, 25.0);
        const double d_new = detail::minimize_1d(
            [&](double dd) { return sse_double(a_new, dd); }, d, step_d, 0.05, 25.0);
        const double move = std::abs(a_new - a) + std::abs(d_new - d);
        a = a_new;
        d = d_new;
        step_a = std::max(1e-3 * std::abs(a), 0.05);
        step_d = std::max(1e-3 * std::abs(d), 0.05);
        if (move < 1e-10) {
            converged = true;
            break;
        }
    }
    result.a = a;
    result.d = d;
    result.residual = sse_double(a, d);
    result.iterations = outer + 1;
    result.converged = converged && std::isfinite(result.residual);
    return result;
}

// Convenience overload for sampled angular distributions (plain P, no
// Jacobian, normalized form).
inline FitResult fit_slit_parameters(const Distribution& dist, FitKind kind) {
    validate_distribution(dist);
    if (dist.jacobian_applied || dist.paper_literal) {
        throw Error("fit expects plain normalized P samples");
    }
    std::vector<double> k;
    k.reserve(dist.abscissa.size());
    if (dist.variable == AbscissaKind::Theta) {
        const double p = 2.0 * std::numbers::pi / dist.wavelength;
        for (double theta : dist.abscissa) k.push_back(p * std::sin(theta));
    } else {
        k = dist.abscissa;
    }
    return fit_slit_parameters(k, dist.values, kind);
}

}  // namespace slitlab
