#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "slitlab/distribution.hpp"
#include "slitlab/errors.hpp"

// Extraction of interference extrema from a sampled angular distribution.
//
// Extrema are located on the grid, then refined in the sin(theta) abscissa:
// a 3-point parabola seeds the estimate and, away from the domain edges, a
// 5-point interpolating quartic polishes it. The polish matters: intensity
// zeros sit on a 1/k^2 envelope whose cubic term biases a plain parabola by
// several grid steps' worth of the figure tolerances.

namespace slitlab {

struct FringeExtremum {
    double theta;
    double sin_theta;
    double value;
};

struct FringeReport {
    std::vector<FringeExtremum> maxima;
    std::vector<FringeExtremum> minima;
    double visibility = 0.0;  // (Pmax - Pmin)/(Pmax + Pmin), central fringe
};

namespace detail {

// Vertex of the parabola through three (not necessarily equispaced) points,
// clamped into [lo, hi] before the value is evaluated. Fails (returns
// false) when the curvature has the wrong sign or vanishes.
inline bool parabola_vertex(const double* x, const double* y, bool maximize,
                            double lo, double hi, double& xv, double& yv) {
    const double d01 = (y[1] - y[0]) / (x[1] - x[0]);
    const double d12 = (y[2] - y[1]) / (x[2] - x[1]);
    const double c2 = (d12 - d01) / (x[2] - x[0]);
    if (maximize ? !(c2 < 0.0) : !(c2 > 0.0)) return false;
    xv = std::clamp(0.5 * (x[0] + x[1]) - d01 / (2.0 * c2), lo, hi);
    yv = y[0] + d01 * (xv - x[0]) + c2 * (xv - x[0]) * (xv - x[1]);
    return true;
}

// Interpolating quartic through five points; Newton iteration on its
// derivative starting from `seed`. The abscissa is rescaled to [-1/2, 1/2]
// to keep the monomial coefficients well conditioned.
inline bool quartic_polish(const double* xs, const double* ys, bool maximize,
                           double seed, double& xv, double& yv) {
    const double xc = xs[2];
    const double w = xs[4] - xs[0];
    if (!(w > 0.0)) return false;

    double u[5];
    double c[5];
    for (int i = 0; i < 5; ++i) {
        u[i] = (xs[i] - xc) / w;
        c[i] = ys[i];
    }
    for (int j = 1; j < 5; ++j) {
        for (int i = 4; i >= j; --i) {
            c[i] = (c[i] - c[i - 1]) / (u[i] - u[i - j]);
        }
    }

    // Newton form -> monomials in u.
    double m[5] = {c[4], 0.0, 0.0, 0.0, 0.0};
    int deg = 0;
    for (int j = 3; j >= 0; --j) {
        double next[5] = {0.0, 0.0, 0.0, 0.0, 0.0};
        for (int t = 0; t <= deg; ++t) {
            next[t + 1] += m[t];
            next[t] -= u[j] * m[t];
        }
        next[0] += c[j];
        ++deg;
        for (int t = 0; t < 5; ++t) m[t] = next[t];
    }

    const double d1[4] = {m[1], 2.0 * m[2], 3.0 * m[3], 4.0 * m[4]};
    const double d2[3] = {d1[1], 2.0 * d1[2], 3.0 * d1[3]};
    const auto eval = [](const double* p, int n, double t) {
        double acc = p[n - 1];
        for (int i = n - 2; i >= 0; --i) acc = acc * t + p[i];
        return acc;
    };

    double t = (seed - xc) / w;
    double curv = 0.0;
    for (int iter = 0; iter < 50; ++iter) {
        const double g = eval(d1, 4, t);
        curv = eval(d2, 3, t);
        if (curv == 0.0) return false;
        const double step = g / curv;
        t -= step;
        if (std::abs(step) < 1e-15) break;
    }
    if (t < u[0] || t > u[4]) return false;
    if (maximize ? !(curv < 0.0) : !(curv > 0.0)) return false;
    xv = xc + w * t;
    yv = eval(m, 5, t);
    return true;
}

}  // namespace detail

// Locate and refine the extrema of an angular distribution. Maxima below
// threshold * (grid maximum) are discarded; alternation of maxima and
// minima is restored afterwards by keeping the more extreme of any
// same-type neighbours. Visibility comes from the maximum nearest
// theta = 0 and its adjacent minima.
inline FringeReport find_fringes(const Distribution& dist, double threshold) {
    validate_distribution(dist);
    if (dist.variable != AbscissaKind::Theta) {
        throw Error("fringe analysis expects an angular distribution");
    }
    const std::size_t n = dist.values.size();
    if (n < 5) {
        throw TooCoarseError("fringe analysis needs at least 5 samples");
    }

    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = std::sin(dist.abscissa[i]);
    const std::vector<double>& v = dist.values;

    struct Hit {
        std::size_t idx;
        bool is_max;
    };
    std::vector<Hit> hits;
    if (v[0] > v[1]) hits.push_back({0, true});
    else if (v[0] < v[1]) hits.push_back({0, false});
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (v[i] > v[i - 1] && v[i] > v[i + 1]) hits.push_back({i, true});
        else if (v[i] < v[i - 1] && v[i] < v[i + 1]) hits.push_back({i, false});
    }
    if (v[n - 1] > v[n - 2]) hits.push_back({n - 1, true});
    else if (v[n - 1] < v[n - 2]) hits.push_back({n - 1, false});

    for (std::size_t i = 1; i < hits.size(); ++i) {
        if (hits[i].idx - hits[i - 1].idx < 3) {
            throw TooCoarseError("adjacent extrema closer than 3 grid points");
        }
    }

    const auto refine = [&](const Hit& hit) -> FringeExtremum {
        const std::size_t i = hit.idx;
        const std::size_t j = std::clamp<std::size_t>(i, 1, n - 2);
        double xv = s[i];
        double yv = v[i];
        detail::parabola_vertex(&s[j - 1], &v[j - 1], hit.is_max, s.front(),
                                s.back(), xv, yv);
        if (i >= 2 && i + 2 < n) {
            double qx = 0.0, qy = 0.0;
            if (detail::quartic_polish(&s[i - 2], &v[i - 2], hit.is_max, xv, qx, qy)) {
                xv = qx;
                yv = qy;
            }
        }
        if (!hit.is_max) yv = std::max(yv, 0.0);
        const double theta = std::asin(std::clamp(xv, -1.0, 1.0));
        return {theta, xv, yv};
    };

    double grid_max = 0.0;
    for (double x : v) grid_max = std::max(grid_max, x);
    const double cut = threshold * grid_max;

    std::vector<std::pair<FringeExtremum, bool>> kept;
    for (const Hit& hit : hits) {
        FringeExtremum e = refine(hit);
        if (hit.is_max && e.value < cut) continue;
        if (!kept.empty() && kept.back().second == hit.is_max) {
            const bool better = hit.is_max ? e.value > kept.back().first.value
                                           : e.value < kept.back().first.value;
            if (better) kept.back().first = e;
            continue;
        }
        kept.emplace_back(e, hit.is_max);
    }

    FringeReport report;
    for (const auto& [e, is_max] : kept) {
        (is_max ? report.maxima : report.minima).push_back(e);
    }

    if (!report.maxima.empty()) {
        const FringeExtremum* central = &report.maxima.front();
        for (const FringeExtremum& e : report.maxima) {
            if (std::abs(e.theta) < std::abs(central->theta)) central = &e;
        }
        const FringeExtremum* left = nullptr;
        const FringeExtremum* right = nullptr;
        for (const FringeExtremum& e : report.minima) {
            if (e.sin_theta < central->sin_theta &&
                (!left || e.sin_theta > left->sin_theta)) {
                left = &e;
            }
            if (e.sin_theta > central->sin_theta &&
                (!right || e.sin_theta < right->sin_theta)) {
                right = &e;
            }
        }
        if (left || right) {
            double pmin = 0.0;
            if (left && right) pmin = 0.5 * (left->value + right->value);
            else pmin = left ? left->value : right->value;
            const double pmax = central->value;
            if (pmax + pmin > 0.0) {
                report.visibility =
                    std::clamp((pmax - pmin) / (pmax + pmin), 0.0, 1.0);
            }
        }
    }
    return report;
}

}  // namespace slitlab
