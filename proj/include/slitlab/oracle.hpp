#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <span>
#include <vector>

#include "slitlab/distribution.hpp"
#include "slitlab/errors.hpp"
#include "slitlab/slit_system.hpp"

// Independent numerical verification of the closed-form amplitudes:
// per-slit Gauss-Legendre quadrature of the Fourier integral, an
// independently written phase sum for narrow systems, and a Simpson
// normalization check with a rigorous tail bound.
//
// Nothing here calls into the amplitude module's helpers; that separation
// is what makes the comparison count as verification.

namespace slitlab {

struct GaussLegendreRule {
    std::vector<double> node;    // ascending, on [-1, 1]
    std::vector<double> weight;
};

// Nodes by Newton iteration on P_n; rules are memoized (thread-safe).
inline const GaussLegendreRule& gauss_legendre(int n) {
    if (n < 1) {
        throw TooFewNodesError("Gauss-Legendre rule needs at least 1 node");
    }
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[n];
    if (!slot) {
        auto rule = std::make_unique<GaussLegendreRule>();
        rule->node.resize(n);
        rule->weight.resize(n);
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            double deriv = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0, p1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    const double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
                }
                deriv = n * (x * p0 - p1) / (x * x - 1.0);
                const double dx = p0 / deriv;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            const double w = 2.0 / ((1.0 - x * x) * deriv * deriv);
            rule->node[i] = -x;
            rule->node[n - 1 - i] = x;
            rule->weight[i] = w;
            rule->weight[n - 1 - i] = w;
        }
        slot = std::move(rule);
    }
    return *slot;
}

// (1/sqrt(2*pi)) integral of e^{-iky} c_j/sqrt(a_j) over each slit opening,
// by Gauss-Legendre per slit. The node count grows with |k| a so that at
// least 8 nodes cover each oscillation period; quadrature error stays
// below ~1e-12 for the artifact's k range.
inline std::complex<double> quadrature_amplitude(const SlitSystem& sys, double k,
                                                 int nodes_per_slit) {
    if (sys.kind() != SlitKind::Finite) {
        throw WrongKindError("quadrature oracle needs a finite-slit system");
    }
    if (nodes_per_slit < 8) {
        throw TooFewNodesError("need at least 8 nodes per slit");
    }
    if (!std::isfinite(k)) {
        throw NonFiniteError("k is not finite");
    }
    const double inv_s2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    const auto& slits = sys.slits();
    const auto& c = sys.coefficients();
    long double re = 0.0L, im = 0.0L;
    for (std::size_t j = 0; j < slits.size(); ++j) {
        const double a = slits[j].width;
        const int n = std::max(
            nodes_per_slit,
            static_cast<int>(std::ceil(4.0 * a * std::abs(k) / std::numbers::pi)) + 8);
        const GaussLegendreRule& rule = gauss_legendre(n);
        long double sum_re = 0.0L, sum_im = 0.0L;
        for (int i = 0; i < n; ++i) {
            const double y = slits[j].center + 0.5 * a * rule.node[i];
            const double phase = -k * y;
            sum_re += rule.weight[i] * std::cos(phase);
            sum_im += rule.weight[i] * std::sin(phase);
        }
        const long double scale = c[j] / std::sqrt(a) * inv_s2pi * 0.5 * a;
        re += scale * sum_re;
        im += scale * sum_im;
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

// Delta sifting makes the narrow-slit Fourier integral exact; this is a
// separate implementation of the phase sum used as the narrow oracle.
inline std::complex<double> narrow_direct_sum(const SlitSystem& sys, double k) {
    if (sys.kind() != SlitKind::Narrow) {
        throw WrongKindError("direct phase sum needs a narrow-slit system");
    }
    if (!std::isfinite(k)) {
        throw NonFiniteError("k is not finite");
    }
    const double inv_s2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    const auto& slits = sys.slits();
    const auto& c = sys.coefficients();
    long double re = 0.0L, im = 0.0L;
    for (std::size_t j = 0; j < slits.size(); ++j) {
        const double phase = -k * slits[j].center;
        re += c[j] * std::cos(phase);
        im += c[j] * std::sin(phase);
    }
    return {static_cast<double>(re * inv_s2pi), static_cast<double>(im * inv_s2pi)};
}

struct NormalizationCheck {
    double value;       // Simpson integral of P over [-k_max, k_max]
    double tail_bound;  // rigorous bound on the mass outside the window
};

// Composite Simpson integral of the probability density plus the analytic
// tail bound sum_j 2|c_j|^2 * 2/(pi a_j k_max) (from sin^2 <= 1); the true
// integral 1 lies within [value, value + tail_bound] up to quadrature error.
inline NormalizationCheck normalization_integral(const SlitSystem& sys,
                                                 double k_max,
                                                 std::int64_t n_panels,
                                                 bool paper_literal = false) {
    if (sys.kind() != SlitKind::Finite) {
        throw WrongKindError("narrow-slit distributions are not normalizable");
    }
    if (!(k_max > 0.0)) {
        throw NonPositiveError("k_max must be > 0");
    }
    if (n_panels < 2 || n_panels % 2 != 0) {
        throw Error("Simpson panel count must be even and >= 2");
    }
    const double h = 2.0 * k_max / static_cast<double>(n_panels);
    long double acc = probability_density(sys, -k_max, paper_literal) +
                      probability_density(sys, k_max, paper_literal);
    for (std::int64_t i = 1; i < n_panels; ++i) {
        const double k = -k_max + static_cast<double>(i) * h;
        acc += (i % 2 == 1 ? 4.0 : 2.0) * probability_density(sys, k, paper_literal);
    }
    double tail = 0.0;
    const auto& slits = sys.slits();
    const auto& c = sys.coefficients();
    for (std::size_t j = 0; j < slits.size(); ++j) {
        tail += 2.0 * c[j] * c[j] * 2.0 / (std::numbers::pi * slits[j].width * k_max);
    }
    if (paper_literal) tail *= 2.0;
    return {static_cast<double>(acc * h / 3.0L), tail};
}

struct VerificationReport {
    std::size_t n_points = 0;
    double max_abs_err = 0.0;
    double max_rel_err = 0.0;  // relative to the largest |reference| value
    double tolerance = 0.0;
    bool pass = false;
    double worst_k = 0.0;
};

// Closed-form |<p_y|psi>|^2 against the kind-appropriate oracle on a grid.
// `corruption` adds a constant bias to the closed form; it exists so the
// failure path can be exercised deliberately.
inline VerificationReport compare(const SlitSystem& sys,
                                  std::span<const double> k_grid,
                                  double tolerance, double corruption = 0.0) {
    if (k_grid.empty()) {
        throw Error("comparison grid must be non-empty");
    }
    VerificationReport report;
    report.n_points = k_grid.size();
    report.tolerance = tolerance;
    report.worst_k = k_grid.front();
    double scale = 0.0;
    for (double k : k_grid) {
        const std::complex<double> ref_amp =
            sys.kind() == SlitKind::Narrow ? narrow_direct_sum(sys, k)
                                           : quadrature_amplitude(sys, k, 16);
        const double ref = std::norm(ref_amp);
        const double test = probability_density(sys, k) + corruption;
        const double err = std::abs(test - ref);
        scale = std::max(scale, std::abs(ref));
        if (err > report.max_abs_err) {
            report.max_abs_err = err;
            report.worst_k = k;
        }
    }
    report.max_rel_err = scale > 0.0 ? report.max_abs_err / scale : report.max_abs_err;
    report.pass = report.max_abs_err <= tolerance || report.max_rel_err <= tolerance;
    return report;
}

}  // namespace slitlab
