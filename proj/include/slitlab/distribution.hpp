#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "slitlab/amplitude.hpp"
#include "slitlab/errors.hpp"
#include "slitlab/slit_system.hpp"

// Momentum-space probability distributions P(k), angular distributions
// P(theta), and the double/single-slit closed forms.

namespace slitlab {

enum class AbscissaKind { Theta, K };

struct Distribution {
    std::vector<double> abscissa;  // theta in [-pi/2, pi/2] (radians) or k
    std::vector<double> values;    // P, non-negative
    AbscissaKind variable = AbscissaKind::Theta;
    bool jacobian_applied = false;
    bool paper_literal = false;
    double wavelength = 1.0;
    std::string system;
};

inline void validate_distribution(const Distribution& dist) {
    if (dist.abscissa.size() != dist.values.size() || dist.abscissa.empty()) {
        throw Error("distribution grid/value size mismatch");
    }
    for (std::size_t i = 0; i < dist.abscissa.size(); ++i) {
        if (!std::isfinite(dist.abscissa[i]) || !std::isfinite(dist.values[i])) {
            throw NonFiniteError("distribution contains non-finite entries");
        }
        if (dist.values[i] < 0.0) {
            throw Error("distribution values must be >= 0");
        }
        if (i > 0 && !(dist.abscissa[i] > dist.abscissa[i - 1])) {
            throw Error("distribution grid must be strictly increasing");
        }
    }
}

// Born rule P = |<p_y|psi>|^2. The paper_literal flag selects a published
// variant of the double finite-slit law that omits the superposition
// normalization 1/sqrt(2), i.e. exactly twice the normalized density; it
// only exists for 2-slit finite systems.
inline double probability_density(const SlitSystem& sys, double k,
                                  bool paper_literal = false) {
    double p = std::norm(momentum_amplitude(sys, k));
    if (paper_literal) {
        if (sys.kind() != SlitKind::Finite || sys.size() != 2) {
            throw PaperLiteralUnsupportedError(
                "paper-literal form exists only for 2-slit finite systems");
        }
        p *= 2.0;
    }
    return p;
}

// (1 + cos(kd)) / (2*pi), the double narrow-slit law.
inline double closed_form_double_narrow(double k, double d) {
    if (!(d > 0.0)) {
        throw NonPositiveError("slit separation d must be > 0");
    }
    return (1.0 + std::cos(k * d)) / (2.0 * std::numbers::pi);
}

// (a/(2*pi)) sinc^2(ak/2), the single finite-slit law; a/(2*pi) at k = 0.
inline double closed_form_single(double k, double a) {
    if (!(a > 0.0)) {
        throw NonPositiveError("slit width a must be > 0");
    }
    const double s = sinc(0.5 * a * k);
    return a / (2.0 * std::numbers::pi) * s * s;
}

// Double finite-slit law, fringe times envelope. Normalized form integrates
// to 1 for disjoint slits (d > a); paper_literal returns twice that.
inline double closed_form_double_finite(double k, double a, double d,
                                        bool paper_literal = false) {
    if (!(a > 0.0)) {
        throw NonPositiveError("slit width a must be > 0");
    }
    const double s = sinc(0.5 * a * k);
    const double value =
        (1.0 + std::cos(k * d)) * a / (2.0 * std::numbers::pi) * s * s;
    return paper_literal ? 2.0 * value : value;
}

struct ReducedVariables {
    double phi;    // p d sin(theta) / hbar = 2*pi d sin(theta) / lambda
    double alpha;  // a p sin(theta) / (2 hbar) = pi a sin(theta) / lambda
};

inline ReducedVariables reduced_variables(double theta, double a, double d,
                                          double wavelength) {
    if (!(wavelength > 0.0)) {
        throw NonPositiveError("wavelength must be > 0");
    }
    const double s = std::sin(theta);
    return {2.0 * std::numbers::pi * d * s / wavelength,
            std::numbers::pi * a * s / wavelength};
}

// P(theta) = P(p_y = p sin(theta)) on a uniform theta grid over
// [-pi/2, pi/2]. Odd sample counts put theta = 0 on the grid and make the
// grid exactly antisymmetric. The optional Jacobian p cos(theta) turns the
// result into a true density in theta.
inline Distribution angular_distribution(const SlitSystem& sys, int n_samples,
                                         bool jacobian = false,
                                         bool paper_literal = false) {
    if (n_samples < 3 || n_samples % 2 == 0) {
        throw BadSampleCountError("sample count must be odd and >= 3");
    }
    const int mid = (n_samples - 1) / 2;
    const double h = std::numbers::pi / (n_samples - 1);
    const double p = sys.momentum();

    Distribution dist;
    dist.variable = AbscissaKind::Theta;
    dist.jacobian_applied = jacobian;
    dist.paper_literal = paper_literal;
    dist.wavelength = sys.wavelength();
    dist.system = sys.describe();
    dist.abscissa.resize(n_samples);
    dist.values.resize(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        const double theta = (i - mid) * h;
        double v = probability_density(sys, p * std::sin(theta), paper_literal);
        if (jacobian) v *= p * std::cos(theta);
        dist.abscissa[i] = theta;
        dist.values[i] = v;
    }
    return dist;
}

// Number of interference orders n (|n| <= d/lambda, fringe maxima at
// sin(theta) = n lambda / d) whose closed-form value survives the envelope:
// P(k_n) > threshold * P(0). Orders landing on envelope zeros are the
// "missing" orders of the two-slit pattern. a = 0 means narrow slits.
inline int visible_order_count(double a, double d, double wavelength,
                               double threshold) {
    if (!(d > 0.0) || !(wavelength > 0.0)) {
        throw NonPositiveError("d and wavelength must be > 0");
    }
    if (a < 0.0) {
        throw NonPositiveError("slit width a must be >= 0");
    }
    const auto value = [&](double k) {
        return a > 0.0 ? closed_form_double_finite(k, a, d)
                       : closed_form_double_narrow(k, d);
    };
    const double peak = value(0.0);
    const int n_max = static_cast<int>(std::floor(d / wavelength + 1e-12));
    int count = 0;
    for (int n = -n_max; n <= n_max; ++n) {
        const double k_n = 2.0 * std::numbers::pi * n / d;
        if (value(k_n) > threshold * peak) ++count;
    }
    return count;
}

}  // namespace slitlab
