#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>

#include "slitlab/errors.hpp"
#include "slitlab/slit_system.hpp"

// Closed-form momentum-space probability amplitudes <p_y|psi>.

namespace slitlab {

inline const double inv_sqrt_two_pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

// sin(x)/x with the removable singularity handled: below |x| = 1e-4 the
// Taylor series 1 - x^2/6 + x^4/120 is exact to better than 1e-17 relative.
inline double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

// Conjugated momentum eigenfunction e^{-iky}/sqrt(2*pi); modulus 1/sqrt(2*pi).
inline std::complex<double> phase_factor(double y, double k) {
    if (!std::isfinite(y) || !std::isfinite(k)) {
        throw NonFiniteError("phase_factor requires finite inputs");
    }
    const double phase = -k * y;
    return {std::cos(phase) * inv_sqrt_two_pi, std::sin(phase) * inv_sqrt_two_pi};
}

// Sum of delta-slit phase terms: sum_j c_j e^{-ik y_j} / sqrt(2*pi).
inline std::complex<double> narrow_amplitude(const SlitSystem& sys, double k) {
    if (sys.kind() != SlitKind::Narrow) {
        throw WrongKindError("narrow_amplitude needs a narrow-slit system");
    }
    std::complex<double> amp{0.0, 0.0};
    const auto& slits = sys.slits();
    const auto& c = sys.coefficients();
    for (std::size_t j = 0; j < slits.size(); ++j) {
        amp += c[j] * phase_factor(slits[j].center, k);
    }
    return amp;
}

// Rect-slit amplitude: sum_j c_j e^{-ik yc_j} sqrt(a_j/(2*pi)) sinc(a_j k / 2).
inline std::complex<double> finite_amplitude(const SlitSystem& sys, double k) {
    if (sys.kind() != SlitKind::Finite) {
        throw WrongKindError("finite_amplitude needs a finite-slit system");
    }
    std::complex<double> amp{0.0, 0.0};
    const auto& slits = sys.slits();
    const auto& c = sys.coefficients();
    for (std::size_t j = 0; j < slits.size(); ++j) {
        const double a = slits[j].width;
        const double envelope = std::sqrt(a) * sinc(0.5 * a * k);
        amp += c[j] * envelope * phase_factor(slits[j].center, k);
    }
    return amp;
}

inline std::complex<double> momentum_amplitude(const SlitSystem& sys, double k) {
    return sys.kind() == SlitKind::Narrow ? narrow_amplitude(sys, k)
                                          : finite_amplitude(sys, k);
}

}  // namespace slitlab
