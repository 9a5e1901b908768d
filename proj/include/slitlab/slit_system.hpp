#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "slitlab/errors.hpp"

// Slit-system geometry and the prepared position-space state.
//
// Units: hbar = 1 and lengths are measured in units of the deBroglie
// wavelength lambda, so the forward momentum is p = 2*pi/lambda and the
// transverse wavenumber k = p_y/hbar carries units 1/lambda.

namespace slitlab {

struct SlitSpec {
    double center = 0.0;  // slit midpoint (units of lambda)
    double width = 0.0;   // opening a; 0 means an ideal narrow slit
    double weight = 1.0;  // relative amplitude weight, > 0
};

enum class SlitKind { Narrow, Finite };

class SlitSystem {
public:
    SlitSystem(std::vector<SlitSpec> specs, double wavelength) {
        if (specs.empty()) {
            throw EmptySystemError("slit system needs at least one slit");
        }
        if (!std::isfinite(wavelength)) {
            throw NonFiniteError("wavelength is not finite");
        }
        if (wavelength <= 0.0) {
            throw NonPositiveError("wavelength must be > 0");
        }
        for (const SlitSpec& s : specs) {
            if (!std::isfinite(s.center) || !std::isfinite(s.width) || !std::isfinite(s.weight)) {
                throw NonFiniteError("slit parameters must be finite");
            }
            if (s.width < 0.0) {
                throw NonPositiveError("slit width must be >= 0");
            }
            if (s.weight <= 0.0) {
                throw NonPositiveError("slit weight must be > 0");
            }
        }

        const bool first_narrow = specs.front().width == 0.0;
        for (const SlitSpec& s : specs) {
            if ((s.width == 0.0) != first_narrow) {
                throw MixedKindsError(
                    "narrow and finite slits cannot be mixed in one system");
            }
        }
        kind_ = first_narrow ? SlitKind::Narrow : SlitKind::Finite;

        // Canonical order makes downstream evaluation independent of the
        // order the slits were specified in (bit-for-bit).
        std::sort(specs.begin(), specs.end(), [](const SlitSpec& a, const SlitSpec& b) {
            if (a.center != b.center) return a.center < b.center;
            if (a.width != b.width) return a.width < b.width;
            return a.weight < b.weight;
        });

        if (kind_ == SlitKind::Finite) {
            for (std::size_t i = 0; i + 1 < specs.size(); ++i) {
                const double right = specs[i].center + 0.5 * specs[i].width;
                const double left = specs[i + 1].center - 0.5 * specs[i + 1].width;
                if (right > left) {
                    throw OverlappingSlitsError("finite slit openings overlap");
                }
            }
        }

        double sumsq = 0.0;
        for (const SlitSpec& s : specs) sumsq += s.weight * s.weight;
        const double norm = std::sqrt(sumsq);
        coeffs_.reserve(specs.size());
        for (const SlitSpec& s : specs) coeffs_.push_back(s.weight / norm);

        slits_ = std::move(specs);
        wavelength_ = wavelength;
    }

    SlitKind kind() const noexcept { return kind_; }
    double wavelength() const noexcept { return wavelength_; }

    // Forward momentum p = 2*pi/lambda.
    double momentum() const noexcept { return 2.0 * std::numbers::pi / wavelength_; }

    const std::vector<SlitSpec>& slits() const noexcept { return slits_; }

    // Normalized superposition coefficients, sum |c_j|^2 = 1.
    const std::vector<double>& coefficients() const noexcept { return coeffs_; }

    std::size_t size() const noexcept { return slits_.size(); }

    std::string describe() const {
        std::ostringstream os;
        os << (kind_ == SlitKind::Narrow ? "narrow" : "finite") << " slits:";
        for (const SlitSpec& s : slits_) {
            os << " [center=" << s.center << " width=" << s.width
               << " weight=" << s.weight << "]";
        }
        os << " lambda=" << wavelength_;
        return os.str();
    }

private:
    std::vector<SlitSpec> slits_;
    std::vector<double> coeffs_;
    double wavelength_ = 1.0;
    SlitKind kind_ = SlitKind::Narrow;
};

inline SlitSystem build_system(std::vector<SlitSpec> specs, double wavelength = 1.0) {
    return SlitSystem(std::move(specs), wavelength);
}

// |psi(y)|^2 for finite systems: sum of |c_j|^2 / a_j over the slits whose
// opening contains y (closed intervals; the boundary is measure zero).
inline double position_density(const SlitSystem& sys, double y) {
    if (sys.kind() != SlitKind::Finite) {
        throw NarrowKindUnsupportedError(
            "position density of a narrow (delta) state is distributional");
    }
    if (!std::isfinite(y)) {
        throw NonFiniteError("y is not finite");
    }
    double density = 0.0;
    const auto& slits = sys.slits();
    const auto& c = sys.coefficients();
    for (std::size_t j = 0; j < slits.size(); ++j) {
        const double half = 0.5 * slits[j].width;
        if (y >= slits[j].center - half && y <= slits[j].center + half) {
            density += c[j] * c[j] / slits[j].width;
        }
    }
    return density;
}

// The four reference configurations reproduced by the CLI: double narrow
// with d = 4, single finite with a = 4, and double finite with a = 1 and
// a = 2 at d = 4. Equal weights, lambda = 1.
enum class Figure { fig2, fig3, fig4, fig5 };

inline SlitSystem canonical_system(Figure f) {
    switch (f) {
        case Figure::fig2:
            return build_system({{-2.0, 0.0, 1.0}, {2.0, 0.0, 1.0}});
        case Figure::fig3:
            return build_system({{0.0, 4.0, 1.0}});
        case Figure::fig4:
            return build_system({{-2.0, 1.0, 1.0}, {2.0, 1.0, 1.0}});
        case Figure::fig5:
            return build_system({{-2.0, 2.0, 1.0}, {2.0, 2.0, 1.0}});
    }
    throw Error("unknown canonical figure");
}

}  // namespace slitlab
