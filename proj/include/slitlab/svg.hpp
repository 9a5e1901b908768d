#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "slitlab/csv.hpp"
#include "slitlab/distribution.hpp"
#include "slitlab/errors.hpp"

namespace slitlab {

// Static SVG plot of a peak-normalized angular distribution: one polyline
// over sin(theta) in [-1, 1], ticks at -1, -0.5, 0, 0.5, 1.
inline std::string render_distribution_svg(const Distribution& dist) {
    validate_distribution(dist);
    if (dist.variable != AbscissaKind::Theta) {
        throw Error("SVG output expects an angular distribution");
    }

    constexpr double left = 60.0, right = 780.0, top = 20.0, bottom = 450.0;
    const auto x_of = [&](double s) {
        return left + (s + 1.0) * 0.5 * (right - left);
    };
    const auto y_of = [&](double v) {
        return bottom - v * (bottom - top);
    };

    double peak = 0.0;
    for (double v : dist.values) peak = std::max(peak, v);
    const double scale = peak > 0.0 ? peak : 1.0;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 500\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";

    // axes
    svg += "<line x1=\"60\" y1=\"450\" x2=\"780\" y2=\"450\" stroke=\"#222\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"60\" y1=\"20\" x2=\"60\" y2=\"450\" stroke=\"#222\" stroke-width=\"1\"/>\n";

    const double s_ticks[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
    const char* s_labels[] = {"-1", "-0.5", "0", "0.5", "1"};
    for (int i = 0; i < 5; ++i) {
        const std::string x = format_double(x_of(s_ticks[i]));
        svg += "<line x1=\"" + x + "\" y1=\"450\" x2=\"" + x +
               "\" y2=\"456\" stroke=\"#222\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + x +
               "\" y=\"472\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"14\">" +
               s_labels[i] + "</text>\n";
    }
    const double v_ticks[] = {0.0, 0.5, 1.0};
    const char* v_labels[] = {"0", "0.5", "1"};
    for (int i = 0; i < 3; ++i) {
        const std::string y = format_double(y_of(v_ticks[i]));
        svg += "<line x1=\"54\" y1=\"" + y + "\" x2=\"60\" y2=\"" + y +
               "\" stroke=\"#222\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"48\" y=\"" + y +
               "\" text-anchor=\"end\" dominant-baseline=\"middle\" "
               "font-family=\"sans-serif\" font-size=\"14\">" +
               v_labels[i] + "</text>\n";
    }
    svg += "<text x=\"420\" y=\"494\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"15\">sin &#x3b8;</text>\n";
    svg += "<text x=\"16\" y=\"235\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"15\" "
           "transform=\"rotate(-90 16 235)\">P / P&#x2098;&#x2090;&#x2093;</text>\n";

    svg += "<polyline fill=\"none\" stroke=\"#1f6feb\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < dist.abscissa.size(); ++i) {
        if (i > 0) svg += ' ';
        svg += format_double(x_of(std::sin(dist.abscissa[i])));
        svg += ',';
        svg += format_double(y_of(dist.values[i] / scale));
    }
    svg += "\"/>\n</svg>\n";
    return svg;
}

}  // namespace slitlab
