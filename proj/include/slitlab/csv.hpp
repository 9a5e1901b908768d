#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "slitlab/distribution.hpp"
#include "slitlab/errors.hpp"

namespace slitlab {

// Shortest decimal representation that round-trips to the same double.
inline std::string format_double(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

inline std::string csv_header() { return "theta_rad,sin_theta,k,P"; }

// Rows in increasing theta: theta_rad, sin_theta, k = p sin(theta), P.
inline std::string write_distribution_csv(const Distribution& dist) {
    validate_distribution(dist);
    if (dist.variable != AbscissaKind::Theta) {
        throw Error("CSV output expects an angular distribution");
    }
    const double p = 2.0 * std::numbers::pi / dist.wavelength;
    std::string out = csv_header();
    out += '\n';
    for (std::size_t i = 0; i < dist.abscissa.size(); ++i) {
        const double theta = dist.abscissa[i];
        const double s = std::sin(theta);
        out += format_double(theta);
        out += ',';
        out += format_double(s);
        out += ',';
        out += format_double(p * s);
        out += ',';
        out += format_double(dist.values[i]);
        out += '\n';
    }
    return out;
}

struct CsvSamples {
    std::vector<double> theta;
    std::vector<double> sin_theta;
    std::vector<double> k;
    std::vector<double> p;
};

inline CsvSamples read_distribution_csv(std::string_view text) {
    CsvSamples samples;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = eol + 1;
        ++line_no;
        if (line_no == 1) {
            if (line != csv_header()) {
                throw SyntaxError(line_no, "bad CSV header, expected '" + csv_header() + "'");
            }
            continue;
        }
        if (line.empty()) continue;
        double fields[4];
        std::size_t field = 0;
        std::size_t start = 0;
        while (field < 4) {
            std::size_t comma = line.find(',', start);
            if (comma == std::string_view::npos) comma = line.size();
            const std::string_view token = line.substr(start, comma - start);
            const auto [ptr, ec] =
                std::from_chars(token.data(), token.data() + token.size(), fields[field]);
            if (ec != std::errc{} || ptr != token.data() + token.size()) {
                throw SyntaxError(line_no, "bad CSV number '" + std::string(token) + "'");
            }
            ++field;
            if (comma == line.size()) break;
            start = comma + 1;
        }
        if (field != 4) {
            throw SyntaxError(line_no, "expected 4 CSV fields");
        }
        samples.theta.push_back(fields[0]);
        samples.sin_theta.push_back(fields[1]);
        samples.k.push_back(fields[2]);
        samples.p.push_back(fields[3]);
    }
    if (samples.k.empty()) {
        throw SyntaxError(line_no, "CSV has no data rows");
    }
    return samples;
}

inline CsvSamples load_distribution_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read CSV file: " + path.string());
    }
    std::string text{std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>()};
    return read_distribution_csv(text);
}

// Single-writer atomic file write: temp file in the target directory, then
// rename over the destination.
inline void atomic_write_file(const std::filesystem::path& path,
                              std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open for writing: " + tmp.string());
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code ignore;
            std::filesystem::remove(tmp, ignore);
            throw IoError("write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignore;
        std::filesystem::remove(tmp, ignore);
        throw IoError("rename failed for " + path.string() + ": " + ec.message());
    }
}

}  // namespace slitlab
