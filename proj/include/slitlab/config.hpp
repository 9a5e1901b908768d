#pragma once

#include <charconv>
#include <fstream>
#include <filesystem>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "slitlab/errors.hpp"
#include "slitlab/slit_system.hpp"

// Line-oriented run configuration:
//
//   wavelength <float>             optional, default 1.0
//   slit <center> <width> [weight] one or more; width 0 = narrow
//   samples <odd int>              optional, default 2001
//   jacobian on|off                optional, default off
//   paper_literal on|off           optional, default off
//
// '#' starts a comment; tokens are whitespace-separated. Unknown keys and
// repeated scalar keys are rejected.

namespace slitlab {

struct RunConfig {
    SlitSystem system;
    int samples = 2001;
    bool jacobian = false;
    bool paper_literal = false;
};

namespace detail {

inline double parse_number(std::string_view token, int line) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw SyntaxError(line, "expected a number, got '" + std::string(token) + "'");
    }
    return value;
}

inline int parse_int(std::string_view token, int line) {
    int value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw SyntaxError(line, "expected an integer, got '" + std::string(token) + "'");
    }
    return value;
}

inline bool parse_on_off(std::string_view token, int line) {
    if (token == "on") return true;
    if (token == "off") return false;
    throw SyntaxError(line, "expected on|off, got '" + std::string(token) + "'");
}

}  // namespace detail

inline RunConfig parse_config(std::string_view text) {
    std::vector<SlitSpec> specs;
    double wavelength = 1.0;
    int samples = 2001;
    bool jacobian = false;
    bool paper_literal = false;
    bool seen_wavelength = false, seen_samples = false;
    bool seen_jacobian = false, seen_paper_literal = false;

    std::istringstream lines{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(lines, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream words(raw);
        std::vector<std::string> tok;
        for (std::string w; words >> w;) tok.push_back(w);
        if (tok.empty()) continue;

        const std::string& key = tok[0];
        const std::size_t argc = tok.size() - 1;
        if (key == "slit") {
            if (argc < 2 || argc > 3) {
                throw SyntaxError(line_no, "slit takes <center> <width> [weight]");
            }
            SlitSpec spec;
            spec.center = detail::parse_number(tok[1], line_no);
            spec.width = detail::parse_number(tok[2], line_no);
            spec.weight = argc == 3 ? detail::parse_number(tok[3], line_no) : 1.0;
            specs.push_back(spec);
        } else if (key == "wavelength") {
            if (argc != 1) throw SyntaxError(line_no, "wavelength takes one value");
            if (seen_wavelength) throw SyntaxError(line_no, "duplicate wavelength");
            wavelength = detail::parse_number(tok[1], line_no);
            seen_wavelength = true;
        } else if (key == "samples") {
            if (argc != 1) throw SyntaxError(line_no, "samples takes one value");
            if (seen_samples) throw SyntaxError(line_no, "duplicate samples");
            samples = detail::parse_int(tok[1], line_no);
            seen_samples = true;
        } else if (key == "jacobian") {
            if (argc != 1) throw SyntaxError(line_no, "jacobian takes on|off");
            if (seen_jacobian) throw SyntaxError(line_no, "duplicate jacobian");
            jacobian = detail::parse_on_off(tok[1], line_no);
            seen_jacobian = true;
        } else if (key == "paper_literal") {
            if (argc != 1) throw SyntaxError(line_no, "paper_literal takes on|off");
            if (seen_paper_literal) throw SyntaxError(line_no, "duplicate paper_literal");
            paper_literal = detail::parse_on_off(tok[1], line_no);
            seen_paper_literal = true;
        } else {
            throw SyntaxError(line_no, "unknown key '" + key + "'");
        }
    }

    if (samples < 3 || samples % 2 == 0) {
        throw SemanticError("samples must be odd and >= 3");
    }
    try {
        return RunConfig{build_system(std::move(specs), wavelength), samples,
                         jacobian, paper_literal};
    } catch (const SemanticError&) {
        throw;
    } catch (const Error& e) {
        throw SemanticError(std::string("invalid slit system: ") + e.what());
    }
}

inline RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read config file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace slitlab
