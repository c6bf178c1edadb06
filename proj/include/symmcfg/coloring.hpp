#pragma once

// Total colorings of an integer window [lo, hi] and their text format:
//   line 1: "lo hi r"
//   line 2: one base-36 digit per element, color of lo first.

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "symmcfg/error.hpp"

namespace symmcfg {

struct Coloring {
    long long lo = 1;
    long long hi = 1;
    int r = 1;
    std::vector<std::uint8_t> colors;  // colors[i] = color of lo + i

    long long size() const { return hi - lo + 1; }

    bool contains(long long v) const { return v >= lo && v <= hi; }

    int color_of(long long v) const {
        if (!contains(v)) throw SymmError(errc::bad_argument, "value outside the window");
        return colors[static_cast<std::size_t>(v - lo)];
    }
};

inline char color_digit(int c) {
    if (c < 0 || c >= 36) throw SymmError(errc::bad_argument, "colors must be < 36 for text format");
    return static_cast<char>(c < 10 ? '0' + c : 'a' + (c - 10));
}

inline int digit_color(char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'z') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'Z') return ch - 'A' + 10;
    throw SymmError(errc::bad_argument, std::string("bad color digit '") + ch + "'");
}

inline std::string color_digits(const Coloring& c) {
    std::string s;
    s.reserve(c.colors.size());
    for (std::uint8_t col : c.colors) s.push_back(color_digit(col));
    return s;
}

inline std::string format_coloring(const Coloring& c) {
    std::ostringstream os;
    os << c.lo << ' ' << c.hi << ' ' << c.r << '\n' << color_digits(c) << '\n';
    return os.str();
}

inline Coloring parse_coloring(const std::string& text) {
    std::istringstream is(text);
    Coloring c;
    if (!(is >> c.lo >> c.hi >> c.r)) throw SymmError(errc::bad_argument, "bad coloring header");
    if (c.hi < c.lo) throw SymmError(errc::bad_argument, "empty window");
    if (c.r < 1 || c.r > 36) throw SymmError(errc::bad_argument, "color count must be in [1,36]");
    std::string digits;
    if (!(is >> digits)) throw SymmError(errc::bad_argument, "missing color digits");
    if (static_cast<long long>(digits.size()) != c.size())
        throw SymmError(errc::bad_argument, "expected " + std::to_string(c.size()) +
                                                " color digits, got " + std::to_string(digits.size()));
    c.colors.reserve(digits.size());
    for (char ch : digits) {
        int col = digit_color(ch);
        if (col >= c.r) throw SymmError(errc::bad_argument, "color digit out of range");
        c.colors.push_back(static_cast<std::uint8_t>(col));
    }
    return c;
}

} // namespace symmcfg
