#ifndef HRBOUND_FORMAT_HPP
#define HRBOUND_FORMAT_HPP

#include <charconv>
#include <cmath>
#include <string>

namespace hrb {

/// Shortest decimal text that parses back to exactly `v`.
inline std::string shortest_repr(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

}  // namespace hrb

#endif
