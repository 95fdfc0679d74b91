#ifndef HRBOUND_LOG_VALUE_HPP
#define HRBOUND_LOG_VALUE_HPP

#include <cmath>
#include <compare>
#include <limits>
#include <optional>

namespace hrb {

/// A real number as (sign, natural log of |value|). Zero is sign 0 with
/// log -inf. Ordering is the ordering of the represented reals.
struct LogValue {
    int sign = 0;
    double log_magnitude = -std::numeric_limits<double>::infinity();

    static LogValue zero() { return {}; }
    static LogValue from_log(double log_mag, int sign = 1) { return {sign, log_mag}; }
    static LogValue from_double(double v) {
        if (v == 0.0) return {};
        return {v > 0 ? 1 : -1, std::log(std::abs(v))};
    }

    bool is_zero() const noexcept { return sign == 0; }

    /// The plain value, or nullopt when |value| would overflow a double.
    std::optional<double> to_double() const {
        if (sign == 0) return 0.0;
        if (log_magnitude >= std::log(std::numeric_limits<double>::max())) return std::nullopt;
        return sign * std::exp(log_magnitude);
    }

    friend LogValue operator*(LogValue a, LogValue b) {
        if (a.sign == 0 || b.sign == 0) return {};
        return {a.sign * b.sign, a.log_magnitude + b.log_magnitude};
    }
    friend LogValue operator-(LogValue a) { return {-a.sign, a.log_magnitude}; }

    friend LogValue operator+(LogValue a, LogValue b) {
        if (a.sign == 0) return b;
        if (b.sign == 0) return a;
        if (a.log_magnitude < b.log_magnitude) std::swap(a, b);
        const double ratio = std::exp(b.log_magnitude - a.log_magnitude);
        if (a.sign == b.sign) return {a.sign, a.log_magnitude + std::log1p(ratio)};
        if (ratio == 1.0) return {};
        return {a.sign, a.log_magnitude + std::log1p(-ratio)};
    }
    friend LogValue operator-(LogValue a, LogValue b) { return a + (-b); }

    friend std::partial_ordering operator<=>(const LogValue& a, const LogValue& b) {
        if (a.sign != b.sign) return a.sign <=> b.sign;
        if (a.sign == 0) return std::partial_ordering::equivalent;
        return a.sign > 0 ? a.log_magnitude <=> b.log_magnitude : b.log_magnitude <=> a.log_magnitude;
    }
    friend bool operator==(const LogValue& a, const LogValue& b) {
        return a.sign == b.sign && (a.sign == 0 || a.log_magnitude == b.log_magnitude);
    }
};

}  // namespace hrb

#endif
