#pragma once

#include <cmath>
#include <numbers>
#include <string_view>

namespace awggn {

/// Information unit. All quantities are computed in nats and converted here.
enum class Units { bits, nats };

inline double from_nats(double value_nats, Units units) {
    return units == Units::bits ? value_nats / std::numbers::ln2 : value_nats;
}

inline double to_nats(double value, Units units) {
    return units == Units::bits ? value * std::numbers::ln2 : value;
}

inline std::string_view to_string(Units units) { return units == Units::bits ? "bits" : "nats"; }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

}  // namespace awggn
