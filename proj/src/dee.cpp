// SPDX-License-Identifier: Apache-2.0
//
// risecov - 2D coverage simulator for metasurface-assisted wireless links

#include "risecov/dee.hpp"

#include <stdexcept>

namespace risecov {

void DeeConfig::validate(const std::string& field_path) const {
    auto fail = [&](const char* field, const char* msg) {
        std::string where = field_path.empty() ? std::string(field) : field_path + "." + field;
        throw std::invalid_argument(where + ": " + msg);
    };
    if (!(effective_gain_m2 >= 0.0) || !std::isfinite(effective_gain_m2))
        fail("effective_gain_m2", "must be >= 0");
    if (!std::isfinite(boresight_azimuth)) fail("boresight_azimuth", "must be finite");
    if (!(pattern_p >= 0.0)) fail("pattern_p", "must be >= 0");
    if (!(pattern_q >= 0.0)) fail("pattern_q", "must be >= 0");
    if (!(radiation_efficiency > 0.0) || !(radiation_efficiency <= 1.0))
        fail("radiation_efficiency", "must be in (0, 1]");
}

double dee_pattern(const LocalAngles& incident, double scattered_from_boresight,
                   const DeeConfig& config) {
    if (incident.theta >= kPi / 2.0 || std::abs(scattered_from_boresight) >= kPi / 2.0)
        return 0.0;
    return std::pow(std::cos(incident.theta), config.pattern_p) *
           std::pow(std::cos(scattered_from_boresight), config.pattern_q);
}

std::optional<double> dee_path_gain(const DeeConfig& config, const AntennaGains& gains,
                                    const Carrier& carrier, const LinkGeometry& link,
                                    double scattered_from_boresight) {
    if (!(link.d1 > 0.0) || !(link.d2 > 0.0))
        throw std::invalid_argument("dee_path_gain: distances must be positive");
    if (!link.bs_visible || !link.user_visible) return std::nullopt;
    const double pattern = dee_pattern(link.incident, scattered_from_boresight, config);
    if (pattern <= 0.0) return std::nullopt;
    const double lam = carrier.wavelength_m;
    const double numerator = gains.g_t * gains.g_r * config.effective_gain_m2 * lam * lam * pattern;
    const double denominator = 16.0 * kPi * kPi * link.d1 * link.d1 * link.d2 * link.d2;
    return numerator / denominator;
}

}  // namespace risecov
