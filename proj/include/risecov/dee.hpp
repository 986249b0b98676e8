// SPDX-License-Identifier: Apache-2.0
//
// risecov - 2D coverage simulator for metasurface-assisted wireless links

#pragma once

#include <optional>
#include <string>

#include "risecov/geometry.hpp"
#include "risecov/panel.hpp"

namespace risecov {

/// Simplified model of the diffraction-enhancement edge structure.
///
/// The structure has no phase control: a fixed normalized pattern
/// F = cos^p(theta_i) * cos^q(angle from boresight), clamped to zero behind
/// either reference direction. The pose normal is the incident reference
/// (it faces the BS side); the boresight points into the shadow region
/// and is independent of the pose normal.
struct DeeConfig {
    double effective_gain_m2 = default_effective_gain(0.62);
    double boresight_azimuth = 0.0;  ///< global frame, radians
    double pattern_p = 2.0;
    double pattern_q = 3.0;
    double radiation_efficiency = 0.62;  ///< operating-point value at 5.5 GHz

    /// Default gain: efficiency times the module footprint. The edge module
    /// wraps the corner with a 0.16 m face on each side, so the footprint is
    /// twice the single-face area of a 16x16, 0.01 m pitch panel.
    static double default_effective_gain(double efficiency) {
        return efficiency * (2.0 * 0.16 * 0.16);
    }

    void validate(const std::string& field_path = "") const;
    bool operator==(const DeeConfig&) const = default;
};

/// Normalized pattern value in [0, 1]; 1 exactly at normal incidence on
/// boresight.
double dee_pattern(const LocalAngles& incident, double scattered_from_boresight,
                   const DeeConfig& config);

/// Received-to-transmitted power ratio of the edge-structure link.
/// nullopt designates an unreachable link (blocked sub-link or zero
/// pattern). Throws std::invalid_argument on non-positive distances.
std::optional<double> dee_path_gain(const DeeConfig& config, const AntennaGains& gains,
                                    const Carrier& carrier, const LinkGeometry& link,
                                    double scattered_from_boresight);

}  // namespace risecov
