// SPDX-License-Identifier: Apache-2.0
//
// risecov - 2D coverage simulator for metasurface-assisted wireless links

#pragma once

#include <complex>
#include <optional>
#include <string>

#include "risecov/geometry.hpp"

namespace risecov {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

struct Carrier {
    double frequency_hz = 0.0;
    double wavelength_m = 0.0;

    static Carrier from_frequency(double frequency_hz);
    static Carrier from_wavelength(double wavelength_m);
    bool operator==(const Carrier&) const = default;
};

struct AntennaGains {
    double g_t = 1.0;  ///< BS antenna gain, linear
    double g_r = 1.0;  ///< UE antenna gain, linear
    bool operator==(const AntennaGains&) const = default;
};

/// Desired beam direction of a panel, in its local frame.
struct BeamSpec {
    LocalAngles desired;
    bool operator==(const BeamSpec&) const = default;
};

/// Reflective/transmissive metasurface parameters.
///
/// quantization_levels is the number of uniformly spaced phase states per
/// unit; nullopt means continuous (ideal) phase control.
struct PanelConfig {
    unsigned rows = 16;       ///< M
    unsigned cols = 16;       ///< N
    double dx_m = 0.01;       ///< unit width
    double dy_m = 0.01;       ///< unit height
    double gamma = 1.0;       ///< reflection/transmission attenuation, (0,1]
    double amplitude = 1.0;   ///< per-unit excitation magnitude A, (0,1]
    double panel_gain = 1.0;  ///< structure gain G, >= 1
    double alpha = 3.0;       ///< scattered-pattern exponent, >= 0
    std::optional<unsigned> quantization_levels = 4;

    /// Throws std::invalid_argument naming the offending field, prefixed
    /// with field_path when given.
    void validate(const std::string& field_path = "") const;
    bool operator==(const PanelConfig&) const = default;
};

/// Incident power pattern: cos^2(theta) in front of the aperture, 0 behind.
double incident_pattern(double theta_i);

/// Scattered power pattern: cos^alpha(theta) in front, 0 behind.
/// Throws std::invalid_argument for negative alpha.
double scattered_pattern(double theta_s, double alpha);

/// Phase of the incident wave at unit (m, n), m in 1..M, n in 1..N.
/// Result in [0, 2*pi).
double unit_incident_phase(unsigned m, unsigned n, const LinkGeometry& link,
                           const Carrier& carrier, double dx_m, double dy_m);

/// Phase excitation of unit (m, n) steering toward the desired beam.
/// Result in [0, 2*pi).
double unit_excitation_phase(unsigned m, unsigned n, const LocalAngles& incident,
                             const BeamSpec& beam, const Carrier& carrier, double dx_m,
                             double dy_m);

/// Snap a phase to the nearest of L uniform states on [0, 2*pi), circular
/// distance, ties resolved toward the lower state index.
double quantize_phase(double phase, unsigned levels);

/// Normalized beamforming gain: the mean over all units of
/// exp(j*(excitation + incident)) with the excitation optionally quantized.
/// |result| <= 1. Summation order is fixed row-major.
std::complex<double> beamforming_gain(const PanelConfig& config, const Carrier& carrier,
                                      const LinkGeometry& link, const BeamSpec& beam);

/// Received-to-transmitted power ratio of the panel-assisted link.
/// nullopt designates an unreachable link (blocked sub-link or geometry
/// behind the aperture). Throws std::invalid_argument on non-positive
/// distances.
std::optional<double> path_gain(const PanelConfig& config, const AntennaGains& gains,
                                const Carrier& carrier, const LinkGeometry& link,
                                const BeamSpec& beam);

/// Attenuation in dB of a power ratio: -10*log10(pl).
inline double to_attenuation_db(double power_ratio) { return -10.0 * std::log10(power_ratio); }

}  // namespace risecov
