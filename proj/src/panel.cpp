// SPDX-License-Identifier: Apache-2.0
//
// risecov - 2D coverage simulator for metasurface-assisted wireless links

#include "risecov/panel.hpp"

#include <stdexcept>

namespace risecov {

Carrier Carrier::from_frequency(double frequency_hz) {
    if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
        throw std::invalid_argument("carrier frequency must be positive and finite");
    return {frequency_hz, kSpeedOfLight / frequency_hz};
}

Carrier Carrier::from_wavelength(double wavelength_m) {
    if (!(wavelength_m > 0.0) || !std::isfinite(wavelength_m))
        throw std::invalid_argument("carrier wavelength must be positive and finite");
    return {kSpeedOfLight / wavelength_m, wavelength_m};
}

void PanelConfig::validate(const std::string& field_path) const {
    auto fail = [&](const char* field, const char* msg) {
        std::string where = field_path.empty() ? std::string(field) : field_path + "." + field;
        throw std::invalid_argument(where + ": " + msg);
    };
    if (rows < 1) fail("rows", "must be >= 1");
    if (cols < 1) fail("cols", "must be >= 1");
    if (!(dx_m > 0.0) || !std::isfinite(dx_m)) fail("dx_m", "must be positive");
    if (!(dy_m > 0.0) || !std::isfinite(dy_m)) fail("dy_m", "must be positive");
    if (!(gamma > 0.0) || !(gamma <= 1.0)) fail("gamma", "must be in (0, 1]");
    if (!(amplitude > 0.0) || !(amplitude <= 1.0)) fail("amplitude", "must be in (0, 1]");
    if (!(panel_gain >= 1.0) || !std::isfinite(panel_gain)) fail("panel_gain", "must be >= 1");
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) fail("alpha", "must be >= 0");
    if (quantization_levels && *quantization_levels < 1)
        fail("quantization_levels", "must be >= 1 or continuous");
}

double incident_pattern(double theta_i) {
    if (theta_i >= kPi / 2.0) return 0.0;
    const double c = std::cos(theta_i);
    return c * c;
}

double scattered_pattern(double theta_s, double alpha) {
    if (alpha < 0.0) throw std::invalid_argument("scattered_pattern: alpha must be >= 0");
    if (theta_s >= kPi / 2.0) return 0.0;
    return std::pow(std::cos(theta_s), alpha);
}

namespace {

// In-plane direction cosines (sin(theta)cos(phi), sin(theta)sin(phi)) with
// phi handled exactly for the 2D values {0, pi} so the dy term vanishes
// identically, matching the horizontal-plane reduction.
struct DirCos {
    double u;
    double v;
};

DirCos direction_cosines(const LocalAngles& a) {
    const double s = std::sin(a.theta);
    if (a.phi == 0.0) return {s, 0.0};
    if (a.phi == kPi) return {-s, 0.0};
    return {s * std::cos(a.phi), s * std::sin(a.phi)};
}

inline double unit_phase(double k, double u_sum, double v_sum, double xm, double yn) {
    return mod_two_pi(k * (u_sum * xm + v_sum * yn));
}

}  // namespace

double unit_incident_phase(unsigned m, unsigned n, const LinkGeometry& link,
                           const Carrier& carrier, double dx_m, double dy_m) {
    const DirCos i = direction_cosines(link.incident);
    const DirCos s = direction_cosines(link.scattered);
    const double k = kTwoPi / carrier.wavelength_m;
    return unit_phase(k, i.u + s.u, i.v + s.v, (m - 0.5) * dx_m, (n - 0.5) * dy_m);
}

double unit_excitation_phase(unsigned m, unsigned n, const LocalAngles& incident,
                             const BeamSpec& beam, const Carrier& carrier, double dx_m,
                             double dy_m) {
    const DirCos i = direction_cosines(incident);
    const DirCos d = direction_cosines(beam.desired);
    const double k = kTwoPi / carrier.wavelength_m;
    return unit_phase(k, -i.u - d.u, -i.v - d.v, (m - 0.5) * dx_m, (n - 0.5) * dy_m);
}

double quantize_phase(double phase, unsigned levels) {
    if (levels < 1) throw std::invalid_argument("quantize_phase: levels must be >= 1");
    const double step = kTwoPi / levels;
    const double x = mod_two_pi(phase) / step;
    long k = static_cast<long>(std::ceil(x - 0.5));  // ties toward the lower state
    if (k < 0) k = 0;
    if (k >= static_cast<long>(levels)) k -= levels;
    return k * step;
}

std::complex<double> beamforming_gain(const PanelConfig& config, const Carrier& carrier,
                                      const LinkGeometry& link, const BeamSpec& beam) {
    const DirCos i = direction_cosines(link.incident);
    const DirCos s = direction_cosines(link.scattered);
    const DirCos d = direction_cosines(beam.desired);
    const double k = kTwoPi / carrier.wavelength_m;
    const double ui = i.u + s.u, vi = i.v + s.v;    // incident-phase sums
    const double ue = -i.u - d.u, ve = -i.v - d.v;  // excitation-phase sums

    double sum_re = 0.0;
    double sum_im = 0.0;
    for (unsigned m = 1; m <= config.rows; ++m) {
        const double xm = (m - 0.5) * config.dx_m;
        for (unsigned n = 1; n <= config.cols; ++n) {
            const double yn = (n - 0.5) * config.dy_m;
            const double p_inc = unit_phase(k, ui, vi, xm, yn);
            double p_exc = unit_phase(k, ue, ve, xm, yn);
            if (config.quantization_levels)
                p_exc = quantize_phase(p_exc, *config.quantization_levels);
            const double t = p_exc + p_inc;
            sum_re += std::cos(t);
            sum_im += std::sin(t);
        }
    }
    const double count = static_cast<double>(config.rows) * config.cols;
    return {sum_re / count, sum_im / count};
}

std::optional<double> path_gain(const PanelConfig& config, const AntennaGains& gains,
                                const Carrier& carrier, const LinkGeometry& link,
                                const BeamSpec& beam) {
    if (!(link.d1 > 0.0) || !(link.d2 > 0.0))
        throw std::invalid_argument("path_gain: distances must be positive");
    if (!link.bs_visible || !link.user_visible) return std::nullopt;
    if (link.incident.theta >= kPi / 2.0 || link.scattered.theta >= kPi / 2.0)
        return std::nullopt;

    const std::complex<double> b = beamforming_gain(config, carrier, link, beam);
    const double lam = carrier.wavelength_m;
    const double m2n2 = static_cast<double>(config.rows) * config.rows *
                        static_cast<double>(config.cols) * config.cols;
    const double numerator = config.gamma * gains.g_t * gains.g_r * config.panel_gain * m2n2 *
                             config.dx_m * config.dy_m * lam * lam *
                             incident_pattern(link.incident.theta) *
                             scattered_pattern(link.scattered.theta, config.alpha) *
                             config.amplitude * config.amplitude;
    const double denominator = 64.0 * kPi * kPi * kPi * link.d1 * link.d1 * link.d2 * link.d2;
    return numerator / denominator * std::norm(b);
}

}  // namespace risecov
