// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "risecov/dee.hpp"

using namespace risecov;

namespace {

const Carrier kRefCarrier = Carrier::from_wavelength(0.0545077);

LinkGeometry open_link(double d1, double d2, LocalAngles inc) {
    return {d1, d2, inc, {0.0, 0.0}, true, true};
}

}  // namespace

TEST_CASE("dee pattern") {
    DeeConfig cfg;
    CHECK(cfg.pattern_p == 2.0);
    CHECK(cfg.pattern_q == 3.0);
    CHECK(cfg.radiation_efficiency == 0.62);

    CHECK(dee_pattern({0.0, 0.0}, 0.0, cfg) == 1.0);
    CHECK(dee_pattern({0.0, 0.0}, kPi / 2, cfg) == 0.0);
    CHECK(dee_pattern({0.0, 0.0}, kPi / 2 + 0.3, cfg) == 0.0);
    CHECK(dee_pattern({kPi / 2, 0.0}, 0.0, cfg) == 0.0);
    CHECK(dee_pattern({kPi / 3, 0.0}, kPi / 3, cfg) ==
          doctest::Approx(0.25 * 0.125).epsilon(1e-12));

    // bounded in [0,1] and 1 only at the joint maximum
    for (int i = 0; i <= 12; ++i) {
        for (int j = 0; j <= 12; ++j) {
            const double ti = i * kPi / 12.0;
            const double ts = j * kPi / 12.0;
            const double f = dee_pattern({ti, 0.0}, ts, cfg);
            CHECK(f >= 0.0);
            CHECK(f <= 1.0);
            if (i != 0 || j != 0) CHECK(f < 1.0);
        }
    }
}

TEST_CASE("dee path gain") {
    DeeConfig cfg;
    cfg.effective_gain_m2 = 1.0;
    const AntennaGains gains;

    SUBCASE("frozen spot value") {
        const auto pl = dee_path_gain(cfg, gains, kRefCarrier, open_link(1, 1, {0.0, 0.0}), 0.0);
        REQUIRE(pl.has_value());
        CHECK(*pl == doctest::Approx(1.881464316190111e-05).epsilon(1e-12));
        CHECK(to_attenuation_db(*pl) == doctest::Approx(47.25504014085381).epsilon(1e-12));
    }
    SUBCASE("quadrupling both distances adds 24.08 dB") {
        const double a1 =
            to_attenuation_db(*dee_path_gain(cfg, gains, kRefCarrier, open_link(1, 1, {0, 0}), 0.0));
        const double a2 =
            to_attenuation_db(*dee_path_gain(cfg, gains, kRefCarrier, open_link(4, 4, {0, 0}), 0.0));
        CHECK(a2 - a1 == doctest::Approx(10.0 * std::log10(256.0)).epsilon(1e-9));
    }
    SUBCASE("symmetric in d1 and d2 at a fixed pattern") {
        const auto a = dee_path_gain(cfg, gains, kRefCarrier, open_link(3, 11, {0.2, 0.0}), 0.4);
        const auto b = dee_path_gain(cfg, gains, kRefCarrier, open_link(11, 3, {0.2, 0.0}), 0.4);
        CHECK(*a == doctest::Approx(*b).epsilon(1e-12));
    }
    SUBCASE("linear in the effective gain") {
        DeeConfig doubled = cfg;
        doubled.effective_gain_m2 = 2.0;
        const auto a = dee_path_gain(cfg, gains, kRefCarrier, open_link(5, 7, {0.3, 0.0}), 0.2);
        const auto b = dee_path_gain(doubled, gains, kRefCarrier, open_link(5, 7, {0.3, 0.0}), 0.2);
        CHECK(*b == doctest::Approx(2.0 * *a).epsilon(1e-12));
    }
    SUBCASE("gain grows with the physical footprint at fixed efficiency") {
        double prev = 0.0;
        for (double area : {0.01, 0.02, 0.05, 0.1}) {
            DeeConfig c = cfg;
            c.effective_gain_m2 = c.radiation_efficiency * area;
            const auto pl = dee_path_gain(c, gains, kRefCarrier, open_link(5, 7, {0.3, 0.0}), 0.2);
            CHECK(*pl > prev);
            prev = *pl;
        }
    }
    SUBCASE("blocked or pattern-null links are unreachable") {
        LinkGeometry blocked = open_link(1, 1, {0.0, 0.0});
        blocked.user_visible = false;
        CHECK_FALSE(dee_path_gain(cfg, gains, kRefCarrier, blocked, 0.0).has_value());
        CHECK_FALSE(
            dee_path_gain(cfg, gains, kRefCarrier, open_link(1, 1, {0.0, 0.0}), kPi / 2).has_value());
        CHECK_FALSE(
            dee_path_gain(cfg, gains, kRefCarrier, open_link(1, 1, {kPi, 0.0}), 0.0).has_value());
    }
    SUBCASE("zero distance throws") {
        CHECK_THROWS_AS(dee_path_gain(cfg, gains, kRefCarrier, open_link(0, 1, {0, 0}), 0.0),
                        std::invalid_argument);
    }
}

TEST_CASE("dee config validation and defaults") {
    DeeConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    CHECK(cfg.effective_gain_m2 == doctest::Approx(0.62 * 0.0512).epsilon(1e-12));
    CHECK(DeeConfig::default_effective_gain(1.0) == doctest::Approx(0.0512).epsilon(1e-12));

    cfg.radiation_efficiency = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = DeeConfig{};
    cfg.effective_gain_m2 = -0.1;
    CHECK_THROWS_WITH_AS(cfg.validate("structures[2].dee"),
                         "structures[2].dee.effective_gain_m2: must be >= 0",
                         std::invalid_argument);
}
