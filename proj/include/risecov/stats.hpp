// SPDX-License-Identifier: Apache-2.0
//
// risecov - 2D coverage simulator for metasurface-assisted wireless links

#pragma once

#include <vector>

#include "risecov/engine.hpp"

namespace risecov {

/// Empirical step CDF: values sorted ascending, probability i/n at the
/// i-th sorted value.
struct CdfCurve {
    std::vector<double> values;
    std::vector<double> probabilities;
};

/// Empirical CDF of a sample set. Throws std::invalid_argument when empty.
CdfCurve cdf(std::vector<double> samples);

/// Empirical CDF over the reachable cells of a map; Unreachable cells are
/// excluded. Throws when no cell is reachable.
CdfCurve cdf(const PathlossMap& map);

/// Lower empirical quantile: the smallest sample value v with CDF(v) >= q.
/// Throws std::invalid_argument for q outside [0, 1].
double percentile(const CdfCurve& curve, double q);

}  // namespace risecov
