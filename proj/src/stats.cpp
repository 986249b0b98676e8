// SPDX-License-Identifier: Apache-2.0
//
// risecov - 2D coverage simulator for metasurface-assisted wireless links

#include "risecov/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace risecov {

CdfCurve cdf(std::vector<double> samples) {
    if (samples.empty()) throw std::invalid_argument("cdf: no reachable samples");
    std::sort(samples.begin(), samples.end());
    const std::size_t n = samples.size();
    std::vector<double> probs(n);
    for (std::size_t i = 0; i < n; ++i)
        probs[i] = static_cast<double>(i + 1) / static_cast<double>(n);
    return {std::move(samples), std::move(probs)};
}

CdfCurve cdf(const PathlossMap& map) {
    std::vector<double> values;
    values.reserve(map.cells.size());
    for (const auto& cell : map.cells) {
        if (cell) values.push_back(*cell);
    }
    return cdf(std::move(values));
}

double percentile(const CdfCurve& curve, double q) {
    if (!(q >= 0.0) || !(q <= 1.0))
        throw std::invalid_argument("percentile: q must be in [0, 1]");
    const std::size_t n = curve.values.size();
    if (n == 0) throw std::invalid_argument("percentile: empty curve");
    std::size_t i = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n)));
    if (i < 1) i = 1;
    if (i > n) i = n;
    // exact i/n >= q convention; guards the float rounding of q*n
    if (i > 1 && static_cast<double>(i - 1) / static_cast<double>(n) >= q) --i;
    return curve.values[i - 1];
}

}  // namespace risecov
