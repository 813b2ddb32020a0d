#pragma once

/// @file enumerate.hpp
/// @brief Exhaustive enumeration of small topologies and pseudometrics.

#include "emtkit/metric.hpp"
#include "emtkit/topology.hpp"

#include <functional>
#include <vector>

namespace emtkit {

/// Every topology on n points, one per preorder (1, 1, 4, 29, 355, 6942 for
/// n = 0..5). Enumerates the off-diagonal bits of the relation "y in U_x" and
/// keeps the transitive ones.
inline std::vector<FiniteTopology> enumerate_topologies(std::size_t n) {
    if (n > 5) throw CapExceeded("enumerate_topologies: more than 5 points");
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (x != y) cells.emplace_back(x, y);
    std::vector<FiniteTopology> out;
    const std::uint64_t total = std::uint64_t{1} << cells.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::vector<PointSet> minimal(n);
        for (std::size_t x = 0; x < n; ++x) minimal[x] = singleton(x);
        for (std::size_t c = 0; c < cells.size(); ++c)
            if ((bits >> c) & 1u) minimal[cells[c].first] |= singleton(cells[c].second);
        bool transitive = true;
        for (std::size_t x = 0; x < n && transitive; ++x)
            for (auto y : members(minimal[x]))
                if (!is_subset(minimal[y], minimal[x])) {
                    transitive = false;
                    break;
                }
        if (transitive) out.push_back(FiniteTopology::from_minimal_neighborhoods(std::move(minimal)));
    }
    return out;
}

/// Visits every symmetric zero-diagonal matrix on n points with entries from
/// `grid` that satisfies the triangle inequality.
inline void for_each_pseudometric(std::size_t n, const std::vector<ExtValue>& grid,
                                  const std::function<void(const ExtPseudoMetric&)>& visit) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) cells.emplace_back(x, y);
    ExtPseudoMetric m(n);
    std::function<void(std::size_t)> go = [&](std::size_t c) {
        if (c == cells.size()) {
            if (validate_pseudometric(m)) visit(m);
            return;
        }
        for (const auto& v : grid) {
            m.set(cells[c].first, cells[c].second, v);
            go(c + 1);
        }
    };
    go(0);
}

inline std::vector<ExtPseudoMetric> enumerate_pseudometrics(std::size_t n, const std::vector<ExtValue>& grid) {
    std::vector<ExtPseudoMetric> out;
    for_each_pseudometric(n, grid, [&](const ExtPseudoMetric& m) { out.push_back(m); });
    return out;
}

/// {0, 1/2, 1, 2, inf}
inline std::vector<ExtValue> standard_grid() {
    return {ExtValue(0), ExtValue(1, 2), ExtValue(1), ExtValue(2), ExtValue::infinity()};
}

} // namespace emtkit
