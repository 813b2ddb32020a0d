#pragma once

/// @file generator.hpp
/// @brief Seeded random spaces and diagrams.

#include "emtkit/cats.hpp"

#include <optional>
#include <random>
#include <vector>

namespace emtkit {

enum class TopologyMode { random_preorder, discrete, partition };

inline TopologyMode parse_topology_mode(const std::string& s) {
    if (s == "random-preorder") return TopologyMode::random_preorder;
    if (s == "discrete") return TopologyMode::discrete;
    if (s == "partition") return TopologyMode::partition;
    throw ParseError("unknown topology mode \"" + s + "\"");
}

struct GenConfig {
    std::uint64_t seed = 0;
    std::size_t max_points = 3;
    /// Point count is uniform in [min_points, max_points]; unset means exactly max_points.
    std::optional<std::size_t> min_points;
    std::vector<ExtValue> value_grid{ExtValue(0), ExtValue(1, 2), ExtValue(1), ExtValue(2)};
    ExtValue::Rational infinity_probability{1, 4};
    TopologyMode topology_mode = TopologyMode::random_preorder;
};

inline Verdict validate_config(const GenConfig& cfg) {
    if (cfg.max_points > max_points) return Verdict::fail("max_points above 64");
    if (cfg.min_points && *cfg.min_points > cfg.max_points) return Verdict::fail("min_points above max_points");
    const auto& p = cfg.infinity_probability;
    if (p.numerator() < 0 || p.numerator() > p.denominator())
        return Verdict::fail("infinity_probability outside [0,1]");
    if (cfg.value_grid.empty() && p != ExtValue::Rational(1)) return Verdict::fail("empty value grid");
    for (const auto& v : cfg.value_grid)
        if (v.is_infinite()) return Verdict::fail("value grid must be finite");
    return Verdict::pass();
}

namespace detail {

inline bool bernoulli(std::mt19937_64& rng, const ExtValue::Rational& p) {
    std::uniform_int_distribution<std::int64_t> u(0, p.denominator() - 1);
    return u(rng) < p.numerator();
}

inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

} // namespace detail

/// Topology of the reflexive-transitive closure of a random relation.
inline FiniteTopology random_preorder_topology(std::mt19937_64& rng, std::size_t n) {
    std::vector<PointSet> below(n);
    for (std::size_t x = 0; x < n; ++x) {
        below[x] = singleton(x);
        for (std::size_t y = 0; y < n; ++y)
            if (y != x && detail::bernoulli(rng, {1, 3})) below[x] |= singleton(y);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t x = 0; x < n; ++x) {
            PointSet closed = below[x];
            for (auto y : members(below[x])) closed |= below[y];
            if (closed != below[x]) {
                below[x] = closed;
                changed = true;
            }
        }
    }
    return FiniteTopology::from_minimal_neighborhoods(std::move(below));
}

inline FiniteTopology random_topology(std::mt19937_64& rng, std::size_t n, TopologyMode mode) {
    switch (mode) {
    case TopologyMode::discrete: return FiniteTopology::discrete(n);
    case TopologyMode::partition: {
        std::vector<std::size_t> labels(n);
        for (auto& l : labels) l = detail::uniform_index(rng, n);
        return partition_topology(Partition::from_labels(labels));
    }
    case TopologyMode::random_preorder: return random_preorder_topology(rng, n);
    }
    throw InvalidInput("random_topology: unknown mode");
}

/// Grid / inf sampling, symmetrized, zero diagonal, then shortest-path closure.
inline ExtPseudoMetric random_pseudometric(std::mt19937_64& rng, std::size_t n, const std::vector<ExtValue>& grid,
                                           const ExtValue::Rational& infinity_probability) {
    ExtPseudoMetric m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            m.set(i, j, detail::bernoulli(rng, infinity_probability) ? ExtValue::infinity()
                                                                     : grid[detail::uniform_index(rng, grid.size())]);
    return shortest_path_closure(std::move(m));
}

inline Space random_instance(std::mt19937_64& rng, const GenConfig& cfg) {
    if (auto v = validate_config(cfg); !v) throw InvalidInput("GenConfig: " + v.reason);
    const std::size_t lo = cfg.min_points.value_or(cfg.max_points);
    const std::size_t n = lo + detail::uniform_index(rng, cfg.max_points - lo + 1);
    auto t = random_topology(rng, n, cfg.topology_mode);
    auto m = random_pseudometric(rng, n, cfg.value_grid, cfg.infinity_probability);
    Space s = make_space(std::move(t), std::move(m));
    require_space(s, "random_instance");
    return s;
}

/// Deterministic in cfg.seed.
inline Space random_instance(const GenConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    return random_instance(rng, cfg);
}

/// Random e.m.t. space: discrete topology and an extended metric from
/// {1/2, 1, 2} and inf.
inline Space random_emt(std::mt19937_64& rng, std::size_t min_points, std::size_t max_points) {
    GenConfig cfg;
    cfg.max_points = max_points;
    cfg.min_points = min_points;
    cfg.value_grid = {ExtValue(1, 2), ExtValue(1), ExtValue(2)};
    cfg.topology_mode = TopologyMode::discrete;
    return random_instance(rng, cfg);
}

struct DiagramConfig {
    std::size_t max_objects = 3;
    std::size_t max_points = 3;
    std::size_t max_arrows = 4;
};

/// Random diagram in category c: 1..max_objects objects on 1..max_points
/// points and up to max_arrows arrows, each drawn uniformly from its hom-set.
inline Diagram random_diagram(std::mt19937_64& rng, Category c, const DiagramConfig& dc = {}) {
    Diagram d;
    d.category = c;
    const std::size_t k = 1 + detail::uniform_index(rng, dc.max_objects);
    for (std::size_t i = 0; i < k; ++i) {
        if (c == Category::emt) {
            d.objects.push_back(share(random_emt(rng, 1, dc.max_points)));
        } else {
            GenConfig cfg;
            cfg.max_points = dc.max_points;
            cfg.min_points = 1;
            cfg.topology_mode = TopologyMode::random_preorder;
            d.objects.push_back(share(random_instance(rng, cfg)));
        }
    }
    const std::size_t arrows = detail::uniform_index(rng, dc.max_arrows + 1);
    for (std::size_t a = 0; a < arrows; ++a) {
        const std::size_t src = detail::uniform_index(rng, k);
        const std::size_t dst = detail::uniform_index(rng, k);
        auto homs = enumerate_morphisms(c, *d.objects[src], *d.objects[dst]);
        if (homs.empty()) continue;
        d.arrows.push_back({"f" + std::to_string(d.arrows.size()), src, dst, homs[detail::uniform_index(rng, homs.size())]});
    }
    require_diagram(d, "random_diagram");
    return d;
}

} // namespace emtkit
