#pragma once

/**
 * @file metric.hpp
 * @brief Extended pseudometrics on finite sets as exact ExtValue matrices.
 */

#include "emtkit/caps.hpp"
#include "emtkit/ext_value.hpp"
#include "emtkit/fin_map.hpp"
#include "emtkit/partition.hpp"
#include "emtkit/topology.hpp"
#include "emtkit/verdict.hpp"

#include <span>
#include <utility>
#include <vector>

namespace emtkit {

/// Square ExtValue matrix. Construction does not validate; use
/// validate_pseudometric before relying on the axioms.
class ExtPseudoMetric {
public:
    ExtPseudoMetric() = default;

    /// Zero matrix on n points.
    explicit ExtPseudoMetric(std::size_t n) : n_(n), d_(n * n) {}

    static ExtPseudoMetric from_rows(const std::vector<std::vector<ExtValue>>& rows) {
        ExtPseudoMetric m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) throw InvalidInput("distance matrix is not square");
            for (std::size_t j = 0; j < rows.size(); ++j) m.d_[i * m.n_ + j] = rows[i][j];
        }
        return m;
    }

    /// `value` off the diagonal, 0 on it.
    static ExtPseudoMetric uniform(std::size_t n, const ExtValue& value) {
        ExtPseudoMetric m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) m.d_[i * n + j] = value;
        return m;
    }

    std::size_t size() const noexcept { return n_; }

    const ExtValue& operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }

    // Sets both (i,j) and (j,i).
    void set(std::size_t i, std::size_t j, const ExtValue& v) {
        d_.at(i * n_ + j) = v;
        d_.at(j * n_ + i) = v;
    }

    friend bool operator==(const ExtPseudoMetric&, const ExtPseudoMetric&) = default;

private:
    std::size_t n_ = 0;
    std::vector<ExtValue> d_;
};

/// Checks zero diagonal, symmetry and the triangle inequality, in that order.
/// Triangle witnesses are reported as (x, z, y) with d(x,y) > d(x,z) + d(z,y).
inline Verdict validate_pseudometric(const ExtPseudoMetric& m) {
    const std::size_t n = m.size();
    for (std::size_t x = 0; x < n; ++x)
        if (!m(x, x).is_zero()) return Verdict::fail("nonzero diagonal", {x});
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (m(x, y) != m(y, x)) return Verdict::fail("not symmetric", {x, y});
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (saturating_sum(m(x, z), m(z, y)) < m(x, y))
                    return Verdict::fail("triangle inequality violated", {x, z, y});
    return Verdict::pass();
}

inline void require_pseudometric(const ExtPseudoMetric& m, const char* where) {
    if (auto v = validate_pseudometric(m); !v)
        throw InvalidInput(std::string(where) + ": invalid pseudometric (" + v.reason + ")");
}

inline bool is_extended_metric(const ExtPseudoMetric& m) {
    require_pseudometric(m, "is_extended_metric");
    for (std::size_t x = 0; x < m.size(); ++x)
        for (std::size_t y = x + 1; y < m.size(); ++y)
            if (m(x, y).is_zero()) return false;
    return true;
}

/// All-pairs shortest paths over (ExtValue, min, saturating_sum).
inline ExtPseudoMetric shortest_path_closure(ExtPseudoMetric m) {
    const std::size_t n = m.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (m(i, k).is_infinite()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                auto via = saturating_sum(m(i, k), m(k, j));
                if (via < m(i, j)) m.set(i, j, via);
            }
        }
    return m;
}

/// Quotient pseudometric on the classes of p: the infimum over chains of metric
/// hops joined by free jumps inside classes. Computed as shortest paths on the
/// complete graph weighted by m plus zero-weight edges within each class, read
/// between class representatives.
inline ExtPseudoMetric chain_quotient_metric(const ExtPseudoMetric& m, const Partition& p) {
    require_pseudometric(m, "chain_quotient_metric");
    if (p.size() != m.size()) throw InvalidInput("chain_quotient_metric: size mismatch");
    ExtPseudoMetric graph = m;
    for (const auto& cls : p.classes())
        for (auto a : cls)
            for (auto b : cls) graph.set(a, b, ExtValue(0));
    graph = shortest_path_closure(std::move(graph));
    ExtPseudoMetric q(p.class_count());
    for (std::size_t a = 0; a < p.class_count(); ++a)
        for (std::size_t b = a + 1; b < p.class_count(); ++b)
            q.set(a, b, graph(p.representative(a), p.representative(b)));
    return q;
}

/// Sup metric on the lexicographically indexed product (same indexing as topology_product).
inline ExtPseudoMetric metric_product_sup(std::span<const ExtPseudoMetric> ms, const Caps& caps = {}) {
    std::vector<std::size_t> sizes;
    for (const auto& m : ms) sizes.push_back(m.size());
    const std::size_t total = product_size(sizes, caps.product_points);
    std::vector<std::vector<std::size_t>> coords(total);
    for (std::size_t i = 0; i < total; ++i) coords[i] = product_coordinates(i, sizes);
    ExtPseudoMetric out(total);
    for (std::size_t i = 0; i < total; ++i)
        for (std::size_t j = i + 1; j < total; ++j) {
            ExtValue sup(0);
            for (std::size_t k = 0; k < ms.size(); ++k) sup = maximum(sup, ms[k](coords[i][k], coords[j][k]));
            out.set(i, j, sup);
        }
    return out;
}

/// Block-diagonal matrix, +inf between different summands.
inline ExtPseudoMetric metric_disjoint_union(std::span<const ExtPseudoMetric> ms) {
    std::size_t total = 0;
    for (const auto& m : ms) total += m.size();
    ExtPseudoMetric out = ExtPseudoMetric::uniform(total, ExtValue::infinity());
    std::size_t offset = 0;
    for (const auto& m : ms) {
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j) out.set(offset + i, offset + j, m(i, j));
        offset += m.size();
    }
    return out;
}

inline ExtPseudoMetric metric_restrict(const ExtPseudoMetric& m, PointSet subset) {
    auto pts = members(subset);
    for (auto p : pts)
        if (p >= m.size()) throw InvalidInput("metric_restrict: subset out of range");
    ExtPseudoMetric out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) out.set(i, j, m(pts[i], pts[j]));
    return out;
}

/// Entrywise d /\ lambda off the diagonal.
inline ExtPseudoMetric truncate_metric(const ExtPseudoMetric& m, const ExtValue& lambda) {
    require_pseudometric(m, "truncate_metric");
    if (lambda.is_infinite() || lambda.is_zero())
        throw InvalidInput("truncate_metric: lambda must be finite and positive");
    ExtPseudoMetric out = m;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) out.set(i, j, minimum(m(i, j), lambda));
    return out;
}

/// Largest entry (0 for spaces with fewer than two points).
inline ExtValue diameter(const ExtPseudoMetric& m) {
    ExtValue out(0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) out = maximum(out, m(i, j));
    return out;
}

/// Classes of the relation d(x,y) < inf.
inline Partition finiteness_components(const ExtPseudoMetric& m) {
    require_pseudometric(m, "finiteness_components");
    detail::UnionFind uf(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m(i, j).is_finite()) uf.unite(i, j);
    return Partition::from_union_find(uf);
}

/// Points at distance zero, as a partition.
inline Partition zero_classes(const ExtPseudoMetric& m) {
    detail::UnionFind uf(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m(i, j).is_zero()) uf.unite(i, j);
    return Partition::from_union_find(uf);
}

/// A finite extended metric space is complete: the completion is the space
/// itself with the identity as its distance-preserving embedding.
inline std::pair<ExtPseudoMetric, FinMap> completion_finite(const ExtPseudoMetric& m) {
    if (!is_extended_metric(m)) throw InvalidInput("completion_finite: not an extended metric");
    return {m, FinMap::identity(m.size())};
}

/// Length distance on a finite space with discrete topology. A continuous curve
/// from [0,1] into a finite discrete space is constant, so distinct points are
/// joined by no rectifiable curve and sit at distance +inf.
inline ExtPseudoMetric length_distance_finite(const ExtPseudoMetric& m, bool topology_is_discrete) {
    require_pseudometric(m, "length_distance_finite");
    if (!topology_is_discrete)
        throw InvalidInput(
            "length distance not computable for non-discrete finite topologies at finite scale");
    return ExtPseudoMetric::uniform(m.size(), ExtValue::infinity());
}

} // namespace emtkit
