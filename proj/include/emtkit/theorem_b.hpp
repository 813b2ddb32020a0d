#pragma once

/**
 * @file theorem_b.hpp
 * @brief Independent finite-scale evaluation of eight equivalent
 * characterizations of an e.m.t. space.
 *
 *  i    is_emt (definitional route)
 *  ii   every probe map phi: Y -> X along which all of LIP_{b,1}(X) pulls back
 *       into LIP_{b,1}(Y) is continuous-short
 *  iii  closed sets are separated from outside points by LIP_{b,1} functions,
 *       and every subset K has recovered distance equal to the restriction of
 *       the ambient one (so its LIP_{b,1} functions extend)
 *  iv   separation with any prescribed value up to d(x, C)
 *  v    the pseudodistances built from truncated witness functions induce tau
 *       and have supremum d
 *  vi   the e.m.t.-fication unit is an isomorphism
 *  vii  the gamma-bar unit is an embedding
 *  viii some embedding into a compact e.m.t. space exists
 *
 * The probes of ii are the ones that drive the usual proof (two-point
 * discrete spaces carrying the recovered distance, and X with the partition
 * topology of its continuity classes and the inf-discrete distance) plus every
 * space on at most two points with every map into X.
 */

#include "emtkit/cats.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace emtkit {

struct TheoremBReport {
    std::array<bool, 8> conditions{};
    bool all_equal = false;
    /// Conditions i, vi, vii and viii agree (the ones that keep their meaning
    /// without the Hausdorff hypothesis).
    bool core_consistent = false;
    bool relaxed = false;
};

/// Searches for an injective map X -> Y that preserves distances and both
/// directions of the specialization preorder (an embedding).
inline std::optional<FinMap> find_embedding(const Space& X, const Space& Y, const Caps& caps = {}) {
    const std::size_t n = X.size();
    if (n > Y.size()) return std::nullopt;
    std::vector<std::size_t> img(n);
    std::vector<bool> used(Y.size(), false);
    std::size_t nodes = 0;
    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
        if (i == n) return true;
        for (std::size_t v = 0; v < Y.size(); ++v) {
            if (used[v]) continue;
            if (++nodes > caps.search_nodes) throw CapExceeded("find_embedding: search budget exhausted");
            bool ok = X.topology.leq(i, i) == Y.topology.leq(v, v);
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = X.metric(i, j) == Y.metric(v, img[j]) && X.topology.leq(i, j) == Y.topology.leq(v, img[j]) &&
                     X.topology.leq(j, i) == Y.topology.leq(img[j], v);
            if (!ok) continue;
            img[i] = v;
            used[v] = true;
            if (go(i + 1)) return true;
            used[v] = false;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return FinMap(Y.size(), img);
}

namespace detail {

inline ExtValue distance_to_set(const ExtPseudoMetric& m, std::size_t x, PointSet c) {
    ExtValue out = ExtValue::infinity();
    for (auto y : members(c)) out = minimum(out, m(x, y));
    return out;
}

inline ExtValue abs_difference(const ExtValue& a, const ExtValue& b) {
    return *difference(maximum(a, b), minimum(a, b));
}

inline bool condition_ii(const Space& s, const ExtPseudoMetric& rho, const Caps& caps) {
    const Partition classes = continuity_partition(s.topology);
    auto hypothesis = [&](const Space& y, const FinMap& phi) {
        const Partition yc = continuity_partition(y.topology);
        for (std::size_t a = 0; a < y.size(); ++a)
            for (std::size_t b = 0; b < y.size(); ++b) {
                if (yc.same_class(a, b) && !classes.same_class(phi(a), phi(b))) return false;
                if (y.metric(a, b) < rho(phi(a), phi(b))) return false;
            }
        return true;
    };
    auto holds = [&](const Space& y, const FinMap& phi) {
        return !hypothesis(y, phi) || is_morphism(Category::pre, y, s, phi);
    };
    const std::size_t n = s.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            ExtPseudoMetric dz(2);
            dz.set(0, 1, rho(x, y));
            if (!holds(make_space(FiniteTopology::discrete(2), dz), FinMap(n, {x, y}))) return false;
        }
    const Space coarse = make_space(partition_topology(classes), ExtPseudoMetric::uniform(n, ExtValue::infinity()));
    if (!holds(coarse, FinMap::identity(n))) return false;
    for (const auto& probe : small_spaces(Category::pre, 2))
        for (const auto& phi : enumerate_morphisms(Category::set, *probe, s, caps))
            if (!holds(*probe, phi)) return false;
    return true;
}

inline bool condition_iii(const Space& s, const ExtPseudoMetric& rho) {
    const std::size_t n = s.size();
    const PointSet all = full_set(n);
    for (PointSet c = 0;; ++c) {
        if (s.topology.is_closed(c))
            for (std::size_t x = 0; x < n; ++x) {
                if (contains(c, x)) continue;
                std::vector<ExtValue> f(n);
                for (std::size_t z = 0; z < n; ++z)
                    f[z] = c == 0 ? ExtValue(1) : minimum(distance_to_set(rho, z, c), ExtValue(1));
                if (!f[x].is_finite() || f[x].is_zero() || !is_lip1_continuous(s, f)) return false;
                for (auto z : members(c))
                    if (!f[z].is_zero()) return false;
            }
        if (c == all) break;
    }
    for (PointSet k = 1; k <= all && n > 0; ++k) {
        if (recovered_distance(subspace(s, k)) != metric_restrict(rho, k)) return false;
        if (k == all) break;
    }
    return true;
}

inline bool condition_iv(const Space& s, const ExtPseudoMetric& rho) {
    const std::size_t n = s.size();
    const PointSet all = full_set(n);
    for (PointSet c = 0;; ++c) {
        if (s.topology.is_closed(c))
            for (std::size_t x = 0; x < n; ++x) {
                if (contains(c, x)) continue;
                // The largest value f(x) can take with f|_C = 0 and f in
                // LIP_{b,1} is the recovered distance from x to C.
                const ExtValue reach = distance_to_set(rho, x, c);
                if (reach.is_zero() || reach < distance_to_set(s.metric, x, c)) return false;
            }
        if (c == all) break;
    }
    return true;
}

inline bool condition_v(const Space& s, const ExtPseudoMetric& rho) {
    const std::size_t n = s.size();
    ExtValue bound(1);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (rho(a, b).is_finite()) bound = maximum(bound, saturating_sum(rho(a, b), ExtValue(1)));
    // Lambda = { delta_{y,t} : y in X, t >= bound } with
    // delta_{y,t}(a,b) = |min(rho(a,y),t) - min(rho(b,y),t)|. For t >= bound the
    // value only changes when exactly one of rho(a,y), rho(b,y) is infinite, in
    // which case it grows without bound in t.
    auto delta = [&](std::size_t y, const ExtValue& t, std::size_t a, std::size_t b) {
        return abs_difference(minimum(rho(a, y), t), minimum(rho(b, y), t));
    };
    ExtPseudoMetric sup(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            ExtValue best(0);
            for (std::size_t y = 0; y < n; ++y) {
                if (rho(a, y).is_infinite() != rho(b, y).is_infinite()) {
                    best = ExtValue::infinity();
                    break;
                }
                best = maximum(best, delta(y, bound, a, b));
            }
            sup.set(a, b, best);
        }
    if (sup != s.metric) return false;
    // Initial topology of the real functions delta(., x): the partition into
    // common fibres. Growing t only refines fibres through the infinite case,
    // which is already separated at t = bound.
    detail::UnionFind uf(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            bool together = true;
            for (std::size_t y = 0; y < n && together; ++y)
                for (std::size_t x = 0; x < n && together; ++x)
                    together = delta(y, bound, a, x) == delta(y, bound, b, x);
            if (together) uf.unite(a, b);
        }
    return partition_topology(Partition::from_union_find(uf)) == s.topology;
}

inline bool condition_viii(const Space& s, const Caps& caps) {
    std::vector<Space> targets{*gamma_bar(s).object};
    if (is_extended_metric(s.metric)) targets.push_back(make_space(FiniteTopology::discrete(s.size()), s.metric));
    for (const auto& t : targets) {
        if (!is_emt(t)) continue;
        if (auto f = find_embedding(s, t, caps)) {
            CSMorphism phi{share(s), share(t), *f};
            if (validate_morphism(phi) && is_embedding(phi)) return true;
        }
    }
    return false;
}

} // namespace detail

/// Evaluates the eight conditions on a finite space with extended metric and
/// Hausdorff topology. With `relaxed` the Hausdorff requirement is dropped.
/// Spaces above caps.oracle_points points throw CapExceeded.
inline TheoremBReport theoremB_check(const Space& s, bool relaxed = false, const Caps& caps = {}) {
    require_space(s, "theoremB_check");
    if (!is_extended_metric(s.metric)) throw InvalidInput("theoremB_check: distance is not an extended metric");
    if (!relaxed && !is_hausdorff(s.topology)) throw InvalidInput("theoremB_check: topology is not Hausdorff");
    if (s.size() > caps.oracle_points)
        throw CapExceeded("theoremB_check: " + std::to_string(s.size()) + " points exceeds cap " +
                          std::to_string(caps.oracle_points));
    const auto rho = recovered_distance(s);
    TheoremBReport r;
    r.relaxed = relaxed;
    auto& c = r.conditions;
    c[0] = is_emt(s);
    c[1] = detail::condition_ii(s, rho, caps);
    c[2] = detail::condition_iii(s, rho);
    c[3] = detail::condition_iv(s, rho);
    c[4] = detail::condition_v(s, rho);
    c[5] = is_isomorphism(emt_fication(s).unit);
    c[6] = is_embedding(gamma_bar(s).unit);
    c[7] = detail::condition_viii(s, caps);
    r.all_equal = std::all_of(c.begin(), c.end(), [&](bool b) { return b == c[0]; });
    r.core_consistent = c[0] == c[5] && c[0] == c[6] && c[0] == c[7];
    return r;
}

} // namespace emtkit
