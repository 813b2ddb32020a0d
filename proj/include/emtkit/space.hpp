#pragma once

/**
 * @file space.hpp
 * @brief Pre-e.pm.t. spaces (a finite topology and an extended pseudometric on
 * the same points) and the maps between them.
 */

#include "emtkit/caps.hpp"
#include "emtkit/error.hpp"
#include "emtkit/fin_map.hpp"
#include "emtkit/metric.hpp"
#include "emtkit/topology.hpp"
#include "emtkit/verdict.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace emtkit {

struct Space {
    std::vector<std::string> names;
    FiniteTopology topology;
    ExtPseudoMetric metric;

    std::size_t size() const noexcept { return names.size(); }

    friend bool operator==(const Space&, const Space&) = default;
};

using SpacePtr = std::shared_ptr<const Space>;

/// Names default to "0", "1", ...
inline std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
    return out;
}

inline Space make_space(FiniteTopology t, ExtPseudoMetric m, std::vector<std::string> names = {}) {
    if (names.empty()) names = default_names(t.size());
    return Space{std::move(names), std::move(t), std::move(m)};
}

inline SpacePtr share(Space s) { return std::make_shared<const Space>(std::move(s)); }

inline Verdict validate_space(const Space& s) {
    if (s.topology.size() != s.names.size() || s.metric.size() != s.names.size())
        return Verdict::fail("point count mismatch between names, topology and metric");
    for (std::size_t i = 0; i < s.names.size(); ++i)
        for (std::size_t j = i + 1; j < s.names.size(); ++j)
            if (s.names[i] == s.names[j]) return Verdict::fail("duplicate point name " + s.names[i], {i, j});
    if (auto v = validate_pseudometric(s.metric); !v) return Verdict::fail("metric: " + v.reason, v.witness);
    return Verdict::pass();
}

inline void require_space(const Space& s, const char* where) {
    if (auto v = validate_space(s); !v) throw InvalidInput(std::string(where) + ": " + v.reason);
}

/// A map between spaces. Whether it is a morphism depends on the category it is
/// read in; CSMorphism names the continuous-short reading used throughout.
struct CSMorphism {
    SpacePtr source;
    SpacePtr target;
    FinMap map;

    std::size_t operator()(std::size_t x) const { return map(x); }
};

inline CSMorphism identity_morphism(const SpacePtr& s) { return {s, s, FinMap::identity(s->size())}; }

/// g after f.
inline CSMorphism compose(const CSMorphism& g, const CSMorphism& f) {
    return {f.source, g.target, compose(g.map, f.map)};
}

inline bool is_short(const FinMap& f, const ExtPseudoMetric& src, const ExtPseudoMetric& dst) {
    for (std::size_t x = 0; x < src.size(); ++x)
        for (std::size_t y = x + 1; y < src.size(); ++y)
            if (src(x, y) < dst(f(x), f(y))) return false;
    return true;
}

inline bool is_distance_preserving(const FinMap& f, const ExtPseudoMetric& src, const ExtPseudoMetric& dst) {
    for (std::size_t x = 0; x < src.size(); ++x)
        for (std::size_t y = x + 1; y < src.size(); ++y)
            if (src(x, y) != dst(f(x), f(y))) return false;
    return true;
}

inline Verdict validate_morphism(const CSMorphism& phi) {
    if (!phi.source || !phi.target) return Verdict::fail("missing source or target");
    if (phi.map.source_size() != phi.source->size() || phi.map.target_size() != phi.target->size())
        return Verdict::fail("map sizes do not match the spaces");
    const auto& f = phi.map;
    const auto& X = *phi.source;
    const auto& Y = *phi.target;
    for (std::size_t x = 0; x < X.size(); ++x)
        for (auto y : members(X.topology.minimal_neighborhood(x)))
            if (!Y.topology.leq(f(y), f(x))) return Verdict::fail("not continuous", {x, y});
    for (std::size_t x = 0; x < X.size(); ++x)
        for (std::size_t y = x + 1; y < X.size(); ++y)
            if (X.metric(x, y) < Y.metric(f(x), f(y))) return Verdict::fail("not short", {x, y});
    return Verdict::pass();
}

/// Lower semicontinuity of d on X x X: d(x,y) <= d(x',y') whenever x' is in U_x
/// and y' is in U_y.
inline bool is_lsc(const Space& s) {
    require_space(s, "is_lsc");
    for (std::size_t x = 0; x < s.size(); ++x)
        for (std::size_t y = 0; y < s.size(); ++y)
            for (auto xp : members(s.topology.minimal_neighborhood(x)))
                for (auto yp : members(s.topology.minimal_neighborhood(y)))
                    if (s.metric(xp, yp) < s.metric(x, y)) return false;
    return true;
}

/// Supremum of |f(x) - f(y)| over bounded continuous 1-Lipschitz real f. On a
/// finite space f is continuous iff constant on the continuity classes, so the
/// supremum is the chain quotient distance over those classes.
inline ExtPseudoMetric recovered_distance(const Space& s) {
    require_space(s, "recovered_distance");
    const Partition classes = continuity_partition(s.topology);
    const ExtPseudoMetric q = chain_quotient_metric(s.metric, classes);
    ExtPseudoMetric out(s.size());
    for (std::size_t x = 0; x < s.size(); ++x)
        for (std::size_t y = x + 1; y < s.size(); ++y) out.set(x, y, q(classes.class_of(x), classes.class_of(y)));
    return out;
}

inline bool is_recovered(const Space& s) { return recovered_distance(s) == s.metric; }

/// Independent oracle for recovered_distance(s)(x, y).
///
/// Continuity classes are found by brute force (two points share a class iff
/// every continuous {0,1}-valued function agrees on them) and the optimum of
/// max f(x) - f(y) over class-constant 1-Lipschitz f is obtained as the dual
/// minimum over all simple chains, enumerated exhaustively. No code is shared
/// with the Floyd-Warshall route.
inline ExtValue lip_sup_oracle(const Space& s, std::size_t x, std::size_t y, const Caps& caps = {}) {
    require_space(s, "lip_sup_oracle");
    const std::size_t n = s.size();
    if (n > caps.oracle_points)
        throw CapExceeded("lip_sup_oracle: " + std::to_string(n) + " points exceeds oracle cap " +
                          std::to_string(caps.oracle_points));
    if (x >= n || y >= n) throw InvalidInput("lip_sup_oracle: point out of range");

    std::vector<PointSet> clopen_indicators;
    for (PointSet f = 0; f <= full_set(n); ++f) {
        // {0,1}-valued f is continuous iff f^{-1}(1) and f^{-1}(0) are open.
        if (s.topology.is_open(f) && s.topology.is_open(full_set(n) & ~f)) clopen_indicators.push_back(f);
        if (f == full_set(n)) break;
    }
    auto same_class = [&](std::size_t a, std::size_t b) {
        for (auto f : clopen_indicators)
            if (contains(f, a) != contains(f, b)) return false;
        return true;
    };

    ExtValue best = ExtValue::infinity();
    std::vector<bool> visited(n, false);
    std::function<void(std::size_t, ExtValue)> walk = [&](std::size_t at, ExtValue cost) {
        if (best <= cost) return;
        if (at == y) {
            best = cost;
            return;
        }
        visited[at] = true;
        for (std::size_t next = 0; next < n; ++next) {
            if (visited[next]) continue;
            ExtValue step = same_class(at, next) ? ExtValue(0) : s.metric(at, next);
            if (step.is_infinite()) continue;
            walk(next, saturating_sum(cost, step));
        }
        visited[at] = false;
    };
    walk(x, ExtValue(0));
    return best;
}

/// The function z -> min(rho(z, y), rho(x, y)) with rho the recovered distance.
/// It is continuous, 1-Lipschitz and attains f(x) - f(y) = rho(x, y); requires
/// rho(x, y) finite.
inline std::vector<ExtValue> witness_function(const Space& s, std::size_t x, std::size_t y) {
    const auto rho = recovered_distance(s);
    if (rho(x, y).is_infinite()) throw InvalidInput("witness_function: points at infinite distance");
    std::vector<ExtValue> f(s.size());
    for (std::size_t z = 0; z < s.size(); ++z) f[z] = minimum(rho(z, y), rho(x, y));
    return f;
}

/// f is real-valued, constant on continuity classes and 1-Lipschitz for d.
inline bool is_lip1_continuous(const Space& s, const std::vector<ExtValue>& f) {
    if (f.size() != s.size()) return false;
    for (const auto& v : f)
        if (v.is_infinite()) return false;
    const Partition classes = continuity_partition(s.topology);
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b < s.size(); ++b) {
            if (classes.same_class(a, b) && f[a] != f[b]) return false;
            auto diff = difference(maximum(f[a], f[b]), minimum(f[a], f[b]));
            if (!diff || s.metric(a, b) < *diff) return false;
        }
    return true;
}

/// e.m.t. test. Computes the definitional route (extended metric, d recovered,
/// topology initial for the bounded 1-Lipschitz continuous functions) and the
/// finite-scale shortcut (Hausdorff topology and extended metric), and throws
/// ConsistencyError if they disagree.
inline bool is_emt(const Space& s) {
    require_space(s, "is_emt");
    const bool metric_ok = is_extended_metric(s.metric);
    const auto rho = recovered_distance(s);
    // The initial topology of a family of real functions on a finite set is the
    // partition topology of "agrees on every function"; for LIP_{b,1} two points
    // agree on every function iff their recovered distance is zero.
    const bool definitional =
        metric_ok && rho == s.metric && s.topology == partition_topology(zero_classes(rho));
    const bool shortcut = is_hausdorff(s.topology) && metric_ok;
    if (definitional != shortcut) throw ConsistencyError("is_emt: definitional and finite-scale routes disagree");
    return definitional;
}

/// Categories in which a diagram or a hom-set can be read.
enum class Category { set, top, extpmet, pre, emt };

inline const char* to_string(Category c) {
    switch (c) {
    case Category::set: return "SET";
    case Category::top: return "TOP";
    case Category::extpmet: return "EXTPMET";
    case Category::pre: return "PRE";
    case Category::emt: return "EMT";
    }
    return "?";
}

inline Category parse_category(const std::string& s) {
    if (s == "SET") return Category::set;
    if (s == "TOP") return Category::top;
    if (s == "EXTPMET") return Category::extpmet;
    if (s == "PRE") return Category::pre;
    if (s == "EMT") return Category::emt;
    throw ParseError("unknown category \"" + s + "\"");
}

inline bool uses_topology(Category c) { return c == Category::top || c == Category::pre || c == Category::emt; }
inline bool uses_metric(Category c) { return c == Category::extpmet || c == Category::pre || c == Category::emt; }

/// Whether f is a morphism X -> Y when read in category c (objects are not checked).
inline bool is_morphism(Category c, const Space& X, const Space& Y, const FinMap& f) {
    if (f.source_size() != X.size() || f.target_size() != Y.size()) return false;
    if (uses_topology(c) && !detail::continuous_by_neighborhoods(f, X.topology, Y.topology)) return false;
    if (uses_metric(c) && !is_short(f, X.metric, Y.metric)) return false;
    return true;
}

/// Whether X is an object of c (EMT requires the e.m.t. property).
inline bool is_object(Category c, const Space& X) {
    if (!validate_space(X)) return false;
    return c != Category::emt || is_emt(X);
}

/// Throws CapExceeded if |dst|^|src| > cap.
inline void check_hom_cap(std::size_t src, std::size_t dst, std::size_t cap) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < src; ++i) {
        if (dst == 0) return;
        if (total > cap / dst) throw CapExceeded("hom-set enumeration exceeds cap " + std::to_string(cap));
        total *= dst;
    }
    if (total > cap) throw CapExceeded("hom-set enumeration exceeds cap " + std::to_string(cap));
}

/// All maps X -> Y that are morphisms in c, in lexicographic order of their
/// image vectors. Backtracking prunes partial maps that already break
/// continuity or shortness.
inline std::vector<FinMap> enumerate_morphisms(Category c, const Space& X, const Space& Y,
                                               const Caps& caps = {}) {
    check_hom_cap(X.size(), Y.size(), caps.enumeration);
    const std::size_t n = X.size();
    std::vector<FinMap> out;
    if (n > 0 && Y.size() == 0) return out;
    std::vector<std::size_t> img(n);
    const bool top = uses_topology(c);
    const bool met = uses_metric(c);
    auto consistent = [&](std::size_t i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (met && X.metric(i, j) < Y.metric(img[i], img[j])) return false;
            if (top) {
                if (X.topology.leq(j, i) && !Y.topology.leq(img[j], img[i])) return false;
                if (X.topology.leq(i, j) && !Y.topology.leq(img[i], img[j])) return false;
            }
        }
        return true;
    };
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == n) {
            out.emplace_back(Y.size(), img);
            return;
        }
        for (std::size_t v = 0; v < Y.size(); ++v) {
            img[i] = v;
            if (consistent(i)) go(i + 1);
        }
    };
    go(0);
    return out;
}

inline std::vector<CSMorphism> enumerate_cs_morphisms(const SpacePtr& src, const SpacePtr& dst,
                                                      const Caps& caps = {}) {
    std::vector<CSMorphism> out;
    for (auto& f : enumerate_morphisms(Category::pre, *src, *dst, caps)) out.push_back({src, dst, std::move(f)});
    return out;
}

inline void require_morphism(const CSMorphism& phi, const char* where) {
    if (auto v = validate_morphism(phi); !v) throw InvalidInput(std::string(where) + ": " + v.reason);
}

/// Bijective, open and distance-preserving.
inline bool is_isomorphism(const CSMorphism& phi) {
    require_morphism(phi, "is_isomorphism");
    if (!phi.map.is_bijective()) return false;
    const auto& X = *phi.source;
    const auto& Y = *phi.target;
    for (std::size_t x = 0; x < X.size(); ++x) {
        PointSet image = 0;
        for (auto y : members(X.topology.minimal_neighborhood(x))) image |= singleton(phi(y));
        if (!Y.topology.is_open(image)) return false;
    }
    return is_distance_preserving(phi.map, X.metric, Y.metric);
}

/// Injective, distance-preserving, and a homeomorphism onto its image with the
/// relative topology.
inline bool is_embedding(const CSMorphism& phi) {
    require_morphism(phi, "is_embedding");
    if (!phi.map.is_injective()) return false;
    const auto& X = *phi.source;
    const auto& Y = *phi.target;
    if (!is_distance_preserving(phi.map, X.metric, Y.metric)) return false;
    PointSet image = 0;
    for (std::size_t x = 0; x < X.size(); ++x) image |= singleton(phi(x));
    for (std::size_t x = 0; x < X.size(); ++x) {
        PointSet mapped = 0;
        for (auto y : members(X.topology.minimal_neighborhood(x))) mapped |= singleton(phi(y));
        if (mapped != (Y.topology.minimal_neighborhood(phi(x)) & image)) return false;
    }
    return true;
}

/// Searches for an isomorphism X -> Y by backtracking over bijections, pruning
/// on neighborhood sizes and sorted distance rows.
inline std::optional<FinMap> find_isomorphism(const Space& X, const Space& Y, const Caps& caps = {}) {
    const std::size_t n = X.size();
    if (n != Y.size()) return std::nullopt;
    auto signature = [](const Space& s, std::size_t x) {
        std::vector<ExtValue> row;
        for (std::size_t y = 0; y < s.size(); ++y) row.push_back(s.metric(x, y));
        std::sort(row.begin(), row.end());
        std::size_t up = 0;
        for (std::size_t y = 0; y < s.size(); ++y) up += s.topology.leq(x, y);
        return std::tuple(std::popcount(s.topology.minimal_neighborhood(x)), up, row);
    };
    std::vector<decltype(signature(X, 0))> sx, sy;
    for (std::size_t i = 0; i < n; ++i) {
        sx.push_back(signature(X, i));
        sy.push_back(signature(Y, i));
    }
    std::vector<std::size_t> img(n);
    std::vector<bool> used(n, false);
    std::size_t nodes = 0;
    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
        if (i == n) return true;
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v] || sx[i] != sy[v]) continue;
            if (++nodes > caps.search_nodes) throw CapExceeded("find_isomorphism: search budget exhausted");
            bool ok = true;
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
    return FinMap(n, img);
}

} // namespace emtkit
