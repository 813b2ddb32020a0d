#pragma once

/**
 * @file topology.hpp
 * @brief Topologies on finite sets of at most 64 points.
 *
 * A finite topology is determined by the minimal neighborhoods
 * U_x = (intersection of all opens containing x), and conversely the opens are
 * exactly the unions of minimal neighborhoods. FiniteTopology stores U_x as
 * bit masks; the explicit open family is materialized on demand. Both views
 * are canonical, so operator== is equality of topologies.
 *
 * Specialization preorder convention: x <= y iff x lies in U_y. Opens are the
 * down-sets of this preorder.
 */

#include "emtkit/caps.hpp"
#include "emtkit/error.hpp"
#include "emtkit/fin_map.hpp"
#include "emtkit/partition.hpp"
#include "emtkit/verdict.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace emtkit {

using PointSet = std::uint64_t;

inline constexpr std::size_t max_points = 64;

inline constexpr PointSet singleton(std::size_t x) { return PointSet{1} << x; }

inline constexpr PointSet full_set(std::size_t n) {
    return n >= 64 ? ~PointSet{0} : (PointSet{1} << n) - 1;
}

inline constexpr bool contains(PointSet s, std::size_t x) { return (s >> x) & 1u; }

inline constexpr bool is_subset(PointSet a, PointSet b) { return (a & ~b) == 0; }

inline std::vector<std::size_t> members(PointSet s) {
    std::vector<std::size_t> out;
    while (s) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
        s &= s - 1;
    }
    return out;
}

inline PointSet to_point_set(std::span<const std::size_t> points) {
    PointSet s = 0;
    for (auto p : points) s |= singleton(p);
    return s;
}

/// Checks the topology axioms on an explicit family of subsets of an n-point set.
/// On failure the witness holds the two offending opens (as bit patterns) or a
/// single out-of-range set.
inline Verdict validate_topology(std::size_t n, std::span<const PointSet> family) {
    if (n > max_points) return Verdict::fail("more than 64 points");
    std::vector<PointSet> opens(family.begin(), family.end());
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    const PointSet all = full_set(n);
    for (auto o : opens)
        if (!is_subset(o, all)) return Verdict::fail("open set outside the point range", {o});
    auto has = [&](PointSet s) { return std::binary_search(opens.begin(), opens.end(), s); };
    if (!has(0)) return Verdict::fail("missing the empty set");
    if (!has(all)) return Verdict::fail("missing the full set");
    for (std::size_t i = 0; i < opens.size(); ++i)
        for (std::size_t j = i + 1; j < opens.size(); ++j) {
            if (!has(opens[i] | opens[j]))
                return Verdict::fail("not closed under union", {opens[i], opens[j]});
            if (!has(opens[i] & opens[j]))
                return Verdict::fail("not closed under intersection", {opens[i], opens[j]});
        }
    return Verdict::pass();
}

/// Reflexive, transitive relation; leq[x][y] iff x <= y.
struct SpecializationPreorder {
    std::vector<std::vector<bool>> leq;

    std::size_t size() const noexcept { return leq.size(); }
};

class FiniteTopology {
public:
    /// The empty space.
    FiniteTopology() = default;

    /// From an explicit open family; throws InvalidInput if it is not a topology.
    static FiniteTopology from_opens(std::size_t n, std::span<const PointSet> family) {
        auto v = validate_topology(n, family);
        if (!v) throw InvalidInput("invalid topology: " + v.reason);
        FiniteTopology t;
        t.minimal_.assign(n, full_set(n));
        for (auto o : family)
            for (std::size_t x = 0; x < n; ++x)
                if (contains(o, x)) t.minimal_[x] &= o;
        return t;
    }

    static FiniteTopology from_opens(std::size_t n, std::initializer_list<PointSet> family) {
        return from_opens(n, std::span<const PointSet>(family.begin(), family.size()));
    }

    /// From minimal neighborhoods; requires x in U_x and y in U_x => U_y subset of U_x.
    static FiniteTopology from_minimal_neighborhoods(std::vector<PointSet> minimal) {
        const std::size_t n = minimal.size();
        if (n > max_points) throw InvalidInput("more than 64 points");
        for (std::size_t x = 0; x < n; ++x) {
            if (!contains(minimal[x], x) || !is_subset(minimal[x], full_set(n)))
                throw InvalidInput("minimal neighborhood of " + std::to_string(x) +
                                   " does not contain it or leaves the point range");
            for (auto y : members(minimal[x]))
                if (!is_subset(minimal[y], minimal[x]))
                    throw InvalidInput("minimal neighborhoods are not transitive at (" +
                                       std::to_string(x) + "," + std::to_string(y) + ")");
        }
        FiniteTopology t;
        t.minimal_ = std::move(minimal);
        return t;
    }

    static FiniteTopology from_preorder(const SpecializationPreorder& p) {
        std::vector<PointSet> minimal(p.size(), 0);
        for (std::size_t y = 0; y < p.size(); ++y)
            for (std::size_t x = 0; x < p.size(); ++x)
                if (p.leq[x][y]) minimal[y] |= singleton(x);
        return from_minimal_neighborhoods(std::move(minimal));
    }

    static FiniteTopology discrete(std::size_t n) {
        std::vector<PointSet> minimal(n);
        for (std::size_t x = 0; x < n; ++x) minimal[x] = singleton(x);
        return from_minimal_neighborhoods(std::move(minimal));
    }

    static FiniteTopology indiscrete(std::size_t n) {
        return from_minimal_neighborhoods(std::vector<PointSet>(n, full_set(n)));
    }

    /// Opens {}, {1}, {0,1}.
    static FiniteTopology sierpinski() { return from_opens(2, {0b00, 0b10, 0b11}); }

    std::size_t size() const noexcept { return minimal_.size(); }
    PointSet points() const noexcept { return full_set(size()); }
    PointSet minimal_neighborhood(std::size_t x) const { return minimal_.at(x); }
    const std::vector<PointSet>& minimal_neighborhoods() const noexcept { return minimal_; }

    bool leq(std::size_t x, std::size_t y) const { return contains(minimal_.at(y), x); }

    SpecializationPreorder specialization_preorder() const {
        SpecializationPreorder p;
        p.leq.assign(size(), std::vector<bool>(size(), false));
        for (std::size_t x = 0; x < size(); ++x)
            for (std::size_t y = 0; y < size(); ++y) p.leq[x][y] = leq(x, y);
        return p;
    }

    bool is_open(PointSet s) const {
        if (!is_subset(s, points())) return false;
        for (auto x : members(s))
            if (!is_subset(minimal_[x], s)) return false;
        return true;
    }

    bool is_closed(PointSet s) const { return is_subset(s, points()) && is_open(points() & ~s); }

    /// Smallest open set containing s.
    PointSet open_hull(PointSet s) const {
        PointSet out = 0;
        for (auto x : members(s)) out |= minimal_[x];
        return out;
    }

    /// Smallest closed set containing s.
    PointSet closure(PointSet s) const {
        PointSet out = 0;
        for (std::size_t x = 0; x < size(); ++x)
            if (minimal_[x] & s) out |= singleton(x);
        return out;
    }

    bool is_discrete() const {
        for (std::size_t x = 0; x < size(); ++x)
            if (minimal_[x] != singleton(x)) return false;
        return true;
    }

    /// The explicit open family, sorted by bit pattern. Throws CapExceeded when it
    /// would hold more than `cap` sets.
    std::vector<PointSet> opens(std::size_t cap = Caps{}.opens) const {
        std::vector<PointSet> out{0};
        for (std::size_t x = 0; x < size(); ++x) {
            const std::size_t before = out.size();
            for (std::size_t i = 0; i < before; ++i) {
                PointSet u = out[i] | minimal_[x];
                out.push_back(u);
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            if (out.size() > cap)
                throw CapExceeded("open family exceeds " + std::to_string(cap) + " sets");
        }
        return out;
    }

    friend bool operator==(const FiniteTopology&, const FiniteTopology&) = default;

private:
    std::vector<PointSet> minimal_;
};

inline std::vector<PointSet> minimal_neighborhoods(const FiniteTopology& t) {
    return t.minimal_neighborhoods();
}

/// Connected components of the relation "y in U_x". A real-valued function on
/// the space is continuous iff it is constant on every class.
inline Partition continuity_partition(const FiniteTopology& t) {
    detail::UnionFind uf(t.size());
    for (std::size_t x = 0; x < t.size(); ++x)
        for (auto y : members(t.minimal_neighborhood(x))) uf.unite(x, y);
    return Partition::from_union_find(uf);
}

/// Opens are the unions of classes.
inline FiniteTopology partition_topology(const Partition& p) {
    std::vector<PointSet> minimal(p.size());
    for (const auto& cls : p.classes()) {
        PointSet s = to_point_set(cls);
        for (auto x : cls) minimal[x] = s;
    }
    return FiniteTopology::from_minimal_neighborhoods(std::move(minimal));
}

namespace detail {

inline bool continuous_by_neighborhoods(const FinMap& f, const FiniteTopology& src,
                                        const FiniteTopology& dst) {
    for (std::size_t x = 0; x < src.size(); ++x) {
        const PointSet target_nbhd = dst.minimal_neighborhood(f(x));
        for (auto y : members(src.minimal_neighborhood(x)))
            if (!contains(target_nbhd, f(y))) return false;
    }
    return true;
}

// Preimages of the basic opens U_y are open. Basic opens suffice because
// preimages commute with unions.
inline bool continuous_by_preimages(const FinMap& f, const FiniteTopology& src,
                                    const FiniteTopology& dst) {
    for (std::size_t y = 0; y < dst.size(); ++y) {
        const PointSet basic = dst.minimal_neighborhood(y);
        PointSet pre = 0;
        for (std::size_t x = 0; x < src.size(); ++x)
            if (contains(basic, f(x))) pre |= singleton(x);
        if (!src.is_open(pre)) return false;
    }
    return true;
}

} // namespace detail

inline bool is_continuous(const FinMap& f, const FiniteTopology& src, const FiniteTopology& dst) {
    if (f.source_size() != src.size() || f.target_size() != dst.size())
        throw InvalidInput("is_continuous: size mismatch");
    const bool by_nbhd = detail::continuous_by_neighborhoods(f, src, dst);
    if (by_nbhd != detail::continuous_by_preimages(f, src, dst))
        throw ConsistencyError("is_continuous: neighborhood and preimage routes disagree");
    return by_nbhd;
}

/// Checked size of a product of sets; throws CapExceeded above `cap` points.
inline std::size_t product_size(std::span<const std::size_t> sizes, std::size_t cap) {
    std::size_t total = 1;
    for (auto s : sizes) {
        if (s == 0) return 0;
        if (total > cap / s + 1) throw CapExceeded("product exceeds " + std::to_string(cap) + " points");
        total *= s;
    }
    if (total > cap || total > max_points)
        throw CapExceeded("product exceeds " + std::to_string(std::min(cap, max_points)) + " points");
    return total;
}

/// Decodes a lexicographic product index (first factor most significant).
inline std::vector<std::size_t> product_coordinates(std::size_t index,
                                                    std::span<const std::size_t> sizes) {
    std::vector<std::size_t> coords(sizes.size());
    for (std::size_t i = sizes.size(); i-- > 0;) {
        coords[i] = index % sizes[i];
        index /= sizes[i];
    }
    return coords;
}

inline std::size_t product_index(std::span<const std::size_t> coords,
                                 std::span<const std::size_t> sizes) {
    std::size_t index = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) index = index * sizes[i] + coords[i];
    return index;
}

/// Product topology on the lexicographically indexed product; U_(x,y) = U_x x U_y.
inline FiniteTopology topology_product(std::span<const FiniteTopology> ts, const Caps& caps = {}) {
    std::vector<std::size_t> sizes;
    for (const auto& t : ts) sizes.push_back(t.size());
    const std::size_t total = product_size(sizes, caps.product_points);
    std::vector<std::vector<std::size_t>> coords(total);
    for (std::size_t i = 0; i < total; ++i) coords[i] = product_coordinates(i, sizes);
    std::vector<PointSet> minimal(total, 0);
    for (std::size_t i = 0; i < total; ++i)
        for (std::size_t j = 0; j < total; ++j) {
            bool inside = true;
            for (std::size_t k = 0; k < ts.size() && inside; ++k)
                inside = ts[k].leq(coords[j][k], coords[i][k]);
            if (inside) minimal[i] |= singleton(j);
        }
    return FiniteTopology::from_minimal_neighborhoods(std::move(minimal));
}

/// Relative topology on `subset`, reindexed in increasing point order.
inline FiniteTopology topology_subspace(const FiniteTopology& t, PointSet subset) {
    if (!is_subset(subset, t.points())) throw InvalidInput("topology_subspace: subset out of range");
    auto pts = members(subset);
    std::vector<PointSet> minimal(pts.size(), 0);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (contains(t.minimal_neighborhood(pts[i]), pts[j])) minimal[i] |= singleton(j);
    return FiniteTopology::from_minimal_neighborhoods(std::move(minimal));
}

/// Quotient (final) topology on the classes of p.
inline FiniteTopology topology_quotient(const FiniteTopology& t, const Partition& p) {
    if (p.size() != t.size()) throw InvalidInput("topology_quotient: size mismatch");
    const std::size_t k = p.class_count();
    // below[c] = classes c' with some x in c', y in c, x in U_y
    std::vector<PointSet> below(k, 0);
    for (std::size_t y = 0; y < t.size(); ++y)
        for (auto x : members(t.minimal_neighborhood(y))) below[p.class_of(y)] |= singleton(p.class_of(x));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t c = 0; c < k; ++c) {
            PointSet closure = below[c];
            for (auto d : members(below[c])) closure |= below[d];
            if (closure != below[c]) {
                below[c] = closure;
                changed = true;
            }
        }
    }
    return FiniteTopology::from_minimal_neighborhoods(std::move(below));
}

/// Coproduct topology; summand i occupies a contiguous block after summands 0..i-1.
inline FiniteTopology topology_disjoint_union(std::span<const FiniteTopology> ts) {
    std::vector<PointSet> minimal;
    std::size_t offset = 0;
    for (const auto& t : ts) {
        if (offset + t.size() > max_points) throw CapExceeded("disjoint union exceeds 64 points");
        for (std::size_t x = 0; x < t.size(); ++x) minimal.push_back(t.minimal_neighborhood(x) << offset);
        offset += t.size();
    }
    return FiniteTopology::from_minimal_neighborhoods(std::move(minimal));
}

/// Distinct points have disjoint neighborhoods. On finite spaces this is
/// equivalent to discreteness; the equivalence is asserted.
inline bool is_hausdorff(const FiniteTopology& t) {
    bool separated = true;
    for (std::size_t x = 0; x < t.size() && separated; ++x)
        for (std::size_t y = x + 1; y < t.size() && separated; ++y)
            separated = (t.minimal_neighborhood(x) & t.minimal_neighborhood(y)) == 0;
    if (separated != t.is_discrete()) throw ConsistencyError("finite Hausdorff space is not discrete");
    return separated;
}

} // namespace emtkit
