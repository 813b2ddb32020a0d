#include "emtkit/enumerate.hpp"
#include "emtkit/topology.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

using namespace emtkit;

namespace {

// Oracle: U_x as the intersection of every open set of an explicit family that
// contains x.
std::vector<PointSet> neighborhoods_by_intersection(std::size_t n, const std::vector<PointSet>& opens) {
    std::vector<PointSet> out(n, full_set(n));
    for (auto o : opens)
        for (std::size_t x = 0; x < n; ++x)
            if (contains(o, x)) out[x] &= o;
    return out;
}

// Oracle: two points share a continuity class iff every function into
// {0,1,2} with open preimages agrees on them. Functions are enumerated
// exhaustively.
Partition classes_by_functions(const FiniteTopology& t) {
    const std::size_t n = t.size();
    std::vector<std::vector<int>> continuous;
    std::vector<int> f(n, 0);
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == n) {
            for (int v = 0; v < 3; ++v) {
                PointSet pre = 0;
                for (std::size_t x = 0; x < n; ++x)
                    if (f[x] == v) pre |= singleton(x);
                if (!t.is_open(pre)) return;
            }
            continuous.push_back(f);
            return;
        }
        for (int v = 0; v < 3; ++v) {
            f[i] = v;
            go(i + 1);
        }
    };
    go(0);
    std::vector<std::size_t> labels(n);
    for (std::size_t x = 0; x < n; ++x) {
        labels[x] = x;
        for (std::size_t y = 0; y < x; ++y) {
            bool same = true;
            for (const auto& g : continuous) same = same && g[x] == g[y];
            if (same) {
                labels[x] = labels[y];
                break;
            }
        }
    }
    return Partition::from_labels(labels);
}

} // namespace

TEST(ValidateTopology, Examples) {
    const PointSet sierpinski[] = {0b00, 0b10, 0b11};
    EXPECT_TRUE(validate_topology(2, sierpinski));
    const PointSet broken[] = {0b00, 0b01, 0b10};
    auto v = validate_topology(2, broken);
    EXPECT_FALSE(v);
    std::vector<PointSet> power;
    for (PointSet s = 0; s < 8; ++s) power.push_back(s);
    EXPECT_TRUE(validate_topology(3, power));
}

TEST(ValidateTopology, ReportsViolatingPair) {
    const PointSet family[] = {0b000, 0b001, 0b010, 0b111};
    auto v = validate_topology(3, family);
    ASSERT_FALSE(v);
    EXPECT_EQ(v.reason, "not closed under union");
    EXPECT_EQ(v.witness, (std::vector<std::size_t>{0b001, 0b010}));
}

TEST(MinimalNeighborhoods, Examples) {
    auto s = FiniteTopology::sierpinski();
    EXPECT_EQ(s.minimal_neighborhood(0), PointSet{0b11});
    EXPECT_EQ(s.minimal_neighborhood(1), PointSet{0b10});
    auto d = FiniteTopology::discrete(3);
    for (std::size_t x = 0; x < 3; ++x) EXPECT_EQ(d.minimal_neighborhood(x), singleton(x));
    auto i = FiniteTopology::indiscrete(2);
    EXPECT_EQ(i.minimal_neighborhood(0), PointSet{0b11});
    EXPECT_EQ(i.minimal_neighborhood(1), PointSet{0b11});
}

TEST(MinimalNeighborhoods, AgreeWithIntersectionOracleOnAllSmallTopologies) {
    for (std::size_t n = 0; n <= 4; ++n)
        for (const auto& t : enumerate_topologies(n)) {
            const auto opens = t.opens();
            EXPECT_EQ(minimal_neighborhoods(t), neighborhoods_by_intersection(n, opens));
            EXPECT_EQ(FiniteTopology::from_opens(n, opens), t);
            EXPECT_TRUE(validate_topology(n, opens));
        }
}

TEST(EnumerateTopologies, CountsMatchPreorderNumbers) {
    const std::size_t expected[] = {1, 1, 4, 29, 355};
    for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(enumerate_topologies(n).size(), expected[n]);
}

TEST(SpecializationPreorder, RoundTrip) {
    for (const auto& t : enumerate_topologies(3)) {
        auto p = t.specialization_preorder();
        for (std::size_t x = 0; x < 3; ++x) EXPECT_TRUE(p.leq[x][x]);
        EXPECT_EQ(FiniteTopology::from_preorder(p), t);
    }
}

TEST(ContinuityPartition, Examples) {
    EXPECT_EQ(continuity_partition(FiniteTopology::sierpinski()), Partition::whole(2));
    EXPECT_EQ(continuity_partition(FiniteTopology::discrete(3)), Partition::singletons(3));
    // opens {}, {0}, {2}, {0,2}, {0,1,2}: 1 is glued to both 0 and 2
    auto t = FiniteTopology::from_opens(3, {0b000, 0b001, 0b100, 0b101, 0b111});
    EXPECT_EQ(continuity_partition(t), Partition::whole(3));
}

TEST(ContinuityPartition, MatchesFunctionOracleOnAllSmallTopologies) {
    for (std::size_t n = 0; n <= 4; ++n)
        for (const auto& t : enumerate_topologies(n)) EXPECT_EQ(continuity_partition(t), classes_by_functions(t));
}

TEST(PartitionTopology, ClassesAreMinimalNeighborhoods) {
    auto p = Partition::from_labels(std::vector<std::size_t>{0, 1, 0});
    auto t = partition_topology(p);
    EXPECT_EQ(t.minimal_neighborhood(0), PointSet{0b101});
    EXPECT_EQ(t.minimal_neighborhood(1), PointSet{0b010});
    EXPECT_EQ(continuity_partition(t), p);
}

TEST(Continuity, BothRoutesAgreeOnAllMapsBetweenSmallSpaces) {
    const auto t2 = enumerate_topologies(2);
    const auto t3 = enumerate_topologies(3);
    for (const auto& a : t3)
        for (const auto& b : t2)
            for (std::size_t code = 0; code < 8; ++code) {
                FinMap f(2, {code & 1, (code >> 1) & 1, (code >> 2) & 1});
                EXPECT_EQ(detail::continuous_by_neighborhoods(f, a, b), detail::continuous_by_preimages(f, a, b));
                EXPECT_NO_THROW(is_continuous(f, a, b));
            }
}

TEST(Continuity, SierpinskiExamples) {
    auto s = FiniteTopology::sierpinski();
    auto i = FiniteTopology::indiscrete(2);
    auto d = FiniteTopology::discrete(2);
    EXPECT_TRUE(is_continuous(FinMap::identity(2), d, s));
    EXPECT_FALSE(is_continuous(FinMap::identity(2), s, d));
    EXPECT_FALSE(is_continuous(FinMap::identity(2), i, s));
    EXPECT_TRUE(is_continuous(FinMap::identity(2), s, i));
    EXPECT_THROW(is_continuous(FinMap::identity(3), d, s), InvalidInput);
}

TEST(Product, NeighborhoodsAreProductsAndProjectionsContinuous) {
    const FiniteTopology factors[] = {FiniteTopology::sierpinski(), FiniteTopology::discrete(3)};
    auto p = topology_product(factors);
    ASSERT_EQ(p.size(), 6u);
    const std::size_t sizes[] = {2, 3};
    for (std::size_t i = 0; i < 6; ++i) {
        auto ci = product_coordinates(i, sizes);
        EXPECT_EQ(product_index(ci, sizes), i);
        for (std::size_t j = 0; j < 6; ++j) {
            auto cj = product_coordinates(j, sizes);
            EXPECT_EQ(p.leq(j, i), factors[0].leq(cj[0], ci[0]) && factors[1].leq(cj[1], ci[1]));
        }
    }
    for (std::size_t k = 0; k < 2; ++k) {
        std::vector<std::size_t> img;
        for (std::size_t i = 0; i < 6; ++i) img.push_back(product_coordinates(i, sizes)[k]);
        EXPECT_TRUE(is_continuous(FinMap(sizes[k], img), p, factors[k]));
    }
}

TEST(Product, CapExceeded) {
    std::vector<FiniteTopology> factors(4, FiniteTopology::discrete(3));
    Caps caps;
    caps.product_points = 27;
    EXPECT_THROW(topology_product(factors, caps), CapExceeded);
    factors.pop_back();
    EXPECT_EQ(topology_product(factors, caps).size(), 27u);
}

TEST(Product, EmptyProductIsPoint) {
    EXPECT_EQ(topology_product(std::vector<FiniteTopology>{}).size(), 1u);
}

TEST(Subspace, RelativeTopology) {
    // chain 0 <= 1 <= 2 (U_2 = {0,1,2}); subspace {0,2} keeps 0 <= 2
    auto t = FiniteTopology::from_minimal_neighborhoods({0b001, 0b011, 0b111});
    auto s = topology_subspace(t, 0b101);
    EXPECT_EQ(s.size(), 2u);
    EXPECT_TRUE(s.leq(0, 1));
    EXPECT_FALSE(s.leq(1, 0));
    // relative opens are traces of opens
    for (auto o : s.opens()) {
        bool found = false;
        for (auto big : t.opens()) {
            PointSet trace = (contains(big, 0) ? 1 : 0) | (contains(big, 2) ? 2 : 0);
            found = found || trace == o;
        }
        EXPECT_TRUE(found);
    }
}

TEST(Quotient, FinalTopologyMatchesPreimageDefinition) {
    std::mt19937_64 rng(3);
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& t : enumerate_topologies(n)) {
            std::vector<std::size_t> labels(n);
            for (auto& l : labels) l = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
            auto p = Partition::from_labels(labels);
            auto q = topology_quotient(t, p);
            // V open in the quotient iff its preimage is open
            for (PointSet v = 0; v <= full_set(p.class_count()); ++v) {
                PointSet pre = 0;
                for (std::size_t x = 0; x < n; ++x)
                    if (contains(v, p.class_of(x))) pre |= singleton(x);
                EXPECT_EQ(q.is_open(v), t.is_open(pre));
                if (v == full_set(p.class_count())) break;
            }
        }
}

TEST(DisjointUnion, Blocks) {
    const FiniteTopology parts[] = {FiniteTopology::sierpinski(), FiniteTopology::discrete(1)};
    auto u = topology_disjoint_union(parts);
    EXPECT_EQ(u.minimal_neighborhood(0), PointSet{0b011});
    EXPECT_EQ(u.minimal_neighborhood(1), PointSet{0b010});
    EXPECT_EQ(u.minimal_neighborhood(2), PointSet{0b100});
}

TEST(Hausdorff, FiniteHausdorffIsDiscrete) {
    for (std::size_t n = 0; n <= 4; ++n)
        for (const auto& t : enumerate_topologies(n)) EXPECT_EQ(is_hausdorff(t), t.is_discrete());
}

TEST(Opens, CapExceeded) {
    auto t = FiniteTopology::discrete(20);
    EXPECT_THROW(t.opens(1000), CapExceeded);
}
