#include "emtkit/functors.hpp"
#include "emtkit/generator.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace emtkit;

namespace {

ExtValue inf() { return ExtValue::infinity(); }

Space sierpinski_d1() {
    return make_space(FiniteTopology::sierpinski(), ExtPseudoMetric::uniform(2, 1), {"a", "b"});
}

Space pair(const ExtValue& d) { return make_space(FiniteTopology::discrete(2), ExtPseudoMetric::uniform(2, d)); }

GenConfig small_config(std::size_t max_points) {
    GenConfig cfg;
    cfg.max_points = max_points;
    cfg.min_points = 0;
    return cfg;
}

// Two random composable maps X -> Y -> Z that are continuous-short, or none if
// some hom-set is empty.
std::optional<std::pair<CSMorphism, CSMorphism>> random_composable(std::mt19937_64& rng, const SpacePtr& x,
                                                                   const SpacePtr& y, const SpacePtr& z) {
    auto f = enumerate_cs_morphisms(x, y);
    auto g = enumerate_cs_morphisms(y, z);
    if (f.empty() || g.empty()) return std::nullopt;
    return std::pair{f[rng() % f.size()], g[rng() % g.size()]};
}

} // namespace

TEST(EmtFication, SierpinskiCollapsesToPoint) {
    auto r = emt_fication(sierpinski_d1());
    EXPECT_EQ(r.object->size(), 1u);
    EXPECT_EQ(r.object->names, std::vector<std::string>{"{a,b}"});
    EXPECT_EQ(r.unit.map, FinMap(1, {0, 0}));
    EXPECT_EQ(r.tag, "emt");
}

TEST(EmtFication, EmtInputGivesIsomorphicUnit) {
    auto s = make_space(FiniteTopology::discrete(3),
                        ExtPseudoMetric::from_rows({{0, 1, inf()}, {1, 0, inf()}, {inf(), inf(), 0}}));
    auto r = emt_fication(s);
    EXPECT_TRUE(is_isomorphism(r.unit));
    EXPECT_EQ(r.object->names, s.names);
}

TEST(EmtFication, PseudometricZeroMerge) {
    auto s = make_space(FiniteTopology::discrete(3),
                        ExtPseudoMetric::from_rows({{0, 0, 1}, {0, 0, 1}, {1, 1, 0}}));
    auto r = emt_fication(s);
    ASSERT_EQ(r.object->size(), 2u);
    EXPECT_EQ(r.object->metric, ExtPseudoMetric::uniform(2, 1));
    EXPECT_TRUE(r.object->topology.is_discrete());
}

TEST(EmtFication, IdempotentRecoveryPreservingAndQuotient) {
    std::mt19937_64 rng(31);
    auto cfg = small_config(5);
    for (int i = 0; i < 400; ++i) {
        auto s = random_instance(rng, cfg);
        auto r = emt_fication(s);
        EXPECT_TRUE(is_emt(*r.object));
        EXPECT_LE(r.object->size(), s.size());
        EXPECT_TRUE(r.object->topology.is_discrete());
        EXPECT_TRUE(r.unit.map.is_surjective());
        EXPECT_TRUE(is_isomorphism(emt_fication(*r.object).unit));
        if (is_recovered(s)) { EXPECT_TRUE(is_distance_preserving(r.unit.map, s.metric, r.object->metric)); }
        // the output metric is the recovered distance pushed to classes
        auto rho = recovered_distance(s);
        for (std::size_t x = 0; x < s.size(); ++x)
            for (std::size_t y = 0; y < s.size(); ++y) EXPECT_EQ(r.object->metric(r.unit(x), r.unit(y)), rho(x, y));
        // topological quotient: discrete quotient means preimages of points are open
        for (std::size_t c = 0; c < r.object->size(); ++c) {
            PointSet pre = 0;
            for (std::size_t x = 0; x < s.size(); ++x)
                if (r.unit(x) == c) pre |= singleton(x);
            EXPECT_TRUE(s.topology.is_open(pre));
        }
    }
}

TEST(EmtFication, MorphismsCommuteAndCompose) {
    std::mt19937_64 rng(32);
    auto cfg = small_config(3);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        auto x = share(random_instance(rng, cfg));
        auto y = share(random_instance(rng, cfg));
        auto z = share(random_instance(rng, cfg));
        auto fg = random_composable(rng, x, y, z);
        auto id = emt_fication_morphism(identity_morphism(x));
        EXPECT_EQ(id.map, FinMap::identity(id.source->size()));
        if (!fg) continue;
        auto [f, g] = *fg;
        auto ex = emt_fication(*x), ey = emt_fication(*y), ez = emt_fication(*z);
        auto fc = emt_fication_morphism(f, ex, ey);
        auto gc = emt_fication_morphism(g, ey, ez);
        EXPECT_EQ(compose(ey.unit.map, f.map), compose(fc.map, ex.unit.map));
        EXPECT_EQ(emt_fication_morphism(compose(g, f), ex, ez).map, compose(gc.map, fc.map));
        ++checked;
    }
    EXPECT_GT(checked, 50);
}

TEST(StoneCech, Examples) {
    auto [b, i] = stone_cech_finite(FiniteTopology::discrete(3));
    EXPECT_EQ(b, FiniteTopology::discrete(3));
    EXPECT_EQ(i, FinMap::identity(3));
    auto [bs, is] = stone_cech_finite(FiniteTopology::sierpinski());
    EXPECT_EQ(bs.size(), 1u);
    auto [bp, ip] = stone_cech_finite(partition_topology(Partition::from_labels(std::vector<std::size_t>{0, 0, 1})));
    EXPECT_EQ(bp, FiniteTopology::discrete(2));
    EXPECT_EQ(ip, FinMap(2, {0, 0, 1}));
}

TEST(Compactify, FiniteEmtIsItsOwnCompactification) {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 200; ++i) {
        auto s = random_emt(rng, 0, 5);
        auto g = compactify(s);
        EXPECT_TRUE(is_isomorphism(g.unit));
        EXPECT_EQ(g.tag, "gamma");
    }
    EXPECT_EQ(compactify(make_space(FiniteTopology::discrete(0), ExtPseudoMetric(0))).object->size(), 0u);
    EXPECT_EQ(compactify(make_space(FiniteTopology::discrete(1), ExtPseudoMetric(1))).object->size(), 1u);
    EXPECT_THROW(compactify(sierpinski_d1()), InvalidInput);
}

TEST(GammaBar, ComposesEmtAndGamma) {
    auto r = gamma_bar(sierpinski_d1());
    EXPECT_EQ(r.object->size(), 1u);
    std::mt19937_64 rng(34);
    auto cfg = small_config(4);
    for (int i = 0; i < 200; ++i) {
        auto s = random_instance(rng, cfg);
        auto gb = gamma_bar(s);
        auto e = emt_fication(s);
        EXPECT_TRUE(find_isomorphism(*gb.object, *e.object).has_value());
        EXPECT_EQ(gb.unit.map.source_size(), s.size());
        if (is_emt(s)) { EXPECT_TRUE(is_isomorphism(gb.unit)); }
    }
}

TEST(Discretize, Examples) {
    EXPECT_EQ(discretize(FiniteTopology::discrete(2), 1).object->metric, ExtPseudoMetric::uniform(2, 1));
    EXPECT_EQ(discretize(FiniteTopology::discrete(2), inf()).object->metric, ExtPseudoMetric::uniform(2, inf()));
    EXPECT_EQ(discretize(FiniteTopology::discrete(1), 7).object->metric, ExtPseudoMetric(1));
    EXPECT_THROW(discretize(FiniteTopology::sierpinski(), 1), InvalidInput);
    EXPECT_NO_THROW(discretize(FiniteTopology::sierpinski(), 1, false));
    EXPECT_THROW(discretize(FiniteTopology::discrete(2), 0), InvalidInput);
}

TEST(Discretize, EqualsTruncationOfInfinityDiscrete) {
    for (std::size_t n = 0; n <= 4; ++n)
        for (auto lambda : {ExtValue(1, 2), ExtValue(1), ExtValue(3)}) {
            auto direct = discretize(FiniteTopology::discrete(n), lambda);
            auto routed = truncate_functor(*discretize(FiniteTopology::discrete(n), inf()).object, lambda);
            EXPECT_EQ(*direct.object, *routed.object);
        }
    // on morphisms both routes act as the underlying map
    auto x = discretize(FiniteTopology::discrete(3), inf());
    auto y = discretize(FiniteTopology::discrete(2), inf());
    CSMorphism phi{x.object, y.object, FinMap(2, {0, 1, 1})};
    auto dx = discretize(FiniteTopology::discrete(3), 1), dy = discretize(FiniteTopology::discrete(2), 1);
    auto tx = truncate_functor(*x.object, 1), ty = truncate_functor(*y.object, 1);
    EXPECT_EQ(apply_functor(dx, dy, phi).map, apply_functor(tx, ty, phi).map);
}

TEST(MetricTopology, Examples) {
    EXPECT_TRUE(metric_topology_attach(ExtPseudoMetric::uniform(2, 1)).topology.is_discrete());
    EXPECT_TRUE(metric_topology_attach(ExtPseudoMetric::uniform(2, inf())).topology.is_discrete());
    EXPECT_EQ(metric_topology_attach(ExtPseudoMetric(0)).size(), 0u);
    EXPECT_THROW(metric_topology_attach(ExtPseudoMetric(2)), InvalidInput);
}

TEST(Truncate, Examples) {
    auto r = truncate_functor(pair(3), 1);
    EXPECT_EQ(r.object->metric, ExtPseudoMetric::uniform(2, 1));
    auto same = truncate_functor(pair(1), 5);
    EXPECT_TRUE(is_isomorphism(same.unit));
    EXPECT_EQ(truncate_functor(pair(inf()), 2).object->metric, ExtPseudoMetric::uniform(2, 2));
    EXPECT_EQ(r.tag, "trunc:1");
}

TEST(MetricCompletion, Examples) {
    std::mt19937_64 rng(35);
    for (int i = 0; i < 100; ++i) {
        auto s = random_emt(rng, 0, 5);
        auto r = metric_completion(s);
        EXPECT_TRUE(is_isomorphism(r.unit));
    }
    auto two = pair(inf());
    EXPECT_EQ(*metric_completion(two).object, two);
    auto one = make_space(FiniteTopology::discrete(1), ExtPseudoMetric(1));
    EXPECT_EQ(*metric_completion(one).object, one);
}

TEST(Geodesify, Examples) {
    auto r = geodesify(pair(1));
    EXPECT_EQ(r.object->metric, ExtPseudoMetric::uniform(2, inf()));
    EXPECT_EQ(r.direction, Direction::counit);
    EXPECT_EQ(r.flags, std::vector<std::string>{"degenerate-at-finite-scale"});
    EXPECT_EQ(r.unit.source, r.object);
    EXPECT_TRUE(validate_morphism(r.unit));
    auto one = make_space(FiniteTopology::discrete(1), ExtPseudoMetric(1));
    EXPECT_EQ(*geodesify(one).object, one);
    auto already = pair(inf());
    auto g = geodesify(already);
    EXPECT_EQ(*g.object, already);
    EXPECT_TRUE(is_isomorphism(g.unit));
    EXPECT_TRUE(is_geodesic(*r.object));
    EXPECT_FALSE(is_geodesic(pair(1)));
}

TEST(FunctorNames, ParseAndName) {
    for (const char* n : {"emt", "gamma", "gammabar", "mc", "geo", "T", "trunc:1/2", "disc:inf", "disc:3"})
        EXPECT_EQ(FunctorSpec::parse(n).name(), n);
    for (const char* n : {"trunc:inf", "trunc", "disc", "emt:1", "trunc:0", "bogus", "disc:-1"})
        EXPECT_THROW(FunctorSpec::parse(n), ParseError) << n;
}

TEST(Functoriality, EveryFunctorPreservesIdentitiesAndComposition) {
    std::mt19937_64 rng(36);
    const char* names[] = {"emt", "gamma", "gammabar", "mc", "geo", "T", "trunc:1", "disc:1", "disc:inf"};
    for (const char* name : names) {
        auto spec = FunctorSpec::parse(name);
        const bool any_input = spec.kind == FunctorKind::emt || spec.kind == FunctorKind::gammabar;
        int checked = 0;
        for (int i = 0; i < 120; ++i) {
            auto make = [&] {
                if (any_input) return share(random_instance(rng, small_config(3)));
                return share(random_emt(rng, 0, 3));
            };
            auto x = make(), y = make(), z = make();
            auto fx = apply_functor(spec, *x), fy = apply_functor(spec, *y), fz = apply_functor(spec, *z);
            auto id = apply_functor(fx, fx, identity_morphism(x));
            EXPECT_EQ(id.map, FinMap::identity(fx.object->size())) << name;
            auto fg = random_composable(rng, x, y, z);
            if (!fg) continue;
            auto [f, g] = *fg;
            auto lhs = apply_functor(fx, fz, compose(g, f));
            auto rhs = compose(apply_functor(fy, fz, g), apply_functor(fx, fy, f));
            EXPECT_EQ(lhs.map, rhs.map) << name;
            ++checked;
        }
        EXPECT_GT(checked, 10) << name;
    }
}
