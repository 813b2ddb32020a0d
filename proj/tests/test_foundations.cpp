#include "emtkit/caps.hpp"
#include "emtkit/ext_value.hpp"
#include "emtkit/fin_map.hpp"
#include "emtkit/partition.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace emtkit;

namespace {

ExtValue v(const char* s) { return ExtValue::parse(s); }

ExtValue random_value(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 9);
    int k = pick(rng);
    if (k == 0) return ExtValue::infinity();
    return ExtValue(pick(rng), 1 + pick(rng));
}

} // namespace

TEST(ExtValue, SaturatingSumExamples) {
    EXPECT_EQ(saturating_sum(ExtValue(1, 2), ExtValue(1, 3)), ExtValue(5, 6));
    EXPECT_EQ(saturating_sum(ExtValue::infinity(), ExtValue(0)), ExtValue::infinity());
    EXPECT_EQ(saturating_sum(ExtValue(2), ExtValue::infinity()), ExtValue::infinity());
}

TEST(ExtValue, MinimumExamples) {
    EXPECT_EQ(minimum(ExtValue(3), ExtValue::infinity()), ExtValue(3));
    EXPECT_EQ(minimum(ExtValue(1, 2), ExtValue(1, 3)), ExtValue(1, 3));
    EXPECT_EQ(minimum(ExtValue::infinity(), ExtValue::infinity()), ExtValue::infinity());
}

TEST(ExtValue, LowestTermsAndOrder) {
    EXPECT_EQ(ExtValue(2, 4), ExtValue(1, 2));
    EXPECT_EQ(ExtValue(2, 4).numerator(), 1);
    EXPECT_EQ(ExtValue(2, 4).denominator(), 2);
    EXPECT_LT(ExtValue(1, 3), ExtValue(1, 2));
    EXPECT_LT(ExtValue(1000000), ExtValue::infinity());
    EXPECT_FALSE(ExtValue::infinity() < ExtValue::infinity());
}

TEST(ExtValue, TextRoundTrip) {
    for (const char* s : {"0", "1", "1/2", "7/3", "inf", "12345/7"}) EXPECT_EQ(v(s).to_string(), s);
    EXPECT_EQ(v("4/6").to_string(), "2/3");
}

TEST(ExtValue, ParseRejectsMalformed) {
    for (const char* s : {"-1", "+1", "1/0", "", "abc", "1/", "/2", "1.5", "inf ", " 1", "1/-2", "Inf"})
        EXPECT_THROW(ExtValue::parse(s), ParseError) << s;
}

TEST(ExtValue, NegativeConstructionRejected) {
    EXPECT_THROW(ExtValue(-1), InvalidInput);
    EXPECT_THROW(ExtValue(1, 0), InvalidInput);
}

TEST(ExtValue, DifferenceWhenDefined) {
    EXPECT_EQ(*difference(ExtValue(1), ExtValue(1, 3)), ExtValue(2, 3));
    EXPECT_FALSE(difference(ExtValue(1, 3), ExtValue(1)).has_value());
    EXPECT_EQ(*difference(ExtValue::infinity(), ExtValue(5)), ExtValue::infinity());
}

TEST(ExtValue, MonoidLawsOnRandomTriples) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        auto a = random_value(rng), b = random_value(rng), c = random_value(rng);
        EXPECT_EQ(saturating_sum(a, b), saturating_sum(b, a));
        EXPECT_EQ(saturating_sum(saturating_sum(a, b), c), saturating_sum(a, saturating_sum(b, c)));
        EXPECT_EQ(saturating_sum(a, ExtValue(0)), a);
        // order compatibility
        if (a <= b) { EXPECT_LE(saturating_sum(a, c), saturating_sum(b, c)); }
    }
}

TEST(Partition, CanonicalNumberingBySmallestMember) {
    auto p = Partition::from_labels(std::vector<std::size_t>{5, 3, 5, 9});
    EXPECT_EQ(p.class_count(), 3u);
    EXPECT_EQ(p.class_of(0), 0u);
    EXPECT_EQ(p.class_of(2), 0u);
    EXPECT_EQ(p.class_of(1), 1u);
    EXPECT_EQ(p.class_of(3), 2u);
    EXPECT_EQ(p.members(0), (std::vector<std::size_t>{0, 2}));
}

TEST(Partition, JoinExamples) {
    auto single = Partition::singletons(3);
    auto p01 = Partition::from_labels(std::vector<std::size_t>{0, 0, 1});
    auto p12 = Partition::from_labels(std::vector<std::size_t>{0, 1, 1});
    EXPECT_EQ(join_partitions(single, p01), p01);
    EXPECT_EQ(join_partitions(p01, p12), Partition::whole(3));
    EXPECT_EQ(join_partitions(p01, p01), p01);
    EXPECT_THROW(join_partitions(p01, Partition::singletons(2)), InvalidInput);
}

TEST(Partition, JoinLatticeLaws) {
    std::mt19937_64 rng(11);
    auto random_partition = [&](std::size_t n) {
        std::vector<std::size_t> labels(n);
        for (auto& l : labels) l = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
        return Partition::from_labels(labels);
    };
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 1 + i % 7;
        auto a = random_partition(n), b = random_partition(n), c = random_partition(n);
        EXPECT_EQ(join_partitions(a, b), join_partitions(b, a));
        EXPECT_EQ(join_partitions(join_partitions(a, b), c), join_partitions(a, join_partitions(b, c)));
        EXPECT_EQ(join_partitions(a, a), a);
        EXPECT_EQ(join_partitions(a, Partition::singletons(n)), a);
        // the join is coarser than both inputs
        auto j = join_partitions(a, b);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (a.same_class(x, y) || b.same_class(x, y)) { EXPECT_TRUE(j.same_class(x, y)); }
    }
}

TEST(FinMap, RangeChecked) {
    EXPECT_THROW(FinMap(2, {0, 2}), InvalidInput);
    FinMap f(3, {2, 0});
    EXPECT_EQ(f.source_size(), 2u);
    EXPECT_TRUE(f.is_injective());
    EXPECT_FALSE(f.is_surjective());
}

TEST(FinMap, CompositionAndIdentity) {
    FinMap f(3, {2, 0, 0});
    FinMap g(2, {1, 1, 0});
    EXPECT_EQ(compose(g, f), FinMap(2, {0, 1, 1}));
    EXPECT_EQ(compose(f, FinMap::identity(3)), f);
    EXPECT_EQ(compose(FinMap::identity(3), f), f);
    EXPECT_THROW(compose(f, g), InvalidInput);
}

TEST(Caps, ParseAndReject) {
    auto c = Caps::parse("product=10,search=5");
    EXPECT_EQ(c.product_points, 10u);
    EXPECT_EQ(c.search_nodes, 5u);
    EXPECT_EQ(c.enumeration, Caps{}.enumeration);
    EXPECT_THROW(Caps::parse("bogus=1"), ParseError);
    EXPECT_THROW(Caps::parse("product=x"), ParseError);
    EXPECT_THROW(Caps::parse("product"), ParseError);
}
