#include "emtkit/emtkit.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace emtkit;

namespace {

std::string fixture(const std::string& name) { return std::string(EMTKIT_FIXTURES) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct Run {
    int code = -1;
    std::string out;
};

// Runs the CLI with stderr discarded and returns its exit status and stdout.
Run run_cli(const std::string& args) {
    const std::string cmd = std::string(EMTKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string pointer_of(const std::string& text) {
    try {
        parse_space(parse_text(text));
    } catch (const ParseError& e) {
        return e.pointer();
    }
    return "<accepted>";
}

const char* pair_doc(const char* d01, const char* d10) {
    static std::string s;
    s = std::string(R"({"points":["x","y"],"opens":[[],["x"],["y"],["x","y"]],"dist":[["0",")") + d01 +
        R"("],[")" + d10 + R"(","0"]]})";
    return s.c_str();
}

} // namespace

TEST(JsonSpace, CanonicalDocumentsRoundTripByteIdentical) {
    for (const char* name : {"sierpinski.json", "path3.json"}) {
        const auto text = slurp(fixture(name));
        ASSERT_FALSE(text.empty()) << name;
        EXPECT_EQ(to_text(emit_space(parse_space(parse_text(text)))), text) << name;
    }
}

TEST(JsonSpace, ParsesSierpinski) {
    auto s = parse_space(parse_text(slurp(fixture("sierpinski.json"))));
    EXPECT_EQ(s.names, (std::vector<std::string>{"a", "b"}));
    EXPECT_EQ(s.topology, FiniteTopology::sierpinski());
    EXPECT_EQ(s.metric, ExtPseudoMetric::uniform(2, 1));
}

TEST(JsonSpace, RejectsNegativeDistance) {
    EXPECT_EQ(pointer_of(pair_doc("-1", "-1")), "/dist/0/1");
    EXPECT_EQ(pointer_of(pair_doc("1", "2")), "/dist/0/1");
    EXPECT_EQ(pointer_of(pair_doc("1", "1")), "<accepted>");
}

TEST(JsonSpace, RejectsDuplicateNamesUnknownKeysAndBadTopologies) {
    EXPECT_EQ(pointer_of(R"({"points":["x","x"],"opens":[[],["x"]],"dist":[["0","0"],["0","0"]]})"), "/points/1");
    EXPECT_EQ(pointer_of(R"({"points":[],"opens":[[]],"dist":[],"extra":1})"), "/extra");
    EXPECT_EQ(pointer_of(R"({"points":["x","y"],"opens":[[],["x"],["y"]],"dist":[["0","1"],["1","0"]]})"), "/opens");
    EXPECT_EQ(pointer_of(R"({"points":["x"],"opens":[[],["z"]],"dist":[["0"]]})"), "/opens/1/0");
    EXPECT_EQ(pointer_of(R"({"points":["x"],"opens":[[],["x"]],"dist":[["0","1"]]})"), "/dist/0");
    EXPECT_THROW(parse_text("{not json"), ParseError);
}

TEST(JsonSpace, LargeTopologiesUseNeighborhoods) {
    auto s = make_space(FiniteTopology::discrete(12), ExtPseudoMetric::uniform(12, ExtValue::infinity()));
    auto j = emit_space(s);
    EXPECT_FALSE(j.contains("opens"));
    ASSERT_TRUE(j.contains("neighborhoods"));
    auto back = parse_space(j);
    EXPECT_EQ(back, s);
    EXPECT_EQ(to_text(emit_space(back)), to_text(j));
}

TEST(JsonSpace, RandomSpacesRoundTrip) {
    std::mt19937_64 rng(51);
    GenConfig cfg;
    cfg.max_points = 5;
    cfg.min_points = 0;
    for (int i = 0; i < 300; ++i) {
        auto s = random_instance(rng, cfg);
        const auto text = to_text(emit_space(s));
        auto back = parse_space(parse_text(text));
        EXPECT_EQ(back, s);
        EXPECT_EQ(to_text(emit_space(back)), text);
    }
}

TEST(JsonDiagram, RoundTripAndArrowValidation) {
    const auto text = slurp(fixture("coequalizer.json"));
    auto d = parse_diagram(parse_text(text));
    EXPECT_EQ(d.category, Category::emt);
    ASSERT_EQ(d.arrows.size(), 2u);
    EXPECT_EQ(d.arrows[1].map, FinMap(3, {2}));
    EXPECT_EQ(to_text(emit_diagram(d)), text);
    // an arrow naming an unknown point is rejected
    auto bad = parse_text(text);
    bad["arrows"][0]["map"] = parse_text(R"({"p":"q"})");
    EXPECT_THROW(parse_diagram(bad), ParseError);
}

TEST(JsonCone, RoundTrip) {
    auto d = parse_diagram(parse_text(slurp(fixture("coequalizer.json"))));
    auto c = colimit(d);
    auto back = parse_cone(emit_cone(c), d);
    EXPECT_EQ(*back.apex, *c.apex);
    EXPECT_EQ(back.side, ConeSide::cocone);
    ASSERT_EQ(back.legs.size(), c.legs.size());
    for (std::size_t i = 0; i < c.legs.size(); ++i) EXPECT_EQ(back.legs[i].map, c.legs[i].map);
}

TEST(Generator, DeterministicAndValid) {
    GenConfig cfg;
    cfg.max_points = 6;
    cfg.min_points = 0;
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        cfg.seed = seed;
        auto s = random_instance(cfg);
        ASSERT_TRUE(validate_space(s)) << seed;
        if (seed < 50) { EXPECT_EQ(to_text(emit_space(random_instance(cfg))), to_text(emit_space(s))); }
    }
}

TEST(Generator, Examples) {
    GenConfig cfg;
    cfg.seed = 1;
    cfg.max_points = 3;
    cfg.topology_mode = TopologyMode::discrete;
    auto s = random_instance(cfg);
    EXPECT_EQ(s.size(), 3u);
    EXPECT_TRUE(s.topology.is_discrete());
    cfg.infinity_probability = 1;
    EXPECT_EQ(random_instance(cfg).metric, ExtPseudoMetric::uniform(3, ExtValue::infinity()));
    cfg.max_points = 0;
    EXPECT_EQ(random_instance(cfg).size(), 0u);
    cfg.max_points = 65;
    EXPECT_THROW(random_instance(cfg), InvalidInput);
}

TEST(Cli, ValidateSierpinski) {
    auto r = run_cli("validate --in " + fixture("sierpinski.json"));
    EXPECT_EQ(r.code, 0);
    auto j = parse_text(r.out);
    EXPECT_EQ(j["emt"], false);
    EXPECT_EQ(j["recovered"], false);
}

TEST(Cli, TheoremBRelaxedSierpinski) {
    auto r = run_cli("theoremb --relaxed --in " + fixture("sierpinski.json"));
    EXPECT_EQ(r.code, 0);
    auto j = parse_text(r.out);
    EXPECT_EQ(j["report"]["core_consistent"], true);
    for (std::size_t i : {0, 5, 6, 7}) EXPECT_EQ(j["report"]["conditions"][i], false);
    EXPECT_EQ(run_cli("theoremb --in " + fixture("sierpinski.json")).code, 2);
}

TEST(Cli, FunctorAndEmtfy) {
    auto r = run_cli("emtfy --in " + fixture("sierpinski.json"));
    EXPECT_EQ(r.code, 0);
    auto j = parse_text(r.out);
    EXPECT_EQ(j["object"]["points"].size(), 1u);
    EXPECT_EQ(j["tag"], "emt");
    auto g = parse_text(run_cli("functor --name geo --in " + fixture("path3.json")).out);
    EXPECT_EQ(g["direction"], "counit");
    EXPECT_EQ(g["flags"][0], "degenerate-at-finite-scale");
    EXPECT_EQ(run_cli("functor --name bogus --in " + fixture("path3.json")).code, 2);
    EXPECT_EQ(run_cli("functor --name gamma --in " + fixture("sierpinski.json")).code, 2);
}

TEST(Cli, LimitsVerifyAndAdjunction) {
    auto c = parse_text(run_cli("colimit --in " + fixture("coequalizer.json")).out);
    EXPECT_EQ(c["apex"]["points"].size(), 2u);
    EXPECT_EQ(c["apex"]["dist"][0][1], "1");
    EXPECT_EQ(run_cli("verify --in " + fixture("coequalizer.json")).code, 0);
    EXPECT_EQ(run_cli("adjunction --name emt --in " + fixture("adjunction_emt.json")).code, 0);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli("validate --in " + fixture("negative_distance.json")).code, 2);
    EXPECT_EQ(run_cli("validate --in " + fixture("duplicate_names.json")).code, 2);
    EXPECT_EQ(run_cli("validate --in /nonexistent.json").code, 2);
    EXPECT_EQ(run_cli("nosuchcommand").code, 2);
    EXPECT_EQ(run_cli("").code, 2);
}

TEST(Cli, CapExceededIsInconclusive) {
    const std::string cmd = "EMTKIT_CAPS=enumeration=2 " + std::string(EMTKIT_CLI_PATH) + " adjunction --name emt --in " +
                            fixture("adjunction_emt.json") + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    EXPECT_EQ(WEXITSTATUS(status), 3);
}

TEST(Cli, SuiteIsDeterministic) {
    auto a = run_cli("suite --seed 42 --count 200");
    auto b = run_cli("suite --seed 42 --count 200");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    auto j = parse_text(a.out);
    for (auto& [name, tally] : j["checks"].items()) {
        EXPECT_EQ(tally["fail"], 0) << name;
        EXPECT_EQ(tally["inconclusive"], 0) << name;
    }
}
