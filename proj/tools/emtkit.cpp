// Command-line front end: validate, emtfy, functor, limit, colimit, verify,
// adjunction, theoremb, suite.
//
// Exit status: 0 pass, 1 mathematical failure, 2 usage or parse error,
// 3 inconclusive (a cap was exceeded).

#include "emtkit/emtkit.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace emtkit;

enum Exit { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_inconclusive = 3 };

int exit_for(Outcome o) {
    switch (o) {
    case Outcome::pass: return exit_pass;
    case Outcome::fail: return exit_fail;
    case Outcome::inconclusive: return exit_inconclusive;
    }
    return exit_fail;
}

struct Options {
    std::string in;
    std::string out;
    std::string name;
    std::string cert;
    std::uint64_t seed = 0;
    std::size_t count = 100;
    std::size_t probe_max = 2;
    bool relaxed = false;
};

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path.empty() || path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw ParseError("cannot open " + path);
        ss << f.rdbuf();
    }
    return ss.str();
}

void write_output(const std::string& path, const Json& j) {
    if (path.empty() || path == "-") {
        std::cout << to_text(j);
        return;
    }
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write " + path);
    f << to_text(j);
}

Json report(const std::string& command, const CheckResult& r) {
    Json j;
    j["command"] = command;
    j["outcome"] = to_string(r.outcome);
    j["detail"] = r.detail;
    return j;
}

int cmd_validate(const Options& o) {
    const Space s = parse_space(parse_text(read_input(o.in)));
    Json j;
    j["command"] = "validate";
    j["outcome"] = "pass";
    j["points"] = s.size();
    j["extended_metric"] = is_extended_metric(s.metric);
    j["hausdorff"] = is_hausdorff(s.topology);
    j["lsc"] = is_lsc(s);
    j["recovered"] = is_recovered(s);
    j["emt"] = is_emt(s);
    write_output(o.out, j);
    return exit_pass;
}

int cmd_functor(const Options& o, const std::string& name) {
    const Space s = parse_space(parse_text(read_input(o.in)));
    auto r = apply_functor(FunctorSpec::parse(name), s);
    write_output(o.out, emit_functor_result(r));
    return exit_pass;
}

int cmd_limit(const Options& o, bool co) {
    const Diagram d = parse_diagram(parse_text(read_input(o.in)));
    const Caps caps = Caps::from_environment();
    write_output(o.out, emit_cone(co ? colimit(d, caps) : limit(d, caps)));
    return exit_pass;
}

int cmd_verify(const Options& o) {
    const Diagram d = parse_diagram(parse_text(read_input(o.in)));
    const Caps caps = Caps::from_environment();
    auto probes = small_spaces(d.category, o.probe_max);
    probes.insert(probes.end(), d.objects.begin(), d.objects.end());
    Json j;
    j["command"] = "verify";
    Outcome worst = Outcome::pass;
    auto merge = [&](const char* key, const CheckResult& r) {
        j[key] = emit_check(r);
        if (r.outcome == Outcome::fail || (r.outcome == Outcome::inconclusive && worst == Outcome::pass))
            worst = r.outcome;
    };
    if (!o.cert.empty()) {
        const ConeCert cert = parse_cone(parse_text(read_input(o.cert)), d, "");
        merge("certificate", verify_universal(d, cert, probes, caps));
    } else {
        merge("limit", verify_universal(d, limit(d, caps), probes, caps));
        merge("colimit", verify_universal(d, colimit(d, caps), probes, caps));
        merge("cross_check", cross_check_formulas(d, caps));
    }
    j["outcome"] = to_string(worst);
    write_output(o.out, j);
    return exit_for(worst);
}

int cmd_adjunction(const Options& o) {
    const Json in = parse_text(read_input(o.in));
    detail::only_keys(in, {"left", "right"}, "");
    const Space left = parse_space(detail::field(in, "left", ""), "/left");
    const Space right = parse_space(detail::field(in, "right", ""), "/right");
    const auto spec = AdjunctionSpec::parse(o.name);
    const auto r = check_adjunction(spec, left, right, Caps::from_environment());
    Json j = report("adjunction", r.result);
    j["adjunction"] = spec.name();
    j["domain_count"] = r.domain_count;
    j["codomain_count"] = r.codomain_count;
    write_output(o.out, j);
    return exit_for(r.result.outcome);
}

int cmd_theoremb(const Options& o) {
    const Space s = parse_space(parse_text(read_input(o.in)));
    const auto r = theoremB_check(s, o.relaxed, Caps::from_environment());
    const bool ok = o.relaxed ? r.core_consistent : r.all_equal;
    Json j;
    j["command"] = "theoremb";
    j["outcome"] = ok ? "pass" : "fail";
    j["report"] = emit_theorem_b(r);
    write_output(o.out, j);
    return ok ? exit_pass : exit_fail;
}

// ---------------------------------------------------------------------------
// suite

struct Tally {
    std::size_t pass = 0, fail = 0, inconclusive = 0;
    std::string first_failure;

    void add(const CheckResult& r, const std::string& where) {
        switch (r.outcome) {
        case Outcome::pass: ++pass; break;
        case Outcome::fail:
            ++fail;
            if (first_failure.empty()) first_failure = where + ": " + r.detail;
            break;
        case Outcome::inconclusive: ++inconclusive; break;
        }
    }
};

CheckResult guarded(const std::function<CheckResult()>& f) {
    try {
        return f();
    } catch (const CapExceeded& e) {
        return CheckResult::inconclusive(e.what());
    } catch (const ConsistencyError& e) {
        return CheckResult::fail(std::string("consistency: ") + e.what());
    }
}

int cmd_suite(const Options& o) {
    const Caps caps = Caps::from_environment();
    std::map<std::string, Tally> tallies;
    const Category tags[] = {Category::set, Category::top, Category::extpmet, Category::pre, Category::emt};
    for (std::size_t i = 0; i < o.count; ++i) {
        const std::uint64_t seed = o.seed + i;
        const std::string where = "seed " + std::to_string(seed);
        std::mt19937_64 rng(seed);

        GenConfig cfg;
        cfg.seed = seed;
        cfg.min_points = 0;
        cfg.max_points = 5;
        cfg.topology_mode = static_cast<TopologyMode>(i % 3);
        const Space s = random_instance(cfg);

        tallies["recovered-oracle"].add(guarded([&] {
            const auto rho = recovered_distance(s);
            for (std::size_t x = 0; x < s.size(); ++x)
                for (std::size_t y = 0; y < s.size(); ++y)
                    if (rho(x, y) != lip_sup_oracle(s, x, y, caps))
                        return CheckResult::fail("pair (" + std::to_string(x) + "," + std::to_string(y) + ")");
            return CheckResult::pass();
        }), where);
        tallies["emt-triple"].add(guarded([&] {
            const bool ext = is_extended_metric(s.metric);
            const bool a = is_emt(s), b = is_hausdorff(s.topology) && ext, c = is_lsc(s) && ext;
            return a == b && b == c ? CheckResult::pass() : CheckResult::fail("predicates disagree");
        }), where);
        tallies["emt-idempotent"].add(guarded([&] {
            auto e = emt_fication(s);
            return is_isomorphism(emt_fication(*e.object).unit) ? CheckResult::pass()
                                                                : CheckResult::fail("second unit is not an isomorphism");
        }), where);

        const Space x = random_emt(rng, 1, 4);
        tallies["witness"].add(guarded([&] {
            const auto rho = recovered_distance(x);
            for (std::size_t a = 0; a < x.size(); ++a)
                for (std::size_t b = 0; b < x.size(); ++b) {
                    if (rho(a, b).is_infinite()) continue;
                    auto f = witness_function(x, a, b);
                    if (!is_lip1_continuous(x, f) || *difference(f[a], f[b]) != rho(a, b))
                        return CheckResult::fail("witness misses the recovered distance");
                }
            return CheckResult::pass();
        }), where);
        tallies["theoremb"].add(guarded([&] {
            auto r = theoremB_check(x, false, caps);
            return r.all_equal ? CheckResult::pass() : CheckResult::fail("conditions disagree");
        }), where);
        tallies["compactify"].add(guarded([&] {
            auto g = compactify(x);
            return is_isomorphism(g.unit) ? CheckResult::pass() : CheckResult::fail("unit is not an isomorphism");
        }), where);

        GenConfig small = cfg;
        small.max_points = 3;
        const Space left = random_instance(rng, small);
        const Space right = random_emt(rng, 1, 3);
        tallies["adjunction-emt"].add(guarded([&] {
            return check_adjunction(AdjunctionSpec{AdjunctionKind::emt, ExtValue::infinity()}, left, right, caps).result;
        }), where);

        const Category tag = tags[i % 5];
        const Diagram d = random_diagram(rng, tag);
        const std::string tname = to_string(tag);
        tallies["limit-" + tname].add(guarded([&] { return verify_universal(d, limit(d, caps), caps); }), where);
        tallies["colimit-" + tname].add(guarded([&] { return verify_universal(d, colimit(d, caps), caps); }), where);
        tallies["cross-check-" + tname].add(guarded([&] { return cross_check_formulas(d, caps); }), where);
    }

    Json j;
    j["command"] = "suite";
    j["seed"] = o.seed;
    j["count"] = o.count;
    Json checks = Json::object();
    std::size_t fails = 0, incs = 0;
    for (const auto& [name, t] : tallies) {
        Json c;
        c["pass"] = t.pass;
        c["fail"] = t.fail;
        c["inconclusive"] = t.inconclusive;
        if (!t.first_failure.empty()) c["first_failure"] = t.first_failure;
        checks[name] = std::move(c);
        fails += t.fail;
        incs += t.inconclusive;
    }
    j["checks"] = std::move(checks);
    const Outcome o_all = fails ? Outcome::fail : incs ? Outcome::inconclusive : Outcome::pass;
    j["outcome"] = to_string(o_all);
    write_output(o.out, j);
    return exit_for(o_all);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite extended metric-topological spaces: checks and constructions"};
    app.require_subcommand(1);
    Options o;

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--in", o.in, "input JSON file (default: stdin)");
        sub->add_option("--out", o.out, "output file (default: stdout)");
    };
    auto* validate = app.add_subcommand("validate", "report predicates of a space");
    add_io(validate);
    auto* emtfy = app.add_subcommand("emtfy", "e.m.t.-fication of a space");
    add_io(emtfy);
    auto* functor = app.add_subcommand("functor", "apply a named functor to a space");
    add_io(functor);
    functor->add_option("--name", o.name, "emt|gamma|gammabar|mc|geo|trunc:<l>|disc:<l|inf>|T")->required();
    auto* lim = app.add_subcommand("limit", "limit cone of a diagram");
    add_io(lim);
    auto* colim = app.add_subcommand("colimit", "colimit cocone of a diagram");
    add_io(colim);
    auto* verify = app.add_subcommand("verify", "check universal properties of a diagram's (co)limits");
    add_io(verify);
    verify->add_option("--cert", o.cert, "verify this cone/cocone JSON instead of the computed ones");
    verify->add_option("--probe-max", o.probe_max, "largest probe space (points)")->check(CLI::Range(0, 3));
    auto* adj = app.add_subcommand("adjunction", "hom-set bijection for an adjunction on {\"left\",\"right\"}");
    add_io(adj);
    adj->add_option("--name", o.name, "emt|gamma|gammabar|mc|geo|trunc:<l>|disc:<l|inf>|T")->required();
    auto* thb = app.add_subcommand("theoremb", "evaluate the eight characterizations of an e.m.t. space");
    add_io(thb);
    thb->add_flag("--relaxed", o.relaxed, "drop the Hausdorff requirement");
    auto* suite = app.add_subcommand("suite", "run seeded randomized checks");
    suite->add_option("--out", o.out, "output file (default: stdout)");
    suite->add_option("--seed", o.seed, "first seed");
    suite->add_option("--count", o.count, "number of seeds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }

    auto error = [](const char* kind, const std::string& message, const std::string& pointer = "") {
        Json j;
        j["outcome"] = "error";
        j["kind"] = kind;
        j["message"] = message;
        if (!pointer.empty()) j["pointer"] = pointer;
        std::cerr << to_text(j);
    };
    try {
        if (*validate) return cmd_validate(o);
        if (*emtfy) return cmd_functor(o, "emt");
        if (*functor) return cmd_functor(o, o.name);
        if (*lim) return cmd_limit(o, false);
        if (*colim) return cmd_limit(o, true);
        if (*verify) return cmd_verify(o);
        if (*adj) return cmd_adjunction(o);
        if (*thb) return cmd_theoremb(o);
        if (*suite) return cmd_suite(o);
    } catch (const ParseError& e) {
        error("parse", e.what(), e.pointer());
        return exit_usage;
    } catch (const InvalidInput& e) {
        error("invalid-input", e.what());
        return exit_usage;
    } catch (const CapExceeded& e) {
        error("cap-exceeded", e.what());
        return exit_inconclusive;
    } catch (const ConsistencyError& e) {
        error("consistency", e.what());
        return exit_fail;
    }
    return exit_usage;
}
