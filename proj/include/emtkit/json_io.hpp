#pragma once

/**
 * @file json_io.hpp
 * @brief Strict JSON reading and canonical JSON writing for spaces, maps,
 * diagrams, functor results and cone certificates.
 *
 * Space:    {"points": [names], "opens": [[names], ...], "dist": [[value, ...], ...]}
 *           "neighborhoods": [[names], ...] (minimal neighborhood per point) may
 *           replace "opens"; it is emitted when the open family is large.
 * Map:      {"map": {"source name": "target name", ...}}
 * Diagram:  {"category": "EMT", "objects": [Space...],
 *            "arrows": [{"name": "f", "src": 0, "dst": 1, "map": {...}}]}
 *
 * Values are strings "p/q", "p" or "inf". Unknown keys, wrong types and
 * mathematical violations are reported as ParseError with a JSON pointer.
 */

#include "emtkit/adjunction.hpp"
#include "emtkit/cats.hpp"
#include "emtkit/theorem_b.hpp"

#include <json.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

namespace emtkit {

using Json = nlohmann::ordered_json;

/// Open families larger than this are written as minimal neighborhoods.
inline constexpr std::size_t max_emitted_opens = 1024;

namespace detail {

inline std::string pointer_escape(const std::string& key) {
    std::string out;
    for (char c : key) {
        if (c == '~') out += "~0";
        else if (c == '/') out += "~1";
        else out += c;
    }
    return out;
}

inline std::string child(const std::string& path, const std::string& key) { return path + "/" + pointer_escape(key); }
inline std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

inline void expect(bool ok, const std::string& what, const std::string& path) {
    if (!ok) throw ParseError(what, path.empty() ? "/" : path);
}

inline void only_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& path) {
    expect(j.is_object(), "expected an object", path);
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (auto k : allowed) known = known || it.key() == k;
        expect(known, "unknown key \"" + it.key() + "\"", child(path, it.key()));
    }
}

inline const Json& field(const Json& j, const char* key, const std::string& path) {
    expect(j.contains(key), std::string("missing key \"") + key + "\"", path);
    return j.at(key);
}

inline std::size_t index_of(const std::map<std::string, std::size_t>& names, const Json& j, const std::string& path) {
    expect(j.is_string(), "expected a point name", path);
    auto it = names.find(j.get<std::string>());
    expect(it != names.end(), "unknown point \"" + j.get<std::string>() + "\"", path);
    return it->second;
}

inline std::map<std::string, std::size_t> name_index(const std::vector<std::string>& names) {
    std::map<std::string, std::size_t> out;
    for (std::size_t i = 0; i < names.size(); ++i) out.emplace(names[i], i);
    return out;
}

inline PointSet parse_name_set(const Json& j, const std::map<std::string, std::size_t>& names,
                               const std::string& path) {
    expect(j.is_array(), "expected an array of point names", path);
    PointSet s = 0;
    for (std::size_t i = 0; i < j.size(); ++i) {
        auto x = index_of(names, j[i], child(path, i));
        expect(!contains(s, x), "repeated point in set", child(path, i));
        s |= singleton(x);
    }
    return s;
}

inline Json emit_name_set(PointSet s, const std::vector<std::string>& names) {
    Json out = Json::array();
    for (auto x : members(s)) out.push_back(names[x]);
    return out;
}

} // namespace detail

inline ExtValue parse_value(const Json& j, const std::string& path) {
    detail::expect(j.is_string(), "expected a value string (\"p/q\", \"p\" or \"inf\")", path);
    try {
        return ExtValue::parse(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(e.what(), path);
    }
}

inline Space parse_space(const Json& j, const std::string& path = "") {
    using namespace detail;
    only_keys(j, {"points", "opens", "neighborhoods", "dist"}, path);
    const Json& pts = field(j, "points", path);
    expect(pts.is_array(), "expected an array of names", child(path, "points"));
    expect(pts.size() <= max_points, "more than 64 points", child(path, "points"));
    std::vector<std::string> names;
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto p = child(child(path, "points"), i);
        expect(pts[i].is_string(), "expected a point name", p);
        auto name = pts[i].get<std::string>();
        expect(index.emplace(name, i).second, "duplicate point name \"" + name + "\"", p);
        names.push_back(std::move(name));
    }
    const std::size_t n = names.size();

    expect(j.contains("opens") != j.contains("neighborhoods"), "exactly one of \"opens\" and \"neighborhoods\" is required", path);
    FiniteTopology topology;
    if (j.contains("opens")) {
        const auto p = child(path, "opens");
        const Json& opens = j.at("opens");
        expect(opens.is_array(), "expected an array of open sets", p);
        std::vector<PointSet> family;
        for (std::size_t i = 0; i < opens.size(); ++i) family.push_back(parse_name_set(opens[i], index, child(p, i)));
        auto v = validate_topology(n, family);
        if (!v) throw ParseError("not a topology: " + v.reason, p);
        topology = FiniteTopology::from_opens(n, family);
    } else {
        const auto p = child(path, "neighborhoods");
        const Json& nb = j.at("neighborhoods");
        expect(nb.is_array() && nb.size() == n, "expected one neighborhood per point", p);
        std::vector<PointSet> minimal;
        for (std::size_t i = 0; i < n; ++i) minimal.push_back(parse_name_set(nb[i], index, child(p, i)));
        try {
            topology = FiniteTopology::from_minimal_neighborhoods(std::move(minimal));
        } catch (const InvalidInput& e) {
            throw ParseError(e.what(), p);
        }
    }

    const auto dp = child(path, "dist");
    const Json& dist = field(j, "dist", path);
    expect(dist.is_array() && dist.size() == n, "expected an n x n matrix", dp);
    std::vector<std::vector<ExtValue>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        expect(dist[i].is_array() && dist[i].size() == n, "expected a row of length " + std::to_string(n), child(dp, i));
        for (std::size_t k = 0; k < n; ++k) rows[i].push_back(parse_value(dist[i][k], child(child(dp, i), k)));
    }
    auto metric = ExtPseudoMetric::from_rows(rows);
    if (auto v = validate_pseudometric(metric); !v) {
        std::string where = dp;
        if (v.witness.size() >= 2) where = child(child(dp, v.witness[0]), v.witness.back());
        else if (!v.witness.empty()) where = child(child(dp, v.witness[0]), v.witness[0]);
        throw ParseError("not an extended pseudodistance: " + v.reason, where);
    }
    return Space{std::move(names), std::move(topology), std::move(metric)};
}

inline Json emit_space(const Space& s) {
    Json out;
    out["points"] = s.names;
    std::vector<PointSet> opens;
    bool explicit_opens = true;
    try {
        opens = s.topology.opens(max_emitted_opens);
    } catch (const CapExceeded&) {
        explicit_opens = false;
    }
    if (explicit_opens) {
        Json arr = Json::array();
        for (auto o : opens) arr.push_back(detail::emit_name_set(o, s.names));
        out["opens"] = std::move(arr);
    } else {
        Json arr = Json::array();
        for (std::size_t x = 0; x < s.size(); ++x)
            arr.push_back(detail::emit_name_set(s.topology.minimal_neighborhood(x), s.names));
        out["neighborhoods"] = std::move(arr);
    }
    Json dist = Json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < s.size(); ++k) row.push_back(s.metric(i, k).to_string());
        dist.push_back(std::move(row));
    }
    out["dist"] = std::move(dist);
    return out;
}

/// {"src name": "dst name", ...}; every source point must appear exactly once.
inline FinMap parse_map(const Json& j, const Space& src, const Space& dst, const std::string& path) {
    using namespace detail;
    expect(j.is_object(), "expected an object mapping point names", path);
    const auto si = name_index(src.names);
    const auto di = name_index(dst.names);
    const std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> img(src.size(), unset);
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto s = si.find(it.key());
        expect(s != si.end(), "unknown source point \"" + it.key() + "\"", child(path, it.key()));
        img[s->second] = index_of(di, it.value(), child(path, it.key()));
    }
    for (std::size_t x = 0; x < src.size(); ++x)
        expect(img[x] != unset, "point \"" + src.names[x] + "\" is not mapped", path);
    return FinMap(dst.size(), std::move(img));
}

inline Json emit_map(const FinMap& f, const Space& src, const Space& dst) {
    Json out = Json::object();
    for (std::size_t x = 0; x < f.source_size(); ++x) out[src.names[x]] = dst.names[f(x)];
    return out;
}

/// {"source": Space, "target": Space, "map": {...}}
inline CSMorphism parse_morphism(const Json& j, const std::string& path = "") {
    detail::only_keys(j, {"source", "target", "map"}, path);
    auto src = share(parse_space(detail::field(j, "source", path), detail::child(path, "source")));
    auto dst = share(parse_space(detail::field(j, "target", path), detail::child(path, "target")));
    auto f = parse_map(detail::field(j, "map", path), *src, *dst, detail::child(path, "map"));
    return {src, dst, f};
}

inline Json emit_morphism(const CSMorphism& m) {
    Json out;
    out["source"] = emit_space(*m.source);
    out["target"] = emit_space(*m.target);
    out["map"] = emit_map(m.map, *m.source, *m.target);
    return out;
}

inline Diagram parse_diagram(const Json& j, const std::string& path = "") {
    using namespace detail;
    only_keys(j, {"category", "objects", "arrows"}, path);
    Diagram d;
    const Json& cat = field(j, "category", path);
    expect(cat.is_string(), "expected a category name", child(path, "category"));
    try {
        d.category = parse_category(cat.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(e.what(), child(path, "category"));
    }
    const Json& objs = field(j, "objects", path);
    expect(objs.is_array(), "expected an array of spaces", child(path, "objects"));
    for (std::size_t i = 0; i < objs.size(); ++i)
        d.objects.push_back(share(parse_space(objs[i], child(child(path, "objects"), i))));
    const Json arrows = j.contains("arrows") ? j.at("arrows") : Json::array();
    expect(arrows.is_array(), "expected an array of arrows", child(path, "arrows"));
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        const auto p = child(child(path, "arrows"), k);
        only_keys(arrows[k], {"name", "src", "dst", "map"}, p);
        Arrow a;
        const Json& name = field(arrows[k], "name", p);
        expect(name.is_string(), "expected a string", child(p, "name"));
        a.name = name.get<std::string>();
        for (auto [key, slot] : {std::pair{"src", &a.src}, std::pair{"dst", &a.dst}}) {
            const Json& v = field(arrows[k], key, p);
            expect(v.is_number_unsigned() && v.get<std::size_t>() < d.objects.size(), "expected an object index",
                   child(p, key));
            *slot = v.get<std::size_t>();
        }
        a.map = parse_map(field(arrows[k], "map", p), *d.objects[a.src], *d.objects[a.dst], child(p, "map"));
        d.arrows.push_back(std::move(a));
    }
    if (auto v = validate_diagram(d); !v) {
        std::string where = path.empty() ? "/" : path;
        if (v.reason.rfind("arrow", 0) == 0 || v.reason.rfind("duplicate arrow", 0) == 0)
            where = child(child(path, "arrows"), v.witness.back());
        else if (v.reason.rfind("object", 0) == 0)
            where = child(child(path, "objects"), v.witness.front());
        throw ParseError("invalid diagram: " + v.reason, where);
    }
    return d;
}

inline Json emit_diagram(const Diagram& d) {
    Json out;
    out["category"] = to_string(d.category);
    Json objs = Json::array();
    for (const auto& o : d.objects) objs.push_back(emit_space(*o));
    out["objects"] = std::move(objs);
    Json arrows = Json::array();
    for (const auto& a : d.arrows) {
        Json arr;
        arr["name"] = a.name;
        arr["src"] = a.src;
        arr["dst"] = a.dst;
        arr["map"] = emit_map(a.map, *d.objects[a.src], *d.objects[a.dst]);
        arrows.push_back(std::move(arr));
    }
    out["arrows"] = std::move(arrows);
    return out;
}

inline Json emit_functor_result(const FunctorResult& r) {
    Json out;
    out["tag"] = r.tag;
    out["direction"] = r.direction == Direction::unit ? "unit" : "counit";
    out["object"] = emit_space(*r.object);
    out["unit"] = emit_map(r.unit.map, *r.unit.source, *r.unit.target);
    out["flags"] = r.flags;
    return out;
}

/// Legs are listed per diagram object; each is a name map between the apex and that object.
inline Json emit_cone(const ConeCert& c) {
    Json out;
    out["side"] = to_string(c.side);
    out["apex"] = emit_space(*c.apex);
    Json legs = Json::array();
    for (const auto& l : c.legs) legs.push_back(emit_map(l.map, *l.source, *l.target));
    out["legs"] = std::move(legs);
    return out;
}

/// Reads a certificate for diagram d: {"side": "cone"|"cocone", "apex": Space, "legs": [map...]}.
inline ConeCert parse_cone(const Json& j, const Diagram& d, const std::string& path = "") {
    using namespace detail;
    only_keys(j, {"side", "apex", "legs"}, path);
    ConeCert c;
    const Json& side = field(j, "side", path);
    expect(side.is_string() && (side == "cone" || side == "cocone"), "expected \"cone\" or \"cocone\"",
           child(path, "side"));
    c.side = side == "cone" ? ConeSide::cone : ConeSide::cocone;
    c.apex = share(parse_space(field(j, "apex", path), child(path, "apex")));
    const Json& legs = field(j, "legs", path);
    expect(legs.is_array() && legs.size() == d.objects.size(), "expected one leg per diagram object",
           child(path, "legs"));
    for (std::size_t i = 0; i < legs.size(); ++i) {
        const auto p = child(child(path, "legs"), i);
        if (c.side == ConeSide::cone)
            c.legs.push_back({c.apex, d.objects[i], parse_map(legs[i], *c.apex, *d.objects[i], p)});
        else
            c.legs.push_back({d.objects[i], c.apex, parse_map(legs[i], *d.objects[i], *c.apex, p)});
    }
    return c;
}

inline Json emit_check(const CheckResult& r) {
    Json out;
    out["outcome"] = to_string(r.outcome);
    out["detail"] = r.detail;
    return out;
}

inline Json emit_theorem_b(const TheoremBReport& r) {
    Json out;
    out["conditions"] = Json::array();
    for (bool b : r.conditions) out["conditions"].push_back(b);
    out["all_equal"] = r.all_equal;
    out["core_consistent"] = r.core_consistent;
    out["relaxed"] = r.relaxed;
    return out;
}

/// Canonical text: two-space indentation and a trailing newline.
inline std::string to_text(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), "/");
    }
}

} // namespace emtkit
