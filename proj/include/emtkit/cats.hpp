#pragma once

/**
 * @file cats.hpp
 * @brief Finite diagrams in SET, TOP, EXTPMET, PRE and EMT, their limits and
 * colimits, and a bounded verifier for universal properties.
 *
 * Every tag uses the same carrier: a Space. The tag decides which maps count as
 * morphisms (SET: all maps, TOP: continuous, EXTPMET: short, PRE and EMT: both)
 * and EMT additionally restricts objects to e.m.t. spaces. Limits are cut out of
 * the product; colimits are quotients of the disjoint union, reflected into EMT
 * by the e.m.t.-fication.
 */

#include "emtkit/enumerate.hpp"
#include "emtkit/functors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace emtkit {

/// A generating arrow of the index category together with its image.
struct Arrow {
    std::string name;
    std::size_t src = 0;
    std::size_t dst = 0;
    FinMap map;
};

struct Diagram {
    Category category = Category::pre;
    std::vector<SpacePtr> objects;
    std::vector<Arrow> arrows;
};

enum class ConeSide { cone, cocone };

inline const char* to_string(ConeSide s) { return s == ConeSide::cone ? "cone" : "cocone"; }

/// Cone: legs apex -> D_i. Cocone: legs D_i -> apex.
struct ConeCert {
    SpacePtr apex;
    std::vector<CSMorphism> legs;
    ConeSide side = ConeSide::cone;
};

inline Verdict validate_diagram(const Diagram& d) {
    for (std::size_t i = 0; i < d.objects.size(); ++i) {
        if (!d.objects[i]) return Verdict::fail("object " + std::to_string(i) + " is missing", {i});
        if (auto v = validate_space(*d.objects[i]); !v)
            return Verdict::fail("object " + std::to_string(i) + ": " + v.reason, {i});
        if (!is_object(d.category, *d.objects[i]))
            return Verdict::fail("object " + std::to_string(i) + " is not an e.m.t. space", {i});
    }
    for (std::size_t k = 0; k < d.arrows.size(); ++k) {
        const auto& a = d.arrows[k];
        for (std::size_t j = 0; j < k; ++j)
            if (d.arrows[j].name == a.name) return Verdict::fail("duplicate arrow name " + a.name, {j, k});
        if (a.src >= d.objects.size() || a.dst >= d.objects.size())
            return Verdict::fail("arrow " + a.name + " has an endpoint out of range", {k});
        if (!is_morphism(d.category, *d.objects[a.src], *d.objects[a.dst], a.map))
            return Verdict::fail("arrow " + a.name + " is not a morphism in " + to_string(d.category), {k});
    }
    return Verdict::pass();
}

inline void require_diagram(const Diagram& d, const char* where) {
    if (auto v = validate_diagram(d); !v) throw InvalidInput(std::string(where) + ": " + v.reason);
}

inline Diagram retag(Diagram d, Category c) {
    d.category = c;
    return d;
}

/// Legs well-typed, morphisms in the tagged category, and commuting with every arrow.
inline Verdict validate_cone(const Diagram& d, const ConeCert& cert) {
    if (!cert.apex) return Verdict::fail("missing apex");
    if (!is_object(d.category, *cert.apex)) return Verdict::fail("apex is not an object of the category");
    if (cert.legs.size() != d.objects.size()) return Verdict::fail("leg count differs from object count");
    const bool cone = cert.side == ConeSide::cone;
    for (std::size_t i = 0; i < cert.legs.size(); ++i) {
        const auto& leg = cert.legs[i];
        const Space& from = cone ? *cert.apex : *d.objects[i];
        const Space& to = cone ? *d.objects[i] : *cert.apex;
        if (!is_morphism(d.category, from, to, leg.map))
            return Verdict::fail("leg " + std::to_string(i) + " is not a morphism", {i});
    }
    for (std::size_t k = 0; k < d.arrows.size(); ++k) {
        const auto& a = d.arrows[k];
        const bool commutes = cone ? compose(a.map, cert.legs[a.src].map) == cert.legs[a.dst].map
                                   : compose(cert.legs[a.dst].map, a.map) == cert.legs[a.src].map;
        if (!commutes) return Verdict::fail("legs do not commute with arrow " + a.name, {k});
    }
    return Verdict::pass();
}

// ---------------------------------------------------------------------------
// Direct formulas

/// Product with the product topology and the sup distance; the empty product
/// is a single point.
inline ConeCert product_formula(const std::vector<SpacePtr>& objects, const Caps& caps = {}) {
    std::vector<std::size_t> sizes;
    std::vector<FiniteTopology> tops;
    std::vector<ExtPseudoMetric> mets;
    for (const auto& o : objects) {
        sizes.push_back(o->size());
        tops.push_back(o->topology);
        mets.push_back(o->metric);
    }
    const std::size_t total = product_size(sizes, caps.product_points);
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> proj(objects.size(), std::vector<std::size_t>(total));
    for (std::size_t p = 0; p < total; ++p) {
        auto coords = product_coordinates(p, sizes);
        std::string name = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            name += (i ? "," : "") + objects[i]->names[coords[i]];
            proj[i][p] = coords[i];
        }
        names.push_back(name + ")");
    }
    auto apex = share(Space{detail::uniquify(std::move(names)), topology_product(tops, caps),
                            metric_product_sup(mets, caps)});
    ConeCert out{apex, {}, ConeSide::cone};
    for (std::size_t i = 0; i < objects.size(); ++i)
        out.legs.push_back({apex, objects[i], FinMap(objects[i]->size(), proj[i])});
    return out;
}

/// {x : f(x) = g(x)} with the relative topology and restricted distance; the
/// single leg is the inclusion.
inline ConeCert equalizer_formula(const SpacePtr& x, const FinMap& f, const FinMap& g) {
    if (f.source_size() != x->size() || g.source_size() != x->size() || f.target_size() != g.target_size())
        throw InvalidInput("equalizer_formula: maps do not form a parallel pair");
    PointSet keep = 0;
    for (std::size_t p = 0; p < x->size(); ++p)
        if (f(p) == g(p)) keep |= singleton(p);
    auto apex = share(subspace(*x, keep));
    return {apex, {{apex, x, subset_inclusion(keep, x->size())}}, ConeSide::cone};
}

/// Disjoint union; summands at +inf from each other.
inline ConeCert coproduct_formula(const std::vector<SpacePtr>& objects) {
    std::vector<FiniteTopology> tops;
    std::vector<ExtPseudoMetric> mets;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < objects.size(); ++i) {
        tops.push_back(objects[i]->topology);
        mets.push_back(objects[i]->metric);
        for (const auto& n : objects[i]->names) names.push_back(n + "@" + std::to_string(i));
    }
    auto apex = share(Space{detail::uniquify(std::move(names)), topology_disjoint_union(tops), metric_disjoint_union(mets)});
    ConeCert out{apex, {}, ConeSide::cocone};
    std::size_t offset = 0;
    for (const auto& o : objects) {
        std::vector<std::size_t> img(o->size());
        for (std::size_t x = 0; x < o->size(); ++x) img[x] = offset + x;
        out.legs.push_back({o, apex, FinMap(apex->size(), std::move(img))});
        offset += o->size();
    }
    return out;
}

/// Quotient by a partition: quotient topology and chain quotient distance.
inline CSMorphism quotient_by(const SpacePtr& y, const Partition& p) {
    auto apex = share(Space{detail::quotient_names(y->names, p), topology_quotient(y->topology, p),
                            chain_quotient_metric(y->metric, p)});
    return {y, apex, FinMap(p.class_count(), p.labels())};
}

/// Quotient of Y by the smallest equivalence relation containing f(x) ~ g(x).
inline ConeCert coequalizer_formula(const SpacePtr& y, const FinMap& f, const FinMap& g) {
    if (f.target_size() != y->size() || g.target_size() != y->size() || f.source_size() != g.source_size())
        throw InvalidInput("coequalizer_formula: maps do not form a parallel pair");
    detail::UnionFind uf(y->size());
    for (std::size_t x = 0; x < f.source_size(); ++x) uf.unite(f(x), g(x));
    auto q = quotient_by(y, Partition::from_union_find(uf));
    return {q.target, {q}, ConeSide::cocone};
}

// ---------------------------------------------------------------------------
// Limits and colimits

/// Subspace of the product cut out by D(a)(x_src) = x_dst for every arrow. In
/// EMT the PRE limit is returned unchanged and checked to be e.m.t.
inline ConeCert limit(const Diagram& d, const Caps& caps = {}) {
    require_diagram(d, "limit");
    const auto prod = product_formula(d.objects, caps);
    PointSet keep = 0;
    for (std::size_t p = 0; p < prod.apex->size(); ++p) {
        bool ok = true;
        for (const auto& a : d.arrows)
            if (a.map(prod.legs[a.src](p)) != prod.legs[a.dst](p)) {
                ok = false;
                break;
            }
        if (ok) keep |= singleton(p);
    }
    auto apex = share(subspace(*prod.apex, keep));
    const FinMap incl = subset_inclusion(keep, prod.apex->size());
    ConeCert out{apex, {}, ConeSide::cone};
    for (std::size_t i = 0; i < d.objects.size(); ++i)
        out.legs.push_back({apex, d.objects[i], compose(prod.legs[i].map, incl)});
    if (d.category == Category::emt && !is_emt(*apex))
        throw ConsistencyError("limit: the PRE limit of an EMT diagram is not e.m.t.");
    return out;
}

/// Disjoint union glued along x ~ D(a)(x). In EMT the PRE colimit is passed
/// through the e.m.t.-fication and the legs are composed with its unit.
inline ConeCert colimit(const Diagram& d, const Caps& caps = {}) {
    require_diagram(d, "colimit");
    (void)caps;
    const auto sum = coproduct_formula(d.objects);
    detail::UnionFind uf(sum.apex->size());
    for (const auto& a : d.arrows)
        for (std::size_t x = 0; x < a.map.source_size(); ++x)
            uf.unite(sum.legs[a.src](x), sum.legs[a.dst](a.map(x)));
    const auto q = quotient_by(sum.apex, Partition::from_union_find(uf));
    ConeCert out{q.target, {}, ConeSide::cocone};
    for (std::size_t i = 0; i < d.objects.size(); ++i)
        out.legs.push_back({d.objects[i], q.target, compose(q.map, sum.legs[i].map)});
    if (d.category == Category::emt) {
        auto e = emt_fication(*out.apex);
        out.apex = e.object;
        for (auto& leg : out.legs) leg = {leg.source, e.object, compose(e.unit.map, leg.map)};
    }
    return out;
}

/// Limit through iterated equalizers: start from the product and, for each
/// arrow a, equalize (D(a) o pi_src) and pi_dst on what is left.
inline ConeCert limit_generic(const Diagram& d, const Caps& caps = {}) {
    require_diagram(d, "limit_generic");
    const auto prod = product_formula(d.objects, caps);
    SpacePtr current = prod.apex;
    FinMap incl = FinMap::identity(prod.apex->size());
    for (const auto& a : d.arrows) {
        const FinMap f = compose(a.map, compose(prod.legs[a.src].map, incl));
        const FinMap g = compose(prod.legs[a.dst].map, incl);
        auto eq = equalizer_formula(current, f, g);
        incl = compose(incl, eq.legs.front().map);
        current = eq.apex;
    }
    ConeCert out{current, {}, ConeSide::cone};
    for (std::size_t i = 0; i < d.objects.size(); ++i)
        out.legs.push_back({current, d.objects[i], compose(prod.legs[i].map, incl)});
    return out;
}

/// Colimit through iterated coequalizers of the coproduct, one per arrow.
inline ConeCert colimit_generic(const Diagram& d, const Caps& caps = {}) {
    require_diagram(d, "colimit_generic");
    (void)caps;
    const auto sum = coproduct_formula(d.objects);
    SpacePtr current = sum.apex;
    FinMap q = FinMap::identity(sum.apex->size());
    for (const auto& a : d.arrows) {
        const FinMap f = compose(q, sum.legs[a.src].map);
        const FinMap g = compose(q, compose(sum.legs[a.dst].map, a.map));
        auto co = coequalizer_formula(current, f, g);
        q = compose(co.legs.front().map, q);
        current = co.apex;
    }
    ConeCert out{current, {}, ConeSide::cocone};
    for (std::size_t i = 0; i < d.objects.size(); ++i)
        out.legs.push_back({d.objects[i], current, compose(q, sum.legs[i].map)});
    if (d.category == Category::emt) {
        auto e = emt_fication(*current);
        out.apex = e.object;
        for (auto& leg : out.legs) leg = {leg.source, e.object, compose(e.unit.map, leg.map)};
    }
    return out;
}

// ---------------------------------------------------------------------------
// Factorization search

namespace detail {

/// Morphisms u: X -> Y in c with u(x) in allowed[x], at most `limit` of them.
/// Each search node consumes one unit of `budget`.
inline std::vector<FinMap> constrained_morphisms(Category c, const Space& X, const Space& Y,
                                                 const std::vector<std::vector<std::size_t>>& allowed,
                                                 std::size_t limit, std::size_t& budget) {
    const std::size_t n = X.size();
    const bool top = uses_topology(c);
    const bool met = uses_metric(c);
    std::vector<FinMap> out;
    std::vector<std::size_t> img(n);
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (out.size() >= limit) return;
        if (i == n) {
            out.emplace_back(Y.size(), img);
            return;
        }
        for (auto v : allowed[i]) {
            if (budget == 0) throw CapExceeded("factorization search budget exhausted");
            --budget;
            img[i] = v;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                if (met && X.metric(i, j) < Y.metric(v, img[j])) ok = false;
                else if (top && ((X.topology.leq(j, i) && !Y.topology.leq(img[j], v)) ||
                                 (X.topology.leq(i, j) && !Y.topology.leq(v, img[j]))))
                    ok = false;
            }
            if (ok) go(i + 1);
            if (out.size() >= limit) return;
        }
    };
    go(0);
    return out;
}

} // namespace detail

/// Maps u: P -> apex with leg_i o u = family_i, up to `limit` of them.
inline std::vector<FinMap> cone_factorizations(Category c, const Space& probe, const std::vector<FinMap>& family,
                                               const ConeCert& cand, std::size_t limit, std::size_t& budget) {
    std::vector<std::vector<std::size_t>> allowed(probe.size());
    for (std::size_t p = 0; p < probe.size(); ++p)
        for (std::size_t a = 0; a < cand.apex->size(); ++a) {
            bool match = true;
            for (std::size_t i = 0; i < family.size() && match; ++i) match = cand.legs[i](a) == family[i](p);
            if (match) allowed[p].push_back(a);
        }
    return detail::constrained_morphisms(c, probe, *cand.apex, allowed, limit, budget);
}

/// Maps u: apex -> P with u o leg_i = family_i, up to `limit` of them.
inline std::vector<FinMap> cocone_factorizations(Category c, const Space& probe, const std::vector<FinMap>& family,
                                                 const ConeCert& cand, std::size_t limit, std::size_t& budget) {
    const std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> forced(cand.apex->size(), unset);
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t x = 0; x < family[i].source_size(); ++x) {
            auto& slot = forced[cand.legs[i](x)];
            if (slot == unset) slot = family[i](x);
            else if (slot != family[i](x)) return {};
        }
    std::vector<std::vector<std::size_t>> allowed(cand.apex->size());
    for (std::size_t a = 0; a < cand.apex->size(); ++a) {
        if (forced[a] != unset) allowed[a] = {forced[a]};
        else
            for (std::size_t v = 0; v < probe.size(); ++v) allowed[a].push_back(v);
    }
    return detail::constrained_morphisms(c, *cand.apex, probe, allowed, limit, budget);
}

// ---------------------------------------------------------------------------
// Probe pools and verification

/// Every object of c on at most max_points points over the value grid
/// {0, 1/2, 1, 2, inf}. Structure a category ignores is fixed (discrete
/// topology, zero distance) so that each underlying object appears once.
inline std::vector<SpacePtr> small_spaces(Category c, std::size_t max_points) {
    std::vector<SpacePtr> out;
    const auto grid = standard_grid();
    for (std::size_t n = 0; n <= max_points; ++n) {
        std::vector<FiniteTopology> tops = uses_topology(c) && c != Category::emt
                                               ? enumerate_topologies(n)
                                               : std::vector<FiniteTopology>{FiniteTopology::discrete(n)};
        std::vector<ExtPseudoMetric> mets =
            uses_metric(c) ? enumerate_pseudometrics(n, grid) : std::vector<ExtPseudoMetric>{ExtPseudoMetric(n)};
        for (const auto& t : tops)
            for (const auto& m : mets) {
                Space s = make_space(t, m);
                if (is_object(c, s)) out.push_back(share(std::move(s)));
            }
    }
    return out;
}

/// Default probes: every object of the category on at most probe_max points,
/// followed by the diagram's own objects.
inline std::vector<SpacePtr> probe_pool(const Diagram& d, std::size_t probe_max = 2) {
    auto out = small_spaces(d.category, probe_max);
    out.insert(out.end(), d.objects.begin(), d.objects.end());
    return out;
}

namespace detail {

inline std::string describe_family(const std::vector<FinMap>& family) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < family.size(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t x = 0; x < family[i].source_size(); ++x) os << (x ? "," : "") << family[i](x);
    }
    os << "]";
    return os.str();
}

} // namespace detail

/// Bounded check of the universal property of `cand`: for every probe and every
/// commuting leg family from (cone) or to (cocone) the probe, exactly one
/// morphism factors it through `cand`. Cap overruns give inconclusive, never pass.
inline CheckResult verify_universal(const Diagram& d, const ConeCert& cand, const std::vector<SpacePtr>& probes,
                                    const Caps& caps = {}) {
    if (auto v = validate_diagram(d); !v) return CheckResult::fail("invalid diagram: " + v.reason);
    if (auto v = validate_cone(d, cand); !v) return CheckResult::fail("candidate is not a " + std::string(to_string(cand.side)) + ": " + v.reason);
    const bool cone = cand.side == ConeSide::cone;
    const std::size_t k = d.objects.size();
    std::size_t families_checked = 0;
    std::string inconclusive;

    for (std::size_t pi = 0; pi < probes.size(); ++pi) {
        const Space& probe = *probes[pi];
        if (!is_object(d.category, probe)) continue;
        std::size_t budget = caps.search_nodes;
        try {
            std::vector<std::vector<FinMap>> homs(k);
            for (std::size_t i = 0; i < k; ++i)
                homs[i] = cone ? enumerate_morphisms(d.category, probe, *d.objects[i], caps)
                               : enumerate_morphisms(d.category, *d.objects[i], probe, caps);
            std::vector<FinMap> family(k);
            std::string failure;
            std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
                if (i == k) {
                    ++families_checked;
                    auto facts = cone ? cone_factorizations(d.category, probe, family, cand, 2, budget)
                                      : cocone_factorizations(d.category, probe, family, cand, 2, budget);
                    if (facts.size() == 1) return true;
                    failure = "probe " + std::to_string(pi) + " (" + std::to_string(probe.size()) +
                              " points), leg family " + detail::describe_family(family) + ": " +
                              (facts.empty() ? "no factorization" : "two distinct factorizations");
                    return false;
                }
                for (const auto& h : homs[i]) {
                    if (budget == 0) throw CapExceeded("leg-family search budget exhausted");
                    --budget;
                    family[i] = h;
                    bool ok = true;
                    for (const auto& a : d.arrows) {
                        if (std::max(a.src, a.dst) != i) continue;
                        ok = cone ? compose(a.map, family[a.src]) == family[a.dst]
                                  : compose(family[a.dst], a.map) == family[a.src];
                        if (!ok) break;
                    }
                    if (ok && !go(i + 1)) return false;
                }
                return true;
            };
            if (!go(0)) return CheckResult::fail(failure);
        } catch (const CapExceeded& e) {
            if (inconclusive.empty()) inconclusive = "probe " + std::to_string(pi) + ": " + e.what();
        }
    }
    if (!inconclusive.empty()) return CheckResult::inconclusive(inconclusive);
    return CheckResult::pass(std::to_string(families_checked) + " probe families factor uniquely");
}

inline CheckResult verify_universal(const Diagram& d, const ConeCert& cand, const Caps& caps = {}) {
    return verify_universal(d, cand, probe_pool(d), caps);
}

// ---------------------------------------------------------------------------
// Cross-checks

namespace detail {

inline std::vector<FinMap> leg_maps(const ConeCert& c) {
    std::vector<FinMap> out;
    for (const auto& l : c.legs) out.push_back(l.map);
    return out;
}

/// Empty when the comparison map from a to b exists, is unique and is an
/// isomorphism; otherwise the reason.
inline std::string compare_certs(Category c, const ConeCert& a, const ConeCert& b, const Caps& caps) {
    std::size_t budget = caps.search_nodes;
    auto facts = a.side == ConeSide::cone ? cone_factorizations(c, *a.apex, leg_maps(a), b, 2, budget)
                                          : cocone_factorizations(c, *b.apex, leg_maps(b), a, 2, budget);
    if (facts.size() != 1) return std::to_string(facts.size()) + " comparison maps";
    CSMorphism u{a.apex, b.apex, facts.front()};
    if (!validate_morphism(u) || !is_isomorphism(u)) return "comparison map is not an isomorphism";
    return {};
}

} // namespace detail

/// Direct formulas against the iterated equalizer/coequalizer route, PRE
/// against the pairing of TOP and EXTPMET, EMT colimits against the
/// e.m.t.-fication of PRE colimits, and underlying sets against SET.
inline CheckResult cross_check_formulas(const Diagram& d, const Caps& caps = {}) {
    try {
        require_diagram(d, "cross_check_formulas");
        const auto lim = limit(d, caps);
        const auto colim = colimit(d, caps);
        if (auto why = detail::compare_certs(d.category, lim, limit_generic(d, caps), caps); !why.empty())
            return CheckResult::fail("limit vs generic route: " + why);
        if (auto why = detail::compare_certs(d.category, colim, colimit_generic(d, caps), caps); !why.empty())
            return CheckResult::fail("colimit vs generic route: " + why);

        const auto set_lim = limit(retag(d, Category::set), caps);
        const auto set_colim = colimit(retag(d, Category::set), caps);
        if (set_lim.apex->size() != lim.apex->size())
            return CheckResult::fail("limit carrier differs from the SET limit");
        if (d.category != Category::emt && set_colim.apex->size() != colim.apex->size())
            return CheckResult::fail("colimit carrier differs from the SET colimit");

        if (d.category == Category::pre || d.category == Category::emt) {
            const auto pre = retag(d, Category::pre);
            const auto pre_lim = limit(pre, caps);
            const auto pre_colim = colimit(pre, caps);
            const auto top_lim = limit(retag(d, Category::top), caps);
            const auto met_lim = limit(retag(d, Category::extpmet), caps);
            const auto top_colim = colimit(retag(d, Category::top), caps);
            const auto met_colim = colimit(retag(d, Category::extpmet), caps);
            if (pre_lim.apex->topology != top_lim.apex->topology || pre_lim.apex->metric != met_lim.apex->metric)
                return CheckResult::fail("PRE limit is not the pairing of the TOP and EXTPMET limits");
            if (pre_colim.apex->topology != top_colim.apex->topology ||
                pre_colim.apex->metric != met_colim.apex->metric)
                return CheckResult::fail("PRE colimit is not the pairing of the TOP and EXTPMET colimits");
            if (d.category == Category::emt) {
                if (*pre_lim.apex != *lim.apex) return CheckResult::fail("EMT limit differs from the PRE limit");
                auto e = emt_fication(*pre_colim.apex);
                ConeCert reflected{e.object, {}, ConeSide::cocone};
                for (const auto& leg : pre_colim.legs)
                    reflected.legs.push_back({leg.source, e.object, compose(e.unit.map, leg.map)});
                if (auto why = detail::compare_certs(Category::emt, colim, reflected, caps); !why.empty())
                    return CheckResult::fail("EMT colimit vs emt(PRE colimit): " + why);
            }
        }
        return CheckResult::pass();
    } catch (const CapExceeded& e) {
        return CheckResult::inconclusive(e.what());
    }
}

/// Monomorphisms of these categories are the injective morphisms; checked by
/// left cancellation against all morphisms from the given probes.
inline bool is_mono_by_cancellation(Category c, const CSMorphism& f, const std::vector<SpacePtr>& probes,
                                    const Caps& caps = {}) {
    for (const auto& p : probes) {
        auto homs = enumerate_morphisms(c, *p, *f.source, caps);
        for (std::size_t i = 0; i < homs.size(); ++i)
            for (std::size_t j = i + 1; j < homs.size(); ++j)
                if (compose(f.map, homs[i]) == compose(f.map, homs[j])) return false;
    }
    return true;
}

/// Right cancellation against all morphisms into the given probes.
inline bool is_epi_by_cancellation(Category c, const CSMorphism& f, const std::vector<SpacePtr>& probes,
                                   const Caps& caps = {}) {
    for (const auto& p : probes) {
        auto homs = enumerate_morphisms(c, *f.target, *p, caps);
        for (std::size_t i = 0; i < homs.size(); ++i)
            for (std::size_t j = i + 1; j < homs.size(); ++j)
                if (compose(homs[i], f.map) == compose(homs[j], f.map)) return false;
    }
    return true;
}

} // namespace emtkit
