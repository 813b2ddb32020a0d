#pragma once

/**
 * @file functors.hpp
 * @brief The named functors on spaces, each returning its object together with
 * the structural map that links it to the input.
 *
 * emt        e.m.t.-fication (reflector onto e.m.t. spaces), unit c
 * gamma      compactification of an e.m.t. space, unit iota
 * gammabar   gamma after emt, unit iota o c
 * mc         metric completion (closure of iota(X) in the compactification)
 * geo        geodesification; its structural map is the counit geo(X) -> X
 * trunc:l    lambda-truncation d /\ l, unit identity
 * disc:l     lambda-discrete distance on a Tychonoff (finite: discrete) topology
 * T          extended metric space with its induced topology
 *
 * At finite scale gamma, mc and geo are degenerate (finite e.m.t. spaces are
 * compact and complete, and continuous curves into them are constant); the
 * constructions still follow the general recipe so that their universal
 * properties can be checked against enumeration.
 */

#include "emtkit/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace emtkit {

enum class Direction { unit, counit };

struct FunctorResult {
    SpacePtr object;
    /// unit: input -> object. counit: object -> input.
    CSMorphism unit;
    std::string tag;
    Direction direction = Direction::unit;
    std::vector<std::string> flags = {};
};

namespace detail {

inline std::string class_name(const std::vector<std::string>& names, const std::vector<std::size_t>& cls) {
    if (cls.size() == 1) return names[cls.front()];
    std::string out = "{";
    for (std::size_t i = 0; i < cls.size(); ++i) out += (i ? "," : "") + names[cls[i]];
    return out + "}";
}

// Appends "#k" to later duplicates so that names stay unique.
inline std::vector<std::string> uniquify(std::vector<std::string> names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        std::size_t k = 1;
        auto clash = [&](const std::string& s) {
            for (std::size_t j = 0; j < i; ++j)
                if (names[j] == s) return true;
            return false;
        };
        std::string base = names[i];
        while (clash(names[i])) names[i] = base + "#" + std::to_string(k++);
    }
    return names;
}

inline std::vector<std::string> quotient_names(const std::vector<std::string>& names, const Partition& p) {
    std::vector<std::string> out;
    for (const auto& cls : p.classes()) out.push_back(class_name(names, cls));
    return uniquify(std::move(out));
}

inline std::vector<std::string> subset_names(const std::vector<std::string>& names, PointSet subset) {
    std::vector<std::string> out;
    for (auto x : members(subset)) out.push_back(names[x]);
    return out;
}

} // namespace detail

/// The unique h with h o surjection = g, or nullopt when g is not constant on
/// the fibres of the surjection.
inline std::optional<FinMap> factor_through_surjection(const FinMap& surjection, const FinMap& g) {
    if (surjection.source_size() != g.source_size()) throw InvalidInput("factor_through_surjection: size mismatch");
    const std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> img(surjection.target_size(), unset);
    for (std::size_t x = 0; x < g.source_size(); ++x) {
        auto& slot = img[surjection(x)];
        if (slot == unset) slot = g(x);
        else if (slot != g(x)) return std::nullopt;
    }
    for (auto v : img)
        if (v == unset) throw InvalidInput("factor_through_surjection: map is not surjective");
    return FinMap(g.target_size(), std::move(img));
}

inline Space subspace(const Space& s, PointSet subset) {
    return Space{detail::subset_names(s.names, subset), topology_subspace(s.topology, subset),
                 metric_restrict(s.metric, subset)};
}

inline FinMap subset_inclusion(PointSet subset, std::size_t ambient) {
    return FinMap(ambient, members(subset));
}

/// Quotient of X by the zero classes of its recovered distance, with the
/// induced distance and the initial topology of the bounded 1-Lipschitz
/// continuous functions on the quotient. The unit c is the quotient map.
inline FunctorResult emt_fication(const Space& s) {
    require_space(s, "emt_fication");
    const auto rho = recovered_distance(s);
    const Partition zeros = zero_classes(rho);

    ExtPseudoMetric q(zeros.class_count());
    for (std::size_t a = 0; a < zeros.class_count(); ++a)
        for (std::size_t b = a + 1; b < zeros.class_count(); ++b)
            q.set(a, b, rho(zeros.representative(a), zeros.representative(b)));

    auto names = detail::quotient_names(s.names, zeros);
    const Space intermediate{names, topology_quotient(s.topology, zeros), q};
    FiniteTopology initial = partition_topology(zero_classes(recovered_distance(intermediate)));
    if (!initial.is_discrete())
        throw ConsistencyError("emt_fication: initial topology on the quotient is not discrete");

    auto object = share(Space{std::move(names), std::move(initial), std::move(q)});
    FunctorResult r{object, {nullptr, object, FinMap(zeros.class_count(), zeros.labels())}, "emt"};
    r.unit.source = share(s);
    if (!r.unit.map.is_surjective()) throw ConsistencyError("emt_fication: unit is not surjective");
    if (!validate_morphism(r.unit)) throw ConsistencyError("emt_fication: unit is not continuous-short");
    if (!is_emt(*object)) throw ConsistencyError("emt_fication: output is not e.m.t.");
    return r;
}

/// Unique continuous-short map between e.m.t.-fications commuting with the units.
inline CSMorphism emt_fication_morphism(const CSMorphism& phi, const FunctorResult& ex, const FunctorResult& ey) {
    require_morphism(phi, "emt_fication_morphism");
    auto h = factor_through_surjection(ex.unit.map, compose(ey.unit.map, phi.map));
    if (!h) throw ConsistencyError("emt_fication_morphism: map does not descend to the quotient");
    CSMorphism out{ex.object, ey.object, *h};
    if (!validate_morphism(out)) throw ConsistencyError("emt_fication_morphism: induced map is not continuous-short");
    return out;
}

inline CSMorphism emt_fication_morphism(const CSMorphism& phi) {
    return emt_fication_morphism(phi, emt_fication(*phi.source), emt_fication(*phi.target));
}

/// Stone-Cech compactification of a finite space: the discrete space on the
/// continuity classes with the class projection. The projection is a
/// homeomorphism onto its image iff the space is Tychonoff (finite: discrete).
inline std::pair<FiniteTopology, FinMap> stone_cech_finite(const FiniteTopology& t) {
    const Partition classes = continuity_partition(t);
    FinMap i(classes.class_count(), classes.labels());
    const FiniteTopology beta = FiniteTopology::discrete(classes.class_count());
    const bool embeds = i.is_injective() && t == FiniteTopology::discrete(t.size());
    if (embeds != t.is_discrete()) throw ConsistencyError("stone_cech_finite: embedding criterion disagrees");
    return {beta, i};
}

/// Compactification of an e.m.t. space: e.m.t.-fication of the Stone-Cech
/// compactification carrying the extension of the recovered distance.
inline FunctorResult compactify(const Space& s) {
    require_space(s, "compactify");
    if (!is_emt(s)) throw InvalidInput("compactify: input is not an e.m.t. space");
    auto [beta_top, i] = stone_cech_finite(s.topology);
    const Partition classes = continuity_partition(s.topology);
    // sup over LIP_{b,1} of |f_beta(a) - f_beta(b)|: f_beta is f read on classes.
    ExtPseudoMetric beta_d = chain_quotient_metric(s.metric, classes);
    Space beta{detail::quotient_names(s.names, classes), std::move(beta_top), std::move(beta_d)};
    auto e = emt_fication(beta);
    auto src = share(s);
    CSMorphism iota{src, e.object, compose(e.unit.map, i)};
    if (!validate_morphism(iota)) throw ConsistencyError("compactify: unit is not continuous-short");
    PointSet image = 0;
    for (std::size_t x = 0; x < s.size(); ++x) image |= singleton(iota(x));
    if (e.object->topology.closure(image) != e.object->topology.points())
        throw ConsistencyError("compactify: image of the unit is not dense");
    if (!is_embedding(iota)) throw ConsistencyError("compactify: unit is not an embedding");
    return {e.object, iota, "gamma"};
}

inline FunctorResult gamma_bar(const Space& s) {
    auto e = emt_fication(s);
    auto g = compactify(*e.object);
    CSMorphism unit{e.unit.source, g.object, compose(g.unit.map, e.unit.map)};
    return {g.object, unit, "gammabar"};
}

/// (t, lambda-discrete distance). When hausdorff_required the topology must be
/// Tychonoff, which for finite spaces means discrete.
inline FunctorResult discretize(const FiniteTopology& t, const ExtValue& lambda, bool hausdorff_required = true,
                                std::vector<std::string> names = {}) {
    if (lambda.is_zero()) throw InvalidInput("discretize: lambda must be positive");
    const bool tychonoff = is_hausdorff(t);
    if (hausdorff_required && !tychonoff) throw InvalidInput("discretize: topology is not Tychonoff");
    auto object = share(make_space(t, ExtPseudoMetric::uniform(t.size(), lambda), std::move(names)));
    if (tychonoff && !is_emt(*object)) throw ConsistencyError("discretize: output is not e.m.t.");
    return {object, identity_morphism(object), "disc:" + lambda.to_string()};
}

/// Extended metric space with the topology induced by its distance. Open balls
/// of radius min(1, distance to the nearest other point) are singletons, so the
/// induced topology of a finite extended metric is discrete.
inline Space metric_topology_attach(const ExtPseudoMetric& m, std::vector<std::string> names = {}) {
    if (!is_extended_metric(m)) throw InvalidInput("metric_topology_attach: not an extended metric");
    std::vector<PointSet> minimal(m.size(), 0);
    for (std::size_t x = 0; x < m.size(); ++x) {
        ExtValue radius(1);
        for (std::size_t y = 0; y < m.size(); ++y)
            if (y != x) radius = minimum(radius, m(x, y));
        for (std::size_t y = 0; y < m.size(); ++y)
            if (m(x, y) < radius) minimal[x] |= singleton(y);
    }
    Space out = make_space(FiniteTopology::from_minimal_neighborhoods(std::move(minimal)), m, std::move(names));
    if (!is_emt(out)) throw ConsistencyError("metric_topology_attach: output is not e.m.t.");
    return out;
}

inline FunctorResult truncate_functor(const Space& s, const ExtValue& lambda) {
    require_space(s, "truncate_functor");
    if (!is_emt(s)) throw InvalidInput("truncate_functor: input is not an e.m.t. space");
    auto object = share(Space{s.names, s.topology, truncate_metric(s.metric, lambda)});
    if (!is_emt(*object) || lambda < diameter(object->metric))
        throw ConsistencyError("truncate_functor: output is not an e.m.t. space of diameter <= lambda");
    return {object, {share(s), object, FinMap::identity(s.size())}, "trunc:" + lambda.to_string()};
}

/// Closure of iota(X) in the compactification for the compactified distance.
inline FunctorResult metric_completion(const Space& s) {
    auto g = compactify(s);
    const auto& gamma = *g.object;
    PointSet closure = 0;
    for (std::size_t z = 0; z < gamma.size(); ++z)
        for (std::size_t x = 0; x < s.size(); ++x)
            if (gamma.metric(g.unit(x), z).is_zero()) closure |= singleton(z);
    auto object = share(subspace(gamma, closure));
    // reindex iota into the closure
    auto pts = members(closure);
    std::vector<std::size_t> img(s.size());
    for (std::size_t x = 0; x < s.size(); ++x)
        img[x] = static_cast<std::size_t>(std::find(pts.begin(), pts.end(), g.unit(x)) - pts.begin());
    CSMorphism unit{g.unit.source, object, FinMap(pts.size(), std::move(img))};
    completion_finite(object->metric);
    if (!is_emt(*object) || !validate_morphism(unit))
        throw ConsistencyError("metric_completion: output is not a complete e.m.t. space");
    return {object, unit, "mc"};
}

/// (X, tau, d_l). The structural map is the counit geo(X) -> X (identity), which
/// is short because d <= d_l.
inline FunctorResult geodesify(const Space& s) {
    require_space(s, "geodesify");
    if (!is_emt(s)) throw InvalidInput("geodesify: input is not an e.m.t. space");
    auto object = share(Space{s.names, s.topology, length_distance_finite(s.metric, s.topology.is_discrete())});
    CSMorphism counit{object, share(s), FinMap::identity(s.size())};
    if (!validate_morphism(counit)) throw ConsistencyError("geodesify: counit is not continuous-short");
    FunctorResult r{object, counit, "geo", Direction::counit, {}};
    r.flags.push_back("degenerate-at-finite-scale");
    return r;
}

/// e.m.t. space whose distance equals its own length distance.
inline bool is_geodesic(const Space& s) {
    return is_emt(s) && s.metric == length_distance_finite(s.metric, s.topology.is_discrete());
}

enum class FunctorKind { emt, gamma, gammabar, mc, geo, trunc, disc, metric_topology };

struct FunctorSpec {
    FunctorKind kind = FunctorKind::emt;
    ExtValue lambda = ExtValue::infinity();

    /// emt | gamma | gammabar | mc | geo | trunc:<l> | disc:<l|inf> | T
    static FunctorSpec parse(const std::string& name) {
        auto colon = name.find(':');
        const std::string head = name.substr(0, colon);
        auto arg = [&]() {
            if (colon == std::string::npos) throw ParseError("functor " + head + " needs a parameter");
            auto v = ExtValue::parse(name.substr(colon + 1));
            if (v.is_zero()) throw ParseError("functor parameter must be positive");
            return v;
        };
        auto bare = [&](FunctorKind k) {
            if (colon != std::string::npos) throw ParseError("functor " + head + " takes no parameter");
            return FunctorSpec{k, ExtValue::infinity()};
        };
        if (head == "emt") return bare(FunctorKind::emt);
        if (head == "gamma") return bare(FunctorKind::gamma);
        if (head == "gammabar") return bare(FunctorKind::gammabar);
        if (head == "mc") return bare(FunctorKind::mc);
        if (head == "geo") return bare(FunctorKind::geo);
        if (head == "T") return bare(FunctorKind::metric_topology);
        if (head == "trunc") {
            auto l = arg();
            if (l.is_infinite()) throw ParseError("trunc needs a finite parameter");
            return {FunctorKind::trunc, l};
        }
        if (head == "disc") return {FunctorKind::disc, arg()};
        throw ParseError("unknown functor \"" + name + "\"");
    }

    std::string name() const {
        switch (kind) {
        case FunctorKind::emt: return "emt";
        case FunctorKind::gamma: return "gamma";
        case FunctorKind::gammabar: return "gammabar";
        case FunctorKind::mc: return "mc";
        case FunctorKind::geo: return "geo";
        case FunctorKind::trunc: return "trunc:" + lambda.to_string();
        case FunctorKind::disc: return "disc:" + lambda.to_string();
        case FunctorKind::metric_topology: return "T";
        }
        return "?";
    }
};

inline FunctorResult apply_functor(const FunctorSpec& f, const Space& s) {
    switch (f.kind) {
    case FunctorKind::emt: return emt_fication(s);
    case FunctorKind::gamma: return compactify(s);
    case FunctorKind::gammabar: return gamma_bar(s);
    case FunctorKind::mc: return metric_completion(s);
    case FunctorKind::geo: return geodesify(s);
    case FunctorKind::trunc: return truncate_functor(s, f.lambda);
    case FunctorKind::disc: return discretize(s.topology, f.lambda, true, s.names);
    case FunctorKind::metric_topology: {
        auto object = share(metric_topology_attach(s.metric, s.names));
        return {object, identity_morphism(object), "T"};
    }
    }
    throw InvalidInput("apply_functor: unknown functor");
}

/// Action on a morphism phi: X -> Y, given the functor applied to X and Y. For
/// unit-type results the image is the unique h with h o unit_X = unit_Y o phi
/// (every unit here is surjective); for the counit of geo it is phi itself.
inline CSMorphism apply_functor(const FunctorResult& fx, const FunctorResult& fy, const CSMorphism& phi) {
    FinMap h;
    if (fx.direction == Direction::counit || fx.unit.source == fx.unit.target) {
        h = phi.map;
    } else {
        auto lifted = factor_through_surjection(fx.unit.map, compose(fy.unit.map, phi.map));
        if (!lifted) throw ConsistencyError("apply_functor: morphism does not descend along the unit");
        h = *lifted;
    }
    CSMorphism out{fx.object, fy.object, h};
    if (!validate_morphism(out)) throw ConsistencyError("apply_functor: image morphism is not continuous-short");
    return out;
}

} // namespace emtkit
