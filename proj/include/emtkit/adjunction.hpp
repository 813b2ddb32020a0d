#pragma once

/**
 * @file adjunction.hpp
 * @brief Hom-set bijection checks for the adjunctions between the functors of
 * functors.hpp and the corresponding inclusions or forgetful functors.
 *
 * For a left adjoint F with unit eta: X -> FX the transposition is
 * phi |-> phi o eta from Hom(FX, Y) to Hom(X, Y). For geo, whose structural map
 * is a counit eps: geo(X) -> X, the checked statement is the coreflection
 * Hom(A, geo X) -> Hom(A, X), psi |-> eps o psi, for geodesic A.
 */

#include "emtkit/functors.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace emtkit {

enum class AdjunctionKind { emt, gamma, gammabar, disc, metric_topology, trunc, mc, geo };

struct AdjunctionSpec {
    AdjunctionKind kind = AdjunctionKind::emt;
    ExtValue lambda = ExtValue::infinity();

    /// emt | gamma | gammabar | disc:<l|inf> | T | trunc:<l> | mc | geo
    static AdjunctionSpec parse(const std::string& name) {
        const auto f = FunctorSpec::parse(name);
        switch (f.kind) {
        case FunctorKind::emt: return {AdjunctionKind::emt, f.lambda};
        case FunctorKind::gamma: return {AdjunctionKind::gamma, f.lambda};
        case FunctorKind::gammabar: return {AdjunctionKind::gammabar, f.lambda};
        case FunctorKind::disc: return {AdjunctionKind::disc, f.lambda};
        case FunctorKind::metric_topology: return {AdjunctionKind::metric_topology, f.lambda};
        case FunctorKind::trunc: return {AdjunctionKind::trunc, f.lambda};
        case FunctorKind::mc: return {AdjunctionKind::mc, f.lambda};
        case FunctorKind::geo: return {AdjunctionKind::geo, f.lambda};
        }
        throw ParseError("unknown adjunction \"" + name + "\"");
    }

    std::string name() const {
        switch (kind) {
        case AdjunctionKind::emt: return "emt";
        case AdjunctionKind::gamma: return "gamma";
        case AdjunctionKind::gammabar: return "gammabar";
        case AdjunctionKind::disc: return "disc:" + lambda.to_string();
        case AdjunctionKind::metric_topology: return "T";
        case AdjunctionKind::trunc: return "trunc:" + lambda.to_string();
        case AdjunctionKind::mc: return "mc";
        case AdjunctionKind::geo: return "geo";
        }
        return "?";
    }
};

struct AdjunctionReport {
    CheckResult result;
    /// |domain| and |codomain| of the transposition map.
    std::size_t domain_count = 0;
    std::size_t codomain_count = 0;
};

/// Checks that `transpose` maps `domain` bijectively onto `codomain` (compared
/// as sets of maps) and that each element of the codomain has exactly one
/// preimage, i.e. factors uniquely through the structural map.
inline AdjunctionReport check_transposition(const std::vector<FinMap>& domain, const std::vector<FinMap>& codomain,
                                            const std::function<FinMap(const FinMap&)>& transpose) {
    AdjunctionReport r{CheckResult::pass(), domain.size(), codomain.size()};
    std::vector<FinMap> images;
    for (const auto& phi : domain) images.push_back(transpose(phi));
    std::vector<FinMap> target = codomain;
    std::sort(target.begin(), target.end());
    for (std::size_t i = 0; i < images.size(); ++i)
        if (!std::binary_search(target.begin(), target.end(), images[i])) {
            r.result = CheckResult::fail("transpose of hom-set element " + std::to_string(i) +
                                         " is not a morphism of the other side");
            return r;
        }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
        r.result = CheckResult::fail("transposition is not injective: a morphism factors twice");
        return r;
    }
    if (images.size() != target.size()) {
        r.result = CheckResult::fail("transposition is not surjective: " + std::to_string(target.size() - images.size()) +
                                     " morphisms do not factor");
        return r;
    }
    r.result = CheckResult::pass(std::to_string(images.size()) + " morphisms in bijection");
    return r;
}

/// Hom-set bijection for the named adjunction on (left_input, right_input):
///
///   emt, gammabar: X any space, Y e.m.t.              Hom_EMT(FX, Y) ~ Hom_PRE(X, Y)
///   gamma, mc:     X e.m.t., Y e.m.t.                  Hom_EMT(FX, Y) ~ Hom_EMT(X, Y)
///   trunc:l:       X e.m.t., Y e.m.t. of diam <= l     Hom_EMT(FX, Y) ~ Hom_EMT(X, Y)
///   disc:l:        X discrete topology, Y as for trunc Hom_EMT(D_l X, Y) ~ Hom_TOP(X, UY)
///   T:             X extended metric, Y e.m.t.         Hom_EMT(TX, Y) ~ Hom_EXTPMET(X, UY)
///   geo:           A geodesic e.m.t., X e.m.t.         Hom_EMT(A, geo X) ~ Hom_EMT(A, X)
///
/// Inputs outside these domains throw InvalidInput; enumeration overruns give
/// an inconclusive result.
inline AdjunctionReport check_adjunction(const AdjunctionSpec& spec, const Space& left_input,
                                         const Space& right_input, const Caps& caps = {}) {
    require_space(left_input, "check_adjunction");
    require_space(right_input, "check_adjunction");
    const Space& Y = right_input;
    auto need_emt = [](const Space& s, const char* which) {
        if (!is_emt(s)) throw InvalidInput(std::string("check_adjunction: ") + which + " input is not e.m.t.");
    };
    auto need_diameter = [&](const Space& s) {
        if (spec.lambda < diameter(s.metric))
            throw InvalidInput("check_adjunction: right input has diameter above " + spec.lambda.to_string());
    };
    try {
        auto by_unit = [&](const FunctorResult& fx, Category rhs_cat, const Space& rhs_target) {
            auto lhs = enumerate_morphisms(Category::emt, *fx.object, Y, caps);
            auto rhs = enumerate_morphisms(rhs_cat, left_input, rhs_target, caps);
            const FinMap eta = fx.unit.map;
            return check_transposition(lhs, rhs, [&](const FinMap& phi) { return compose(phi, eta); });
        };
        switch (spec.kind) {
        case AdjunctionKind::emt:
            need_emt(Y, "right");
            return by_unit(emt_fication(left_input), Category::pre, Y);
        case AdjunctionKind::gammabar:
            need_emt(Y, "right");
            return by_unit(gamma_bar(left_input), Category::pre, Y);
        case AdjunctionKind::gamma:
            need_emt(left_input, "left");
            need_emt(Y, "right");
            return by_unit(compactify(left_input), Category::emt, Y);
        case AdjunctionKind::mc:
            need_emt(left_input, "left");
            need_emt(Y, "right");
            return by_unit(metric_completion(left_input), Category::emt, Y);
        case AdjunctionKind::trunc:
            need_emt(left_input, "left");
            need_emt(Y, "right");
            need_diameter(Y);
            return by_unit(truncate_functor(left_input, spec.lambda), Category::emt, Y);
        case AdjunctionKind::disc: {
            need_emt(Y, "right");
            need_diameter(Y);
            auto fx = discretize(left_input.topology, spec.lambda, true, left_input.names);
            fx.unit.source = share(left_input);
            return by_unit(fx, Category::top, Y);
        }
        case AdjunctionKind::metric_topology: {
            need_emt(Y, "right");
            auto tx = share(metric_topology_attach(left_input.metric, left_input.names));
            FunctorResult fx{tx, {share(left_input), tx, FinMap::identity(tx->size())}, "T"};
            return by_unit(fx, Category::extpmet, Y);
        }
        case AdjunctionKind::geo: {
            if (!is_geodesic(left_input)) throw InvalidInput("check_adjunction: left input is not geodesic");
            need_emt(Y, "right");
            auto g = geodesify(Y);
            auto lhs = enumerate_morphisms(Category::emt, left_input, *g.object, caps);
            auto rhs = enumerate_morphisms(Category::emt, left_input, Y, caps);
            const FinMap eps = g.unit.map;
            return check_transposition(lhs, rhs, [&](const FinMap& psi) { return compose(eps, psi); });
        }
        }
    } catch (const CapExceeded& e) {
        return {CheckResult::inconclusive(e.what()), 0, 0};
    }
    throw InvalidInput("check_adjunction: unknown adjunction");
}

} // namespace emtkit
