#pragma once

#include "emtkit/error.hpp"

#include <cstddef>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>

namespace emtkit {

/// Enumeration limits. Exceeding one is reported as CapExceeded, which the
/// verification layer turns into an "inconclusive" outcome.
struct Caps {
    std::size_t product_points = 64;   // largest product set built by limits
    std::size_t enumeration = 4096;    // |dst|^|src| for morphism enumeration
    std::size_t oracle_points = 6;     // lip_sup_oracle chain enumeration
    std::size_t opens = 1u << 16;      // largest explicit open family materialized
    std::size_t search_nodes = 1u << 20; // factorization / leg-family search budget

    /// Parses "key=value,key=value". Unknown keys and bad numbers throw ParseError.
    static Caps parse(std::string_view spec) { return parse(spec, Caps{}); }

    static Caps parse(std::string_view spec, Caps base) {
        std::stringstream ss{std::string(spec)};
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            auto eq = item.find('=');
            if (eq == std::string::npos) throw ParseError("cap entry without '=': " + item);
            auto key = item.substr(0, eq);
            std::size_t value = 0;
            try {
                std::size_t used = 0;
                value = std::stoull(item.substr(eq + 1), &used);
                if (used != item.size() - eq - 1) throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw ParseError("bad cap value: " + item);
            }
            if (key == "product") base.product_points = value;
            else if (key == "enumeration") base.enumeration = value;
            else if (key == "oracle") base.oracle_points = value;
            else if (key == "opens") base.opens = value;
            else if (key == "search") base.search_nodes = value;
            else throw ParseError("unknown cap: " + key);
        }
        return base;
    }

    /// Defaults overridden by the EMTKIT_CAPS environment variable, if set.
    static Caps from_environment() {
        if (const char* env = std::getenv("EMTKIT_CAPS")) return parse(env);
        return {};
    }
};

} // namespace emtkit
