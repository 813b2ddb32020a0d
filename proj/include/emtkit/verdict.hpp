#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace emtkit {

/// Result of a validity predicate that can explain itself.
struct Verdict {
    bool ok = true;
    std::string reason;
    std::vector<std::size_t> witness;

    static Verdict pass() { return {}; }
    static Verdict fail(std::string why, std::vector<std::size_t> witness = {}) {
        return {false, std::move(why), std::move(witness)};
    }
    explicit operator bool() const noexcept { return ok; }
};

/// Three-valued outcome of a bounded verification.
enum class Outcome { pass, fail, inconclusive };

inline const char* to_string(Outcome o) {
    switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::inconclusive: return "inconclusive";
    }
    return "?";
}

struct CheckResult {
    Outcome outcome = Outcome::pass;
    std::string detail;

    bool passed() const noexcept { return outcome == Outcome::pass; }
    static CheckResult pass(std::string detail = {}) { return {Outcome::pass, std::move(detail)}; }
    static CheckResult fail(std::string detail) { return {Outcome::fail, std::move(detail)}; }
    static CheckResult inconclusive(std::string detail) {
        return {Outcome::inconclusive, std::move(detail)};
    }
};

} // namespace emtkit
