#pragma once

#include "emtkit/error.hpp"

#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

namespace emtkit {

namespace detail {

// Plain union-find with path halving; used to generate equivalence relations.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
    }

    std::size_t size() const noexcept { return parent_.size(); }

private:
    std::vector<std::size_t> parent_;
};

} // namespace detail

/// Partition of {0, ..., n-1}. Classes are numbered in order of their
/// smallest member and each class lists its members in increasing order, so
/// two partitions are equal iff their representations are equal.
class Partition {
public:
    Partition() = default;

    /// Canonicalizes an arbitrary labelling (points with equal labels share a class).
    template <class Label>
    static Partition from_labels(std::span<const Label> labels) {
        Partition p;
        p.class_of_.resize(labels.size());
        std::vector<std::pair<Label, std::size_t>> seen;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            std::size_t cls = seen.size();
            for (const auto& [label, idx] : seen)
                if (label == labels[i]) {
                    cls = idx;
                    break;
                }
            if (cls == seen.size()) {
                seen.emplace_back(labels[i], cls);
                p.classes_.emplace_back();
            }
            p.class_of_[i] = cls;
            p.classes_[cls].push_back(i);
        }
        return p;
    }

    static Partition from_labels(const std::vector<std::size_t>& labels) {
        return from_labels(std::span<const std::size_t>(labels));
    }

    static Partition from_union_find(detail::UnionFind& uf) {
        std::vector<std::size_t> roots(uf.size());
        for (std::size_t i = 0; i < uf.size(); ++i) roots[i] = uf.find(i);
        return from_labels(roots);
    }

    static Partition singletons(std::size_t n) {
        std::vector<std::size_t> labels(n);
        std::iota(labels.begin(), labels.end(), 0);
        return from_labels(labels);
    }

    static Partition whole(std::size_t n) { return from_labels(std::vector<std::size_t>(n, 0)); }

    std::size_t size() const noexcept { return class_of_.size(); }
    std::size_t class_count() const noexcept { return classes_.size(); }
    std::size_t class_of(std::size_t point) const { return class_of_.at(point); }
    const std::vector<std::size_t>& members(std::size_t cls) const { return classes_.at(cls); }
    const std::vector<std::vector<std::size_t>>& classes() const noexcept { return classes_; }
    const std::vector<std::size_t>& labels() const noexcept { return class_of_; }
    std::size_t representative(std::size_t cls) const { return classes_.at(cls).front(); }
    bool same_class(std::size_t a, std::size_t b) const { return class_of(a) == class_of(b); }
    bool is_discrete() const noexcept { return classes_.size() == class_of_.size(); }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::size_t> class_of_;
    std::vector<std::vector<std::size_t>> classes_;
};

/// Finest partition coarser than both arguments.
inline Partition join_partitions(const Partition& p, const Partition& q) {
    if (p.size() != q.size()) throw InvalidInput("join_partitions: size mismatch");
    detail::UnionFind uf(p.size());
    for (const auto* part : {&p, &q})
        for (const auto& cls : part->classes())
            for (std::size_t i = 1; i < cls.size(); ++i) uf.unite(cls[0], cls[i]);
    return Partition::from_union_find(uf);
}

} // namespace emtkit
