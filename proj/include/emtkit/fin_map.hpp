#pragma once

#include "emtkit/error.hpp"

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace emtkit {

/// A function {0..source_size-1} -> {0..target_size-1}.
class FinMap {
public:
    FinMap() = default;

    FinMap(std::size_t target_size, std::vector<std::size_t> image)
        : target_size_(target_size), image_(std::move(image)) {
        for (std::size_t i = 0; i < image_.size(); ++i)
            if (image_[i] >= target_size_)
                throw InvalidInput("FinMap: image[" + std::to_string(i) + "] = " +
                                   std::to_string(image_[i]) + " out of range " +
                                   std::to_string(target_size_));
    }

    static FinMap identity(std::size_t n) {
        std::vector<std::size_t> img(n);
        std::iota(img.begin(), img.end(), 0);
        return FinMap(n, std::move(img));
    }

    static FinMap constant(std::size_t source_size, std::size_t target_size, std::size_t value) {
        return FinMap(target_size, std::vector<std::size_t>(source_size, value));
    }

    std::size_t source_size() const noexcept { return image_.size(); }
    std::size_t target_size() const noexcept { return target_size_; }
    const std::vector<std::size_t>& image() const noexcept { return image_; }
    std::size_t operator()(std::size_t x) const { return image_.at(x); }

    bool is_injective() const {
        std::vector<bool> hit(target_size_, false);
        for (auto y : image_) {
            if (hit[y]) return false;
            hit[y] = true;
        }
        return true;
    }

    bool is_surjective() const {
        std::vector<bool> hit(target_size_, false);
        std::size_t count = 0;
        for (auto y : image_)
            if (!hit[y]) {
                hit[y] = true;
                ++count;
            }
        return count == target_size_;
    }

    bool is_bijective() const { return source_size() == target_size_ && is_injective(); }

    friend bool operator==(const FinMap&, const FinMap&) = default;
    friend auto operator<=>(const FinMap& a, const FinMap& b) {
        if (auto c = a.target_size_ <=> b.target_size_; c != 0) return c;
        return a.image_ <=> b.image_;
    }

private:
    std::size_t target_size_ = 0;
    std::vector<std::size_t> image_;
};

/// g after f.
inline FinMap compose(const FinMap& g, const FinMap& f) {
    if (f.target_size() != g.source_size()) throw InvalidInput("compose: size mismatch");
    std::vector<std::size_t> img(f.source_size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = g(f(i));
    return FinMap(g.target_size(), std::move(img));
}

} // namespace emtkit
