#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace muperm {

// A permutation of {1..n} in one-line notation: (*this)(i) = sigma(i), 1-based.
class Permutation {
public:
    explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
        const int n = static_cast<int>(image_.size());
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int v : image_) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                throw precondition_error("not a permutation of {1..n}: repeated or out-of-range entry");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    static Permutation identity(int n) {
        if (n < 0) throw precondition_error("permutation size must be >= 0");
        std::vector<int> image(static_cast<std::size_t>(n));
        std::iota(image.begin(), image.end(), 1);
        return Permutation(std::move(image));
    }

    // The transposition exchanging i and j inside S_n.
    static Permutation transposition(int n, int i, int j) {
        if (i < 1 || j < 1 || i > n || j > n || i == j)
            throw precondition_error("transposition needs distinct points of {1..n}");
        Permutation sigma = identity(n);
        std::swap(sigma.image_[static_cast<std::size_t>(i) - 1], sigma.image_[static_cast<std::size_t>(j) - 1]);
        return sigma;
    }

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int i) const {
        if (i < 1 || i > size()) throw precondition_error("permutation argument out of range");
        return image_[static_cast<std::size_t>(i) - 1];
    }
    const std::vector<int>& image() const { return image_; }

    Permutation inverse() const {
        std::vector<int> inv(image_.size());
        for (std::size_t i = 0; i < image_.size(); ++i)
            inv[static_cast<std::size_t>(image_[i]) - 1] = static_cast<int>(i) + 1;
        return Permutation(std::move(inv));
    }

    // Number of pairs i < j with sigma(i) > sigma(j). Quadratic scan; the
    // orders handled here are far too small for anything cleverer to matter.
    int inversions() const {
        int count = 0;
        for (std::size_t i = 0; i < image_.size(); ++i)
            for (std::size_t j = i + 1; j < image_.size(); ++j)
                if (image_[i] > image_[j]) ++count;
        return count;
    }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> image_;
};

// Inversions of the transposition (i j), i < j: 2(j-i)-1, independent of n.
inline long long transposition_inversions(long long i, long long j) {
    if (i < 1 || i >= j) throw precondition_error("transposition_inversions requires 1 <= i < j");
    return 2 * (j - i) - 1;
}

}  // namespace muperm
