#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "deckard/errors.hpp"

namespace deckard {

// An element of S_n as the array of images of 0..n-1.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<char> seen(images_.size(), 0);
        for (int v : images_) {
            if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
                throw ArgumentError("not a permutation of 0..n-1");
            seen[v] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 0);
        return Permutation(std::move(im));
    }

    static Permutation transposition(int n, int a, int b) {
        Permutation p = identity(n);
        if (a < 0 || b < 0 || a >= n || b >= n) throw ArgumentError("transposition out of range");
        std::swap(p.images_[a], p.images_[b]);
        return p;
    }

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const {
        std::vector<int> inv(images_.size());
        for (int i = 0; i < n(); ++i) inv[images_[i]] = i;
        return Permutation(std::move(inv));
    }

    // this after other: (a * b)(i) = a(b(i))
    Permutation operator*(const Permutation& other) const {
        if (n() != other.n()) throw ArgumentError("permutation size mismatch");
        std::vector<int> im(images_.size());
        for (int i = 0; i < n(); ++i) im[i] = images_[other.images_[i]];
        return Permutation(std::move(im));
    }

    bool operator==(const Permutation& other) const { return images_ == other.images_; }

private:
    std::vector<int> images_;
};

// Calls fn(images) for every element of S_n in lexicographic order.
template <class Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    do {
        fn(const_cast<const std::vector<int>&>(im));
    } while (std::next_permutation(im.begin(), im.end()));
}

template <class Rng>
Permutation random_permutation(int n, Rng& rng) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    std::shuffle(im.begin(), im.end(), rng);
    return Permutation(std::move(im));
}

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

}  // namespace deckard
