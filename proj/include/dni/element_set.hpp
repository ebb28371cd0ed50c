#pragma once

/**
 * @file element_set.hpp
 * @brief Dense bit set over the element indices of a finite ring.
 */

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace dni {

/// Fixed-universe bit set. Element `i` of a finite ring is bit `i`.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    std::size_t universe() const { return universe_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const ElementSet& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }

    bool intersects(const ElementSet& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k]) return true;
        return false;
    }

    ElementSet& operator&=(const ElementSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    ElementSet& operator|=(const ElementSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

    /// Complement within the universe.
    ElementSet complement() const {
        ElementSet r(universe_);
        for (std::size_t i = 0; i < universe_; ++i)
            if (!test(i)) r.set(i);
        return r;
    }

    /// Indices in increasing order.
    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for (std::size_t k = 0; k < words_.size(); ++k) {
            auto w = words_[k];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(k * 64 + static_cast<std::size_t>(b));
                w &= w - 1;
            }
        }
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            auto w = words_[k];
            while (w) {
                int b = std::countr_zero(w);
                f(k * 64 + static_cast<std::size_t>(b));
                w &= w - 1;
            }
        }
    }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;

    /// Orders by cardinality first, then by the member list.
    friend bool operator<(const ElementSet& a, const ElementSet& b) {
        auto ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return a.members() < b.members();
    }

    std::size_t hash() const {
        std::size_t h = universe_;
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace dni
