#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "aqn/graph.hpp"

namespace aqn {

// Fixed-width bit vector over 64-bit words.  The census kernels juggle
// neighborhoods of up to 2^n vertices; all hot-path operations here are
// branch-free word loops.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::uint32_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::uint32_t size_bits() const { return nbits_; }

    void set(std::uint32_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::uint32_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    void copy_from(const BitVec& a) { words_ = a.words_; }

    void assign_or(const BitVec& a, const BitVec& b) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] = a.words_[w] | b.words_[w];
    }
    void or_with(const BitVec& a) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= a.words_[w];
    }
    void and_with(const BitVec& a) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= a.words_[w];
    }
    void and_not_with(const BitVec& a) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~a.words_[w];
    }

    std::uint32_t popcount() const {
        std::uint32_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::uint32_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                const int b = std::countr_zero(w);
                fn(static_cast<std::uint32_t>(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

private:
    std::uint32_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

// Per-vertex neighborhood bitmasks of a materialized graph.
class NeighborTable {
public:
    explicit NeighborTable(const AugCube& g) {
        const std::uint32_t nv = g.num_vertices();
        masks_.reserve(nv);
        for (std::uint32_t v = 0; v < nv; ++v) {
            BitVec m(nv);
            for (VertexId w : g.neighbors_of(v)) m.set(w);
            masks_.push_back(std::move(m));
        }
    }

    const BitVec& operator[](std::uint32_t v) const { return masks_[v]; }

private:
    std::vector<BitVec> masks_;
};

}  // namespace aqn
