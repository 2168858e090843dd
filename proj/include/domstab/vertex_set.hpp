#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace domstab {

using Vertex = std::size_t;

/// Subset of {0, ..., universe-1} stored as a packed bitset.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
    VertexSet(std::size_t universe, std::span<const Vertex> members);

    static VertexSet full(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept;

    bool contains(Vertex v) const noexcept {
        return v < universe_ && ((words_[v / word_bits] >> (v % word_bits)) & 1U);
    }
    void insert(Vertex v);
    void erase(Vertex v);

    /// |*this ∩ other|. Universes must match.
    std::size_t intersection_count(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    VertexSet complement() const;

    /// Smallest member, or universe() when empty.
    Vertex first() const noexcept;
    /// Smallest member greater than v, or universe() when none.
    Vertex next(Vertex v) const noexcept;

    std::vector<Vertex> members() const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits) {
                f(static_cast<Vertex>(w * word_bits + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::span<const Word> words() const noexcept { return words_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    void require_same_universe(const VertexSet& other) const;
    void trim() noexcept;

    std::size_t universe_ = 0;
    std::vector<Word> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept;
};

} // namespace domstab
