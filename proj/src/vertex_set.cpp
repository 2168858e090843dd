#include "domstab/vertex_set.hpp"

#include <string>

#include "domstab/errors.hpp"

namespace domstab {

namespace {

std::size_t word_count(std::size_t universe) {
    return (universe + VertexSet::word_bits - 1) / VertexSet::word_bits;
}

} // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
    for (Vertex v : members)
        insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_)
        w = ~Word{0};
    s.trim();
    return s;
}

std::size_t VertexSet::size() const noexcept {
    std::size_t count = 0;
    for (Word w : words_)
        count += static_cast<std::size_t>(std::popcount(w));
    return count;
}

bool VertexSet::empty() const noexcept {
    for (Word w : words_)
        if (w)
            return false;
    return true;
}

void VertexSet::insert(Vertex v) {
    if (v >= universe_)
        throw GraphError("vertex " + std::to_string(v) + " outside universe of size " +
                         std::to_string(universe_));
    words_[v / word_bits] |= Word{1} << (v % word_bits);
}

void VertexSet::erase(Vertex v) {
    if (v >= universe_)
        throw GraphError("vertex " + std::to_string(v) + " outside universe of size " +
                         std::to_string(universe_));
    words_[v / word_bits] &= ~(Word{1} << (v % word_bits));
}

std::size_t VertexSet::intersection_count(const VertexSet& other) const {
    require_same_universe(other);
    std::size_t count = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        count += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return count;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    require_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    require_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    require_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    require_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~other.words_[i];
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet out(*this);
    for (auto& w : out.words_)
        w = ~w;
    out.trim();
    return out;
}

Vertex VertexSet::first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w])
            return w * word_bits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return universe_;
}

Vertex VertexSet::next(Vertex v) const noexcept {
    ++v;
    if (v >= universe_)
        return universe_;
    std::size_t w = v / word_bits;
    Word bits = words_[w] & (~Word{0} << (v % word_bits));
    while (true) {
        if (bits)
            return w * word_bits + static_cast<std::size_t>(std::countr_zero(bits));
        if (++w == words_.size())
            return universe_;
        bits = words_[w];
    }
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

void VertexSet::require_same_universe(const VertexSet& other) const {
    if (universe_ != other.universe_)
        throw GraphError("vertex set universe mismatch: " + std::to_string(universe_) + " vs " +
                         std::to_string(other.universe_));
}

void VertexSet::trim() noexcept {
    if (universe_ % word_bits != 0 && !words_.empty())
        words_.back() &= (Word{1} << (universe_ % word_bits)) - 1;
}

std::size_t VertexSetHash::operator()(const VertexSet& s) const noexcept {
    std::size_t h = std::hash<std::size_t>{}(s.universe());
    for (auto w : s.words())
        h ^= std::hash<VertexSet::Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

} // namespace domstab
