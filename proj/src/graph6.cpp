#include "domstab/graph6.hpp"

#include <cstdint>
#include <vector>

#include "domstab/errors.hpp"

namespace domstab {

namespace {

constexpr int kBias = 63;
constexpr unsigned char kLongForm = 126;
constexpr std::string_view kHeader = ">>graph6<<";

class Reader {
public:
    explicit Reader(std::string_view text, std::size_t start) : text_(text), pos_(start) {}

    std::size_t pos() const { return pos_; }
    bool done() const { return pos_ >= text_.size(); }

    unsigned char peek() const {
        if (done())
            throw ParseError("truncated graph6 data", pos_);
        return static_cast<unsigned char>(text_[pos_]);
    }

    // Next 6-bit group.
    std::uint64_t sextet() {
        unsigned char c = peek();
        if (c < kBias || c > kBias + 63)
            throw ParseError("malformed graph6 byte " + std::to_string(static_cast<int>(c)), pos_);
        ++pos_;
        return c - kBias;
    }

private:
    std::string_view text_;
    std::size_t pos_;
};

std::uint64_t read_order(Reader& in) {
    if (in.peek() != kLongForm)
        return in.sextet();
    in.sextet(); // consume 126
    int groups = 3;
    if (in.peek() == kLongForm) {
        in.sextet();
        groups = 6;
    }
    std::uint64_t n = 0;
    for (int i = 0; i < groups; ++i)
        n = (n << 6) | in.sextet();
    return n;
}

void append_order(std::string& out, std::size_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
        return;
    }
    int groups = 3;
    out.push_back(static_cast<char>(kLongForm));
    if (n > 258047) {
        out.push_back(static_cast<char>(kLongForm));
        groups = 6;
    }
    for (int i = groups - 1; i >= 0; --i)
        out.push_back(static_cast<char>(((n >> (6 * i)) & 0x3f) + kBias));
}

} // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t start = text.starts_with(kHeader) ? kHeader.size() : 0;
    Reader in(text, start);
    std::uint64_t n = read_order(in);
    if (n > 100000)
        throw ParseError("graph6 order " + std::to_string(n) + " is too large", start);

    std::vector<Edge> edges;
    std::uint64_t group = 0;
    int left = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (left == 0) {
                group = in.sextet();
                left = 6;
            }
            --left;
            if ((group >> left) & 1U)
                edges.emplace_back(i, j);
        }
    }
    if (!in.done())
        throw ParseError("trailing data after graph6 string", in.pos());
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    append_order(out, n);
    unsigned group = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
    return out;
}

std::string write_dot(const Graph& g) {
    std::string out = "graph {\n";
    for (Vertex v = 0; v < g.order(); ++v)
        out += "  " + std::to_string(v) + ";\n";
    for (auto [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

} // namespace domstab
