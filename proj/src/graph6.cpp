#include "uvc/graph6.hpp"

#include "uvc/error.hpp"

namespace uvc {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxByte = 126;

int decode_byte(char ch)
{
    int v = static_cast<unsigned char>(ch);
    if (v < kOffset || v > kMaxByte)
        throw Error(ErrorCode::MalformedGraph6, "byte " + std::to_string(v) + " outside 63..126");
    return v - kOffset;
}

} // namespace

Graph parse_graph6(std::string_view bytes)
{
    while (!bytes.empty() && (bytes.back() == '\n' || bytes.back() == '\r'))
        bytes.remove_suffix(1);
    if (bytes.empty())
        throw Error(ErrorCode::MalformedGraph6, "empty record");

    std::size_t n = 0;
    std::size_t pos = 0;
    if (static_cast<unsigned char>(bytes[0]) == kMaxByte) {
        if (bytes.size() < 4)
            throw Error(ErrorCode::MalformedGraph6, "truncated order prefix");
        if (static_cast<unsigned char>(bytes[1]) == kMaxByte)
            throw Error(ErrorCode::MalformedGraph6, "orders above 258047 are not supported");
        for (pos = 1; pos < 4; ++pos)
            n = (n << 6) | static_cast<std::size_t>(decode_byte(bytes[pos]));
    } else {
        n = static_cast<std::size_t>(decode_byte(bytes[0]));
        pos = 1;
    }

    const std::size_t bits = n * (n == 0 ? 0 : n - 1) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (bytes.size() - pos != body)
        throw Error(ErrorCode::MalformedGraph6, "expected " + std::to_string(body) + " adjacency bytes for n="
                        + std::to_string(n) + ", got " + std::to_string(bytes.size() - pos));

    Graph g(n);
    std::size_t bit = 0;
    int group = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            if (bit % 6 == 0)
                group = decode_byte(bytes[pos + bit / 6]);
            if ((group >> (5 - bit % 6)) & 1)
                g.add_edge(i, j);
        }
    }
    return g;
}

std::string write_graph6(const Graph& g)
{
    const std::size_t n = g.order();
    if (n > kGraph6MaxOrder)
        throw Error(ErrorCode::OutOfRange, "graph6 order limit is 258047");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kOffset));
    } else {
        out.push_back(static_cast<char>(kMaxByte));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
    }
    int group = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kOffset));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((group << (6 - filled)) + kOffset));
    return out;
}

} // namespace uvc
