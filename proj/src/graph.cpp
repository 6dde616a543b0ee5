#include "uvc/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include "uvc/error.hpp"

namespace uvc {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {}

std::size_t Graph::size() const
{
    std::size_t total = 0;
    for (Word w : rows_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total / 2;
}

void Graph::add_edge(std::size_t i, std::size_t j)
{
    if (i >= n_ || j >= n_)
        throw Error(ErrorCode::OutOfRange, "edge endpoint out of range");
    if (i == j)
        throw Error(ErrorCode::InvalidArgument, "loop at vertex " + std::to_string(i));
    rows_[i * words_ + (j >> 6)] |= Word{1} << (j & 63);
    rows_[j * words_ + (i >> 6)] |= Word{1} << (i & 63);
}

void Graph::remove_edge(std::size_t i, std::size_t j)
{
    if (i >= n_ || j >= n_)
        throw Error(ErrorCode::OutOfRange, "edge endpoint out of range");
    rows_[i * words_ + (j >> 6)] &= ~(Word{1} << (j & 63));
    rows_[j * words_ + (i >> 6)] &= ~(Word{1} << (i & 63));
}

std::size_t Graph::degree(std::size_t i) const
{
    std::size_t d = 0;
    for (Word w : row(i))
        d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

std::vector<std::size_t> Graph::neighbors(std::size_t i) const
{
    std::vector<std::size_t> out;
    auto r = row(i);
    for (std::size_t w = 0; w < words_; ++w) {
        Word bits = r[w];
        while (bits) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j : neighbors(i))
            if (i < j)
                out.push_back({i, j});
    return out;
}

Graph complete_graph(std::size_t n)
{
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

Graph cycle_graph(std::size_t n)
{
    if (n < 3)
        throw Error(ErrorCode::OutOfRange, "cycle needs at least 3 vertices");
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(std::size_t n)
{
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

Graph complement(const Graph& g)
{
    const std::size_t n = g.order();
    Graph out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j))
                out.add_edge(i, j);
    return out;
}

namespace {

void bfs_from(const Graph& g, std::size_t source, std::span<int> dist)
{
    std::fill(dist.begin(), dist.end(), kUnreachable);
    dist[source] = 0;
    std::deque<std::size_t> queue{source};
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t v : g.neighbors(u)) {
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
}

} // namespace

std::vector<int> distance_matrix(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<int> dist(n * n);
    for (std::size_t s = 0; s < n; ++s)
        bfs_from(g, s, std::span<int>(dist.data() + s * n, n));
    return dist;
}

Graph distance_two_graph(const Graph& g)
{
    const std::size_t n = g.order();
    const std::size_t words = g.words_per_row();
    Graph out(n);
    // j is at distance two from i iff some neighbour of i is adjacent to j
    // and j is neither i nor a neighbour of i.
    std::vector<Graph::Word> reach(words);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(reach.begin(), reach.end(), 0);
        for (std::size_t u : g.neighbors(i)) {
            auto r = g.row(u);
            for (std::size_t w = 0; w < words; ++w)
                reach[w] |= r[w];
        }
        auto own = g.row(i);
        for (std::size_t w = 0; w < words; ++w)
            reach[w] &= ~own[w];
        for (std::size_t j = i + 1; j < n; ++j)
            if ((reach[j >> 6] >> (j & 63)) & 1U)
                out.add_edge(i, j);
    }
    return out;
}

std::vector<std::vector<std::size_t>> components(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        std::vector<std::size_t> comp{s};
        seen[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (std::size_t v : g.neighbors(comp[head])) {
                if (!seen[v]) {
                    seen[v] = true;
                    comp.push_back(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return g.order() <= 1 || components(g).size() == 1;
}

bool is_bipartite(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<int> side(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v : g.neighbors(u)) {
                if (side[v] < 0) {
                    side[v] = 1 - side[u];
                    stack.push_back(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_complete_multipartite(const Graph& g)
{
    const std::size_t n = g.order();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || g.adjacent(i, j))
                continue;
            for (std::size_t k = 0; k < n; ++k)
                if (k != i && !g.adjacent(j, k) && g.adjacent(i, k))
                    return false;
        }
    return true;
}

std::optional<std::size_t> is_regular(const Graph& g)
{
    if (g.order() == 0)
        return 0;
    const std::size_t k = g.degree(0);
    for (std::size_t i = 1; i < g.order(); ++i)
        if (g.degree(i) != k)
            return std::nullopt;
    return k;
}

std::optional<SrgParams> srg_params(const Graph& g)
{
    auto k = is_regular(g);
    if (!k)
        return std::nullopt;
    const std::size_t n = g.order();
    const std::size_t words = g.words_per_row();
    std::optional<std::size_t> a, c;
    for (std::size_t i = 0; i < n; ++i) {
        auto ri = g.row(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            auto rj = g.row(j);
            std::size_t common = 0;
            for (std::size_t w = 0; w < words; ++w)
                common += static_cast<std::size_t>(std::popcount(ri[w] & rj[w]));
            auto& slot = g.adjacent(i, j) ? a : c;
            if (!slot)
                slot = common;
            else if (*slot != common)
                return std::nullopt;
        }
    }
    if (!a || !c)
        return std::nullopt;
    return SrgParams{n, *k, *a, *c};
}

bool is_spanning_subgraph(const Graph& h, const Graph& g)
{
    if (h.order() != g.order())
        throw Error(ErrorCode::DimensionMismatch, "spanning subgraph check needs equal orders ("
                        + std::to_string(h.order()) + " vs " + std::to_string(g.order()) + ")");
    for (std::size_t i = 0; i < h.order(); ++i) {
        auto rh = h.row(i);
        auto rg = g.row(i);
        for (std::size_t w = 0; w < rh.size(); ++w)
            if (rh[w] & ~rg[w])
                return false;
    }
    return true;
}

} // namespace uvc
