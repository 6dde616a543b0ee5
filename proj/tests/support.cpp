#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "uvc/families.hpp"

namespace testsupport {

namespace {

using PolyMatrix = std::vector<std::vector<IntPoly>>;

IntPoly laplace_det(const PolyMatrix& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return IntPoly{1};
    if (n == 1)
        return m[0][0];
    IntPoly det;
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero())
            continue;
        PolyMatrix minor(n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (j != col)
                    minor[i - 1].push_back(m[i][j]);
        IntPoly term = m[0][col] * laplace_det(minor);
        det = col % 2 == 0 ? det + term : det - term;
    }
    return det;
}

} // namespace

IntPoly cofactor_charpoly(const IntMatrix& a)
{
    const std::size_t n = a.rows();
    PolyMatrix m(n, std::vector<IntPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = i == j ? IntPoly(std::vector<BigInt>{-a(i, j), BigInt(1)}) : IntPoly(std::vector<BigInt>{-a(i, j)});
    return laplace_det(m);
}

std::size_t rational_rank(const IntMatrix& in)
{
    const std::size_t rows = in.rows(), cols = in.cols();
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m[i][j] = Rat(in(i, j));
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][c] == 0)
                continue;
            const Rat f = m[i][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

NaiveWalk naive_walk_regularity(const Graph& g, std::size_t max_power)
{
    const std::size_t n = g.order();
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = g.adjacent(i, j) ? 1 : 0;
    const auto dist = uvc::distance_matrix(g);
    NaiveWalk out;
    if (g.size() == 0)
        return {false, false};
    IntMatrix p = IntMatrix::identity(n);
    for (std::size_t l = 0; l <= max_power; ++l) {
        std::optional<BigInt> diag, edge, two;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const int d = dist[i * n + j];
                std::optional<BigInt>* slot = d == 0 ? &diag : d == 1 ? &edge : d == 2 ? &two : nullptr;
                if (!slot)
                    continue;
                if (!*slot)
                    *slot = p(i, j);
                else if (**slot != p(i, j)) {
                    if (d == 2)
                        out.two_walk = false;
                    else
                        out.one_walk = false;
                }
            }
        p = p * a;
    }
    out.two_walk = out.two_walk && out.one_walk;
    return out;
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng() % span);
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::int64_t lo, std::int64_t hi)
{
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = static_cast<long>(uniform(rng, lo, hi));
    return m;
}

IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, std::int64_t lo, std::int64_t hi)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            m(i, j) = m(j, i) = static_cast<long>(uniform(rng, lo, hi));
    return m;
}

IntMatrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t r, std::int64_t lo,
                          std::int64_t hi)
{
    return random_matrix(rng, rows, r, lo, hi) * random_matrix(rng, r, cols, lo, hi);
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p)
{
    Graph g(n);
    const auto threshold = static_cast<std::uint64_t>(p * 1e9);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng() % 1000000000ULL < threshold)
                g.add_edge(i, j);
    return g;
}

Graph rook_graph(std::size_t a, std::size_t b)
{
    Graph g(a * b);
    for (std::size_t u = 0; u < a * b; ++u)
        for (std::size_t v = u + 1; v < a * b; ++v)
            if (u / b == v / b || u % b == v % b)
                g.add_edge(u, v);
    return g;
}

Graph complete_multipartite(std::size_t parts, std::size_t size)
{
    Graph g(parts * size);
    for (std::size_t u = 0; u < parts * size; ++u)
        for (std::size_t v = u + 1; v < parts * size; ++v)
            if (u / size != v / size)
                g.add_edge(u, v);
    return g;
}

Graph prism3()
{
    Graph g(6);
    for (std::size_t i = 0; i < 3; ++i) {
        g.add_edge(i, (i + 1) % 3);
        g.add_edge(3 + i, 3 + (i + 1) % 3);
        g.add_edge(i, 3 + i);
    }
    return g;
}

namespace {

class LatinSearch {
public:
    LatinSearch(std::size_t n, std::mt19937_64& rng) : n_(n), rng_(rng), cell_(n * n, -1) {}

    bool fill(std::size_t pos)
    {
        if (pos == n_ * n_)
            return true;
        const std::size_t r = pos / n_, c = pos % n_;
        std::vector<int> symbols(n_);
        std::iota(symbols.begin(), symbols.end(), 0);
        for (std::size_t i = n_; i > 1; --i)
            std::swap(symbols[i - 1], symbols[static_cast<std::size_t>(uniform(rng_, 0, static_cast<std::int64_t>(i) - 1))]);
        for (int s : symbols) {
            if (used(r, c, s))
                continue;
            cell_[pos] = s;
            if (fill(pos + 1))
                return true;
        }
        cell_[pos] = -1;
        return false;
    }

    const LatinSquare& square() const { return cell_; }

private:
    bool used(std::size_t r, std::size_t c, int s) const
    {
        for (std::size_t k = 0; k < n_; ++k)
            if (cell_[r * n_ + k] == s || cell_[k * n_ + c] == s)
                return true;
        return false;
    }

    std::size_t n_;
    std::mt19937_64& rng_;
    LatinSquare cell_;
};

} // namespace

std::vector<LatinSquare> latin_squares(std::size_t n, std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::set<LatinSquare> seen;
    std::vector<LatinSquare> out;
    while (out.size() < count) {
        LatinSearch search(n, rng);
        search.fill(0);
        if (seen.insert(search.square()).second)
            out.push_back(search.square());
    }
    return out;
}

Graph latin_square_graph(const LatinSquare& square, std::size_t n)
{
    Graph g(n * n);
    for (std::size_t u = 0; u < n * n; ++u)
        for (std::size_t v = u + 1; v < n * n; ++v)
            if (u / n == v / n || u % n == v % n || square[u] == square[v])
                g.add_edge(u, v);
    return g;
}

std::vector<NamedGraph> walk_regular_corpus()
{
    std::vector<NamedGraph> out;
    for (std::size_t m = 3; m <= 6; ++m)
        out.push_back({"K" + std::to_string(m), uvc::complete_graph(m)});
    for (std::size_t m : {4, 6, 8})
        out.push_back({"C" + std::to_string(m), uvc::cycle_graph(m)});
    out.push_back({"kneser(5,2)", uvc::kneser(5, 2)});
    out.push_back({"complement kneser(5,2)", uvc::complement(uvc::kneser(5, 2))});
    out.push_back({"kneser(6,2)", uvc::kneser(6, 2)});
    out.push_back({"kneser(7,2)", uvc::kneser(7, 2)});
    out.push_back({"kneser(7,3)", uvc::kneser(7, 3)});
    out.push_back({"rook 3x3", rook_graph(3, 3)});
    out.push_back({"rook 4x4", rook_graph(4, 4)});
    out.push_back({"K_{3,3}", complete_multipartite(2, 3)});
    out.push_back({"octahedron", complete_multipartite(3, 2)});
    out.push_back({"K_{3,3,3}", complete_multipartite(3, 3)});
    out.push_back({"3-cube", uvc::cayley_z2(3, {1})});
    out.push_back({"4-cube", uvc::cayley_z2(4, {1})});
    out.push_back({"clebsch", uvc::cayley_z2(4, {1, 4})});
    out.push_back({"hamming_h(5,4)", uvc::hamming_h(5, 4)});
    out.push_back({"hamming_h(6,4)", uvc::hamming_h(6, 4)});
    out.push_back({"q_kneser(2,4,2)", uvc::q_kneser({2, 4, 2})});
    out.push_back({"latin square graph order 4", latin_square_graph(latin_squares(4, 1, 7).front(), 4)});
    return out;
}

} // namespace testsupport
