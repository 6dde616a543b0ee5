#include "uvc/homcheck.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "uvc/error.hpp"
#include "uvc/exact.hpp"
#include "uvc/families.hpp"

namespace uvc {

namespace {

std::string pair_text(std::size_t a, std::size_t b)
{
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

void require_equal_ratio(const Rat& lhs, const Rat& rhs, const std::string& what)
{
    if (lhs != rhs)
        throw Error(ErrorCode::RatioMismatch,
                    what + " ratios differ: " + lhs.get_str() + " vs " + rhs.get_str());
}

Rat ratio(std::size_t a, std::size_t b)
{
    Rat r(BigInt(static_cast<unsigned long>(a)), BigInt(static_cast<unsigned long>(b)));
    r.canonicalize();
    return r;
}

void require_kneser_range(std::size_t n, std::size_t r)
{
    if (r == 0 || n <= 2 * r)
        throw Error(ErrorCode::DegenerateRange, "Kneser parameters need n > 2r >= 2, got " + pair_text(n, r));
}

// k < n < 2k - 1 with k even.
void require_hamming_range(std::size_t n, std::size_t k)
{
    if (k % 2 != 0)
        throw Error(ErrorCode::BadParity, "Hamming distance k must be even, got k=" + std::to_string(k));
    if (!(k < n && n + 1 < 2 * k))
        throw Error(ErrorCode::DegenerateRange, "Hamming parameters need k < n < 2k-1, got " + pair_text(n, k));
}

Rat q_ratio(std::uint64_t q, std::size_t a, std::size_t b)
{
    Rat r(q_bracket(a, q), q_bracket(b, q));
    r.canonicalize();
    return r;
}

std::size_t checked_size(const BigInt& v, const std::string& what)
{
    if (!v.fits_ulong_p())
        throw Error(ErrorCode::OutOfRange, what + " is too large to index");
    return v.get_ui();
}

} // namespace

VertexMap compose(const VertexMap& outer, const VertexMap& inner)
{
    if (inner.target_n != outer.source_n)
        throw Error(ErrorCode::DimensionMismatch, "maps do not chain");
    VertexMap out{inner.source_n, outer.target_n, {}};
    out.image.reserve(inner.image.size());
    for (std::size_t v : inner.image)
        out.image.push_back(outer.image.at(v));
    return out;
}

HomVerdict verify_homomorphism(const Graph& g, const Graph& h, const VertexMap& m)
{
    if (m.source_n != g.order() || m.target_n != h.order() || m.image.size() != g.order())
        throw Error(ErrorCode::DimensionMismatch, "map dimensions do not match the graphs");
    for (std::size_t v : m.image)
        if (v >= h.order())
            throw Error(ErrorCode::OutOfRange, "image index " + std::to_string(v) + " outside target");

    HomVerdict out;
    out.is_hom = true;
    for (const Edge& e : g.edges())
        if (!h.adjacent(m.image[e.i], m.image[e.j])) {
            out.is_hom = false;
            break;
        }

    std::vector<std::size_t> sorted = m.image;
    std::sort(sorted.begin(), sorted.end());
    out.is_injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

    if (out.is_hom && out.is_injective) {
        out.is_induced_embedding = true;
        const std::size_t n = g.order();
        for (std::size_t i = 0; i < n && out.is_induced_embedding; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (!g.adjacent(i, j) && h.adjacent(m.image[i], m.image[j])) {
                    out.is_induced_embedding = false;
                    break;
                }
    }
    return out;
}

bool kneser_hom_exists(std::size_t n, std::size_t r, std::size_t n2, std::size_t r2)
{
    require_kneser_range(n, r);
    require_kneser_range(n2, r2);
    require_equal_ratio(ratio(n, r), ratio(n2, r2), "Kneser");
    return n2 % n == 0;
}

VertexMap kneser_hom_map(std::size_t n, std::size_t r, std::size_t m)
{
    if (m == 0)
        throw Error(ErrorCode::InvalidArgument, "copy count m must be at least 1");
    require_kneser_range(n, r);
    const auto source = kneser_vertices(n, r);
    VertexMap out{source.size(), checked_size(binomial(m * n, m * r), "kneser target"), {}};
    out.image.reserve(source.size());
    std::vector<std::size_t> img;
    for (const auto& s : source) {
        // copies in increasing a, so the image is already sorted
        img.clear();
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t x : s)
                img.push_back(a * n + x);
        out.image.push_back(colex_rank(img));
    }
    return out;
}

bool q_kneser_necessary(std::uint64_t q, std::size_t n, std::size_t r,
                        std::uint64_t q2, std::size_t n2, std::size_t r2)
{
    if (q < 2 || q2 < 2)
        throw Error(ErrorCode::OutOfRange, "field orders must be at least 2");
    require_kneser_range(n, r);
    require_kneser_range(n2, r2);
    require_equal_ratio(q_ratio(q, n, r), q_ratio(q2, n2, r2), "q-Kneser");

    std::vector<Rat> target;
    for (std::size_t k = 1; k <= r2; ++k)
        target.push_back(q_ratio(q2, k, r2));
    for (std::size_t k = 1; k <= r; ++k)
        if (std::find(target.begin(), target.end(), q_ratio(q, k, r)) == target.end())
            return false;
    return true;
}

bool hamming_hom_exists(std::size_t n, std::size_t k, std::size_t n2, std::size_t k2)
{
    require_hamming_range(n, k);
    require_hamming_range(n2, k2);
    require_equal_ratio(ratio(n, k), ratio(n2, k2), "Hamming");
    return n2 % n == 0;
}

VertexMap hamming_hom_map(std::size_t n, std::size_t k, std::size_t m)
{
    if (m == 0)
        throw Error(ErrorCode::InvalidArgument, "copy count m must be at least 1");
    require_hamming_range(n, k);
    if (m * n > 62)
        throw Error(ErrorCode::OutOfRange, "target word length m*n must be at most 62");
    const std::size_t count = std::size_t{1} << (n - 1);
    VertexMap out{count, std::size_t{1} << (m * n - 1), {}};
    out.image.reserve(count);
    const std::uint64_t low = (std::uint64_t{1} << (m * n - 1)) - 1;
    for (std::uint64_t v = 0; v < count; ++v) {
        const std::uint64_t x = hamming_word(n, v);
        std::uint64_t word = 0;
        for (std::size_t a = 0; a < m; ++a)
            word |= x << (a * n);
        out.image.push_back(static_cast<std::size_t>(word & low));
    }
    return out;
}

QCubeCase q_cube_core_classification(std::size_t n, std::size_t k)
{
    if (!(k < n && n < 2 * k))
        throw Error(ErrorCode::OutOfRange, "classification needs k < n < 2k, got " + pair_text(n, k));
    if (k % 2 == 1)
        return QCubeCase::Case1;
    return n + 1 < 2 * k ? QCubeCase::Case2 : QCubeCase::Case3;
}

namespace {

class HomSearch {
public:
    HomSearch(const Graph& g, const Graph& h, std::uint64_t budget)
        : g_(g), h_(h), budget_(budget), words_(h.words_per_row()), image_(g.order(), kNone)
    {
        order_ = search_order();
    }

    bool run()
    {
        std::vector<Graph::Word> domains(g_.order() * words_, 0);
        for (std::size_t v = 0; v < g_.order(); ++v)
            for (std::size_t x = 0; x < h_.order(); ++x)
                domains[v * words_ + (x >> 6)] |= Graph::Word{1} << (x & 63);
        return extend(0, domains);
    }

    const std::vector<std::size_t>& image() const { return image_; }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    // Greedy order: next is the vertex with most already-ordered neighbours,
    // ties broken by larger degree, then smaller index.
    std::vector<std::size_t> search_order() const
    {
        const std::size_t n = g_.order();
        std::vector<std::size_t> out;
        std::vector<std::size_t> placed_nbrs(n, 0);
        std::vector<bool> placed(n, false);
        for (std::size_t step = 0; step < n; ++step) {
            std::size_t best = kNone;
            for (std::size_t v = 0; v < n; ++v) {
                if (placed[v])
                    continue;
                if (best == kNone || placed_nbrs[v] > placed_nbrs[best]
                    || (placed_nbrs[v] == placed_nbrs[best] && g_.degree(v) > g_.degree(best)))
                    best = v;
            }
            placed[best] = true;
            out.push_back(best);
            for (std::size_t u : g_.neighbors(best))
                ++placed_nbrs[u];
        }
        return out;
    }

    bool extend(std::size_t depth, const std::vector<Graph::Word>& domains)
    {
        if (depth == order_.size())
            return true;
        const std::size_t v = order_[depth];
        const auto nbrs = g_.neighbors(v);
        for (std::size_t w = 0; w < words_; ++w) {
            Graph::Word bits = domains[v * words_ + w];
            while (bits) {
                const std::size_t x = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                if (++nodes_ > budget_)
                    throw Error(ErrorCode::BudgetExceeded,
                                "search exceeded " + std::to_string(budget_) + " nodes");
                std::vector<Graph::Word> next = domains;
                bool alive = true;
                const auto hx = h_.row(x);
                for (std::size_t u : nbrs) {
                    if (image_[u] != kNone)
                        continue;
                    Graph::Word any = 0;
                    for (std::size_t t = 0; t < words_; ++t)
                        any |= (next[u * words_ + t] &= hx[t]);
                    if (!any) {
                        alive = false;
                        break;
                    }
                }
                if (!alive)
                    continue;
                image_[v] = x;
                if (extend(depth + 1, next))
                    return true;
                image_[v] = kNone;
            }
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::size_t words_;
    std::vector<std::size_t> image_;
    std::vector<std::size_t> order_;
};

} // namespace

std::optional<VertexMap> brute_force_hom(const Graph& g, const Graph& h, std::uint64_t node_budget)
{
    if (g.order() == 0)
        return VertexMap{0, h.order(), {}};
    if (h.order() == 0)
        return std::nullopt;
    HomSearch search(g, h, node_budget);
    if (!search.run())
        return std::nullopt;
    return VertexMap{g.order(), h.order(), search.image()};
}

} // namespace uvc
