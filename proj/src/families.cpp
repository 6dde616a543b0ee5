#include "uvc/families.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "uvc/error.hpp"

namespace uvc {

namespace {

void check_budget(const BigInt& vertices, const BigInt& edges, const SizeBudget& budget, const char* family)
{
    if (vertices > BigInt(static_cast<unsigned long>(budget.max_vertices)))
        throw Error(ErrorCode::SizeBudgetExceeded, std::string(family) + ": " + vertices.get_str()
                        + " vertices exceeds budget of " + std::to_string(budget.max_vertices));
    if (edges > BigInt(static_cast<unsigned long>(budget.max_edges)))
        throw Error(ErrorCode::SizeBudgetExceeded, std::string(family) + ": " + edges.get_str()
                        + " edges exceeds budget of " + std::to_string(budget.max_edges));
}

BigInt pow_ui(std::uint64_t base, std::size_t exp)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
    return out;
}

} // namespace

BigInt binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

BigInt q_bracket(std::size_t k, std::uint64_t q)
{
    if (q < 2)
        throw Error(ErrorCode::OutOfRange, "q-bracket needs q >= 2");
    return (pow_ui(q, k) - 1) / (q - 1);
}

BigInt gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q)
{
    if (q < 2)
        throw Error(ErrorCode::OutOfRange, "Gaussian binomial needs q >= 2");
    if (k > n)
        throw Error(ErrorCode::OutOfRange, "Gaussian binomial needs 0 <= k <= n");
    BigInt num = 1, den = 1;
    for (std::size_t i = 0; i < k; ++i) {
        num *= pow_ui(q, n - i) - 1;
        den *= pow_ui(q, i + 1) - 1;
    }
    return num / den;
}

bool is_prime(std::uint64_t q)
{
    if (q < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

// ================================================================ Kneser

std::vector<std::vector<std::size_t>> kneser_vertices(std::size_t n, std::size_t r)
{
    if (r < 1 || r > n)
        throw Error(ErrorCode::OutOfRange, "Kneser graph needs n >= r >= 1 (got n=" + std::to_string(n)
                        + ", r=" + std::to_string(r) + ")");
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> c(r);
    for (std::size_t i = 0; i < r; ++i)
        c[i] = i;
    while (true) {
        std::vector<std::size_t> subset(r);
        for (std::size_t i = 0; i < r; ++i)
            subset[i] = c[i] + 1;
        out.push_back(std::move(subset));
        // colex successor: bump the lowest element that has room above it
        std::size_t i = 0;
        while (i < r && c[i] + 1 == (i + 1 < r ? c[i + 1] : n))
            ++i;
        if (i == r)
            break;
        ++c[i];
        for (std::size_t j = 0; j < i; ++j)
            c[j] = j;
    }
    return out;
}

std::size_t colex_rank(const std::vector<std::size_t>& subset)
{
    std::size_t rank = 0;
    for (std::size_t i = 0; i < subset.size(); ++i)
        rank += binomial(subset[i] - 1, i + 1).get_ui();
    return rank;
}

Graph kneser(std::size_t n, std::size_t r, const SizeBudget& budget)
{
    if (r < 1 || r > n)
        throw Error(ErrorCode::OutOfRange, "Kneser graph needs n >= r >= 1 (got n=" + std::to_string(n)
                        + ", r=" + std::to_string(r) + ")");
    const BigInt count = binomial(n, r);
    check_budget(count, count * binomial(n - r, r) / 2, budget, "kneser");

    const auto subsets = kneser_vertices(n, r);
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> masks(subsets.size() * words, 0);
    for (std::size_t v = 0; v < subsets.size(); ++v)
        for (std::size_t e : subsets[v])
            masks[v * words + (e - 1) / 64] |= std::uint64_t{1} << ((e - 1) % 64);

    Graph g(subsets.size());
    for (std::size_t u = 0; u < subsets.size(); ++u)
        for (std::size_t v = u + 1; v < subsets.size(); ++v) {
            bool disjoint = true;
            for (std::size_t w = 0; w < words && disjoint; ++w)
                disjoint = (masks[u * words + w] & masks[v * words + w]) == 0;
            if (disjoint)
                g.add_edge(u, v);
        }
    return g;
}

// ================================================================ q-Kneser

namespace {

void check_qparams(const QParams& p)
{
    if (!is_prime(p.q))
        throw Error(ErrorCode::NotPrime, "q-Kneser graphs need prime q (got " + std::to_string(p.q) + ")");
    if (p.r < 1 || p.r > p.n)
        throw Error(ErrorCode::OutOfRange, "q-Kneser graph needs n >= r >= 1 (got n=" + std::to_string(p.n)
                        + ", r=" + std::to_string(p.r) + ")");
}

} // namespace

std::size_t stacked_rank(const Rref& a, const Rref& b, std::uint64_t q)
{
    std::vector<std::vector<std::uint64_t>> m = a;
    m.insert(m.end(), b.begin(), b.end());
    if (m.empty())
        return 0;
    const std::size_t cols = m[0].size();
    auto inv = [q](std::uint64_t x) {
        std::uint64_t result = 1, base = x % q, e = q - 2;
        while (e) {
            if (e & 1)
                result = result * base % q;
            base = base * base % q;
            e >>= 1;
        }
        return result;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0)
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[piv], m[rank]);
        const std::uint64_t s = inv(m[rank][c]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            const std::uint64_t f = m[i][c] * s % q;
            if (f == 0)
                continue;
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = (m[i][j] + (q - f) * m[rank][j]) % q;
        }
        ++rank;
    }
    return rank;
}

std::vector<Rref> q_kneser_vertices(const QParams& p, const SizeBudget& budget)
{
    check_qparams(p);
    check_budget(gaussian_binomial(p.n, p.r, p.q), 0, budget, "q-kneser");

    std::vector<Rref> out;
    for (const auto& pivots1 : kneser_vertices(p.n, p.r)) {
        std::vector<std::size_t> pivots(p.r);
        std::vector<bool> is_pivot(p.n, false);
        for (std::size_t i = 0; i < p.r; ++i) {
            pivots[i] = pivots1[i] - 1;
            is_pivot[pivots[i]] = true;
        }
        // free positions: row i, column j > pivot_i that is not a pivot column
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t i = 0; i < p.r; ++i)
            for (std::size_t j = pivots[i] + 1; j < p.n; ++j)
                if (!is_pivot[j])
                    free.emplace_back(i, j);

        Rref base(p.r, std::vector<std::uint64_t>(p.n, 0));
        for (std::size_t i = 0; i < p.r; ++i)
            base[i][pivots[i]] = 1;
        std::vector<std::uint64_t> digits(free.size(), 0);
        while (true) {
            Rref m = base;
            for (std::size_t f = 0; f < free.size(); ++f)
                m[free[f].first][free[f].second] = digits[f];
            out.push_back(std::move(m));
            std::size_t f = 0;
            while (f < digits.size() && ++digits[f] == p.q)
                digits[f++] = 0;
            if (f == digits.size())
                break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph q_kneser(const QParams& p, const SizeBudget& budget)
{
    check_qparams(p);
    const BigInt count = gaussian_binomial(p.n, p.r, p.q);
    const BigInt degree = p.n >= 2 * p.r ? pow_ui(p.q, p.r * p.r) * gaussian_binomial(p.n - p.r, p.r, p.q) : BigInt(0);
    check_budget(count, count * degree / 2, budget, "q-kneser");

    const auto subspaces = q_kneser_vertices(p, budget);
    Graph g(subspaces.size());
    for (std::size_t u = 0; u < subspaces.size(); ++u)
        for (std::size_t v = u + 1; v < subspaces.size(); ++v)
            if (stacked_rank(subspaces[u], subspaces[v], p.q) == 2 * p.r)
                g.add_edge(u, v);
    return g;
}

// ================================================================ binary words

std::uint64_t hamming_word(std::size_t n, std::uint64_t vertex)
{
    const std::uint64_t parity = static_cast<std::uint64_t>(std::popcount(vertex) & 1);
    return vertex | (parity << (n - 1));
}

namespace {

constexpr std::size_t kMaxWordLength = 62;

std::vector<std::uint64_t> words_with_weights(std::size_t n, const std::set<std::size_t>& weights)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 1; x < (std::uint64_t{1} << n); ++x)
        if (weights.count(static_cast<std::size_t>(std::popcount(x))))
            out.push_back(x);
    return out;
}

BigInt connection_size(std::size_t n, const std::set<std::size_t>& weights)
{
    BigInt total = 0;
    for (std::size_t w : weights)
        total += binomial(n, w);
    return total;
}

// Cayley graph on Z_2^n restricted (optionally) to the even-weight coset.
Graph binary_cayley(std::size_t n, const std::set<std::size_t>& weights, bool even_half, const SizeBudget& budget,
                    const char* family)
{
    if (n < 1 || n > kMaxWordLength)
        throw Error(ErrorCode::OutOfRange, std::string(family) + ": word length must be in [1, 62]");
    const BigInt vertices = pow_ui(2, even_half ? n - 1 : n);
    check_budget(vertices, vertices * connection_size(n, weights) / 2, budget, family);

    const auto connection = words_with_weights(n, weights);
    const std::size_t count = vertices.get_ui();
    const std::uint64_t low_mask = even_half ? (std::uint64_t{1} << (n - 1)) - 1 : ~std::uint64_t{0};
    Graph g(count);
    for (std::uint64_t v = 0; v < count; ++v) {
        const std::uint64_t word = even_half ? hamming_word(n, v) : v;
        for (std::uint64_t c : connection) {
            const std::uint64_t u = (word ^ c) & low_mask;
            if (u > v)
                g.add_edge(v, u);
        }
    }
    return g;
}

void check_hamming(std::size_t n, std::size_t k)
{
    if (k % 2 != 0)
        throw Error(ErrorCode::BadParity, "H_{n,k} needs even k (got k=" + std::to_string(k) + ")");
    if (k < 1 || k + 1 > n)
        throw Error(ErrorCode::OutOfRange, "H_{n,k} needs 1 <= k <= n-1 (got n=" + std::to_string(n)
                        + ", k=" + std::to_string(k) + ")");
}

} // namespace

Graph hamming_h(std::size_t n, std::size_t k, const SizeBudget& budget)
{
    check_hamming(n, k);
    return binary_cayley(n, {k}, true, budget, "hamming-h");
}

Graph hamming_h_prime(std::size_t n, std::size_t k, const SizeBudget& budget)
{
    check_hamming(n, k);
    // Even words only differ in an even number of places.
    std::set<std::size_t> weights;
    for (std::size_t w = k; w <= n; w += 2)
        weights.insert(w);
    return binary_cayley(n, weights, true, budget, "hamming-h-prime");
}

Graph cayley_z2(std::size_t n, const std::set<std::size_t>& weights, const SizeBudget& budget)
{
    for (std::size_t w : weights)
        if (w < 1 || w > n)
            throw Error(ErrorCode::OutOfRange, "cayley-z2: weight " + std::to_string(w) + " outside [1, n]");
    return binary_cayley(n, weights, false, budget, "cayley-z2");
}

Graph q_cube(std::size_t m, std::size_t j, const SizeBudget& budget)
{
    if (j < 1 || j > m)
        throw Error(ErrorCode::OutOfRange, "q-cube needs 1 <= j <= m (got m=" + std::to_string(m)
                        + ", j=" + std::to_string(j) + ")");
    std::set<std::size_t> weights;
    for (std::size_t w = j; w <= m; ++w)
        weights.insert(w);
    return binary_cayley(m, weights, false, budget, "q-cube");
}

} // namespace uvc
