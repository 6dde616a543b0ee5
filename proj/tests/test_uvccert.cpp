#include <doctest.h>

#include <algorithm>
#include <bit>

#include "support.hpp"
#include "uvc/error.hpp"
#include "uvc/families.hpp"
#include "uvc/uvccert.hpp"
#include "uvc/walkreg.hpp"

using namespace uvc;

namespace {

bool has_reason(const std::vector<std::string>& reasons, const char* r)
{
    return std::find(reasons.begin(), reasons.end(), r) != reasons.end();
}

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidArgument;
}

// Gram of the symmetric products p_a p_b^T + p_b p_a^T over arbitrary index
// pairs, including a == b, straight from the entries of b.
IntMatrix pair_gram(const IntMatrix& b, const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
{
    IntMatrix m(pairs.size(), pairs.size());
    for (std::size_t e = 0; e < pairs.size(); ++e)
        for (std::size_t f = 0; f < pairs.size(); ++f) {
            const auto [i, j] = pairs[e];
            const auto [k, l] = pairs[f];
            m(e, f) = 2 * (b(i, k) * b(j, l) + b(i, l) * b(j, k));
        }
    return m;
}

std::vector<std::pair<std::size_t, std::size_t>> edge_pairs(const Graph& g)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const Edge& e : g.edges())
        out.emplace_back(e.i, e.j);
    return out;
}

Rat frac(const BigInt& num, const BigInt& den)
{
    Rat r(num, den);
    r.canonicalize();
    return r;
}

bool symmetric(const IntMatrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (m(i, j) != m(j, i))
                return false;
    return m.is_square();
}

Rat kneser_inner(std::size_t n, std::size_t r, std::size_t common)
{
    const Rat gamma = frac(static_cast<long>(n), static_cast<long>(r));
    return frac(static_cast<long>(common), static_cast<long>(r)) * gamma / (gamma - 1) - 1 / (gamma - 1);
}

} // namespace

TEST_SUITE("uvccert") {

TEST_CASE("spectral data examples")
{
    const SpectralData p = spectral_data(kneser(5, 2));
    CHECK(p.tau == -2);
    CHECK(p.d == 4);
    CHECK(p.c == 1215);
    CHECK(p.degree_k == 3);
    CHECK(p.phi == testsupport::cofactor_charpoly(adjacency_matrix(kneser(5, 2))) );

    const SpectralData k4 = spectral_data(complete_graph(4));
    CHECK(k4.tau == -1);
    CHECK(k4.d == 3);
    CHECK(k4.phi_tau == IntPoly{-3, 1});
    CHECK(k4.c == -4);

    const SpectralData h = spectral_data(hamming_h(5, 4));
    CHECK(h.tau == -3);
    CHECK(h.d == 5);
}

TEST_CASE("spectral data errors")
{
    CHECK(code_of([] { spectral_data(Graph(3)); }) == ErrorCode::EmptyGraph);
    Graph two(4);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    CHECK(code_of([&] { spectral_data(two); }) == ErrorCode::NotConnected);
    CHECK(code_of([] { spectral_data(path_graph(4)); }) == ErrorCode::NotRegular);
    CHECK(code_of([] { spectral_data(cycle_graph(5)); }) == ErrorCode::NonIntegerLeastEigenvalue);
    CHECK(code_of([] { canonical_gram(testsupport::prism3()); }) == ErrorCode::NotOneWalkRegular);
}

TEST_CASE("sign of c")
{
    for (const auto& [name, g] : testsupport::walk_regular_corpus()) {
        INFO(name);
        const SpectralData s = spectral_data(g);
        CHECK(sgn(s.c) == ((s.n - s.d) % 2 == 0 ? 1 : -1));
        CHECK(s.phi_tau.degree() == static_cast<int>(s.n - s.d));
    }
}

TEST_CASE("canonical Gram examples")
{
    const CanonicalGram p = canonical_gram(kneser(5, 2));
    CHECK(p.edge_threshold() == Rat(-2, 3));
    for (const Edge& e : kneser(5, 2).edges())
        CHECK(p.gram(e.i, e.j) == Rat(-2, 3));
    for (std::size_t i = 0; i < 10; ++i)
        CHECK(p.gram(i, i) == 1);

    for (std::size_t m = 2; m <= 6; ++m) {
        const CanonicalGram k = canonical_gram(complete_graph(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                CHECK(k.gram(i, j) == (i == j ? Rat(1) : Rat(-1, static_cast<long>(m - 1))));
    }

    const CanonicalGram h = canonical_gram(hamming_h(6, 4));
    for (std::uint64_t x = 0; x < 32; ++x)
        for (std::uint64_t y = 0; y < 32; ++y) {
            const int dist = std::popcount(hamming_word(6, x) ^ hamming_word(6, y));
            CHECK(h.gram(x, y) == 1 - frac(2 * dist, 6));
        }
}

TEST_CASE("vector chromatic number")
{
    CHECK(vector_chromatic(kneser(5, 2)) == Rat(5, 2));
    for (std::size_t m = 2; m <= 6; ++m)
        CHECK(vector_chromatic(complete_graph(m)) == static_cast<long>(m));
    CHECK(vector_chromatic(hamming_h(5, 4)) == Rat(8, 3));
    for (const auto& [name, g] : testsupport::walk_regular_corpus())
        CHECK(vector_chromatic(g) >= 2);
}

TEST_CASE("projection identities on the corpus")
{
    const auto corpus = testsupport::walk_regular_corpus();
    REQUIRE(corpus.size() >= 15);
    for (const auto& [name, g] : corpus) {
        INFO(name);
        const CanonicalGram cg = canonical_gram(g);
        const SpectralData& s = cg.spectrum;
        const IntMatrix a = adjacency_matrix(g);
        const IntMatrix& b = cg.b;
        const std::size_t n = g.order();
        CHECK(b == eval_poly_at_matrix(s.phi_tau, a));
        IntMatrix tau_b = b;
        IntMatrix c_b = b;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                tau_b(i, j) *= s.tau;
                c_b(i, j) *= s.c;
            }
        CHECK(a * b == tau_b);
        CHECK(b * b == c_b);
        CHECK(b.trace() == static_cast<unsigned long>(s.d) * s.c);
        for (std::size_t i = 1; i < n; ++i)
            CHECK(b(i, i) == b(0, 0));
        for (const Edge& e : g.edges())
            CHECK(cg.gram(e.i, e.j) == Rat(s.tau) / static_cast<long>(s.degree_k));
        CHECK(cg.edge_threshold() == Rat(s.tau) / static_cast<long>(s.degree_k));
        // b is symmetric with a positive multiple of itself as primitive form
        const IntMatrix pb = cg.primitive_b();
        CHECK(sgn(pb(0, 0)) > 0);
        CHECK(symmetric(b));
    }
}

TEST_CASE("Kneser inner products follow the intersection formula")
{
    for (auto [n, r] : {std::pair<std::size_t, std::size_t>{5, 2}, {7, 3}, {7, 2}}) {
        const CanonicalGram cg = canonical_gram(kneser(n, r));
        const auto v = kneser_vertices(n, r);
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) {
                std::vector<std::size_t> common;
                std::set_intersection(v[i].begin(), v[i].end(), v[j].begin(), v[j].end(),
                                      std::back_inserter(common));
                CHECK(cg.gram(i, j) == kneser_inner(n, r, common.size()));
            }
    }
}

TEST_CASE("Hamming inner products follow the distance formula")
{
    for (auto [n, k] : {std::pair<std::size_t, std::size_t>{5, 4}, {6, 4}, {8, 6}}) {
        const CanonicalGram cg = canonical_gram(hamming_h(n, k));
        const std::size_t order = std::size_t{1} << (n - 1);
        for (std::uint64_t x = 0; x < order; ++x)
            for (std::uint64_t y = 0; y < order; ++y) {
                const int dist = std::popcount(hamming_word(n, x) ^ hamming_word(n, y));
                CHECK(cg.gram(x, y) == 1 - frac(2 * dist, static_cast<long>(n)));
            }
    }
}

TEST_CASE("q-Kneser inner products follow the q-analog formula")
{
    const QParams p{2, 4, 2};
    const CanonicalGram cg = canonical_gram(q_kneser(p));
    const auto v = q_kneser_vertices(p);
    const Rat gamma = frac(q_bracket(p.n, p.q), q_bracket(p.r, p.q));
    const Rat rr(q_bracket(p.r, p.q));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) {
            const std::size_t common = 2 * p.r - stacked_rank(v[i], v[j], p.q);
            const Rat ratio = Rat(q_bracket(common, p.q)) / rr;
            CHECK(cg.gram(i, j) == ratio * gamma / (gamma - 1) - 1 / (gamma - 1));
        }
}

TEST_CASE("closed-form least eigenvalues")
{
    for (auto [n, k] : {std::pair<std::size_t, std::size_t>{5, 4}, {6, 4}, {7, 4}, {9, 6}}) {
        const SpectralData s = spectral_data(hamming_h(n, k));
        CHECK(s.tau * static_cast<long>(k) == (static_cast<long>(n) - 2 * static_cast<long>(k)) * binomial(n - 1, k - 1));
        // at n = 2k-1 the multiplicity exceeds n (28 for hamming_h(7,4), regression value)
        CHECK(s.d == (n < 2 * k - 1 ? n : 28));
    }
    for (auto [n, r] : {std::pair<std::size_t, std::size_t>{5, 2}, {7, 2}, {7, 3}, {8, 3}}) {
        const SpectralData s = spectral_data(kneser(n, r));
        CHECK(s.tau == -binomial(n - r - 1, r - 1));
        CHECK(s.d == n - 1);
    }
    // degree q^(r^2) [n-r choose r]_q, least eigenvalue -q^(r(r-1)) [n-r-1 choose r-1]_q
    const SpectralData q = spectral_data(q_kneser({2, 5, 2}));
    CHECK(q.n == 155);
    CHECK(q.degree_k == 112);
    CHECK(q.tau == -12);
}

TEST_CASE("edge Gram examples")
{
    const Graph k2 = complete_graph(2);
    const IntMatrix m = edge_gram_matrix(canonical_gram(k2), k2);
    REQUIRE(m.rows() == 1);
    CHECK(m(0, 0) == 4);

    const Graph p = kneser(5, 2);
    const IntMatrix mp = edge_gram_matrix(canonical_gram(p), p);
    CHECK(mp.rows() == 15);
    CHECK(symmetric(mp));
    CHECK(testsupport::rational_rank(mp) == 10);
    for (std::size_t e = 0; e < 15; ++e)
        CHECK(sgn(mp(e, e)) > 0);
}

TEST_CASE("uvc verdicts")
{
    const UvcResult p = uvc_test(kneser(5, 2));
    CHECK(p.verdict == Verdict::Tight);
    CHECK(p.rank == 10);
    CHECK(p.target == 10);
    const UvcResult rook = uvc_test(testsupport::rook_graph(3, 3));
    CHECK(rook.verdict == Verdict::Loose);
    CHECK(rook.rank < rook.target);
    const UvcResult q = uvc_test(q_kneser({2, 4, 2}));
    CHECK(q.verdict == Verdict::Loose);
    CHECK(q.target == 105);
    CHECK(q.rank == 91);
    CHECK(uvc_test(complement(kneser(5, 2))).verdict == Verdict::Tight);
    CHECK(uvc_test(hamming_h(6, 4)).verdict == Verdict::Tight);
}

TEST_CASE("rank routes agree with each other and the rational oracle")
{
    for (const auto& [name, g] : testsupport::walk_regular_corpus()) {
        INFO(name);
        const CanonicalGram cg = canonical_gram(g);
        const UvcResult coords = uvc_test(cg, g, RankMethod::Coordinates);
        const UvcResult gram = uvc_test(cg, g, RankMethod::EdgeGram);
        CHECK(coords.rank == gram.rank);
        CHECK(coords.verdict == gram.verdict);
        CHECK(coords.rank <= coords.target);
        CHECK(coords.target == cg.spectrum.d * (cg.spectrum.d + 1) / 2);
        CHECK((coords.verdict == Verdict::Tight) == (coords.rank == coords.target));
        const IntMatrix coordinates = edge_coordinates(cg.b, eigenbasis_columns(cg), g.edges());
        CHECK(coordinates.rows() == g.size());
        CHECK(coordinates.cols() == coords.target);
        if (g.size() <= 60)
            CHECK(testsupport::rational_rank(edge_gram_matrix(cg, g)) == gram.rank);
    }
}

TEST_CASE("scaling b leaves the rank unchanged")
{
    for (const Graph& g : {kneser(5, 2), testsupport::rook_graph(3, 3), cycle_graph(6)}) {
        const CanonicalGram cg = canonical_gram(g);
        const std::size_t rank = uvc_test(cg, g).rank;
        for (long factor : {-3L, 2L, 7L}) {
            IntMatrix scaled = cg.b;
            for (std::size_t i = 0; i < scaled.rows(); ++i)
                for (std::size_t j = 0; j < scaled.cols(); ++j)
                    scaled(i, j) *= factor;
            CHECK(bareiss_rank(edge_gram_from(scaled, g.edges())) == rank);
        }
        CHECK(bareiss_rank(edge_gram_from(cg.primitive_b(), g.edges())) == rank);
    }
}

TEST_CASE("vertex terms never add rank")
{
    for (const auto& [name, g] : testsupport::walk_regular_corpus()) {
        if (g.size() > 30)
            continue;
        INFO(name);
        const CanonicalGram cg = canonical_gram(g);
        auto pairs = edge_pairs(g);
        const std::size_t edges_only = testsupport::rational_rank(pair_gram(cg.b, pairs));
        for (std::size_t i = 0; i < g.order(); ++i)
            pairs.emplace_back(i, i);
        CHECK(testsupport::rational_rank(pair_gram(cg.b, pairs)) == edges_only);
        CHECK(edges_only == uvc_test(cg, g).rank);
    }
}

TEST_CASE("injectivity of the canonical coloring")
{
    const Graph p = kneser(5, 2);
    const Injectivity ip = is_locally_injective_gram(canonical_gram(p), p);
    CHECK(ip.injective);
    CHECK(ip.locally_injective);
    const Graph h42 = hamming_h(4, 2);
    const Injectivity ih = is_locally_injective_gram(canonical_gram(h42), h42);
    CHECK_FALSE(ih.injective);
    CHECK_FALSE(ih.locally_injective);
    for (std::size_t m = 2; m <= 6; ++m) {
        const Graph k = complete_graph(m);
        const Injectivity ik = is_locally_injective_gram(canonical_gram(k), k);
        CHECK(ik.injective);
        CHECK(ik.locally_injective);
    }
}

TEST_CASE("core certificate")
{
    const CertReport p = core_certificate(kneser(5, 2));
    CHECK(p.core == CoreConclusion::CertifiedCore);
    CHECK(p.reasons == std::vector<std::string>{reason::kPathTwoWalk});
    CHECK(p.srg == SrgParams{10, 3, 0, 1});
    CHECK(p.tau == BigInt(-2));
    CHECK(p.d == std::optional<std::size_t>(4));

    const CertReport rook = core_certificate(testsupport::rook_graph(3, 3));
    CHECK(rook.core == CoreConclusion::Inconclusive);
    CHECK(rook.reasons == std::vector<std::string>{reason::kLoose});

    const CertReport k4 = core_certificate(complete_graph(4));
    CHECK(k4.core == CoreConclusion::CertifiedCore);
    CHECK(k4.reasons == std::vector<std::string>{reason::kPathLocallyInjective});

    // bipartite: p_i = -p_j across each edge, so distance-2 pairs coincide
    const CertReport c6 = core_certificate(cycle_graph(6));
    CHECK(c6.verdict == Verdict::Tight);
    CHECK(c6.core == CoreConclusion::Inconclusive);
    CHECK(has_reason(c6.reasons, reason::kBipartite));
    CHECK(has_reason(c6.reasons, reason::kNotLocallyInjective));

    CHECK(core_certificate(cycle_graph(5)).reasons == std::vector<std::string>{reason::kNonIntegerLeastEigenvalue});
    CHECK(core_certificate(testsupport::prism3()).reasons == std::vector<std::string>{reason::kNotOneWalkRegular});
    const CertReport path = core_certificate(path_graph(5));
    CHECK(path.reasons == std::vector<std::string>{reason::kNotRegular});
    CHECK_FALSE(path.degree.has_value());

    CHECK(code_of([] { core_certificate(Graph(5)); }) == ErrorCode::EmptyGraph);
    Graph two(4);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    CHECK(code_of([&] { core_certificate(two); }) == ErrorCode::NotConnected);
}

TEST_CASE("certified cores are never loose")
{
    for (const auto& [name, g] : testsupport::walk_regular_corpus()) {
        INFO(name);
        const CertReport r = core_certificate(g);
        if (r.core == CoreConclusion::CertifiedCore)
            CHECK(r.verdict == Verdict::Tight);
        if (r.verdict == Verdict::Loose)
            CHECK(r.reasons == std::vector<std::string>{reason::kLoose});
    }
}

TEST_CASE("augmented graph")
{
    CHECK(augmented_graph(hamming_h(6, 4)) == hamming_h_prime(6, 4));
    CHECK(augmented_graph(kneser(5, 2)) == kneser(5, 2));
    for (std::size_t m = 2; m <= 6; ++m)
        CHECK(augmented_graph(complete_graph(m)) == complete_graph(m));
    for (const auto& [name, g] : testsupport::walk_regular_corpus())
        CHECK(is_spanning_subgraph(g, augmented_graph(g)));
}

TEST_CASE("sandwich certificate")
{
    const Graph h = hamming_h(6, 4);
    CHECK(sandwich_core_certificate(h, hamming_h_prime(6, 4)).core == CoreConclusion::CertifiedCore);
    Graph plus = h;
    for (std::uint64_t y = 1; y < 32; ++y)
        if (std::popcount(hamming_word(6, 0) ^ hamming_word(6, y)) == 6) {
            plus.add_edge(0, y);
            break;
        }
    REQUIRE(plus.size() == h.size() + 1);
    CHECK(sandwich_core_certificate(h, plus).core == CoreConclusion::CertifiedCore);
    const SandwichVerdict full = sandwich_core_certificate(h, complete_graph(32));
    CHECK(full.core == CoreConclusion::Inconclusive);
    CHECK(full.reasons == std::vector<std::string>{reason::kOutsideAugmentation});
    const SandwichVerdict smaller = sandwich_core_certificate(h, cycle_graph(32));
    CHECK(smaller.core == CoreConclusion::Inconclusive);
    CHECK(smaller.reasons == std::vector<std::string>{reason::kNotSpanning});
    CHECK(code_of([&] { sandwich_core_certificate(h, complete_graph(31)); }) == ErrorCode::DimensionMismatch);
}

} // TEST_SUITE
