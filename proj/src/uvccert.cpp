#include "uvc/uvccert.hpp"

#include "modular.hpp"
#include "uvc/error.hpp"
#include "uvc/walkreg.hpp"

namespace uvc {

namespace {

void require_connected_nonempty(const Graph& g)
{
    if (g.order() == 0 || g.size() == 0)
        throw Error(ErrorCode::EmptyGraph, "graph has no edges");
    if (!is_connected(g))
        throw Error(ErrorCode::NotConnected, "graph is disconnected");
}

SpectralData spectral_from(const Graph& g, IntPoly phi, std::size_t k)
{
    SpectralData s;
    s.n = g.order();
    s.degree_k = k;
    s.phi = std::move(phi);

    const auto roots = integer_roots(s.phi);
    if (roots.empty())
        throw Error(ErrorCode::NonIntegerLeastEigenvalue, "characteristic polynomial has no integer root");
    s.tau = roots.front().root;
    s.d = roots.front().multiplicity;

    // Every eigenvalue lies in [-k, k]; anything left after removing the
    // integer roots must stay above tau.
    IntPoly rest = s.phi;
    for (const auto& r : roots)
        for (std::size_t i = 0; i < r.multiplicity; ++i)
            rest = divide_out_root(rest, r.root).quotient;
    if (rest.degree() > 0) {
        const Rat lo(-BigInt(static_cast<unsigned long>(k)) - 1);
        if (sturm_root_count(rest, lo, Rat(s.tau)) > 0)
            throw Error(ErrorCode::NonIntegerLeastEigenvalue,
                        "an irrational eigenvalue lies below the least integer root " + s.tau.get_str());
    }

    s.phi_tau = s.phi;
    for (std::size_t i = 0; i < s.d; ++i)
        s.phi_tau = divide_out_root(s.phi_tau, s.tau).quotient;
    s.c = eval_poly_at_int(s.phi_tau, s.tau);
    return s;
}

/*
 * phi_tau(A) = c E_tau and psi_tau(A) = c' E_tau for psi the minimal
 * polynomial, so phi_tau(A) = (c / c') psi_tau(A) with every entry integral.
 * psi has degree m rather than n, which is what makes this affordable.
 */
IntMatrix projection_multiple(const IntMatrix& a, const SpectralData& s)
{
    const IntPoly psi_tau = divide_out_root(symmetric_minimal_polynomial(s.phi), s.tau).quotient;
    const BigInt c_psi = eval_poly_at_int(psi_tau, s.tau);
    IntMatrix b = eval_poly_at_matrix(psi_tau, a);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            BigInt& x = b(i, j);
            x *= s.c;
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c_psi.get_mpz_t());
        }
    return b;
}

CanonicalGram gram_from(const IntMatrix& a, SpectralData s)
{
    CanonicalGram cg;
    cg.b = projection_multiple(a, s);
    cg.scale = Rat(BigInt(static_cast<unsigned long>(s.n)),
                   BigInt(static_cast<unsigned long>(s.d)) * s.c);
    cg.scale.canonicalize();
    cg.spectrum = std::move(s);
    return cg;
}

} // namespace

SpectralData spectral_data(const Graph& g)
{
    require_connected_nonempty(g);
    const auto k = is_regular(g);
    if (!k)
        throw Error(ErrorCode::NotRegular, "graph is not regular");
    return spectral_from(g, charpoly(adjacency_matrix(g)), *k);
}

Rat CanonicalGram::edge_threshold() const
{
    Rat t(spectrum.tau, BigInt(static_cast<unsigned long>(spectrum.degree_k)));
    t.canonicalize();
    return t;
}

IntMatrix CanonicalGram::primitive_b() const
{
    BigInt g = b.content();
    if (g == 0)
        return b;
    if (sgn(spectrum.c) < 0)
        g = -g;
    IntMatrix out = b;
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j)
            mpz_divexact(out(i, j).get_mpz_t(), out(i, j).get_mpz_t(), g.get_mpz_t());
    return out;
}

CanonicalGram canonical_gram(const Graph& g)
{
    SpectralData s = spectral_data(g);
    if (!walk_regularity(g, s.phi).one_walk)
        throw Error(ErrorCode::NotOneWalkRegular, "graph is not 1-walk-regular");
    return gram_from(adjacency_matrix(g), std::move(s));
}

Rat vector_chromatic(const Graph& g)
{
    const SpectralData s = spectral_data(g);
    if (!walk_regularity(g, s.phi).one_walk)
        throw Error(ErrorCode::NotOneWalkRegular, "graph is not 1-walk-regular");
    Rat ratio(BigInt(static_cast<unsigned long>(s.degree_k)), s.tau);
    ratio.canonicalize();
    return Rat(1) - ratio;
}

IntMatrix edge_gram_from(const IntMatrix& b, const std::vector<Edge>& edges)
{
    const std::size_t m = edges.size();
    IntMatrix out(m, m);
    BigInt t;
    for (std::size_t e = 0; e < m; ++e) {
        const std::size_t i = edges[e].i, j = edges[e].j;
        for (std::size_t f = e; f < m; ++f) {
            const std::size_t k = edges[f].i, l = edges[f].j;
            t = b(j, l) * b(k, i);
            t += b(j, k) * b(l, i);
            t *= 2;
            out(e, f) = t;
            out(f, e) = t;
        }
    }
    return out;
}

IntMatrix edge_gram_matrix(const CanonicalGram& cg, const Graph& g)
{
    return edge_gram_from(cg.b, g.edges());
}

UvcResult uvc_test(const Graph& g, RankMethod method)
{
    return uvc_test(canonical_gram(g), g, method);
}

std::vector<std::size_t> eigenbasis_columns(const CanonicalGram& cg)
{
    const std::size_t d = cg.spectrum.d;
    // b has rank d over Q; a prime where it drops is skipped.
    for (std::size_t k = 0;; ++k) {
        auto cols = modular_pivot_columns(cg.b, detail::word_prime(k));
        if (cols.size() == d)
            return cols;
        if (cols.size() > d || k == 16)
            throw Error(ErrorCode::InvalidArgument, "projection multiple does not have rank d");
    }
}

IntMatrix edge_coordinates(const IntMatrix& b, const std::vector<std::size_t>& basis,
                           const std::vector<Edge>& edges)
{
    const std::size_t d = basis.size();
    IntMatrix out(edges.size(), d * (d + 1) / 2);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const std::size_t i = edges[e].i, j = edges[e].j;
        std::size_t col = 0;
        for (std::size_t a = 0; a < d; ++a) {
            const BigInt& ia = b(i, basis[a]);
            const BigInt& ja = b(j, basis[a]);
            out(e, col++) = ia * ja;
            for (std::size_t c = a + 1; c < d; ++c) {
                BigInt& x = out(e, col++);
                x = ia * b(j, basis[c]);
                x += b(i, basis[c]) * ja;
            }
        }
    }
    return out;
}

UvcResult uvc_test(const CanonicalGram& cg, const Graph& g, RankMethod method)
{
    if (cg.b.rows() != g.order())
        throw Error(ErrorCode::DimensionMismatch, "Gram matrix and graph differ in order");
    UvcResult r;
    const auto edges = g.edges();
    r.edges = edges.size();
    r.target = cg.spectrum.d * (cg.spectrum.d + 1) / 2;
    // Dividing out the content keeps Bareiss minors small; the rank is unchanged.
    const IntMatrix b = cg.primitive_b();
    if (method == RankMethod::EdgeGram) {
        r.rank = bareiss_rank(edge_gram_from(b, edges));
    } else {
        IntMatrix coords = edge_coordinates(b, eigenbasis_columns(cg), edges);
        r.rank = modular_rank(coords, detail::word_prime(0));
        if (r.rank != r.target)
            r.rank = bareiss_rank(std::move(coords));
    }
    r.verdict = r.rank == r.target ? Verdict::Tight : Verdict::Loose;
    return r;
}

Injectivity is_locally_injective_gram(const CanonicalGram& cg, const Graph& g)
{
    const std::size_t n = g.order();
    if (cg.b.rows() != n)
        throw Error(ErrorCode::DimensionMismatch, "Gram matrix and graph differ in order");
    const Graph g2 = distance_two_graph(g);
    Injectivity out{true, true};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (cg.b(i, j) == cg.b(i, i)) {
                out.injective = false;
                if (g2.adjacent(i, j))
                    out.locally_injective = false;
            }
    return out;
}

CertReport core_certificate(const Graph& g, RankMethod method)
{
    require_connected_nonempty(g);
    CertReport rep;
    rep.n = g.order();
    rep.edges = g.size();
    rep.degree = is_regular(g);
    rep.srg = srg_params(g);
    if (!rep.degree) {
        rep.reasons.emplace_back(reason::kNotRegular);
        return rep;
    }

    const IntMatrix a = adjacency_matrix(g);
    SpectralData s;
    try {
        s = spectral_from(g, charpoly(a), *rep.degree);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NonIntegerLeastEigenvalue)
            throw;
        rep.reasons.emplace_back(reason::kNonIntegerLeastEigenvalue);
        return rep;
    }
    rep.tau = s.tau;
    rep.d = s.d;

    const WalkRegularity wr = walk_regularity(g, s.phi);
    if (!wr.one_walk) {
        rep.reasons.emplace_back(reason::kNotOneWalkRegular);
        return rep;
    }

    const CanonicalGram cg = gram_from(a, std::move(s));
    const UvcResult uvc = uvc_test(cg, g, method);
    rep.rank = uvc.rank;
    rep.target = uvc.target;
    rep.verdict = uvc.verdict;
    if (uvc.verdict == Verdict::Loose) {
        rep.reasons.emplace_back(reason::kLoose);
        return rep;
    }

    std::vector<std::string> missed;
    if (!wr.two_walk)
        missed.emplace_back(reason::kNotTwoWalkRegular);
    if (is_bipartite(g))
        missed.emplace_back(reason::kBipartite);
    if (is_complete_multipartite(g))
        missed.emplace_back(reason::kCompleteMultipartite);
    if (missed.empty()) {
        rep.core = CoreConclusion::CertifiedCore;
        rep.reasons.emplace_back(reason::kPathTwoWalk);
        return rep;
    }
    if (is_locally_injective_gram(cg, g).locally_injective) {
        rep.core = CoreConclusion::CertifiedCore;
        rep.reasons.emplace_back(reason::kPathLocallyInjective);
        return rep;
    }
    missed.emplace_back(reason::kNotLocallyInjective);
    rep.reasons = std::move(missed);
    return rep;
}

Graph augmented_graph(const Graph& g)
{
    const CanonicalGram cg = canonical_gram(g);
    const Rat threshold = cg.edge_threshold();
    const std::size_t n = g.order();
    Graph out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (cg.gram(i, j) <= threshold)
                out.add_edge(i, j);
    return out;
}

SandwichVerdict sandwich_core_certificate(const Graph& h, const Graph& g)
{
    if (h.order() != g.order())
        throw Error(ErrorCode::DimensionMismatch, "sandwich graphs differ in order");
    require_connected_nonempty(g);

    SandwichVerdict out;
    const CanonicalGram cg = canonical_gram(h);
    if (uvc_test(cg, h).verdict == Verdict::Loose)
        out.reasons.emplace_back(reason::kLoose);
    if (!is_locally_injective_gram(cg, h).injective)
        out.reasons.emplace_back(reason::kNotInjective);
    if (!is_spanning_subgraph(h, g))
        out.reasons.emplace_back(reason::kNotSpanning);
    else if (!is_spanning_subgraph(g, augmented_graph(h)))
        out.reasons.emplace_back(reason::kOutsideAugmentation);
    if (out.reasons.empty())
        out.core = CoreConclusion::CertifiedCore;
    return out;
}

std::string to_string(Verdict v) { return v == Verdict::Tight ? "tight" : "loose"; }

std::string to_string(CoreConclusion c)
{
    return c == CoreConclusion::CertifiedCore ? "certified" : "inconclusive";
}

} // namespace uvc
