#ifndef UVC_UVCCERT_HPP
#define UVC_UVCCERT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "uvc/exact.hpp"
#include "uvc/graph.hpp"

namespace uvc {

/*
 * Spectral data of a connected regular graph with integral least eigenvalue.
 *
 *   phi      = det(xI - A)
 *   tau      = least eigenvalue, d its multiplicity
 *   phi_tau  = phi / (x - tau)^d
 *   c        = phi_tau(tau), nonzero with sign (-1)^(n-d)
 */
struct SpectralData {
    std::size_t n = 0;
    std::size_t degree_k = 0;
    IntPoly phi;
    BigInt tau;
    std::size_t d = 0;
    IntPoly phi_tau;
    BigInt c;
};

/// Throws EmptyGraph, NotConnected, NotRegular or NonIntegerLeastEigenvalue.
SpectralData spectral_data(const Graph& g);

/*
 * The canonical vector coloring held as an exact Gram matrix.  b = phi_tau(A)
 * is an integer multiple of the projection E_tau onto the least eigenspace
 * (b = c * E_tau) and the Gram matrix of the coloring is (n/d) * b / c.
 * The vectors themselves are never formed.
 */
struct CanonicalGram {
    SpectralData spectrum;
    IntMatrix b;
    Rat scale;  // n / (d * c)

    Rat gram(std::size_t i, std::size_t j) const { return scale * Rat(b(i, j)); }
    /// Inner product every edge attains, tau / k.
    Rat edge_threshold() const;
    /// b divided by c's sign and the gcd of its entries; a positive multiple of E_tau.
    IntMatrix primitive_b() const;
};

/// Throws the spectral_data errors and NotOneWalkRegular.
CanonicalGram canonical_gram(const Graph& g);

/// 1 - k / tau for a 1-walk-regular graph.
Rat vector_chromatic(const Graph& g);

/// M_ef = 2 (b_jl b_ki + b_jk b_li) for edges e = {i,j}, f = {k,l}, in the
/// order of `edges`.  Any nonzero multiple of E_tau gives the same rank.
IntMatrix edge_gram_from(const IntMatrix& b, const std::vector<Edge>& edges);

/// Edge Gram of the p_e over g's edges in lexicographic order, from cg.b.
IntMatrix edge_gram_matrix(const CanonicalGram& cg, const Graph& g);

enum class Verdict { Tight, Loose };

/*
 * Integer coordinates of the p_e.  Columns of b indexed by `basis` must be a
 * basis of the least eigenspace; u_i is row i of those columns.  Row e of
 * the result lists the upper triangle of u_i u_j^T + u_j u_i^T (diagonal
 * halved) for e = {i,j}.  u_i = T p_i for a fixed invertible T, so this
 * |E| x d(d+1)/2 matrix has the rank of the edge Gram matrix.
 */
IntMatrix edge_coordinates(const IntMatrix& b, const std::vector<std::size_t>& basis,
                           const std::vector<Edge>& edges);

/// d columns of cg.b forming a basis of the least eigenspace.
std::vector<std::size_t> eigenbasis_columns(const CanonicalGram& cg);

enum class RankMethod {
    /// Rank of edge_coordinates.  A rank modulo a 62-bit prime equal to the
    /// target settles tightness (rank over Q is at least the modular rank
    /// and at most the target); otherwise Bareiss on the same matrix.
    Coordinates,
    /// Bareiss on the full |E| x |E| edge Gram matrix.
    EdgeGram,
};

struct UvcResult {
    std::size_t edges = 0;
    std::size_t rank = 0;
    std::size_t target = 0;  // d(d+1)/2
    Verdict verdict = Verdict::Loose;
};

UvcResult uvc_test(const Graph& g, RankMethod method = RankMethod::Coordinates);
UvcResult uvc_test(const CanonicalGram& cg, const Graph& g, RankMethod method = RankMethod::Coordinates);

struct Injectivity {
    bool injective = false;
    bool locally_injective = false;
};

/// p_i = p_j exactly when b_ij = b_ii (unit vectors with inner product 1).
Injectivity is_locally_injective_gram(const CanonicalGram& cg, const Graph& g);

enum class CoreConclusion { CertifiedCore, Inconclusive };

// Reason codes used in reports.
namespace reason {
inline constexpr const char* kNotRegular = "NotRegular";
inline constexpr const char* kNonIntegerLeastEigenvalue = "NonIntegerLeastEigenvalue";
inline constexpr const char* kNotOneWalkRegular = "NotOneWalkRegular";
inline constexpr const char* kLoose = "Loose";
inline constexpr const char* kNotTwoWalkRegular = "NotTwoWalkRegular";
inline constexpr const char* kBipartite = "Bipartite";
inline constexpr const char* kCompleteMultipartite = "CompleteMultipartite";
inline constexpr const char* kNotLocallyInjective = "NotLocallyInjective";
inline constexpr const char* kNotInjective = "NotInjective";
inline constexpr const char* kNotSpanning = "NotSpanningSubgraph";
inline constexpr const char* kOutsideAugmentation = "OutsideAugmentedGraph";
// Tags naming which sufficient condition certified a core.
inline constexpr const char* kPathTwoWalk = "path:two_walk_regular";
inline constexpr const char* kPathLocallyInjective = "path:locally_injective";
} // namespace reason

struct CertReport {
    std::size_t id = 0;
    std::size_t n = 0;
    std::optional<std::size_t> degree;
    std::optional<SrgParams> srg;
    std::optional<BigInt> tau;
    std::optional<std::size_t> d;
    std::size_t edges = 0;
    std::optional<std::size_t> rank;
    std::optional<std::size_t> target;
    std::optional<Verdict> verdict;
    CoreConclusion core = CoreConclusion::Inconclusive;
    std::vector<std::string> reasons;
    long long ms = 0;
};

/*
 * One-sided core test.  CertifiedCore when the graph is tight and either
 *   (a) 2-walk-regular, not bipartite and not complete multipartite, or
 *   (b) its canonical coloring is locally injective.
 * Never concludes that a graph is not a core.  Edgeless or disconnected
 * input throws EmptyGraph / NotConnected; spectral and walk-regularity
 * failures become reason codes.
 */
CertReport core_certificate(const Graph& g, RankMethod method = RankMethod::Coordinates);

/// G'(p): u ~ v whenever the canonical inner product is at most tau / k.
Graph augmented_graph(const Graph& g);

struct SandwichVerdict {
    CoreConclusion core = CoreConclusion::Inconclusive;
    std::vector<std::string> reasons;
};

/// Core certificate for g with h <= g <= h'(p), h tight with an injective
/// canonical coloring.  Throws DimensionMismatch, NotConnected.
SandwichVerdict sandwich_core_certificate(const Graph& h, const Graph& g);

std::string to_string(Verdict v);
std::string to_string(CoreConclusion c);

} // namespace uvc

#endif // UVC_UVCCERT_HPP
