#ifndef UVC_HOMCHECK_HPP
#define UVC_HOMCHECK_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "uvc/graph.hpp"

namespace uvc {

/// A function V(g) -> V(h) given by the image of each source vertex.
struct VertexMap {
    std::size_t source_n = 0;
    std::size_t target_n = 0;
    std::vector<std::size_t> image;

    friend bool operator==(const VertexMap&, const VertexMap&) = default;
};

/// outer after inner.  Throws DimensionMismatch if they do not chain.
VertexMap compose(const VertexMap& outer, const VertexMap& inner);

struct HomVerdict {
    bool is_hom = false;
    bool is_injective = false;
    /// Injective homomorphism that also sends non-edges to non-edges.
    bool is_induced_embedding = false;
};

/// Throws DimensionMismatch when the map does not fit g and h, OutOfRange
/// for an image index >= h.order().
HomVerdict verify_homomorphism(const Graph& g, const Graph& h, const VertexMap& m);

/*
 * kneser(n, r) -> kneser(n2, r2) for n/r = n2/r2.  Exists iff n divides n2.
 * Throws DegenerateRange for n <= 2r, RatioMismatch for unequal ratios.
 */
bool kneser_hom_exists(std::size_t n, std::size_t r, std::size_t n2, std::size_t r2);

/*
 * kneser(n, r) -> kneser(mn, mr) sending S to the union of its m shifted
 * copies {(a-1)n + s : a in 1..m, s in S}.  Indices follow the colex vertex
 * order of both graphs.
 */
VertexMap kneser_hom_map(std::size_t n, std::size_t r, std::size_t m);

/*
 * Necessary condition for q_kneser(q, n, r) -> q_kneser(q2, n2, r2):
 * {[k]_q/[r]_q : 1 <= k <= r} is contained in {[k]_q2/[r2]_q2 : 1 <= k <= r2}.
 * false rules a homomorphism out; true decides nothing.  Requires
 * [n]_q/[r]_q = [n2]_q2/[r2]_q2 (RatioMismatch) and n > 2r, n2 > 2r2
 * (DegenerateRange).
 */
bool q_kneser_necessary(std::uint64_t q, std::size_t n, std::size_t r,
                        std::uint64_t q2, std::size_t n2, std::size_t r2);

/*
 * hamming_h(n, k) -> hamming_h(n2, k2) with k < n < 2k-1, k even and
 * n/k = n2/k2 on both sides.  Exists iff n divides n2.
 */
bool hamming_hom_exists(std::size_t n, std::size_t k, std::size_t n2, std::size_t k2);

/// hamming_h(n, k) -> hamming_h(mn, mk) by repeating each word m times.
VertexMap hamming_hom_map(std::size_t n, std::size_t k, std::size_t m);

enum class QCubeCase {
    Case1,  // k odd: the graph is a core
    Case2,  // k even, n < 2k-1: core is q_cube(n-1, k-1)
    Case3,  // k even, n = 2k-1: equivalent to q_cube(n-1, k-1)
};

/// Classification of Cay(Z_2^n, weight >= k) for k < n < 2k (OutOfRange otherwise).
QCubeCase q_cube_core_classification(std::size_t n, std::size_t k);

/*
 * Exhaustive search for a homomorphism g -> h.  Returns a witness or
 * nullopt when none exists.  Each tentative vertex assignment counts as a
 * node; once node_budget is exceeded BudgetExceeded is thrown, so "no"
 * is only returned after a complete search.
 */
std::optional<VertexMap> brute_force_hom(const Graph& g, const Graph& h, std::uint64_t node_budget);

} // namespace uvc

#endif // UVC_HOMCHECK_HPP
