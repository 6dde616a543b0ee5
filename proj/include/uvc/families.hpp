#ifndef UVC_FAMILIES_HPP
#define UVC_FAMILIES_HPP

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "uvc/exact.hpp"
#include "uvc/graph.hpp"

namespace uvc {

/// Limits every generator checks before allocating; exceeding one throws
/// SizeBudgetExceeded rather than truncating.
struct SizeBudget {
    std::size_t max_vertices = 20000;
    std::size_t max_edges = 200000;
};

/// Field order q (prime) and subspace parameters for q-Kneser graphs.
struct QParams {
    std::uint64_t q = 2;
    std::size_t n = 0;
    std::size_t r = 0;
};

BigInt binomial(std::size_t n, std::size_t k);

/// [k]_q = 1 + q + ... + q^(k-1).  Any q >= 2 is accepted.
BigInt q_bracket(std::size_t k, std::uint64_t q);

/// Number of k-dimensional subspaces of F_q^n.
BigInt gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q);

bool is_prime(std::uint64_t q);

// ---------------------------------------------------------------- Kneser

/// r-subsets of {1..n} as sorted element lists, in colexicographic order.
/// Vertex i of kneser(n, r) is entry i.
std::vector<std::vector<std::size_t>> kneser_vertices(std::size_t n, std::size_t r);

/// Position of a sorted r-subset of {1..n} in colex order.
std::size_t colex_rank(const std::vector<std::size_t>& subset);

/// Disjoint r-subsets of {1..n} adjacent.  Requires n >= r >= 1.
Graph kneser(std::size_t n, std::size_t r, const SizeBudget& budget = {});

// ---------------------------------------------------------------- q-Kneser

/// Reduced row-echelon basis of a subspace: r rows of n entries in 0..q-1.
using Rref = std::vector<std::vector<std::uint64_t>>;

/// All r-dimensional subspaces of F_q^n as RREF bases, sorted by the
/// row-major entry sequence.  Vertex i of q_kneser(p) is entry i.
std::vector<Rref> q_kneser_vertices(const QParams& p, const SizeBudget& budget = {});

/// Rank over F_q of the rows of both bases stacked.
std::size_t stacked_rank(const Rref& a, const Rref& b, std::uint64_t q);

/// Skew (trivially intersecting) r-subspaces of F_q^n adjacent.
Graph q_kneser(const QParams& p, const SizeBudget& budget = {});

// ---------------------------------------------------------------- binary words

/*
 * Vertex v of hamming_h(n, k) is the even-weight word whose coordinates
 * 0..n-2 are the bits of v and whose coordinate n-1 is the parity bit.
 */
std::uint64_t hamming_word(std::size_t n, std::uint64_t vertex);

/// Even-weight words of length n joined at Hamming distance exactly k.
/// Throws BadParity for odd k, OutOfRange unless 1 <= k <= n-1.
Graph hamming_h(std::size_t n, std::size_t k, const SizeBudget& budget = {});

/// Same vertices as hamming_h(n, k), joined at distance >= k.
Graph hamming_h_prime(std::size_t n, std::size_t k, const SizeBudget& budget = {});

/// Cay(Z_2^n, words of weight in `weights`); vertex = integer value.
Graph cayley_z2(std::size_t n, const std::set<std::size_t>& weights, const SizeBudget& budget = {});

/// Cay(Z_2^m, weight >= j); vertex = integer value.
Graph q_cube(std::size_t m, std::size_t j, const SizeBudget& budget = {});

} // namespace uvc

#endif // UVC_FAMILIES_HPP
