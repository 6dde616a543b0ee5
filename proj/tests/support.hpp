#ifndef UVC_TESTS_SUPPORT_HPP
#define UVC_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "uvc/exact.hpp"
#include "uvc/graph.hpp"

namespace testsupport {

using uvc::BigInt;
using uvc::Graph;
using uvc::IntMatrix;
using uvc::IntPoly;
using uvc::Rat;

// ---------------------------------------------------------------- oracles

/// det(xI - a) by Laplace expansion along the first row.  Exponential; n <= 8.
IntPoly cofactor_charpoly(const IntMatrix& a);

/// Rank by Gaussian elimination over Q with plain mpq arithmetic.
std::size_t rational_rank(const IntMatrix& m);

/// Constancy of A^l on the diagonal, on edges and on distance-two pairs for
/// every l in 0..max_power, straight from the definition.
struct NaiveWalk {
    bool one_walk = true;
    bool two_walk = true;
};
NaiveWalk naive_walk_regularity(const Graph& g, std::size_t max_power);

// ---------------------------------------------------------------- random data

/// Portable uniform integer in [lo, hi] (no reliance on std distributions).
std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::int64_t lo, std::int64_t hi);
IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, std::int64_t lo, std::int64_t hi);

/// Random matrix of rank at most r: product of n x r and r x m factors.
IntMatrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t r, std::int64_t lo,
                          std::int64_t hi);

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p);

// ---------------------------------------------------------------- graphs

/// Cartesian product K_a x K_b (rook graph).
Graph rook_graph(std::size_t a, std::size_t b);

/// Complete multipartite graph with `parts` parts of size `size`.
Graph complete_multipartite(std::size_t parts, std::size_t size);

/// Triangular prism C_3 x K_2: vertex-transitive, not 1-walk-regular.
Graph prism3();

/// Latin square of order n as a row-major symbol table.
using LatinSquare = std::vector<int>;

/// `count` pairwise distinct Latin squares of order n from a seeded
/// randomized backtracking search.
std::vector<LatinSquare> latin_squares(std::size_t n, std::size_t count, std::uint64_t seed);

/// Cells joined when they share a row, a column or a symbol.
/// SRG(n^2, 3(n-1), n, 6) for n >= 3.
Graph latin_square_graph(const LatinSquare& square, std::size_t n);

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// Connected 1-walk-regular graphs with integral least eigenvalue.
std::vector<NamedGraph> walk_regular_corpus();

} // namespace testsupport

#endif // UVC_TESTS_SUPPORT_HPP
