#ifndef UVC_WALKREG_HPP
#define UVC_WALKREG_HPP

#include <cstddef>

#include "uvc/exact.hpp"
#include "uvc/graph.hpp"

namespace uvc {

IntMatrix adjacency_matrix(const Graph& g);

struct WalkRegularity {
    bool one_walk = false;
    bool two_walk = false;
    std::size_t distinct_eigenvalue_count = 0;
};

/// Degree of the minimal polynomial of A(g), i.e. deg(phi / gcd(phi, phi')).
std::size_t distinct_eigenvalue_count(const Graph& g);

/// Same count from an already computed characteristic polynomial.
std::size_t distinct_root_count(const IntPoly& phi);

/// Monic product of (x - theta) over the distinct roots of phi.  When phi is
/// the characteristic polynomial of a symmetric matrix this is its minimal
/// polynomial.
IntPoly symmetric_minimal_polynomial(const IntPoly& phi);

/*
 * A^l is checked for l = 0 .. m-1 only, m the number of distinct
 * eigenvalues: the minimal polynomial has degree m, so every higher power is
 * a combination of these and inherits their constancy pattern.
 */
WalkRegularity walk_regularity(const Graph& g);

/// As above with the characteristic polynomial of A(g) supplied.
WalkRegularity walk_regularity(const Graph& g, const IntPoly& phi);

/// Constant diagonal and constant on edges for every power of A.
/// Graphs without edges return false.
bool is_one_walk_regular(const Graph& g);

/// One-walk-regular and every power of A constant on distance-two pairs.
bool is_two_walk_regular(const Graph& g);

/// Truncation-free reference check: powers up to max_power inclusive.
WalkRegularity walk_regularity_up_to(const Graph& g, std::size_t max_power);

} // namespace uvc

#endif // UVC_WALKREG_HPP
