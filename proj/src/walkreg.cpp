#include "uvc/walkreg.hpp"

#include <optional>

namespace uvc {

IntMatrix adjacency_matrix(const Graph& g)
{
    const std::size_t n = g.order();
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j : g.neighbors(i))
            a(i, j) = 1;
    return a;
}

IntPoly symmetric_minimal_polynomial(const IntPoly& phi)
{
    // Integer roots are split off first; what remains is usually constant,
    // which keeps the gcd computation away from the full-degree polynomial.
    IntPoly rest = phi;
    IntPoly out{1};
    for (const auto& r : integer_roots(phi)) {
        out = out * IntPoly::linear_root(r.root);
        for (std::size_t k = 0; k < r.multiplicity; ++k)
            rest = divide_out_root(rest, r.root).quotient;
    }
    if (rest.degree() > 0)
        out = out * squarefree_part(rest);
    return out;
}

std::size_t distinct_root_count(const IntPoly& phi)
{
    return static_cast<std::size_t>(symmetric_minimal_polynomial(phi).degree());
}

std::size_t distinct_eigenvalue_count(const Graph& g)
{
    if (g.order() == 0)
        return 0;
    return distinct_root_count(charpoly(adjacency_matrix(g)));
}

namespace {

// Tracks whether a family of matrix entries all share one value.
class ConstantCheck {
public:
    bool accept(const BigInt& v)
    {
        if (!value_) {
            value_ = v;
            return true;
        }
        return *value_ == v;
    }

private:
    std::optional<BigInt> value_;
};

WalkRegularity check_powers(const Graph& g, std::size_t powers)
{
    WalkRegularity out;
    const std::size_t n = g.order();
    if (n == 0 || g.size() == 0)
        return out;
    const IntMatrix a = adjacency_matrix(g);
    const Graph g2 = distance_two_graph(g);

    bool one = true, two = true;
    IntMatrix power = IntMatrix::identity(n);
    for (std::size_t l = 0; l < powers && (one || two); ++l) {
        if (l > 0)
            power = a * power;
        ConstantCheck diag, on_edges, on_dist2;
        for (std::size_t i = 0; i < n && one; ++i) {
            one = diag.accept(power(i, i));
            for (std::size_t j = i + 1; j < n && one; ++j) {
                if (g.adjacent(i, j))
                    one = on_edges.accept(power(i, j));
                else if (g2.adjacent(i, j) && two)
                    two = on_dist2.accept(power(i, j));
            }
        }
    }
    out.one_walk = one;
    out.two_walk = one && two;
    return out;
}

} // namespace

WalkRegularity walk_regularity(const Graph& g)
{
    if (g.order() == 0)
        return {};
    return walk_regularity(g, charpoly(adjacency_matrix(g)));
}

WalkRegularity walk_regularity(const Graph& g, const IntPoly& phi)
{
    const std::size_t m = distinct_root_count(phi);
    WalkRegularity out = check_powers(g, m);
    out.distinct_eigenvalue_count = m;
    return out;
}

WalkRegularity walk_regularity_up_to(const Graph& g, std::size_t max_power)
{
    WalkRegularity out = check_powers(g, max_power + 1);
    out.distinct_eigenvalue_count = distinct_eigenvalue_count(g);
    return out;
}

bool is_one_walk_regular(const Graph& g) { return walk_regularity(g).one_walk; }

bool is_two_walk_regular(const Graph& g) { return walk_regularity(g).two_walk; }

} // namespace uvc
