#ifndef UVC_GRAPH_HPP
#define UVC_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace uvc {

/// Undirected edge {i, j} stored with i < j.
struct Edge {
    std::size_t i = 0;
    std::size_t j = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/*
 * Simple undirected graph on vertices 0..n-1.
 *
 * Adjacency is kept as packed bit rows (64 vertices per word) so that
 * neighbourhood intersections and BFS frontiers are word operations.
 * The matrix is symmetric with an empty diagonal at all times; add_edge
 * and remove_edge maintain both halves.
 */
class Graph {
public:
    using Word = std::uint64_t;

    Graph() = default;
    explicit Graph(std::size_t n);

    std::size_t order() const { return n_; }
    std::size_t size() const;   // edge count
    std::size_t words_per_row() const { return words_; }

    bool adjacent(std::size_t i, std::size_t j) const {
        return (rows_[i * words_ + (j >> 6)] >> (j & 63)) & 1U;
    }

    /// Adds {i, j}; loops (i == j) are rejected with InvalidArgument.
    void add_edge(std::size_t i, std::size_t j);
    void remove_edge(std::size_t i, std::size_t j);

    std::span<const Word> row(std::size_t i) const {
        return {rows_.data() + i * words_, words_};
    }

    std::size_t degree(std::size_t i) const;
    std::vector<std::size_t> neighbors(std::size_t i) const;

    /// Edges in lexicographic (i, j) order, i < j.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> rows_;
};

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Parameters (v, k, a, c) of a strongly regular graph.
struct SrgParams {
    std::size_t v = 0;
    std::size_t k = 0;
    std::size_t a = 0;
    std::size_t c = 0;

    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

Graph complement(const Graph& g);

/// All-pairs BFS distances, row-major n x n; kUnreachable marks disconnected pairs.
std::vector<int> distance_matrix(const Graph& g);

/// Graph on V(g) joining vertices at distance exactly two in g.
Graph distance_two_graph(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// Non-adjacency together with equality must be an equivalence relation.
bool is_complete_multipartite(const Graph& g);

/// Common degree if every vertex has it, nullopt otherwise.
std::optional<std::size_t> is_regular(const Graph& g);

/// Vertex sets of connected components, ordered by smallest member.
std::vector<std::vector<std::size_t>> components(const Graph& g);

/*
 * Strongly regular parameters, or nullopt.  Requires at least one edge and
 * at least one non-adjacent pair so that both a and c are defined; complete
 * and edgeless graphs therefore return nullopt.
 */
std::optional<SrgParams> srg_params(const Graph& g);

/// Every edge of h is an edge of g (same labelling).  Throws DimensionMismatch.
bool is_spanning_subgraph(const Graph& h, const Graph& g);

} // namespace uvc

#endif // UVC_GRAPH_HPP
