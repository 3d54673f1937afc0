#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lexspec/errors.hpp"

namespace lexspec {

/// Default cap on the order of explicitly constructed product graphs.
inline constexpr std::int64_t kDefaultOracleCap = 20000;

/// Simple undirected graph: order n plus a dense symmetric 0/1 adjacency
/// matrix with zero diagonal. Immutable after construction.
class Graph {
public:
    explicit Graph(int order, std::string label = {});

    int order() const { return n_; }
    const std::string& label() const { return label_; }

    bool adjacent(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j] != 0; }
    int degree(int i) const;

    /// Builder access; callers must keep the matrix symmetric with zero diagonal.
    void add_edge(int i, int j);

    bool operator==(const Graph& o) const { return n_ == o.n_ && a_ == o.a_; }

private:
    int n_ = 0;
    std::string label_;
    std::vector<std::uint8_t> a_;
};

/// Parses the edge-list format: first non-comment line is the order n,
/// followed by lines "u v" with 1-based endpoints. Lines starting with '#'
/// are ignored; duplicate edges collapse.
Graph parse_edge_list(const std::string& text);

/// Parses a graph6 string (short format, n < 63).
Graph parse_graph6(const std::string& text);

/// Encodes to graph6, short format (order < 63).
std::string emit_graph6(const Graph& g);

enum class GraphFamily { Complete, Path, Cycle, Star, CompleteBipartite, Empty };

/// Canonical generators. Vertex numbering: star(k) has center 1 and leaves
/// 2..k+1; path/cycle are numbered along the walk; complete_bipartite(m,n)
/// has parts {1..m} and {m+1..m+n}.
Graph generate(GraphFamily family, const std::vector<int>& params);

std::optional<GraphFamily> family_from_name(const std::string& name);

/// Explicit lexicographic product H[G] on p*n vertices. Vertex (h,g) maps to
/// index (h-1)*n + g, 1-based row-major; (h1,g1) ~ (h2,g2) iff h1 ~ h2 in H,
/// or h1 = h2 and g1 ~ g2 in G. Throws SizeError when p*n exceeds `cap`.
Graph lex_product_explicit(const Graph& h, const Graph& g, std::int64_t cap = kDefaultOracleCap);

std::int64_t edge_count(const Graph& g);

/// Common degree if the graph is regular, std::nullopt otherwise.
std::optional<int> is_regular(const Graph& g);

bool is_connected(const Graph& g);

} // namespace lexspec
