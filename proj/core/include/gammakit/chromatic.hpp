#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gammakit/algebra.hpp"

namespace gammakit {

/// Simple graph on vertices 0..n-1. Edges are stored as sorted pairs (u < v)
/// in sorted order, without duplicates.
class SimpleGraph {
public:
    using Edge = std::pair<int, int>;

    explicit SimpleGraph(int vertices = 0) : n_(vertices) {}
    SimpleGraph(int vertices, std::vector<Edge> edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    bool has_edge(int u, int v) const;

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    std::vector<std::vector<int>> components() const;
    /// Number of unordered pairs of edges with four distinct endpoints.
    long disjoint_edge_pairs() const;

    /// Graph on n vertices whose edges are the set bits of `mask` over the
    /// pairs (0,1), (0,2), ..., (n-2,n-1) in lexicographic order.
    static SimpleGraph from_mask(int n, std::uint32_t mask);

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    int n_;
    std::vector<Edge> edges_;
};

SimpleGraph star_graph(int n);
SimpleGraph triangle_graph();
SimpleGraph null_graph(int n);
/// h's vertices are renumbered after g's.
SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h);

/// "star:5", "triangle", "null:4", "union:triangle,null:2",
/// "n=4;edges=0-1,1-2,2-3". Throws ParseError.
SimpleGraph parse_graph(std::string_view text);
std::string to_text(const SimpleGraph& g);

inline constexpr int kDefaultMaxEdges = 25;

/// Signed sum over edge subsets of p_{lambda(S)}; guarded by edge count.
PExpansion chromatic_sym(const SimpleGraph& g, int max_edges = kDefaultMaxEdges);
/// (X + omega X) / 2.
PExpansion near_chromatic(const SimpleGraph& g, int max_edges = kDefaultMaxEdges);
PExpansion near_chromatic_from(const PExpansion& x);

PExpansion star_closed_form(int n);
PExpansion near_star_closed_form(int n);

struct GammaMembership {
    bool x_in_gamma = false;
    bool y_in_gamma = false;
    /// A support partition with an even part: of X when X is outside Gamma,
    /// of Y when only Y is outside.
    std::optional<Partition> x_witness;
    std::optional<Partition> y_witness;
};

GammaMembership gamma_membership_classify(const SimpleGraph& g, int max_edges = kDefaultMaxEdges);

/// The structural characterisation: a triangle, a star or no edge at all,
/// plus isolated vertices.
bool is_star_or_triangle_plus_isolated(const SimpleGraph& g);

enum class BasisFamily { B1, B2 };

struct BasisCheck {
    BasisFamily family;
    int n = 0;
    int rank = 0;
    int dimension = 0;
    bool is_basis = false;
};

/// Graph with k vertices used for odd k in the family: S_1, C_3 or S_3, S_k.
SimpleGraph family_graph(BasisFamily family, int k);
/// Products of Y over the parts of each odd partition of n.
std::vector<PExpansion> y_basis_elements(BasisFamily family, int n);
BasisCheck y_basis_check(BasisFamily family, int n, int max_n = 14);

}  // namespace gammakit
