#ifndef TIDOM_DIGRAPH_HPP
#define TIDOM_DIGRAPH_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace tidom {

using Vertex = std::size_t;

struct Arc {
    Vertex tail;
    Vertex head;

    auto operator<=>(const Arc&) const = default;
};

/**
 * Subset of the vertices 0..universe-1 of some digraph.
 *
 * Membership is a dense flag vector, so contains() is O(1). Comparison is
 * lexicographic on the membership vector (index 0 first, absent < present).
 */
class VertexSet {
   public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : flags_(universe, 0) {}
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
    VertexSet(std::size_t universe, std::span<const Vertex> members);

    static VertexSet full(std::size_t universe);

    std::size_t universe() const { return flags_.size(); }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(Vertex v) const { return v < flags_.size() && flags_[v] != 0; }
    void insert(Vertex v);
    void erase(Vertex v);

    /// Sorted member list.
    std::vector<Vertex> members() const;
    /// Membership vector, one 0/1 entry per vertex.
    const std::vector<unsigned char>& flags() const { return flags_; }

    bool operator==(const VertexSet& other) const { return flags_ == other.flags_; }
    std::strong_ordering operator<=>(const VertexSet& other) const { return flags_ <=> other.flags_; }

   private:
    std::vector<unsigned char> flags_;
    std::size_t count_ = 0;
};

/**
 * Finite simple digraph on vertices 0..order-1.
 *
 * Immutable once constructed. In- and out-adjacency lists are built up front
 * and kept sorted, so every neighborhood query is a direct lookup.
 */
class Digraph {
   public:
    Digraph() = default;

    /// Throws InvalidArgument on self-loops, duplicate arcs or out-of-range endpoints.
    Digraph(std::size_t order, std::vector<Arc> arcs);

    std::size_t order() const { return out_.size(); }
    std::size_t size() const { return arcs_.size(); }

    /// Arcs sorted by (tail, head).
    const std::vector<Arc>& arcs() const { return arcs_; }

    std::span<const Vertex> out_neighbors(Vertex v) const;
    std::span<const Vertex> in_neighbors(Vertex v) const;
    std::size_t out_degree(Vertex v) const { return out_neighbors(v).size(); }
    std::size_t in_degree(Vertex v) const { return in_neighbors(v).size(); }

    bool has_arc(Vertex tail, Vertex head) const;
    bool adjacent(Vertex v, Vertex w) const { return has_arc(v, w) || has_arc(w, v); }

    bool is_isolated(Vertex v) const { return in_degree(v) == 0 && out_degree(v) == 0; }
    bool has_isolated_vertex() const;

    bool operator==(const Digraph& other) const { return out_.size() == other.out_.size() && arcs_ == other.arcs_; }

   private:
    void check_vertex(Vertex v) const;

    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
};

enum class Neighborhood { in, out, in_closed, out_closed, open, closed };

VertexSet neighborhood(const Digraph& d, Vertex v, Neighborhood mode);

enum class PackingKind { ordinary, strong };

/// ordinary: closed in-neighborhoods pairwise disjoint; strong: closed
/// two-sided neighborhoods pairwise disjoint.
bool is_packing(const Digraph& d, const VertexSet& q, PackingKind kind);

/// Connectivity of the underlying undirected graph. The empty digraph is connected.
bool is_connected(const Digraph& d);

/// Connected, exactly one vertex of in-degree 0, every other vertex of in-degree 1.
bool is_rooted_tree(const Digraph& d);

/// Dipath 0 -> 1 -> ... -> n-1.
Digraph make_dipath(std::size_t n);

/// Root 0 with arcs to 1..n-1.
Digraph make_out_star(std::size_t n);

/// parents[v] is the tail of the unique arc into v; exactly one entry is empty (the root).
Digraph make_rooted_tree(std::span<const std::optional<Vertex>> parents);

/**
 * Cartesian product d1 x d2.
 *
 * Vertex (v, w) with v in d1 and w in d2 gets index v * d2.order() + w
 * (row-major, see product_vertex). For grids P_k x P_n this places cell
 * (row s, column t) at s * n + t.
 */
Digraph cartesian_product(const Digraph& d1, const Digraph& d2);

constexpr Vertex product_vertex(Vertex v, Vertex w, std::size_t second_order) { return v * second_order + w; }

}  // namespace tidom

#endif
