#include "tidom/digraph.hpp"

#include <algorithm>
#include <string>

#include "tidom/error.hpp"

namespace tidom {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : flags_(universe, 0) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    std::fill(s.flags_.begin(), s.flags_.end(), 1);
    s.count_ = universe;
    return s;
}

void VertexSet::insert(Vertex v) {
    if (v >= flags_.size()) {
        throw InvalidArgument("vertex " + std::to_string(v) + " outside universe of size " +
                              std::to_string(flags_.size()));
    }
    if (!flags_[v]) {
        flags_[v] = 1;
        ++count_;
    }
}

void VertexSet::erase(Vertex v) {
    if (v < flags_.size() && flags_[v]) {
        flags_[v] = 0;
        --count_;
    }
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(count_);
    for (Vertex v = 0; v < flags_.size(); ++v) {
        if (flags_[v]) out.push_back(v);
    }
    return out;
}

Digraph::Digraph(std::size_t order, std::vector<Arc> arcs) : arcs_(std::move(arcs)), out_(order), in_(order) {
    for (const Arc& a : arcs_) {
        if (a.tail >= order || a.head >= order) {
            throw InvalidArgument("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                                  ") has an endpoint outside 0.." + std::to_string(order) + "-1");
        }
        if (a.tail == a.head) {
            throw InvalidArgument("self-loop at vertex " + std::to_string(a.tail));
        }
    }
    std::sort(arcs_.begin(), arcs_.end());
    auto dup = std::adjacent_find(arcs_.begin(), arcs_.end());
    if (dup != arcs_.end()) {
        throw InvalidArgument("duplicate arc (" + std::to_string(dup->tail) + "," + std::to_string(dup->head) + ")");
    }
    for (const Arc& a : arcs_) {
        out_[a.tail].push_back(a.head);
        in_[a.head].push_back(a.tail);
    }
    // arcs_ is sorted by tail, so out-lists are already sorted; in-lists get
    // tails in increasing order for the same reason.
}

void Digraph::check_vertex(Vertex v) const {
    if (v >= out_.size()) {
        throw InvalidArgument("vertex " + std::to_string(v) + " outside digraph of order " + std::to_string(out_.size()));
    }
}

std::span<const Vertex> Digraph::out_neighbors(Vertex v) const {
    check_vertex(v);
    return out_[v];
}

std::span<const Vertex> Digraph::in_neighbors(Vertex v) const {
    check_vertex(v);
    return in_[v];
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
    auto outs = out_neighbors(tail);
    check_vertex(head);
    return std::binary_search(outs.begin(), outs.end(), head);
}

bool Digraph::has_isolated_vertex() const {
    for (Vertex v = 0; v < order(); ++v) {
        if (is_isolated(v)) return true;
    }
    return false;
}

VertexSet neighborhood(const Digraph& d, Vertex v, Neighborhood mode) {
    VertexSet s(d.order());
    auto add_in = [&] {
        for (Vertex u : d.in_neighbors(v)) s.insert(u);
    };
    auto add_out = [&] {
        for (Vertex u : d.out_neighbors(v)) s.insert(u);
    };
    switch (mode) {
        case Neighborhood::in:
            add_in();
            break;
        case Neighborhood::out:
            add_out();
            break;
        case Neighborhood::in_closed:
            add_in();
            s.insert(v);
            break;
        case Neighborhood::out_closed:
            add_out();
            s.insert(v);
            break;
        case Neighborhood::open:
            add_in();
            add_out();
            break;
        case Neighborhood::closed:
            add_in();
            add_out();
            s.insert(v);
            break;
    }
    return s;
}

bool is_packing(const Digraph& d, const VertexSet& q, PackingKind kind) {
    if (q.universe() != d.order()) {
        throw InvalidArgument("vertex set universe does not match digraph order");
    }
    const Neighborhood mode = kind == PackingKind::strong ? Neighborhood::closed : Neighborhood::in_closed;
    // Pairwise disjointness is equivalent to no vertex being covered twice.
    std::vector<unsigned char> covered(d.order(), 0);
    for (Vertex x : q.members()) {
        for (Vertex u : neighborhood(d, x, mode).members()) {
            if (covered[u]) return false;
            covered[u] = 1;
        }
    }
    return true;
}

bool is_connected(const Digraph& d) {
    const std::size_t n = d.order();
    if (n == 0) return true;
    std::vector<unsigned char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (auto nbrs : {d.out_neighbors(v), d.in_neighbors(v)}) {
            for (Vertex u : nbrs) {
                if (!seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    stack.push_back(u);
                }
            }
        }
    }
    return reached == n;
}

bool is_rooted_tree(const Digraph& d) {
    if (d.order() == 0) return false;
    std::size_t roots = 0;
    for (Vertex v = 0; v < d.order(); ++v) {
        const std::size_t deg = d.in_degree(v);
        if (deg == 0) {
            ++roots;
        } else if (deg != 1) {
            return false;
        }
    }
    return roots == 1 && is_connected(d);
}

Digraph make_dipath(std::size_t n) {
    if (n == 0) throw InvalidArgument("dipath needs at least one vertex");
    std::vector<Arc> arcs;
    arcs.reserve(n - 1);
    for (Vertex j = 0; j + 1 < n; ++j) arcs.push_back({j, j + 1});
    return Digraph(n, std::move(arcs));
}

Digraph make_out_star(std::size_t n) {
    if (n < 2) throw InvalidArgument("out-star needs at least two vertices");
    std::vector<Arc> arcs;
    arcs.reserve(n - 1);
    for (Vertex i = 1; i < n; ++i) arcs.push_back({0, i});
    return Digraph(n, std::move(arcs));
}

Digraph make_rooted_tree(std::span<const std::optional<Vertex>> parents) {
    const std::size_t n = parents.size();
    std::size_t roots = 0;
    std::vector<Arc> arcs;
    arcs.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
        if (!parents[v]) {
            ++roots;
            continue;
        }
        const Vertex p = *parents[v];
        if (p >= n) throw InvalidArgument("parent of " + std::to_string(v) + " is out of range");
        if (p == v) throw InvalidArgument("vertex " + std::to_string(v) + " is its own parent");
        arcs.push_back({p, v});
    }
    if (roots != 1) throw InvalidArgument("parent vector must have exactly one root, found " + std::to_string(roots));
    // With n-1 arcs and one root, following parents from every vertex must
    // reach the root; otherwise there is a cycle.
    for (Vertex v = 0; v < n; ++v) {
        Vertex cur = v;
        std::size_t steps = 0;
        while (parents[cur]) {
            cur = *parents[cur];
            if (++steps > n) throw InvalidArgument("parent vector contains a cycle");
        }
    }
    return Digraph(n, std::move(arcs));
}

Digraph cartesian_product(const Digraph& d1, const Digraph& d2) {
    const std::size_t n1 = d1.order();
    const std::size_t n2 = d2.order();
    std::vector<Arc> arcs;
    arcs.reserve(n1 * d2.size() + n2 * d1.size());
    for (const Arc& a : d1.arcs()) {
        for (Vertex w = 0; w < n2; ++w) {
            arcs.push_back({product_vertex(a.tail, w, n2), product_vertex(a.head, w, n2)});
        }
    }
    for (const Arc& a : d2.arcs()) {
        for (Vertex v = 0; v < n1; ++v) {
            arcs.push_back({product_vertex(v, a.tail, n2), product_vertex(v, a.head, n2)});
        }
    }
    return Digraph(n1 * n2, std::move(arcs));
}

}  // namespace tidom
