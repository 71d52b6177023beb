#include "tidom/labeling.hpp"

#include <string>

#include "tidom/error.hpp"

namespace tidom {

namespace {

void check_label(int label) {
    if (label < 0 || label > 2) throw InvalidArgument("label " + std::to_string(label) + " not in {0,1,2}");
}

void require_matching(const Digraph& d, std::size_t n, Variant variant) {
    if (n != d.order()) {
        throw InvalidArgument(std::string(to_string(variant)) + ": input has " + std::to_string(n) +
                              " entries but digraph has order " + std::to_string(d.order()));
    }
    if (is_total_variant(variant) && d.has_isolated_vertex()) {
        throw InfeasibleStructure(std::string(to_string(variant)) + " is undefined on a digraph with isolated vertices");
    }
}

// Every 0-vertex has an in-neighbor labeled 2 (Roman) or, for Italian, two
// in-neighbors with positive labels.
bool zeros_defended(const Digraph& d, const Labeling& f, bool italian) {
    for (Vertex v = 0; v < d.order(); ++v) {
        if (f[v] != 0) continue;
        int positive = 0;
        bool has_two = false;
        for (Vertex u : d.in_neighbors(v)) {
            if (f[u] == 2) has_two = true;
            if (f[u] >= 1) ++positive;
        }
        if (has_two) continue;
        if (italian && positive >= 2) continue;
        return false;
    }
    return true;
}

bool out_dominates(const Digraph& d, const VertexSet& x) {
    VertexSet covered(d.order());
    for (Vertex v : x.members()) {
        covered.insert(v);
        for (Vertex u : d.out_neighbors(v)) covered.insert(u);
    }
    return covered.size() == d.order();
}

VertexSet positive_set(const Labeling& f) {
    VertexSet s(f.size());
    for (Vertex v = 0; v < f.size(); ++v) {
        if (f[v] >= 1) s.insert(v);
    }
    return s;
}

}  // namespace

Labeling::Labeling(std::span<const int> values) {
    values_.reserve(values.size());
    for (int x : values) {
        check_label(x);
        values_.push_back(static_cast<std::uint8_t>(x));
    }
}

Labeling::Labeling(std::initializer_list<int> values) : Labeling(std::span<const int>(values.begin(), values.size())) {}

Labeling Labeling::constant(std::size_t n, int label) {
    check_label(label);
    Labeling f;
    f.values_.assign(n, static_cast<std::uint8_t>(label));
    return f;
}

int Labeling::at(Vertex v) const {
    if (v >= values_.size()) throw InvalidArgument("vertex " + std::to_string(v) + " outside labeling");
    return values_[v];
}

void Labeling::set(Vertex v, int label) {
    check_label(label);
    if (v >= values_.size()) throw InvalidArgument("vertex " + std::to_string(v) + " outside labeling");
    values_[v] = static_cast<std::uint8_t>(label);
}

int weight(const Labeling& f) {
    int total = 0;
    for (Vertex v = 0; v < f.size(); ++v) total += f[v];
    return total;
}

int restricted_weight(const Labeling& f, const VertexSet& x) {
    if (x.universe() != f.size()) throw InvalidArgument("vertex set universe does not match labeling size");
    int total = 0;
    for (Vertex v : x.members()) total += f[v];
    return total;
}

VertexSet level_set(const Labeling& f, int j) {
    check_label(j);
    VertexSet s(f.size());
    for (Vertex v = 0; v < f.size(); ++v) {
        if (f[v] == j) s.insert(v);
    }
    return s;
}

std::string_view to_string(Variant v) {
    switch (v) {
        case Variant::dominating_set:
            return "dominating_set";
        case Variant::total_dominating_set:
            return "total_dominating_set";
        case Variant::roman:
            return "roman";
        case Variant::italian:
            return "italian";
        case Variant::total_roman:
            return "total_roman";
        case Variant::total_italian:
            return "total_italian";
        case Variant::total_2_dominating_set:
            return "total_2_dominating_set";
    }
    return "unknown";
}

bool induces_isolated_vertex(const Digraph& d, const VertexSet& s) {
    for (Vertex v : s.members()) {
        bool has_partner = false;
        for (Vertex u : d.out_neighbors(v)) has_partner = has_partner || s.contains(u);
        for (Vertex u : d.in_neighbors(v)) has_partner = has_partner || s.contains(u);
        if (!has_partner) return true;
    }
    return false;
}

bool validate(const Digraph& d, const Labeling& f, Variant variant) {
    if (is_set_variant(variant)) {
        throw InvalidArgument(std::string(to_string(variant)) + " expects a vertex set, got a labeling");
    }
    require_matching(d, f.size(), variant);
    switch (variant) {
        case Variant::roman:
            return zeros_defended(d, f, false);
        case Variant::italian:
            return zeros_defended(d, f, true);
        case Variant::total_roman:
            return zeros_defended(d, f, false) && !induces_isolated_vertex(d, positive_set(f));
        case Variant::total_italian:
            return zeros_defended(d, f, true) && !induces_isolated_vertex(d, positive_set(f));
        default:
            break;
    }
    return false;
}

bool validate(const Digraph& d, const VertexSet& x, Variant variant) {
    if (!is_set_variant(variant)) {
        throw InvalidArgument(std::string(to_string(variant)) + " expects a labeling, got a vertex set");
    }
    require_matching(d, x.universe(), variant);
    switch (variant) {
        case Variant::dominating_set:
            return out_dominates(d, x);
        case Variant::total_dominating_set:
            return out_dominates(d, x) && !induces_isolated_vertex(d, x);
        case Variant::total_2_dominating_set: {
            if (induces_isolated_vertex(d, x)) return false;
            for (Vertex v = 0; v < d.order(); ++v) {
                if (x.contains(v)) continue;
                int inside = 0;
                for (Vertex u : d.in_neighbors(v)) inside += x.contains(u) ? 1 : 0;
                if (inside < 2) return false;
            }
            return true;
        }
        default:
            break;
    }
    return false;
}

}  // namespace tidom
