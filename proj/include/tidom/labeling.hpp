#ifndef TIDOM_LABELING_HPP
#define TIDOM_LABELING_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "tidom/digraph.hpp"

namespace tidom {

/// Assignment of a label in {0,1,2} to each vertex.
class Labeling {
   public:
    Labeling() = default;
    /// Throws InvalidArgument if any value lies outside {0,1,2}.
    explicit Labeling(std::span<const int> values);
    Labeling(std::initializer_list<int> values);

    static Labeling constant(std::size_t n, int label);

    std::size_t size() const { return values_.size(); }
    int operator[](Vertex v) const { return values_[v]; }
    int at(Vertex v) const;
    void set(Vertex v, int label);

    std::vector<int> values() const { return {values_.begin(), values_.end()}; }

    bool operator==(const Labeling&) const = default;
    /// Lexicographic on the label vector.
    std::strong_ordering operator<=>(const Labeling& other) const { return values_ <=> other.values_; }

   private:
    std::vector<std::uint8_t> values_;
};

/// Sum of all labels.
int weight(const Labeling& f);

/// Sum of labels over x.
int restricted_weight(const Labeling& f, const VertexSet& x);

/// Vertices labeled j; j outside {0,1,2} throws InvalidArgument.
VertexSet level_set(const Labeling& f, int j);

enum class Variant {
    dominating_set,
    total_dominating_set,
    roman,
    italian,
    total_roman,
    total_italian,
    total_2_dominating_set,
};

std::string_view to_string(Variant v);

constexpr bool is_set_variant(Variant v) {
    return v == Variant::dominating_set || v == Variant::total_dominating_set || v == Variant::total_2_dominating_set;
}

constexpr bool is_total_variant(Variant v) {
    return v == Variant::total_dominating_set || v == Variant::total_roman || v == Variant::total_italian ||
           v == Variant::total_2_dominating_set;
}

/// True iff d[s] has a vertex with neither an in- nor an out-neighbor inside s.
bool induces_isolated_vertex(const Digraph& d, const VertexSet& s);

/**
 * Definition-level check of a labeling against a function variant.
 *
 * Italian condition: every 0-vertex has an in-neighbor labeled 2 or at least
 * two in-neighbors labeled >= 1. The second branch is the same as "two
 * in-neighbors labeled 1" whenever the first branch fails.
 *
 * Throws InvalidArgument for a set variant or a size mismatch, and
 * InfeasibleStructure for a total variant on a digraph with an isolated vertex.
 */
bool validate(const Digraph& d, const Labeling& f, Variant variant);

/// Set counterpart of validate(); function variants throw InvalidArgument.
bool validate(const Digraph& d, const VertexSet& x, Variant variant);

}  // namespace tidom

#endif
