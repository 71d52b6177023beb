#include "tidom/digraph_io.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <vector>

#include "tidom/error.hpp"

namespace tidom {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

std::optional<std::size_t> to_index(const std::string& tok) {
    std::size_t value = 0;
    const char* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc() || ptr != end) return std::nullopt;
    return value;
}

bool is_blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

bool is_comment(const std::string& line) {
    const auto first = line.find_first_not_of(" \t");
    return first != std::string::npos && line[first] == '#';
}

constexpr std::string_view kLabelingTag = "# labeling";
constexpr std::string_view kSetTag = "# set";

}  // namespace

Digraph parse_digraph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> order;
    std::size_t expected_arcs = 0;
    std::vector<Arc> arcs;
    std::set<Arc> seen;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank(line) || is_comment(line)) continue;
        const auto tokens = split(line);
        if (tokens.size() != 2) {
            throw ParseError(line_no, order ? "expected \"u v\"" : "expected header \"n m\"");
        }
        const auto a = to_index(tokens[0]);
        const auto b = to_index(tokens[1]);
        if (!order) {
            if (!a || !b) throw ParseError(line_no, "malformed header, expected two nonnegative integers");
            order = *a;
            expected_arcs = *b;
            if (*order >= 2 && expected_arcs > *order * (*order - 1)) {
                throw ParseError(line_no, "arc count exceeds n(n-1)");
            }
            if (*order < 2 && expected_arcs > 0) throw ParseError(line_no, "arc count exceeds n(n-1)");
            continue;
        }
        if (!a || !b) throw ParseError(line_no, "malformed arc, expected two nonnegative integers");
        if (arcs.size() == expected_arcs) throw ParseError(line_no, "more arcs than declared in the header");
        if (*a >= *order || *b >= *order) throw ParseError(line_no, "vertex out of range");
        if (*a == *b) throw ParseError(line_no, "self-loop");
        const Arc arc{*a, *b};
        if (!seen.insert(arc).second) throw ParseError(line_no, "duplicate arc");
        arcs.push_back(arc);
    }
    if (!order) throw ParseError(line_no, "missing header \"n m\"");
    if (arcs.size() != expected_arcs) {
        throw ParseError(line_no, "expected " + std::to_string(expected_arcs) + " arcs, found " + std::to_string(arcs.size()));
    }
    return Digraph(*order, std::move(arcs));
}

Digraph parse_digraph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_digraph(in);
}

std::string format_digraph(const Digraph& d) {
    std::ostringstream out;
    out << d.order() << ' ' << d.size() << '\n';
    for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
    return out.str();
}

std::string format_counterexample(const Digraph& d, const Witness& w) {
    std::ostringstream out;
    out << format_digraph(d);
    if (const auto* f = std::get_if<Labeling>(&w)) {
        out << kLabelingTag;
        for (int x : f->values()) out << ' ' << x;
    } else {
        out << kSetTag;
        for (Vertex v : std::get<VertexSet>(w).members()) out << ' ' << v;
    }
    out << '\n';
    return out.str();
}

Counterexample parse_counterexample(std::string_view text) {
    Counterexample cx{parse_digraph(text), std::nullopt};
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const bool labeling = line.starts_with(kLabelingTag);
        const bool set = !labeling && line.starts_with(kSetTag);
        if (!labeling && !set) continue;
        const auto tokens = split(line.substr(labeling ? kLabelingTag.size() : kSetTag.size()));
        std::vector<std::size_t> values;
        for (const auto& tok : tokens) {
            const auto v = to_index(tok);
            if (!v) throw ParseError(line_no, "malformed witness entry \"" + tok + "\"");
            values.push_back(*v);
        }
        try {
            if (labeling) {
                if (values.size() != cx.digraph.order()) throw ParseError(line_no, "labeling length does not match order");
                for (std::size_t x : values) {
                    if (x > 2) throw ParseError(line_no, "label " + std::to_string(x) + " not in {0,1,2}");
                }
                std::vector<int> labels(values.begin(), values.end());
                cx.witness = Labeling(labels);
            } else {
                cx.witness = VertexSet(cx.digraph.order(), values);
            }
        } catch (const InvalidArgument& e) {
            throw ParseError(line_no, e.what());
        }
        break;
    }
    return cx;
}

}  // namespace tidom
