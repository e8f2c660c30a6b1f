#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pal/rational.hpp"

namespace pal {

// One clause occurrence as seen from a variable: the clause's name, its
// length, and the names of the other variables in it. Polarities of the
// other variables are deliberately absent.
struct ClauseRef {
    std::string clause;
    int length = 3;
    std::vector<std::string> others;  // sorted

    bool operator==(const ClauseRef&) const = default;
};

// Undirected graph vertex with its adjacency list.
struct GraphVertex {
    std::string name;
    std::vector<std::string> neighbors;  // sorted

    bool operator==(const GraphVertex&) const = default;
};

// Left-side vertex of a bipartite graph; neighbors name right-side vertices.
struct BipartiteVertex {
    std::string name;
    std::vector<std::string> neighbors;  // sorted

    bool operator==(const BipartiteVertex&) const = default;
};

// Digraph node with incoming and outgoing neighbor names.
struct Job {
    std::string name;
    std::vector<std::string> before;  // sorted; arcs before -> this
    std::vector<std::string> after;   // sorted; arcs this -> after

    bool operator==(const Job&) const = default;
};

// CNF variable with the clauses it appears in, split by its own polarity.
struct SatVariable {
    std::string name;
    std::vector<ClauseRef> pos;  // sorted by clause name
    std::vector<ClauseRef> neg;  // sorted by clause name

    bool operator==(const SatVariable&) const = default;
};

// A bare number. `copy` distinguishes repeated values within one instance;
// repeated values are presented consecutively.
struct ValueItem {
    Rational value;
    int copy = 0;

    bool operator==(const ValueItem&) const = default;
};

struct Item {
    std::variant<GraphVertex, BipartiteVertex, Job, SatVariable, ValueItem> payload;

    bool operator==(const Item&) const = default;
};

// Unique token within a consistent instance: the name for named payloads,
// "value#copy" for values.
std::string identity(const Item& item);

// Injective text encoding of the full payload. Two items are equal iff
// their canonical encodings are equal.
std::string canonical(const Item& item);

Item make_graph_vertex(std::string name, std::vector<std::string> neighbors);
Item make_bipartite_vertex(std::string name, std::vector<std::string> neighbors);
Item make_job(std::string name, std::vector<std::string> before, std::vector<std::string> after);
Item make_sat_variable(std::string name, std::vector<ClauseRef> pos, std::vector<ClauseRef> neg);
Item make_value(Rational value, int copy = 0);

}  // namespace pal
