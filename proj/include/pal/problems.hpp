#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pal/bounds.hpp"
#include "pal/model.hpp"

namespace pal {

// Runtime description of a decision problem: what a valid instance looks
// like, which decisions an item admits, and how a complete decision
// sequence is scored. The objective returns nothing for infeasible
// decision sequences.
struct ProblemSpec {
    std::string name;
    Sense sense = Sense::Maximize;
    ConsistencyFn check_consistency;
    std::function<std::vector<Decision>(const Item&)> alphabet;
    ObjectiveFn objective;
};

// Accepted vertices must form an independent set; value is their count.
ProblemSpec independent_set_problem();

// Accepted vertices form one block of the cut; the other block must be at
// least as large. Value is the number of crossing edges.
ProblemSpec max_cut_problem();

// Accepted vertices must cover every edge; value is their count.
ProblemSpec vertex_cover_problem();

// Left vertices pick a right partner or stay unmatched; partners must be
// distinct neighbors. Value is the number of matched left vertices.
ProblemSpec bipartite_matching_problem();

// Accept means assigning the variable true. Value is the number of
// satisfied clauses; every decision sequence is feasible.
ProblemSpec max_sat_problem();

// Accepted jobs must induce an acyclic precedence digraph; value is their
// count.
ProblemSpec job_scheduling_problem();

// Accept means claiming the vertex lies on a triangle. Value is the number
// of answers matching the instance.
ProblemSpec triangle_problem();

// Lookup by short name: is, maxcut, vc, matching, max3sat, jobsched,
// triangle. Throws CatalogError on unknown names.
const ProblemSpec& problem(const std::string& name);
std::vector<std::string> problem_names();

}  // namespace pal
