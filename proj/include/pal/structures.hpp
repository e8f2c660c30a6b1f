#pragma once

#include <map>
#include <string>
#include <vector>

#include "pal/item.hpp"

namespace pal {

struct StructureClause {
    std::string name;
    std::vector<std::pair<std::string, bool>> literals;  // (variable, positive)

    bool operator==(const StructureClause&) const = default;
};

// Abstract shape of a gadget before any renaming: named vertices / jobs /
// variables plus the relation that ties them together. Exactly one of
// edges, arcs, clauses is populated, according to `kind`.
struct TopologicalStructure {
    std::string problem;  // key accepted by problem()
    std::string kind;     // graph | bipartite | digraph | cnf
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> edges;  // graph; bipartite uses (left, right)
    std::vector<std::pair<std::string, std::string>> arcs;
    std::vector<StructureClause> clauses;
    // Distinguished elements: every optimal solution takes the accept-side
    // decision at an accept role and the reject-side one at a reject role.
    std::vector<std::string> accept_roles;
    std::vector<std::string> reject_roles;

    bool operator==(const TopologicalStructure&) const = default;
};

// Instance items of the structure under its own names.
std::vector<Item> structure_items(const TopologicalStructure& s);

// Renames every occurrence. `primary` maps the names list; `secondary`
// maps the second name space (bipartite right side, clause names) and is
// ignored for graphs and digraphs. Missing names throw CatalogError.
TopologicalStructure rename_structure(const TopologicalStructure& s,
                                      const std::map<std::string, std::string>& primary,
                                      const std::map<std::string, std::string>& secondary);

// Line format: one header `structure <problem> <kind>`, one `n <name>` per
// name, then `e u v` / `a u v` / `c name lit...` lines (literals prefixed
// `!` when negative) and `u name` / `v name` role lines.
// parse(serialize(s)) == s.
std::string serialize_structure(const TopologicalStructure& s);
TopologicalStructure parse_structure(const std::string& text);

// Built-in shapes: split8-a/b (two overlaid five-cycle plus complete
// bipartite graphs on eight vertices, shared by independent set and max
// cut), match3-a/b, cnf8-a/b, digraph9, cover7-a/b, cover8, triangle3,
// cycle4.
const TopologicalStructure& builtin_structure(const std::string& name);
std::vector<std::string> builtin_structure_names();

}  // namespace pal
