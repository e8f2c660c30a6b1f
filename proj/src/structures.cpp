#include "pal/structures.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pal/errors.hpp"

namespace pal {

namespace {

std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Item> graph_items(const TopologicalStructure& s) {
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& n : s.names) adj[n];
    for (const auto& [u, v] : s.edges) {
        adj.at(u).push_back(v);
        adj.at(v).push_back(u);
    }
    std::vector<Item> items;
    for (const auto& n : s.names) items.push_back(make_graph_vertex(n, sorted(adj.at(n))));
    return items;
}

std::vector<Item> bipartite_items(const TopologicalStructure& s) {
    std::map<std::string, std::vector<std::string>> right;
    for (const auto& n : s.names) right[n];
    for (const auto& [u, v] : s.edges) right.at(u).push_back(v);
    std::vector<Item> items;
    for (const auto& n : s.names) items.push_back(make_bipartite_vertex(n, sorted(right.at(n))));
    return items;
}

std::vector<Item> digraph_items(const TopologicalStructure& s) {
    std::map<std::string, std::vector<std::string>> before, after;
    for (const auto& n : s.names) {
        before[n];
        after[n];
    }
    for (const auto& [u, v] : s.arcs) {
        after.at(u).push_back(v);
        before.at(v).push_back(u);
    }
    std::vector<Item> items;
    for (const auto& n : s.names)
        items.push_back(make_job(n, sorted(before.at(n)), sorted(after.at(n))));
    return items;
}

std::vector<Item> cnf_items(const TopologicalStructure& s) {
    std::map<std::string, std::vector<ClauseRef>> pos, neg;
    for (const auto& n : s.names) {
        pos[n];
        neg[n];
    }
    for (const auto& clause : s.clauses) {
        for (const auto& [var, positive] : clause.literals) {
            std::vector<std::string> others;
            for (const auto& [w, wp] : clause.literals)
                if (w != var) others.push_back(w);
            ClauseRef ref{clause.name, (int)clause.literals.size(), sorted(others)};
            (positive ? pos : neg).at(var).push_back(std::move(ref));
        }
    }
    auto by_name = [](const ClauseRef& a, const ClauseRef& b) { return a.clause < b.clause; };
    std::vector<Item> items;
    for (const auto& n : s.names) {
        auto p = pos.at(n);
        auto g = neg.at(n);
        std::sort(p.begin(), p.end(), by_name);
        std::sort(g.begin(), g.end(), by_name);
        items.push_back(make_sat_variable(n, std::move(p), std::move(g)));
    }
    return items;
}

}  // namespace

std::vector<Item> structure_items(const TopologicalStructure& s) {
    if (s.kind == "graph") return graph_items(s);
    if (s.kind == "bipartite") return bipartite_items(s);
    if (s.kind == "digraph") return digraph_items(s);
    if (s.kind == "cnf") return cnf_items(s);
    throw CatalogError("unknown structure kind: " + s.kind);
}

namespace {

const std::string& mapped(const std::map<std::string, std::string>& m, const std::string& name) {
    auto it = m.find(name);
    if (it == m.end()) throw CatalogError("no image for name " + name);
    return it->second;
}

}  // namespace

TopologicalStructure rename_structure(const TopologicalStructure& s,
                                      const std::map<std::string, std::string>& primary,
                                      const std::map<std::string, std::string>& secondary) {
    TopologicalStructure out;
    out.problem = s.problem;
    out.kind = s.kind;
    for (const auto& n : s.names) out.names.push_back(mapped(primary, n));
    bool bip = s.kind == "bipartite";
    for (const auto& [u, v] : s.edges)
        out.edges.emplace_back(mapped(primary, u), mapped(bip ? secondary : primary, v));
    for (const auto& [u, v] : s.arcs)
        out.arcs.emplace_back(mapped(primary, u), mapped(primary, v));
    for (const auto& clause : s.clauses) {
        StructureClause c;
        c.name = mapped(secondary, clause.name);
        for (const auto& [var, positive] : clause.literals)
            c.literals.emplace_back(mapped(primary, var), positive);
        out.clauses.push_back(std::move(c));
    }
    for (const auto& r : s.accept_roles) out.accept_roles.push_back(mapped(primary, r));
    for (const auto& r : s.reject_roles) out.reject_roles.push_back(mapped(primary, r));
    return out;
}

std::string serialize_structure(const TopologicalStructure& s) {
    std::ostringstream out;
    out << "structure " << s.problem << " " << s.kind << "\n";
    for (const auto& n : s.names) out << "n " << n << "\n";
    for (const auto& [u, v] : s.edges) out << "e " << u << " " << v << "\n";
    for (const auto& [u, v] : s.arcs) out << "a " << u << " " << v << "\n";
    for (const auto& clause : s.clauses) {
        out << "c " << clause.name;
        for (const auto& [var, positive] : clause.literals)
            out << " " << (positive ? "" : "!") << var;
        out << "\n";
    }
    for (const auto& r : s.accept_roles) out << "u " << r << "\n";
    for (const auto& r : s.reject_roles) out << "v " << r << "\n";
    return out.str();
}

TopologicalStructure parse_structure(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    TopologicalStructure s;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag == "structure") {
            if (have_header) throw CatalogError("second structure header");
            fields >> s.problem >> s.kind;
            have_header = true;
            continue;
        }
        if (!have_header) throw CatalogError("missing structure header");
        if (tag == "n") {
            std::string name;
            fields >> name;
            s.names.push_back(name);
        } else if (tag == "e" || tag == "a") {
            std::string u, v;
            fields >> u >> v;
            if (v.empty()) throw CatalogError("truncated line: " + line);
            (tag == "e" ? s.edges : s.arcs).emplace_back(u, v);
        } else if (tag == "c") {
            StructureClause clause;
            fields >> clause.name;
            std::string lit;
            while (fields >> lit) {
                bool positive = lit[0] != '!';
                clause.literals.emplace_back(positive ? lit : lit.substr(1), positive);
            }
            if (clause.literals.empty()) throw CatalogError("empty clause: " + line);
            s.clauses.push_back(std::move(clause));
        } else if (tag == "u" || tag == "v") {
            std::string name;
            fields >> name;
            if (name.empty()) throw CatalogError("truncated line: " + line);
            (tag == "u" ? s.accept_roles : s.reject_roles).push_back(name);
        } else {
            throw CatalogError("unknown line tag: " + tag);
        }
    }
    if (!have_header) throw CatalogError("missing structure header");
    return s;
}

namespace {

using Edge = std::pair<std::string, std::string>;

TopologicalStructure graph_structure(std::string problem, std::vector<std::string> names,
                                     std::vector<Edge> edges) {
    TopologicalStructure s;
    s.problem = std::move(problem);
    s.kind = "graph";
    s.names = std::move(names);
    s.edges = std::move(edges);
    return s;
}

std::vector<std::string> numbered(int from, int to) {
    std::vector<std::string> names;
    for (int i = from; i <= to; ++i) names.push_back(std::to_string(i));
    return names;
}

// Five-cycle on `cycle` overlaid with a complete bipartite graph between
// `cycle` and the remaining three vertices.
TopologicalStructure split8(const std::string& problem, const std::vector<int>& cycle,
                            const std::vector<int>& rest, const std::vector<Edge>& cycle_edges) {
    std::vector<Edge> edges = cycle_edges;
    for (int u : cycle)
        for (int w : rest) edges.emplace_back(std::to_string(u), std::to_string(w));
    return graph_structure(problem, numbered(1, 8), std::move(edges));
}

TopologicalStructure make_builtin(const std::string& name) {
    if (name == "split8-a") {
        auto s = split8("is", {4, 5, 6, 7, 8}, {1, 2, 3},
                        {{"4", "5"}, {"5", "6"}, {"6", "7"}, {"7", "8"}, {"8", "4"}});
        s.accept_roles = {"1"};
        return s;
    }
    if (name == "split8-b") {
        auto s = split8("is", {1, 2, 3, 4, 5}, {6, 7, 8},
                        {{"1", "4"}, {"4", "3"}, {"3", "2"}, {"2", "5"}, {"5", "1"}});
        s.reject_roles = {"1"};
        return s;
    }
    if (name == "match3-a" || name == "match3-b") {
        TopologicalStructure s;
        s.problem = "matching";
        s.kind = "bipartite";
        s.names = numbered(1, 3);
        if (name == "match3-a") {
            s.edges = {{"1", "1"}, {"1", "2"}, {"2", "2"}, {"2", "3"}, {"3", "2"}, {"3", "3"}};
            s.accept_roles = {"1"};
        } else {
            s.edges = {{"1", "1"}, {"1", "2"}, {"2", "1"}, {"2", "3"}, {"3", "1"}, {"3", "3"}};
            s.reject_roles = {"1"};
        }
        return s;
    }
    if (name == "cnf8-a" || name == "cnf8-b") {
        TopologicalStructure s;
        s.problem = "max3sat";
        s.kind = "cnf";
        s.names = {"x1", "x2", "x3"};
        // x1 positive in the first four clauses of the `a` shape, negative
        // there in the `b` shape; x2 and x3 keep their pattern.
        bool flip = name == "cnf8-b";
        auto clause = [&](const std::string& cname, bool p1, bool p2, bool p3) {
            StructureClause c;
            c.name = cname;
            c.literals = {{"x1", p1 != flip}, {"x2", p2}, {"x3", p3}};
            return c;
        };
        s.clauses = {clause("C1", true, true, true),   clause("C2", true, false, false),
                     clause("C3", true, false, true),  clause("C4", true, true, false),
                     clause("C5", false, true, true),  clause("C6", false, true, true),
                     clause("C7", false, false, false), clause("C8", false, false, false)};
        if (flip) {
            s.reject_roles = {"x1"};
        } else {
            s.accept_roles = {"x1"};
        }
        return s;
    }
    if (name == "digraph9") {
        TopologicalStructure s;
        s.problem = "jobsched";
        s.kind = "digraph";
        s.names = numbered(0, 8);
        s.arcs = {{"0", "8"}, {"0", "2"}, {"1", "0"}, {"1", "2"}, {"2", "3"}, {"2", "7"},
                  {"3", "0"}, {"3", "1"}, {"4", "6"}, {"4", "8"}, {"5", "4"}, {"5", "6"},
                  {"6", "3"}, {"6", "7"}, {"7", "4"}, {"7", "5"}, {"8", "1"}, {"8", "5"}};
        s.accept_roles = {"0"};
        s.reject_roles = {"8"};
        return s;
    }
    if (name == "cover7-a") {
        auto s = graph_structure("vc", numbered(1, 7),
                                 {{"4", "3"},
                                  {"4", "5"},
                                  {"3", "7"},
                                  {"7", "5"},
                                  {"3", "2"},
                                  {"2", "1"},
                                  {"5", "6"},
                                  {"6", "1"}});
        s.accept_roles = {"1", "3"};
        s.reject_roles = {"2"};
        return s;
    }
    if (name == "cover7-b") {
        auto s = graph_structure("vc", numbered(1, 7),
                                 {{"4", "1"},
                                  {"2", "1"},
                                  {"3", "1"},
                                  {"4", "7"},
                                  {"3", "7"},
                                  {"3", "6"},
                                  {"2", "6"},
                                  {"2", "5"},
                                  {"5", "4"}});
        s.reject_roles = {"1"};
        return s;
    }
    if (name == "cover8") {
        std::vector<Edge> edges;
        for (int i = 1; i <= 8; ++i)
            edges.emplace_back(std::to_string(i), std::to_string(i % 8 + 1));
        for (const auto& [u, v] : std::vector<Edge>{
                 {"2", "4"}, {"4", "7"}, {"7", "2"}, {"1", "3"}, {"3", "5"},
                 {"5", "8"}, {"8", "6"}, {"6", "1"}}) {
            edges.emplace_back(u, v);
        }
        auto s = graph_structure("vc", numbered(1, 8), std::move(edges));
        s.accept_roles = {"2"};
        s.reject_roles = {"1"};
        return s;
    }
    if (name == "triangle3") {
        auto s = graph_structure("triangle", numbered(1, 3),
                                 {{"1", "2"}, {"2", "3"}, {"1", "3"}});
        s.accept_roles = {"1"};
        return s;
    }
    if (name == "cycle4") {
        auto s = graph_structure("triangle", numbered(1, 4),
                                 {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "4"}});
        s.reject_roles = {"1"};
        return s;
    }
    throw CatalogError("unknown structure: " + name);
}

}  // namespace

const TopologicalStructure& builtin_structure(const std::string& name) {
    static std::map<std::string, TopologicalStructure> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, make_builtin(name)).first;
    return it->second;
}

std::vector<std::string> builtin_structure_names() {
    return {"split8-a", "split8-b", "match3-a", "match3-b", "cnf8-a", "cnf8-b",
            "digraph9", "cover7-a", "cover7-b", "cover8",   "triangle3", "cycle4"};
}

}  // namespace pal
