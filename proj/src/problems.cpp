#include "pal/problems.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pal/errors.hpp"

namespace pal {

namespace {

const GraphVertex& as_graph(const Item& item) {
    if (auto* g = std::get_if<GraphVertex>(&item.payload)) return *g;
    throw DomainError("expected a graph vertex, got " + canonical(item));
}

const BipartiteVertex& as_bipartite(const Item& item) {
    if (auto* b = std::get_if<BipartiteVertex>(&item.payload)) return *b;
    throw DomainError("expected a bipartite vertex, got " + canonical(item));
}

const Job& as_job(const Item& item) {
    if (auto* j = std::get_if<Job>(&item.payload)) return *j;
    throw DomainError("expected a job, got " + canonical(item));
}

const SatVariable& as_sat(const Item& item) {
    if (auto* v = std::get_if<SatVariable>(&item.payload)) return *v;
    throw DomainError("expected a variable, got " + canonical(item));
}

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidInstanceError(what);
}

using Adjacency = std::map<std::string, std::set<std::string>>;

Adjacency graph_adjacency(const std::vector<Item>& items) {
    Adjacency adj;
    for (const auto& item : items) {
        const auto& g = as_graph(item);
        require(!adj.count(g.name), "repeated vertex " + g.name);
        std::set<std::string> n(g.neighbors.begin(), g.neighbors.end());
        require(n.size() == g.neighbors.size(), "repeated neighbor at vertex " + g.name);
        require(!n.count(g.name), "self loop at vertex " + g.name);
        adj.emplace(g.name, std::move(n));
    }
    for (const auto& [u, n] : adj) {
        for (const auto& v : n) {
            auto it = adj.find(v);
            require(it != adj.end(), "vertex " + v + " mentioned but absent");
            require(it->second.count(u), "edge " + u + "-" + v + " listed only once");
        }
    }
    return adj;
}

Adjacency decided_adjacency(const std::vector<std::pair<Item, Decision>>& decided) {
    std::vector<Item> items;
    items.reserve(decided.size());
    for (const auto& [item, d] : decided) items.push_back(item);
    return graph_adjacency(items);
}

std::vector<std::pair<std::string, std::string>> edges_of(const Adjacency& adj) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [u, n] : adj)
        for (const auto& v : n)
            if (u < v) edges.emplace_back(u, v);
    return edges;
}

std::vector<Decision> binary_alphabet(const Item&) {
    return {accept_decision(), reject_decision()};
}

std::optional<Rational> infeasible() { return std::nullopt; }

}  // namespace

ProblemSpec independent_set_problem() {
    ProblemSpec spec;
    spec.name = "is";
    spec.sense = Sense::Maximize;
    spec.check_consistency = [](const std::vector<Item>& items) { graph_adjacency(items); };
    spec.alphabet = binary_alphabet;
    spec.objective = [](const std::vector<std::pair<Item, Decision>>& decided) {
        Adjacency adj = decided_adjacency(decided);
        std::set<std::string> in;
        for (const auto& [item, d] : decided)
            if (d.accept) in.insert(as_graph(item).name);
        for (const auto& [u, v] : edges_of(adj))
            if (in.count(u) && in.count(v)) return infeasible();
        return std::optional<Rational>(Rational((long)in.size()));
    };
    return spec;
}

ProblemSpec max_cut_problem() {
    ProblemSpec spec;
    spec.name = "maxcut";
    spec.sense = Sense::Maximize;
    spec.check_consistency = [](const std::vector<Item>& items) { graph_adjacency(items); };
    spec.alphabet = binary_alphabet;
    spec.objective = [](const std::vector<std::pair<Item, Decision>>& decided) {
        Adjacency adj = decided_adjacency(decided);
        std::set<std::string> one;  // accepted block
        for (const auto& [item, d] : decided)
            if (d.accept) one.insert(as_graph(item).name);
        // the rejected block may not be the smaller one (ties allowed)
        if (adj.size() < 2 * one.size()) return infeasible();
        long cut = 0;
        for (const auto& [u, v] : edges_of(adj))
            if (one.count(u) != one.count(v)) ++cut;
        return std::optional<Rational>(Rational(cut));
    };
    return spec;
}

ProblemSpec vertex_cover_problem() {
    ProblemSpec spec;
    spec.name = "vc";
    spec.sense = Sense::Minimize;
    spec.check_consistency = [](const std::vector<Item>& items) { graph_adjacency(items); };
    spec.alphabet = binary_alphabet;
    spec.objective = [](const std::vector<std::pair<Item, Decision>>& decided) {
        Adjacency adj = decided_adjacency(decided);
        std::set<std::string> cover;
        for (const auto& [item, d] : decided)
            if (d.accept) cover.insert(as_graph(item).name);
        for (const auto& [u, v] : edges_of(adj))
            if (!cover.count(u) && !cover.count(v)) return infeasible();
        return std::optional<Rational>(Rational((long)cover.size()));
    };
    return spec;
}

ProblemSpec bipartite_matching_problem() {
    ProblemSpec spec;
    spec.name = "matching";
    spec.sense = Sense::Maximize;
    spec.check_consistency = [](const std::vector<Item>& items) {
        std::set<std::string> names;
        for (const auto& item : items) {
            const auto& b = as_bipartite(item);
            require(names.insert(b.name).second, "repeated left vertex " + b.name);
            std::set<std::string> n(b.neighbors.begin(), b.neighbors.end());
            require(n.size() == b.neighbors.size(), "repeated neighbor at " + b.name);
        }
    };
    spec.alphabet = [](const Item& item) {
        const auto& b = as_bipartite(item);
        std::vector<Decision> out{reject_decision()};
        for (const auto& v : b.neighbors) out.push_back(match_decision(v));
        return out;
    };
    spec.objective = [](const std::vector<std::pair<Item, Decision>>& decided) {
        std::set<std::string> used;
        long matched = 0;
        for (const auto& [item, d] : decided) {
            const auto& b = as_bipartite(item);
            if (!d.accept) continue;
            bool neighbor = std::find(b.neighbors.begin(), b.neighbors.end(), d.partner) !=
                            b.neighbors.end();
            if (!neighbor || !used.insert(d.partner).second) return infeasible();
            ++matched;
        }
        return std::optional<Rational>(Rational(matched));
    };
    return spec;
}

namespace {

void check_clause_refs(const std::string& var, const std::vector<ClauseRef>& refs,
                       std::set<std::string>& seen_clauses) {
    for (const auto& ref : refs) {
        require(seen_clauses.insert(ref.clause).second,
                "variable " + var + " lists clause " + ref.clause + " twice");
        require(ref.length >= 1, "clause " + ref.clause + " with nonpositive length");
        require((long)ref.others.size() == ref.length - 1,
                "clause " + ref.clause + " length does not match its variable list");
        std::set<std::string> others(ref.others.begin(), ref.others.end());
        require(others.size() == ref.others.size(),
                "clause " + ref.clause + " repeats a variable");
        require(!others.count(var), "clause " + ref.clause + " lists its own variable");
    }
}

void check_cnf(const std::vector<Item>& items) {
    std::map<std::string, const SatVariable*> vars;
    for (const auto& item : items) {
        const auto& v = as_sat(item);
        require(vars.emplace(v.name, &v).second, "repeated variable " + v.name);
        std::set<std::string> clauses;
        check_clause_refs(v.name, v.pos, clauses);
        check_clause_refs(v.name, v.neg, clauses);
    }
    struct View {
        int length = 0;
        std::map<std::string, std::vector<std::string>> others_by_var;
    };
    std::map<std::string, View> clauses;
    for (const auto& [name, v] : vars) {
        for (const auto* side : {&v->pos, &v->neg}) {
            for (const auto& ref : *side) {
                auto& view = clauses[ref.clause];
                if (view.others_by_var.empty()) view.length = ref.length;
                require(view.length == ref.length,
                        "clause " + ref.clause + " seen with two lengths");
                view.others_by_var.emplace(name, ref.others);
            }
        }
    }
    for (const auto& [cname, view] : clauses) {
        require((long)view.others_by_var.size() == view.length,
                "clause " + cname + " is missing variables");
        std::vector<std::string> members;
        for (const auto& [var, others] : view.others_by_var) members.push_back(var);
        for (const auto& [var, others] : view.others_by_var) {
            std::vector<std::string> expect;
            for (const auto& m : members)
                if (m != var) expect.push_back(m);
            require(others == expect, "clause " + cname + " described inconsistently by " + var);
        }
    }
}

}  // namespace

ProblemSpec max_sat_problem() {
    ProblemSpec spec;
    spec.name = "max3sat";
    spec.sense = Sense::Maximize;
    spec.check_consistency = check_cnf;
    spec.alphabet = binary_alphabet;
    spec.objective = [](const std::vector<std::pair<Item, Decision>>& decided) {
        std::set<std::string> satisfied;
        for (const auto& [item, d] : decided) {
            const auto& v = as_sat(item);
            const auto& side = d.accept ? v.pos : v.neg;
            for (const auto& ref : side) satisfied.insert(ref.clause);
        }
        return std::optional<Rational>(Rational((long)satisfied.size()));
    };
    return spec;
}

namespace {

void check_digraph(const std::vector<Item>& items) {
    std::map<std::string, const Job*> jobs;
    for (const auto& item : items) {
        const auto& j = as_job(item);
        require(jobs.emplace(j.name, &j).second, "repeated job " + j.name);
        for (const auto* list : {&j.before, &j.after}) {
            std::set<std::string> n(list->begin(), list->end());
            require(n.size() == list->size(), "repeated arc at job " + j.name);
            require(!n.count(j.name), "self arc at job " + j.name);
        }
    }
    for (const auto& [name, j] : jobs) {
        for (const auto& w : j->after) {
            auto it = jobs.find(w);
            require(it != jobs.end(), "job " + w + " mentioned but absent");
            const auto& b = it->second->before;
            require(std::find(b.begin(), b.end(), name) != b.end(),
                    "arc " + name + "->" + w + " listed only once");
        }
        for (const auto& w : j->before) {
            auto it = jobs.find(w);
            require(it != jobs.end(), "job " + w + " mentioned but absent");
            const auto& a = it->second->after;
            require(std::find(a.begin(), a.end(), name) != a.end(),
                    "arc " + w + "->" + name + " listed only once");
        }
    }
}

bool induced_acyclic(const std::map<std::string, std::vector<std::string>>& out_arcs) {
    std::map<std::string, int> indegree;
    for (const auto& [u, outs] : out_arcs) indegree.emplace(u, 0);
    for (const auto& [u, outs] : out_arcs)
        for (const auto& w : outs) ++indegree[w];
    std::vector<std::string> ready;
    for (const auto& [u, deg] : indegree)
        if (deg == 0) ready.push_back(u);
    size_t removed = 0;
    while (!ready.empty()) {
        std::string u = ready.back();
        ready.pop_back();
        ++removed;
        for (const auto& w : out_arcs.at(u))
            if (--indegree[w] == 0) ready.push_back(w);
    }
    return removed == out_arcs.size();
}

}  // namespace

ProblemSpec job_scheduling_problem() {
    ProblemSpec spec;
    spec.name = "jobsched";
    spec.sense = Sense::Maximize;
    spec.check_consistency = check_digraph;
    spec.alphabet = binary_alphabet;
    spec.objective = [](const std::vector<std::pair<Item, Decision>>& decided) {
        std::set<std::string> in;
        for (const auto& [item, d] : decided)
            if (d.accept) in.insert(as_job(item).name);
        std::map<std::string, std::vector<std::string>> out_arcs;
        for (const auto& [item, d] : decided) {
            if (!d.accept) continue;
            const auto& j = as_job(item);
            auto& outs = out_arcs[j.name];
            for (const auto& w : j.after)
                if (in.count(w)) outs.push_back(w);
        }
        if (!induced_acyclic(out_arcs)) return infeasible();
        return std::optional<Rational>(Rational((long)in.size()));
    };
    return spec;
}

ProblemSpec triangle_problem() {
    ProblemSpec spec;
    spec.name = "triangle";
    spec.sense = Sense::Maximize;
    spec.check_consistency = [](const std::vector<Item>& items) { graph_adjacency(items); };
    spec.alphabet = binary_alphabet;
    spec.objective = [](const std::vector<std::pair<Item, Decision>>& decided) {
        Adjacency adj = decided_adjacency(decided);
        std::set<std::string> on_triangle;
        for (const auto& [u, n] : adj) {
            for (const auto& v : n) {
                for (const auto& w : n) {
                    if (v < w && adj.at(v).count(w)) {
                        on_triangle.insert(u);
                        on_triangle.insert(v);
                        on_triangle.insert(w);
                    }
                }
            }
        }
        long correct = 0;
        for (const auto& [item, d] : decided)
            if (d.accept == (on_triangle.count(as_graph(item).name) > 0)) ++correct;
        return std::optional<Rational>(Rational(correct));
    };
    return spec;
}

const ProblemSpec& problem(const std::string& name) {
    static const std::map<std::string, ProblemSpec> registry = [] {
        std::map<std::string, ProblemSpec> m;
        for (auto spec : {independent_set_problem(), max_cut_problem(), vertex_cover_problem(),
                          bipartite_matching_problem(), max_sat_problem(),
                          job_scheduling_problem(), triangle_problem()}) {
            m.emplace(spec.name, std::move(spec));
        }
        return m;
    }();
    auto it = registry.find(name);
    if (it == registry.end()) throw CatalogError("unknown problem: " + name);
    return it->second;
}

std::vector<std::string> problem_names() {
    std::vector<std::string> names;
    for (const auto& n :
         {"is", "maxcut", "vc", "matching", "max3sat", "jobsched", "triangle"}) {
        names.emplace_back(n);
    }
    return names;
}

}  // namespace pal
