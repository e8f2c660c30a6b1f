#include "pal/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "pal/errors.hpp"

namespace pal {

namespace {

const std::vector<CatalogEntry>& entries() {
    static const std::vector<CatalogEntry> all = {
        {"triangle", "triangle", {""}, 3, 4, 2, 3, 4, true},
        {"is", "is", {""}, 3, 3, 2, 2, 8, true},
        {"maxcut", "maxcut", {""}, 15, 15, 14, 14, 8, true},
        {"bipartite", "matching", {""}, 3, 3, 2, 2, 3, true},
        {"max3sat", "max3sat", {""}, 8, 8, 7, 7, 3, true},
        {"jobsched", "jobsched", {""}, 6, 6, 5, 5, 9, true},
        {"vc-mixed", "vc", {"2", "3"}, 3, 3, 4, 4, 7, false},
        {"vc-regular", "vc", {""}, 5, 5, 6, 6, 8, true},
    };
    return all;
}

long to_long(const Rational& r) {
    if (denominator(r) != 1) throw DomainError("expected an integer, got " + format_rational(r));
    return numerator(r).convert_to<long>();
}

std::vector<std::string> minus(const std::vector<std::string>& pool,
                               const std::set<std::string>& used) {
    std::vector<std::string> out;
    for (const auto& n : pool)
        if (!used.count(n)) out.push_back(n);
    return out;
}

void for_each_combo(const std::vector<std::string>& pool, size_t k,
                    const std::function<void(const std::vector<std::string>&)>& fn) {
    if (k > pool.size()) return;
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<std::string> combo(k);
    while (true) {
        for (size_t i = 0; i < k; ++i) combo[i] = pool[idx[i]];
        fn(combo);
        size_t i = k;
        while (i > 0 && idx[i - 1] == pool.size() - (k - i + 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::string shape_class(const Item& item) {
    if (auto* g = std::get_if<GraphVertex>(&item.payload))
        return "g" + std::to_string(g->neighbors.size());
    if (auto* b = std::get_if<BipartiteVertex>(&item.payload))
        return "b" + std::to_string(b->neighbors.size());
    if (auto* j = std::get_if<Job>(&item.payload))
        return "j" + std::to_string(j->before.size()) + "." + std::to_string(j->after.size());
    if (auto* v = std::get_if<SatVariable>(&item.payload))
        return "s" + std::to_string(v->pos.size()) + "." + std::to_string(v->neg.size());
    throw DomainError("plain values have no shape class");
}

std::vector<int> graph_degrees(const std::string& family) {
    if (family == "is" || family == "maxcut") return {5};
    if (family == "vc-regular") return {4};
    if (family == "vc-mixed") return {2, 3};
    if (family == "triangle") return {2};
    throw CatalogError("family " + family + " has no graph universe");
}

}  // namespace

const CatalogEntry& catalog_entry(const std::string& family) {
    for (const auto& e : entries())
        if (e.family == family) return e;
    throw CatalogError("unknown gadget family: " + family);
}

std::vector<std::string> catalog_families() {
    std::vector<std::string> names;
    for (const auto& e : entries()) names.push_back(e.family);
    return names;
}

StructurePair builtin_structure_pair(const std::string& family, const std::string& variant) {
    const auto& entry = catalog_entry(family);
    if (std::find(entry.variants.begin(), entry.variants.end(), variant) == entry.variants.end())
        throw CatalogError("family " + family + " has no variant '" + variant + "'");
    auto with_problem = [&](const char* name) {
        TopologicalStructure s = builtin_structure(name);
        s.problem = entry.problem;
        return s;
    };
    if (family == "is" || family == "maxcut")
        return {with_problem("split8-a"), with_problem("split8-b"), "1", "1"};
    if (family == "bipartite")
        return {with_problem("match3-a"), with_problem("match3-b"), "1", "1"};
    if (family == "max3sat")
        return {with_problem("cnf8-a"), with_problem("cnf8-b"), "x1", "x1"};
    if (family == "jobsched")
        return {with_problem("digraph9"), with_problem("digraph9"), "0", "8"};
    if (family == "vc-mixed") {
        if (variant == "2") return {with_problem("cover7-a"), with_problem("cover7-a"), "1", "2"};
        return {with_problem("cover7-a"), with_problem("cover7-b"), "3", "1"};
    }
    if (family == "vc-regular")
        return {with_problem("cover8"), with_problem("cover8"), "2", "1"};
    if (family == "triangle")
        return {with_problem("triangle3"), with_problem("cycle4"), "1", "1"};
    throw CatalogError("unknown gadget family: " + family);
}

NamePool fresh_names(const std::string& family, long token) {
    const auto& entry = catalog_entry(family);
    // s2 is never the smaller structure, so its name count sizes the pool
    size_t primary = builtin_structure_pair(family, entry.variants.front()).s2.names.size();
    NamePool pool;
    std::string prefix = std::to_string(token) + ":";
    for (size_t i = 1; i <= primary; ++i) pool.primary.push_back(prefix + std::to_string(i));
    if (family == "bipartite")
        for (int i = 1; i <= 3; ++i) pool.secondary.push_back(prefix + "r" + std::to_string(i));
    if (family == "max3sat")
        for (int i = 1; i <= 8; ++i) pool.secondary.push_back(prefix + "c" + std::to_string(i));
    return pool;
}

std::vector<Item> candidate_universe(const std::string& family, const NamePool& pool) {
    const auto& entry = catalog_entry(family);
    const auto& kind = builtin_structure_pair(family, entry.variants.front()).s1.kind;
    std::vector<Item> universe;
    if (kind == "graph") {
        for (const auto& name : pool.primary) {
            auto others = minus(pool.primary, {name});
            for (int d : graph_degrees(family)) {
                for_each_combo(others, (size_t)d, [&](const std::vector<std::string>& combo) {
                    universe.push_back(make_graph_vertex(name, combo));
                });
            }
        }
        return universe;
    }
    if (kind == "bipartite") {
        for (const auto& name : pool.primary) {
            for_each_combo(pool.secondary, 2, [&](const std::vector<std::string>& combo) {
                universe.push_back(make_bipartite_vertex(name, combo));
            });
        }
        return universe;
    }
    if (kind == "digraph") {
        for (const auto& name : pool.primary) {
            auto others = minus(pool.primary, {name});
            for_each_combo(others, 2, [&](const std::vector<std::string>& before) {
                auto rest = minus(others, {before.begin(), before.end()});
                for_each_combo(rest, 2, [&](const std::vector<std::string>& after) {
                    universe.push_back(make_job(name, before, after));
                });
            });
        }
        return universe;
    }
    if (kind == "cnf") {
        for (const auto& name : pool.primary) {
            auto other_vars = minus(pool.primary, {name});
            for_each_combo(pool.secondary, 4, [&](const std::vector<std::string>& positive) {
                std::set<std::string> chosen(positive.begin(), positive.end());
                std::vector<ClauseRef> pos, neg;
                for (const auto& c : pool.secondary) {
                    ClauseRef ref{c, 3, other_vars};
                    (chosen.count(c) ? pos : neg).push_back(std::move(ref));
                }
                universe.push_back(make_sat_variable(name, std::move(pos), std::move(neg)));
            });
        }
        return universe;
    }
    throw CatalogError("unknown structure kind: " + kind);
}

std::optional<Rational> evaluate_objective(const ProblemSpec& spec,
                                           const std::vector<Item>& instance,
                                           const std::vector<Decision>& decisions) {
    if (instance.size() != decisions.size())
        throw DomainError("decision vector length does not match the instance");
    std::vector<std::pair<Item, Decision>> decided;
    decided.reserve(instance.size());
    for (size_t i = 0; i < instance.size(); ++i) decided.emplace_back(instance[i], decisions[i]);
    return spec.objective(decided);
}

namespace {

constexpr long kDecisionSpaceCap = 1L << 24;

// Calls fn with every decision vector whose digits run over the given
// alphabets, in odometer order.
void for_each_vector(const std::vector<std::vector<Decision>>& alphabets,
                     const std::function<void(const std::vector<Decision>&)>& fn) {
    long space = 1;
    for (const auto& a : alphabets) {
        if (a.empty()) throw CatalogError("item with empty decision alphabet");
        space *= (long)a.size();
        if (space > kDecisionSpaceCap)
            throw SearchBudgetError("decision space exceeds the exhaustive search cap");
    }
    size_t n = alphabets.size();
    std::vector<size_t> digit(n, 0);
    std::vector<Decision> current(n);
    for (size_t i = 0; i < n; ++i) current[i] = alphabets[i][0];
    while (true) {
        fn(current);
        size_t i = 0;
        while (i < n) {
            if (++digit[i] < alphabets[i].size()) {
                current[i] = alphabets[i][digit[i]];
                break;
            }
            digit[i] = 0;
            current[i] = alphabets[i][0];
            ++i;
        }
        if (i == n) break;
    }
}

bool better(const ProblemSpec& spec, const Rational& a, const Rational& b) {
    return spec.sense == Sense::Maximize ? a > b : a < b;
}

}  // namespace

BruteForceResult brute_force_opt(const ProblemSpec& spec, const std::vector<Item>& instance) {
    std::vector<std::vector<Decision>> alphabets;
    alphabets.reserve(instance.size());
    for (const auto& item : instance) alphabets.push_back(spec.alphabet(item));
    std::vector<std::pair<Item, Decision>> decided;
    for (const auto& item : instance) decided.emplace_back(item, Decision{});
    BruteForceResult result;
    bool any = false;
    for_each_vector(alphabets, [&](const std::vector<Decision>& current) {
        for (size_t i = 0; i < current.size(); ++i) decided[i].second = current[i];
        auto value = spec.objective(decided);
        if (!value) return;
        if (!any || better(spec, *value, result.value)) {
            any = true;
            result.value = *value;
            result.optimal.clear();
            result.optimal.push_back(current);
        } else if (*value == result.value) {
            result.optimal.push_back(current);
        }
    });
    if (!any) throw CatalogError("no feasible decision vector");
    return result;
}

Rational brute_force_bad(const ProblemSpec& spec, const std::vector<Item>& instance,
                         const Item& first, const std::vector<Decision>& wrong) {
    if (wrong.empty()) throw CatalogError("empty wrong-decision set");
    size_t idx = instance.size();
    for (size_t i = 0; i < instance.size(); ++i)
        if (instance[i] == first) idx = i;
    if (idx == instance.size()) throw DomainError("first item is not part of the instance");
    std::vector<std::vector<Decision>> alphabets;
    alphabets.reserve(instance.size());
    for (const auto& item : instance) alphabets.push_back(spec.alphabet(item));
    alphabets[idx] = wrong;
    std::vector<std::pair<Item, Decision>> decided;
    for (const auto& item : instance) decided.emplace_back(item, Decision{});
    bool any = false;
    Rational best;
    for_each_vector(alphabets, [&](const std::vector<Decision>& current) {
        for (size_t i = 0; i < current.size(); ++i) decided[i].second = current[i];
        auto value = spec.objective(decided);
        if (!value) return;
        if (!any || better(spec, *value, best)) {
            any = true;
            best = *value;
        }
    });
    if (!any) throw CatalogError("no feasible decision vector in the wrong branch");
    return best;
}

namespace {

// Injective name map built piecewise; conflicting additions mean the
// bijection cannot be extended.
class Bijection {
public:
    void add(const std::string& from, const std::string& to) {
        auto it = map_.find(from);
        if (it != map_.end()) {
            if (it->second != to)
                throw InstantiationError("name " + from + " already mapped differently");
            return;
        }
        if (!used_.insert(to).second)
            throw InstantiationError("two names map to " + to);
        map_.emplace(from, to);
    }

    void add_sorted(std::vector<std::string> from, std::vector<std::string> to) {
        if (from.size() != to.size())
            throw InstantiationError("shape mismatch extending the name bijection");
        std::sort(from.begin(), from.end());
        std::sort(to.begin(), to.end());
        for (size_t i = 0; i < from.size(); ++i) add(from[i], to[i]);
    }

    // Rest extension: the pool may be larger than the structure, so any
    // surplus names stay unused.
    void add_rest(std::vector<std::string> from, std::vector<std::string> to) {
        if (from.size() > to.size())
            throw InstantiationError("name pool too small for the structure");
        std::sort(to.begin(), to.end());
        to.resize(from.size());
        add_sorted(std::move(from), std::move(to));
    }

    std::vector<std::string> unmapped(const std::vector<std::string>& names) const {
        std::vector<std::string> out;
        for (const auto& n : names)
            if (!map_.count(n)) out.push_back(n);
        return out;
    }

    std::vector<std::string> unused(const std::vector<std::string>& pool) const {
        std::vector<std::string> out;
        for (const auto& n : pool)
            if (!used_.count(n)) out.push_back(n);
        return out;
    }

    const std::map<std::string, std::string>& map() const { return map_; }

private:
    std::map<std::string, std::string> map_;
    std::set<std::string> used_;
};

struct BijectionPair {
    std::map<std::string, std::string> primary;
    std::map<std::string, std::string> secondary;
};

BijectionPair extend_bijection(const TopologicalStructure& s, const std::string& role,
                               const Item& target, const NamePool& pool) {
    Bijection primary, secondary;
    if (s.kind == "graph") {
        const auto& t = std::get<GraphVertex>(target.payload);
        std::vector<std::string> role_neighbors;
        for (const auto& [a, b] : s.edges) {
            if (a == role) role_neighbors.push_back(b);
            if (b == role) role_neighbors.push_back(a);
        }
        primary.add(role, t.name);
        primary.add_sorted(role_neighbors, t.neighbors);
        primary.add_rest(primary.unmapped(s.names), primary.unused(pool.primary));
    } else if (s.kind == "digraph") {
        const auto& t = std::get<Job>(target.payload);
        std::vector<std::string> before, after;
        for (const auto& [a, b] : s.arcs) {
            if (b == role) before.push_back(a);
            if (a == role) after.push_back(b);
        }
        primary.add(role, t.name);
        primary.add_sorted(before, t.before);
        primary.add_sorted(after, t.after);
        primary.add_rest(primary.unmapped(s.names), primary.unused(pool.primary));
    } else if (s.kind == "bipartite") {
        const auto& t = std::get<BipartiteVertex>(target.payload);
        std::vector<std::string> rights, all_rights;
        std::set<std::string> seen;
        for (const auto& [l, r] : s.edges) {
            if (l == role) rights.push_back(r);
            if (seen.insert(r).second) all_rights.push_back(r);
        }
        primary.add(role, t.name);
        primary.add_rest(primary.unmapped(s.names), primary.unused(pool.primary));
        secondary.add_sorted(rights, t.neighbors);
        secondary.add_rest(secondary.unmapped(all_rights), secondary.unused(pool.secondary));
    } else if (s.kind == "cnf") {
        const auto& t = std::get<SatVariable>(target.payload);
        std::vector<std::string> pos, neg, all_clauses, t_pos, t_neg;
        for (const auto& clause : s.clauses) {
            all_clauses.push_back(clause.name);
            for (const auto& [var, positive] : clause.literals)
                if (var == role) (positive ? pos : neg).push_back(clause.name);
        }
        for (const auto& ref : t.pos) t_pos.push_back(ref.clause);
        for (const auto& ref : t.neg) t_neg.push_back(ref.clause);
        primary.add(role, t.name);
        primary.add_rest(primary.unmapped(s.names), primary.unused(pool.primary));
        secondary.add_sorted(pos, t_pos);
        secondary.add_sorted(neg, t_neg);
        if (secondary.map().size() != all_clauses.size())
            throw InstantiationError("clause split does not cover the structure");
    } else {
        throw CatalogError("unknown structure kind: " + s.kind);
    }
    return {primary.map(), secondary.map()};
}

struct RoleCertificate {
    long opt = 0;
    long bad = 0;
    std::vector<Decision> d;  // optimal decisions at the role item
    bool unique = false;
};

RoleCertificate compute_role_certificate(const ProblemSpec& spec, const TopologicalStructure& s,
                                         const std::string& role) {
    auto items = structure_items(s);
    size_t idx = items.size();
    for (size_t i = 0; i < items.size(); ++i)
        if (identity(items[i]) == role) idx = i;
    if (idx == items.size()) throw CatalogError("role " + role + " is not part of the structure");
    auto bf = brute_force_opt(spec, items);
    RoleCertificate rc;
    rc.opt = to_long(bf.value);
    rc.unique = bf.optimal.size() == 1;
    for (const auto& d : spec.alphabet(items[idx])) {
        for (const auto& vec : bf.optimal) {
            if (vec[idx] == d) {
                rc.d.push_back(d);
                break;
            }
        }
    }
    std::vector<Decision> wrong;
    for (const auto& d : spec.alphabet(items[idx]))
        if (std::find(rc.d.begin(), rc.d.end(), d) == rc.d.end()) wrong.push_back(d);
    rc.bad = to_long(brute_force_bad(spec, items, items[idx], wrong));
    return rc;
}

const RoleCertificate& role_certificate(const std::string& family, const std::string& variant,
                                        int side, const ProblemSpec& spec,
                                        const TopologicalStructure& s, const std::string& role) {
    static std::map<std::string, RoleCertificate> cache;
    std::string key = family + "|" + variant + "|" + std::to_string(side);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, compute_role_certificate(spec, s, role)).first;
    return it->second;
}

const Item* priority_max(const std::vector<Item>& items, const PriorityFunction& p) {
    const Item* best = nullptr;
    PriorityKey best_key;
    for (const auto& item : items) {
        PriorityKey key = p.key(item);
        if (!best || best_key < key) {
            best = &item;
            best_key = std::move(key);
        } else if (!(key < best_key) && !(item == *best)) {
            throw PriorityTieError("priority tie between " + canonical(*best) + " and " +
                                   canonical(item));
        }
    }
    return best;
}

std::string dispatch_variant(const CatalogEntry& entry, const Item& m1) {
    if (entry.variants.size() == 1) return entry.variants.front();
    std::string token = std::to_string(std::get<GraphVertex>(m1.payload).neighbors.size());
    if (std::find(entry.variants.begin(), entry.variants.end(), token) == entry.variants.end())
        throw InstantiationError("no gadget pair for shape class " + shape_class(m1));
    return token;
}

Decision map_decision(Decision d, const std::map<std::string, std::string>& secondary) {
    if (!d.partner.empty()) {
        auto it = secondary.find(d.partner);
        if (it == secondary.end()) throw InstantiationError("no image for partner " + d.partner);
        d.partner = it->second;
    }
    return d;
}

}  // namespace

GadgetPair instantiate_pair(const std::string& family, const NamePool& pool,
                            const PriorityFunction& p) {
    const auto& entry = catalog_entry(family);
    const auto& spec = problem(entry.problem);
    auto universe = candidate_universe(family, pool);
    const Item* m1 = priority_max(universe, p);
    GadgetPair pair;
    pair.family = family;
    pair.variant = dispatch_variant(entry, *m1);
    pair.problem = entry.problem;
    pair.m1 = *m1;
    auto spair = builtin_structure_pair(family, pair.variant);
    const auto& rc1 = role_certificate(family, pair.variant, 1, spec, spair.s1, spair.u);
    const auto& rc2 = role_certificate(family, pair.variant, 2, spec, spair.s2, spair.v);
    if (rc1.opt != entry.opt1 || rc1.bad != entry.bad1 || rc2.opt != entry.opt2 ||
        rc2.bad != entry.bad2) {
        throw GadgetConditionError("gadget OPT and BAD condition",
                                   "declared constants disagree with exhaustive search for " +
                                       family);
    }
    auto maps1 = extend_bijection(spair.s1, spair.u, *m1, pool);
    auto maps2 = extend_bijection(spair.s2, spair.v, *m1, pool);
    pair.g1 = structure_items(rename_structure(spair.s1, maps1.primary, maps1.secondary));
    pair.g2 = structure_items(rename_structure(spair.s2, maps2.primary, maps2.secondary));
    for (const auto* side : {&pair.g1, &pair.g2}) {
        if (std::find(side->begin(), side->end(), *m1) == side->end())
            throw Error("role image does not reproduce the first item");
    }
    for (const auto& d : rc1.d) pair.d1.push_back(map_decision(d, maps1.secondary));
    for (const auto& d : rc2.d) pair.d2.push_back(map_decision(d, maps2.secondary));
    std::vector<Item> rest;
    for (const auto* side : {&pair.g1, &pair.g2}) {
        for (const auto& item : *side) {
            if (item == *m1) continue;
            if (std::find(rest.begin(), rest.end(), item) == rest.end()) rest.push_back(item);
        }
    }
    pair.m2 = *priority_max(rest, p);
    pair.opt1 = entry.opt1;
    pair.opt2 = entry.opt2;
    pair.bad1 = entry.bad1;
    pair.bad2 = entry.bad2;
    pair.size = (long)std::max(pair.g1.size(), pair.g2.size());
    return pair;
}

namespace {

bool same_decision_set(std::vector<Decision> a, std::vector<Decision> b) {
    auto key = [](const Decision& d) { return format_decision(d); };
    auto cmp = [&](const Decision& x, const Decision& y) { return key(x) < key(y); };
    std::sort(a.begin(), a.end(), cmp);
    std::sort(b.begin(), b.end(), cmp);
    return a == b;
}

}  // namespace

GadgetCertificate verify_gadget_pair(const GadgetPair& pair, const PriorityFunction& p) {
    const auto& entry = catalog_entry(pair.family);
    const auto& spec = problem(pair.problem);
    spec.check_consistency(pair.g1);
    spec.check_consistency(pair.g2);

    const Item* top1 = priority_max(pair.g1, p);
    const Item* top2 = priority_max(pair.g2, p);
    if (!(*top1 == pair.m1) || !(*top2 == pair.m1))
        throw GadgetConditionError("first item condition",
                                   "the gadgets' highest-priority items differ from m1");
    std::vector<Item> rest;
    for (const auto* side : {&pair.g1, &pair.g2}) {
        for (const auto& item : *side) {
            if (item == pair.m1) continue;
            if (std::find(rest.begin(), rest.end(), item) == rest.end()) rest.push_back(item);
        }
    }
    if (!(*priority_max(rest, p) == pair.m2))
        throw GadgetConditionError("first item condition",
                                   "m2 is not the runner-up of the united gadgets");

    if ((long)pair.g1.size() > entry.size || (long)pair.g2.size() > entry.size)
        throw GadgetConditionError("size condition", "gadget exceeds the declared size");

    GadgetCertificate cert;
    auto side_check = [&](const std::vector<Item>& g, const std::vector<Decision>& declared_d,
                          long declared_opt, long declared_bad, std::vector<Decision>& d_out,
                          bool& unique_out, long& opt_out, long& bad_out) {
        size_t idx = g.size();
        for (size_t i = 0; i < g.size(); ++i)
            if (g[i] == pair.m1) idx = i;
        auto bf = brute_force_opt(spec, g);
        opt_out = to_long(bf.value);
        unique_out = bf.optimal.size() == 1;
        for (const auto& d : spec.alphabet(g[idx])) {
            for (const auto& vec : bf.optimal) {
                if (vec[idx] == d) {
                    d_out.push_back(d);
                    break;
                }
            }
        }
        if (!same_decision_set(d_out, declared_d))
            throw GadgetConditionError("distinguishing decision condition",
                                       "stored optimal first decisions disagree with search");
        std::vector<Decision> wrong;
        for (const auto& d : spec.alphabet(g[idx]))
            if (std::find(d_out.begin(), d_out.end(), d) == d_out.end()) wrong.push_back(d);
        bad_out = to_long(brute_force_bad(spec, g, pair.m1, wrong));
        if (opt_out != declared_opt || bad_out != declared_bad)
            throw GadgetConditionError("gadget OPT and BAD condition",
                                       "recomputed OPT/BAD disagree with stored constants");
    };
    side_check(pair.g1, pair.d1, pair.opt1, pair.bad1, cert.d1, cert.unique1, cert.opt1,
               cert.bad1);
    side_check(pair.g2, pair.d2, pair.opt2, pair.bad2, cert.d2, cert.unique2, cert.opt2,
               cert.bad2);

    for (const auto& a : cert.d1)
        for (const auto& b : cert.d2)
            if (a == b)
                throw GadgetConditionError("distinguishing decision condition",
                                           "optimal first decisions overlap");
    if (cert.d1.empty() || cert.d2.empty())
        throw GadgetConditionError("distinguishing decision condition",
                                   "empty optimal first-decision set");
    if (cert.opt2 < cert.opt1)
        throw GadgetConditionError("gadget OPT and BAD condition",
                                   "the second gadget's optimum is smaller than the first's");

    cert.isomorphic_items = true;
    std::string cls = shape_class(pair.m1);
    for (const auto* side : {&pair.g1, &pair.g2})
        for (const auto& item : *side)
            if (shape_class(item) != cls) cert.isomorphic_items = false;
    return cert;
}

}  // namespace pal
