#include <doctest.h>

#include <functional>
#include <map>
#include <set>

#include "pal/catalog.hpp"
#include "pal/errors.hpp"
#include "pal/priority.hpp"
#include "pal/problems.hpp"
#include "pal/structures.hpp"

using namespace pal;

namespace {

std::map<std::string, int> degrees(const TopologicalStructure& s) {
    std::map<std::string, int> deg;
    for (const auto& name : s.names) deg[name] = 0;
    for (const auto& [u, v] : s.edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

const Item* find_item(const std::vector<Item>& items, const Item& wanted) {
    for (const auto& it : items)
        if (it == wanted) return &it;
    return nullptr;
}

std::map<std::string, std::set<std::string>> graph_of(const std::vector<Item>& items) {
    std::map<std::string, std::set<std::string>> adj;
    for (const auto& it : items) {
        const auto& v = std::get<GraphVertex>(it.payload);
        adj[v.name] = {v.neighbors.begin(), v.neighbors.end()};
    }
    return adj;
}

bool acyclic(const std::map<std::string, std::set<std::string>>& arcs) {
    std::map<std::string, int> state;  // 0 new, 1 open, 2 done
    std::function<bool(const std::string&)> dfs = [&](const std::string& u) {
        state[u] = 1;
        auto it = arcs.find(u);
        if (it != arcs.end()) {
            for (const auto& v : it->second) {
                if (!arcs.count(v)) continue;
                if (state[v] == 1) return false;
                if (state[v] == 0 && !dfs(v)) return false;
            }
        }
        state[u] = 2;
        return true;
    };
    for (const auto& [u, _] : arcs)
        if (state[u] == 0 && !dfs(u)) return false;
    return true;
}

}  // namespace

TEST_CASE("builtin structures have the declared shapes") {
    for (const char* name : {"split8-a", "split8-b"}) {
        const auto& s = builtin_structure(name);
        CHECK(s.names.size() == 8);
        CHECK(s.edges.size() == 20);
        for (const auto& [v, d] : degrees(s)) CHECK(d == 5);
    }
    for (const char* name : {"match3-a", "match3-b"}) {
        const auto& s = builtin_structure(name);
        CHECK(s.names.size() == 3);
        CHECK(s.edges.size() == 6);
        std::map<std::string, int> left;
        for (const auto& [l, r] : s.edges) ++left[l];
        for (const auto& [v, d] : left) CHECK(d == 2);
    }
    for (const char* name : {"cnf8-a", "cnf8-b"}) {
        const auto& s = builtin_structure(name);
        CHECK(s.names.size() == 3);
        CHECK(s.clauses.size() == 8);
        std::map<std::string, std::pair<int, int>> occurs;
        for (const auto& c : s.clauses) {
            CHECK(c.literals.size() == 3);
            for (const auto& [var, positive] : c.literals) {
                if (positive)
                    ++occurs[var].first;
                else
                    ++occurs[var].second;
            }
        }
        for (const auto& [var, pn] : occurs) {
            CHECK(pn.first == 4);
            CHECK(pn.second == 4);
        }
    }
    {
        const auto& s = builtin_structure("digraph9");
        CHECK(s.names.size() == 9);
        CHECK(s.arcs.size() == 18);
        std::map<std::string, int> in, out;
        for (const auto& [u, v] : s.arcs) {
            ++out[u];
            ++in[v];
        }
        for (const auto& n : s.names) {
            CHECK(in[n] == 2);
            CHECK(out[n] == 2);
        }
    }
    {
        const auto& a = builtin_structure("cover7-a");
        CHECK(a.names.size() == 7);
        CHECK(a.edges.size() == 8);
        std::map<int, int> histogram;
        for (const auto& [v, d] : degrees(a)) ++histogram[d];
        CHECK(histogram[2] == 5);
        CHECK(histogram[3] == 2);
        const auto& b = builtin_structure("cover7-b");
        CHECK(b.edges.size() == 9);
        std::map<int, int> hb;
        for (const auto& [v, d] : degrees(b)) ++hb[d];
        CHECK(hb[2] == 3);
        CHECK(hb[3] == 4);
    }
    {
        const auto& s = builtin_structure("cover8");
        CHECK(s.names.size() == 8);
        CHECK(s.edges.size() == 16);
        for (const auto& [v, d] : degrees(s)) CHECK(d == 4);
    }
    CHECK(builtin_structure("triangle3").edges.size() == 3);
    CHECK(builtin_structure("cycle4").edges.size() == 4);
    for (const auto& [v, d] : degrees(builtin_structure("cycle4"))) CHECK(d == 2);
    CHECK_THROWS_AS(builtin_structure("no-such-shape"), CatalogError);
}

TEST_CASE("structures serialize and parse back unchanged") {
    for (const auto& name : builtin_structure_names()) {
        const auto& s = builtin_structure(name);
        CAPTURE(name);
        CHECK(parse_structure(serialize_structure(s)) == s);
    }
}

TEST_CASE("every family verifies against exhaustive recomputation") {
    struct Expect {
        bool unique1, unique2;
    };
    const std::map<std::string, Expect> uniques = {
        {"triangle", {true, true}},   {"is", {true, true}},
        {"maxcut", {true, true}},     {"bipartite", {false, false}},
        {"max3sat", {false, false}},  {"jobsched", {false, false}},
        {"vc-mixed", {true, true}},   {"vc-regular", {true, true}},
    };
    for (const auto& family : catalog_families()) {
        const auto& entry = catalog_entry(family);
        std::set<std::string> variants_seen;
        for (uint64_t seed = 1; seed <= 12 && variants_seen.size() < entry.variants.size();
             ++seed) {
            NamePool pool = fresh_names(family, (long)seed);
            PriorityFunction p = random_priority(seed * 101);
            GadgetPair pair = instantiate_pair(family, pool, p);
            variants_seen.insert(pair.variant);

            GadgetCertificate cert = verify_gadget_pair(pair, p);
            CAPTURE(family);
            CAPTURE(seed);
            CHECK(cert.opt1 == entry.opt1);
            CHECK(cert.opt2 == entry.opt2);
            CHECK(cert.bad1 == entry.bad1);
            CHECK(cert.bad2 == entry.bad2);
            CHECK(cert.isomorphic_items == entry.isomorphic_items);
            CHECK(cert.unique1 == uniques.at(family).unique1);
            CHECK(cert.unique2 == uniques.at(family).unique2);
            CHECK(pair.opt1 == entry.opt1);
            CHECK(pair.size == entry.size);
            CHECK((long)pair.g1.size() <= entry.size);
            CHECK((long)pair.g2.size() <= entry.size);
        }
        CHECK(variants_seen.size() == entry.variants.size());
    }
}

TEST_CASE("candidate universe peaks at the pair's first item") {
    const std::map<std::string, size_t> sizes = {
        {"is", 168},      {"maxcut", 168},   {"bipartite", 9},    {"max3sat", 210},
        {"jobsched", 3780}, {"vc-mixed", 245}, {"vc-regular", 280}, {"triangle", 12},
    };
    for (const auto& family : catalog_families()) {
        NamePool pool = fresh_names(family, 0);
        auto universe = candidate_universe(family, pool);
        CAPTURE(family);
        CHECK(universe.size() == sizes.at(family));
        PriorityFunction p = random_priority(777);
        GadgetPair pair = instantiate_pair(family, pool, p);
        PriorityKey top = p.key(pair.m1);
        for (const auto& item : universe) CHECK(p.key(item) <= top);
        CHECK(find_item(universe, pair.m1) != nullptr);
    }
}

TEST_CASE("independent set gadget decodes to a size three independent set") {
    NamePool pool = fresh_names("is", 2);
    PriorityFunction p = random_priority(5);
    GadgetPair pair = instantiate_pair("is", pool, p);
    const auto& spec = problem("is");
    auto bf = brute_force_opt(spec, pair.g1);
    CHECK(bf.value == 3);
    REQUIRE(bf.optimal.size() == 1);
    auto adj = graph_of(pair.g1);
    std::vector<std::string> chosen;
    for (size_t i = 0; i < pair.g1.size(); ++i)
        if (bf.optimal[0][i].accept) chosen.push_back(std::get<GraphVertex>(pair.g1[i].payload).name);
    CHECK(chosen.size() == 3);
    for (const auto& u : chosen)
        for (const auto& v : chosen) CHECK(adj[u].count(v) == 0);
}

TEST_CASE("max cut gadget puts one block of three against the rest") {
    NamePool pool = fresh_names("maxcut", 2);
    PriorityFunction p = random_priority(5);
    GadgetPair pair = instantiate_pair("maxcut", pool, p);
    const auto& spec = problem("maxcut");
    auto bf = brute_force_opt(spec, pair.g2);
    CHECK(bf.value == 15);
    REQUIRE(bf.optimal.size() == 1);
    std::set<std::string> accepted;
    for (size_t i = 0; i < pair.g2.size(); ++i)
        if (bf.optimal[0][i].accept)
            accepted.insert(std::get<GraphVertex>(pair.g2[i].payload).name);
    CHECK(accepted.size() == 3);
    long cut = 0;
    auto adj = graph_of(pair.g2);
    for (const auto& [u, nbrs] : adj)
        for (const auto& v : nbrs)
            if (u < v && accepted.count(u) != accepted.count(v)) ++cut;
    CHECK(cut == 15);
    // the full graph on one side is infeasible, the empty side cuts nothing
    std::vector<Decision> all_accept(pair.g2.size(), accept_decision());
    CHECK(!evaluate_objective(spec, pair.g2, all_accept).has_value());
    std::vector<Decision> all_reject(pair.g2.size(), reject_decision());
    CHECK(evaluate_objective(spec, pair.g2, all_reject) == Rational(0));
}

TEST_CASE("clause satisfaction witnesses on the builtin shape") {
    const auto& spec = problem("max3sat");
    auto items = structure_items(builtin_structure("cnf8-a"));
    REQUIRE(items.size() == 3);  // x1, x2, x3 in name order
    auto value_of = [&](bool x1, bool x2, bool x3) {
        std::vector<Decision> d{x1 ? accept_decision() : reject_decision(),
                                x2 ? accept_decision() : reject_decision(),
                                x3 ? accept_decision() : reject_decision()};
        auto v = evaluate_objective(spec, items, d);
        REQUIRE(v.has_value());
        return *v;
    };
    CHECK(value_of(true, true, false) == 8);
    CHECK(value_of(false, true, false) == 7);
    auto bf = brute_force_opt(spec, items);
    CHECK(bf.value == 8);
    CHECK(bf.optimal.size() > 1);
    // the first variable is true in every satisfying assignment
    for (const auto& vec : bf.optimal) CHECK(vec[0] == accept_decision());
}

TEST_CASE("job scheduling optima are acyclic sets of six") {
    NamePool pool = fresh_names("jobsched", 3);
    PriorityFunction p = random_priority(13);
    GadgetPair pair = instantiate_pair("jobsched", pool, p);
    const auto& spec = problem("jobsched");
    auto bf = brute_force_opt(spec, pair.g1);
    CHECK(bf.value == 6);
    for (const auto& vec : bf.optimal) {
        std::map<std::string, std::set<std::string>> arcs;
        long taken = 0;
        for (size_t i = 0; i < pair.g1.size(); ++i) {
            if (!vec[i].accept) continue;
            ++taken;
            const auto& job = std::get<Job>(pair.g1[i].payload);
            arcs[job.name] = {job.after.begin(), job.after.end()};
        }
        CHECK(taken == 6);
        CHECK(acyclic(arcs));
    }
}

TEST_CASE("regular cover gadget has a unique five vertex cover") {
    NamePool pool = fresh_names("vc-regular", 1);
    PriorityFunction p = random_priority(3);
    GadgetPair pair = instantiate_pair("vc-regular", pool, p);
    const auto& spec = problem("vc");
    auto bf = brute_force_opt(spec, pair.g1);
    CHECK(bf.value == 5);
    REQUIRE(bf.optimal.size() == 1);
    std::set<std::string> cover;
    for (size_t i = 0; i < pair.g1.size(); ++i)
        if (bf.optimal[0][i].accept)
            cover.insert(std::get<GraphVertex>(pair.g1[i].payload).name);
    CHECK(cover.size() == 5);
    auto adj = graph_of(pair.g1);
    for (const auto& [u, nbrs] : adj)
        for (const auto& v : nbrs) CHECK((cover.count(u) || cover.count(v)));
}

TEST_CASE("matching gadgets distinguish by partner rather than by acceptance") {
    NamePool pool = fresh_names("bipartite", 4);
    PriorityFunction p = random_priority(21);
    GadgetPair pair = instantiate_pair("bipartite", pool, p);
    REQUIRE(pair.d1.size() == 1);
    REQUIRE(pair.d2.size() == 1);
    CHECK(pair.d1[0].accept);
    CHECK(pair.d2[0].accept);
    CHECK(pair.d1[0].partner != pair.d2[0].partner);
    auto bf = brute_force_opt(problem("matching"), pair.g1);
    CHECK(bf.value == 3);
}

TEST_CASE("triangle membership gadgets label every vertex") {
    NamePool pool = fresh_names("triangle", 6);
    PriorityFunction p = random_priority(9);
    GadgetPair pair = instantiate_pair("triangle", pool, p);
    const auto& spec = problem("triangle");
    auto bf1 = brute_force_opt(spec, pair.g1);
    CHECK(bf1.value == 3);  // all three lie on the triangle
    REQUIRE(bf1.optimal.size() == 1);
    for (const auto& d : bf1.optimal[0]) CHECK(d.accept);
    auto bf2 = brute_force_opt(spec, pair.g2);
    CHECK(bf2.value == 4);  // the four cycle has no triangle
    REQUIRE(bf2.optimal.size() == 1);
    for (const auto& d : bf2.optimal[0]) CHECK(!d.accept);
}

TEST_CASE("objectives add over identity disjoint unions") {
    struct Case {
        const char* family;
        long doubled;
    };
    for (const auto& c : {Case{"is", 6}, Case{"bipartite", 6}, Case{"triangle", 6}}) {
        PriorityFunction p = random_priority(31);
        GadgetPair a = instantiate_pair(c.family, fresh_names(c.family, 10), p);
        GadgetPair b = instantiate_pair(c.family, fresh_names(c.family, 11), p);
        for (const auto& item : a.g1) CHECK(find_item(b.g1, item) == nullptr);
        std::vector<Item> joint = a.g1;
        joint.insert(joint.end(), b.g1.begin(), b.g1.end());
        const auto& spec = problem(catalog_entry(c.family).problem);
        auto bf = brute_force_opt(spec, joint);
        CAPTURE(c.family);
        CHECK(bf.value == c.doubled);
    }
}

TEST_CASE("empty instances evaluate to zero") {
    for (const char* name : {"is", "maxcut", "vc", "matching", "max3sat", "jobsched", "triangle"}) {
        auto bf = brute_force_opt(problem(name), {});
        CAPTURE(name);
        CHECK(bf.value == 0);
    }
}

TEST_CASE("tampered pairs fail the named conditions") {
    NamePool pool = fresh_names("is", 8);
    PriorityFunction p = random_priority(55);
    GadgetPair pair = instantiate_pair("is", pool, p);
    REQUIRE_NOTHROW(verify_gadget_pair(pair, p));

    {
        GadgetPair bad = pair;
        std::swap(bad.m1, bad.m2);
        try {
            verify_gadget_pair(bad, p);
            FAIL("expected a condition violation");
        } catch (const GadgetConditionError& e) {
            CHECK(e.condition() == "first item condition");
        }
    }
    {
        GadgetPair bad = pair;
        bad.d2 = bad.d1;
        try {
            verify_gadget_pair(bad, p);
            FAIL("expected a condition violation");
        } catch (const GadgetConditionError& e) {
            CHECK(e.condition() == "distinguishing decision condition");
        }
    }
    {
        GadgetPair bad = pair;
        bad.opt1 += 1;
        try {
            verify_gadget_pair(bad, p);
            FAIL("expected a condition violation");
        } catch (const GadgetConditionError& e) {
            CHECK(e.condition() == "gadget OPT and BAD condition");
        }
    }
    {
        GadgetPair bad = pair;
        Item extra = make_graph_vertex("padding", {});
        bad.g1.push_back(extra);
        PriorityFunction low;
        low.key = [p, extra](const Item& item) {
            if (item == extra) return PriorityKey{{Rational(-1)}, "padding"};
            PriorityKey k = p.key(item);
            k.nums.insert(k.nums.begin(), Rational(0));
            return k;
        };
        try {
            verify_gadget_pair(bad, low);
            FAIL("expected a condition violation");
        } catch (const GadgetConditionError& e) {
            CHECK(e.condition() == "size condition");
        }
    }
}

TEST_CASE("catalog lookups reject unknown names") {
    CHECK_THROWS_AS(catalog_entry("no-such-family"), CatalogError);
    CHECK_THROWS_AS(builtin_structure_pair("is", "2"), CatalogError);
    CHECK_THROWS_AS(fresh_names("no-such-family", 0), CatalogError);
}
