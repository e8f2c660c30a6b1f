#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pal/model.hpp"
#include "pal/problems.hpp"
#include "pal/structures.hpp"

namespace pal {

// Declared constants of one gadget family. Every number here is checked
// against exhaustive search by verify_gadget_pair and the tests.
struct CatalogEntry {
    std::string family;
    std::string problem;
    std::vector<std::string> variants;  // shape-class dispatch keys; {""} when fixed
    long opt1 = 0;
    long opt2 = 0;
    long bad1 = 0;
    long bad2 = 0;
    long size = 0;               // maximum items per gadget instance
    bool isomorphic_items = true;  // universe is a single shape class
};

const CatalogEntry& catalog_entry(const std::string& family);
std::vector<std::string> catalog_families();

// The two structures behind a family, with the role element each one
// assigns to the shared first item: u is accepted by every optimum of s1,
// v is rejected by every optimum of s2.
struct StructurePair {
    TopologicalStructure s1, s2;
    std::string u, v;
};

StructurePair builtin_structure_pair(const std::string& family, const std::string& variant = "");

// Names for one instantiation. `secondary` holds clause names or
// right-side vertex names when the kind has a second name space.
struct NamePool {
    std::vector<std::string> primary;
    std::vector<std::string> secondary;
};

// Pool under namespace `token`; tokens keep distinct instantiations
// identity-disjoint.
NamePool fresh_names(const std::string& family, long token);

// Every item the first item could be: all payloads over the pool whose
// shape matches the family's class (or classes, under dispatch).
std::vector<Item> candidate_universe(const std::string& family, const NamePool& pool);

struct GadgetPair {
    std::string family;
    std::string variant;
    std::string problem;
    std::vector<Item> g1, g2;
    Item m1;                       // shared highest-priority item
    Item m2;                       // highest-priority item of (g1 ∪ g2) \ {m1}
    std::vector<Decision> d1, d2;  // optimal first-decision sets for m1
    long opt1 = 0, opt2 = 0, bad1 = 0, bad2 = 0;
    long size = 0;
};

// Selects the universe's P-maximum as the first item, dispatches on its
// shape class where the family requires it, extends canonical name
// bijections from the roles, and fills in the certified constants.
GadgetPair instantiate_pair(const std::string& family, const NamePool& pool,
                            const PriorityFunction& p);

std::optional<Rational> evaluate_objective(const ProblemSpec& spec,
                                           const std::vector<Item>& instance,
                                           const std::vector<Decision>& decisions);

struct BruteForceResult {
    Rational value;
    std::vector<std::vector<Decision>> optimal;  // all optimal decision vectors
};

// Exhaustive search over the decision space (capped at 2^24 vectors),
// keeping feasible vectors only.
BruteForceResult brute_force_opt(const ProblemSpec& spec, const std::vector<Item>& instance);

// Best attainable value once the decision for `first` is confined to the
// `wrong` set.
Rational brute_force_bad(const ProblemSpec& spec, const std::vector<Item>& instance,
                         const Item& first, const std::vector<Decision>& wrong);

struct GadgetCertificate {
    long opt1 = 0, bad1 = 0, opt2 = 0, bad2 = 0;
    std::vector<Decision> d1, d2;
    bool unique1 = false, unique2 = false;  // single optimal decision vector
    bool isomorphic_items = false;
};

// Recomputes every pair condition by exhaustive search and compares with
// the pair's stored data. Throws GadgetConditionError naming the first
// violated condition.
GadgetCertificate verify_gadget_pair(const GadgetPair& pair, const PriorityFunction& p);

}  // namespace pal
