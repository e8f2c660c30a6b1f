#pragma once

#include <map>
#include <string>
#include <vector>

#include "pal/catalog.hpp"
#include "pal/model.hpp"
#include "pal/rational.hpp"

namespace pal {

// Instantiates one gadget pair per distinct value representative min(x, 1-x)
// of a pair matching input, numbering fresh-name spaces in first-occurrence
// order, and exposes the induced priority over values:
//
//   value_priority(x) = P(m1 of x's pair)       for x <= 1/2
//   value_priority(x) = P(m2 of (1-x)'s pair)   for x >  1/2
//
// where P is the item priority the factory was built with.  m1 outranks every
// other item of the pair, so value_priority(x) > value_priority(1-x) always.
class GadgetFactory {
public:
    GadgetFactory(std::string family, PriorityFunction priority,
                  const std::vector<Rational>& values);

    const GadgetPair& pair_for(const Rational& value) const;
    PriorityKey value_priority(const Rational& value) const;
    const CatalogEntry& entry() const { return entry_; }
    const PriorityFunction& item_priority() const { return priority_; }

private:
    std::string family_;
    PriorityFunction priority_;
    CatalogEntry entry_;
    std::map<Rational, GadgetPair> pairs_;  // keyed by representative
};

// One row per input value below 1/2, in arrival order.  `gadget` tells which
// member of the pair the run committed to: 1 when the complement arrived,
// 2 when it did not.  `wrong` compares the algorithm's decision on the pair's
// top item against the committed gadget's optimal set; `pm_mistake` compares
// the projected accept/reject answer against the complement's presence.  The
// two agree except on non-binary alphabets, where `wrong` also counts
// decisions that pick the gadget's objective but not the optimal way.
struct ReductionRow {
    Rational value;
    int gadget = 0;
    Decision decision;
    bool wrong = false;
    bool pm_mistake = false;
};

struct ReductionReport {
    std::string family;
    size_t n = 0;                   // pair matching input length
    std::vector<ReductionRow> rows;
    long wrong_count = 0;
    long pm_mistake_count = 0;

    // Every item shown to the algorithm, in order, with its priority key.
    std::vector<Item> delivered;
    std::vector<PriorityKey> delivered_keys;

    // The simulated pair matching run: (value, accept) per input in arrival
    // order, and the number of answers that disagree with complement presence.
    std::vector<std::pair<Rational, bool>> answers;
    long answer_mistakes = 0;

    size_t input_size = 0;          // == delivered.size()
    long max_gadget_size = 0;
    size_t bits_read = 0;
};

// Runs the gadget reduction: sorts the pair matching input by the induced
// value priority, replaces each value below 1/2 by a fresh copy of one gadget
// of its pair, and forwards the items to `alg` in strictly decreasing
// priority order.  Values of 1/2 are answered reject and contribute no items.
// Throws Error if the delivery order certificate is ever violated.
ReductionReport run_reduction(FixedPriorityAlgorithm& alg, const std::string& family,
                              const std::vector<Rational>& values, AdviceTape tape);

// Same, against a factory built over `alg`'s own priority.
ReductionReport run_reduction(FixedPriorityAlgorithm& alg, const GadgetFactory& factory,
                              const std::vector<Rational>& values, AdviceTape tape);

// The triangle finding specialization of the same template.
ReductionReport run_triangle_reduction(FixedPriorityAlgorithm& alg,
                                       const std::vector<Rational>& values, AdviceTape tape);

// value,gadget,decision,wrong,cumulative_mistakes per row.
std::string report_csv(const ReductionReport& report);

// Line-oriented dump: a header, the rows, and the delivered stream.
std::string report_records(const ReductionReport& report);

}  // namespace pal
