#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pal/advice.hpp"
#include "pal/errors.hpp"
#include "pal/item.hpp"
#include "pal/priority.hpp"

namespace pal {

// One irrevocable decision. `accept` is the binary projection shared by
// every problem; `partner` is set only for matching decisions and names
// the chosen right-side vertex.
struct Decision {
    bool accept = false;
    std::string partner;

    bool operator==(const Decision&) const = default;
};

inline Decision accept_decision() { return Decision{true, {}}; }
inline Decision reject_decision() { return Decision{false, {}}; }
inline Decision match_decision(std::string partner) { return Decision{true, std::move(partner)}; }

std::string format_decision(const Decision& d);

// An algorithm in the fixed priority model with advice: it commits to a
// priority function up front, then receives the instance in strictly
// decreasing key order and decides each item irrevocably. All state lives
// in the object; begin_run() resets it.
class FixedPriorityAlgorithm {
public:
    virtual ~FixedPriorityAlgorithm() = default;
    virtual PriorityKey priority(const Item& item) const = 0;
    virtual void begin_run() {}
    virtual Decision decide(const Item& item, AdviceTape& tape) = 0;
    // Explicit end-of-input signal; no decision may be produced here.
    virtual void end_of_input() {}
};

struct RunResult {
    std::vector<std::pair<Item, Decision>> decisions;  // in arrival order
    size_t bits_read = 0;
    std::optional<Rational> objective;  // empty when no objective supplied or infeasible
};

using ObjectiveFn = std::function<std::optional<Rational>(
    const std::vector<std::pair<Item, Decision>>&)>;
using ConsistencyFn = std::function<void(const std::vector<Item>&)>;

// Orders the instance by the algorithm's priority, feeds it item by item,
// and evaluates the objective on the decision sequence. `check` (if given)
// validates the instance first and throws InvalidInstanceError.
RunResult simulate(FixedPriorityAlgorithm& alg, const std::vector<Item>& instance,
                   AdviceTape tape, const ObjectiveFn& objective = nullptr,
                   const ConsistencyFn& check = nullptr);

using AlgorithmFactory =
    std::function<std::unique_ptr<FixedPriorityAlgorithm>(const std::vector<uint8_t>& tape)>;
using LossFn = std::function<long(const RunResult&)>;

struct AdviceSearchResult {
    std::vector<uint8_t> tape;
    long loss = 0;
};

// Omniscient advice oracle, realized as exhaustive search over all 2^bits
// tapes. Returns the tape with minimal loss; ties go to the
// lexicographically smallest tape. `bits` beyond the configured cap
// (default 20, override via PAL_SEARCH_CAP) raises SearchBudgetError.
AdviceSearchResult best_advice_search(const AlgorithmFactory& make_alg,
                                      const std::vector<Item>& instance, int bits,
                                      const ObjectiveFn& objective, const LossFn& loss);

// Cap on exhaustive advice search, in bits.
int advice_search_cap();

}  // namespace pal
