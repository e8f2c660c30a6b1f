#include "pal/model.hpp"

#include <cstdlib>

namespace pal {

std::string format_decision(const Decision& d) {
    if (!d.accept) return "reject";
    if (d.partner.empty()) return "accept";
    return "match:" + d.partner;
}

RunResult simulate(FixedPriorityAlgorithm& alg, const std::vector<Item>& instance,
                   AdviceTape tape, const ObjectiveFn& objective, const ConsistencyFn& check) {
    if (check) check(instance);
    std::vector<Item> ordered = sort_by_priority(instance, PriorityFunction{
        [&alg](const Item& item) { return alg.priority(item); }});
    RunResult result;
    alg.begin_run();
    for (const Item& item : ordered) {
        Decision d = alg.decide(item, tape);
        result.decisions.emplace_back(item, d);
    }
    alg.end_of_input();
    result.bits_read = tape.bits_read();
    if (objective) result.objective = objective(result.decisions);
    return result;
}

int advice_search_cap() {
    if (const char* env = std::getenv("PAL_SEARCH_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 0 && v <= 62) return (int)v;
        throw DomainError("PAL_SEARCH_CAP must be an integer in [0, 62]");
    }
    return 20;
}

AdviceSearchResult best_advice_search(const AlgorithmFactory& make_alg,
                                      const std::vector<Item>& instance, int bits,
                                      const ObjectiveFn& objective, const LossFn& loss) {
    if (bits < 0) throw DomainError("negative advice bit count");
    int cap = advice_search_cap();
    if (bits > cap) {
        throw SearchBudgetError("advice search over " + std::to_string(bits) +
                                " bits exceeds cap " + std::to_string(cap));
    }
    AdviceSearchResult best;
    bool have = false;
    for (unsigned long t = 0; t < (1ul << bits); ++t) {
        std::vector<uint8_t> tape(bits);
        for (int i = 0; i < bits; ++i) {
            tape[i] = (t >> (bits - 1 - i)) & 1;  // lexicographic enumeration
        }
        auto alg = make_alg(tape);
        RunResult run = simulate(*alg, instance, AdviceTape(tape), objective);
        long l = loss(run);
        if (!have || l < best.loss) {
            best = AdviceSearchResult{tape, l};
            have = true;
        }
    }
    return best;
}

}  // namespace pal
