#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "pal/model.hpp"
#include "pal/string_guessing.hpp"

namespace pal {

// Pair matching instance: distinct rationals in [0, 1]. The correct answer
// for x is accept iff 1-x is also present; 1/2 is always rejected.
void pm_validate(const std::vector<Rational>& values);

// Number of complement pairs {x, 1-x} in the instance.
long pairs_count(const std::vector<Rational>& values);

std::vector<Item> pm_items(const std::vector<Rational>& values);
ObjectiveFn pm_correct_answers(const std::vector<Rational>& values);

// Online pair matching algorithm: sees values in presentation order.
class OnlinePmAlgorithm {
public:
    virtual ~OnlinePmAlgorithm() = default;
    virtual void begin_run() {}
    virtual bool answer(const Rational& value) = 0;  // true = accept
    // Probability of rejecting `value` in the current state, if the
    // algorithm exposes its decision distribution.
    virtual std::optional<Rational> reject_probability(const Rational& value) {
        (void)value;
        return std::nullopt;
    }
};

// Accepts iff the complement was seen earlier. Correct count is exactly
// n - pairs_count.
std::unique_ptr<OnlinePmAlgorithm> pm_deterministic();

// Accepts when the complement was seen earlier; otherwise rejects with
// probability alpha. Expected correct count: alpha*n - (3 alpha - 2)*pairs.
std::unique_ptr<OnlinePmAlgorithm> pm_randomized(const Rational& alpha, uint64_t seed);

// Rejects with constant probability p, ignoring history.
std::unique_ptr<OnlinePmAlgorithm> pm_constant_reject(const Rational& p, uint64_t seed);

// Named deterministic baselines (at least ten) for adversary tests.
std::vector<std::pair<std::string, std::function<std::unique_ptr<OnlinePmAlgorithm>()>>>
pm_deterministic_registry();

struct PmPresentation {
    std::vector<Rational> values;   // presentation order
    std::vector<int> assumed;       // 1 = complement feed, scored as correct by convention
    Rational mistake_floor = 0;     // deterministic adversary guarantee
    Rational expected_correct = 0;  // randomized adversary, under the convention
};

// Drives a deterministic algorithm and emits an instance with at least
// floor(n/2) mistakes: a rejected fresh value gets its complement (the
// rejection was wrong), an accepted one stays unpaired.
PmPresentation pm_adversary_det(OnlinePmAlgorithm& alg, long n);

// White-box adversary against randomized algorithms: supplies the
// complement when the current reject probability exceeds 2/3, withholds it
// otherwise. Expected correct fraction at most 2/3 under the convention
// that complement feeds count as correct. Throws WhiteBoxRequiredError if
// the algorithm hides its distribution.
PmPresentation pm_adversary_rand(OnlinePmAlgorithm& alg, long n);

// Replays a presentation and counts correct answers against the ground
// truth of the final instance. With `use_convention`, positions flagged
// `assumed` count as correct without consulting the algorithm's answer.
long pm_replay_correct(OnlinePmAlgorithm& alg, const PmPresentation& presentation,
                       bool use_convention);

// Priority-model pair matching algorithm: key depends only on the value.
class PmPriorityAlgorithm : public FixedPriorityAlgorithm {
public:
    virtual PriorityKey value_priority(const Rational& value) const = 0;
    virtual bool answer(const Rational& value, AdviceTape& tape) = 0;

    PriorityKey priority(const Item& item) const final;
    Decision decide(const Item& item, AdviceTape& tape) final;
};

enum class PmOrder { ValueDescending, ValueAscending, Hashed };

// Wraps an online rule as a priority algorithm with the given value order
// (Hashed uses `seed`).
std::unique_ptr<PmPriorityAlgorithm> scripted_pm_priority(
    PmOrder order, uint64_t seed, std::function<std::unique_ptr<OnlinePmAlgorithm>()> rule);

struct PmReductionTrace {
    std::vector<Rational> presented;  // everything fed to the algorithm, in order
    std::vector<int> query_position;  // index into presented of the i-th scored query
    std::vector<bool> predictions;    // guesser outputs
};

// Guessing-game strategy that queries an online pair matching algorithm on
// fresh values y_i = (2i-1)/(8n) and feeds 1-y_i after every revealed 1.
class OnlinePmReductionGuesser : public Guesser {
public:
    explicit OnlinePmReductionGuesser(OnlinePmAlgorithm& alg);
    void begin_run(size_t length) override;
    int guess(const Bits& prefix, AdviceTape& tape) override;
    PmReductionTrace finish(const Bits& full);

private:
    void sync(const Bits& prefix);

    OnlinePmAlgorithm& alg_;
    size_t n_ = 0;
    size_t consumed_ = 0;
    PmReductionTrace trace_;
};

std::unique_ptr<OnlinePmReductionGuesser> reduce_sgkh_to_pm_online(OnlinePmAlgorithm& alg);

// Same reduction against a priority-model algorithm: the pool {y_i, 1-y_i}
// is kept in the algorithm's own key order; undelivered complements of
// revealed 1s wait in a max-heap and are flushed exactly when their key
// passes the current frontier, so the delivered stream is a strictly
// decreasing subsequence of the sorted pool.
class PriorityPmReductionGuesser : public Guesser {
public:
    explicit PriorityPmReductionGuesser(PmPriorityAlgorithm& alg);
    void begin_run(size_t length) override;
    int guess(const Bits& prefix, AdviceTape& tape) override;
    PmReductionTrace finish(const Bits& full);

private:
    void sync(const Bits& prefix);
    void feed(const Rational& value, AdviceTape& tape, bool query);
    void drain_above(const Rational* frontier, AdviceTape& tape);

    PmPriorityAlgorithm& alg_;
    std::vector<Rational> pool_;               // sorted by key, descending; pending
    std::vector<std::optional<Rational>> complement_of_query_;
    std::vector<Rational> heap_;               // complements awaiting delivery
    size_t consumed_ = 0;
    PmReductionTrace trace_;
    AdviceTape* last_tape_ = nullptr;
};

std::unique_ptr<PriorityPmReductionGuesser> reduce_sgkh_to_pm_priority(PmPriorityAlgorithm& alg);

}  // namespace pal
