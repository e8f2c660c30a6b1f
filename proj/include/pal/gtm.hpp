#pragma once

#include <memory>
#include <vector>

#include "pal/model.hpp"
#include "pal/string_guessing.hpp"

namespace pal {

// Greater-than-mean game instance: a multiset of values. The answer for a
// value is 1 iff it exceeds the mean of the whole instance.
Rational gtm_mean(const std::vector<Rational>& values);

// Items for a value multiset; repeated values get consecutive copy
// indices so they arrive back to back under any value priority.
std::vector<Item> gtm_items(const std::vector<Rational>& values);

// Counts correct answers (accept = "greater than mean").
ObjectiveFn gtm_correct_answers(const std::vector<Rational>& values);
ObjectiveFn gtm_mistakes(const std::vector<Rational>& values);

// Priority algorithm for the game whose key depends only on the value.
// The duplicate index is appended as a tiebreak automatically.
class GtmPriorityAlgorithm : public FixedPriorityAlgorithm {
public:
    virtual PriorityKey value_priority(const Rational& value) const = 0;
    virtual int answer(const Rational& value, AdviceTape& tape) = 0;

    PriorityKey priority(const Item& item) const final;
    Decision decide(const Item& item, AdviceTape& tape) final;
};

// Zero-mistake algorithm for instances of known size n: descending value
// order, advice = earliest 1-based sorted position whose value is at most
// the mean, fixed-width big-endian. Reads exactly ceil_log2(n) bits.
std::unique_ptr<GtmPriorityAlgorithm> gtm_optimal_priority(long n);

// Advice tape for gtm_optimal_priority on this instance.
std::vector<uint8_t> gtm_optimal_advice(const std::vector<Rational>& values);

// Scripted no-advice algorithms for adversary tests.
enum class GtmOrder { ValueDescending, ValueAscending, NearOneFirst, FarFromOneFirst };
enum class GtmRule { AlwaysOne, AlwaysZero, Alternate, OneIffAtLeastOne, OneForFirstHalf };
std::unique_ptr<GtmPriorityAlgorithm> scripted_gtm(GtmOrder order, GtmRule rule);

struct GtmAdversaryResult {
    std::vector<Rational> instance;
    int case_id = 0;            // 1: a pair arrives high-before-low; 2: order 0, 1, 2
    Rational mistake_floor;     // (n-1)/2 or (n-2)/2
};

// No-advice lower-bound adversary over values {0, 1, 2}. Inspects the
// algorithm's value priority, probes its answers, and emits an instance on
// which it makes at least mistake_floor mistakes. Requires n >= 2.
GtmAdversaryResult gtm_adversary(GtmPriorityAlgorithm& alg, long n);

// Online (arrival order = presentation order) algorithm for the game.
class OnlineGtmAlgorithm {
public:
    virtual ~OnlineGtmAlgorithm() = default;
    virtual void begin_run(size_t n) { (void)n; }
    virtual int answer(const Rational& value, AdviceTape& tape) = 0;
};

std::unique_ptr<OnlineGtmAlgorithm> scripted_online_gtm(GtmRule rule);

struct GtmReductionTrace {
    std::vector<Rational> queries;       // y_1 .. y_n, then the balancing value
    std::vector<Rational> lower, upper;  // interval before each step, then final
    Rational mean;                       // exact mean of `queries`
};

// Guessing-game strategy that answers via an online greater-than-mean
// algorithm: the i-th query is the midpoint of an interval that shrinks
// toward the revealed bits, and a final balancing value pins the mean
// between the two answer classes. finish() needs the full bit string.
class BisectionGuesser : public Guesser {
public:
    explicit BisectionGuesser(OnlineGtmAlgorithm& alg);
    void begin_run(size_t length) override;
    int guess(const Bits& prefix, AdviceTape& tape) override;
    GtmReductionTrace finish(const Bits& full);

private:
    void sync(const Bits& prefix);

    OnlineGtmAlgorithm& alg_;
    size_t consumed_ = 0;
    Rational low_, high_;
    std::vector<Rational> queries_, lows_, highs_;
};

std::unique_ptr<BisectionGuesser> reduce_sgkh_to_gtm(OnlineGtmAlgorithm& alg);

}  // namespace pal
