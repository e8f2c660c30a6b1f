#include "pal/gtm.hpp"

#include <algorithm>
#include <map>

namespace pal {

Rational gtm_mean(const std::vector<Rational>& values) {
    if (values.empty()) throw DomainError("mean of empty instance");
    Rational sum = 0;
    for (const auto& v : values) sum += v;
    return sum / (long)values.size();
}

std::vector<Item> gtm_items(const std::vector<Rational>& values) {
    std::map<Rational, int> copies;
    std::vector<Item> items;
    items.reserve(values.size());
    for (const auto& v : values) {
        items.push_back(make_value(v, copies[v]++));
    }
    return items;
}

ObjectiveFn gtm_correct_answers(const std::vector<Rational>& values) {
    Rational mean = gtm_mean(values);
    return [mean](const std::vector<std::pair<Item, Decision>>& decisions) {
        long correct = 0;
        for (const auto& [item, d] : decisions) {
            const auto& v = std::get<ValueItem>(item.payload);
            if (d.accept == (v.value > mean)) ++correct;
        }
        return std::optional<Rational>(Rational(correct));
    };
}

ObjectiveFn gtm_mistakes(const std::vector<Rational>& values) {
    auto correct = gtm_correct_answers(values);
    return [correct](const std::vector<std::pair<Item, Decision>>& decisions) {
        return std::optional<Rational>(Rational((long)decisions.size()) - *correct(decisions));
    };
}

PriorityKey GtmPriorityAlgorithm::priority(const Item& item) const {
    const auto& v = std::get<ValueItem>(item.payload);
    PriorityKey key = value_priority(v.value);
    key.nums.push_back(Rational(-v.copy));  // equal values arrive consecutively
    return key;
}

Decision GtmPriorityAlgorithm::decide(const Item& item, AdviceTape& tape) {
    const auto& v = std::get<ValueItem>(item.payload);
    return answer(v.value, tape) ? accept_decision() : reject_decision();
}

namespace {

class OptimalGtm : public GtmPriorityAlgorithm {
public:
    explicit OptimalGtm(long n) : n_(n), width_(ceil_log2(std::max(n, 1l))) {}

    PriorityKey value_priority(const Rational& value) const override {
        return PriorityKey{{value}, {}};  // descending values
    }

    void begin_run() override {
        position_ = 0;
        cut_.reset();
    }

    int answer(const Rational&, AdviceTape& tape) override {
        if (!cut_) cut_ = tape.read_uint(width_) + 1;  // 1-based sorted position
        ++position_;
        return position_ < *cut_ ? 1 : 0;
    }

private:
    long n_;
    int width_;
    long position_ = 0;
    std::optional<long> cut_;
};

}  // namespace

std::unique_ptr<GtmPriorityAlgorithm> gtm_optimal_priority(long n) {
    if (n < 1) throw DomainError("instance size must be positive");
    return std::make_unique<OptimalGtm>(n);
}

std::vector<uint8_t> gtm_optimal_advice(const std::vector<Rational>& values) {
    if (values.empty()) throw DomainError("advice for empty instance");
    std::vector<Rational> sorted = values;
    std::sort(sorted.begin(), sorted.end(), std::greater<Rational>());
    Rational mean = gtm_mean(values);
    long cut = (long)sorted.size();  // smallest value is never above the mean
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] <= mean) {
            cut = (long)i + 1;
            break;
        }
    }
    return encode_uint(cut - 1, ceil_log2((long)values.size()));
}

namespace {

class ScriptedGtm : public GtmPriorityAlgorithm {
public:
    ScriptedGtm(GtmOrder order, GtmRule rule) : order_(order), rule_(rule) {}

    PriorityKey value_priority(const Rational& value) const override {
        switch (order_) {
            case GtmOrder::ValueDescending: return PriorityKey{{value}, {}};
            case GtmOrder::ValueAscending: return PriorityKey{{-value}, {}};
            case GtmOrder::NearOneFirst: {
                Rational d = value - 1;
                if (d < 0) d = -d;
                return PriorityKey{{-d, value}, {}};
            }
            case GtmOrder::FarFromOneFirst: {
                Rational d = value - 1;
                if (d < 0) d = -d;
                return PriorityKey{{d, value}, {}};
            }
        }
        throw Error("unknown order");
    }

    void begin_run() override { position_ = 0; }

    int answer(const Rational& value, AdviceTape&) override {
        long pos = position_++;
        switch (rule_) {
            case GtmRule::AlwaysOne: return 1;
            case GtmRule::AlwaysZero: return 0;
            case GtmRule::Alternate: return pos % 2 == 0 ? 1 : 0;
            case GtmRule::OneIffAtLeastOne: return value >= 1 ? 1 : 0;
            case GtmRule::OneForFirstHalf: return pos < 5 ? 1 : 0;
        }
        throw Error("unknown rule");
    }

private:
    GtmOrder order_;
    GtmRule rule_;
    long position_ = 0;
};

// Feeds `values` (in the given order) to the algorithm with no advice and
// returns its answers.
std::vector<int> probe_answers(GtmPriorityAlgorithm& alg, const std::vector<Rational>& values) {
    alg.begin_run();
    AdviceTape tape;
    std::vector<int> answers;
    answers.reserve(values.size());
    for (const auto& v : values) {
        answers.push_back(alg.answer(v, tape));
    }
    return answers;
}

}  // namespace

std::unique_ptr<GtmPriorityAlgorithm> scripted_gtm(GtmOrder order, GtmRule rule) {
    return std::make_unique<ScriptedGtm>(order, rule);
}

GtmAdversaryResult gtm_adversary(GtmPriorityAlgorithm& alg, long n) {
    if (n < 2) throw DomainError("adversary needs n >= 2");
    PriorityKey key[3] = {alg.value_priority(0), alg.value_priority(1), alg.value_priority(2)};

    // An inversion: a numerically smaller value with lower priority than a
    // larger one, i.e. the larger value arrives first.
    static const std::pair<int, int> pairs[] = {{0, 1}, {0, 2}, {1, 2}};
    for (auto [small, large] : pairs) {
        if (key[large] > key[small]) {
            // Case 1: present `large` n-1 times, then side with the
            // majority answer: all-`large` makes the 1s wrong, appending
            // `small` makes the 0s wrong.
            std::vector<Rational> probe(n - 1, Rational(large));
            std::vector<int> answers = probe_answers(alg, probe);
            long ones = (long)std::count(answers.begin(), answers.end(), 1);
            std::vector<Rational> instance = probe;
            instance.push_back(2 * ones >= n - 1 ? Rational(large) : Rational(small));
            return GtmAdversaryResult{instance, 1, Rational(n - 1, 2)};
        }
    }

    // Case 2: priority order is 0, 1, 2. Lead with 0, probe n-2 ones, and
    // pick the last value so the majority answer on the ones is wrong.
    std::vector<Rational> probe;
    probe.push_back(0);
    for (long i = 0; i < n - 2; ++i) probe.push_back(1);
    std::vector<int> answers = probe_answers(alg, probe);
    long ones = (long)std::count(answers.begin() + 1, answers.end(), 1);
    std::vector<Rational> instance = probe;
    instance.push_back(2 * ones >= n - 2 ? Rational(2) : Rational(1));
    return GtmAdversaryResult{instance, 2, Rational(n - 2, 2)};
}

namespace {

class ScriptedOnlineGtm : public OnlineGtmAlgorithm {
public:
    explicit ScriptedOnlineGtm(GtmRule rule) : impl_(GtmOrder::ValueDescending, rule) {}
    void begin_run(size_t) override { impl_.begin_run(); }
    int answer(const Rational& value, AdviceTape& tape) override {
        return impl_.answer(value, tape);
    }

private:
    ScriptedGtm impl_;
};

}  // namespace

std::unique_ptr<OnlineGtmAlgorithm> scripted_online_gtm(GtmRule rule) {
    return std::make_unique<ScriptedOnlineGtm>(rule);
}

BisectionGuesser::BisectionGuesser(OnlineGtmAlgorithm& alg) : alg_(alg) {}

void BisectionGuesser::begin_run(size_t length) {
    alg_.begin_run(length);
    consumed_ = 0;
    low_ = 0;
    high_ = 1;
    queries_.clear();
    lows_.clear();
    highs_.clear();
}

void BisectionGuesser::sync(const Bits& prefix) {
    while (consumed_ < prefix.size()) {
        // revealed bit resolves the pending interval halving
        if (prefix[consumed_]) {
            high_ = queries_[consumed_];
        } else {
            low_ = queries_[consumed_];
        }
        ++consumed_;
    }
}

int BisectionGuesser::guess(const Bits& prefix, AdviceTape& tape) {
    sync(prefix);
    lows_.push_back(low_);
    highs_.push_back(high_);
    Rational query = (low_ + high_) / 2;
    queries_.push_back(query);
    return alg_.answer(query, tape);
}

GtmReductionTrace BisectionGuesser::finish(const Bits& full) {
    sync(full);
    if (consumed_ != queries_.size()) {
        throw Error("finish called before all positions were played");
    }
    lows_.push_back(low_);
    highs_.push_back(high_);
    GtmReductionTrace trace;
    trace.lower = lows_;
    trace.upper = highs_;
    trace.queries = queries_;
    // balancing value: forces the instance mean to the interval midpoint
    Rational sum = 0;
    for (const auto& q : queries_) sum += q;
    long n = (long)queries_.size();
    Rational balance = Rational(n + 1) / 2 * (low_ + high_) - sum;
    trace.queries.push_back(balance);
    trace.mean = (low_ + high_) / 2;
    return trace;
}

std::unique_ptr<BisectionGuesser> reduce_sgkh_to_gtm(OnlineGtmAlgorithm& alg) {
    return std::make_unique<BisectionGuesser>(alg);
}

}  // namespace pal
