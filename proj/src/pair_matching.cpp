#include "pal/pair_matching.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>

namespace pal {

namespace {

bool complement_present(const std::set<Rational>& values, const Rational& x) {
    return x != Rational(1, 2) && values.count(1 - x) > 0;
}

Rational pool_value(long i, long n) {
    return Rational(2 * i - 1, 8 * n);  // fresh, distinct, below 1/4
}

}  // namespace

void pm_validate(const std::vector<Rational>& values) {
    std::set<Rational> seen;
    for (const auto& v : values) {
        if (v < 0 || v > 1) {
            throw InvalidInstanceError("value outside [0, 1]: " + format_rational(v));
        }
        if (!seen.insert(v).second) {
            throw InvalidInstanceError("repeated value: " + format_rational(v));
        }
    }
}

long pairs_count(const std::vector<Rational>& values) {
    pm_validate(values);
    std::set<Rational> all(values.begin(), values.end());
    long pairs = 0;
    for (const auto& v : values) {
        if (v < Rational(1, 2) && all.count(1 - v)) ++pairs;
    }
    return pairs;
}

std::vector<Item> pm_items(const std::vector<Rational>& values) {
    std::vector<Item> items;
    items.reserve(values.size());
    for (const auto& v : values) items.push_back(make_value(v));
    return items;
}

ObjectiveFn pm_correct_answers(const std::vector<Rational>& values) {
    std::set<Rational> all(values.begin(), values.end());
    return [all](const std::vector<std::pair<Item, Decision>>& decisions) {
        long correct = 0;
        for (const auto& [item, d] : decisions) {
            const auto& v = std::get<ValueItem>(item.payload);
            if (d.accept == complement_present(all, v.value)) ++correct;
        }
        return std::optional<Rational>(Rational(correct));
    };
}

namespace {

class PmDeterministic : public OnlinePmAlgorithm {
public:
    void begin_run() override { seen_.clear(); }
    bool answer(const Rational& value) override {
        bool accept = complement_present(seen_, value);
        seen_.insert(value);
        return accept;
    }
    std::optional<Rational> reject_probability(const Rational& value) override {
        return complement_present(seen_, value) ? Rational(0) : Rational(1);
    }

private:
    std::set<Rational> seen_;
};

class PmRandomized : public OnlinePmAlgorithm {
public:
    PmRandomized(Rational alpha, uint64_t seed) : alpha_(std::move(alpha)), seed_(seed) {
        if (alpha_ < 0 || alpha_ > 1) throw DomainError("alpha outside [0, 1]");
    }
    void begin_run() override {
        seen_.clear();
        rng_.seed(seed_);
    }
    bool answer(const Rational& value) override {
        bool accept;
        if (complement_present(seen_, value)) {
            accept = true;
        } else {
            accept = !sample(alpha_);
        }
        seen_.insert(value);
        return accept;
    }
    std::optional<Rational> reject_probability(const Rational& value) override {
        return complement_present(seen_, value) ? Rational(0) : alpha_;
    }

private:
    bool sample(const Rational& p) {
        // true with probability p (up to 2^-64 quantization)
        Rational threshold = p * Rational(BigInt(1) << 64);
        return Rational(BigInt(rng_())) < threshold;
    }

    Rational alpha_;
    uint64_t seed_;
    std::mt19937_64 rng_;
    std::set<Rational> seen_;
};

class PmConstantReject : public OnlinePmAlgorithm {
public:
    PmConstantReject(Rational p, uint64_t seed) : p_(std::move(p)), seed_(seed) {
        if (p_ < 0 || p_ > 1) throw DomainError("p outside [0, 1]");
    }
    void begin_run() override { rng_.seed(seed_); }
    bool answer(const Rational&) override {
        Rational threshold = p_ * Rational(BigInt(1) << 64);
        return !(Rational(BigInt(rng_())) < threshold);
    }
    std::optional<Rational> reject_probability(const Rational&) override { return p_; }

private:
    Rational p_;
    uint64_t seed_;
    std::mt19937_64 rng_;
};

class ScriptedOnlinePm : public OnlinePmAlgorithm {
public:
    using Rule = std::function<bool(const Rational&, long position, const std::set<Rational>&)>;
    explicit ScriptedOnlinePm(Rule rule) : rule_(std::move(rule)) {}
    void begin_run() override {
        seen_.clear();
        position_ = 0;
    }
    bool answer(const Rational& value) override {
        bool accept = rule_(value, position_++, seen_);
        seen_.insert(value);
        return accept;
    }

private:
    Rule rule_;
    std::set<Rational> seen_;
    long position_ = 0;
};

std::unique_ptr<OnlinePmAlgorithm> scripted_pm(ScriptedOnlinePm::Rule rule) {
    return std::make_unique<ScriptedOnlinePm>(std::move(rule));
}

}  // namespace

std::unique_ptr<OnlinePmAlgorithm> pm_deterministic() {
    return std::make_unique<PmDeterministic>();
}

std::unique_ptr<OnlinePmAlgorithm> pm_randomized(const Rational& alpha, uint64_t seed) {
    return std::make_unique<PmRandomized>(alpha, seed);
}

std::unique_ptr<OnlinePmAlgorithm> pm_constant_reject(const Rational& p, uint64_t seed) {
    return std::make_unique<PmConstantReject>(p, seed);
}

std::vector<std::pair<std::string, std::function<std::unique_ptr<OnlinePmAlgorithm>()>>>
pm_deterministic_registry() {
    using Factory = std::function<std::unique_ptr<OnlinePmAlgorithm>()>;
    std::vector<std::pair<std::string, Factory>> registry;
    registry.emplace_back("always-accept", [] {
        return scripted_pm([](const Rational&, long, const auto&) { return true; });
    });
    registry.emplace_back("always-reject", [] {
        return scripted_pm([](const Rational&, long, const auto&) { return false; });
    });
    registry.emplace_back("complement-seen", [] { return pm_deterministic(); });
    registry.emplace_back("alternate", [] {
        return scripted_pm([](const Rational&, long pos, const auto&) { return pos % 2 == 0; });
    });
    registry.emplace_back("accept-below-half", [] {
        return scripted_pm([](const Rational& v, long, const auto&) { return v < Rational(1, 2); });
    });
    registry.emplace_back("accept-above-half", [] {
        return scripted_pm([](const Rational& v, long, const auto&) { return v > Rational(1, 2); });
    });
    registry.emplace_back("accept-first-ten", [] {
        return scripted_pm([](const Rational&, long pos, const auto&) { return pos < 10; });
    });
    registry.emplace_back("accept-every-third", [] {
        return scripted_pm([](const Rational&, long pos, const auto&) { return pos % 3 == 0; });
    });
    registry.emplace_back("accept-new-maximum", [] {
        return scripted_pm([](const Rational& v, long, const std::set<Rational>& seen) {
            return seen.empty() || v > *seen.rbegin();
        });
    });
    registry.emplace_back("accept-even-numerator", [] {
        return scripted_pm([](const Rational& v, long, const auto&) {
            return numerator(v) % 2 == 0;
        });
    });
    return registry;
}

PmPresentation pm_adversary_det(OnlinePmAlgorithm& alg, long n) {
    if (n < 1) throw DomainError("adversary needs n >= 1");
    alg.begin_run();
    PmPresentation out;
    out.mistake_floor = Rational(n / 2);
    long slots = n;
    long k = 1;
    while (slots > 0) {
        Rational x = pool_value(k++, n);
        bool accepted = alg.answer(x);
        out.values.push_back(x);
        out.assumed.push_back(0);
        if (!accepted && slots >= 2) {
            // the rejection was wrong once the complement exists
            alg.answer(1 - x);
            out.values.push_back(1 - x);
            out.assumed.push_back(1);
            slots -= 2;
        } else {
            slots -= 1;
        }
    }
    return out;
}

PmPresentation pm_adversary_rand(OnlinePmAlgorithm& alg, long n) {
    if (n < 1) throw DomainError("adversary needs n >= 1");
    alg.begin_run();
    PmPresentation out;
    long slots = n;
    long k = 1;
    Rational expected = 0;
    const Rational cutoff(2, 3);
    while (slots > 0) {
        Rational x = pool_value(k++, n);
        auto p = alg.reject_probability(x);
        if (!p) throw WhiteBoxRequiredError("algorithm does not expose its decision distribution");
        if (*p > cutoff && slots >= 2) {
            // mostly rejecting: make the rejection wrong
            alg.answer(x);
            alg.answer(1 - x);
            out.values.push_back(x);
            out.assumed.push_back(0);
            out.values.push_back(1 - x);
            out.assumed.push_back(1);
            expected += (1 - *p) + 1;
            slots -= 2;
        } else {
            // mostly accepting: keep the value unpaired
            alg.answer(x);
            out.values.push_back(x);
            out.assumed.push_back(0);
            expected += *p;
            slots -= 1;
        }
    }
    out.expected_correct = expected;
    return out;
}

long pm_replay_correct(OnlinePmAlgorithm& alg, const PmPresentation& presentation,
                       bool use_convention) {
    std::set<Rational> all(presentation.values.begin(), presentation.values.end());
    alg.begin_run();
    long correct = 0;
    for (size_t i = 0; i < presentation.values.size(); ++i) {
        const Rational& v = presentation.values[i];
        bool accepted = alg.answer(v);
        if (use_convention && presentation.assumed[i]) {
            ++correct;
        } else if (accepted == complement_present(all, v)) {
            ++correct;
        }
    }
    return correct;
}

PriorityKey PmPriorityAlgorithm::priority(const Item& item) const {
    const auto& v = std::get<ValueItem>(item.payload);
    PriorityKey key = value_priority(v.value);
    key.nums.push_back(Rational(-v.copy));
    return key;
}

Decision PmPriorityAlgorithm::decide(const Item& item, AdviceTape& tape) {
    const auto& v = std::get<ValueItem>(item.payload);
    return answer(v.value, tape) ? accept_decision() : reject_decision();
}

namespace {

class ScriptedPmPriority : public PmPriorityAlgorithm {
public:
    ScriptedPmPriority(PmOrder order, uint64_t seed,
                       std::function<std::unique_ptr<OnlinePmAlgorithm>()> rule)
        : order_(order), seed_(seed), make_rule_(std::move(rule)) {
        rule_ = make_rule_();
    }

    PriorityKey value_priority(const Rational& value) const override {
        switch (order_) {
            case PmOrder::ValueDescending: return PriorityKey{{value}, {}};
            case PmOrder::ValueAscending: return PriorityKey{{-value}, {}};
            case PmOrder::Hashed: {
                std::string c = format_rational(value);
                char buf[17];
                snprintf(buf, sizeof buf, "%016llx",
                         (unsigned long long)stable_hash(seed_, c));
                return PriorityKey{{}, std::string(buf) + "|" + c};
            }
        }
        throw Error("unknown order");
    }

    void begin_run() override {
        rule_ = make_rule_();
        rule_->begin_run();
    }

    bool answer(const Rational& value, AdviceTape&) override { return rule_->answer(value); }

private:
    PmOrder order_;
    uint64_t seed_;
    std::function<std::unique_ptr<OnlinePmAlgorithm>()> make_rule_;
    std::unique_ptr<OnlinePmAlgorithm> rule_;
};

}  // namespace

std::unique_ptr<PmPriorityAlgorithm> scripted_pm_priority(
    PmOrder order, uint64_t seed, std::function<std::unique_ptr<OnlinePmAlgorithm>()> rule) {
    return std::make_unique<ScriptedPmPriority>(order, seed, std::move(rule));
}

OnlinePmReductionGuesser::OnlinePmReductionGuesser(OnlinePmAlgorithm& alg) : alg_(alg) {}

void OnlinePmReductionGuesser::begin_run(size_t length) {
    alg_.begin_run();
    n_ = length;
    consumed_ = 0;
    trace_ = PmReductionTrace{};
}

void OnlinePmReductionGuesser::sync(const Bits& prefix) {
    while (consumed_ < prefix.size()) {
        if (prefix[consumed_]) {
            // revealed 1: the queried value was part of a pair after all
            Rational complement = 1 - pool_value((long)consumed_ + 1, (long)n_);
            alg_.answer(complement);
            trace_.presented.push_back(complement);
        }
        ++consumed_;
    }
}

int OnlinePmReductionGuesser::guess(const Bits& prefix, AdviceTape&) {
    sync(prefix);
    Rational query = pool_value((long)trace_.query_position.size() + 1, (long)n_);
    bool accepted = alg_.answer(query);
    trace_.query_position.push_back((int)trace_.presented.size());
    trace_.presented.push_back(query);
    trace_.predictions.push_back(accepted);
    return accepted ? 1 : 0;
}

PmReductionTrace OnlinePmReductionGuesser::finish(const Bits& full) {
    sync(full);
    return trace_;
}

std::unique_ptr<OnlinePmReductionGuesser> reduce_sgkh_to_pm_online(OnlinePmAlgorithm& alg) {
    return std::make_unique<OnlinePmReductionGuesser>(alg);
}

PriorityPmReductionGuesser::PriorityPmReductionGuesser(PmPriorityAlgorithm& alg) : alg_(alg) {}

void PriorityPmReductionGuesser::begin_run(size_t length) {
    alg_.begin_run();
    consumed_ = 0;
    trace_ = PmReductionTrace{};
    complement_of_query_.clear();
    heap_.clear();
    last_tape_ = nullptr;
    pool_.clear();
    for (long i = 1; i <= (long)length; ++i) {
        pool_.push_back(pool_value(i, (long)length));
        pool_.push_back(1 - pool_value(i, (long)length));
    }
    std::sort(pool_.begin(), pool_.end(), [this](const Rational& a, const Rational& b) {
        return alg_.value_priority(b) < alg_.value_priority(a);
    });
}

void PriorityPmReductionGuesser::feed(const Rational& value, AdviceTape& tape, bool query) {
    if (query) trace_.query_position.push_back((int)trace_.presented.size());
    trace_.presented.push_back(value);
    bool accepted = alg_.answer(value, tape);
    if (query) trace_.predictions.push_back(accepted);
}

void PriorityPmReductionGuesser::drain_above(const Rational* frontier, AdviceTape& tape) {
    auto key_less = [this](const Rational& a, const Rational& b) {
        return alg_.value_priority(a) < alg_.value_priority(b);
    };
    while (!heap_.empty()) {
        std::pop_heap(heap_.begin(), heap_.end(), key_less);
        Rational top = heap_.back();
        if (frontier && !(alg_.value_priority(*frontier) < alg_.value_priority(top))) {
            std::push_heap(heap_.begin(), heap_.end(), key_less);
            break;
        }
        heap_.pop_back();
        feed(top, tape, false);
    }
}

void PriorityPmReductionGuesser::sync(const Bits& prefix) {
    auto key_less = [this](const Rational& a, const Rational& b) {
        return alg_.value_priority(a) < alg_.value_priority(b);
    };
    while (consumed_ < prefix.size()) {
        if (prefix[consumed_]) {
            heap_.push_back(*complement_of_query_[consumed_]);
            std::push_heap(heap_.begin(), heap_.end(), key_less);
        }
        ++consumed_;
    }
}

int PriorityPmReductionGuesser::guess(const Bits& prefix, AdviceTape& tape) {
    last_tape_ = &tape;
    sync(prefix);
    Rational frontier = pool_.front();
    drain_above(&frontier, tape);
    Rational complement = 1 - frontier;
    pool_.erase(std::remove_if(pool_.begin(), pool_.end(),
                               [&](const Rational& v) {
                                   return v == frontier || v == complement;
                               }),
                pool_.end());
    complement_of_query_.push_back(complement);
    feed(frontier, tape, true);
    return trace_.predictions.back() ? 1 : 0;
}

PmReductionTrace PriorityPmReductionGuesser::finish(const Bits& full) {
    sync(full);
    AdviceTape scratch;
    drain_above(nullptr, last_tape_ ? *last_tape_ : scratch);
    return trace_;
}

std::unique_ptr<PriorityPmReductionGuesser> reduce_sgkh_to_pm_priority(PmPriorityAlgorithm& alg) {
    return std::make_unique<PriorityPmReductionGuesser>(alg);
}

}  // namespace pal
