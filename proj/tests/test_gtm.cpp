#include <doctest.h>

#include <random>

#include "pal/errors.hpp"
#include "pal/gtm.hpp"
#include "pal/model.hpp"

using namespace pal;

namespace {

long as_long(const Rational& r) {
    REQUIRE(denominator(r) == 1);
    return numerator(r).convert_to<long>();
}

std::vector<Rational> random_instance(std::mt19937_64& rng, long n) {
    std::vector<Rational> values;
    for (long i = 0; i < n; ++i) {
        values.emplace_back((long)(rng() % 41) - 20, (long)(rng() % 7) + 1);
    }
    return values;
}

}  // namespace

TEST_CASE("mean and correct answers") {
    CHECK(gtm_mean({Rational(1), Rational(2), Rational(3)}) == Rational(2));
    CHECK(gtm_mean({Rational(7)}) == Rational(7));
    CHECK_THROWS_AS(gtm_mean({}), DomainError);

    std::vector<Rational> values{Rational(1), Rational(2), Rational(3)};
    auto objective = gtm_correct_answers(values);
    auto items = gtm_items(values);
    // say 1 only for the 3: all three answers correct
    std::vector<std::pair<Item, Decision>> decided;
    for (const auto& item : items) {
        bool above = std::get<ValueItem>(item.payload).value > Rational(2);
        decided.emplace_back(item, above ? accept_decision() : reject_decision());
    }
    CHECK(*objective(decided) == 3);
}

TEST_CASE("single-value instance answers zero and reads no advice") {
    std::vector<Rational> values{Rational(7)};
    auto alg = gtm_optimal_priority(1);
    RunResult run = simulate(*alg, gtm_items(values), AdviceTape(gtm_optimal_advice(values)),
                             gtm_correct_answers(values));
    CHECK(*run.objective == 1);
    CHECK(run.bits_read == 0);
    CHECK(run.decisions[0].second == reject_decision());
}

TEST_CASE("three-value instance is solved with two advice bits") {
    std::vector<Rational> values{Rational(5), Rational(3), Rational(1)};
    CHECK(gtm_optimal_advice(values) == std::vector<uint8_t>{0, 1});
    auto alg = gtm_optimal_priority(3);
    RunResult run = simulate(*alg, gtm_items(values), AdviceTape(gtm_optimal_advice(values)),
                             gtm_mistakes(values));
    CHECK(*run.objective == 0);
    CHECK(run.bits_read == 2);
}

TEST_CASE("repeated values arrive back to back and are answered consistently") {
    std::vector<Rational> values{Rational(2), Rational(2)};
    CHECK(gtm_optimal_advice(values) == std::vector<uint8_t>{0});
    auto alg = gtm_optimal_priority(2);
    RunResult run = simulate(*alg, gtm_items(values), AdviceTape(gtm_optimal_advice(values)),
                             gtm_mistakes(values));
    CHECK(*run.objective == 0);
}

TEST_CASE("the optimal algorithm makes no mistakes on random instances") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 50; ++trial) {
        long n = 1 + (long)(rng() % 40);
        auto values = random_instance(rng, n);
        auto alg = gtm_optimal_priority(n);
        RunResult run = simulate(*alg, gtm_items(values),
                                 AdviceTape(gtm_optimal_advice(values)), gtm_mistakes(values));
        CAPTURE(trial);
        CHECK(*run.objective == 0);
        CHECK((long)run.bits_read == ceil_log2(n));
    }
}

TEST_CASE("adversary forces the floor against every scripted algorithm") {
    const GtmOrder orders[] = {GtmOrder::ValueDescending, GtmOrder::ValueAscending,
                               GtmOrder::NearOneFirst, GtmOrder::FarFromOneFirst};
    const GtmRule rules[] = {GtmRule::AlwaysOne, GtmRule::AlwaysZero, GtmRule::Alternate,
                             GtmRule::OneIffAtLeastOne, GtmRule::OneForFirstHalf};
    for (GtmOrder order : orders) {
        for (GtmRule rule : rules) {
            for (long n : {2L, 9L, 10L}) {
                auto probe = scripted_gtm(order, rule);
                GtmAdversaryResult result = gtm_adversary(*probe, n);
                CHECK(result.instance.size() == (size_t)n);
                CHECK(result.mistake_floor >= Rational(n - 2, 2));

                auto fresh = scripted_gtm(order, rule);
                RunResult run = simulate(*fresh, gtm_items(result.instance), AdviceTape{},
                                         gtm_mistakes(result.instance));
                CAPTURE((int)order);
                CAPTURE((int)rule);
                CAPTURE(n);
                CHECK(*run.objective >= result.mistake_floor);
            }
        }
    }
}

TEST_CASE("descending always-zero walks into the majority trap") {
    auto probe = scripted_gtm(GtmOrder::ValueDescending, GtmRule::AlwaysZero);
    GtmAdversaryResult result = gtm_adversary(*probe, 10);
    auto fresh = scripted_gtm(GtmOrder::ValueDescending, GtmRule::AlwaysZero);
    RunResult run = simulate(*fresh, gtm_items(result.instance), AdviceTape{},
                             gtm_mistakes(result.instance));
    // all zeros means the adversary appends the low value and the n-1 high
    // values are all answered wrong
    CHECK(as_long(*run.objective) >= 9);
}

TEST_CASE("bisection queries unroll as halving midpoints") {
    SUBCASE("all ones descends") {
        auto alg = scripted_online_gtm(GtmRule::AlwaysOne);
        auto guesser = reduce_sgkh_to_gtm(*alg);
        Bits target{1, 1, 1, 1};
        int mistakes = sgkh_play(*guesser, target, AdviceTape{});
        CHECK(mistakes == 0);
        GtmReductionTrace trace = guesser->finish(target);
        REQUIRE(trace.queries.size() == 5);
        CHECK(trace.queries[0] == Rational(1, 2));
        CHECK(trace.queries[1] == Rational(1, 4));
        CHECK(trace.queries[2] == Rational(1, 8));
        CHECK(trace.queries[3] == Rational(1, 16));
        CHECK(trace.queries[4] == Rational(-25, 32));
        CHECK(trace.mean == Rational(1, 32));
        CHECK(trace.lower.back() == Rational(0));
        CHECK(trace.upper.back() == Rational(1, 16));
    }
    SUBCASE("all zeros ascends") {
        auto alg = scripted_online_gtm(GtmRule::AlwaysZero);
        auto guesser = reduce_sgkh_to_gtm(*alg);
        Bits target{0, 0, 0, 0};
        int mistakes = sgkh_play(*guesser, target, AdviceTape{});
        CHECK(mistakes == 0);
        GtmReductionTrace trace = guesser->finish(target);
        REQUIRE(trace.queries.size() == 5);
        CHECK(trace.queries[0] == Rational(1, 2));
        CHECK(trace.queries[1] == Rational(3, 4));
        CHECK(trace.queries[2] == Rational(7, 8));
        CHECK(trace.queries[3] == Rational(15, 16));
        CHECK(trace.queries[4] == Rational(57, 32));
        CHECK(trace.mean == Rational(31, 32));
        CHECK(trace.lower.back() == Rational(15, 16));
        CHECK(trace.upper.back() == Rational(1));
    }
}

TEST_CASE("bisection invariants and mistake correspondence on random strings") {
    std::mt19937_64 rng(7);
    const GtmRule rules[] = {GtmRule::AlwaysOne, GtmRule::AlwaysZero, GtmRule::Alternate,
                             GtmRule::OneIffAtLeastOne, GtmRule::OneForFirstHalf};
    for (int trial = 0; trial < 40; ++trial) {
        size_t n = 1 + (size_t)(rng() % 16);
        Bits target(n);
        for (auto& b : target) b = (uint8_t)(rng() % 2);
        GtmRule rule = rules[trial % 5];

        auto alg = scripted_online_gtm(rule);
        auto guesser = reduce_sgkh_to_gtm(*alg);
        int guess_mistakes = sgkh_play(*guesser, target, AdviceTape{});
        GtmReductionTrace trace = guesser->finish(target);

        REQUIRE(trace.queries.size() == n + 1);
        REQUIRE(trace.lower.size() == n + 1);
        REQUIRE(trace.upper.size() == n + 1);
        Rational width(1);
        for (size_t i = 0; i <= n; ++i) {
            CHECK(trace.lower[i] < trace.upper[i]);
            CHECK(trace.upper[i] - trace.lower[i] == width);
            if (i < n) {
                CHECK(trace.queries[i] == (trace.lower[i] + trace.upper[i]) / 2);
                width /= 2;
            }
        }
        CHECK(trace.mean == (trace.lower.back() + trace.upper.back()) / 2);
        CHECK(gtm_mean(trace.queries) == trace.mean);
        // revealed ones sit strictly above the final mean, zeros strictly below
        for (size_t i = 0; i < n; ++i) {
            if (target[i]) {
                CHECK(trace.queries[i] > trace.mean);
            } else {
                CHECK(trace.queries[i] < trace.mean);
            }
        }
        // guesser mistakes replay as wrong answers of a fresh algorithm fed
        // the same begin_run length and query sequence
        auto fresh = scripted_online_gtm(rule);
        fresh->begin_run(n);
        int wrong = 0;
        AdviceTape scratch;
        for (size_t i = 0; i < n; ++i) {
            int answer = fresh->answer(trace.queries[i], scratch);
            int truth = trace.queries[i] > trace.mean ? 1 : 0;
            if (answer != truth) ++wrong;
        }
        CAPTURE(trial);
        CHECK(wrong == guess_mistakes);
    }
}

TEST_CASE("adversary rejects degenerate sizes") {
    auto alg = scripted_gtm(GtmOrder::ValueDescending, GtmRule::AlwaysOne);
    CHECK_THROWS_AS(gtm_adversary(*alg, 1), DomainError);
}
