#include "pal/reduction.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <utility>

#include "pal/errors.hpp"
#include "pal/item.hpp"
#include "pal/pair_matching.hpp"

namespace pal {

GadgetFactory::GadgetFactory(std::string family, PriorityFunction priority,
                             const std::vector<Rational>& values)
    : family_(std::move(family)),
      priority_(std::move(priority)),
      entry_(catalog_entry(family_)) {
    pm_validate(values);
    long token = 0;
    for (const auto& v : values) {
        Rational rep = v <= Rational(1, 2) ? v : Rational(1) - v;
        if (pairs_.count(rep)) continue;
        pairs_.emplace(rep, instantiate_pair(family_, fresh_names(family_, ++token), priority_));
    }
}

const GadgetPair& GadgetFactory::pair_for(const Rational& value) const {
    Rational rep = value <= Rational(1, 2) ? value : Rational(1) - value;
    auto it = pairs_.find(rep);
    if (it == pairs_.end()) {
        throw DomainError("no gadget pair for value " + format_rational(value));
    }
    return it->second;
}

PriorityKey GadgetFactory::value_priority(const Rational& value) const {
    const GadgetPair& pair = pair_for(value);
    return priority_.key(value <= Rational(1, 2) ? pair.m1 : pair.m2);
}

namespace {

struct QueueEntry {
    PriorityKey key;
    Item item;
};

struct QueueLess {
    bool operator()(const QueueEntry& a, const QueueEntry& b) const { return a.key < b.key; }
};

struct ValueState {
    int committed = 0;  // 0 open, 1 complement arrived, 2 complement ruled out
    size_t row = 0;
};

bool decision_in(const std::vector<Decision>& set, const Decision& d) {
    return std::find(set.begin(), set.end(), d) != set.end();
}

}  // namespace

ReductionReport run_reduction(FixedPriorityAlgorithm& alg, const GadgetFactory& factory,
                              const std::vector<Rational>& values, AdviceTape tape) {
    pm_validate(values);
    const Rational half(1, 2);

    ReductionReport report;
    report.family = factory.entry().family;
    report.n = values.size();
    report.max_gadget_size = factory.entry().size;

    // Arrival order: decreasing induced priority.  Distinct values map to
    // distinct pair items, so a tie here means the base priority itself ties.
    std::vector<std::pair<PriorityKey, Rational>> order;
    order.reserve(values.size());
    for (const auto& v : values) order.emplace_back(factory.value_priority(v), v);
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return b.first < a.first; });
    for (size_t i = 0; i + 1 < order.size(); ++i) {
        if (!(order[i + 1].first < order[i].first)) {
            throw PriorityTieError("induced value priority ties between " +
                                   format_rational(order[i].second) + " and " +
                                   format_rational(order[i + 1].second));
        }
    }

    std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueLess> queue;
    std::map<Rational, ValueState> states;  // keyed by arrived value below 1/2
    std::vector<Rational> arrivals_below;   // those values in arrival order

    const PriorityFunction& p = factory.item_priority();

    auto present = [&](const Item& item) {
        PriorityKey key = p.key(item);
        if (!report.delivered_keys.empty() && !(key < report.delivered_keys.back())) {
            throw Error("delivery order violation at item " + canonical(item));
        }
        Decision decision = alg.decide(item, tape);
        report.delivered.push_back(item);
        report.delivered_keys.push_back(std::move(key));
        return decision;
    };

    auto insert_rest = [&](const std::vector<Item>& gadget, const Item& m1) {
        for (const auto& item : gadget) {
            if (item == m1) continue;
            queue.push(QueueEntry{p.key(item), item});
        }
    };

    alg.begin_run();

    std::optional<PriorityKey> prev;  // empty stands for the +infinity sentinel
    for (const auto& [cur, x] : order) {
        if (x >= half) {
            // A complement: accept exactly when its partner arrived earlier.
            // That settles the partner's pair in favor of the
            // complement-arrived gadget.  1/2 never finds a partner since a
            // value cannot repeat, so it is rejected and adds no items.
            Rational partner = Rational(1) - x;
            auto it = states.find(partner);
            bool matched = it != states.end();
            if (matched) {
                ValueState& st = it->second;
                if (st.committed != 0) throw Error("pair settled before its complement arrived");
                st.committed = 1;
                report.rows[st.row].gadget = 1;
                const GadgetPair& pair = factory.pair_for(partner);
                insert_rest(pair.g1, pair.m1);
            }
            report.answers.emplace_back(x, matched);
        }

        // Open pairs whose complement ranks strictly between the previous
        // input and this one can no longer see that complement arrive, so
        // they settle on the no-complement gadget.
        for (const auto& y : arrivals_below) {
            ValueState& st = states.at(y);
            if (st.committed != 0) continue;
            PriorityKey comp = factory.value_priority(Rational(1) - y);
            if ((!prev || comp < *prev) && cur < comp) {
                st.committed = 2;
                report.rows[st.row].gadget = 2;
                const GadgetPair& pair = factory.pair_for(y);
                insert_rest(pair.g2, pair.m1);
            }
        }

        while (!queue.empty() && cur < queue.top().key) {
            present(queue.top().item);
            queue.pop();
        }

        if (x < half) {
            const GadgetPair& pair = factory.pair_for(x);
            Decision decision = present(pair.m1);
            bool accept = decision_in(pair.d1, decision);

            ValueState st;
            st.row = report.rows.size();
            states.emplace(x, st);
            arrivals_below.push_back(x);

            ReductionRow row;
            row.value = x;
            row.decision = decision;
            report.rows.push_back(std::move(row));
            report.answers.emplace_back(x, accept);
        }
        prev = cur;
    }

    // Pairs still open after the last input never see their complement.
    for (const auto& y : arrivals_below) {
        ValueState& st = states.at(y);
        if (st.committed != 0) continue;
        PriorityKey comp = factory.value_priority(Rational(1) - y);
        if (prev && *prev < comp) throw Error("open pair outranks the last input");
        st.committed = 2;
        report.rows[st.row].gadget = 2;
        const GadgetPair& pair = factory.pair_for(y);
        insert_rest(pair.g2, pair.m1);
    }
    while (!queue.empty()) {
        present(queue.top().item);
        queue.pop();
    }
    alg.end_of_input();

    // Row verdicts.  `wrong` checks the first decision against the settled
    // gadget's optimal set; `pm_mistake` projects the decision to an
    // accept/reject answer and checks it against complement presence.  The
    // projected answers double as the simulated pair matching run, whose
    // mistakes are recounted independently below.
    for (auto& row : report.rows) {
        const GadgetPair& pair = factory.pair_for(row.value);
        const std::vector<Decision>& good = row.gadget == 1 ? pair.d1 : pair.d2;
        row.wrong = !decision_in(good, row.decision);
        bool projected = decision_in(pair.d1, row.decision);
        row.pm_mistake = projected != (row.gadget == 1);
        report.wrong_count += row.wrong;
        report.pm_mistake_count += row.pm_mistake;
    }
    std::set<Rational> value_set(values.begin(), values.end());
    for (const auto& [v, accept] : report.answers) {
        bool correct = v != half && value_set.count(Rational(1) - v) != 0;
        if (accept != correct) ++report.answer_mistakes;
    }
    report.input_size = report.delivered.size();
    report.bits_read = tape.bits_read();
    return report;
}

ReductionReport run_reduction(FixedPriorityAlgorithm& alg, const std::string& family,
                              const std::vector<Rational>& values, AdviceTape tape) {
    PriorityFunction p{[&alg](const Item& item) { return alg.priority(item); }};
    GadgetFactory factory(family, std::move(p), values);
    return run_reduction(alg, factory, values, std::move(tape));
}

ReductionReport run_triangle_reduction(FixedPriorityAlgorithm& alg,
                                       const std::vector<Rational>& values, AdviceTape tape) {
    return run_reduction(alg, "triangle", values, std::move(tape));
}

std::string report_csv(const ReductionReport& report) {
    std::ostringstream out;
    out << "value,gadget,decision,wrong,cumulative_mistakes\n";
    long cumulative = 0;
    for (const auto& row : report.rows) {
        cumulative += row.wrong;
        out << format_rational(row.value) << "," << row.gadget << ","
            << format_decision(row.decision) << "," << (row.wrong ? 1 : 0) << "," << cumulative
            << "\n";
    }
    return out.str();
}

std::string report_records(const ReductionReport& report) {
    std::ostringstream out;
    out << "reduction family=" << report.family << " n=" << report.n
        << " items=" << report.input_size << " wrong=" << report.wrong_count
        << " mistakes=" << report.pm_mistake_count << " bits=" << report.bits_read << "\n";
    for (const auto& row : report.rows) {
        out << "row value=" << format_rational(row.value) << " gadget=" << row.gadget
            << " decision=" << format_decision(row.decision) << " wrong=" << (row.wrong ? 1 : 0)
            << " mistake=" << (row.pm_mistake ? 1 : 0) << "\n";
    }
    for (size_t i = 0; i < report.delivered.size(); ++i) {
        out << "item " << canonical(report.delivered[i]) << " key="
            << format_key(report.delivered_keys[i]) << "\n";
    }
    return out.str();
}

}  // namespace pal
