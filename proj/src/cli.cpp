#include "pal/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pal/bounds.hpp"
#include "pal/catalog.hpp"
#include "pal/errors.hpp"
#include "pal/gtm.hpp"
#include "pal/item.hpp"
#include "pal/model.hpp"
#include "pal/pair_matching.hpp"
#include "pal/priority.hpp"
#include "pal/problems.hpp"
#include "pal/reduction.hpp"

namespace pal {
namespace {

uint64_t mix_seed(uint64_t seed, long salt) {
    return stable_hash(seed, "cli:" + std::to_string(salt));
}

std::string format_double(double v) {
    char buf[64];
    snprintf(buf, sizeof buf, "%.9f", v);
    return std::string(buf);
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw UsageError("cannot open output file: " + path);
    file << text;
    out << "wrote " << path << "\n";
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& family, const std::string& variant, int samples, uint64_t seed,
               std::ostream& out) {
    const CatalogEntry& entry = catalog_entry(family);
    if (!variant.empty() &&
        std::find(entry.variants.begin(), entry.variants.end(), variant) == entry.variants.end()) {
        throw CatalogError("family " + family + " has no variant " + variant);
    }
    out << "family=" << family << " problem=" << entry.problem << " opt=" << entry.opt1 << "/"
        << entry.opt2 << " bad=" << entry.bad1 << "/" << entry.bad2 << " size=" << entry.size
        << "\n";

    bool ok = true;
    std::set<std::string> covered;
    int produced = 0;
    for (long attempt = 0; produced < samples && attempt < 100 * (long)samples; ++attempt) {
        PriorityFunction p = random_priority(mix_seed(seed, attempt));
        std::optional<GadgetPair> pair;
        try {
            pair = instantiate_pair(family, fresh_names(family, 1), p);
        } catch (const Error& e) {
            ok = false;
            out << "sample " << produced << " FAIL [instantiation] " << e.what() << "\n";
            ++produced;
            continue;
        }
        if (!variant.empty() && pair->variant != variant) continue;  // resample
        int index = produced++;
        try {
            GadgetCertificate cert = verify_gadget_pair(*pair, p);
            covered.insert(pair->variant);
            out << "sample " << index << " variant="
                << (pair->variant.empty() ? "-" : pair->variant) << " opt=" << cert.opt1 << "/"
                << cert.opt2 << " bad=" << cert.bad1 << "/" << cert.bad2 << " unique="
                << (cert.unique1 ? 1 : 0) << "/" << (cert.unique2 ? 1 : 0)
                << " isomorphic-items=" << (cert.isomorphic_items ? 1 : 0) << " pass\n";
        } catch (const GadgetConditionError& e) {
            ok = false;
            out << "sample " << index << " FAIL [" << e.condition() << "] " << e.what() << "\n";
        }
    }
    if (produced < samples) {
        throw UsageError("random priorities never selected variant " + variant);
    }
    out << (ok ? "verified" : "FAILED") << " family=" << family << " samples=" << produced
        << " variants-covered=" << covered.size() << "\n";
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------- reduce

struct GeneratedInput {
    std::vector<Rational> values;
    long pairs = 0;
};

// Deterministic pair matching input: n - k fresh values below 1/2 plus the
// complements of k of them, k drawn from [0, n/2].
GeneratedInput make_pm_input(long n, uint64_t seed) {
    GeneratedInput in;
    if (n <= 0) return in;
    std::mt19937_64 rng(seed);
    long k = (long)(rng() % (uint64_t)(n / 2 + 1));
    long m = n - k;
    for (long i = 1; i <= m; ++i) in.values.emplace_back(2 * i - 1, 8 * m);
    std::vector<long> idx(m);
    for (long i = 0; i < m; ++i) idx[i] = i;
    for (long i = 0; i < k; ++i) {
        long j = i + (long)(rng() % (uint64_t)(m - i));
        std::swap(idx[i], idx[j]);
        in.values.push_back(Rational(1) - in.values[idx[i]]);
    }
    in.pairs = k;
    return in;
}

class BaselineAlgorithm : public FixedPriorityAlgorithm {
public:
    explicit BaselineAlgorithm(uint64_t seed) : p_(random_priority(seed)) {}
    PriorityKey priority(const Item& item) const final { return p_.key(item); }

private:
    PriorityFunction p_;
};

class AlwaysDecide : public BaselineAlgorithm {
public:
    AlwaysDecide(uint64_t seed, bool accept) : BaselineAlgorithm(seed), accept_(accept) {}
    Decision decide(const Item& item, AdviceTape&) override {
        if (!accept_) return reject_decision();
        if (const auto* b = std::get_if<BipartiteVertex>(&item.payload)) {
            if (b->neighbors.empty()) return reject_decision();
            return match_decision(b->neighbors.front());
        }
        return accept_decision();
    }

private:
    bool accept_;
};

class RandomBaseline : public BaselineAlgorithm {
public:
    explicit RandomBaseline(uint64_t seed) : BaselineAlgorithm(seed), rng_(mix_seed(seed, 1)) {}
    Decision decide(const Item& item, AdviceTape&) override {
        if (const auto* b = std::get_if<BipartiteVertex>(&item.payload)) {
            size_t pick = rng_() % (b->neighbors.size() + 1);
            if (pick == 0) return reject_decision();
            return match_decision(b->neighbors[pick - 1]);
        }
        return rng_() % 2 ? accept_decision() : reject_decision();
    }

private:
    std::mt19937_64 rng_;
};

// Accepts whenever the item cannot clash with an earlier accept: no
// accepted graph neighbor, first unused matching partner, no precedence
// cycle among accepted jobs. Variables are always set true.
class GreedyBaseline : public BaselineAlgorithm {
public:
    explicit GreedyBaseline(uint64_t seed) : BaselineAlgorithm(seed) {}
    void begin_run() override {
        accepted_.clear();
        partners_.clear();
        jobs_.clear();
    }
    Decision decide(const Item& item, AdviceTape&) override {
        return std::visit([&](const auto& p) { return on(p); }, item.payload);
    }

private:
    Decision on(const GraphVertex& v) {
        for (const auto& nb : v.neighbors) {
            if (accepted_.count(nb)) return reject_decision();
        }
        accepted_.insert(v.name);
        return accept_decision();
    }
    Decision on(const BipartiteVertex& v) {
        for (const auto& nb : v.neighbors) {
            if (partners_.insert(nb).second) return match_decision(nb);
        }
        return reject_decision();
    }
    Decision on(const SatVariable&) { return accept_decision(); }
    Decision on(const ClauseRef&) { return accept_decision(); }
    Decision on(const ValueItem& v) {
        return v.value >= Rational(1, 2) ? accept_decision() : reject_decision();
    }
    Decision on(const Job& j) {
        if (!stays_acyclic(j)) return reject_decision();
        jobs_.push_back(j);
        return accept_decision();
    }

    bool stays_acyclic(const Job& candidate) const {
        std::vector<const Job*> all;
        for (const auto& j : jobs_) all.push_back(&j);
        all.push_back(&candidate);
        std::map<std::string, int> index;
        for (size_t i = 0; i < all.size(); ++i) index[all[i]->name] = (int)i;
        std::vector<int> indeg(all.size(), 0);
        std::vector<std::vector<int>> succ(all.size());
        for (size_t i = 0; i < all.size(); ++i) {
            for (const auto& later : all[i]->after) {
                auto it = index.find(later);
                if (it == index.end()) continue;
                succ[i].push_back(it->second);
                ++indeg[it->second];
            }
        }
        std::vector<int> ready;
        for (size_t i = 0; i < all.size(); ++i) {
            if (!indeg[i]) ready.push_back((int)i);
        }
        size_t done = 0;
        while (!ready.empty()) {
            int u = ready.back();
            ready.pop_back();
            ++done;
            for (int w : succ[u]) {
                if (--indeg[w] == 0) ready.push_back(w);
            }
        }
        return done == all.size();
    }

    std::set<std::string> accepted_;
    std::set<std::string> partners_;
    std::vector<Job> jobs_;
};

// Reads one bit per pair top item: 1 picks an optimal decision of the
// complement-arrived gadget, 0 of the other. Everything else is rejected.
class OracleAdviceBaseline : public BaselineAlgorithm {
public:
    explicit OracleAdviceBaseline(uint64_t seed) : BaselineAlgorithm(seed) {}
    void attach(const GadgetFactory& factory, const std::vector<Rational>& below) {
        tops_.clear();
        for (const auto& v : below) {
            const GadgetPair& pair = factory.pair_for(v);
            tops_.emplace(canonical(pair.m1), &pair);
        }
    }
    Decision decide(const Item& item, AdviceTape& tape) override {
        auto it = tops_.find(canonical(item));
        if (it == tops_.end()) return reject_decision();
        return tape.read() ? it->second->d1.front() : it->second->d2.front();
    }

private:
    std::map<std::string, const GadgetPair*> tops_;
};

int cmd_reduce(const std::string& family, long n, const std::string& alg_name, uint64_t seed,
               long bits, const Rational& eps, const std::string& out_path, std::ostream& out) {
    const CatalogEntry& entry = catalog_entry(family);
    if (n < 0) throw UsageError("--n must be nonnegative");
    GeneratedInput input = make_pm_input(n, seed);

    std::unique_ptr<FixedPriorityAlgorithm> alg;
    OracleAdviceBaseline* oracle = nullptr;
    std::string name = alg_name;
    if (name == "always-0") name = "always-reject";
    if (name == "always-1") name = "always-accept";
    if (name == "always-accept") {
        alg = std::make_unique<AlwaysDecide>(seed, true);
    } else if (name == "always-reject") {
        alg = std::make_unique<AlwaysDecide>(seed, false);
    } else if (name == "random") {
        alg = std::make_unique<RandomBaseline>(seed);
    } else if (name == "greedy") {
        alg = std::make_unique<GreedyBaseline>(seed);
    } else if (name == "oracle-advice") {
        auto owned = std::make_unique<OracleAdviceBaseline>(seed);
        oracle = owned.get();
        alg = std::move(owned);
    } else {
        throw UsageError("unknown baseline algorithm: " + alg_name);
    }

    PriorityFunction p{[&alg](const Item& item) { return alg->priority(item); }};
    GadgetFactory factory(family, p, input.values);

    std::vector<uint8_t> advice;
    if (oracle) {
        const Rational half(1, 2);
        std::vector<Rational> below;
        for (const auto& v : input.values) {
            if (v < half) below.push_back(v);
        }
        std::sort(below.begin(), below.end(), [&](const Rational& a, const Rational& b) {
            return factory.value_priority(b) < factory.value_priority(a);
        });
        std::set<Rational> all(input.values.begin(), input.values.end());
        for (const auto& v : below) advice.push_back(all.count(Rational(1) - v) ? 1 : 0);
        if (bits >= 0 && (long)advice.size() > bits) {
            throw UsageError("oracle advice needs " + std::to_string(advice.size()) +
                             " bits but the budget is " + std::to_string(bits));
        }
        oracle->attach(factory, below);
    }

    ReductionReport report = run_reduction(*alg, factory, input.values, AdviceTape(advice));

    out << "reduction family=" << family << " n=" << n << " alg=" << alg_name << " seed=" << seed
        << "\n";
    out << "pairs=" << input.pairs << " items=" << report.input_size << " cap=" << entry.size * n
        << " bits=" << report.bits_read << "\n";
    out << "wrong=" << report.wrong_count << " mistakes=" << report.pm_mistake_count << "\n";

    const ProblemSpec& spec = problem(entry.problem);
    Rational ratio =
        entry.opt1 == entry.opt2
            ? corollary_bound(entry.opt1, eps, spec.sense)
            : (spec.sense == Sense::Minimize
                   ? min_ratio_bound(entry.opt1, entry.opt2, entry.bad1, entry.bad2, eps)
                   : max_ratio_bound(entry.opt1, entry.opt2, entry.bad1, entry.bad2, eps));
    out << "ratio-bound eps=" << format_rational(eps) << " value=" << format_rational(ratio)
        << " ~ " << format_decimal(ratio, 9) << "\n";

    write_output(out_path, report_csv(report), out);
    return 0;
}

// ---------------------------------------------------------------- tradeoff

struct Grid {
    Rational lo, hi, step;
};

Grid parse_grid(const std::string& text) {
    auto first = text.find(':');
    auto second = first == std::string::npos ? first : text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos) {
        throw UsageError("grid must be lo:hi:step, got " + text);
    }
    Grid g{parse_rational(text.substr(0, first)),
           parse_rational(text.substr(first + 1, second - first - 1)),
           parse_rational(text.substr(second + 1))};
    if (!(g.step > 0) || !(g.lo > 0) || g.hi < g.lo || !(g.hi < Rational(1, 2))) {
        throw UsageError("grid must satisfy 0 < lo <= hi < 1/2 with step > 0");
    }
    return g;
}

int cmd_tradeoff(const std::string& family, const std::string& grid_text,
                 const std::string& out_path, std::ostream& out) {
    const CatalogEntry& entry = catalog_entry(family);
    if (entry.opt1 != entry.opt2) {
        throw UsageError("family " + family +
                         " has unequal gadget optima; the equal-optima curve is undefined");
    }
    const ProblemSpec& spec = problem(entry.problem);
    Grid grid = parse_grid(grid_text);

    std::ostringstream csv;
    csv << "eps_pq,eps,divisor,advice_per_item,ratio_pq,ratio\n";
    for (Rational eps = grid.lo; eps <= grid.hi; eps += grid.step) {
        double per_item = advice_threshold(1, entry.size, eps);
        Rational ratio = corollary_bound(entry.opt1, eps, spec.sense);
        csv << format_rational(eps) << "," << format_decimal(eps, 9) << "," << 2 * entry.size
            << "," << format_double(per_item) << "," << format_rational(ratio) << ","
            << format_decimal(ratio, 9) << "\n";
    }

    out << "tradeoff family=" << family << " problem=" << entry.problem << " sense="
        << (spec.sense == Sense::Minimize ? "min" : "max") << " opt=" << entry.opt1
        << " divisor=" << 2 * entry.size << "\n";
    write_output(out_path, csv.str(), out);
    return 0;
}

// ---------------------------------------------------------------- adversary

GtmOrder parse_gtm_order(const std::string& name) {
    if (name == "desc") return GtmOrder::ValueDescending;
    if (name == "asc") return GtmOrder::ValueAscending;
    if (name == "near-one") return GtmOrder::NearOneFirst;
    if (name == "far-one") return GtmOrder::FarFromOneFirst;
    throw UsageError("unknown value order: " + name);
}

GtmRule parse_gtm_rule(const std::string& name) {
    if (name == "always-one") return GtmRule::AlwaysOne;
    if (name == "always-zero") return GtmRule::AlwaysZero;
    if (name == "alternate") return GtmRule::Alternate;
    if (name == "one-iff-geq-one" || name == "majority-one") return GtmRule::OneIffAtLeastOne;
    if (name == "one-first-half") return GtmRule::OneForFirstHalf;
    throw UsageError("unknown answer rule: " + name);
}

// "rule" or "order:rule"; the order defaults to descending values.
std::pair<GtmOrder, GtmRule> parse_gtm_alg(const std::string& name) {
    auto colon = name.find(':');
    if (colon == std::string::npos) return {GtmOrder::ValueDescending, parse_gtm_rule(name)};
    return {parse_gtm_order(name.substr(0, colon)), parse_gtm_rule(name.substr(colon + 1))};
}

int cmd_adversary_gtm(const std::string& alg_name, long n, std::ostream& out) {
    auto [order, rule] = parse_gtm_alg(alg_name);
    auto probe = scripted_gtm(order, rule);
    GtmAdversaryResult result = gtm_adversary(*probe, n);

    auto fresh = scripted_gtm(order, rule);
    RunResult run = simulate(*fresh, gtm_items(result.instance), AdviceTape{},
                             gtm_mistakes(result.instance));
    Rational mistakes = run.objective.value();

    out << "adversary=gtm alg=" << alg_name << " n=" << n << " case=" << result.case_id << "\n";
    out << "instance=";
    for (size_t i = 0; i < result.instance.size(); ++i) {
        out << (i ? " " : "") << format_rational(result.instance[i]);
    }
    out << "\nmistakes=" << format_rational(mistakes)
        << " floor=" << format_rational(result.mistake_floor) << "\n";
    return mistakes >= result.mistake_floor ? 0 : 1;
}

std::function<std::unique_ptr<OnlinePmAlgorithm>()> pm_det_rule(const std::string& alg_name) {
    std::string name = alg_name == "eager-accept" ? "always-accept" : alg_name;
    for (auto& [registered, factory] : pm_deterministic_registry()) {
        if (registered == name) return factory;
    }
    throw UsageError("unknown pair matching baseline: " + alg_name);
}

void print_presentation(const PmPresentation& pres, std::ostream& out) {
    out << "presentation=";
    for (size_t i = 0; i < pres.values.size(); ++i) {
        out << (i ? " " : "") << format_rational(pres.values[i]);
        if (pres.assumed[i]) out << "*";
    }
    out << "\n";
}

int cmd_adversary_pm_det(const std::string& alg_name, long n, std::ostream& out) {
    auto rule = pm_det_rule(alg_name);
    auto probe = rule();
    PmPresentation pres = pm_adversary_det(*probe, n);
    auto fresh = rule();
    long correct = pm_replay_correct(*fresh, pres, true);
    long mistakes = n - correct;

    out << "adversary=pm-det alg=" << alg_name << " n=" << n << "\n";
    print_presentation(pres, out);
    out << "mistakes=" << mistakes << " floor=" << format_rational(pres.mistake_floor) << "\n";
    return Rational(mistakes) >= pres.mistake_floor ? 0 : 1;
}

int cmd_adversary_pm_rand(const std::string& alg_name, long n, uint64_t seed, long trials,
                          std::ostream& out) {
    Rational param;
    bool constant = false;
    if (alg_name.rfind("const-p:", 0) == 0) {
        constant = true;
        param = parse_rational(alg_name.substr(8));
    } else if (alg_name.rfind("randomized:", 0) == 0) {
        param = parse_rational(alg_name.substr(11));
    } else {
        throw UsageError("pm-rand algorithms are const-p:<p> or randomized:<alpha>");
    }
    if (trials < 1) throw UsageError("--trials must be positive");
    auto make = [&](uint64_t s) {
        return constant ? pm_constant_reject(param, s) : pm_randomized(param, s);
    };
    auto probe = make(seed);
    PmPresentation pres = pm_adversary_rand(*probe, n);

    double sum = 0, sumsq = 0;
    for (long t = 0; t < trials; ++t) {
        auto fresh = make(mix_seed(seed, t + 1));
        double c = (double)pm_replay_correct(*fresh, pres, true);
        sum += c;
        sumsq += c * c;
    }
    double mean = sum / (double)trials;
    double var = std::max(0.0, sumsq / (double)trials - mean * mean);
    double se = std::sqrt(var / (double)trials);
    Rational cap(2 * n, 3);

    out << "adversary=pm-rand alg=" << alg_name << " n=" << n << " trials=" << trials << "\n";
    print_presentation(pres, out);
    out << "expected-correct=" << format_rational(pres.expected_correct) << " ~ "
        << format_double((double)pres.expected_correct) << "\n";
    out << "sample-mean=" << format_double(mean) << " se=" << format_double(se)
        << " cap=" << format_rational(cap) << "\n";
    bool ok = pres.expected_correct <= cap && mean <= (double)cap + 4 * se + 1e-9;
    out << (ok ? "within-cap" : "cap exceeded") << "\n";
    return ok ? 0 : 1;
}

int cmd_adversary(const std::string& target, const std::string& alg_name, long n, uint64_t seed,
                  long trials, std::ostream& out) {
    if (n < 2) throw UsageError("--n must be at least 2");
    if (target == "gtm") return cmd_adversary_gtm(alg_name, n, out);
    if (target == "pm-det") return cmd_adversary_pm_det(alg_name, n, out);
    if (target == "pm-rand") return cmd_adversary_pm_rand(alg_name, n, seed, trials, out);
    throw UsageError("unknown adversary target: " + target);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"fixed-priority algorithms with advice: gadget certification, reductions, "
                 "adversaries, and trade-off curves"};
    app.require_subcommand(0, 1);

    std::string family, variant, target, out_path;
    std::string alg_name = "greedy";
    std::string grid_text = "1/20:9/20:1/20";
    std::string eps_text = "1/4";
    long n = 0, bits = -1, trials = 10000;
    int samples = 5;
    uint64_t seed = 1;

    auto* verify =
        app.add_subcommand("verify", "re-certify a gadget pair under random priority functions");
    verify->add_option("family", family, "catalog family")->required();
    verify->add_option("variant", variant, "restrict sampling to one dispatch variant");
    verify->add_option("--samples", samples, "number of random priority samples (default 5)");
    verify->add_option("--seed", seed, "base seed (default 1)");

    auto* reduce = app.add_subcommand(
        "reduce",
        "run the gadget reduction on a generated pair matching input; "
        "CSV schema: value,gadget,decision,wrong,cumulative_mistakes");
    reduce->add_option("family", family, "catalog family")->required();
    reduce->add_option("--n", n, "pair matching input length")->required();
    reduce->add_option("--alg", alg_name,
                       "greedy | random | always-accept | always-reject | oracle-advice "
                       "(aliases: always-1, always-0)");
    reduce->add_option("--seed", seed, "seed for the input and the priority (default 1)");
    reduce->add_option("--bits", bits, "advice budget for oracle-advice, -1 = unlimited");
    reduce->add_option("--eps", eps_text, "wrong-decision fraction for the printed ratio bound");
    reduce->add_option("--out", out_path, "write the CSV to this file instead of stdout");

    auto* tradeoff = app.add_subcommand(
        "tradeoff",
        "advice/approximation curve for an equal-optima family; "
        "CSV schema: eps_pq,eps,divisor,advice_per_item,ratio_pq,ratio");
    tradeoff->add_option("family", family, "catalog family")->required();
    tradeoff->add_option("--grid", grid_text, "eps grid lo:hi:step, exact rationals");
    tradeoff->add_option("--out", out_path, "write the CSV to this file instead of stdout");

    auto* adversary =
        app.add_subcommand("adversary", "construct and replay a lower-bound adversary instance");
    adversary->add_option("target", target, "gtm | pm-det | pm-rand")->required();
    adversary
        ->add_option("--alg", alg_name,
                     "gtm: rule or order:rule; pm-det: registry name; "
                     "pm-rand: const-p:<p> or randomized:<alpha>")
        ->required();
    adversary->add_option("--n", n, "instance length")->required();
    adversary->add_option("--seed", seed, "sampling seed for pm-rand (default 1)");
    adversary->add_option("--trials", trials, "pm-rand Monte Carlo trials (default 10000)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(family, variant, samples, seed, out);
        if (reduce->parsed()) {
            return cmd_reduce(family, n, alg_name, seed, bits, parse_rational(eps_text), out_path,
                              out);
        }
        if (tradeoff->parsed()) return cmd_tradeoff(family, grid_text, out_path, out);
        if (adversary->parsed()) return cmd_adversary(target, alg_name, n, seed, trials, out);
        out << app.help();
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const CatalogError& e) {
        err << "catalog error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace pal
