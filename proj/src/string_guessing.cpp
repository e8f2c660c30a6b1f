#include "pal/string_guessing.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace pal {

int sgkh_play(Guesser& guesser, const Bits& target, AdviceTape tape) {
    guesser.begin_run(target.size());
    Bits prefix;
    int mistakes = 0;
    for (uint8_t bit : target) {
        int g = guesser.guess(prefix, tape);
        if (g != (int)bit) ++mistakes;
        prefix.push_back(bit);
    }
    return mistakes;
}

double sgkh_advice_threshold(long n, const Rational& eps) {
    if (eps <= 0 || eps > Rational(1, 2)) {
        throw DomainError("eps must lie in (0, 1/2], got " + format_rational(eps));
    }
    if (n < 0) throw DomainError("negative string length");
    return (1.0 - entropy(eps)) * (double)n;
}

namespace {

constexpr int kMaxN = 12;
constexpr int kMaxBits = 4;

// Family state in the guessing game: how many mistakes each guesser can
// still afford. Guessers are interchangeable, so a sorted budget multiset
// is canonical. Encoded 4 bits per budget (budgets stay <= 12).
uint64_t encode_budgets(const std::vector<int>& budgets) {
    uint64_t key = 0;
    for (int b : budgets) key = (key << 4) | (uint64_t)(b + 1);
    return key;
}

struct FeasibilityMemo {
    std::unordered_map<uint64_t, bool> table[kMaxN + 1];
};

// Can the family guarantee that some guesser survives `depth` more bits?
// Family move: each guesser guesses its next bit; the adversary answers.
bool family_survives(std::vector<int> budgets, int depth, FeasibilityMemo& memo) {
    budgets.erase(std::remove_if(budgets.begin(), budgets.end(), [](int b) { return b < 0; }),
                  budgets.end());
    if (budgets.empty()) return false;
    if (depth == 0) return true;
    std::sort(budgets.begin(), budgets.end(), std::greater<int>());
    if (budgets.front() >= depth) return true;  // survives even all-wrong
    uint64_t key = encode_budgets(budgets);
    auto it = memo.table[depth].find(key);
    if (it != memo.table[depth].end()) return it->second;

    // distinct budget classes with counts
    std::vector<std::pair<int, int>> classes;
    for (int b : budgets) {
        if (!classes.empty() && classes.back().first == b) {
            ++classes.back().second;
        } else {
            classes.emplace_back(b, 1);
        }
    }
    // odometer over how many guessers of each class guess 1
    std::vector<int> pick(classes.size(), 0);
    bool found = false;
    while (!found) {
        std::vector<int> child_zero, child_one;  // adversary answers 0 / 1
        for (size_t c = 0; c < classes.size(); ++c) {
            auto [b, cnt] = classes[c];
            for (int i = 0; i < pick[c]; ++i) {
                child_zero.push_back(b - 1);  // guessed 1, bit was 0
                child_one.push_back(b);
            }
            for (int i = 0; i < cnt - pick[c]; ++i) {
                child_zero.push_back(b);
                child_one.push_back(b - 1);  // guessed 0, bit was 1
            }
        }
        if (family_survives(child_zero, depth - 1, memo) &&
            family_survives(child_one, depth - 1, memo)) {
            found = true;
            break;
        }
        size_t c = 0;
        while (c < classes.size() && pick[c] == classes[c].second) {
            pick[c] = 0;
            ++c;
        }
        if (c == classes.size()) break;
        ++pick[c];
    }
    memo.table[depth][key] = found;
    return found;
}

void check_caps(int n, int bits) {
    if (n < 0 || bits < 0) throw DomainError("negative game size");
    if (n > kMaxN || bits > kMaxBits) {
        throw SearchBudgetError("guessing game oracle capped at n <= " + std::to_string(kMaxN) +
                                ", bits <= " + std::to_string(kMaxBits));
    }
}

}  // namespace

int sgkh_optimal_mistakes(int n, int bits) {
    check_caps(n, bits);
    int family = 1 << bits;
    FeasibilityMemo memo;
    for (int m = 0; m <= n; ++m) {
        if (family_survives(std::vector<int>(family, m), n, memo)) return m;
    }
    return n;  // unreachable: budget n always survives
}

namespace {

// ---- independent route 1: full decision-tree enumeration + set cover ----

// Guess tree for length n encoded in 2^n - 1 bits: node for history h of
// depth i sits at index 2^i - 1 + (h as a binary number, first bit most
// significant).
int tree_mistakes(uint32_t tree, int n, uint32_t s) {
    int mistakes = 0;
    uint32_t h = 0;
    for (int i = 0; i < n; ++i) {
        int node = (1 << i) - 1 + (int)h;
        int guess = (tree >> node) & 1;
        int bit = (s >> (n - 1 - i)) & 1;
        if (guess != bit) ++mistakes;
        h = (h << 1) | (uint32_t)bit;
    }
    return mistakes;
}

int min_cover_size(const std::vector<uint32_t>& masks, int universe_bits) {
    // exact set cover over subsets of the string universe
    uint32_t full = (universe_bits == 32) ? 0xffffffffu : ((1u << universe_bits) - 1);
    std::vector<int> dp(full + 1, INT32_MAX);
    dp[0] = 0;
    for (uint32_t x = 1; x <= full; ++x) {
        for (uint32_t m : masks) {
            if ((x & m) == 0) continue;
            int sub = dp[x & ~m];
            if (sub != INT32_MAX && sub + 1 < dp[x]) dp[x] = sub + 1;
        }
    }
    return dp[full];
}

}  // namespace

int sgkh_optimal_mistakes_by_tree_enumeration(int n, int bits) {
    if (n < 0 || bits < 0) throw DomainError("negative game size");
    if (n > 4) {
        throw SearchBudgetError("tree enumeration capped at n <= 4");
    }
    if (n == 0) return 0;
    int strings = 1 << n;
    int nodes = (1 << n) - 1;
    long trees = 1l << nodes;
    int family = 1 << std::min(bits, n);  // more guessers than strings never help

    // mistake profile of every tree
    std::vector<std::vector<uint8_t>> profile(trees, std::vector<uint8_t>(strings));
    for (long t = 0; t < trees; ++t) {
        for (int s = 0; s < strings; ++s) {
            profile[t][s] = (uint8_t)tree_mistakes((uint32_t)t, n, (uint32_t)s);
        }
    }
    for (int m = 0; m <= n; ++m) {
        std::unordered_set<uint32_t> seen;
        for (long t = 0; t < trees; ++t) {
            uint32_t mask = 0;
            for (int s = 0; s < strings; ++s) {
                if (profile[t][s] <= m) mask |= 1u << s;
            }
            seen.insert(mask);
        }
        // keep only maximal masks
        std::vector<uint32_t> masks(seen.begin(), seen.end());
        std::sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
            return __builtin_popcount(a) > __builtin_popcount(b);
        });
        std::vector<uint32_t> maximal;
        for (uint32_t cand : masks) {
            bool dominated = false;
            for (uint32_t big : maximal) {
                if ((cand | big) == big) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated && cand != 0) maximal.push_back(cand);
        }
        if (!maximal.empty() && min_cover_size(maximal, n == 4 ? 16 : strings) <= family) {
            return m;
        }
    }
    return n;
}

namespace {

// ---- independent route 2: plain minimax, explicit mistake counts ----

int plain_minimax(std::vector<int>& counts, int depth) {
    int floor = *std::min_element(counts.begin(), counts.end());
    if (depth == 0) return floor;
    int k = (int)counts.size();
    int best = INT32_MAX;
    for (uint32_t move = 0; move < (1u << k); ++move) {
        // guessers in `move` guess 1, the rest guess 0
        std::vector<int> zero = counts, one = counts;
        for (int g = 0; g < k; ++g) {
            if ((move >> g) & 1) {
                ++zero[g];
            } else {
                ++one[g];
            }
        }
        int v = plain_minimax(zero, depth - 1);
        if (v < best) {
            int v1 = plain_minimax(one, depth - 1);
            v = std::max(v, v1);
        }
        if (v < best) best = v;
        if (best == floor) break;  // counts never decrease
    }
    return best;
}

}  // namespace

int sgkh_optimal_mistakes_by_plain_minimax(int n, int bits) {
    if (n < 0 || bits < 0) throw DomainError("negative game size");
    int k = 1 << bits;
    // branching is 2^(k+1) per level; keep the raw tree under ~2^31 nodes
    double log2_work = (double)n * (double)(k + 1);
    if (log2_work > 31) {
        throw SearchBudgetError("plain minimax infeasible for n = " + std::to_string(n) +
                                ", bits = " + std::to_string(bits));
    }
    std::vector<int> counts(k, 0);
    return plain_minimax(counts, n);
}

// ---- independent route 3: counting floor and family replay ----

int sgkh_counting_floor(int n, int bits) {
    if (n < 0 || bits < 0) throw DomainError("negative game size");
    if (n > 62) throw DomainError("counting floor capped at n <= 62");
    // For any fixed tree the map string -> per-position mistake indicator
    // is a bijection of {0,1}^n, so the tree stays within m mistakes on
    // exactly sum_{i<=m} C(n,i) strings. 2^bits trees must cover 2^n.
    BigInt strings = BigInt(1) << n;
    BigInt family = BigInt(1) << std::min(bits, n);
    BigInt ball = 0, binom = 1;
    for (int m = 0; m <= n; ++m) {
        ball += binom;
        if (family * ball >= strings) return m;
        binom = binom * (n - m) / (m + 1);
    }
    return n;
}

int sgkh_family_worst_case(int n, int bits) {
    auto family = sgkh_optimal_guesser(n, bits);
    int worst = 0;
    for (long s = 0; s < (1l << n); ++s) {
        Bits target(n);
        for (int i = 0; i < n; ++i) target[i] = (uint8_t)((s >> (n - 1 - i)) & 1);
        int best = n + 1;
        for (long t = 0; t < (1l << bits); ++t) {
            int mistakes = sgkh_play(*family, target, AdviceTape(encode_uint(t, bits)));
            best = std::min(best, mistakes);
        }
        worst = std::max(worst, best);
    }
    return worst;
}

namespace {

// ---- optimal family extraction ----

struct FamilyTable {
    int bits = 0;
    int length = 0;
    // guess of guesser t at history h; missing entries guess 0
    std::map<std::pair<int, std::string>, int> guesses;
};

void extract_family(const std::vector<int>& budgets, int depth, const std::string& history,
                    FeasibilityMemo& memo, FamilyTable& table) {
    if (depth == 0) return;
    int k = (int)budgets.size();
    int alive_max = -1;
    for (int b : budgets) alive_max = std::max(alive_max, b);
    if (alive_max >= depth) return;  // all-zero guesses below keep someone alive
    // group live guesser ids by budget
    std::map<int, std::vector<int>, std::greater<int>> classes;
    for (int g = 0; g < k; ++g) {
        if (budgets[g] >= 0) classes[budgets[g]].push_back(g);
    }
    std::vector<std::pair<int, std::vector<int>>> cls(classes.begin(), classes.end());
    std::vector<int> pick(cls.size(), 0);
    while (true) {
        std::vector<int> zero = budgets, one = budgets;
        std::vector<int> ones;  // ids guessing 1
        for (size_t c = 0; c < cls.size(); ++c) {
            for (int i = 0; i < (int)cls[c].second.size(); ++i) {
                int g = cls[c].second[i];
                if (i < pick[c]) {
                    ones.push_back(g);
                    --zero[g];
                } else {
                    --one[g];
                }
            }
        }
        if (family_survives(zero, depth - 1, memo) && family_survives(one, depth - 1, memo)) {
            for (int g : ones) table.guesses[{g, history}] = 1;
            extract_family(zero, depth - 1, history + "0", memo, table);
            extract_family(one, depth - 1, history + "1", memo, table);
            return;
        }
        size_t c = 0;
        while (c < cls.size() && pick[c] == (int)cls[c].second.size()) {
            pick[c] = 0;
            ++c;
        }
        if (c == cls.size()) break;
        ++pick[c];
    }
    throw Error("family extraction failed from a feasible state");
}

class TableGuesser : public Guesser {
public:
    explicit TableGuesser(FamilyTable table) : table_(std::move(table)) {}

    void begin_run(size_t) override { tape_value_.reset(); }

    int guess(const Bits& prefix, AdviceTape& tape) override {
        if (!tape_value_) tape_value_ = (int)tape.read_uint(table_.bits);
        std::string h;
        h.reserve(prefix.size());
        for (uint8_t b : prefix) h.push_back(b ? '1' : '0');
        auto it = table_.guesses.find({*tape_value_, h});
        return it == table_.guesses.end() ? 0 : it->second;
    }

private:
    FamilyTable table_;
    std::optional<int> tape_value_;
};

}  // namespace

std::unique_ptr<Guesser> sgkh_optimal_guesser(int n, int bits) {
    check_caps(n, bits);
    int value = sgkh_optimal_mistakes(n, bits);
    FeasibilityMemo memo;
    FamilyTable table;
    table.bits = bits;
    table.length = n;
    extract_family(std::vector<int>(1 << bits, value), n, "", memo, table);
    return std::make_unique<TableGuesser>(std::move(table));
}

namespace {

class ConstantGuesser : public Guesser {
public:
    explicit ConstantGuesser(int bit) : bit_(bit) {}
    int guess(const Bits&, AdviceTape&) override { return bit_; }

private:
    int bit_;
};

class RepeatPreviousGuesser : public Guesser {
public:
    explicit RepeatPreviousGuesser(int first) : first_(first) {}
    int guess(const Bits& prefix, AdviceTape&) override {
        return prefix.empty() ? first_ : (int)prefix.back();
    }

private:
    int first_;
};

class GuesserAsPriorityAlgorithm : public FixedPriorityAlgorithm {
public:
    explicit GuesserAsPriorityAlgorithm(std::unique_ptr<Guesser> guesser)
        : guesser_(std::move(guesser)) {}

    PriorityKey priority(const Item& item) const override {
        const auto& v = std::get<ValueItem>(item.payload);
        return PriorityKey{{Rational(-v.copy)}, {}};
    }

    void begin_run() override {
        history_.clear();
        guesser_->begin_run(0);
    }

    Decision decide(const Item& item, AdviceTape& tape) override {
        int g = guesser_->guess(history_, tape);
        const auto& v = std::get<ValueItem>(item.payload);
        history_.push_back(v.value == 1 ? 1 : 0);
        return g ? accept_decision() : reject_decision();
    }

private:
    std::unique_ptr<Guesser> guesser_;
    Bits history_;
};

}  // namespace

std::unique_ptr<Guesser> constant_guesser(int bit) {
    return std::make_unique<ConstantGuesser>(bit);
}

std::unique_ptr<Guesser> repeat_previous_guesser(int first_guess) {
    return std::make_unique<RepeatPreviousGuesser>(first_guess);
}

AlgorithmFactory guesser_family_as_priority_algorithm(
    const std::function<std::unique_ptr<Guesser>()>& make_guesser) {
    return [make_guesser](const std::vector<uint8_t>&) {
        return std::make_unique<GuesserAsPriorityAlgorithm>(make_guesser());
    };
}

std::vector<Item> string_as_items(const Bits& target) {
    std::vector<Item> items;
    items.reserve(target.size());
    for (size_t i = 0; i < target.size(); ++i) {
        items.push_back(make_value(Rational((int)target[i]), (int)i));
    }
    return items;
}

ObjectiveFn string_guessing_mistakes() {
    return [](const std::vector<std::pair<Item, Decision>>& decisions) {
        long mistakes = 0;
        for (const auto& [item, d] : decisions) {
            const auto& v = std::get<ValueItem>(item.payload);
            bool bit = v.value == 1;
            if (bit != d.accept) ++mistakes;
        }
        return std::optional<Rational>(Rational(mistakes));
    };
}

}  // namespace pal
