#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "pal/advice.hpp"
#include "pal/model.hpp"

namespace pal {

using Bits = std::vector<uint8_t>;

// Bit guesser with known history: before position i it sees the true bits
// of positions < i. Deterministic given the prefix and the tape.
class Guesser {
public:
    virtual ~Guesser() = default;
    virtual void begin_run(size_t length) { (void)length; }
    virtual int guess(const Bits& prefix, AdviceTape& tape) = 0;
};

// Plays the guessing game over `target`, returns the number of mistakes.
int sgkh_play(Guesser& guesser, const Bits& target, AdviceTape tape);

// Bits of advice below which some length-n string forces at least eps*n
// mistakes: (1 - H(eps)) * n. Domain eps in (0, 1/2].
double sgkh_advice_threshold(long n, const Rational& eps);

// Exact game value: the least worst-case mistake count achievable by a
// family of 2^bits guessers where the oracle picks the best tape per
// string. Computed by game-tree search over family states; caps n <= 12,
// bits <= 4.
int sgkh_optimal_mistakes(int n, int bits);

// Same value via brute-force enumeration of every guesser decision tree,
// combined with exact set cover over string-coverage masks. Feasible for
// n <= 4 only; any bits.
int sgkh_optimal_mistakes_by_tree_enumeration(int n, int bits);

// Same value via plain minimax over explicit per-guesser mistake counts,
// with no state canonicalization or memoization. Feasible for small
// 2^bits * n only (bits <= 1 up to n = 6, bits = 2 up to n = 5).
int sgkh_optimal_mistakes_by_plain_minimax(int n, int bits);

// Exact sphere-covering lower bound on the game value: for any fixed
// guesser the string -> mistake-indicator map is a bijection of {0,1}^n,
// so 2^bits guessers reach at most 2^bits * sum_{i<=m} C(n,i) strings
// within m mistakes. Smallest m where that covers 2^n. Pure arithmetic;
// tight for every n <= 8 and most larger cells, never above the value.
int sgkh_counting_floor(int n, int bits);

// Worst-case mistakes of the concrete extracted optimal family, measured
// by replaying every string against every tape. Upper-bounds the game
// value by construction; equality with sgkh_counting_floor pins the value
// without the game-tree search. Same caps as sgkh_optimal_mistakes.
int sgkh_family_worst_case(int n, int bits);

// An optimal guesser family realizing sgkh_optimal_mistakes(n, bits): the
// guesser reads `bits` tape bits up front to select its strategy.
std::unique_ptr<Guesser> sgkh_optimal_guesser(int n, int bits);

// Scripted guessers for tests and adversary corpora.
std::unique_ptr<Guesser> constant_guesser(int bit);
std::unique_ptr<Guesser> repeat_previous_guesser(int first_guess);

// Embeds a guesser family as a fixed priority algorithm over the value
// items of `target` (bit b_i carried as value, position as copy; arrival
// in position order). Decision accept = guess 1.
AlgorithmFactory guesser_family_as_priority_algorithm(
    const std::function<std::unique_ptr<Guesser>()>& make_guesser);

// Instance and mistake objective for the embedded game.
std::vector<Item> string_as_items(const Bits& target);
ObjectiveFn string_guessing_mistakes();

}  // namespace pal
