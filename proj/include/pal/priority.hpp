#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pal/item.hpp"

namespace pal {

// Totally ordered priority value: a tuple of exact rationals compared
// lexicographically, then a text tiebreak. Larger key arrives earlier.
struct PriorityKey {
    std::vector<Rational> nums;
    std::string tie;

    bool operator==(const PriorityKey&) const = default;
};

bool operator<(const PriorityKey& a, const PriorityKey& b);
inline bool operator>(const PriorityKey& a, const PriorityKey& b) { return b < a; }
inline bool operator<=(const PriorityKey& a, const PriorityKey& b) { return !(b < a); }
inline bool operator>=(const PriorityKey& a, const PriorityKey& b) { return !(a < b); }

std::string format_key(const PriorityKey& key);

// Priority function over the item universe. Must be injective on any
// instance it is applied to; ties surface as PriorityTieError.
struct PriorityFunction {
    std::function<PriorityKey(const Item&)> key;
};

// Seeded pseudo-random injective priority: a keyed hash of the canonical
// item encoding, with the encoding itself as tiebreak so distinct items
// never collide.
PriorityFunction random_priority(uint64_t seed);

// Keyed 64-bit hash of a string (stable across runs and platforms).
uint64_t stable_hash(uint64_t seed, const std::string& text);

// Sorts a copy of `items` into arrival order: strictly decreasing key.
// Throws PriorityTieError if two distinct items share a key.
std::vector<Item> sort_by_priority(const std::vector<Item>& items, const PriorityFunction& p);

}  // namespace pal
