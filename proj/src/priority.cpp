#include "pal/priority.hpp"

#include <algorithm>
#include <sstream>

#include "pal/errors.hpp"

namespace pal {

bool operator<(const PriorityKey& a, const PriorityKey& b) {
    size_t n = std::min(a.nums.size(), b.nums.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.nums[i] != b.nums[i]) return a.nums[i] < b.nums[i];
    }
    if (a.nums.size() != b.nums.size()) return a.nums.size() < b.nums.size();
    return a.tie < b.tie;
}

std::string format_key(const PriorityKey& key) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < key.nums.size(); ++i) {
        if (i) out << ",";
        out << format_rational(key.nums[i]);
    }
    out << ")";
    if (!key.tie.empty()) out << "'" << key.tie << "'";
    return out.str();
}

uint64_t stable_hash(uint64_t seed, const std::string& text) {
    // FNV-1a over the seed bytes then the text, finished with a mix.
    uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < 8; ++i) {
        h ^= (seed >> (8 * i)) & 0xff;
        h *= 1099511628211ull;
    }
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
    h *= 0xc4ceb9fe1a85ec53ull;
    h ^= h >> 33;
    return h;
}

PriorityFunction random_priority(uint64_t seed) {
    return PriorityFunction{[seed](const Item& item) {
        std::string c = canonical(item);
        char buf[17];
        snprintf(buf, sizeof buf, "%016llx", (unsigned long long)stable_hash(seed, c));
        return PriorityKey{{}, std::string(buf) + "|" + c};
    }};
}

std::vector<Item> sort_by_priority(const std::vector<Item>& items, const PriorityFunction& p) {
    std::vector<std::pair<PriorityKey, size_t>> keyed;
    keyed.reserve(items.size());
    for (size_t i = 0; i < items.size(); ++i) {
        keyed.emplace_back(p.key(items[i]), i);
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return b.first < a.first; });
    for (size_t i = 0; i + 1 < keyed.size(); ++i) {
        if (keyed[i].first == keyed[i + 1].first &&
            !(items[keyed[i].second] == items[keyed[i + 1].second])) {
            throw PriorityTieError("distinct items share priority key " +
                                   format_key(keyed[i].first));
        }
    }
    std::vector<Item> out;
    out.reserve(items.size());
    for (const auto& [key, idx] : keyed) out.push_back(items[idx]);
    return out;
}

}  // namespace pal
