#pragma once

#include <cstdint>
#include <vector>

namespace pal {

// Infinite read-once bit tape. Reads past the written prefix return 0 and
// still count toward the cursor; advice complexity of a run is the final
// cursor position.
class AdviceTape {
public:
    AdviceTape() = default;
    explicit AdviceTape(std::vector<uint8_t> bits) : bits_(std::move(bits)) {}

    int read() {
        int bit = cursor_ < bits_.size() ? (bits_[cursor_] ? 1 : 0) : 0;
        ++cursor_;
        return bit;
    }

    // Big-endian read of `width` bits.
    long read_uint(int width) {
        long v = 0;
        for (int i = 0; i < width; ++i) v = v * 2 + read();
        return v;
    }

    size_t bits_read() const { return cursor_; }
    const std::vector<uint8_t>& bits() const { return bits_; }

private:
    std::vector<uint8_t> bits_;
    size_t cursor_ = 0;
};

// Big-endian fixed-width encoding helper for advice writers.
std::vector<uint8_t> encode_uint(long value, int width);

}  // namespace pal
