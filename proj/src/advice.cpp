#include "pal/advice.hpp"

namespace pal {

std::vector<uint8_t> encode_uint(long value, int width) {
    std::vector<uint8_t> bits(width);
    for (int i = 0; i < width; ++i) {
        bits[i] = (value >> (width - 1 - i)) & 1;
    }
    return bits;
}

}  // namespace pal
