#include "tilecalc/bits.hpp"

#include <stdexcept>

namespace tilecalc {

Bits parse_bits(std::string_view text) {
    Bits out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '0' || c == '1')
            out.push_back(static_cast<std::uint8_t>(c - '0'));
        else if (c != '_')
            throw std::invalid_argument("not a bit string: '" + std::string(text) + "'");
    }
    return out;
}

std::string format_bits(const Bits& bits) {
    std::string out;
    out.reserve(bits.size());
    for (auto b : bits) out.push_back(b ? '1' : '0');
    return out;
}

Bits zero_bits(std::size_t width) { return Bits(width, 0); }

Bits uint_to_bits(std::uint64_t value, std::size_t width) {
    Bits out(width, 0);
    for (std::size_t i = 0; i < width && i < 64; ++i) out[width - 1 - i] = (value >> i) & 1u;
    return out;
}

std::uint64_t bits_to_uint(const Bits& bits) {
    std::uint64_t v = 0;
    for (auto b : bits) v = (v << 1) | b;
    return v;
}

}  // namespace tilecalc
