#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tilecalc {

// Bit strings are stored most significant bit first.
using Bits = std::vector<std::uint8_t>;

Bits parse_bits(std::string_view text);
std::string format_bits(const Bits& bits);
Bits zero_bits(std::size_t width);
Bits uint_to_bits(std::uint64_t value, std::size_t width);
std::uint64_t bits_to_uint(const Bits& bits);

}  // namespace tilecalc
