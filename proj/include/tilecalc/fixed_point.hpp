#pragma once

#include "tilecalc/big_uint.hpp"
#include "tilecalc/bits.hpp"

#include <string>
#include <string_view>
#include <utility>

namespace tilecalc {

class FixedPointBinary {
public:
    FixedPointBinary() : int_bits_{0} {}
    FixedPointBinary(Bits int_bits, Bits frac_bits);

    // value = scaled / 2^frac_bits, with at least min_int_bits integer bits.
    static FixedPointBinary from_scaled(const BigUint& scaled, std::size_t frac_bits,
                                        std::size_t min_int_bits = 1);
    static FixedPointBinary from_integer(const BigUint& value) { return from_scaled(value, 0); }

    // Accepts "23.5", "0b10111.1" and "10111.1b"; decimals must be dyadic.
    static FixedPointBinary parse(std::string_view text);

    const Bits& int_bits() const { return int_bits_; }
    const Bits& frac_bits() const { return frac_bits_; }
    std::size_t frac_count() const { return frac_bits_.size(); }

    // value * 2^f, truncated.
    BigUint scaled(std::size_t f) const;
    BigUint scaled() const { return scaled(frac_bits_.size()); }

    std::string to_binary_string() const;
    std::string to_decimal_string() const;

    bool same_value(const FixedPointBinary& other) const;
    bool operator==(const FixedPointBinary&) const = default;

private:
    Bits int_bits_;
    Bits frac_bits_;
};

// Exact rational reading of a decimal or binary literal, reduced.
std::pair<BigUint, BigUint> parse_exact_rational(std::string_view text);

std::size_t bit_length(const BigUint& v);
Bits to_bits(const BigUint& v, std::size_t width);
BigUint from_bits(const Bits& bits);

}  // namespace tilecalc
