#include "tilecalc/fixed_point.hpp"

#include <boost/integer/common_factor.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tilecalc {

std::size_t bit_length(const BigUint& v) {
    if (v == 0) return 0;
    return static_cast<std::size_t>(msb(v)) + 1;
}

Bits to_bits(const BigUint& v, std::size_t width) {
    if (bit_length(v) > width) throw std::invalid_argument("value does not fit in " + std::to_string(width) + " bits");
    Bits out(width, 0);
    for (std::size_t i = 0; i < width; ++i) out[width - 1 - i] = bit_test(v, static_cast<unsigned>(i)) ? 1 : 0;
    return out;
}

BigUint from_bits(const Bits& bits) {
    BigUint v = 0;
    for (auto b : bits) {
        v <<= 1;
        if (b) v |= 1;
    }
    return v;
}

FixedPointBinary::FixedPointBinary(Bits int_bits, Bits frac_bits)
    : int_bits_(std::move(int_bits)), frac_bits_(std::move(frac_bits)) {
    if (int_bits_.empty()) int_bits_.push_back(0);
    for (auto b : int_bits_)
        if (b > 1) throw std::invalid_argument("bit value out of range");
    for (auto b : frac_bits_)
        if (b > 1) throw std::invalid_argument("bit value out of range");
}

FixedPointBinary FixedPointBinary::from_scaled(const BigUint& scaled, std::size_t frac_bits,
                                               std::size_t min_int_bits) {
    std::size_t total = std::max(bit_length(scaled), frac_bits + std::max<std::size_t>(min_int_bits, 1));
    Bits all = to_bits(scaled, total);
    Bits ints(all.begin(), all.end() - static_cast<std::ptrdiff_t>(frac_bits));
    Bits fracs(all.end() - static_cast<std::ptrdiff_t>(frac_bits), all.end());
    return FixedPointBinary(std::move(ints), std::move(fracs));
}

BigUint FixedPointBinary::scaled(std::size_t f) const {
    BigUint v = from_bits(int_bits_);
    for (std::size_t i = 0; i < f; ++i) {
        v <<= 1;
        if (i < frac_bits_.size() && frac_bits_[i]) v |= 1;
    }
    return v;
}

std::string FixedPointBinary::to_binary_string() const {
    std::string out = format_bits(int_bits_);
    if (!frac_bits_.empty()) out += "." + format_bits(frac_bits_);
    return out;
}

std::string FixedPointBinary::to_decimal_string() const {
    BigUint v = scaled();
    BigUint denom = BigUint(1) << frac_bits_.size();
    BigUint whole = v / denom;
    BigUint rem = v % denom;
    std::string out = whole.str();
    if (rem != 0) {
        out += '.';
        while (rem != 0) {
            rem *= 10;
            out += static_cast<char>('0' + static_cast<int>(rem / denom));
            rem %= denom;
        }
    }
    return out;
}

bool FixedPointBinary::same_value(const FixedPointBinary& other) const {
    std::size_t f = std::max(frac_count(), other.frac_count());
    return scaled(f) == other.scaled(f);
}

std::pair<BigUint, BigUint> parse_exact_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty number");
    bool binary = false;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'b' || s[1] == 'B')) {
        binary = true;
        s = s.substr(2);
    } else if (s.size() > 1 && (s.back() == 'b' || s.back() == 'B')) {
        binary = true;
        s.pop_back();
    }
    unsigned base = binary ? 2 : 10;
    BigUint num = 0;
    BigUint den = 1;
    bool seen_point = false;
    bool seen_digit = false;
    for (char c : s) {
        if (c == '.') {
            if (seen_point) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
            seen_point = true;
            continue;
        }
        if (c == '_') continue;
        if (!std::isdigit(static_cast<unsigned char>(c)) || static_cast<unsigned>(c - '0') >= base)
            throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        seen_digit = true;
        num = num * base + static_cast<unsigned>(c - '0');
        if (seen_point) den *= base;
    }
    if (!seen_digit) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    BigUint g = boost::integer::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

FixedPointBinary FixedPointBinary::parse(std::string_view text) {
    auto [num, den] = parse_exact_rational(text);
    if ((den & (den - 1)) != 0)
        throw std::invalid_argument("'" + std::string(text) +
                                    "' has no exact binary representation; give it in binary, e.g. 0b101.01");
    std::size_t f = bit_length(den) - 1;
    return from_scaled(num, f);
}

}  // namespace tilecalc
