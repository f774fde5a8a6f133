#pragma once

#include "tilecalc/big_uint.hpp"
#include "tilecalc/bits.hpp"
#include "tilecalc/relation.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace tilecalc::oracle {

class OracleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

BigUint oracle_divide_fixed(const BigUint& p, const BigUint& q, unsigned f);

// floor(sqrt(n)) for n already scaled by 4^f.
BigUint oracle_isqrt_fixed(const BigUint& n, unsigned f);

struct PeriodInfo {
    std::optional<std::size_t> period_start;
    std::optional<std::size_t> period_length;
    bool terminated = false;
    bool operator==(const PeriodInfo&) const = default;
};

PeriodInfo oracle_binary_period(const BigUint& p, const BigUint& q);

// Scaled by 2^f.
BigUint oracle_pi_partial(unsigned terms, unsigned f);

Relation oracle_compare(const Bits& a, const Bits& b);
Bits oracle_shift(const Bits& a);
struct SubShift {
    Bits diff;
    Bits shifted;
};
SubShift oracle_subshift(const Bits& a, const Bits& b);
// i counts from 1 at the most significant bit.
Bits oracle_insert(const Bits& q, std::size_t i, std::uint8_t c);

}  // namespace tilecalc::oracle
