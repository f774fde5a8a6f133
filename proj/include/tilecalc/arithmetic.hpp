#pragma once

#include "tilecalc/assembly.hpp"
#include "tilecalc/bits.hpp"
#include "tilecalc/builders.hpp"
#include "tilecalc/fixed_point.hpp"
#include "tilecalc/relation.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace tilecalc::arith {

using atam::Assembly;

class StepLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnderflowError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct ExpansionResult {
    Bits digits;
    std::optional<std::size_t> period_start;
    std::optional<std::size_t> period_length;
    bool terminated = false;
};

// Step budget for a task expected to need about `expected` attachments.
// TILECALC_MAX_STEPS overrides it when set.
atam::GrowthLimits limits_for(std::size_t expected);

// Runs a planned seed with its tile set; throws StepLimitError unless it halts.
Assembly run_plan(const tiles::RowPlan& plan, std::optional<std::size_t> max_steps = std::nullopt);

std::pair<Relation, Assembly> compare_assembly(const Bits& a, const Bits& b);
Relation compare_numbers(const Bits& a, const Bits& b);

std::pair<Bits, Assembly> shift_assembly(const Bits& a);
Bits shift_right(const Bits& a);

struct SubShiftResult {
    Bits diff;
    Bits shifted;
};
std::pair<SubShiftResult, Assembly> subshift_assembly(const Bits& a, const Bits& b);
SubShiftResult subtract_and_shift(const Bits& a, const Bits& b);

std::pair<Bits, Assembly> insert_assembly(const Bits& q, std::size_t i, int c);
Bits insert_bit(const Bits& q, std::size_t i, int c);

std::pair<FixedPointBinary, Assembly> divide_decimal(const FixedPointBinary& p, const FixedPointBinary& q,
                                                     unsigned frac_bits);
std::pair<FixedPointBinary, Assembly> sqrt_assembly(const FixedPointBinary& n, unsigned frac_bits);
std::pair<ExpansionResult, Assembly> rational_expand(const BigUint& p, const BigUint& q, std::size_t max_bits);
std::pair<FixedPointBinary, Assembly> compute_pi(unsigned terms, unsigned frac_bits);

// Fixed-width sum or difference of two equal-width bit strings via the adder row.
std::pair<Bits, Assembly> adder_assembly(const Bits& a, const Bits& b, bool subtract);

// Answer bits on the left boundary, read bottom-up (SSL = 1, SL = 0).
Bits read_left_boundary(const Assembly& assembly);

// Left or right halves of the pair glues exposed north by row y, columns [from, to).
Bits read_row(const Assembly& assembly, int y, int from, int to, bool left_half);

}  // namespace tilecalc::arith
