#include "tilecalc/arithmetic.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>

namespace tilecalc::arith {

using atam::AssemblyStatus;
using atam::Position;
using tiles::RowPlan;
using tiles::Task;

namespace {

std::optional<std::size_t> env_max_steps() {
    const char* v = std::getenv("TILECALC_MAX_STEPS");
    if (!v || !*v) return std::nullopt;
    char* end = nullptr;
    unsigned long long n = std::strtoull(v, &end, 10);
    if (*end != '\0' || n == 0) throw std::invalid_argument("TILECALC_MAX_STEPS must be a positive integer");
    return static_cast<std::size_t>(n);
}

std::size_t expected_steps(const RowPlan& plan) {
    auto k = static_cast<std::size_t>(plan.width);
    auto levels = static_cast<std::size_t>(plan.levels);
    switch (plan.task) {
        case Task::division: return levels * (2 * k + 4) + k + 2;
        case Task::sqrt: return levels * (3 * k + 6) + k + 2;
        default: return k + 1;
    }
}

int pair_bit(const atam::Tile& t, bool left_half) {
    const std::string& label = t.glue(atam::Direction::north).label;
    if (label.size() != 3 || label[1] != '|') throw std::logic_error("tile '" + t.id + "' exposes no bit pair");
    return label[left_half ? 0 : 2] - '0';
}

const atam::Tile& tile_at(const Assembly& a, Position p) {
    const atam::Tile* t = a.tile_at(p);
    if (!t) throw std::logic_error("expected a tile at (" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")");
    return *t;
}

Bits prepend(std::uint8_t first, Bits rest) {
    rest.insert(rest.begin(), first);
    return rest;
}

}  // namespace

atam::GrowthLimits limits_for(std::size_t expected) {
    atam::GrowthLimits limits;
    limits.max_steps = env_max_steps().value_or(2 * expected + 64);
    return limits;
}

Assembly run_plan(const RowPlan& plan, std::optional<std::size_t> max_steps) {
    auto tileset = std::make_shared<const atam::TileSet>(tiles::tileset_for(plan));
    auto limits = limits_for(expected_steps(plan));
    if (max_steps) limits.max_steps = *max_steps;
    Assembly a = atam::run_to_completion(plan.seed, tileset, limits);
    if (a.status() != AssemblyStatus::halted)
        throw StepLimitError(std::string(tiles::to_string(plan.task)) + " assembly stopped after " +
                             std::to_string(a.trace().size()) + " steps (" + std::string(atam::to_string(a.status())) +
                             ")");
    return a;
}

Bits read_left_boundary(const Assembly& assembly) {
    std::vector<std::pair<int, std::uint8_t>> found;
    for (auto& [pos, tile] : assembly.placed()) {
        if (pos.x != -1) continue;
        const std::string& id = tile->id;
        if (id.rfind("SSL", 0) == 0)
            found.emplace_back(pos.y, 1);
        else if (id.rfind("SL", 0) == 0)
            found.emplace_back(pos.y, 0);
    }
    std::sort(found.begin(), found.end());
    Bits out;
    for (auto& [y, b] : found) out.push_back(b);
    return out;
}

Bits read_row(const Assembly& assembly, int y, int from, int to, bool left_half) {
    Bits out;
    for (int x = from; x < to; ++x) out.push_back(static_cast<std::uint8_t>(pair_bit(tile_at(assembly, {x, y}), left_half)));
    return out;
}

std::pair<Relation, Assembly> compare_assembly(const Bits& a, const Bits& b) {
    RowPlan plan = tiles::plan_bits(Task::compare, a, b);
    Assembly asmb = run_plan(plan);
    const std::string& id = tile_at(asmb, {plan.width, 1}).id;
    Relation r = id == "CR<" ? Relation::less : id == "CR>" ? Relation::greater : Relation::equal;
    return {r, std::move(asmb)};
}

Relation compare_numbers(const Bits& a, const Bits& b) { return compare_assembly(a, b).first; }

// The row moves the left operand one column west, so its output window
// starts one column further west, at the boundary column.
std::pair<Bits, Assembly> shift_assembly(const Bits& a) {
    RowPlan plan = tiles::plan_bits(Task::shift, zero_bits(a.size()), a);
    Assembly asmb = run_plan(plan);
    Bits out = prepend(0, read_row(asmb, 1, 0, plan.width - 1, false));
    return {out, std::move(asmb)};
}

Bits shift_right(const Bits& a) { return shift_assembly(a).first; }

std::pair<SubShiftResult, Assembly> subshift_assembly(const Bits& a, const Bits& b) {
    if (a.size() != b.size()) throw std::invalid_argument("operand widths differ");
    if (from_bits(a) < from_bits(b)) throw UnderflowError("subtract and shift needs a >= b");
    RowPlan plan = tiles::plan_bits(Task::subshift, a, b);
    Assembly asmb = run_plan(plan);
    const std::string& left_id = tile_at(asmb, {-1, 1}).id;
    std::uint8_t top = left_id == "SSLx1" ? 1 : 0;
    SubShiftResult r{prepend(top, read_row(asmb, 1, 0, plan.width - 1, true)),
                     prepend(0, read_row(asmb, 1, 0, plan.width - 1, false))};
    return {r, std::move(asmb)};
}

SubShiftResult subtract_and_shift(const Bits& a, const Bits& b) { return subshift_assembly(a, b).first; }

std::pair<Bits, Assembly> insert_assembly(const Bits& q, std::size_t i, int c) {
    tiles::SeedParams params;
    params.insert_position = i;
    params.insert_bit = c;
    RowPlan plan = tiles::plan_bits(Task::insert, zero_bits(q.size()), q, params);
    Assembly asmb = run_plan(plan);
    Bits out = read_row(asmb, 1, 0, plan.width, false);
    return {out, std::move(asmb)};
}

Bits insert_bit(const Bits& q, std::size_t i, int c) { return insert_assembly(q, i, c).first; }

std::pair<Bits, Assembly> adder_assembly(const Bits& a, const Bits& b, bool subtract) {
    tiles::SeedParams params;
    params.subtract = subtract;
    RowPlan plan = tiles::plan_bits(Task::adder, a, b, params);
    Assembly asmb = run_plan(plan);
    if (!asmb.tile_at({-1, 1}))
        throw std::overflow_error(subtract ? "adder row borrowed past the most significant bit"
                                           : "adder row carried past the most significant bit");
    Bits out = read_row(asmb, 1, 0, plan.width, true);
    return {out, std::move(asmb)};
}

std::pair<FixedPointBinary, Assembly> divide_decimal(const FixedPointBinary& p, const FixedPointBinary& q,
                                                     unsigned frac_bits) {
    tiles::SeedParams params;
    params.frac_bits = frac_bits;
    RowPlan plan = tiles::plan_row(Task::division, {p, q}, 0, params);
    Assembly asmb = run_plan(plan);
    Bits bits = read_left_boundary(asmb);
    if (bits.size() != static_cast<std::size_t>(plan.levels))
        throw std::logic_error("division assembly produced " + std::to_string(bits.size()) + " quotient bits");
    Bits ints(bits.begin(), bits.begin() + plan.int_bits);
    Bits fracs(bits.begin() + plan.int_bits, bits.end());
    return {FixedPointBinary(std::move(ints), std::move(fracs)), std::move(asmb)};
}

std::pair<FixedPointBinary, Assembly> sqrt_assembly(const FixedPointBinary& n, unsigned frac_bits) {
    tiles::SeedParams params;
    params.frac_bits = frac_bits;
    RowPlan plan = tiles::plan_row(Task::sqrt, {n}, 0, params);
    Assembly asmb = run_plan(plan);
    Bits bits = read_left_boundary(asmb);
    if (bits.size() != static_cast<std::size_t>(plan.levels))
        throw std::logic_error("square root assembly produced " + std::to_string(bits.size()) + " root bits");
    Bits ints(bits.begin(), bits.begin() + plan.int_bits);
    Bits fracs(bits.begin() + plan.int_bits, bits.end());
    return {FixedPointBinary(std::move(ints), std::move(fracs)), std::move(asmb)};
}

std::pair<ExpansionResult, Assembly> rational_expand(const BigUint& p, const BigUint& q, std::size_t max_bits) {
    if (q == 0) throw std::domain_error("division by zero");
    if (max_bits == 0) throw std::invalid_argument("max_bits must be positive");
    RowPlan plan = tiles::plan_row(Task::rational, {FixedPointBinary::from_integer(p), FixedPointBinary::from_integer(q)}, 0);
    auto tileset = std::make_shared<const atam::TileSet>(tiles::tileset_for(plan));
    Assembly asmb(tileset, plan.seed);
    auto k = static_cast<std::size_t>(plan.width);
    std::size_t budget = limits_for(max_bits * (2 * k + 4)).max_steps;

    ExpansionResult result;
    std::size_t steps = 0;
    while (result.digits.size() < max_bits) {
        if (steps >= budget) throw StepLimitError("rational assembly exceeded its step budget");
        auto ev = asmb.step();
        if (!ev) throw std::logic_error("rational assembly halted unexpectedly");
        ++steps;
        if (ev->tile_id == "SSLr") result.digits.push_back(1);
        if (ev->tile_id == "SLr") result.digits.push_back(0);
    }
    asmb.set_status(AssemblyStatus::step_limit_exceeded);

    // Remainder before level i sits on row 2i.
    std::map<BigUint, std::size_t> seen;
    for (std::size_t i = 0; i <= max_bits; ++i) {
        BigUint r = from_bits(read_row(asmb, static_cast<int>(2 * i), 0, plan.width, true));
        if (r == 0) {
            result.terminated = true;
            break;
        }
        auto [it, inserted] = seen.emplace(r, i);
        if (!inserted) {
            result.period_start = it->second;
            result.period_length = i - it->second;
            break;
        }
    }
    return {result, std::move(asmb)};
}

std::pair<FixedPointBinary, Assembly> compute_pi(unsigned terms, unsigned frac_bits) {
    if (terms < 1) throw std::invalid_argument("need at least one term");
    if (frac_bits < 4) throw std::invalid_argument("need at least 4 fraction bits");
    const std::size_t width = frac_bits + 3;
    const FixedPointBinary one = FixedPointBinary::from_integer(1);

    struct Stage {
        Assembly assembly;
        int y_offset;
    };
    std::vector<Stage> stages;
    int y = 0;
    auto add_stage = [&](Assembly a) {
        int base = y - a.bounds().min_y;
        y = base + a.bounds().max_y + 3;
        stages.push_back({std::move(a), base});
    };

    Bits sum = zero_bits(width);
    for (unsigned n = 0; n < terms; ++n) {
        auto [term, division] = divide_decimal(one, FixedPointBinary::from_integer(2 * n + 1), frac_bits);
        Bits addend = to_bits(term.scaled(), width);
        add_stage(std::move(division));
        auto [next, adder] = adder_assembly(sum, addend, n % 2 == 1);
        sum = next;
        add_stage(std::move(adder));
    }
    for (int i = 0; i < 2; ++i) {
        RowPlan plan = tiles::plan_bits(Task::shift, sum, zero_bits(width));
        Assembly shifted = run_plan(plan);
        sum = read_row(shifted, 1, 0, plan.width, true);
        add_stage(std::move(shifted));
    }

    // Join the stages into one stacked assembly.
    std::vector<atam::TileSet> sets;
    std::map<std::string, std::size_t> by_name;
    for (auto& s : stages) {
        const atam::TileSet& ts = s.assembly.tileset();
        if (by_name.emplace(ts.name() + "/" + std::to_string(ts.size()), sets.size()).second) sets.push_back(ts);
    }
    std::vector<atam::Tile> merged;
    std::map<std::string, std::size_t> ids;
    for (auto& ts : sets)
        for (auto& t : ts.tiles())
            if (ids.emplace(t.id, merged.size()).second) merged.push_back(t);
            else if (!(merged[ids[t.id]] == t)) throw std::logic_error("stage tile sets disagree on '" + t.id + "'");
    auto joined_set = std::make_shared<const atam::TileSet>("pi", 2, std::move(merged));

    atam::SeedConfiguration seed;
    std::vector<atam::AttachmentEvent> trace;
    for (auto& s : stages) {
        for (auto& [pos, tile] : s.assembly.seed().placements) seed.place({pos.x, pos.y + s.y_offset}, tile);
        for (auto& ev : s.assembly.trace())
            trace.push_back({{ev.position.x, ev.position.y + s.y_offset}, ev.tile_id, trace.size()});
    }
    Assembly joined = atam::replay(seed, joined_set, trace);
    return {FixedPointBinary::from_scaled(from_bits(sum), frac_bits), std::move(joined)};
}

}  // namespace tilecalc::arith
