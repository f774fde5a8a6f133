#include "tilecalc/builders.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace tilecalc::tiles {

using atam::Direction;
using atam::side_bit;

namespace glue {

namespace {
Glue g(std::string label, int strength = 1) { return Glue{std::move(label), strength}; }
}  // namespace

Glue pair(int a, int b) { return g(std::to_string(a) + "|" + std::to_string(b)); }
Glue relation(Relation r) { return g(std::string(1, relation_symbol(r))); }
Glue shift_carry(int c) { return g("sh" + std::to_string(c)); }
Glue sub_carry(int c, int borrow) { return g("ss" + std::to_string(c) + "|" + std::to_string(borrow)); }
Glue marker(int i, int c) { return g("#" + std::to_string(i) + "|" + std::to_string(c)); }
Glue add_carry(int c) { return g("+" + std::to_string(c)); }
Glue sub_borrow(int d) { return g("-" + std::to_string(d)); }
Glue level_state(int level) { return g("$" + std::to_string(level) + "|s"); }
Glue level_bit(int level, int c) { return g("$" + std::to_string(level) + "|" + std::to_string(c), 2); }
Glue level_link(int level) { return g("X" + std::to_string(level), 2); }
Glue top_link() { return g("top", 2); }
Glue right_up() { return g("e"); }
Glue right_turn(Relation r) { return g(r == Relation::less ? "r:sh" : "r:ss", 2); }
Glue top_row() { return g("T"); }
Glue row_start() { return g("$x"); }

}  // namespace glue

namespace {

constexpr std::uint8_t SW = side_bit(Direction::south) | side_bit(Direction::west);
constexpr std::uint8_t SE = side_bit(Direction::south) | side_bit(Direction::east);
constexpr std::uint8_t S = side_bit(Direction::south);
constexpr std::uint8_t W = side_bit(Direction::west);
constexpr std::array<Relation, 3> relations{Relation::less, Relation::equal, Relation::greater};

const Glue none{};

Glue named(std::string label, int strength = 1) { return Glue{std::move(label), strength}; }

std::string bits_id(std::initializer_list<int> bits) {
    std::string out;
    for (int b : bits) out += static_cast<char>('0' + b);
    return out;
}

Tile corner_s0() {
    return atam::make_tile("S0", Category::boundary, Role::corner, 0, glue::row_start(), none, none, none);
}
Tile corner_e0() {
    return atam::make_tile("E0", Category::boundary, Role::corner, 0, glue::right_up(), none, none, none);
}
Tile corner_tl() {
    return atam::make_tile("TL", Category::boundary, Role::corner, S, none, glue::top_row(), glue::top_link(), none);
}
Tile corner_tr() {
    return atam::make_tile("TR", Category::boundary, Role::corner, SW, none, none, glue::right_up(), glue::top_row());
}

Tile input_tile(int a, int b) {
    return atam::make_tile("D" + bits_id({a, b}), Category::input, Role::input, 0, glue::pair(a, b), none, none, none);
}

Tile compare_start(int level, bool dot) {
    return atam::make_tile("CL" + std::to_string(level), dot ? Category::dot : Category::boundary, Role::left_frame, S,
                           glue::level_state(level), glue::relation(Relation::equal), glue::level_link(level), none);
}

Tile compare_end(Relation r) {
    return atam::make_tile(std::string("CR") + relation_symbol(r), Category::boundary, Role::right_frame, SW,
                           glue::right_turn(r), none, glue::right_up(), glue::relation(r));
}

Tile subshift_start() {
    return atam::make_tile("SSR", Category::boundary, Role::right_frame, S, glue::right_up(), none,
                           glue::right_turn(Relation::greater), glue::sub_carry(0, 0));
}

Tile shift_start() {
    return atam::make_tile("SR", Category::boundary, Role::right_frame, S, glue::right_up(), none,
                           glue::right_turn(Relation::less), glue::shift_carry(0));
}

Tile insert_end(int b) {
    return atam::make_tile("IR" + std::to_string(b), Category::boundary, Role::right_frame, SW, glue::right_up(), none,
                           glue::right_up(), glue::marker(0, b));
}

Tile insert_seed_start(int counter, int c) {
    return atam::make_tile("IL", Category::boundary, Role::left_frame, 0, none, glue::marker(counter, c), none, none);
}

Tile adder_start(bool subtract) {
    return atam::make_tile(subtract ? "AR-" : "AR+", Category::boundary, Role::right_frame, 0, none, none, none,
                           subtract ? glue::sub_borrow(0) : glue::add_carry(0));
}

// Rational-mode left column and east terminator.
Glue rational_state() { return named("$|s"); }
Glue rational_link() { return named("X", 2); }
Glue t_up() { return named("t"); }
Glue t_turn(Relation r) { return named(std::string("t") + relation_symbol(r), 2); }
Glue zero_compare_h() { return named("zc-h", 2); }
Glue zero_shift_h() { return named("zs-h", 2); }

Tile rational_compare_start() {
    return atam::make_tile("CLr", Category::boundary, Role::left_frame, S, rational_state(),
                           glue::relation(Relation::equal), rational_link(), none);
}

Tile rational_east_seed() {
    return atam::make_tile("TZ", Category::boundary, Role::right_frame, 0, t_up(), none, none, none);
}

}  // namespace

Relation compare_step(Relation in, int a, int b) {
    if (in != Relation::equal || a == b) return in;
    return a > b ? Relation::greater : Relation::less;
}

SubStep subtract_step(int a, int b, int borrow) {
    int v = a - b - borrow;
    return {v & 1, v < 0 ? 1 : 0};
}

TileSet build_core_tileset(CoreKind kind) {
    std::vector<Tile> tiles;
    switch (kind) {
        case CoreKind::compare:
            for (Relation r : relations)
                for (int a : {0, 1})
                    for (int b : {0, 1})
                        tiles.push_back(atam::make_tile(std::string("cmp") + relation_symbol(r) + bits_id({a, b}),
                                                        Category::compare, Role::computational, SW, glue::pair(a, b),
                                                        glue::relation(compare_step(r, a, b)), glue::pair(a, b),
                                                        glue::relation(r)));
            return TileSet("compare", 2, std::move(tiles));
        case CoreKind::shift:
            // a moves one column west; the east neighbour's a becomes this column's left bit.
            for (int a : {0, 1})
                for (int b : {0, 1})
                    for (int c : {0, 1})
                        tiles.push_back(atam::make_tile("sh" + bits_id({a, b, c}), Category::shift,
                                                        Role::computational, SE, glue::pair(c, b),
                                                        glue::shift_carry(c), glue::pair(a, b), glue::shift_carry(a)));
            return TileSet("shift", 2, std::move(tiles));
        case CoreKind::subshift:
            for (int a : {0, 1})
                for (int b : {0, 1})
                    for (int c : {0, 1})
                        for (int d : {0, 1}) {
                            auto [x, borrow] = subtract_step(a, b, d);
                            tiles.push_back(atam::make_tile("ss" + bits_id({a, b, c, d}), Category::subshift,
                                                            Role::computational, SE, glue::pair(c, b),
                                                            glue::sub_carry(c, d), glue::pair(a, b),
                                                            glue::sub_carry(x, borrow)));
                        }
            return TileSet("subshift", 2, std::move(tiles));
    }
    throw std::invalid_argument("unknown core kind");
}

TileSet build_insert_counter_tileset(int counters) {
    if (counters < 1) throw std::invalid_argument("insert tile set needs at least one counter value");
    std::vector<Tile> tiles;
    for (int i = 0; i < counters; ++i)
        for (int c : {0, 1})
            for (int a : {0, 1})
                for (int b : {0, 1}) {
                    std::string id = "ins" + std::to_string(i) + "c" + std::to_string(c) + "-" + bits_id({a, b});
                    if (i > 0)
                        tiles.push_back(atam::make_tile(id, Category::insert, Role::computational, SW,
                                                        glue::pair(a, b), glue::marker(i - 1, c), glue::pair(a, b),
                                                        glue::marker(i, c)));
                    else
                        tiles.push_back(atam::make_tile(id, Category::insert, Role::computational, SW,
                                                        glue::pair(a, c), glue::marker(0, b), glue::pair(a, b),
                                                        glue::marker(0, c)));
                }
    return TileSet("insert", 2, std::move(tiles));
}

TileSet build_insert_tileset(int n) {
    if (n < 2) throw std::invalid_argument("insert tile set needs n >= 2");
    return build_insert_counter_tileset((n + 1) / 2);
}

TileSet build_boundary_tileset(BoundaryContext context, const BoundaryOptions& options) {
    std::vector<Tile> tiles{corner_s0(), corner_e0()};
    auto add_top = [&] {
        tiles.push_back(corner_tl());
        tiles.push_back(corner_tr());
        for (int a : {0, 1})
            for (int b : {0, 1})
                tiles.push_back(atam::make_tile("top" + bits_id({a, b}), Category::boundary, Role::top_frame, SW, none,
                                                glue::top_row(), glue::pair(a, b), glue::top_row()));
    };
    auto add_compare_end = [&] {
        for (Relation r : relations) tiles.push_back(compare_end(r));
    };
    auto is_dot = [&](int level) { return options.dot_level && *options.dot_level == level; };
    switch (context) {
        case BoundaryContext::compare:
            tiles.push_back(compare_start(0, false));
            add_compare_end();
            return TileSet("compare-boundary", 2, std::move(tiles));
        case BoundaryContext::shift:
            tiles.push_back(shift_start());
            for (int x : {0, 1})
                tiles.push_back(atam::make_tile("SLx" + std::to_string(x), Category::boundary, Role::left_frame, SE,
                                                none, glue::shift_carry(x), glue::row_start(), none));
            return TileSet("shift-boundary", 2, std::move(tiles));
        case BoundaryContext::subshift:
            tiles.push_back(subshift_start());
            for (int x : {0, 1})
                tiles.push_back(atam::make_tile("SSLx" + std::to_string(x), Category::boundary, Role::left_frame, SE,
                                                none, glue::sub_carry(x, 0), glue::row_start(), none));
            return TileSet("subshift-boundary", 2, std::move(tiles));
        case BoundaryContext::insert:
            for (int b : {0, 1}) tiles.push_back(insert_end(b));
            return TileSet("insert-boundary", 2, std::move(tiles));
        case BoundaryContext::division: {
            int levels = options.size;
            if (levels < 1) throw std::invalid_argument("division needs at least one level");
            for (int l = 0; l < levels; ++l) {
                Glue up = l + 1 < levels ? glue::level_link(l + 1) : glue::top_link();
                tiles.push_back(compare_start(l, is_dot(l)));
                tiles.push_back(atam::make_tile("SSL" + std::to_string(l), Category::boundary, Role::left_frame, SE, up,
                                                glue::sub_carry(0, 0), glue::level_state(l), none));
                tiles.push_back(atam::make_tile("SL" + std::to_string(l), Category::boundary, Role::left_frame, SE, up,
                                                glue::shift_carry(0), glue::level_state(l), none));
            }
            add_compare_end();
            tiles.push_back(subshift_start());
            tiles.push_back(shift_start());
            add_top();
            return TileSet("division-boundary", 2, std::move(tiles));
        }
        case BoundaryContext::sqrt: {
            int n = options.size;
            if (n < 2 || n % 2 != 0) throw std::invalid_argument("square root width must be even and >= 2");
            int levels = n / 2;
            for (int l = 0; l < levels; ++l) {
                Glue up = l + 1 < levels ? glue::level_link(l + 1) : glue::top_link();
                tiles.push_back(compare_start(l, is_dot(l)));
                tiles.push_back(atam::make_tile("SSL" + std::to_string(l), Category::boundary, Role::left_frame, SE,
                                                glue::level_bit(l, 1), glue::sub_carry(0, 0), glue::level_state(l),
                                                none));
                tiles.push_back(atam::make_tile("SL" + std::to_string(l), Category::boundary, Role::left_frame, SE,
                                                glue::level_bit(l, 0), glue::shift_carry(0), glue::level_state(l),
                                                none));
                // The root bit is spliced in at column l+1; column 0 is headroom.
                for (int c : {0, 1})
                    tiles.push_back(atam::make_tile("IL" + std::to_string(l) + "c" + std::to_string(c),
                                                    Category::boundary, Role::left_frame, S, up,
                                                    glue::marker(l + 1, c), glue::level_bit(l, c), none));
            }
            add_compare_end();
            tiles.push_back(subshift_start());
            tiles.push_back(shift_start());
            for (int b : {0, 1}) tiles.push_back(insert_end(b));
            add_top();
            return TileSet("sqrt-boundary", 2, std::move(tiles));
        }
    }
    throw std::invalid_argument("unknown boundary context");
}

TileSet build_rational_extension_tileset() {
    std::vector<Tile> tiles;
    tiles.push_back(rational_compare_start());
    tiles.push_back(atam::make_tile("SSLr", Category::boundary, Role::left_frame, SE, rational_link(),
                                    glue::sub_carry(0, 0), rational_state(), none));
    tiles.push_back(atam::make_tile("SLr", Category::boundary, Role::left_frame, SE, rational_link(),
                                    glue::shift_carry(0), rational_state(), none));
    tiles.push_back(rational_east_seed());
    for (Relation r : relations)
        tiles.push_back(atam::make_tile(std::string("CT") + relation_symbol(r), Category::compare, Role::computational,
                                        SW, t_turn(r), zero_compare_h(), t_up(), glue::relation(r)));
    tiles.push_back(atam::make_tile("ZC", Category::compare, Role::computational, W, none, none, none,
                                    zero_compare_h()));
    tiles.push_back(atam::make_tile("ST", Category::shift, Role::computational, S, t_up(), zero_shift_h(),
                                    t_turn(Relation::less), glue::shift_carry(0)));
    tiles.push_back(atam::make_tile("ZS", Category::shift, Role::computational, W, none, none, none,
                                    zero_shift_h()));
    for (Relation r : {Relation::equal, Relation::greater})
        tiles.push_back(atam::make_tile(std::string("SST") + relation_symbol(r), Category::subshift,
                                        Role::computational, S, t_up(), zero_shift_h(), t_turn(r),
                                        glue::sub_carry(0, 0)));
    return TileSet("rational-extension", 2, std::move(tiles));
}

TileSet build_adder_tileset() {
    std::vector<Tile> tiles;
    for (int a : {0, 1})
        for (int b : {0, 1})
            for (int c : {0, 1}) {
                int s = a + b + c;
                tiles.push_back(atam::make_tile("add" + bits_id({a, b, c}), Category::adder, Role::computational, SE,
                                                glue::pair(s & 1, 0), glue::add_carry(c), glue::pair(a, b),
                                                glue::add_carry(s >> 1)));
            }
    for (int a : {0, 1})
        for (int b : {0, 1})
            for (int d : {0, 1}) {
                auto [x, borrow] = subtract_step(a, b, d);
                tiles.push_back(atam::make_tile("sub" + bits_id({a, b, d}), Category::adder, Role::computational, SE,
                                                glue::pair(x, 0), glue::sub_borrow(d), glue::pair(a, b),
                                                glue::sub_borrow(borrow)));
            }
    tiles.push_back(adder_start(false));
    tiles.push_back(adder_start(true));
    tiles.push_back(atam::make_tile("AL+", Category::boundary, Role::left_frame, SE, none, glue::add_carry(0),
                                    glue::row_start(), none));
    tiles.push_back(atam::make_tile("AL-", Category::boundary, Role::left_frame, SE, none, glue::sub_borrow(0),
                                    glue::row_start(), none));
    return TileSet("adder", 2, std::move(tiles));
}

TileSet build_input_tileset() {
    std::vector<Tile> tiles;
    for (int a : {0, 1})
        for (int b : {0, 1}) tiles.push_back(input_tile(a, b));
    return TileSet("input", 2, std::move(tiles));
}

int TileCountReport::category(Category c) const {
    auto it = by_category.find(c);
    return it == by_category.end() ? 0 : it->second;
}

int TileCountReport::role(Role r) const {
    auto it = by_role.find(r);
    return it == by_role.end() ? 0 : it->second;
}

TileCountReport count_tiles(const TileSet& tileset) {
    TileCountReport report;
    for (const Tile& t : tileset.tiles()) {
        ++report.by_category[t.category];
        ++report.by_role[t.role];
    }
    return report;
}

namespace {

TileSet assemble(std::string name, std::vector<TileSet> parts) {
    std::vector<Tile> tiles;
    std::vector<std::string> ids;
    for (auto& p : parts)
        for (const Tile& t : p.tiles()) {
            if (std::find(ids.begin(), ids.end(), t.id) != ids.end()) continue;
            ids.push_back(t.id);
            tiles.push_back(t);
        }
    return TileSet(std::move(name), 2, std::move(tiles));
}

}  // namespace

TileSet compare_tileset() {
    return assemble("compare", {build_core_tileset(CoreKind::compare),
                                build_boundary_tileset(BoundaryContext::compare), build_input_tileset()});
}

TileSet shift_tileset() {
    return assemble("shift", {build_core_tileset(CoreKind::shift), build_boundary_tileset(BoundaryContext::shift),
                              build_input_tileset()});
}

TileSet subshift_tileset() {
    return assemble("subshift", {build_core_tileset(CoreKind::subshift),
                                 build_boundary_tileset(BoundaryContext::subshift), build_input_tileset()});
}

TileSet insert_tileset(int width) {
    if (width < 2) throw std::invalid_argument("insert width must be >= 2");
    return assemble("insert", {build_insert_counter_tileset(width - 1), build_boundary_tileset(BoundaryContext::insert),
                               build_input_tileset()});
}

TileSet division_tileset(int levels, std::optional<int> dot_level) {
    return assemble("division", {build_core_tileset(CoreKind::compare), build_core_tileset(CoreKind::shift),
                                 build_core_tileset(CoreKind::subshift),
                                 build_boundary_tileset(BoundaryContext::division, {levels, dot_level}),
                                 build_input_tileset()});
}

TileSet sqrt_tileset(int padded_width, std::optional<int> dot_level) {
    return assemble("sqrt", {build_core_tileset(CoreKind::compare), build_core_tileset(CoreKind::shift),
                             build_core_tileset(CoreKind::subshift), build_insert_counter_tileset(padded_width / 2 + 1),
                             build_boundary_tileset(BoundaryContext::sqrt, {padded_width, dot_level}),
                             build_input_tileset()});
}

TileSet rational_tileset() {
    return assemble("rational",
                    {build_core_tileset(CoreKind::compare), build_core_tileset(CoreKind::shift),
                     build_core_tileset(CoreKind::subshift), build_rational_extension_tileset(), build_input_tileset(),
                     TileSet("rational-corner", 2, {corner_s0()})});
}

TileSet adder_tileset() {
    return assemble("adder",
                    {build_adder_tileset(), build_input_tileset(), TileSet("adder-corners", 2, {corner_s0(), corner_e0()})});
}

std::string_view to_string(Task t) {
    switch (t) {
        case Task::compare: return "compare";
        case Task::shift: return "shift";
        case Task::subshift: return "subshift";
        case Task::insert: return "insert";
        case Task::division: return "division";
        case Task::sqrt: return "sqrt";
        case Task::rational: return "rational";
        case Task::adder: return "adder";
    }
    return "?";
}

std::optional<Task> parse_task(std::string_view s) {
    for (Task t : {Task::compare, Task::shift, Task::subshift, Task::insert, Task::division, Task::sqrt,
                   Task::rational, Task::adder})
        if (to_string(t) == s) return t;
    return std::nullopt;
}

SeedConfiguration input_row(const Bits& left, const Bits& right) {
    if (left.size() != right.size()) throw std::invalid_argument("operand widths differ");
    if (left.empty()) throw std::invalid_argument("empty operands");
    SeedConfiguration seed;
    int k = static_cast<int>(left.size());
    seed.place({-1, 0}, corner_s0());
    for (int j = 0; j < k; ++j) seed.place({j, 0}, input_tile(left[j], right[j]));
    seed.place({k, 0}, corner_e0());
    return seed;
}

RowPlan plan_bits(Task task, const Bits& left, const Bits& right, const SeedParams& params) {
    RowPlan plan;
    plan.task = task;
    plan.left = left;
    plan.right = right;
    plan.width = static_cast<int>(left.size());
    plan.seed = input_row(left, right);
    int k = plan.width;
    switch (task) {
        case Task::compare: plan.seed.place({-1, 1}, compare_start(0, false)); break;
        case Task::shift: plan.seed.place({k, 1}, shift_start()); break;
        case Task::subshift: plan.seed.place({k, 1}, subshift_start()); break;
        case Task::insert:
            if (params.insert_position < 1 || params.insert_position + 1 > left.size())
                throw std::out_of_range("insert position must lie in 1.." + std::to_string(left.size() - 1));
            plan.seed.place({-1, 1},
                            insert_seed_start(static_cast<int>(params.insert_position) - 1, params.insert_bit ? 1 : 0));
            break;
        case Task::adder: plan.seed.place({k, 1}, adder_start(params.subtract)); break;
        default: throw std::invalid_argument("task needs operand alignment; use plan_row");
    }
    return plan;
}

namespace {

std::size_t required_width(const std::vector<FixedPointBinary>& ops) {
    std::size_t w = 1;
    for (auto& op : ops) w = std::max(w, bit_length(op.scaled()));
    return w;
}

BigUint integer_operand(const FixedPointBinary& op) {
    if (op.scaled() != op.scaled(0) << op.frac_count())
        throw std::invalid_argument("operand must be an integer bit string");
    return op.scaled(0);
}

}  // namespace

RowPlan plan_row(Task task, const std::vector<FixedPointBinary>& operands, int width, const SeedParams& params) {
    auto need = [&](std::size_t n) {
        if (operands.size() != n)
            throw std::invalid_argument(std::string(to_string(task)) + " expects " + std::to_string(n) + " operand(s)");
    };
    auto fit = [&](std::size_t w) {
        if (width > 0 && static_cast<std::size_t>(width) < w)
            throw std::invalid_argument("width " + std::to_string(width) + " too small; need " + std::to_string(w));
        return width > 0 ? static_cast<std::size_t>(width) : w;
    };
    switch (task) {
        case Task::compare:
        case Task::subshift:
        case Task::adder: {
            need(2);
            std::size_t w = fit(required_width(operands));
            return plan_bits(task, to_bits(integer_operand(operands[0]), w), to_bits(integer_operand(operands[1]), w),
                             params);
        }
        case Task::shift:
        case Task::insert: {
            need(1);
            std::size_t w = fit(std::max<std::size_t>(required_width(operands), task == Task::insert ? 2 : 1));
            return plan_bits(task, zero_bits(w), to_bits(integer_operand(operands[0]), w), params);
        }
        case Task::division: {
            need(2);
            std::size_t t = std::max(operands[0].frac_count(), operands[1].frac_count());
            BigUint p = operands[0].scaled(t);
            BigUint q = operands[1].scaled(t);
            if (q == 0) throw std::domain_error("division by zero");
            int s = 0;
            while (p >= (q << (s + 1))) ++s;
            BigUint d = q << s;
            std::size_t w = fit(std::max(bit_length(p), bit_length(d) + 1));
            RowPlan plan;
            plan.task = task;
            plan.width = static_cast<int>(w);
            plan.left = to_bits(p, w);
            plan.right = to_bits(d, w);
            plan.levels = s + 1 + static_cast<int>(params.frac_bits);
            plan.int_bits = s + 1;
            if (params.frac_bits > 0) plan.dot_level = s + 1;
            plan.seed = input_row(plan.left, plan.right);
            plan.seed.place({-1, 1}, compare_start(0, false));
            return plan;
        }
        case Task::sqrt: {
            need(1);
            unsigned f = params.frac_bits;
            BigUint n = operands[0].scaled(2 * f);
            std::size_t nb = std::max<std::size_t>(bit_length(n), 2 * f + 2);
            if (width > 0) nb = std::max<std::size_t>(nb, static_cast<std::size_t>(width) - 1);
            nb += nb % 2;
            RowPlan plan;
            plan.task = task;
            plan.width = static_cast<int>(nb + 1);
            plan.left = to_bits(n, nb + 1);
            plan.right = to_bits(BigUint(1) << (nb - 2), nb + 1);
            plan.levels = static_cast<int>(nb / 2);
            plan.int_bits = plan.levels - static_cast<int>(f);
            if (f > 0) plan.dot_level = plan.int_bits;
            plan.seed = input_row(plan.left, plan.right);
            plan.seed.place({-1, 1}, compare_start(0, false));
            return plan;
        }
        case Task::rational: {
            need(2);
            BigUint p = integer_operand(operands[0]);
            BigUint q = integer_operand(operands[1]);
            if (q == 0) throw std::domain_error("division by zero");
            if (p >= q) throw std::invalid_argument("rational expansion expects p < q");
            std::size_t w = fit(bit_length(q) + 1);
            RowPlan plan;
            plan.task = task;
            plan.width = static_cast<int>(w);
            plan.left = to_bits(p << 1, w);
            plan.right = to_bits(q, w);
            plan.seed = input_row(plan.left, plan.right);
            plan.seed.placements.erase({static_cast<int>(w), 0});
            plan.seed.place({static_cast<int>(w), 0}, rational_east_seed());
            plan.seed.place({-1, 1}, rational_compare_start());
            return plan;
        }
    }
    throw std::invalid_argument("unknown task");
}

SeedConfiguration seed_row(Task task, const std::vector<FixedPointBinary>& operands, int width,
                           const SeedParams& params) {
    return plan_row(task, operands, width, params).seed;
}

TileSet tileset_for(const RowPlan& plan) {
    switch (plan.task) {
        case Task::compare: return compare_tileset();
        case Task::shift: return shift_tileset();
        case Task::subshift: return subshift_tileset();
        case Task::insert: return insert_tileset(plan.width);
        case Task::division: return division_tileset(plan.levels, plan.dot_level);
        case Task::sqrt: return sqrt_tileset(plan.width - 1, plan.dot_level);
        case Task::rational: return rational_tileset();
        case Task::adder: return adder_tileset();
    }
    throw std::invalid_argument("unknown task");
}

}  // namespace tilecalc::tiles
