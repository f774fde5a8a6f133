#include "tilecalc/builders.hpp"
#include "tilecalc/determinism.hpp"

#include "doctest.h"

#include <set>

using namespace tilecalc;
using namespace tilecalc::tiles;
using atam::Direction;

namespace {

std::set<std::pair<std::string, std::string>> input_pairs(const TileSet& ts, Direction a, Direction b) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto& t : ts.tiles()) out.emplace(t.glue(a).label, t.glue(b).label);
    return out;
}

const Tile& tile(const TileSet& ts, const std::string& id) {
    auto idx = ts.find(id);
    REQUIRE_MESSAGE(idx.has_value(), id);
    return ts.tiles()[*idx];
}

std::string seed_label(const SeedConfiguration& s, atam::Position p, Direction d) {
    auto it = s.placements.find(p);
    REQUIRE(it != s.placements.end());
    return it->second.glue(d).label;
}

Bits seed_row_bits(const RowPlan& plan, bool left) {
    Bits out;
    for (int x = 0; x < plan.width; ++x) {
        std::string l = seed_label(plan.seed, {x, 0}, Direction::north);
        out.push_back(static_cast<std::uint8_t>((left ? l[0] : l[2]) - '0'));
    }
    return out;
}

}  // namespace

TEST_CASE("core tile sets cover each input pair once") {
    auto cmp = build_core_tileset(CoreKind::compare);
    auto sh = build_core_tileset(CoreKind::shift);
    auto ss = build_core_tileset(CoreKind::subshift);
    CHECK(cmp.size() == 12);
    CHECK(sh.size() == 8);
    CHECK(ss.size() == 16);
    CHECK(input_pairs(cmp, Direction::south, Direction::west).size() == 12);
    CHECK(input_pairs(sh, Direction::south, Direction::east).size() == 8);
    CHECK(input_pairs(ss, Direction::south, Direction::east).size() == 16);
}

TEST_CASE("compare tiles implement the most significant difference rule") {
    auto cmp = build_core_tileset(CoreKind::compare);
    for (auto& t : cmp.tiles()) {
        const std::string& s = t.glue(Direction::south).label;
        int a = s[0] - '0', b = s[2] - '0';
        char in = t.glue(Direction::west).label[0];
        char out = t.glue(Direction::east).label[0];
        char expect = in != '=' ? in : (a < b ? '<' : a > b ? '>' : '=');
        CHECK(out == expect);
        CHECK(t.glue(Direction::north).label == s);
    }
}

TEST_CASE("subtract step truth table") {
    for (int a : {0, 1})
        for (int b : {0, 1})
            for (int w : {0, 1}) {
                auto r = subtract_step(a, b, w);
                CHECK(a - b - w == r.diff - 2 * r.borrow);
            }
}

TEST_CASE("insert tile set for n=8 has 4n tiles") {
    auto ins = build_insert_tileset(8);
    CHECK(ins.size() == 32);
    CHECK(validate_determinism(ins).ok());
    const Tile& counter = tile(ins, "ins3c1-01");
    CHECK(counter.glue(Direction::west).label == "#3|1");
    CHECK(counter.glue(Direction::east).label == "#2|1");
    CHECK(counter.glue(Direction::south).label == "0|1");
    CHECK(counter.glue(Direction::north).label == "0|1");
    const Tile& put = tile(ins, "ins0c1-10");
    CHECK(put.glue(Direction::west).label == "#0|1");
    CHECK(put.glue(Direction::north).label == "1|1");
    CHECK(put.glue(Direction::east).label == "#0|0");
}

TEST_CASE("boundary tiles carry at least one null glue") {
    for (auto ctx : {BoundaryContext::compare, BoundaryContext::shift, BoundaryContext::subshift,
                     BoundaryContext::insert, BoundaryContext::division, BoundaryContext::sqrt}) {
        auto b = build_boundary_tileset(ctx, {8, 3});
        CHECK(b.size() > 0);
        for (auto& t : b.tiles()) {
            bool has_null = false;
            for (auto& g : t.glues) has_null = has_null || g.label.empty();
            CHECK_MESSAGE(has_null, t.id);
        }
    }
}

TEST_CASE("division frame has per-level left tiles and a dot tile") {
    auto ts = division_tileset(6, 3);
    for (int l = 0; l < 6; ++l) {
        CHECK(ts.find("CL" + std::to_string(l)).has_value());
        CHECK(ts.find("SSL" + std::to_string(l)).has_value());
        CHECK(ts.find("SL" + std::to_string(l)).has_value());
    }
    CHECK(tile(ts, "CL3").category == Category::dot);
    CHECK(tile(ts, "CL2").category == Category::boundary);
    CHECK(count_tiles(ts).category(Category::dot) == 1);
}

TEST_CASE("rational tile set category counts") {
    auto r = count_tiles(rational_tileset());
    CHECK(r.category(Category::shift) == 10);
    CHECK(r.category(Category::subshift) == 18);
    CHECK(r.category(Category::compare) == 16);
    CHECK(r.role(Role::left_frame) == 3);
}

TEST_CASE("adder tiles add and subtract bitwise") {
    auto ts = build_adder_tileset();
    for (int a : {0, 1})
        for (int b : {0, 1})
            for (int c : {0, 1}) {
                const Tile& add = tile(ts, "add" + std::to_string(a) + std::to_string(b) + std::to_string(c));
                int sum = a + b + c;
                CHECK(add.glue(Direction::north).label == std::to_string(sum % 2) + "|0");
                CHECK(add.glue(Direction::west).label == "+" + std::to_string(sum / 2));
                const Tile& sub = tile(ts, "sub" + std::to_string(a) + std::to_string(b) + std::to_string(c));
                int d = a - b - c;
                CHECK(sub.glue(Direction::north).label == std::to_string((d + 2) % 2) + "|0");
                CHECK(sub.glue(Direction::west).label == "-" + std::to_string(d < 0 ? 1 : 0));
            }
}

TEST_CASE("square root seed carries a headroom column") {
    auto plan = plan_row(Task::sqrt, {FixedPointBinary::parse("42.25")}, 0, {.frac_bits = 1});
    CHECK(plan.width == 9);
    CHECK(format_bits(seed_row_bits(plan, true)) == "010101001");
    CHECK(format_bits(seed_row_bits(plan, false)) == "001000000");
    CHECK(plan.levels == 4);
    CHECK(plan.int_bits == 3);
    CHECK(plan.dot_level == 3);
}

TEST_CASE("insert seed carries the position counter") {
    auto plan = plan_bits(Task::insert, zero_bits(6), parse_bits("100101"), {.insert_position = 5, .insert_bit = 1});
    CHECK(seed_label(plan.seed, {-1, 1}, Direction::east) == "#4|1");
    CHECK_THROWS(plan_bits(Task::insert, zero_bits(6), parse_bits("100101"), {.insert_position = 6}));
}

TEST_CASE("rational seed places twice p over q") {
    auto plan = plan_row(Task::rational, {FixedPointBinary::from_integer(1), FixedPointBinary::from_integer(3)}, 0);
    CHECK(format_bits(seed_row_bits(plan, true)) == "010");
    CHECK(format_bits(seed_row_bits(plan, false)) == "011");
}

TEST_CASE("division seed aligns the divisor") {
    auto plan = plan_row(Task::division, {FixedPointBinary::parse("23.5"), FixedPointBinary::parse("6")}, 0,
                         {.frac_bits = 4});
    CHECK(format_bits(plan.left) == "101111");
    CHECK(format_bits(plan.right) == "011000");
    CHECK(plan.int_bits == 2);
    CHECK(plan.levels == 6);
}

TEST_CASE("every shipped tile set is deterministic") {
    std::vector<TileSet> sets = {compare_tileset(),      shift_tileset(),  subshift_tileset(),
                                 insert_tileset(8),      division_tileset(8, 4), division_tileset(3, std::nullopt),
                                 sqrt_tileset(8, 3),     rational_tileset(), adder_tileset()};
    for (auto& ts : sets) {
        auto report = validate_determinism(ts);
        CHECK_MESSAGE(report.ok(), ts.name() << ": " << report.describe());
    }
}

TEST_CASE("glue labels map to a single strength") {
    auto ts = sqrt_tileset(10, 4);
    std::map<std::string, int> seen;
    for (auto& t : ts.tiles())
        for (auto& g : t.glues) {
            if (g.label.empty()) continue;
            auto [it, fresh] = seen.emplace(g.label, g.strength);
            CHECK(it->second == g.strength);
        }
    CHECK(seen.size() == ts.glue_strengths().size());
}

TEST_CASE("task names round trip") {
    for (Task t : {Task::compare, Task::shift, Task::subshift, Task::insert, Task::division, Task::sqrt,
                   Task::rational, Task::adder})
        CHECK(parse_task(to_string(t)) == t);
    CHECK_FALSE(parse_task("nope").has_value());
}
