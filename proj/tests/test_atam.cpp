#include "tilecalc/arithmetic.hpp"
#include "tilecalc/assembly.hpp"
#include "tilecalc/builders.hpp"
#include "tilecalc/determinism.hpp"

#include "doctest.h"

#include <memory>
#include <set>

using namespace tilecalc;
using namespace tilecalc::atam;

namespace {

Glue g1(const std::string& l) { return {l, 1}; }
constexpr std::uint8_t SW = side_bit(Direction::south) | side_bit(Direction::west);

Tile seed_tile(const std::string& id, Glue north, Glue east) {
    return make_tile(id, Category::input, Role::input, 0, std::move(north), std::move(east), {}, {});
}

std::shared_ptr<const TileSet> share(TileSet t) { return std::make_shared<const TileSet>(std::move(t)); }

// Corner at (0,0), a column tile above it and a row tile east of it.
SeedConfiguration corner_seed() {
    SeedConfiguration s;
    s.place({0, 0}, seed_tile("origin", {}, {}));
    s.place({1, 0}, seed_tile("below", g1("s"), {}));
    s.place({0, 1}, seed_tile("left", {}, g1("w")));
    return s;
}

std::set<std::pair<Position, std::string>> brute_force_frontier(const Assembly& a) {
    std::set<std::pair<Position, std::string>> out;
    auto b = a.bounds();
    for (int x = b.min_x - 1; x <= b.max_x + 1; ++x)
        for (int y = b.min_y - 1; y <= b.max_y + 1; ++y) {
            Position p{x, y};
            if (a.occupied(p)) continue;
            for (const Tile& t : a.tileset().tiles())
                if (attachable(a, p, t, a.tileset().tau())) out.emplace(p, t.id);
        }
    return out;
}

std::set<std::pair<Position, std::string>> as_set(const std::vector<Attachment>& v) {
    std::set<std::pair<Position, std::string>> out;
    for (auto& at : v) out.emplace(at.position, at.tile->id);
    return out;
}

}  // namespace

TEST_CASE("attachable sums matching glue strengths") {
    Tile both = make_tile("both", Category::compare, Role::computational, SW, {}, {}, g1("s"), g1("w"));
    Tile one = make_tile("one", Category::compare, Role::computational, SW, {}, {}, g1("s"), g1("x"));
    Tile zero = make_tile("zero", Category::compare, Role::computational, SW, {}, {}, {"s", 0}, {"w", 0});
    SeedConfiguration seed;
    seed.place({0, 0}, seed_tile("below", g1("s"), {}));
    seed.place({-1, 1}, seed_tile("left", {}, g1("w")));
    Assembly a(share(TileSet("t", 2, {both, one})), seed);
    CHECK(attachable(a, {0, 1}, both, 2));
    CHECK_FALSE(attachable(a, {0, 1}, one, 2));
    CHECK_FALSE(attachable(a, {0, 1}, zero, 2));
    CHECK_THROWS_AS(attachable(a, {0, 0}, both, 2), OccupiedPositionError);
}

TEST_CASE("frontier of the compare seed is the single first compare tile") {
    auto plan = tiles::plan_bits(tiles::Task::compare, parse_bits("10111"), parse_bits("11000"));
    Assembly a(share(tiles::tileset_for(plan)), plan.seed);
    auto f = frontier_attachments(a);
    REQUIRE(f.size() == 1);
    CHECK(f[0].position == Position{0, 1});
    CHECK(f[0].tile->glue(Direction::south).label == "1|1");
    CHECK(f[0].tile->glue(Direction::west).label == "=");
    CHECK(as_set(f) == brute_force_frontier(a));
}

TEST_CASE("frontier matches brute force throughout a division run") {
    auto plan = tiles::plan_row(tiles::Task::division, {FixedPointBinary::parse("23.5"), FixedPointBinary::parse("6")}, 0,
                                {.frac_bits = 2});
    Assembly a(share(tiles::tileset_for(plan)), plan.seed);
    std::size_t last_size = 0;
    while (a.status() == AssemblyStatus::growing) {
        auto f = a.frontier_attachments();
        REQUIRE(as_set(f) == brute_force_frontier(a));
        last_size = f.size();
        std::size_t before = a.size();
        a.step();
        CHECK(a.size() == before + 1);
    }
    CHECK(last_size == 1);
    CHECK(a.frontier_attachments().empty());
}

TEST_CASE("compare seed halts after k+1 steps") {
    auto plan = tiles::plan_bits(tiles::Task::compare, parse_bits("10111"), parse_bits("11000"));
    Assembly a = run_to_completion(plan.seed, share(tiles::tileset_for(plan)));
    CHECK(a.status() == AssemblyStatus::halted);
    CHECK(a.trace().size() == 6);
    CHECK_FALSE(step(a).has_value());
}

TEST_CASE("shift assembly occupies two rows of k+2 columns") {
    auto plan = tiles::plan_bits(tiles::Task::shift, zero_bits(5), parse_bits("10111"));
    Assembly a = run_to_completion(plan.seed, share(tiles::tileset_for(plan)));
    CHECK(a.status() == AssemblyStatus::halted);
    CHECK(a.size() == 2 * 7);
    CHECK(a.bounds().width() == 7);
    CHECK(a.bounds().height() == 2);
}

TEST_CASE("rational seed is cut off by the step limit") {
    auto plan = tiles::plan_row(tiles::Task::rational, {FixedPointBinary::from_integer(1), FixedPointBinary::from_integer(3)}, 0);
    Assembly a = run_to_completion(plan.seed, share(tiles::tileset_for(plan)), {.max_steps = 200});
    CHECK(a.status() == AssemblyStatus::step_limit_exceeded);
    CHECK(a.trace().size() == 200);
}

TEST_CASE("extent limit stops growth") {
    auto plan = tiles::plan_row(tiles::Task::rational, {FixedPointBinary::from_integer(1), FixedPointBinary::from_integer(3)}, 0);
    Assembly a = run_to_completion(plan.seed, share(tiles::tileset_for(plan)), {.max_steps = 100000, .max_extent = 12});
    CHECK(a.status() == AssemblyStatus::extent_limit_exceeded);
    CHECK(a.bounds().max_y <= 12);
}

TEST_CASE("seed with an empty tile set halts at once") {
    Assembly a = run_to_completion(corner_seed(), share(TileSet("empty", 2, {})));
    CHECK(a.status() == AssemblyStatus::halted);
    CHECK(a.trace().empty());
}

TEST_CASE("empty seed is rejected") {
    CHECK_THROWS_AS(Assembly(share(TileSet("empty", 2, {})), SeedConfiguration{}), std::invalid_argument);
}

TEST_CASE("two tiles with the same south and west glues are ambiguous") {
    Tile a = make_tile("a", Category::compare, Role::computational, SW, g1("n1"), {}, g1("s"), g1("w"));
    Tile b = make_tile("b", Category::compare, Role::computational, SW, g1("n2"), {}, g1("s"), g1("w"));
    TileSet ts("ambiguous", 2, {a, b});
    Assembly asmb(share(ts), corner_seed());
    CHECK(asmb.frontier_attachments().size() == 2);
    CHECK_THROWS_AS(asmb.step(), AmbiguityError);
    auto report = validate_determinism(ts);
    CHECK(report.violations.size() == 1);
}

TEST_CASE("tile set rejects inconsistent glue strengths and duplicate ids") {
    Tile a = make_tile("a", Category::compare, Role::computational, SW, {}, {}, g1("s"), g1("w"));
    Tile b = make_tile("b", Category::compare, Role::computational, SW, {}, {}, {"s", 2}, g1("w"));
    CHECK_THROWS_AS(TileSet("bad", 2, {a, b}), TileSetError);
    CHECK_THROWS_AS(TileSet("bad", 2, {a, a}), TileSetError);
}

TEST_CASE("occupied positions are never reused") {
    SeedConfiguration s = corner_seed();
    CHECK_THROWS_AS(s.place({0, 0}, seed_tile("again", {}, {})), OccupiedPositionError);
    auto plan = tiles::plan_bits(tiles::Task::compare, parse_bits("101"), parse_bits("011"));
    Assembly a(share(tiles::tileset_for(plan)), plan.seed);
    CHECK_THROWS_AS(a.attach({0, 0}, "cmp=00"), OccupiedPositionError);
    CHECK_THROWS_AS(a.attach({1, 1}, "cmp=00"), ReplayError);
}

TEST_CASE("trace replays to the same assembly") {
    auto plan = tiles::plan_row(tiles::Task::sqrt, {FixedPointBinary::parse("42.25")}, 0, {.frac_bits = 1});
    auto ts = share(tiles::tileset_for(plan));
    Assembly a = run_to_completion(plan.seed, ts);
    Assembly b = replay(plan.seed, ts, a.trace());
    CHECK(same_configuration(a, b));
    CHECK(b.trace() == a.trace());
    CHECK(b.status() == AssemblyStatus::halted);
    for (std::size_t i = 0; i < a.trace().size(); ++i) CHECK(a.trace()[i].step_index == i);
}

TEST_CASE("randomized order reaches the same final assembly") {
    auto plan = tiles::plan_row(tiles::Task::division, {FixedPointBinary::from_integer(45), FixedPointBinary::from_integer(7)},
                                0, {.frac_bits = 5});
    auto ts = share(tiles::tileset_for(plan));
    Assembly det = run_to_completion(plan.seed, ts);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Assembly r = run_randomized(plan.seed, ts, seed);
        CHECK(r.status() == AssemblyStatus::halted);
        CHECK(same_configuration(det, r));
    }
}

TEST_CASE("determinism validation on core tile sets") {
    CHECK(validate_determinism(tiles::build_core_tileset(tiles::CoreKind::compare)).ok());
    CHECK(validate_determinism(tiles::build_insert_tileset(8)).ok());
    auto tiles = tiles::build_core_tileset(tiles::CoreKind::shift).tiles();
    Tile copy = tiles.front();
    copy.id = "copy";
    tiles.push_back(copy);
    auto report = validate_determinism(TileSet("dup", 2, tiles));
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].second == "copy");
}
