#include "tilecalc/arithmetic.hpp"
#include "tilecalc/builders.hpp"
#include "tilecalc/render.hpp"
#include "tilecalc/tilefile.hpp"

#include "doctest.h"

#include <cstdlib>
#include <filesystem>

using namespace tilecalc;
using namespace tilecalc::io;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

void check_golden(const std::string& name, const std::string& text) {
    std::string path = std::string(TILECALC_GOLDEN_DIR) + "/" + name;
    if (std::getenv("TILECALC_UPDATE_GOLDEN")) write_file(path, text);
    REQUIRE(std::filesystem::exists(path));
    CHECK(read_file(path) == text);
}

}  // namespace

TEST_CASE("tile files round trip for every shipped tile set") {
    std::vector<tiles::RowPlan> plans = {
        tiles::plan_bits(tiles::Task::compare, parse_bits("101"), parse_bits("011")),
        tiles::plan_bits(tiles::Task::shift, zero_bits(4), parse_bits("1011")),
        tiles::plan_bits(tiles::Task::subshift, parse_bits("1011"), parse_bits("0110")),
        tiles::plan_bits(tiles::Task::insert, zero_bits(6), parse_bits("100101"), {.insert_position = 5, .insert_bit = 1}),
        tiles::plan_row(tiles::Task::division, {FixedPointBinary::parse("23.5"), FixedPointBinary::parse("6")}, 0,
                        {.frac_bits = 4}),
        tiles::plan_row(tiles::Task::sqrt, {FixedPointBinary::parse("42.25")}, 0, {.frac_bits = 1}),
        tiles::plan_row(tiles::Task::rational, {FixedPointBinary::from_integer(1), FixedPointBinary::from_integer(3)}, 0),
        tiles::plan_bits(tiles::Task::adder, parse_bits("0101"), parse_bits("0011"), {.subtract = true}),
    };
    for (auto& plan : plans) {
        auto ts = tiles::tileset_for(plan);
        std::string text = serialize_tilefile(ts, plan.seed);
        auto doc = parse_tilefile(text);
        CHECK(doc.tileset == ts);
        CHECK(doc.seed == plan.seed);
        CHECK(serialize_tilefile(doc.tileset, doc.seed) == text);
    }
}

TEST_CASE("tile file without a seed parses") {
    auto ts = tiles::compare_tileset();
    auto doc = parse_tilefile(serialize_tilefile(ts, {}));
    CHECK(doc.tileset == ts);
    CHECK(doc.seed.placements.empty());
}

TEST_CASE("malformed tile files report a line") {
    CHECK_THROWS_AS(parse_tilefile("not a tile file\n"), FormatError);
    try {
        parse_tilefile("tilecalc-tiles 1\nname x\ntau 2\ntile a compare nonsense SW - - - -\nend\n");
        FAIL("expected a format error");
    } catch (const FormatError& e) {
        CHECK(e.line == 4);
    }
}

TEST_CASE("export refuses a nondeterministic tile set") {
    using atam::Glue;
    std::uint8_t sw = atam::side_bit(atam::Direction::south) | atam::side_bit(atam::Direction::west);
    auto a = atam::make_tile("a", atam::Category::compare, atam::Role::computational, sw, Glue{"n", 1}, {},
                             Glue{"s", 1}, Glue{"w", 1});
    auto b = a;
    b.id = "b";
    b.glues[0] = Glue{"m", 1};
    atam::TileSet ts("bad", 2, {a, b});
    CHECK_THROWS_AS(export_tilefile(ts, {}), ExportRefused);
    CHECK_THROWS_AS(export_tilefile(ts, {}, ExportFormat::xgrow), ExportRefused);
}

TEST_CASE("xgrow exports are byte stable") {
    auto cmp = tiles::plan_bits(tiles::Task::compare, parse_bits("10111"), parse_bits("11000"));
    std::string first = export_xgrow(tiles::tileset_for(cmp), cmp.seed);
    CHECK(first == export_xgrow(tiles::tileset_for(cmp), cmp.seed));
    check_golden("compare.tiles", first);
    CHECK(count(first, "num tile types=") == 1);
    CHECK(count(first, "T=2") == 1);

    auto sq = tiles::plan_row(tiles::Task::sqrt, {FixedPointBinary::from_integer(9)}, 0);
    check_golden("sqrt_n4.tiles", export_xgrow(tiles::tileset_for(sq), sq.seed));
    check_golden("sqrt_n4.canonical", export_tilefile(tiles::tileset_for(sq), sq.seed));
}

TEST_CASE("trace files round trip and replay") {
    auto [q, a] = arith::divide_decimal(FixedPointBinary::parse("23.5"), FixedPointBinary::parse("6"), 4);
    auto trace = make_trace_file(a);
    std::string text = serialize_trace(trace);
    auto back = parse_trace(text);
    CHECK(back == trace);
    CHECK(back.status == "halted");
    auto replayed = replay_trace(back);
    CHECK(atam::same_configuration(replayed, a));
    CHECK(serialize_trace(make_trace_file(replayed)) == text);
}

TEST_CASE("ascii render shows the square root digits in the left column") {
    auto [r, a] = arith::sqrt_assembly(FixedPointBinary::parse("42.25"), 1);
    std::string art = render_assembly(a, RenderFormat::ascii);
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < art.size()) {
        auto end = art.find('\n', start);
        if (end == std::string::npos) end = art.size();
        lines.push_back(art.substr(start, end - start));
        start = end + 1;
    }
    REQUIRE(static_cast<int>(lines.size()) == a.bounds().height());
    std::string column;
    for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
        std::string cell = it->substr(0, 4);
        if (cell == "[1] " || cell == "[0] " || cell == "[.] ") column += cell[1];
    }
    CHECK(column == "110.1");
}

TEST_CASE("rendering the seed alone gives one row") {
    auto plan = tiles::plan_bits(tiles::Task::shift, zero_bits(4), parse_bits("1011"));
    atam::Assembly a(std::make_shared<const atam::TileSet>(tiles::tileset_for(plan)), plan.seed);
    std::string art = render_assembly(a, RenderFormat::ascii);
    CHECK(count(art, "\n") <= 2);
    CHECK(count(render_assembly(a, RenderFormat::svg), "<g class=\"tile\"") == plan.seed.placements.size());
}

TEST_CASE("svg render draws one cell per placed tile") {
    auto [r, a] = arith::divide_decimal(FixedPointBinary::from_integer(7), FixedPointBinary::from_integer(3), 3);
    std::string svg = render_assembly(a, RenderFormat::svg);
    CHECK(count(svg, "<g class=\"tile\"") == a.trace().size() + a.seed().placements.size());
    CHECK(svg.rfind("<svg", 0) == 0);
}
